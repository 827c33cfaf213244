#pragma once

#include "ghecke/hecke_algebra.hpp"

#include "json.hpp"

#include <fstream>

namespace ghecke {

/// Declarative description of an algebra; the JSON algebra-file format mirrors these fields.
struct AlgebraSpec {
    std::string name;
    std::vector<std::string> types;
    std::size_t central_dim = 0;
    std::vector<std::vector<std::size_t>> gamma;  // 0-based permutations of the simple roots
    std::vector<std::vector<std::string>> cocycle;  // empty = trivial
    std::vector<std::string> k{"1"};
    Mode mode = Mode::generic;
};

inline std::vector<std::string> preset_names() {
    return {"T0", "A1", "A1Z1", "A2", "B2", "C3", "G2", "F4", "A1xA1", "A1xA1swap", "A2flip", "A2flip-sign",
            "A2flip-i"};
}

inline AlgebraSpec preset(const std::string &name) {
    AlgebraSpec s;
    s.name = name;
    if (name == "T0") {
        s.k = {};
    } else if (name == "A1" || name == "A2" || name == "B2" || name == "C3" || name == "G2" || name == "F4") {
        s.types = {name};
    } else if (name == "A1Z1") {
        s.types = {"A1"};
        s.central_dim = 1;
    } else if (name == "A1xA1") {
        s.types = {"A1", "A1"};
    } else if (name == "A1xA1swap") {
        s.types = {"A1", "A1"};
        s.gamma = {{1, 0}};
    } else if (name == "A2flip" || name == "A2flip-sign" || name == "A2flip-i") {
        s.types = {"A2"};
        s.gamma = {{1, 0}};
        // natural(g, g) is the only free value of a normalized cocycle on Z/2
        if (name == "A2flip-sign") s.cocycle = {{"1", "1"}, {"1", "-1"}};
        if (name == "A2flip-i") s.cocycle = {{"1", "1"}, {"1", "zeta4"}};
    } else {
        std::string known;
        for (const auto &n : preset_names()) known += (known.empty() ? "" : ", ") + n;
        throw InputError("unknown preset '" + name + "' (known: " + known + ")");
    }
    return s;
}

/// Parses a scalar in the element grammar's literal syntax: integers, p/q, decimals, zetaN, zetaN^j.
inline Scalar parse_scalar_literal(const std::string &text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    bool neg = false;
    if (!t.empty() && t[0] == '-') {
        neg = true;
        t = t.substr(1);
    }
    Scalar v;
    if (t.rfind("zeta", 0) == 0) {
        auto caret = t.find('^');
        try {
            std::size_t n = std::stoul(t.substr(4, caret == std::string::npos ? std::string::npos : caret - 4));
            long p = caret == std::string::npos ? 1 : std::stol(t.substr(caret + 1));
            if (n == 0) throw InputError("zeta0 is not a root of unity");
            v = Scalar::root_of_unity(p, n);
        } catch (const std::logic_error &) {
            throw InputError("bad root of unity '" + text + "'");
        }
    } else {
        v = Scalar::parse(t);
    }
    return neg ? -v : v;
}

inline Cocycle cocycle_from_strings(const std::vector<std::vector<std::string>> &rows, std::size_t order) {
    if (rows.empty()) return Cocycle::trivial(order);
    if (rows.size() != order) throw InputError("cocycle table must be |Gamma| x |Gamma| = " + std::to_string(order));
    std::vector<Scalar> t;
    for (const auto &row : rows) {
        if (row.size() != order) throw InputError("cocycle table row has wrong length");
        for (const auto &v : row) t.push_back(parse_scalar_literal(v));
    }
    return Cocycle(order, std::move(t));
}

/// Builds the group, validates the cocycle without normalizing it first (so bad input is reported), then the algebra.
inline HeckeAlgebra build_algebra(const AlgebraSpec &s) {
    std::vector<CartanType> types;
    for (const auto &t : s.types) types.push_back(CartanType::parse(t));
    auto rs = RootSystem::from_types(types, s.central_dim);
    auto grp = std::make_shared<const ExtendedWeylGroup>(rs, s.gamma);
    Cocycle c = cocycle_from_strings(s.cocycle, grp->gamma_size());
    if (c(0, 0).is_zero()) throw InputError("invalid cocycle: zero value at (0, 0)");
    if (auto v = c.normalized().validate(grp->gamma_table())) throw InputError("invalid cocycle: " + v->describe());
    std::vector<Scalar> kv;
    for (const auto &k : s.k) kv.push_back(parse_scalar_literal(k));
    ParameterFunction k;
    if (grp->rank() > 0) {
        if (s.mode == Mode::k0) {
            bool all_zero = std::all_of(kv.begin(), kv.end(), [](const Scalar &x) { return x.is_zero(); });
            if (!all_zero && !s.k.empty()) throw InputError("crossed-product mode requires k = 0");
            kv.assign(1, Scalar(0));
        }
        if (kv.empty()) throw InputError("parameter values required");
        k = ParameterFunction::parse(*grp, kv);
    }
    return HeckeAlgebra(grp, k, c, s.mode);
}

inline std::vector<std::string> split_list(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

/// "none" or ';'-separated 1-based permutations such as "2,1".
inline std::vector<std::vector<std::size_t>> parse_gamma(const std::string &text) {
    std::vector<std::vector<std::size_t>> out;
    if (text == "none" || text.empty()) return out;
    for (const auto &perm : split_list(text, ';')) {
        std::vector<std::size_t> p;
        for (const auto &v : split_list(perm, ',')) {
            try {
                long x = std::stol(v);
                if (x < 1) throw InputError("Gamma permutation entries are 1-based");
                p.push_back(static_cast<std::size_t>(x - 1));
            } catch (const std::logic_error &) {
                throw InputError("bad Gamma permutation '" + perm + "'");
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

inline std::string json_scalar_text(const nlohmann::json &v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    throw InputError("expected a string or integer scalar in JSON");
}

inline std::vector<std::vector<std::string>> parse_cocycle_json(const nlohmann::json &j) {
    const nlohmann::json &table = j.is_object() ? j.at("table") : j;
    if (!table.is_array()) throw InputError("cocycle must be a JSON array of rows");
    std::vector<std::vector<std::string>> rows;
    for (const auto &row : table) {
        if (!row.is_array()) throw InputError("cocycle row must be an array");
        std::vector<std::string> r;
        for (const auto &v : row) r.push_back(json_scalar_text(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline nlohmann::json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

/// {"types": [...], "central_dim": n, "gamma": [[1-based perm]...], "cocycle": [[...]], "k": [...], "mode": "..."}
inline AlgebraSpec parse_algebra_json(const nlohmann::json &j) {
    AlgebraSpec s;
    try {
        s.name = j.value("name", std::string("custom"));
        s.types = j.value("types", std::vector<std::string>{});
        s.central_dim = j.value("central_dim", std::size_t{0});
        for (const auto &perm : j.value("gamma", nlohmann::json::array())) {
            std::vector<std::size_t> p;
            for (const auto &v : perm) {
                long x = v.get<long>();
                if (x < 1) throw InputError("Gamma permutation entries are 1-based");
                p.push_back(static_cast<std::size_t>(x - 1));
            }
            s.gamma.push_back(std::move(p));
        }
        if (j.contains("cocycle")) s.cocycle = parse_cocycle_json(j.at("cocycle"));
        if (j.contains("k")) {
            s.k.clear();
            for (const auto &v : j.at("k")) s.k.push_back(json_scalar_text(v));
        }
        if (j.contains("mode")) s.mode = parse_mode(j.at("mode").get<std::string>());
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("bad algebra file: ") + e.what());
    }
    return s;
}

}  // namespace ghecke
