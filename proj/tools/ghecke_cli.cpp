#include "ghecke/ghecke.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace ghecke;

namespace {

struct AlgebraOptions {
    std::string preset = "A1";
    std::string algebra_file;
    std::string k;
    std::string gamma;
    std::string cocycle_file;
    std::string mode;
};

void add_algebra_options(CLI::App *cmd, AlgebraOptions &o) {
    cmd->add_option("--preset", o.preset, "Preset algebra (" + [] {
        std::string s;
        for (const auto &n : preset_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }() + ")");
    cmd->add_option("--algebra-file", o.algebra_file, "JSON algebra description");
    cmd->add_option("--k", o.k, "Parameters: one value, one per reflection class, or one per simple root");
    cmd->add_option("--gamma", o.gamma, "Gamma generators as 1-based permutations of the simple roots, ';'-separated, or 'none'");
    cmd->add_option("--cocycle-file", o.cocycle_file, "JSON cocycle table over Gamma");
    cmd->add_option("--mode", o.mode, "generic, r1 or k0");
}

AlgebraSpec load_spec(const AlgebraOptions &o) {
    AlgebraSpec s = o.algebra_file.empty() ? preset(o.preset) : parse_algebra_json(read_json_file(o.algebra_file));
    if (!o.k.empty()) s.k = split_list(o.k, ',');
    if (!o.gamma.empty()) {
        s.gamma = parse_gamma(o.gamma);
        s.cocycle.clear();
    }
    if (!o.cocycle_file.empty()) s.cocycle = parse_cocycle_json(read_json_file(o.cocycle_file));
    if (!o.mode.empty()) s.mode = parse_mode(o.mode);
    return s;
}

std::vector<Scalar> parse_point(const std::string &text) {
    std::vector<Scalar> out;
    for (const auto &v : split_list(text, ',')) out.push_back(parse_scalar_literal(v));
    return out;
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

LieAlgebra load_lie(const std::string &fixture, const std::string &file, const std::string &v) {
    LieAlgebra L = file.empty() ? lie_fixture(fixture) : lie_from_json(read_json_file(file));
    if (!v.empty()) L.v = parse_lie_vector(L, v);
    return L;
}

int run_params(const LieAlgebra &L, const std::string &f4_file) {
    int status = 0;
    if (!f4_file.empty()) {
        auto j = read_json_file(f4_file);
        if (!j.contains("pairs") || !j.at("pairs").is_array()) throw InputError("F4 file needs a \"pairs\" array");
        for (const auto &p : j.at("pairs")) {
            if (!p.is_array() || p.size() != 2) throw InputError("each F4 pair is [k_short, k_long]");
            Scalar ks = parse_scalar_literal(json_scalar_text(p[0]));
            Scalar kl = parse_scalar_literal(json_scalar_text(p[1]));
            bool ok = f4_admissible(ks, kl);
            std::cout << "F4 (" << ks << ", " << kl << "): " << (ok ? "admissible" : "NOT admissible") << "\n";
            if (!ok) status = 1;
        }
        return status;
    }
    auto p = compute_parameters(L, L.v);
    const auto &g = *p.weyl.group;
    std::cout << "fixture " << L.name << ": dim " << L.dim() << ", restricted rank " << L.rank() << ", |W| = "
              << g.w_size() << ", |Gamma| = " << g.gamma_size() << "\n";
    for (const auto &n : p.weyl.notes) std::cout << "note: " << n << "\n";
    for (const auto &[root, k] : p.raw)
        std::cout << "root " << root_text(root) << ": dim " << p.space_dim.at(root) << ", k = " << k << "\n";
    for (std::size_t i = 0; i < p.simple.size(); ++i)
        std::cout << "k(" << L.simple_roots[i] << ") = " << p.simple[i] << "\n";
    if (p.conflict) {
        std::cout << "invariance: FAILED (" << *p.conflict << ")\n";
        return 1;
    }
    std::cout << "invariance: ok\n";
    return 0;
}

void print_classification(const RankOneClassification &c) {
    std::cout << "k = " << c.k << "\n";
    for (const auto &i : c.irreducibles) {
        std::cout << i.name << ": dim " << i.module.dim << ", weights";
        for (const auto &w : i.weights)
            std::cout << " " << w.weight[0] << (w.multiplicity > 1 ? "^" + std::to_string(w.multiplicity) : "");
        std::cout << (i.tempered ? ", tempered" : ", not tempered");
        if (i.discrete_series) std::cout << ", discrete series";
        std::cout << ", Res =";
        for (std::size_t x = 0; x < i.restriction.size(); ++x)
            if (i.restriction[x]) std::cout << " " << i.restriction[x] << "*" << c.characters.names[x];
        std::cout << "\n";
    }
    std::cout << "restriction matrix (rows";
    for (auto r : c.tempered_order) std::cout << " " << c.irreducibles[r].name;
    std::cout << "; columns";
    for (auto x : c.character_order) std::cout << " " << c.characters.names[x];
    std::cout << "):\n";
    for (const auto &row : c.restriction_matrix) {
        std::cout << " ";
        for (auto v : row) std::cout << " " << v;
        std::cout << "\n";
    }
    std::cout << "unipotent triangular: " << (c.unipotent_triangular ? "yes" : "no") << "\n";
    if (c.unipotent_triangular)
        for (const auto &[a, b] : zeta_rank_one(c)) std::cout << "zeta(" << a << ") = " << b << "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Twisted graded Hecke algebras: normal forms, parameters, modules and Ext"};
    app.require_subcommand(1);

    AlgebraOptions o;
    std::uint64_t seed = 1;
    std::size_t cases = 100;
    unsigned degree_cap = 2;
    std::string out_path, expr, fixture = "sl3-gl2", lie_file, v, f4_file, kind = "structure", lambda, r_value = "1";
    bool dual = false;

    auto *verify = app.add_subcommand("verify", "Run the property suites on an algebra");
    add_algebra_options(verify, o);
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--cases", cases, "Random cases per suite");

    auto *eval = app.add_subcommand("eval", "Normal form of an expression");
    add_algebra_options(eval, o);
    eval->add_option("expression", expr, "Element, e.g. \"x * N[s]\"")->required();

    auto *params = app.add_subcommand("params", "Parameters k(alpha) from a graded Lie algebra and nilpotent v");
    params->add_option("--fixture", fixture, "Built-in Lie fixture (" + [] {
        std::string s;
        for (const auto &n : lie_fixture_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }() + ")");
    params->add_option("--lie-file", lie_file, "JSON Lie algebra fixture");
    params->add_option("--v", v, "Nilpotent element, e.g. E12 or 0");
    params->add_option("--f4", f4_file, "Check F4 parameter pairs from a JSON file instead");

    auto *classify = app.add_subcommand("classify", "Rank-one classification of tempered irreducibles");
    add_algebra_options(classify, o);

    auto *ext = app.add_subcommand("ext", "Ext of an induced module with itself, or the Koszul dual");
    add_algebra_options(ext, o);
    ext->add_option("--lambda", lambda, "Regular point, comma-separated (default: a random regular point)");
    ext->add_option("--r", r_value, "Value of r");
    ext->add_option("--seed", seed, "Seed for the default lambda");
    ext->add_flag("--dual", dual, "Graded dimensions of the Koszul dual instead");

    auto *exp = app.add_subcommand("export", "Deterministic JSON export");
    add_algebra_options(exp, o);
    exp->add_option("--kind", kind, "structure, ext, classification or lie")
        ->check(CLI::IsMember({"structure", "ext", "classification", "lie"}));
    exp->add_option("--degree-cap", degree_cap, "Largest graded degree in the structure-constant table");
    exp->add_option("--out", out_path, "Output file (default stdout)");
    exp->add_option("--seed", seed, "Seed for the default lambda");
    exp->add_option("--lambda", lambda, "Point for the Ext export");
    exp->add_option("--r", r_value, "Value of r for the Ext export");
    exp->add_option("--fixture", fixture, "Lie fixture for --kind lie");
    exp->add_option("--lie-file", lie_file, "JSON Lie algebra for --kind lie");
    exp->add_option("--v", v, "Nilpotent element for --kind lie");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (params->parsed()) return run_params(load_lie(fixture, lie_file, v), f4_file);

        if (exp->parsed() && kind == "lie") {
            auto L = load_lie(fixture, lie_file, v);
            L.validate();
            write_output(out_path, lie_to_json(L).dump(2) + "\n");
            return 0;
        }

        AlgebraSpec spec = load_spec(o);
        if (classify->parsed() || (exp->parsed() && kind == "classification")) spec.mode = Mode::r1;
        HeckeAlgebra h = build_algebra(spec);

        if (verify->parsed()) {
            bool all = true;
            for (const auto &res : verify_all(h, {seed, cases})) {
                if (res.skipped)
                    std::cout << "SKIP " << res.name << ": " << res.witness << "\n";
                else if (res.pass)
                    std::cout << "PASS " << res.name << " (" << res.cases << " cases)\n";
                else
                    std::cout << "FAIL " << res.name << ": " << res.witness << "\n";
                all = all && res.pass;
            }
            std::cout << (all ? "all suites passed" : "verification failed") << "\n";
            return all ? 0 : 1;
        }
        if (eval->parsed()) {
            std::cout << h.to_string(parse_element(h, expr)) << "\n";
            return 0;
        }
        if (classify->parsed()) {
            print_classification(classify_rank_one(h));
            return 0;
        }

        auto point = [&](const HeckeAlgebra &alg) {
            if (!lambda.empty()) return parse_point(lambda);
            return Sampler(alg, seed).regular_point();
        };
        if (ext->parsed()) {
            if (dual) {
                auto [dims, vanish] = koszul_dual_dims(h);
                std::cout << nlohmann::json(dims).dump() << "\n";
                return vanish ? 0 : 1;
            }
            std::cout << ext_table_json(ext_self_induced(h, point(h), parse_scalar_literal(r_value))).dump() << "\n";
            return 0;
        }
        nlohmann::json j;
        j["algebra"] = spec_to_json(spec);
        if (kind == "structure") j["structure_constants"] = structure_constants_json(h, degree_cap);
        if (kind == "ext") j["ext"] = ext_json(h, point(h), parse_scalar_literal(r_value));
        if (kind == "classification") j["classification"] = classification_json(classify_rank_one(h));
        write_output(out_path, j.dump(2) + "\n");
        return 0;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
