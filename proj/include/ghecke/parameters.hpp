#pragma once

#include "ghecke/weyl_group.hpp"

#include <set>
#include <sstream>

namespace ghecke {

/// Orbits of W x| Gamma on the roots modulo sign, i.e. conjugacy classes of reflections.
/// Each orbit lists the simple-root indices it contains; orbits are ordered by their smallest simple root.
inline std::vector<std::vector<std::size_t>> reflection_classes(const ExtendedWeylGroup &g) {
    const auto &rs = g.roots();
    std::vector<int> cls(rs.num_roots(), -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        std::size_t a = rs.simple_root_index(i);
        if (cls[a] >= 0) {
            out[cls[a]].push_back(i);
            continue;
        }
        int c = static_cast<int>(out.size());
        out.push_back({i});
        for (std::size_t w = 0; w < g.size(); ++w) {
            std::size_t b = g.act_on_root(w, a);
            cls[b] = cls[rs.negative_of(b)] = c;
        }
    }
    return out;
}

/// A W x| Gamma-invariant function on the roots, stored per root index.
class ParameterFunction {
  public:
    ParameterFunction() = default;

    /// Extend values on simple roots to all roots; conflicting values on one orbit are an input error.
    static ParameterFunction from_simple(const ExtendedWeylGroup &g, const std::vector<Scalar> &simple) {
        const auto &rs = g.roots();
        if (simple.size() != rs.rank()) throw InputError("expected one parameter per simple root");
        ParameterFunction k;
        std::vector<std::optional<Scalar>> val(rs.num_roots());
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            std::size_t a = rs.simple_root_index(i);
            for (std::size_t w = 0; w < g.size(); ++w) {
                for (std::size_t b : {g.act_on_root(w, a), rs.negative_of(g.act_on_root(w, a))}) {
                    if (!val[b])
                        val[b] = simple[i];
                    else if (*val[b] != simple[i])
                        throw InputError("parameter function is not invariant: simple roots " +
                                         std::to_string(i + 1) + " and another root of the same orbit differ");
                }
            }
        }
        for (auto &v : val) k.values_.push_back(*v);
        return k;
    }

    /// Accepts one value (constant), one per reflection class, or one per simple root.
    static ParameterFunction parse(const ExtendedWeylGroup &g, const std::vector<Scalar> &given) {
        std::size_t n = g.rank();
        if (n == 0) {
            if (given.size() > 1) throw InputError("rank 0 takes no parameters");
            return ParameterFunction{};
        }
        if (given.size() == n) return from_simple(g, given);
        auto classes = reflection_classes(g);
        std::vector<Scalar> simple(n);
        if (given.size() == 1) {
            std::fill(simple.begin(), simple.end(), given[0]);
        } else if (given.size() == classes.size()) {
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (auto i : classes[c]) simple[i] = given[c];
        } else {
            throw InputError("expected 1, " + std::to_string(classes.size()) + " or " + std::to_string(n) +
                             " parameter values, got " + std::to_string(given.size()));
        }
        return from_simple(g, simple);
    }

    const Scalar &operator()(std::size_t root) const { return values_[root]; }
    const std::vector<Scalar> &values() const { return values_; }
    Scalar simple(const RootSystem &rs, std::size_t i) const { return values_[rs.simple_root_index(i)]; }
    std::vector<Scalar> simple_values(const RootSystem &rs) const {
        std::vector<Scalar> v;
        for (std::size_t i = 0; i < rs.rank(); ++i) v.push_back(simple(rs, i));
        return v;
    }
    bool is_zero() const {
        for (const auto &v : values_)
            if (!v.is_zero()) return false;
        return true;
    }

    /// k(w alpha) = k(alpha) for every group element and root; returns the first failure.
    std::optional<std::pair<std::size_t, std::size_t>> invariance_violation(const ExtendedWeylGroup &g) const {
        for (std::size_t w = 0; w < g.size(); ++w)
            for (std::size_t a = 0; a < values_.size(); ++a)
                if (values_[g.act_on_root(w, a)] != values_[a]) return std::make_pair(w, a);
        return std::nullopt;
    }

    ParameterFunction scaled(const Scalar &z) const {
        ParameterFunction k = *this;
        for (auto &v : k.values_) v *= z;
        return k;
    }

    std::string to_string(const RootSystem &rs) const {
        std::string s;
        for (std::size_t i = 0; i < rs.rank(); ++i) s += (i ? "," : "") + simple(rs, i).to_string();
        return s;
    }

  private:
    std::vector<Scalar> values_;
};

/// Sign character of W x| Gamma, trivial on Gamma, determined by one sign per reflection class.
struct SignCharacter {
    std::string name;
    std::vector<int> class_sign;   // per reflection class
    std::vector<int> simple_sign;  // per simple reflection
    std::vector<int> value;        // per group element

    int operator()(std::size_t g) const { return value[g]; }

    ParameterFunction twist(const ExtendedWeylGroup &grp, const ParameterFunction &k) const {
        std::vector<Scalar> v;
        for (std::size_t i = 0; i < grp.rank(); ++i) v.push_back(Scalar(simple_sign[i]) * k.simple(grp.roots(), i));
        return ParameterFunction::from_simple(grp, v);
    }
};

inline SignCharacter make_sign_character(const ExtendedWeylGroup &g, const std::vector<int> &class_sign) {
    auto classes = reflection_classes(g);
    SignCharacter e;
    e.class_sign = class_sign;
    e.simple_sign.assign(g.rank(), 1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto i : classes[c]) e.simple_sign[i] = class_sign[c];
    for (const auto &el : g.elements()) {
        int v = 1;
        for (auto i : el.word) v *= e.simple_sign[i];
        e.value.push_back(v);
    }
    return e;
}

/// All sign characters; named triv, sgn, and eps_s / eps_l for an irreducible system with two root lengths.
inline std::vector<SignCharacter> epsilon_characters(const ExtendedWeylGroup &g) {
    auto classes = reflection_classes(g);
    const auto &rs = g.roots();
    std::size_t m = classes.size();
    std::vector<SignCharacter> out;
    bool two_lengths = rs.components().size() == 1 && rs.component_has_two_lengths(0) && m == 2;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> signs(m);
        for (std::size_t c = 0; c < m; ++c) signs[c] = (mask >> c) & 1u ? -1 : 1;
        auto e = make_sign_character(g, signs);
        if (mask == 0)
            e.name = "triv";
        else if (mask + 1 == (std::size_t{1} << m))
            e.name = "sgn";
        else if (two_lengths) {
            std::size_t neg = 0;
            while (signs[neg] > 0) ++neg;
            bool long_neg = rs.is_long(rs.simple_root_index(classes[neg].front()));
            e.name = long_neg ? "eps_l" : "eps_s";
        } else {
            e.name = "eps(";
            for (std::size_t c = 0; c < m; ++c) e.name += std::string(c ? "," : "") + (signs[c] < 0 ? "-" : "+");
            e.name += ")";
        }
        out.push_back(std::move(e));
    }
    return out;
}

inline std::optional<SignCharacter> find_sign_character(const ExtendedWeylGroup &g, const std::string &name) {
    for (auto &e : epsilon_characters(g))
        if (e.name == name) return e;
    return std::nullopt;
}

/// The character with eps(s_alpha) = -1 exactly when k(alpha) < 0; requires real (rational) k.
inline SignCharacter positivizing_character(const ExtendedWeylGroup &g, const ParameterFunction &k) {
    auto classes = reflection_classes(g);
    std::vector<int> signs;
    for (const auto &c : classes) {
        const Scalar &v = k.simple(g.roots(), c.front());
        if (!v.is_rational()) throw InputError("positivization needs real parameters");
        signs.push_back(v.sign() < 0 ? -1 : 1);
    }
    auto all = epsilon_characters(g);
    for (auto &e : all)
        if (e.class_sign == signs) return e;
    throw Error("positivizing character missing from the character list");
}

/// alpha(point) for a root given in the simple-root basis.
inline Scalar root_value(const RootSystem &rs, std::size_t root, const std::vector<Scalar> &point) {
    Scalar v;
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (rs.roots()[root][i]) v += Scalar(rs.roots()[root][i]) * point[i];
    return v;
}

struct CentralizerComponents {
    std::size_t count = 0;
    std::vector<std::size_t> representatives;  // group element indices
    std::size_t normalizer_order = 0;
    std::size_t stabilizer_order = 0;  // |W_sigma|
};

/// Subgroup of W generated by the reflections in `roots`, as a sorted list of element indices.
inline std::vector<std::size_t> reflection_subgroup(const ExtendedWeylGroup &g, const std::vector<std::size_t> &roots) {
    std::set<std::size_t> seen{0};
    std::vector<std::size_t> queue{0};
    std::vector<std::size_t> gens;
    for (auto r : roots) gens.push_back(g.reflection(r));
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (auto s : gens) {
            std::size_t x = g.multiply(queue[k], s);
            if (seen.insert(x).second) queue.push_back(x);
        }
    return {seen.begin(), seen.end()};
}

/// Double cosets (N cap W_sigma) \ N / W_M with N = N_W(W_M) and W_sigma generated by reflections vanishing at sigma.
inline CentralizerComponents centralizer_components(const ExtendedWeylGroup &g, const std::vector<Scalar> &sigma,
                                                    const std::vector<std::size_t> &levi_roots) {
    const auto &rs = g.roots();
    if (sigma.size() != rs.dim()) throw InputError("sigma has wrong dimension");
    auto wm = reflection_subgroup(g, levi_roots);
    std::set<std::size_t> wm_set(wm.begin(), wm.end());
    std::vector<std::size_t> zero_roots;
    for (std::size_t a = 0; a < rs.num_positive(); ++a)
        if (root_value(rs, a, sigma).is_zero()) zero_roots.push_back(a);
    auto ws = reflection_subgroup(g, zero_roots);
    std::set<std::size_t> ws_set(ws.begin(), ws.end());

    std::vector<std::size_t> normalizer;
    for (std::size_t w = 0; w < g.w_size(); ++w) {
        bool ok = true;
        for (auto h : wm)
            if (!wm_set.count(g.multiply(g.multiply(w, h), g.inverse(w)))) {
                ok = false;
                break;
            }
        if (ok) normalizer.push_back(w);
    }
    std::vector<std::size_t> left;
    for (auto n : normalizer)
        if (ws_set.count(n)) left.push_back(n);

    CentralizerComponents out;
    out.normalizer_order = normalizer.size();
    out.stabilizer_order = ws.size();
    std::set<std::size_t> covered;
    for (auto n : normalizer) {
        if (covered.count(n)) continue;
        out.representatives.push_back(n);
        for (auto a : left)
            for (auto b : wm) covered.insert(g.multiply(g.multiply(a, n), b));
    }
    out.count = out.representatives.size();
    return out;
}

}  // namespace ghecke
