#pragma once

#include "ghecke/homology.hpp"
#include "ghecke/isomorphisms.hpp"
#include "ghecke/lie_algebra.hpp"
#include "ghecke/presets.hpp"
#include "ghecke/rank_one.hpp"

namespace ghecke {

// nlohmann::json keeps object keys in a std::map, so every dump below has sorted keys.

inline nlohmann::json spec_to_json(const AlgebraSpec &s) {
    nlohmann::json j;
    j["name"] = s.name;
    j["types"] = s.types;
    j["central_dim"] = s.central_dim;
    nlohmann::json gamma = nlohmann::json::array();
    for (const auto &p : s.gamma) {
        std::vector<std::size_t> q;
        for (auto x : p) q.push_back(x + 1);
        gamma.push_back(q);
    }
    j["gamma"] = gamma;
    j["cocycle"] = s.cocycle;
    j["k"] = s.k;
    j["mode"] = mode_name(s.mode);
    return j;
}

/// Basis elements N_g m with graded degree <= D (m a monomial in the x's and r).
inline std::vector<HeckeElement> graded_basis(const HeckeAlgebra &h, unsigned degree_cap) {
    std::vector<HeckeElement> out;
    std::size_t vars = h.dim() + (h.mode() == Mode::r1 ? 0 : 1);
    for (unsigned d = 0; 2 * d <= degree_cap; ++d)
        for (const auto &m : monomials_of_degree(vars, d))
            for (std::size_t g = 0; g < h.group().size(); ++g) {
                Polynomial p(h.dim());
                p.add_term(m, 1);
                out.push_back(h.N(g, p));
            }
    return out;
}

/// Products b_i b_j of graded basis elements with total graded degree <= D, in normal form.
inline nlohmann::json structure_constants_json(const HeckeAlgebra &h, unsigned degree_cap, std::size_t cap = 20000) {
    auto basis = graded_basis(h, degree_cap);
    std::vector<int> deg;
    for (const auto &b : basis) deg.push_back(b.max_graded_degree());
    nlohmann::json products = nlohmann::json::array();
    std::size_t count = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (deg[i] + deg[j] > static_cast<int>(degree_cap)) continue;
            if (++count > cap) throw InputError("structure-constant table exceeds " + std::to_string(cap) +
                                                " products; lower --degree-cap");
            products.push_back({{"a", h.to_string(basis[i])},
                                {"b", h.to_string(basis[j])},
                                {"product", h.to_string(h.multiply(basis[i], basis[j]))}});
        }
    nlohmann::json j;
    j["degree_cap"] = degree_cap;
    j["group_order"] = h.group().size();
    j["k"] = h.k().to_string(h.roots());
    j["mode"] = mode_name(h.mode());
    j["variables"] = h.variable_names();
    std::vector<std::string> names;
    for (const auto &b : basis) names.push_back(h.to_string(b));
    j["basis"] = names;
    j["products"] = products;
    return j;
}

inline nlohmann::json ext_table_json(const ExtTable &t) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto &[n, d] : t) j[std::to_string(n)] = d;
    return j;
}

inline nlohmann::json ext_json(const HeckeAlgebra &h, const std::vector<Scalar> &lambda, const Scalar &r) {
    nlohmann::json j;
    std::vector<std::string> l;
    for (const auto &x : lambda) l.push_back(x.to_string());
    j["lambda"] = l;
    j["r"] = r.to_string();
    j["ext"] = ext_table_json(ext_self_induced(h, lambda, r));
    auto [dims, vanish] = koszul_dual_dims(h);
    j["koszul_dual"] = dims;
    j["koszul_dual_differentials_vanish"] = vanish;
    return j;
}

inline nlohmann::json classification_json(const RankOneClassification &c) {
    nlohmann::json j;
    j["k"] = c.k.to_string();
    j["characters"] = c.characters.names;
    nlohmann::json irr = nlohmann::json::array();
    for (const auto &i : c.irreducibles) {
        std::vector<std::string> wts;
        for (const auto &w : i.weights)
            wts.push_back(w.weight[0].to_string() + (w.multiplicity > 1 ? "^" + std::to_string(w.multiplicity) : ""));
        nlohmann::json res = nlohmann::json::object();
        for (std::size_t x = 0; x < i.restriction.size(); ++x) res[c.characters.names[x]] = i.restriction[x];
        irr.push_back({{"name", i.name},
                       {"dim", i.module.dim},
                       {"weights", wts},
                       {"tempered", i.tempered},
                       {"discrete_series", i.discrete_series},
                       {"real_weights", i.real_weights},
                       {"restriction", res}});
    }
    j["irreducibles"] = irr;
    std::vector<std::string> rows, cols;
    for (auto r : c.tempered_order) rows.push_back(c.irreducibles[r].name);
    for (auto x : c.character_order) cols.push_back(c.characters.names[x]);
    j["restriction_matrix"] = {{"rows", rows}, {"columns", cols}, {"entries", c.restriction_matrix}};
    j["unipotent_triangular"] = c.unipotent_triangular;
    if (c.unipotent_triangular) j["zeta"] = zeta_rank_one(c);
    return j;
}

}  // namespace ghecke
