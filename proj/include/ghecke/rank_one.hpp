#pragma once

#include "ghecke/module.hpp"

namespace ghecke {

/// Irreducible module found by the rank-one search.
struct RankOneIrrep {
    std::string name;
    FiniteDimModule module;
    std::vector<WeightDatum> weights;
    bool tempered = false;
    bool discrete_series = false;
    bool real_weights = true;
    std::vector<std::size_t> restriction;  // multiplicities over the character table
};

struct RankOneClassification {
    Scalar k;
    CharacterTable characters;
    std::vector<RankOneIrrep> irreducibles;       // everything found, tempered or not
    std::vector<std::size_t> tempered_order;      // rows of the restriction matrix, in triangular order
    std::vector<std::size_t> character_order;     // columns, matched with rows
    std::vector<std::vector<std::size_t>> restriction_matrix;
    bool unipotent_triangular = false;
};

namespace detail {

/// Change of basis so that the first `sub` columns of `basis` span a submodule; returns the quotient module.
inline FiniteDimModule quotient_module(const FiniteDimModule &v, const Matrix &sub) {
    std::size_t n = v.dim, m = sub.cols();
    // extend sub to a basis with standard vectors
    std::vector<std::vector<Scalar>> cols;
    for (std::size_t c = 0; c < m; ++c) cols.push_back(sub.column_vector(c));
    for (std::size_t e = 0; e < n && cols.size() < n; ++e) {
        std::vector<Scalar> ev(n);
        ev[e] = 1;
        auto trial = cols;
        trial.push_back(ev);
        Matrix t(n, trial.size());
        for (std::size_t c = 0; c < trial.size(); ++c)
            for (std::size_t r = 0; r < n; ++r) t(r, c) = trial[c][r];
        if (t.rank() == trial.size()) cols = std::move(trial);
    }
    Matrix p(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) p(r, c) = cols[c][r];
    Matrix pinv = p.inverse();
    auto block = [&](const Matrix &a) {
        Matrix b = pinv * a * p;
        Matrix q(n - m, n - m);
        for (std::size_t i = m; i < n; ++i)
            for (std::size_t j = m; j < n; ++j) q(i - m, j - m) = b(i, j);
        return q;
    };
    FiniteDimModule out;
    out.dim = n - m;
    out.r = v.r;
    for (const auto &a : v.x) out.x.push_back(block(a));
    for (const auto &a : v.s) out.s.push_back(block(a));
    for (const auto &a : v.gamma) out.gamma.push_back(block(a));
    return out;
}

inline FiniteDimModule sub_module(const FiniteDimModule &v, const Matrix &vec) {
    auto restrict1 = [&](const Matrix &a) {
        auto c = vec.solve(a * vec);
        if (!c) throw Error("not a submodule");
        return *c;
    };
    FiniteDimModule out;
    out.dim = vec.cols();
    out.r = v.r;
    for (const auto &a : v.x) out.x.push_back(restrict1(a));
    for (const auto &a : v.s) out.s.push_back(restrict1(a));
    for (const auto &a : v.gamma) out.gamma.push_back(restrict1(a));
    return out;
}

/// A common eigenvector of all generators, if one exists.
inline std::optional<Matrix> common_eigenvector(const FiniteDimModule &v) {
    auto wts = weight_decomposition(v);
    for (const auto &w : wts) {
        // stack (x_i - mu_i) and (s_j - eps_j) for eps_j = +-1
        std::size_t gens = v.s.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << gens); ++mask) {
            std::size_t rows = v.dim * (v.x.size() + gens);
            Matrix a(rows, v.dim);
            std::size_t r = 0;
            auto append = [&](const Matrix &m) {
                for (std::size_t i = 0; i < v.dim; ++i, ++r)
                    for (std::size_t j = 0; j < v.dim; ++j) a(r, j) = m(i, j);
            };
            for (std::size_t i = 0; i < v.x.size(); ++i) append(v.x[i] - Matrix::scalar(v.dim, w.weight[i]));
            for (std::size_t j = 0; j < gens; ++j)
                append(v.s[j] - Matrix::scalar(v.dim, (mask >> j) & 1u ? -1 : 1));
            Matrix ker = a.nullspace();
            if (ker.cols() > 0) {
                Matrix col(v.dim, 1);
                for (std::size_t i = 0; i < v.dim; ++i) col(i, 0) = ker(i, 0);
                // the gamma generators must also preserve the line
                bool ok = true;
                for (const auto &g : v.gamma) {
                    auto c = col.solve(g * col);
                    if (!c) ok = false;
                }
                if (ok) return col;
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Composition factors of a module of an A1-type algebra, where irreducibles have dimension at most 2.
inline std::vector<FiniteDimModule> composition_factors_rank_one(const FiniteDimModule &v) {
    if (v.dim == 0) return {};
    if (v.dim == 1) return {v};
    auto line = detail::common_eigenvector(v);
    if (!line) {
        if (v.dim > 2) throw Error("rank-one irreducible of dimension above 2");
        return {v};
    }
    auto out = composition_factors_rank_one(detail::sub_module(v, *line));
    auto rest = composition_factors_rank_one(detail::quotient_module(v, *line));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

/// Modules are isomorphic here when they have the same dimension, weights and restriction (enough at rank one).
inline bool same_rank_one_irrep(const RankOneIrrep &a, const RankOneIrrep &b) {
    if (a.module.dim != b.module.dim || a.restriction != b.restriction) return false;
    if (a.weights.size() != b.weights.size()) return false;
    for (std::size_t i = 0; i < a.weights.size(); ++i)
        if (a.weights[i].weight != b.weights[i].weight || a.weights[i].multiplicity != b.weights[i].multiplicity)
            return false;
    return true;
}

/// Brute-force classification for H(A1, k) at r = 1 with trivial Gamma and cocycle.
///
/// Candidates: the one-dimensional characters, and composition factors of induced modules at the
/// reducibility points lambda = +-k, at lambda = 0 and at sampled generic lambda.
inline RankOneClassification classify_rank_one(const HeckeAlgebra &h) {
    const auto &rs = h.roots();
    if (rs.rank() != 1 || rs.central_dim() != 0 || h.group().gamma_size() != 1)
        throw InputError("rank-one classification needs type A1 with trivial Gamma and no central part");
    if (h.mode() != Mode::r1) throw InputError("rank-one classification works in the r = 1 algebra");
    RankOneClassification out;
    out.k = h.k().simple(rs, 0);
    const Scalar &k = out.k;
    if (!k.is_rational()) throw InputError("rank-one classification needs a rational parameter");
    out.characters = character_table(h);

    std::vector<FiniteDimModule> candidates;
    // x N_s = -N_s x + 2k, so on a character eps * mu = -eps * mu + 2k
    for (int eps : {1, -1}) {
        Scalar mu = k / Scalar(eps);
        candidates.push_back(character_module({mu}, {eps}, {}, 1));
    }
    std::vector<Scalar> lambdas{k, -k, Scalar(0)};
    Scalar generic = Scalar(1, 2);
    while (generic == k || generic == -k) generic += 1;
    lambdas.push_back(generic);
    lambdas.push_back(k.sign() == 0 ? Scalar(3) : k * Scalar(3));
    for (const auto &lam : lambdas) {
        auto ind = induce_from_character(h, {lam}, 1);
        for (auto &f : composition_factors_rank_one(ind)) candidates.push_back(std::move(f));
    }
    for (auto &c : candidates) {
        if (auto err = c.validate(h)) throw Error("rank-one candidate fails a relation: " + *err);
        RankOneIrrep irr;
        irr.module = c;
        irr.weights = weight_decomposition(c);
        irr.tempered = is_tempered(rs, irr.weights);
        irr.discrete_series = is_essentially_discrete_series(rs, irr.weights);
        irr.restriction = restrict_to_group_algebra(h, out.characters, c);
        bool dup = false;
        for (const auto &e : out.irreducibles)
            if (same_rank_one_irrep(e, irr)) dup = true;
        if (dup) continue;
        if (c.dim == 1) {
            bool triv = c.s[0](0, 0).is_one();
            irr.name = triv ? "triv" : "St";
        } else {
            irr.name = "pi(" + irr.weights.back().weight[0].to_string() + ")";
        }
        out.irreducibles.push_back(std::move(irr));
    }
    std::sort(out.irreducibles.begin(), out.irreducibles.end(), [](const RankOneIrrep &a, const RankOneIrrep &b) {
        if (a.module.dim != b.module.dim) return a.module.dim < b.module.dim;
        return a.weights.front().weight[0].rational() < b.weights.front().weight[0].rational();
    });

    // restriction matrix on tempered real-weight irreducibles, peeled into unipotent triangular form
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < out.irreducibles.size(); ++i)
        if (out.irreducibles[i].tempered && out.irreducibles[i].real_weights) rows.push_back(i);
    std::vector<std::size_t> cols(out.characters.names.size());
    for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
    std::vector<std::size_t> row_order, col_order;
    auto remaining_rows = rows;
    auto remaining_cols = cols;
    bool ok = rows.size() == cols.size();
    while (ok && !remaining_rows.empty()) {
        bool found = false;
        for (std::size_t a = 0; a < remaining_rows.size() && !found; ++a) {
            const auto &res = out.irreducibles[remaining_rows[a]].restriction;
            std::size_t nonzero = 0, which = 0;
            for (auto c : remaining_cols)
                if (res[c]) {
                    ++nonzero;
                    which = c;
                }
            if (nonzero == 1 && res[which] == 1) {
                row_order.insert(row_order.begin(), remaining_rows[a]);
                col_order.insert(col_order.begin(), which);
                remaining_rows.erase(remaining_rows.begin() + static_cast<long>(a));
                remaining_cols.erase(std::find(remaining_cols.begin(), remaining_cols.end(), which));
                found = true;
            }
        }
        ok = found;
    }
    out.tempered_order = ok ? row_order : rows;
    out.character_order = ok ? col_order : cols;
    for (auto r : out.tempered_order) {
        std::vector<std::size_t> row;
        for (auto c : out.character_order) row.push_back(out.irreducibles[r].restriction[c]);
        out.restriction_matrix.push_back(std::move(row));
    }
    out.unipotent_triangular = ok;
    for (std::size_t i = 0; ok && i < out.restriction_matrix.size(); ++i)
        for (std::size_t j = 0; j < out.restriction_matrix.size(); ++j) {
            std::size_t v = out.restriction_matrix[i][j];
            if ((i == j && v != 1) || (j < i && v != 0)) out.unipotent_triangular = false;
        }
    return out;
}

/// zeta: tempered real-weight irreducible -> the new constituent of its restriction (diagonal entry).
inline std::map<std::string, std::string> zeta_rank_one(const RankOneClassification &c) {
    if (!c.unipotent_triangular) throw Error("restriction matrix is not unipotent triangular");
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < c.tempered_order.size(); ++i)
        out[c.irreducibles[c.tempered_order[i]].name] = c.characters.names[c.character_order[i]];
    std::set<std::string> image;
    for (const auto &[a, b] : out) image.insert(b);
    if (image.size() != c.characters.names.size() || out.size() != image.size()) throw Error("zeta is not a bijection");
    return out;
}

}  // namespace ghecke
