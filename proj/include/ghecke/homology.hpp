#pragma once

#include "ghecke/isomorphisms.hpp"
#include "ghecke/module.hpp"

namespace ghecke {

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Size-p subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> exterior_basis(std::size_t n, std::size_t p) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == p) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

inline std::size_t subset_index(const std::vector<std::vector<std::size_t>> &basis, const std::vector<std::size_t> &s) {
    auto it = std::lower_bound(basis.begin(), basis.end(), s);
    return static_cast<std::size_t>(it - basis.begin());
}

/// Matrix with polynomial entries; rows index the target.
struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Polynomial> a;
    PolyMatrix(std::size_t r, std::size_t c, std::size_t dim) : rows(r), cols(c), a(r * c, Polynomial(dim)) {}
    Polynomial &operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Polynomial &operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    friend PolyMatrix operator*(const PolyMatrix &x, const PolyMatrix &y) {
        PolyMatrix z(x.rows, y.cols, x.a.empty() ? 0 : x.a[0].dim());
        for (std::size_t i = 0; i < x.rows; ++i)
            for (std::size_t k = 0; k < x.cols; ++k) {
                if (x(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols; ++j)
                    if (!y(k, j).is_zero()) z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }
    bool is_zero() const {
        return std::all_of(a.begin(), a.end(), [](const Polynomial &p) { return p.is_zero(); });
    }
    Matrix evaluate(const std::vector<Scalar> &point, const Scalar &r) const {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(i, j).evaluate(point, r);
        return m;
    }
};

/// Chain complex of free modules over O(t + A^1): d[p] maps degree p+1 to degree p.
struct ChainComplex {
    std::size_t variables = 0;  // d + 1; the last variable is r
    std::vector<std::size_t> ranks;
    std::vector<PolyMatrix> d;

    /// Index of the first p with d[p-1] d[p] != 0, if any.
    std::optional<std::size_t> square_zero_violation() const {
        for (std::size_t p = 1; p < d.size(); ++p)
            if (!(d[p - 1] * d[p]).is_zero()) return p;
        return std::nullopt;
    }
};

/// Koszul resolution of C_c over O(t + A^1) in n = d + 1 variables; the entries are y_j - c_j.
inline ChainComplex koszul_resolution(std::size_t n, const std::vector<Scalar> &center = {}) {
    if (n == 0) throw InputError("Koszul resolution needs at least one variable");
    std::size_t dim = n - 1;
    std::vector<Scalar> c = center.empty() ? std::vector<Scalar>(n) : center;
    if (c.size() != n) throw InputError("center point has wrong dimension");
    ChainComplex out;
    out.variables = n;
    for (std::size_t p = 0; p <= n; ++p) out.ranks.push_back(binomial(n, p));
    for (std::size_t p = 1; p <= n; ++p) {
        auto src = exterior_basis(n, p), dst = exterior_basis(n, p - 1);
        PolyMatrix m(dst.size(), src.size(), dim);
        for (std::size_t col = 0; col < src.size(); ++col)
            for (std::size_t a = 0; a < p; ++a) {
                auto face = src[col];
                std::size_t var = face[a];
                face.erase(face.begin() + static_cast<long>(a));
                Polynomial entry = Polynomial::variable(dim, var) - Polynomial::constant(dim, c[var]);
                m(subset_index(dst, face), col) = (a % 2 ? Scalar(-1) : Scalar(1)) * entry;
            }
        out.d.push_back(std::move(m));
    }
    return out;
}

/// Homology dimensions of the complex evaluated at a point (entries become scalars).
inline std::vector<std::size_t> evaluated_homology(const ChainComplex &k, const std::vector<Scalar> &point) {
    std::vector<Scalar> x(point.begin(), point.end() - 1);
    Scalar r = point.back();
    std::vector<std::size_t> rk;
    for (const auto &m : k.d) rk.push_back(m.evaluate(x, r).rank());
    std::vector<std::size_t> h;
    for (std::size_t p = 0; p < k.ranks.size(); ++p) {
        std::size_t out_rank = p == 0 ? 0 : rk[p - 1];
        std::size_t in_rank = p < rk.size() ? rk[p] : 0;
        h.push_back(k.ranks[p] - out_rank - in_rank);
    }
    return h;
}

/// Homology of the homogeneous Koszul complex (center 0) in internal polynomial degree t, by position p.
inline std::vector<std::size_t> graded_koszul_homology(std::size_t n, unsigned t) {
    std::size_t dim = n - 1;
    // basis of K_p in degree t: (subset I of size p, monomial of degree t - p)
    auto basis = [&](std::size_t p) {
        std::vector<std::pair<std::vector<std::size_t>, Monomial>> b;
        if (p > t) return b;
        for (const auto &s : exterior_basis(n, p))
            for (const auto &m : monomials_of_degree(n, t - static_cast<unsigned>(p))) b.emplace_back(s, m);
        return b;
    };
    (void)dim;
    std::vector<std::vector<std::pair<std::vector<std::size_t>, Monomial>>> bases;
    for (std::size_t p = 0; p <= n; ++p) bases.push_back(basis(p));
    std::vector<std::size_t> rk;
    for (std::size_t p = 1; p <= n; ++p) {
        const auto &src = bases[p];
        const auto &dst = bases[p - 1];
        std::map<std::pair<std::vector<std::size_t>, Monomial>, std::size_t> index;
        for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
        Matrix m(dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col)
            for (std::size_t a = 0; a < p; ++a) {
                auto face = src[col].first;
                std::size_t var = face[a];
                face.erase(face.begin() + static_cast<long>(a));
                Monomial mm = src[col].second;
                mm.exp[var] += 1;
                m(index.at({face, mm}), col) += a % 2 ? -1 : 1;
            }
        rk.push_back(src.empty() || dst.empty() ? 0 : m.rank());
    }
    std::vector<std::size_t> h;
    for (std::size_t p = 0; p <= n; ++p) {
        std::size_t out_rank = p == 0 ? 0 : rk[p - 1];
        std::size_t in_rank = p < rk.size() ? rk[p] : 0;
        h.push_back(bases[p].size() - out_rank - in_rank);
    }
    return h;
}

using ExtTable = std::map<std::size_t, std::size_t>;

/// Cohomology of Hom_O(K(c), M) where y_j acts on M by x_j (j < d) and by r (j = d).
/// Entries past the end of the resolution are reported as 0.
struct HomComplexResult {
    ExtTable dims;
    bool differentials_vanish = true;
};

inline HomComplexResult hom_koszul_cohomology(const FiniteDimModule &m, const std::vector<Scalar> &c) {
    std::size_t n = m.x.size() + 1;
    if (c.size() != n) throw InputError("point has wrong dimension");
    std::size_t dm = m.dim;
    std::vector<Matrix> y;
    for (const auto &x : m.x) y.push_back(x);
    y.push_back(Matrix::scalar(dm, m.r));
    for (std::size_t j = 0; j < n; ++j) y[j] = y[j] - Matrix::scalar(dm, c[j]);
    // delta^p : Hom(K_p, M) -> Hom(K_{p+1}, M)
    std::vector<std::size_t> rk;
    HomComplexResult out;
    for (std::size_t p = 0; p < n; ++p) {
        auto src = exterior_basis(n, p), dst = exterior_basis(n, p + 1);
        Matrix delta(dst.size() * dm, src.size() * dm);
        for (std::size_t row = 0; row < dst.size(); ++row)
            for (std::size_t a = 0; a <= p; ++a) {
                auto face = dst[row];
                std::size_t var = face[a];
                face.erase(face.begin() + static_cast<long>(a));
                std::size_t col = subset_index(src, face);
                Scalar sign = a % 2 ? -1 : 1;
                for (std::size_t i = 0; i < dm; ++i)
                    for (std::size_t j = 0; j < dm; ++j)
                        if (!y[var](i, j).is_zero()) delta(row * dm + i, col * dm + j) += sign * y[var](i, j);
            }
        if (!delta.is_zero()) out.differentials_vanish = false;
        rk.push_back(delta.rank());
    }
    for (std::size_t p = 0; p <= n; ++p) {
        std::size_t size = binomial(n, p) * dm;
        std::size_t outgoing = p < n ? rk[p] : 0;
        std::size_t incoming = p == 0 ? 0 : rk[p - 1];
        out.dims[p] = size - outgoing - incoming;
    }
    out.dims[n + 1] = 0;
    return out;
}

inline bool is_regular(const ExtendedWeylGroup &g, const std::vector<Scalar> &lambda) {
    for (std::size_t w = 1; w < g.size(); ++w)
        if (g.act_on_point(w, lambda) == lambda) return false;
    return true;
}

/// Ext^*_H(ind C_{lambda,r}, ind C_{lambda,r}) through Frobenius reciprocity and the Koszul resolution of C_{lambda,r}.
inline ExtTable ext_self_induced(const HeckeAlgebra &h, const std::vector<Scalar> &lambda, const Scalar &r) {
    if (h.mode() == Mode::r1) throw InputError("Ext of induced modules is computed with r free (generic or k0 mode)");
    if (!is_regular(h.group(), lambda)) throw InputError("lambda is not regular");
    auto ind = induce_from_character(h, lambda, r);
    std::vector<Scalar> c = lambda;
    c.push_back(r);
    return hom_koszul_cohomology(ind, c).dims;
}

/// Graded dimensions of E(H) = Ext_H(H_0, H_0), computed from Hom(P, H_0) for the induced Koszul resolution.
inline std::pair<std::vector<std::size_t>, bool> koszul_dual_dims(const HeckeAlgebra &h) {
    if (h.mode() == Mode::r1) throw InputError("the Koszul dual is defined for the graded algebra");
    std::vector<Scalar> zero(h.dim());
    auto h0 = induce_from_character(h, zero, 0);
    std::vector<Scalar> c(h.dim() + 1);
    auto res = hom_koszul_cohomology(h0, c);
    std::vector<std::size_t> dims;
    for (std::size_t p = 0; p <= h.dim() + 1; ++p) dims.push_back(res.dims.at(p));
    return {dims, res.differentials_vanish};
}

/// Free resolution P_p = H (x) wedge^p(t + A^1) of H_0, with differentials given by right multiplication.
struct HeckeResolution {
    std::size_t variables = 0;
    std::vector<std::size_t> ranks;
    // entries[p][(target, source)] for d: P_{p+1} -> P_p
    std::vector<std::map<std::pair<std::size_t, std::size_t>, HeckeElement>> d;
};

inline HeckeResolution projective_resolution_H0(const HeckeAlgebra &h) {
    std::size_t n = h.dim() + 1;
    HeckeResolution out;
    out.variables = n;
    for (std::size_t p = 0; p <= n; ++p) out.ranks.push_back(binomial(n, p));
    for (std::size_t p = 1; p <= n; ++p) {
        auto src = exterior_basis(n, p), dst = exterior_basis(n, p - 1);
        std::map<std::pair<std::size_t, std::size_t>, HeckeElement> m;
        for (std::size_t col = 0; col < src.size(); ++col)
            for (std::size_t a = 0; a < p; ++a) {
                auto face = src[col];
                std::size_t var = face[a];
                face.erase(face.begin() + static_cast<long>(a));
                HeckeElement y = var < h.dim() ? h.x(var) : h.r();
                m[{subset_index(dst, face), col}] = (a % 2 ? Scalar(-1) : Scalar(1)) * y;
            }
        out.d.push_back(std::move(m));
    }
    return out;
}

struct ResolutionCheck {
    bool square_zero = true;
    bool entries_degree_two = true;
    bool augmentation_kills_image = true;
    bool augmentation_onto = true;
    std::vector<int> generator_degree;  // graded degree of the generators of P_p
};

/// d^2 = 0 through H multiplication, homogeneity of entries, and exactness at P_0 on a spanning set.
inline ResolutionCheck check_resolution(const HeckeAlgebra &h, const HeckeResolution &res) {
    ResolutionCheck out;
    for (std::size_t p = 0; p < res.ranks.size(); ++p) out.generator_degree.push_back(static_cast<int>(2 * p));
    for (const auto &m : res.d)
        for (const auto &[pos, e] : m)
            if (h.mode() != Mode::r1 && h.graded_degree(e) != 2) out.entries_degree_two = false;
    for (std::size_t p = 1; p < res.d.size(); ++p) {
        // row vector convention: (d_{p} then d_{p-1}) means entry products e(J,I) * e(K,J)
        std::map<std::pair<std::size_t, std::size_t>, HeckeElement> comp;
        for (const auto &[ji, e1] : res.d[p])
            for (const auto &[kj, e2] : res.d[p - 1]) {
                if (kj.second != ji.first) continue;
                auto key = std::make_pair(kj.first, ji.second);
                auto [it, _] = comp.try_emplace(key, h.zero());
                it->second += h.multiply(e1, e2);
            }
        for (const auto &[key, e] : comp)
            if (!e.is_zero()) out.square_zero = false;
    }
    std::vector<Scalar> zero(h.dim());
    auto h0 = induce_from_character(h, zero, 0);
    Matrix unit(h0.dim, 1);
    unit(0, 0) = 1;
    Matrix images(h0.dim, 0);
    std::vector<std::vector<Scalar>> cols;
    for (std::size_t w = 0; w < h.group().size(); ++w) {
        std::vector<HeckeElement> span{h.N(w)};
        for (std::size_t i = 0; i < h.dim(); ++i) span.push_back(h.multiply(h.N(w), h.x(i)));
        for (const auto &s : span) {
            for (const auto &[pos, y] : res.d[0]) {
                Matrix v = h0.element_matrix(h, h.multiply(s, y)) * unit;
                if (!v.is_zero()) out.augmentation_kills_image = false;
            }
        }
        cols.push_back((h0.element_matrix(h, h.N(w)) * unit).column_vector(0));
    }
    Matrix span(h0.dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < h0.dim; ++r) span(r, c) = cols[c][r];
    out.augmentation_onto = span.rank() == h0.dim;
    return out;
}

}  // namespace ghecke
