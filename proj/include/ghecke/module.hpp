#pragma once

#include "ghecke/hecke_algebra.hpp"

#include <random>

namespace ghecke {

namespace detail {

using QPoly = std::vector<mpq_class>;  // low degree first

inline void trim(QPoly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline QPoly poly_rem(QPoly a, const QPoly &b) {
    trim(a);
    while (a.size() >= b.size()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline QPoly poly_quotient(QPoly a, const QPoly &b) {
    trim(a);
    if (a.size() < b.size()) return {};
    QPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size()) {
        mpq_class f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return q;
}

inline void make_monic(QPoly &a) {
    mpq_class l = a.back();
    for (auto &c : a) c /= l;
}

inline QPoly poly_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        make_monic(b);
        QPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) make_monic(a);
    return a;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    for (; e; e >>= 1, a = a * a % p)
        if (e & 1) r = r * a % p;
    return r;
}

/// Degree of gcd(a, b) over F_p (inputs reduced, low degree first).
inline std::size_t mod_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
    auto trim_mod = [](std::vector<std::uint64_t> &v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim_mod(a);
    trim_mod(b);
    while (!b.empty()) {
        std::uint64_t inv = mod_pow(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            std::uint64_t f = a.back() * inv % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - f * b[i] % p) % p;
            trim_mod(a);
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

inline mpz_class eval_mod(const std::vector<mpz_class> &h, const mpz_class &y, const mpz_class &m) {
    mpz_class acc = 0;
    for (std::size_t i = h.size(); i-- > 0;) {
        acc = acc * y + h[i];
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

/// Integer roots of a squarefree monic integer polynomial: simple roots modulo a prime p,
/// Hensel-lifted past twice the Cauchy bound, then checked exactly.
inline std::vector<mpz_class> integer_roots(const std::vector<mpz_class> &h) {
    std::size_t n = h.size() - 1;
    if (n == 0) return {};
    mpz_class bound = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (abs(h[i]) > bound) bound = abs(h[i]);
    bound += 1;
    std::vector<mpz_class> dh;
    for (std::size_t i = 1; i <= n; ++i) dh.push_back(h[i] * static_cast<unsigned long>(i));
    for (std::uint64_t p = 1009;; p += 2) {
        if (!is_prime(p)) continue;
        mpz_class pz = static_cast<unsigned long>(p);
        auto reduce = [&](const std::vector<mpz_class> &f) {
            std::vector<std::uint64_t> out;
            for (const auto &c : f) {
                mpz_class r;
                mpz_mod(r.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
                out.push_back(r.get_ui());
            }
            return out;
        };
        auto hp = reduce(h), dhp = reduce(dh);
        if (mod_gcd_degree(hp, dhp, p) != 0) continue;
        std::vector<mpz_class> roots;
        for (std::uint64_t y = 0; y < p; ++y) {
            std::uint64_t acc = 0;
            for (std::size_t i = hp.size(); i-- > 0;) acc = (acc * y + hp[i]) % p;
            if (acc != 0) continue;
            mpz_class r = static_cast<unsigned long>(y), m = pz;
            while (m <= 2 * bound) {
                m *= m;
                mpz_class fv = eval_mod(h, r, m), dv = eval_mod(dh, r, m), inv;
                if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t()) == 0) break;
                r = r - fv * inv;
                mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
            }
            if (r > m / 2) r -= m;
            mpz_class acc2 = 0;
            for (std::size_t i = h.size(); i-- > 0;) acc2 = acc2 * r + h[i];
            if (acc2 == 0) roots.push_back(r);
        }
        return roots;
    }
}

}  // namespace detail

/// Rational roots of a polynomial with rational coefficients (low degree first), with multiplicity.
/// The second member is the leftover factor, of degree 0 exactly when all roots are rational.
inline std::pair<std::vector<mpq_class>, std::vector<mpq_class>> rational_roots(std::vector<mpq_class> c) {
    detail::trim(c);
    std::vector<mpq_class> roots;
    if (c.size() <= 1) return {roots, c};
    detail::QPoly deriv;
    for (std::size_t i = 1; i < c.size(); ++i) deriv.push_back(c[i] * static_cast<unsigned long>(i));
    detail::QPoly g = detail::poly_quotient(c, detail::poly_gcd(c, deriv));
    // primitive integer multiple of the squarefree part, then y = a_n t makes it monic
    mpz_class l = 1;
    for (auto &x : g) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> gi;
    for (auto &x : g) gi.push_back(mpz_class(x * l));
    std::size_t n = gi.size() - 1;
    mpz_class an = gi.back();
    std::vector<mpz_class> h(n + 1);
    mpz_class pw = 1;
    for (std::size_t i = n; i-- > 0;) {
        h[i] = gi[i] * pw;
        pw *= an;
    }
    h[n] = 1;
    std::vector<mpq_class> candidates;
    for (const auto &y : detail::integer_roots(h)) {
        mpq_class t(y, an);
        t.canonicalize();
        candidates.push_back(t);
    }
    for (const auto &a : candidates) {
        for (;;) {
            detail::QPoly q(c.size() - 1);
            mpq_class acc = 0;
            for (std::size_t i = c.size(); i-- > 1;) {
                acc = acc * a + c[i];
                q[i - 1] = acc;
            }
            if (acc * a + c[0] != 0) break;
            c = std::move(q);
            roots.push_back(a);
            if (c.size() <= 1) break;
        }
    }
    std::sort(roots.begin(), roots.end());
    return {roots, c};
}

inline std::string univariate_to_string(const std::vector<Scalar> &c) {
    std::string s;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c[i].to_string() + ")";
        if (i) s += "*t^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

struct WeightDatum {
    std::vector<Scalar> weight;  // x_i(lambda)
    std::size_t multiplicity = 0;
    Matrix basis;  // columns span the generalized weight space
};

/// Matrices of x_1..x_d, N_{s_i}, N_{gamma_j} and the value of r.
struct FiniteDimModule {
    std::size_t dim = 0;
    std::vector<Matrix> x;
    std::vector<Matrix> s;
    std::vector<Matrix> gamma;
    Scalar r = 1;

    /// Matrix of N_g built along the stored words, divided by the cocycle factors accumulated on the way.
    Matrix group_matrix(const HeckeAlgebra &h, std::size_t g) const {
        const auto &grp = h.group();
        const auto &el = grp.element(g);
        Matrix m = Matrix::identity(dim);
        for (auto i : el.word) m = m * s[i];
        Matrix mg = Matrix::identity(dim);
        std::size_t cur = 0;
        Scalar factor = 1;
        for (auto j : el.gamma_word) {
            std::size_t gen = grp.gamma_generator(j);
            mg = mg * gamma[j];
            factor *= h.natural(cur, gen);
            cur = grp.multiply(cur, gen);
        }
        if (!factor.is_one()) mg = factor.inverse() * mg;
        return m * mg;
    }

    /// Action of a polynomial (r acts by the scalar r).
    Matrix poly_matrix(const Polynomial &p) const {
        Matrix out(dim, dim);
        for (const auto &[m, c] : p.terms()) {
            Matrix t = Matrix::scalar(dim, c);
            for (std::size_t v = 0; v < x.size(); ++v)
                if (m.exp[v]) t = t * x[v].power(m.exp[v]);
            if (m.exp[x.size()]) t = pow(r, m.exp[x.size()]) * t;
            out = out + t;
        }
        return out;
    }

    Matrix element_matrix(const HeckeAlgebra &h, const HeckeElement &a) const {
        Matrix out(dim, dim);
        for (const auto &[g, p] : a.terms()) out = out + group_matrix(h, g) * poly_matrix(p);
        return out;
    }

    /// Checks every defining relation; returns a description of the first failure.
    std::optional<std::string> validate(const HeckeAlgebra &h) const {
        const auto &grp = h.group();
        std::size_t d = h.dim();
        if (x.size() != d || s.size() != grp.rank() || gamma.size() != grp.gamma_generators().size())
            return "wrong number of generator matrices";
        auto sized = [&](const Matrix &m) { return m.rows() == dim && m.cols() == dim; };
        for (const auto *list : {&x, &s, &gamma})
            for (const auto &m : *list)
                if (!sized(m)) return "generator matrix has wrong size";
        if (h.mode() == Mode::r1 && !r.is_one()) return "r must act by 1 in the specialized algebra";
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (x[i] * x[j] != x[j] * x[i]) return "x" + std::to_string(i + 1) + " and x" + std::to_string(j + 1) + " do not commute";
        if (grp.size() <= 64) {
            std::vector<Matrix> n;
            for (std::size_t g = 0; g < grp.size(); ++g) n.push_back(group_matrix(h, g));
            for (std::size_t a = 0; a < grp.size(); ++a)
                for (std::size_t b = 0; b < grp.size(); ++b)
                    if (n[a] * n[b] != h.natural(a, b) * n[grp.multiply(a, b)])
                        return "twisted group law fails for (" + grp.element_name(a) + ", " + grp.element_name(b) + ")";
        } else {
            for (std::size_t i = 0; i < grp.rank(); ++i)
                if (s[i] * s[i] != Matrix::identity(dim)) return "N_s^2 != 1";
        }
        // x N_s = N_s (^s x) + c_s Delta_s(x), x N_gamma = N_gamma (^{gamma^-1} x)
        for (std::size_t i = 0; i < grp.rank(); ++i) {
            std::size_t sg = grp.simple_reflection(i);
            Scalar c = h.mode() == Mode::k0 ? Scalar(0) : h.k().simple(h.roots(), i) * r;
            for (std::size_t j = 0; j < d; ++j) {
                Polynomial xj = Polynomial::variable(d, j);
                Polynomial dm = h.demazure(h.roots().simple_root_index(i), xj);
                Matrix rhs = s[i] * poly_matrix(h.act(sg, xj)) + c * poly_matrix(dm);
                if (x[j] * s[i] != rhs) return "cross relation fails for x" + std::to_string(j + 1) + " and s" + std::to_string(i + 1);
            }
        }
        for (std::size_t g = 0; g < gamma.size(); ++g) {
            std::size_t ge = grp.gamma_generator(g);
            for (std::size_t j = 0; j < d; ++j) {
                Polynomial xj = Polynomial::variable(d, j);
                if (x[j] * gamma[g] != gamma[g] * poly_matrix(h.act(grp.inverse(ge), xj)))
                    return "cross relation fails for x" + std::to_string(j + 1) + " and g" + std::to_string(g + 1);
            }
        }
        return std::nullopt;
    }
};

/// ind_{O(t + C)}^H C_{lambda, r} on the basis N_w (x) 1, w in enumeration order.
inline FiniteDimModule induce_from_character(const HeckeAlgebra &h, const std::vector<Scalar> &lambda, const Scalar &r) {
    const auto &grp = h.group();
    if (lambda.size() != h.dim()) throw InputError("lambda has wrong dimension");
    std::size_t n = grp.size();
    Scalar rv = h.mode() == Mode::r1 ? Scalar(1) : r;
    FiniteDimModule v;
    v.dim = n;
    v.r = rv;
    for (std::size_t i = 0; i < h.dim(); ++i) {
        Matrix m(n, n);
        Polynomial xi = Polynomial::variable(h.dim(), i);
        for (std::size_t w = 0; w < n; ++w) {
            HeckeElement col = h.straighten(xi, w);
            for (const auto &[y, p] : col.terms()) m(y, w) += p.evaluate(lambda, rv);
        }
        v.x.push_back(std::move(m));
    }
    auto left = [&](std::size_t g) {
        Matrix m(n, n);
        for (std::size_t w = 0; w < n; ++w) m(grp.multiply(g, w), w) = h.natural(g, w);
        return m;
    };
    for (std::size_t i = 0; i < grp.rank(); ++i) v.s.push_back(left(grp.simple_reflection(i)));
    for (std::size_t j = 0; j < grp.gamma_generators().size(); ++j) v.gamma.push_back(left(grp.gamma_generator(j)));
    return v;
}

/// One-dimensional module x_i -> weight[i], N_s -> signs, N_gamma -> gamma_values.
inline FiniteDimModule character_module(const std::vector<Scalar> &weight, const std::vector<int> &signs,
                                        const std::vector<Scalar> &gamma_values, const Scalar &r) {
    FiniteDimModule v;
    v.dim = 1;
    v.r = r;
    for (const auto &w : weight) v.x.push_back(Matrix::scalar(1, w));
    for (int e : signs) v.s.push_back(Matrix::scalar(1, e));
    for (const auto &g : gamma_values) v.gamma.push_back(Matrix::scalar(1, g));
    return v;
}

/// Pull back along phi_eps^{-1}: a module over H(k) becomes a module over H(eps k).
inline FiniteDimModule transport_phi_epsilon(const FiniteDimModule &v, const SignCharacter &eps) {
    FiniteDimModule out = v;
    for (std::size_t i = 0; i < out.s.size(); ++i) out.s[i] = Scalar(eps.simple_sign[i]) * out.s[i];
    return out;
}

/// Joint generalized eigenspaces of the commuting x-matrices; weights must be rational.
inline std::vector<WeightDatum> weight_decomposition(const FiniteDimModule &v) {
    std::vector<WeightDatum> current{{{}, v.dim, Matrix::identity(v.dim)}};
    for (std::size_t i = 0; i < v.x.size(); ++i) {
        std::vector<WeightDatum> next;
        for (auto &piece : current) {
            const Matrix &b = piece.basis;
            std::size_t m = b.cols();
            auto coords = b.solve(v.x[i] * b);
            if (!coords) throw Error("weight space is not invariant; x-matrices do not commute");
            const Matrix &xm = *coords;
            auto cp = xm.characteristic_polynomial();
            std::vector<mpq_class> q;
            for (const auto &c : cp) {
                if (!c.is_rational()) throw Error("weight outside the rationals: characteristic polynomial " + univariate_to_string(cp));
                q.push_back(c.rational());
            }
            auto [roots, rest] = rational_roots(q);
            if (rest.size() > 1)
                throw Error("weight outside the rationals: characteristic polynomial " + univariate_to_string(cp));
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            for (const auto &mu : roots) {
                Matrix shifted = xm - Matrix::scalar(m, Scalar(mu));
                Matrix ker = shifted.power(static_cast<unsigned>(m)).nullspace();
                WeightDatum d;
                d.weight = piece.weight;
                d.weight.push_back(Scalar(mu));
                d.basis = b * ker;
                d.multiplicity = ker.cols();
                next.push_back(std::move(d));
            }
        }
        current = std::move(next);
    }
    if (v.x.empty())
        for (auto &c : current) c.multiplicity = v.dim;
    std::sort(current.begin(), current.end(), [](const WeightDatum &a, const WeightDatum &b) {
        for (std::size_t i = 0; i < a.weight.size(); ++i)
            if (a.weight[i] != b.weight[i]) return a.weight[i].rational() < b.weight[i].rational();
        return false;
    });
    return current;
}

inline ConeMembership weight_cone(const RootSystem &rs, const std::vector<Scalar> &w) {
    std::vector<mpq_class> re;
    for (const auto &c : w) re.push_back(c.rational());
    return rs.cone_membership(re);
}

/// Wt(V) in a^- (+ i a): real parts in the closed obtuse negative cone, no central real part.
inline bool is_tempered(const RootSystem &rs, const std::vector<WeightDatum> &wts) {
    for (const auto &w : wts) {
        auto c = weight_cone(rs, w.weight);
        if (!c.closed || !c.central_zero) return false;
    }
    return true;
}

/// Wt(V) in a^-- + (z cap a) + i a.
inline bool is_essentially_discrete_series(const RootSystem &rs, const std::vector<WeightDatum> &wts) {
    for (const auto &w : wts)
        if (!weight_cone(rs, w.weight).open) return false;
    return true;
}

/// Irreducible characters of C[W x| Gamma, natural], computed from the center.
struct CharacterTable {
    std::vector<std::string> names;
    std::vector<std::size_t> degree;
    std::vector<std::vector<Scalar>> value;      // value[chi][g] = chi(N_g)
    std::vector<std::vector<Scalar>> idempotent;  // coefficient of N_g in e_chi
};

inline CharacterTable character_table(const HeckeAlgebra &h, std::size_t cap = 48) {
    const auto &grp = h.group();
    std::size_t n = grp.size();
    if (n > cap) throw InputError("group too large for the character table (cap " + std::to_string(cap) + ")");
    // left regular representation
    auto left = [&](std::size_t g) {
        Matrix m(n, n);
        for (std::size_t w = 0; w < n; ++w) m(grp.multiply(g, w), w) = h.natural(g, w);
        return m;
    };
    auto right = [&](std::size_t g) {
        Matrix m(n, n);
        for (std::size_t w = 0; w < n; ++w) m(grp.multiply(w, g), w) = h.natural(w, g);
        return m;
    };
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < grp.rank(); ++i) gens.push_back(grp.simple_reflection(i));
    for (std::size_t j = 0; j < grp.gamma_generators().size(); ++j) gens.push_back(grp.gamma_generator(j));
    // z central iff L_g z = R_g z for all generators
    Matrix eqs(n * gens.size(), n);
    for (std::size_t t = 0; t < gens.size(); ++t) {
        Matrix d = left(gens[t]) - right(gens[t]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) eqs(t * n + i, j) = d(i, j);
    }
    Matrix center = eqs.nullspace();
    std::size_t m = center.cols();
    auto mult_vec = [&](const std::vector<Scalar> &a, const std::vector<Scalar> &b) {
        std::vector<Scalar> out(n);
        for (std::size_t x = 0; x < n; ++x) {
            if (a[x].is_zero()) continue;
            for (std::size_t y = 0; y < n; ++y)
                if (!b[y].is_zero()) out[grp.multiply(x, y)] += a[x] * b[y] * h.natural(x, y);
        }
        return out;
    };
    std::mt19937 rng(12345);
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<Scalar> z(n);
        for (std::size_t c = 0; c < m; ++c) {
            Scalar coef(static_cast<long>(rng() % 19) - 9);
            for (std::size_t g = 0; g < n; ++g) z[g] += coef * center(g, c);
        }
        // matrix of multiplication by z on the center basis
        std::vector<std::vector<Scalar>> basis;
        for (std::size_t c = 0; c < m; ++c) basis.push_back(center.column_vector(c));
        Matrix mz(m, m);
        for (std::size_t c = 0; c < m; ++c) {
            auto prod = mult_vec(z, basis[c]);
            auto coords = center.solve(Matrix::column(prod));
            if (!coords) throw Error("center is not closed under multiplication");
            for (std::size_t r = 0; r < m; ++r) mz(r, c) = (*coords)(r, 0);
        }
        auto cp = mz.characteristic_polynomial();
        std::vector<mpq_class> q;
        bool rational = true;
        for (const auto &c : cp) {
            if (!c.is_rational()) rational = false;
            else q.push_back(c.rational());
        }
        if (!rational) throw InputError("character table needs a field beyond the rationals");
        auto [roots, rest] = rational_roots(q);
        if (rest.size() > 1) throw InputError("character table needs a field beyond the rationals");
        auto distinct = roots;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() != m) continue;
        CharacterTable tab;
        std::vector<Scalar> unit(n);
        unit[0] = 1;
        for (const auto &mu : distinct) {
            // e = prod_{nu != mu} (z - nu) / (mu - nu)
            std::vector<Scalar> e = unit;
            for (const auto &nu : distinct) {
                if (nu == mu) continue;
                auto ze = mult_vec(z, e);
                Scalar inv = Scalar(mpq_class(mu - nu)).inverse();
                for (std::size_t g = 0; g < n; ++g) e[g] = (ze[g] - Scalar(nu) * e[g]) * inv;
            }
            Scalar d2 = Scalar(static_cast<long>(n)) * e[0];
            if (!d2.is_rational() || d2.rational().get_den() != 1) throw Error("character degree is not integral");
            mpz_class sq = sqrt(d2.rational().get_num());
            if (sq * sq != d2.rational().get_num()) throw Error("character degree squared is not a square");
            std::size_t deg = sq.get_ui();
            std::vector<Scalar> val(n);
            for (std::size_t hh = 0; hh < n; ++hh) {
                std::size_t g = grp.inverse(hh);
                val[hh] = Scalar(static_cast<long>(n)) * h.natural(g, hh) * e[g] / Scalar(static_cast<long>(deg));
            }
            tab.degree.push_back(deg);
            tab.value.push_back(std::move(val));
            tab.idempotent.push_back(std::move(e));
        }
        // order: degree, then trivial and sign first, then by values
        std::vector<std::size_t> order(tab.degree.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        auto is_sign = [&](std::size_t c, bool sgn) {
            for (std::size_t g = 0; g < n; ++g)
                if (tab.value[c][g] != Scalar(sgn ? grp.element(g).sign : 1)) return false;
            return true;
        };
        auto rank_of = [&](std::size_t c) { return is_sign(c, false) ? 0 : is_sign(c, true) ? 1 : 2; };
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (tab.degree[a] != tab.degree[b]) return tab.degree[a] < tab.degree[b];
            if (rank_of(a) != rank_of(b)) return rank_of(a) < rank_of(b);
            for (std::size_t g = 0; g < n; ++g)
                if (tab.value[a][g] != tab.value[b][g]) return tab.value[a][g].to_string() < tab.value[b][g].to_string();
            return false;
        });
        CharacterTable sorted;
        std::map<std::size_t, std::size_t> count;
        for (auto c : order) {
            std::string name = rank_of(c) == 0 ? "triv" : rank_of(c) == 1 ? "sgn" : "";
            if (name.empty()) name = "chi" + std::to_string(tab.degree[c]) + "_" + std::to_string(++count[tab.degree[c]]);
            sorted.names.push_back(name);
            sorted.degree.push_back(tab.degree[c]);
            sorted.value.push_back(tab.value[c]);
            sorted.idempotent.push_back(tab.idempotent[c]);
        }
        return sorted;
    }
    throw Error("could not separate the irreducible characters");
}

/// Multiplicity of each irreducible of the twisted group algebra in V.
inline std::vector<std::size_t> restrict_to_group_algebra(const HeckeAlgebra &h, const CharacterTable &tab,
                                                          const FiniteDimModule &v) {
    std::vector<Matrix> n;
    for (std::size_t g = 0; g < h.group().size(); ++g) n.push_back(v.group_matrix(h, g));
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < tab.names.size(); ++c) {
        Scalar tr;
        for (std::size_t g = 0; g < n.size(); ++g)
            if (!tab.idempotent[c][g].is_zero()) tr += tab.idempotent[c][g] * n[g].trace();
        Scalar mult = tr / Scalar(static_cast<long>(tab.degree[c]));
        if (!mult.is_rational() || mult.rational().get_den() != 1 || mult.sign() < 0)
            throw Error("non-integral multiplicity in restriction");
        out.push_back(mult.rational().get_num().get_ui());
    }
    return out;
}

}  // namespace ghecke
