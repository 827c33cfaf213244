#pragma once

#include "ghecke/hecke_algebra.hpp"

namespace ghecke {

namespace detail {
inline int no_sign(std::size_t) { return 1; }
}  // namespace detail

/// m_z : H(z k) -> H(k), identity on the group part and r, x -> z x. For z = 0 this is the
/// surjection onto C[W x| Gamma, natural] (x) C[r].
inline HeckeElement scale_iso(const Scalar &z, const HeckeElement &a) {
    return a.transform([&](const Polynomial &p) { return p.scale(z, 1); }, detail::no_sign);
}

/// The algebra on which scale_iso(z, .) is defined when the target is `target`.
inline HeckeAlgebra scale_iso_source(const Scalar &z, const HeckeAlgebra &target) {
    return target.with(target.k().scaled(z));
}

/// Degree scaling: multiplies the graded-degree 2n part by z^n (x -> z x, r -> z r). An automorphism in
/// generic mode.
inline HeckeElement degree_scale(const Scalar &z, const HeckeElement &a) {
    return a.transform([&](const Polynomial &p) { return p.scale(z, z); }, detail::no_sign);
}

/// Iwahori-Matsumoto involution: N_w -> sgn(w) N_w, x -> -x, r -> r.
inline HeckeElement im_involution(const HeckeAlgebra &h, const HeckeElement &a) {
    return a.transform([](const Polynomial &p) { return p.scale(Scalar(-1), 1); },
                       [&](std::size_t g) { return h.group().element(g).sign; });
}

/// Sign involution: N_w -> sgn(w) N_w, x -> x, r -> -r. In r = 1 mode it lands in H(-k).
inline HeckeElement sgn_involution(const HeckeAlgebra &h, const HeckeElement &a) {
    return a.transform([](const Polynomial &p) { return p.scale(1, Scalar(-1)); },
                       [&](std::size_t g) { return h.group().element(g).sign; });
}

inline HeckeAlgebra sgn_target(const HeckeAlgebra &h) {
    if (h.mode() == Mode::r1) return h.with(h.k().scaled(-1));
    return h;
}

/// phi_eps : H(k) -> H(eps k), N_w -> eps(w) N_w.
inline HeckeElement phi_epsilon(const SignCharacter &eps, const HeckeElement &a) {
    return a.transform([](const Polynomial &p) { return p; }, [&](std::size_t g) { return eps(g); });
}

inline HeckeAlgebra phi_epsilon_target(const SignCharacter &eps, const HeckeAlgebra &h) {
    return h.with(eps.twist(h.group(), h.k()));
}

/// Quotient by r - 1: generic algebra -> r = 1 algebra with the same k.
inline HeckeElement specialize_r(const HeckeElement &a, const Scalar &value = 1) {
    return a.transform([&](const Polynomial &p) { return p.specialize_r(value); }, detail::no_sign);
}

inline HeckeAlgebra specialized_algebra(const HeckeAlgebra &h) {
    if (h.mode() != Mode::generic) throw InputError("specialization starts from the generic algebra");
    return h.with(h.k(), Mode::r1);
}

/// Top filtration part of an r = 1 element, to be read in the crossed product (k = 0).
inline HeckeElement leading_term(const HeckeElement &a) {
    int top = a.max_graded_degree();
    HeckeElement out(a.dim());
    for (const auto &[g, p] : a.terms()) {
        Polynomial lead(p.dim());
        for (const auto &[m, c] : p.terms())
            if (static_cast<int>(m.graded_degree()) == top) lead.add_term(m, c);
        out.add(g, lead);
    }
    return out;
}

inline HeckeAlgebra crossed_product(const HeckeAlgebra &h) {
    ParameterFunction zero = h.k().scaled(0);
    return h.with(zero, Mode::k0);
}

/// Power sums of all roots (even degrees up to max_degree) and the central coordinates; all are
/// W x| Gamma-invariant.
inline std::vector<std::pair<std::string, Polynomial>> root_power_sums(const HeckeAlgebra &h, unsigned max_degree) {
    std::vector<std::pair<std::string, Polynomial>> out;
    const auto &rs = h.roots();
    for (std::size_t j = rs.rank(); j < h.dim(); ++j)
        out.emplace_back("z" + std::to_string(j - rs.rank() + 1), Polynomial::variable(h.dim(), j));
    for (unsigned d = 2; d <= max_degree; d += 2) {
        Polynomial p(h.dim());
        for (std::size_t a = 0; a < rs.num_roots(); ++a) p += Polynomial::linear_form(rs.linear_form(a)).pow(d);
        if (!p.is_zero()) out.emplace_back("p" + std::to_string(d), p);
    }
    return out;
}

/// Average of ^g p over W x| Gamma.
inline Polynomial reynolds(const HeckeAlgebra &h, const Polynomial &p) {
    Polynomial sum(h.dim());
    for (std::size_t g = 0; g < h.group().size(); ++g) sum += h.act(g, p);
    return Scalar(mpq_class(1, static_cast<unsigned long>(h.group().size()))) * sum;
}

/// Exponent vectors of x-degree exactly `degree` in `dim` variables (r excluded).
inline std::vector<Monomial> monomials_of_degree(std::size_t dim, unsigned degree) {
    std::vector<Monomial> out;
    Monomial m;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
        if (var + 1 == dim) {
            m.exp[var] = static_cast<std::uint16_t>(left);
            out.push_back(m);
            m.exp[var] = 0;
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            m.exp[var] = static_cast<std::uint16_t>(e);
            rec(var + 1, left - e);
        }
        m.exp[var] = 0;
    };
    if (dim == 0) {
        if (degree == 0) out.push_back(m);
        return out;
    }
    rec(0, degree);
    return out;
}

/// Invariant polynomials up to polynomial degree `max_degree`: root power sums plus Reynolds images of
/// all monomials, with zero and repeated entries dropped.
inline std::vector<std::pair<std::string, Polynomial>> center_invariants(const HeckeAlgebra &h, unsigned max_degree) {
    auto out = root_power_sums(h, max_degree);
    auto names = h.variable_names();
    for (unsigned d = 1; d <= max_degree; ++d)
        for (const auto &m : monomials_of_degree(h.dim(), d)) {
            Polynomial p(h.dim());
            p.add_term(m, Scalar(1));
            Polynomial avg = reynolds(h, p);
            if (avg.is_zero()) continue;
            bool dup = false;
            for (const auto &[n, q] : out)
                if (q == avg) dup = true;
            if (!dup) out.emplace_back("R(" + p.to_string(names) + ")", avg);
        }
    return out;
}

}  // namespace ghecke
