#pragma once

#include "ghecke/homology.hpp"
#include "ghecke/isomorphisms.hpp"
#include "ghecke/module.hpp"

#include <chrono>
#include <random>

namespace ghecke {

/// Deterministic random elements, polynomials and points.
class Sampler {
  public:
    Sampler(const HeckeAlgebra &h, std::uint64_t seed) : h_(h), rng_(seed) {}

    std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    long coefficient() {
        long c = static_cast<long>(uniform(6)) - 3;
        return c >= 0 ? c + 1 : c;
    }

    Scalar rational(long span = 5) {
        long num = static_cast<long>(uniform(static_cast<std::size_t>(2 * span + 1))) - span;
        long den = static_cast<long>(uniform(3)) + 1;
        return Scalar(num, den);
    }

    /// Monomial of total degree d in the x's, and in r as well when r is a free variable.
    Monomial monomial(unsigned d) {
        std::size_t vars = h_.dim() + (h_.mode() == Mode::r1 ? 0 : 1);
        Monomial m;
        if (vars == 0) return m;
        for (unsigned i = 0; i < d; ++i) m.exp[uniform(vars)] += 1;
        return m;
    }

    Polynomial homogeneous_poly(unsigned d, std::size_t terms) {
        Polynomial p(h_.dim());
        for (std::size_t t = 0; t < terms; ++t) p.add_term(monomial(d), Scalar(coefficient()));
        return p;
    }

    /// Sum of `terms` terms N_g p with p homogeneous of polynomial degree d.
    HeckeElement homogeneous(unsigned d, std::size_t terms = 3) {
        HeckeElement e(h_.dim());
        for (std::size_t t = 0; t < terms; ++t) e.add(uniform(h_.group().size()), homogeneous_poly(d, 1));
        return e;
    }

    HeckeElement mixed(unsigned max_degree, std::size_t terms = 3) {
        HeckeElement e(h_.dim());
        for (std::size_t t = 0; t < terms; ++t)
            e.add(uniform(h_.group().size()), homogeneous_poly(static_cast<unsigned>(uniform(max_degree + 1)), 1));
        return e;
    }

    /// Rational point with trivial stabilizer in W x| Gamma.
    std::vector<Scalar> regular_point() {
        for (;;) {
            std::vector<Scalar> p;
            for (std::size_t i = 0; i < h_.dim(); ++i) p.push_back(rational(7));
            if (is_regular(h_.group(), p)) return p;
        }
    }

  private:
    const HeckeAlgebra &h_;
    std::mt19937_64 rng_;
};

/// Module and homology suites work with dense |W x| Gamma|-dimensional matrices.
inline constexpr std::size_t kModuleSuiteCap = 200;

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::size_t cases = 0;
    std::string witness;
    double seconds = 0;
    bool skipped = false;

    void skip(const std::string &why) {
        skipped = true;
        witness = why;
    }

    void fail(const std::string &w) {
        if (pass) witness = w;
        pass = false;
    }
};

namespace detail {

template <class F>
SuiteResult timed(const std::string &name, F &&body) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    r.name = name;
    try {
        body(r);
    } catch (const Error &e) {
        r.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace detail

/// (ab)c = a(bc) on random homogeneous triples; in generic mode also deg(ab) = deg a + deg b.
inline SuiteResult suite_associativity(const HeckeAlgebra &h, std::size_t cases, std::uint64_t seed,
                                       unsigned max_degree = 2) {
    return detail::timed("associativity", [&](SuiteResult &r) {
        Sampler s(h, seed);
        for (std::size_t i = 0; i < cases && r.pass; ++i) {
            unsigned da = static_cast<unsigned>(s.uniform(max_degree + 1));
            unsigned db = static_cast<unsigned>(s.uniform(max_degree + 1));
            unsigned dc = static_cast<unsigned>(s.uniform(max_degree + 1));
            auto a = s.homogeneous(da), b = s.homogeneous(db), c = s.homogeneous(dc);
            auto ab = h.multiply(a, b);
            if (h.multiply(ab, c) != h.multiply(a, h.multiply(b, c)))
                r.fail("(ab)c != a(bc) for a = " + h.to_string(a) + ", b = " + h.to_string(b) + ", c = " + h.to_string(c));
            if (h.mode() != Mode::r1 && !ab.is_zero() && h.graded_degree(ab) != static_cast<int>(2 * (da + db)))
                r.fail("product is not homogeneous of the expected degree: " + h.to_string(ab));
            ++r.cases;
        }
    });
}

/// x_j N_{s_i} = N_{s_i} (s_i x_j) + k_i r c with x_j - s_i x_j = c alpha_i, from the root datum alone.
inline SuiteResult suite_braid(const HeckeAlgebra &h) {
    return detail::timed("braid relation", [&](SuiteResult &r) {
        const auto &rs = h.roots();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            IntMatrix s = rs.simple_reflection(i);
            Scalar ki = h.k().simple(rs, i);
            for (std::size_t j = 0; j < h.dim(); ++j) {
                Polynomial sx(h.dim());
                for (std::size_t l = 0; l < h.dim(); ++l)
                    sx.add_term(Polynomial::unit(l), Scalar(static_cast<long>(s(l, j))));
                // x_j - s x_j is a multiple of alpha_i = x_i
                Polynomial diff = Polynomial::variable(h.dim(), j) - sx;
                Scalar c = diff.coefficient(Polynomial::unit(i));
                if (diff != c * Polynomial::variable(h.dim(), i)) {
                    r.fail("x_j - s x_j is not a multiple of alpha_i");
                    return;
                }
                HeckeElement expect = h.N(h.group().simple_reflection(i), sx);
                if (h.mode() == Mode::generic) expect += h.poly(ki * c * Polynomial::r(h.dim()));
                if (h.mode() == Mode::r1) expect += h.scalar(ki * c);
                auto got = h.multiply(h.x(j), h.N(h.group().simple_reflection(i)));
                if (got != expect)
                    r.fail("x" + std::to_string(j + 1) + " N[s" + std::to_string(i + 1) + "] = " + h.to_string(got) +
                           ", expected " + h.to_string(expect));
                ++r.cases;
            }
        }
    });
}

/// Invariant polynomials up to degree `max_degree` are central in the r = 1 algebra; alpha_1 is not.
inline SuiteResult suite_center(const HeckeAlgebra &h, unsigned max_degree = 4) {
    return detail::timed("center", [&](SuiteResult &r) {
        HeckeAlgebra h1 = h.mode() == Mode::r1 ? h : h.with(h.k(), Mode::r1);
        for (const auto &[name, p] : center_invariants(h1, max_degree)) {
            if (auto w = h1.central_witness(h1.poly(p))) r.fail(name + " does not commute with " + *w);
            ++r.cases;
        }
        if (h1.roots().rank() > 0) {
            auto w = h1.central_witness(h1.x(0));
            if (!w) r.fail("alpha_1 is central");
            ++r.cases;
        }
    });
}

/// m_z m_{1/z} = id, IM^2 = id, sgn^2 = id, and each map is multiplicative, on random pairs.
inline SuiteResult suite_isomorphisms(const HeckeAlgebra &h, std::size_t cases, std::uint64_t seed) {
    return detail::timed("isomorphisms", [&](SuiteResult &r) {
        Sampler s(h, seed);
        Scalar z = Scalar(3, 2);
        HeckeAlgebra hz = scale_iso_source(z, h);  // m_{1/z} : H(k) -> H(z k)
        HeckeAlgebra hs = sgn_target(h);
        auto eps = epsilon_characters(h.group());
        std::vector<HeckeAlgebra> eps_targets;
        for (const auto &e : eps) eps_targets.push_back(phi_epsilon_target(e, h));
        for (std::size_t i = 0; i < cases && r.pass; ++i) {
            auto a = s.mixed(2), b = s.mixed(2);
            if (scale_iso(z, scale_iso(z.inverse(), a)) != a) r.fail("m_z m_{1/z} != id on " + h.to_string(a));
            if (scale_iso(z.inverse(), h.multiply(a, b)) != hz.multiply(scale_iso(z.inverse(), a), scale_iso(z.inverse(), b)))
                r.fail("m_{1/z} is not multiplicative");
            if (im_involution(h, im_involution(h, a)) != a) r.fail("IM^2 != id on " + h.to_string(a));
            if (im_involution(h, h.multiply(a, b)) != h.multiply(im_involution(h, a), im_involution(h, b)))
                r.fail("IM is not multiplicative on " + h.to_string(a) + ", " + h.to_string(b));
            if (sgn_involution(h, sgn_involution(h, a)) != a) r.fail("sgn^2 != id on " + h.to_string(a));
            if (sgn_involution(h, h.multiply(a, b)) != hs.multiply(sgn_involution(h, a), sgn_involution(h, b)))
                r.fail("sgn is not multiplicative on " + h.to_string(a) + ", " + h.to_string(b));
            for (std::size_t e = 0; e < eps.size(); ++e)
                if (phi_epsilon(eps[e], h.multiply(a, b)) !=
                    eps_targets[e].multiply(phi_epsilon(eps[e], a), phi_epsilon(eps[e], b)))
                    r.fail("phi_" + eps[e].name + " is not multiplicative");
            ++r.cases;
        }
    });
}

/// Lemma-1.4 positivization: eps k >= 0 and phi_eps : H(k) -> H(eps k) multiplicative.
inline SuiteResult suite_positivization(const HeckeAlgebra &h, std::size_t cases, std::uint64_t seed) {
    return detail::timed("positivization", [&](SuiteResult &r) {
        auto eps = positivizing_character(h.group(), h.k());
        HeckeAlgebra target = phi_epsilon_target(eps, h);
        for (std::size_t a = 0; a < h.roots().num_roots(); ++a) {
            const Scalar &v = target.k()(a);
            if (!v.is_rational() || v.sign() < 0) r.fail("eps k is negative on a root");
        }
        Sampler s(h, seed);
        for (std::size_t i = 0; i < cases && r.pass; ++i) {
            auto a = s.mixed(2), b = s.mixed(2);
            if (phi_epsilon(eps, h.multiply(a, b)) != target.multiply(phi_epsilon(eps, a), phi_epsilon(eps, b)))
                r.fail("phi_eps is not multiplicative on " + h.to_string(a) + ", " + h.to_string(b));
            ++r.cases;
        }
    });
}

/// lt(ab) = lt(a) lt(b) in the crossed product whenever the right side is nonzero.
inline SuiteResult suite_leading_term(const HeckeAlgebra &h, std::size_t cases, std::uint64_t seed) {
    return detail::timed("associated graded", [&](SuiteResult &r) {
        HeckeAlgebra h1 = h.mode() == Mode::r1 ? h : h.with(h.k(), Mode::r1);
        HeckeAlgebra h0 = crossed_product(h).with(h.k().scaled(0), Mode::r1);
        Sampler s(h1, seed);
        std::size_t attempts = 0;
        while (r.cases < cases && r.pass && attempts++ < 20 * cases) {
            auto a = s.mixed(2), b = s.mixed(2);
            if (a.is_zero() || b.is_zero()) continue;
            auto rhs = h0.multiply(leading_term(a), leading_term(b));
            if (rhs.is_zero()) continue;
            if (leading_term(h1.multiply(a, b)) != rhs)
                r.fail("lt(ab) != lt(a) lt(b) for a = " + h1.to_string(a) + ", b = " + h1.to_string(b));
            ++r.cases;
        }
        if (r.cases < cases) r.fail("too few pairs without cancellation");
    });
}

inline std::string point_text(const std::vector<Scalar> &p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
    return s + ")";
}

/// Orbit of a point with multiplicity, keyed by the printed coordinates.
inline std::multiset<std::string> orbit_multiset(const ExtendedWeylGroup &g, const std::vector<Scalar> &p) {
    std::multiset<std::string> out;
    for (std::size_t w = 0; w < g.size(); ++w) out.insert(point_text(g.act_on_point(w, p)));
    return out;
}

/// Induced modules at random regular lambda: relations hold and the weights are exactly the orbit of lambda.
/// With a character table, also Res(ind) = regular representation.
inline SuiteResult suite_induced_modules(const HeckeAlgebra &h, std::size_t cases, std::uint64_t seed) {
    return detail::timed("induced modules", [&](SuiteResult &r) {
        if (h.group().size() > kModuleSuiteCap) return r.skip("|W x| Gamma| above " + std::to_string(kModuleSuiteCap));
        Sampler s(h, seed);
        std::optional<CharacterTable> tab;
        if (h.group().size() <= 48) {
            try {
                tab = character_table(h);
            } catch (const InputError &) {
                // characters outside the rationals: skip the restriction check
            }
        }
        for (std::size_t i = 0; i < cases && r.pass; ++i) {
            auto lambda = s.regular_point();
            auto v = induce_from_character(h, lambda, 1);
            if (auto e = v.validate(h)) r.fail("induced module fails: " + *e);
            std::multiset<std::string> wts;
            for (const auto &w : weight_decomposition(v))
                for (std::size_t m = 0; m < w.multiplicity; ++m) wts.insert(point_text(w.weight));
            if (wts != orbit_multiset(h.group(), lambda)) r.fail("weights differ from the orbit of lambda");
            if (tab) {
                auto res = restrict_to_group_algebra(h, *tab, v);
                for (std::size_t c = 0; c < res.size(); ++c)
                    if (res[c] != tab->degree[c]) r.fail("Res(ind) is not the regular representation");
            }
            ++r.cases;
        }
    });
}

/// Ext of induced modules at regular lambda, the Koszul dual and the resolution of H_0.
inline SuiteResult suite_homology(const HeckeAlgebra &h, std::size_t cases, std::uint64_t seed) {
    return detail::timed("homology", [&](SuiteResult &r) {
        if (h.group().size() > kModuleSuiteCap) return r.skip("|W x| Gamma| above " + std::to_string(kModuleSuiteCap));
        HeckeAlgebra hg = h.mode() == Mode::r1 ? h.with(h.k(), Mode::generic) : h;
        Sampler s(hg, seed);
        std::size_t n = hg.dim() + 1;
        for (std::size_t i = 0; i < cases && r.pass; ++i) {
            auto lambda = s.regular_point();
            auto ext = ext_self_induced(hg, lambda, 1);
            for (std::size_t p = 0; p <= n + 1; ++p)
                if (ext.at(p) != binomial(n, p)) r.fail("Ext^" + std::to_string(p) + " has the wrong dimension");
            ++r.cases;
        }
        auto [dims, vanish] = koszul_dual_dims(hg);
        if (!vanish) r.fail("Hom(P, H_0) has a nonzero differential");
        for (std::size_t p = 0; p < dims.size(); ++p)
            if (dims[p] != binomial(n, p) * hg.group().size()) r.fail("Koszul dual has the wrong graded dimension");
        ++r.cases;
        auto chk = check_resolution(hg, projective_resolution_H0(hg));
        if (!chk.square_zero) r.fail("d^2 != 0 in the resolution of H_0");
        if (!chk.entries_degree_two) r.fail("resolution differential not of degree 2");
        if (!chk.augmentation_kills_image || !chk.augmentation_onto) r.fail("augmentation is not exact");
        ++r.cases;
    });
}

struct VerifyConfig {
    std::uint64_t seed = 1;
    std::size_t cases = 100;
};

inline std::vector<SuiteResult> verify_all(const HeckeAlgebra &h, const VerifyConfig &cfg) {
    std::vector<SuiteResult> out;
    out.push_back(suite_associativity(h, cfg.cases, cfg.seed));
    out.push_back(suite_braid(h));
    out.push_back(suite_center(h));
    out.push_back(suite_isomorphisms(h, cfg.cases, cfg.seed + 1));
    out.push_back(suite_positivization(h, cfg.cases, cfg.seed + 2));
    out.push_back(suite_leading_term(h, cfg.cases, cfg.seed + 3));
    out.push_back(suite_induced_modules(h, std::min<std::size_t>(cfg.cases, 10), cfg.seed + 4));
    out.push_back(suite_homology(h, std::min<std::size_t>(cfg.cases, 3), cfg.seed + 5));
    return out;
}

}  // namespace ghecke
