#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace ghecke;
using testing_support::Gen;
using testing_support::make;
using testing_support::random_element;

namespace {

/// s_i on polynomials in the simple-root coordinates x_j = alpha_j, from the pairing alone:
/// s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i.
Polynomial reflect_by_pairing(const HeckeAlgebra &h, std::size_t i, const Polynomial &p) {
    const auto &rs = h.roots();
    const auto &ai = rs.roots()[rs.simple_root_index(i)];
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < h.dim(); ++j) {
        Polynomial img = Polynomial::variable(h.dim(), j);
        if (j < rs.rank()) {
            const auto &aj = rs.roots()[rs.simple_root_index(j)];
            img -= Scalar(rs.pairing(aj, ai)) * Polynomial::variable(h.dim(), i);
        }
        images.push_back(img);
    }
    return p.substitute(images, Polynomial::r(h.dim()));
}

}  // namespace

TEST(HeckeA1, BraidRelationMatchesTheWorkedExample) {
    // x N_s = N_s (-x) + 2 k r with x = alpha in rank one
    for (const char *k : {"1", "2", "-1/2", "0", "7/3"}) {
        auto h = make("A1", {k});
        HeckeElement want = h.N(1, -Polynomial::variable(1, 0));
        want += h.N(0, Scalar(2) * Scalar::parse(k) * Polynomial::r(1));
        EXPECT_EQ(parse_element(h, "x * N[s]"), want) << k;
        EXPECT_EQ(parse_element(h, "N[s] * N[s]"), h.one());
    }
    auto h = make("A1", {"1"});
    EXPECT_EQ(h.to_string(parse_element(h, "x * N[s]")), "N[e]*(2*r) + N[s]*(-x)");
}

TEST(HeckeA1, ModesChangeTheCorrectionTerm) {
    auto r1 = make("A1", {"1"}, Mode::r1);
    EXPECT_EQ(r1.to_string(parse_element(r1, "x*N[s]")), "N[e]*(2) + N[s]*(-x)");
    auto k0 = make("A1", {"0"}, Mode::k0);
    EXPECT_EQ(k0.to_string(parse_element(k0, "x*N[s]")), "N[s]*(-x)");
    EXPECT_THROW(make("A1", {"1"}, Mode::k0), InputError);
}

TEST(HeckeProperty, BraidRelationAgainstAnIndependentReflection) {
    Gen gen(31);
    for (auto [name, k] : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"A2", {"1"}}, {"B2", {"3", "-2"}}, {"G2", {"1/2", "2"}}, {"A1xA1", {"1", "5"}}}) {
        auto h = make(name, k);
        const auto &rs = h.roots();
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            Polynomial alpha = Polynomial::linear_form(rs.linear_form(rs.simple_root_index(i)));
            std::size_t s = h.group().simple_reflection(i);
            for (int t = 0; t < 10; ++t) {
                Polynomial p = gen.polynomial(h.dim(), 3, 3);
                Polynomial sp = reflect_by_pairing(h, i, p);
                // p N_s - N_s (s p) = k_i r (p - s p) / alpha_i
                HeckeElement lhs = h.multiply(h.N(0, p), h.N(s)) - h.N(s, sp);
                Polynomial corr = Scalar(0) * p;
                if (!(p - sp).is_zero())
                    corr = h.k().simple(rs, i) * Polynomial::r(h.dim()) * (p - sp).divide_exact_linear(alpha);
                EXPECT_EQ(lhs, h.N(0, corr)) << name << " s" << i + 1;
            }
        }
    }
}

TEST(HeckeProperty, Associativity) {
    Gen gen(32);
    for (auto name : {"A1", "A2", "B2", "A1Z1", "A1xA1swap", "A2flip-sign", "A2flip-i"}) {
        auto h = make(name, {"1/2"});
        for (int t = 0; t < 12; ++t) {
            auto a = random_element(h, gen, 2, 2), b = random_element(h, gen, 2, 2), c = random_element(h, gen, 2, 2);
            ASSERT_EQ(h.multiply(h.multiply(a, b), c), h.multiply(a, h.multiply(b, c))) << name;
        }
    }
}

TEST(HeckeProperty, DistributivityAndUnit) {
    Gen gen(33);
    auto h = make("B2", {"2", "1"});
    for (int t = 0; t < 15; ++t) {
        auto a = random_element(h, gen, 2, 2), b = random_element(h, gen, 2, 2), c = random_element(h, gen, 2, 2);
        EXPECT_EQ(h.multiply(a, b + c), h.multiply(a, b) + h.multiply(a, c));
        EXPECT_EQ(h.multiply(h.one(), a), a);
        EXPECT_EQ(h.multiply(a, h.one()), a);
    }
}

TEST(HeckeProperty, GenericProductsAreGraded) {
    Gen gen(34);
    auto h = make("G2", {"1", "3"});
    for (int t = 0; t < 15; ++t) {
        auto g1 = static_cast<std::size_t>(gen.integer(0, 11)), g2 = static_cast<std::size_t>(gen.integer(0, 11));
        Polynomial p = Polynomial::variable(2, gen.integer(0, 1)) * Polynomial::r(2);
        Polynomial q = Polynomial::variable(2, gen.integer(0, 1)).pow(2);
        auto prod = h.multiply(h.N(g1, p), h.N(g2, q));
        EXPECT_EQ(h.graded_degree(prod), std::optional<int>(8));
    }
}

TEST(HeckeProperty, CocycleTwistsGroupProducts) {
    auto h = make("A2flip-i");
    std::size_t g = h.group().gamma_generator(0);
    EXPECT_EQ(h.multiply(h.N(g), h.N(g)), Scalar::root_of_unity(1, 4) * h.one());
    // N_gamma x N_gamma^{-1} = gamma(x)
    auto lhs = h.multiply(h.multiply(h.N(g), h.x(0)), Scalar::root_of_unity(-1, 4) * h.N(g));
    EXPECT_EQ(lhs, h.x(1));
}

TEST(Center, InvariantsAreCentralAndRootsAreNot) {
    for (auto name : {"A1", "A2", "B2", "A2flip", "A1Z1"}) {
        auto h = make(name, {"1"}, Mode::r1);
        auto inv = center_invariants(h, 4);
        EXPECT_FALSE(inv.empty());
        for (const auto &[label, p] : inv) EXPECT_FALSE(h.central_witness(h.N(0, p))) << name << " " << label;
        auto w = h.central_witness(h.x(0));
        ASSERT_TRUE(w) << name;
        EXPECT_EQ(w->rfind("N[", 0), 0u) << *w;
    }
    // the central coordinate of A1Z1 is central, its root coordinate is not
    auto z = make("A1Z1", {"1"}, Mode::r1);
    EXPECT_TRUE(z.is_central(z.x(1)));
}

TEST(Isomorphisms, IMandSgnAndPhiEpsilonAreHomomorphisms) {
    Gen gen(35);
    for (auto [name, k] : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"A2", {"1"}}, {"B2", {"1", "2"}}, {"A2flip-sign", {"1"}}}) {
        auto h = make(name, k);
        auto sg = sgn_target(h);
        for (int t = 0; t < 10; ++t) {
            auto a = random_element(h, gen, 2, 2), b = random_element(h, gen, 2, 2);
            auto ab = h.multiply(a, b);
            EXPECT_EQ(im_involution(h, ab), h.multiply(im_involution(h, a), im_involution(h, b))) << name;
            EXPECT_EQ(im_involution(h, im_involution(h, a)), a);
            EXPECT_EQ(sgn_involution(h, ab), sg.multiply(sgn_involution(h, a), sgn_involution(h, b))) << name;
            for (const auto &eps : epsilon_characters(h.group())) {
                auto tgt = phi_epsilon_target(eps, h);
                EXPECT_EQ(phi_epsilon(eps, ab), tgt.multiply(phi_epsilon(eps, a), phi_epsilon(eps, b)))
                    << name << " " << eps.name;
            }
        }
    }
}

TEST(Isomorphisms, ScalingAndSpecialization) {
    Gen gen(36);
    auto h = make("B2", {"3", "-2"});
    Scalar z(3, 2);
    auto src = scale_iso_source(z, h);
    auto r1 = specialized_algebra(h);
    for (int t = 0; t < 10; ++t) {
        auto a = random_element(src, gen, 2, 2), b = random_element(src, gen, 2, 2);
        EXPECT_EQ(scale_iso(z, src.multiply(a, b)), h.multiply(scale_iso(z, a), scale_iso(z, b)));
        auto c = random_element(h, gen, 2, 2), d = random_element(h, gen, 2, 2);
        EXPECT_EQ(degree_scale(z, h.multiply(c, d)), h.multiply(degree_scale(z, c), degree_scale(z, d)));
        EXPECT_EQ(specialize_r(h.multiply(c, d)), r1.multiply(specialize_r(c), specialize_r(d)));
    }
    // z = 0 lands in the group algebra tensor C[r]
    auto zero_src = scale_iso_source(Scalar(0), h);
    EXPECT_TRUE(zero_src.k().is_zero());
}

TEST(Isomorphisms, LeadingTermIsMultiplicativeInTheCrossedProduct) {
    Gen gen(37);
    auto h = make("A2", {"1"}, Mode::r1);
    auto cp = crossed_product(h);
    int checked = 0;
    for (int t = 0; t < 30; ++t) {
        auto a = random_element(h, gen, 2, 2), b = random_element(h, gen, 2, 2);
        auto la = leading_term(a), lb = leading_term(b);
        auto top = cp.multiply(la, lb);
        if (top.is_zero()) continue;
        ++checked;
        EXPECT_EQ(leading_term(h.multiply(a, b)), top);
    }
    EXPECT_GT(checked, 20);
}

TEST(Parser, ArithmeticAndWords) {
    auto h = make("A2");
    EXPECT_TRUE(parse_element(h, "N[s1*s2*s1] - N[s2*s1*s2]").is_zero());
    EXPECT_EQ(parse_element(h, "(x1 + x2)^2 - x1^2 - 2*x1*x2 - x2^2"), h.zero());
    EXPECT_EQ(parse_element(h, "x1 / 2 + x1 / 2"), h.x(0));
    // IM(N_s x) = sgn(s) N_s (-x) = N_s x
    EXPECT_EQ(parse_element(h, "IM(N[s1]*x1)"), h.N(h.group().simple_reflection(0), Polynomial::variable(2, 0)));
    EXPECT_EQ(parse_element(h, "zeta3^3"), h.one());
    EXPECT_EQ(parse_element(h, "N[e]"), h.one());
}

TEST(Parser, ErrorsReportPositions) {
    auto h = make("A1");
    auto position = [&](const std::string &text) -> long {
        try {
            parse_element(h, text);
        } catch (const ParseError &e) {
            return static_cast<long>(e.position);
        }
        return -1;
    };
    EXPECT_EQ(position("x * N[q]"), 6);
    EXPECT_EQ(position("x +"), 3);
    EXPECT_EQ(position("N[s"), 3);
    EXPECT_EQ(position("(x"), 2);
    EXPECT_GE(position("x / x"), 0);
    EXPECT_GE(position("x2"), 0);
    EXPECT_GE(position("N[g1]"), 0);
}

TEST(Tensor, ProductsFactorOverComponents) {
    Gen gen(38);
    auto h = make("A1xA1", {"1", "-3"}, Mode::r1);
    TensorDecomposition td(h);
    EXPECT_EQ(td.num_components(), 2u);
    for (int t = 0; t < 20; ++t) {
        auto a = random_element(h, gen, 2, 2), b = random_element(h, gen, 2, 2);
        EXPECT_EQ(td.from_tensor(td.to_tensor(a)), a);
        EXPECT_EQ(td.to_tensor(h.multiply(a, b)), td.multiply(td.to_tensor(a), td.to_tensor(b)));
    }
    EXPECT_THROW(TensorDecomposition(make("A1xA1swap", {"1"}, Mode::r1)), InputError);
    EXPECT_THROW(TensorDecomposition(make("A1xA1")), InputError);
}
