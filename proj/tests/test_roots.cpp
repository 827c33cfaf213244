#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ghecke;
using testing_support::Gen;

namespace {

RootSystem roots_of(const std::vector<std::string> &types, std::size_t central = 0) {
    std::vector<CartanType> t;
    for (const auto &s : types) t.push_back(CartanType::parse(s));
    return RootSystem::from_types(t, central);
}

}  // namespace

TEST(RootSystem, RootCountsMatchTheClassicalFormulas) {
    // |Phi| = n(n+1) for A_n, 2n^2 for B_n and C_n, 12 for G2, 48 for F4
    EXPECT_EQ(roots_of({"A1"}).num_roots(), 2u);
    EXPECT_EQ(roots_of({"A2"}).num_roots(), 6u);
    EXPECT_EQ(roots_of({"A3"}).num_roots(), 12u);
    EXPECT_EQ(roots_of({"B2"}).num_roots(), 8u);
    EXPECT_EQ(roots_of({"C3"}).num_roots(), 18u);
    EXPECT_EQ(roots_of({"B3"}).num_roots(), 18u);
    EXPECT_EQ(roots_of({"D4"}).num_roots(), 24u);
    EXPECT_EQ(roots_of({"G2"}).num_roots(), 12u);
    EXPECT_EQ(roots_of({"F4"}).num_roots(), 48u);
    EXPECT_EQ(roots_of({"A1", "A1"}).num_roots(), 4u);
}

TEST(RootSystem, PositiveRootsAreNonnegativeCombinationsAndNegativesPair) {
    for (auto t : {"A2", "B2", "G2", "C3", "F4"}) {
        auto rs = roots_of({t});
        for (std::size_t i = 0; i < rs.num_roots(); ++i) {
            const auto &r = rs.roots()[i];
            bool nonneg = std::all_of(r.begin(), r.end(), [](long c) { return c >= 0; });
            EXPECT_EQ(nonneg, rs.is_positive(i)) << t;
            auto neg = rs.roots()[rs.negative_of(i)];
            for (std::size_t j = 0; j < r.size(); ++j) EXPECT_EQ(neg[j], -r[j]);
        }
    }
}

TEST(RootSystem, CartanPairingsOfRankTwoSystems) {
    // <alpha_i, alpha_j^vee> off the diagonal: A2 (-1,-1), B2 (-1,-2) or (-2,-1), G2 (-1,-3) or (-3,-1)
    auto check = [](const char *t, long a, long b) {
        auto rs = roots_of({t});
        const auto &s1 = rs.roots()[rs.simple_root_index(0)];
        const auto &s2 = rs.roots()[rs.simple_root_index(1)];
        EXPECT_EQ(rs.pairing(s1, s1), 2);
        std::multiset<long> got{rs.pairing(s1, s2), rs.pairing(s2, s1)}, want{a, b};
        EXPECT_EQ(got, want) << t;
    };
    check("A2", -1, -1);
    check("B2", -1, -2);
    check("G2", -1, -3);
}

TEST(RootSystem, FromCartanAgreesWithFromTypes) {
    auto b2 = RootSystem::from_cartan({{2, -1}, {-2, 2}}, 0);
    EXPECT_EQ(b2.num_roots(), 8u);
    EXPECT_EQ(b2.label(), "B2");
    auto rs = RootSystem::from_cartan({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, 1);
    EXPECT_EQ(rs.num_roots(), 12u);
    EXPECT_EQ(rs.dim(), 4u);
}

TEST(RootSystem, RejectsUnknownTypes) {
    EXPECT_THROW(CartanType::parse("Q7"), InputError);
    EXPECT_THROW(CartanType::parse("G3"), InputError);
    EXPECT_THROW(preset("nope"), InputError);
}

TEST(WeylGroup, OrdersOfPresets) {
    std::map<std::string, std::size_t> want{{"T0", 1},     {"A1", 2},     {"A1Z1", 2},        {"A2", 6},
                                            {"B2", 8},     {"C3", 48},    {"G2", 12},         {"F4", 1152},
                                            {"A1xA1", 4}, {"A1xA1swap", 8}, {"A2flip", 12}, {"A2flip-sign", 12}};
    for (const auto &[name, order] : want) {
        auto s = preset(name);
        std::vector<CartanType> t;
        for (const auto &x : s.types) t.push_back(CartanType::parse(x));
        ExtendedWeylGroup g(RootSystem::from_types(t, s.central_dim), s.gamma);
        EXPECT_EQ(g.size(), order) << name;
    }
}

TEST(WeylGroup, GroupAxiomsAndFaithfulAction) {
    for (auto name : {"A2", "B2", "G2", "A2flip", "A1xA1swap"}) {
        auto h = testing_support::make(name);
        const auto &g = h.group();
        std::set<std::vector<long>> seen;
        for (std::size_t a = 0; a < g.size(); ++a) {
            EXPECT_EQ(g.multiply(0, a), a);
            EXPECT_EQ(g.multiply(a, 0), a);
            // the matrix of a product is the product of matrices
            for (std::size_t b = 0; b < g.size(); b += 3)
                EXPECT_EQ(g.element(g.multiply(a, b)).matrix, g.element(a).matrix * g.element(b).matrix);
            std::vector<long> flat;
            for (std::size_t i = 0; i < g.dim(); ++i)
                for (std::size_t j = 0; j < g.dim(); ++j) flat.push_back(g.element(a).matrix(i, j));
            seen.insert(flat);
        }
        EXPECT_EQ(seen.size(), g.size()) << name;
    }
}

TEST(WeylGroup, LengthEqualsNumberOfPositiveRootsMadeNegative) {
    for (auto name : {"A2", "B2", "G2"}) {
        auto h = testing_support::make(name);
        const auto &g = h.group();
        const auto &rs = g.roots();
        for (std::size_t w = 0; w < g.w_size(); ++w) {
            std::size_t inversions = 0;
            for (std::size_t a = 0; a < rs.num_positive(); ++a)
                if (!rs.is_positive(g.act_on_root(w, a))) ++inversions;
            EXPECT_EQ(inversions, g.element(w).length()) << name;
            EXPECT_EQ(g.element(w).sign, inversions % 2 ? -1 : 1);
        }
    }
}

TEST(WeylGroup, GammaPreservesPositiveRoots) {
    auto h = testing_support::make("A2flip");
    const auto &g = h.group();
    std::size_t gamma = g.gamma_generator(0);
    for (std::size_t a = 0; a < g.roots().num_positive(); ++a) EXPECT_TRUE(g.roots().is_positive(g.act_on_root(gamma, a)));
    EXPECT_THROW(ExtendedWeylGroup(roots_of({"B2"}), {{1, 0}}), InputError);
}

TEST(Cocycle, TrivialAndSignCocyclesAreValid) {
    auto h = testing_support::make("A2flip-sign");
    std::size_t g = h.group().gamma_generator(0);
    EXPECT_EQ(h.natural(g, g), Scalar(-1));
    EXPECT_EQ(h.natural(1, g), Scalar(1));
    EXPECT_TRUE(Cocycle::trivial(2).is_trivial());
}

TEST(Cocycle, RejectsTablesFailingTheIdentity) {
    // on Z/2 = {0, 1}: natural(1,0) = 2 breaks the identity at (1, 0, 1)
    Cocycle c(2, {Scalar(1), Scalar(2), Scalar(1), Scalar(1)});
    std::vector<std::size_t> z2{0, 1, 1, 0};
    auto v = c.validate(z2);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->kind, "cocycle identity");
    AlgebraSpec s = preset("A2flip");
    s.cocycle = {{"1", "2"}, {"1", "1"}};
    EXPECT_THROW(build_algebra(s), InputError);
    s.cocycle = {{"1", "0"}, {"0", "1"}};
    EXPECT_THROW(build_algebra(s), InputError);
    s.cocycle = {{"1"}};
    EXPECT_THROW(build_algebra(s), InputError);
}

TEST(CocycleProperty, CoboundariesSatisfyTheIdentity) {
    // natural(a,b) = f(a) f(b) / f(ab) is a cocycle for any nonzero f
    Gen gen(21);
    std::vector<std::size_t> z3{0, 1, 2, 1, 2, 0, 2, 0, 1};
    for (int t = 0; t < 30; ++t) {
        std::vector<Scalar> f{Scalar(1), gen.nonzero_rational(), gen.nonzero_rational()};
        std::vector<Scalar> table;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) table.push_back(f[a] * f[b] * f[z3[a * 3 + b]].inverse());
        EXPECT_FALSE(Cocycle(3, table).validate(z3));
    }
}

TEST(Parameters, OnePerClassExtendsAndConflictsAreRejected) {
    auto b2 = testing_support::make("B2", {"3", "-2"});
    const auto &rs = b2.roots();
    // long roots get 3, short roots get -2
    for (std::size_t a = 0; a < rs.num_roots(); ++a) EXPECT_EQ(b2.k()(a), rs.is_long(a) ? Scalar(3) : Scalar(-2));
    EXPECT_FALSE(b2.k().invariance_violation(b2.group()));
    EXPECT_TRUE(rs.is_long(rs.simple_root_index(0)));
    // A2 has one reflection class
    EXPECT_THROW(testing_support::make("A2", {"1", "2"}), InputError);
    // the flip makes both A1 factors conjugate
    EXPECT_THROW(testing_support::make("A1xA1swap", {"1", "2"}), InputError);
    EXPECT_NO_THROW(testing_support::make("A1xA1", {"1", "2"}));
}

TEST(ParametersProperty, InvarianceUnderTheWholeGroup) {
    Gen gen(22);
    for (auto name : {"B2", "G2", "A1xA1", "C3"}) {
        for (int t = 0; t < 5; ++t) {
            std::vector<std::string> k{gen.rational().to_string(), gen.rational().to_string()};
            auto h = testing_support::make(name, k);
            EXPECT_FALSE(h.k().invariance_violation(h.group())) << name;
        }
    }
}

TEST(Parameters, PositivizingCharacterFlipsExactlyTheNegativeClasses) {
    auto b2 = testing_support::make("B2", {"3", "-2"});
    auto eps = positivizing_character(b2.group(), b2.k());
    EXPECT_EQ(eps.name, "eps_s");
    auto kp = eps.twist(b2.group(), b2.k());
    for (std::size_t a = 0; a < b2.roots().num_roots(); ++a) EXPECT_GT(kp(a).sign(), 0);
    auto g2 = testing_support::make("G2", {"-1", "-1"});
    EXPECT_EQ(positivizing_character(g2.group(), g2.k()).name, "sgn");
    auto names = [](const ExtendedWeylGroup &g) {
        std::set<std::string> s;
        for (const auto &e : epsilon_characters(g)) s.insert(e.name);
        return s;
    };
    EXPECT_EQ(names(b2.group()), (std::set<std::string>{"triv", "sgn", "eps_s", "eps_l"}));
    EXPECT_EQ(names(testing_support::make("A2").group()), (std::set<std::string>{"triv", "sgn"}));
}

TEST(ParametersProperty, SignCharactersAreHomomorphisms) {
    for (auto name : {"B2", "G2", "A1xA1", "A2flip"}) {
        auto h = testing_support::make(name);
        const auto &g = h.group();
        for (const auto &e : epsilon_characters(g))
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = 0; b < g.size(); ++b) ASSERT_EQ(e(g.multiply(a, b)), e(a) * e(b)) << name;
    }
}

TEST(Centralizer, DoubleCosetCountsOnSmallCases) {
    auto a2 = testing_support::make("A2");
    const auto &g = a2.group();
    // W_M trivial: the count is |W| / |W_sigma|
    EXPECT_EQ(centralizer_components(g, {Scalar(0), Scalar(0)}, {}).count, 1u);
    EXPECT_EQ(centralizer_components(g, {Scalar(1), Scalar(3)}, {}).count, 6u);
    auto wall = centralizer_components(g, {Scalar(0), Scalar(2)}, {});
    EXPECT_EQ(wall.stabilizer_order, 2u);
    EXPECT_EQ(wall.count, 3u);
    // a transposition is self-normalizing in S3
    auto levi = centralizer_components(g, {Scalar(1), Scalar(3)}, {g.roots().simple_root_index(0)});
    EXPECT_EQ(levi.normalizer_order, 2u);
    EXPECT_EQ(levi.count, 1u);
    // B2: the reflection in a long simple root commutes with the orthogonal short reflection and with -1
    auto b2 = testing_support::make("B2");
    auto c = centralizer_components(b2.group(), {Scalar(1), Scalar(5)}, {b2.roots().simple_root_index(0)});
    EXPECT_EQ(c.normalizer_order, 4u);
    EXPECT_EQ(c.count, 2u);
    EXPECT_THROW(centralizer_components(b2.group(), {Scalar(1)}, {}), InputError);
}
