#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace ghecke;
using testing_support::Gen;
using testing_support::make;

namespace {

std::size_t choose(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST(Koszul, RanksAreBinomials) {
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        auto k = koszul_resolution(n);
        ASSERT_EQ(k.ranks.size(), n + 1);
        for (std::size_t p = 0; p <= n; ++p) EXPECT_EQ(k.ranks[p], choose(n, p));
        EXPECT_FALSE(k.square_zero_violation()) << n;
    }
    EXPECT_EQ(exterior_basis(4, 2).size(), 6u);
    EXPECT_EQ(exterior_basis(3, 0).size(), 1u);
}

TEST(Koszul, OneVariableDifferentialIsTheVariable) {
    auto k = koszul_resolution(1, {Scalar(5)});
    ASSERT_EQ(k.d.size(), 1u);
    // y - 5 up to sign
    Polynomial y = Polynomial::r(0);
    const auto &e = k.d[0](0, 0);
    EXPECT_TRUE(e == y - Polynomial::constant(0, 5) || e == Polynomial::constant(0, 5) - y) << e.to_string();
}

TEST(KoszulProperty, ExactAwayFromTheCenter) {
    Gen gen(61);
    for (int t = 0; t < 15; ++t) {
        std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
        auto c = gen.point(n);
        auto k = koszul_resolution(n, c);
        EXPECT_FALSE(k.square_zero_violation());
        auto at_center = evaluated_homology(k, c);
        for (std::size_t p = 0; p <= n; ++p) EXPECT_EQ(at_center[p], choose(n, p));
        auto other = c;
        other[static_cast<std::size_t>(gen.integer(0, static_cast<long>(n) - 1))] += Scalar(1);
        for (auto h : evaluated_homology(k, other)) EXPECT_EQ(h, 0u);
    }
}

TEST(Koszul, GradedHomologyIsConcentratedInDegreeZero) {
    for (std::size_t n : {1u, 2u, 3u}) {
        for (unsigned t = 0; t <= 3; ++t) {
            auto h = graded_koszul_homology(n, t);
            for (std::size_t p = 0; p < h.size(); ++p) EXPECT_EQ(h[p], (p == 0 && t == 0) ? 1u : 0u) << n << " " << t;
        }
    }
}

TEST(Ext, SelfExtOfInducedModulesIsAnExteriorAlgebra) {
    // Ext^n = wedge^n of a (dim + 1)-dimensional space at regular lambda
    Gen gen(62);
    for (auto name : {"A1", "A2", "B2", "A1Z1", "A2flip-sign"}) {
        auto h = make(name, {"1"});
        std::size_t n = h.dim() + 1;
        for (int t = 0; t < 3; ++t) {
            auto lam = Sampler(h, 100 + t).regular_point();
            ASSERT_TRUE(is_regular(h.group(), lam));
            auto ext = ext_self_induced(h, lam, gen.nonzero_rational());
            for (std::size_t p = 0; p <= n + 1; ++p) EXPECT_EQ(ext.at(p), choose(n, p)) << name << " p=" << p;
        }
    }
    auto a1 = make("A1");
    EXPECT_EQ(ext_self_induced(a1, {Scalar(1)}, 1), (ExtTable{{0, 1}, {1, 2}, {2, 1}, {3, 0}}));
}

TEST(Ext, RejectsSingularPointsAndTheSpecializedAlgebra) {
    auto a1 = make("A1");
    EXPECT_THROW(ext_self_induced(a1, {Scalar(0)}, 1), InputError);
    EXPECT_THROW(ext_self_induced(make("A1", {"1"}, Mode::r1), {Scalar(1)}, 1), InputError);
    EXPECT_FALSE(is_regular(make("A2").group(), {Scalar(1), Scalar(-1)}));  // (alpha_1 + alpha_2)(lambda) = 0
}

TEST(KoszulDual, GradedDimensionsAreGroupOrderTimesBinomials) {
    for (auto name : {"T0", "A1", "A2", "B2", "A1Z1", "A1xA1swap", "A2flip-i"}) {
        auto h = make(name, {"1"});
        auto [dims, vanish] = koszul_dual_dims(h);
        std::size_t n = h.dim() + 1;
        ASSERT_EQ(dims.size(), n + 1) << name;
        for (std::size_t p = 0; p <= n; ++p) EXPECT_EQ(dims[p], h.group().size() * choose(n, p)) << name;
        EXPECT_TRUE(vanish) << name;
    }
}

TEST(KoszulDual, IndependentOfTheParameter) {
    auto base = koszul_dual_dims(make("B2", {"0"}, Mode::k0)).first;
    for (auto k : {"0", "1", "-1", "3"}) {
        EXPECT_EQ(koszul_dual_dims(make("B2", {k})).first, base) << k;
        EXPECT_EQ(koszul_dual_dims(make("A2", {k})).first, koszul_dual_dims(make("A2", {"0"}, Mode::k0)).first);
    }
    EXPECT_THROW(koszul_dual_dims(make("A1", {"1"}, Mode::r1)), InputError);
}

TEST(Resolution, FreeResolutionOfTheTrivialGradedModule) {
    for (auto [name, mode] : std::vector<std::pair<std::string, Mode>>{
             {"A1", Mode::generic}, {"A2", Mode::generic}, {"B2", Mode::generic}, {"A2flip-sign", Mode::generic}}) {
        auto h = make(name, {"1"}, mode);
        auto res = projective_resolution_H0(h);
        ASSERT_EQ(res.ranks.size(), h.dim() + 2);
        auto c = check_resolution(h, res);
        EXPECT_TRUE(c.square_zero) << name;
        EXPECT_TRUE(c.entries_degree_two) << name;
        EXPECT_TRUE(c.augmentation_kills_image) << name;
        EXPECT_TRUE(c.augmentation_onto) << name;
        for (std::size_t p = 0; p < c.generator_degree.size(); ++p)
            EXPECT_EQ(c.generator_degree[p], static_cast<int>(2 * p));
    }
    auto k0 = make("B2", {"0"}, Mode::k0);
    auto c = check_resolution(k0, projective_resolution_H0(k0));
    EXPECT_TRUE(c.square_zero && c.entries_degree_two && c.augmentation_onto);
}
