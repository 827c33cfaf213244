#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace ghecke;

#ifndef GHECKE_FIXTURE_DIR
#define GHECKE_FIXTURE_DIR "fixtures"
#endif

namespace {

std::string fixture_path(const std::string &name) { return std::string(GHECKE_FIXTURE_DIR) + "/" + name; }

Matrix elementary(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

/// Smallest m with ad(v)^m = 0 on the span of `space`, computed with matrix commutators.
std::size_t ad_nilpotency_by_matrices(const Matrix &v, const std::vector<Matrix> &space) {
    for (std::size_t m = 1;; ++m) {
        bool all_zero = true;
        for (auto y : space) {
            for (std::size_t t = 0; t < m; ++t) y = v * y - y * v;
            all_zero = all_zero && y.is_zero();
        }
        if (all_zero) return m;
    }
}

}  // namespace

TEST(LieFixtures, BracketsAreAntisymmetricGradedAndSatisfyJacobi) {
    for (const auto &name : lie_fixture_names()) {
        auto L = lie_fixture(name);
        EXPECT_FALSE(L.validation_error()) << name << ": " << *L.validation_error();
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = 0; j < L.dim(); ++j) {
                auto a = L.bracket(i, j), b = L.bracket(j, i);
                for (std::size_t c = 0; c < L.dim(); ++c) {
                    ASSERT_EQ(a[c], -b[c]) << name;
                    // [e_i, e_j] lives in the sum of the gradings
                    if (a[c].is_zero()) continue;
                    for (std::size_t t = 0; t < L.tags[c].size(); ++t)
                        ASSERT_EQ(L.tags[c][t], L.tags[i][t] + L.tags[j][t]) << name;
                }
            }
    }
}

TEST(LieFixtures, RestrictedRootCounts) {
    // positive restricted roots: sl2 1, sl3 with gl2 Levi 1, sl3 with torus 3, sp4 4
    auto positive = [](const std::string &name) {
        std::size_t n = 0;
        for (const auto &[t, b] : restricted_root_spaces(lie_fixture(name))) {
            bool pos = std::all_of(t.begin(), t.end(), [](long c) { return c >= 0; });
            n += pos ? 1 : 0;
        }
        return n;
    };
    EXPECT_EQ(positive("sl2"), 1u);
    EXPECT_EQ(positive("sl3-gl2"), 1u);
    EXPECT_EQ(positive("sl3-T"), 3u);
    EXPECT_EQ(positive("sp4"), 4u);
    EXPECT_EQ(positive("so5"), 4u);
    // the gl2 Levi leaves a two-dimensional root space
    auto p = compute_parameters(lie_fixture("sl3-gl2"), lie_fixture("sl3-gl2").v);
    EXPECT_EQ(p.space_dim.at({1}), 2u);
}

TEST(LieFixtures, RestrictedCartanOfSp4IsNonSimplyLaced) {
    auto p = compute_parameters(lie_fixture("sp4"), lie_fixture("sp4").v);
    EXPECT_EQ(p.weyl.group->size(), 8u);
    EXPECT_EQ(p.weyl.group->roots().label(), "B2");
}

TEST(LieParameters, ZeroNilpotentGivesTwoEverywhere) {
    for (auto name : {"sl2", "sl3-gl2", "sl3-T", "sp4", "so5"}) {
        auto L = lie_fixture(name);
        auto p = compute_parameters(L, std::vector<Scalar>(L.dim()));
        ASSERT_TRUE(p.k) << name;
        for (const auto &[root, k] : p.raw) EXPECT_EQ(k, 2) << name << " " << root_text(root);
    }
}

TEST(LieParameters, LeviWithRegularNilpotentGivesThree) {
    auto L = lie_fixture("sl3-gl2");
    auto p = compute_parameters(L, parse_lie_vector(L, "E12"));
    ASSERT_TRUE(p.k);
    ASSERT_EQ(p.simple.size(), 1u);
    // oracle: ad(E12) on g_alpha = span(E13, E23) with plain 3x3 matrices
    Matrix e12 = elementary(3, 0, 1);
    std::size_t m = ad_nilpotency_by_matrices(e12, {elementary(3, 0, 2), elementary(3, 1, 2)});
    EXPECT_EQ(m, 2u);
    EXPECT_EQ(p.simple[0], static_cast<long>(m) + 1);
    EXPECT_EQ(p.simple[0], 3);
    // a scalar multiple gives the same parameter
    EXPECT_EQ(compute_parameters(L, parse_lie_vector(L, "-5/2*E12")).simple[0], 3);
}

TEST(LieParameters, RejectsBadNilpotents) {
    auto L = lie_fixture("sl3-gl2");
    EXPECT_THROW(compute_parameters(L, parse_lie_vector(L, "E13")), InputError);  // outside m
    EXPECT_THROW(compute_parameters(L, parse_lie_vector(L, "H1")), InputError);   // not nilpotent
    EXPECT_THROW(parse_lie_vector(L, "E99"), InputError);
    EXPECT_THROW(compute_parameters(L, std::vector<Scalar>(2)), InputError);
}

TEST(LieParameters, VectorParsing) {
    auto L = lie_fixture("sl3-gl2");
    auto v = parse_lie_vector(L, "2*E12+E21");
    EXPECT_EQ(v[L.index_of("E12")], Scalar(2));
    EXPECT_EQ(v[L.index_of("E21")], Scalar(1));
    auto z = parse_lie_vector(L, "0");
    EXPECT_TRUE(std::all_of(z.begin(), z.end(), [](const Scalar &s) { return s.is_zero(); }));
}

TEST(LieParameters, GammaTruncationIsReported) {
    auto L = lie_fixture("sl3-flip");
    auto w = support_weyl_data(L);
    EXPECT_TRUE(w.truncated);
    EXPECT_EQ(w.declared_gamma_order, 2u);
    EXPECT_EQ(w.group->gamma_size(), 1u);
    EXPECT_EQ(w.notes.size(), 2u);
}

TEST(LieJson, RoundTripPreservesEverything) {
    for (const auto &name : lie_fixture_names()) {
        auto L = lie_fixture(name);
        auto j = lie_to_json(L);
        auto back = lie_from_json(j);
        EXPECT_EQ(back.basis, L.basis) << name;
        EXPECT_EQ(back.tags, L.tags) << name;
        EXPECT_EQ(back.simple_roots, L.simple_roots) << name;
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t k = 0; k < L.dim(); ++k) ASSERT_EQ(back.bracket(i, k), L.bracket(i, k)) << name;
        EXPECT_EQ(lie_to_json(back).dump(), j.dump()) << name;
    }
}

TEST(LieJson, CheckedInFixturesMatchTheBuiltins) {
    for (const auto &name : lie_fixture_names()) {
        auto from_file = lie_from_json(read_json_file(fixture_path(name + ".json")));
        EXPECT_EQ(lie_to_json(from_file).dump(), lie_to_json(lie_fixture(name)).dump()) << name;
    }
    auto e12 = lie_from_json(read_json_file(fixture_path("sl3-gl2-E12.json")));
    EXPECT_EQ(compute_parameters(e12, e12.v).simple[0], 3);
}

TEST(LieJson, BadGradingNamesTheTriple) {
    auto L = lie_from_json(read_json_file(fixture_path("bad_grading.json")));
    auto err = L.validation_error();
    ASSERT_TRUE(err);
    EXPECT_NE(err->find("(E12, E21, H1)"), std::string::npos) << *err;
    EXPECT_THROW(compute_parameters(L, L.v), InputError);
}

TEST(LieAlgebraProperty, JacobiOnRandomTriples) {
    testing_support::Gen gen(41);
    auto L = lie_fixture("sp4");
    auto rnd = [&] {
        std::vector<Scalar> v;
        for (std::size_t i = 0; i < L.dim(); ++i) v.push_back(gen.rational());
        return v;
    };
    for (int t = 0; t < 25; ++t) {
        auto a = rnd(), b = rnd(), c = rnd();
        auto s1 = L.bracket(a, L.bracket(b, c)), s2 = L.bracket(b, L.bracket(c, a)), s3 = L.bracket(c, L.bracket(a, b));
        for (std::size_t i = 0; i < L.dim(); ++i) ASSERT_TRUE((s1[i] + s2[i] + s3[i]).is_zero());
    }
}

TEST(F4, AdmissibleShapes) {
    // (k(short), k(long)) shapes for every nonzero c
    for (const Scalar &c : {Scalar(1), Scalar(-3, 2), Scalar(5)}) {
        for (const Scalar &f : {Scalar(0), Scalar(1), Scalar(2), Scalar(1, 2), Scalar(4), Scalar(-1), Scalar(-2),
                                Scalar(-1, 2), Scalar(-4)})
            EXPECT_TRUE(f4_admissible(f * c, c)) << f << " " << c;
        EXPECT_TRUE(f4_admissible(c, 0));
        EXPECT_FALSE(f4_admissible(Scalar(3) * c, c));
        EXPECT_FALSE(f4_admissible(c, Scalar(3) * c));
        EXPECT_FALSE(f4_admissible(Scalar(1, 4) * c, c));
    }
    EXPECT_TRUE(f4_admissible(0, 0));
}

TEST(F4, FixtureFilePairsAreAllAdmissible) {
    auto j = read_json_file(fixture_path("f4_pairs.json"));
    for (const auto &p : j.at("pairs"))
        EXPECT_TRUE(f4_admissible(parse_scalar_literal(json_scalar_text(p[0])),
                                  parse_scalar_literal(json_scalar_text(p[1]))));
    auto bad = read_json_file(fixture_path("f4_pairs_bad.json"));
    EXPECT_FALSE(f4_admissible(parse_scalar_literal(json_scalar_text(bad.at("pairs")[1][0])),
                               parse_scalar_literal(json_scalar_text(bad.at("pairs")[1][1]))));
}
