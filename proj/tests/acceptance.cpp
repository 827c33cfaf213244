// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "ghecke/ghecke.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace ghecke;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

HeckeAlgebra make(const std::string &name, std::vector<std::string> k, Mode mode = Mode::generic) {
    AlgebraSpec s = preset(name);
    s.k = std::move(k);
    s.mode = mode;
    return build_algebra(s);
}

std::size_t choose(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct Criterion {
    bool pass = true;
    std::string detail;
    void check(bool ok, const std::string &what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

// Time limits per criterion, in seconds.
constexpr double kAssocLimit = 60;
constexpr double kModuleLimit = 30;
constexpr double kHomologyLimit = 120;

Criterion associativity() {
    Criterion c;
    std::vector<std::pair<std::string, std::vector<std::string>>> presets{
        {"A1", {"1"}},      {"A2", {"1/2"}},  {"B2", {"3", "-2"}},       {"G2", {"1", "2"}},
        {"A1xA1", {"1", "-1"}}, {"A2flip", {"1"}}, {"A2flip-sign", {"2/3"}}};
    std::string times;
    for (const auto &[name, k] : presets) {
        auto t0 = Clock::now();
        auto h = make(name, k);
        auto r = suite_associativity(h, 500, 2024);
        double s = seconds_since(t0);
        c.check(r.pass && r.cases == 500, name + ": " + r.witness);
        c.check(s < kAssocLimit, name + " took " + std::to_string(s) + " s");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%s %.1fs", times.empty() ? "" : ", ", name.c_str(), s);
        times += buf;
    }
    if (c.pass) c.detail = "500 triples each (" + times + ")";
    return c;
}

Criterion braid() {
    Criterion c;
    for (const char *k : {"1", "2", "-3", "1/2", "0"}) {
        auto h = make("A1", {k});
        HeckeElement want = h.N(0, Scalar(2) * parse_scalar_literal(k) * Polynomial::r(1));
        want += h.N(1, -Polynomial::variable(1, 0));
        auto got = parse_element(h, "x * N[s]");
        c.check(got == want, std::string("k = ") + k + ": got " + h.to_string(got));
    }
    if (c.pass) c.detail = "x*N[s] = N[e]*(2kr) + N[s]*(-x) for k in {1, 2, -3, 1/2, 0}";
    return c;
}

Criterion center() {
    Criterion c;
    std::string witnesses;
    for (auto name : {"A1", "A2", "B2", "G2", "A1Z1", "A2flip", "A2flip-sign"}) {
        auto h = make(name, {"1"}, Mode::r1);
        auto r = suite_center(h, 4);
        c.check(r.pass, std::string(name) + ": " + r.witness);
        auto w = h.central_witness(h.x(0));
        c.check(w.has_value(), std::string(name) + ": alpha_1 reported central");
        if (w && witnesses.empty()) witnesses = std::string(name) + " alpha_1 vs " + *w;
    }
    if (c.pass) c.detail = "invariants up to degree 4 central in r = 1 mode; " + witnesses;
    return c;
}

Criterion isomorphisms() {
    Criterion c;
    for (auto [name, k] : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"A1", {"1"}}, {"B2", {"3", "-2"}}, {"A2flip-sign", {"1/2"}}}) {
        auto r = suite_isomorphisms(make(name, k), 200, 7);
        c.check(r.pass && r.cases == 200, name + ": " + r.witness);
    }
    // B2 with k = -2 on short roots and 3 on long roots; alpha_1 is the long simple root
    auto b2 = make("B2", {"3", "-2"});
    auto eps = positivizing_character(b2.group(), b2.k());
    auto kp = eps.twist(b2.group(), b2.k());
    for (std::size_t a = 0; a < b2.roots().num_roots(); ++a) c.check(kp(a).sign() > 0, "eps k not positive");
    auto p = suite_positivization(b2, 200, 7);
    c.check(p.pass, "positivization: " + p.witness);
    if (c.pass) c.detail = "m_z, IM, sgn, phi_eps on 200 elements each; B2 positivized by " + eps.name;
    return c;
}

Criterion leading_terms() {
    Criterion c;
    for (auto [name, k] : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"A1", {"1"}}, {"A2", {"1"}}, {"B2", {"3", "-2"}}}) {
        auto r = suite_leading_term(make(name, k, Mode::r1), 200, 11);
        c.check(r.pass && r.cases == 200, name + ": " + r.witness);
    }
    if (c.pass) c.detail = "200 pairs each on A1, A2, B2";
    return c;
}

Criterion parameters() {
    Criterion c;
    for (auto name : {"sl2", "sl3-gl2", "sl3-T", "sp4"}) {
        auto L = lie_fixture(name);
        auto p = compute_parameters(L, std::vector<Scalar>(L.dim()));
        c.check(p.k.has_value(), std::string(name) + ": invariance failed");
        for (const auto &[root, k] : p.raw) c.check(k == 2, std::string(name) + ": k(" + root_text(root) + ") != 2");
    }
    auto L = lie_fixture("sl3-gl2");
    auto levi = compute_parameters(L, parse_lie_vector(L, "E12"));
    c.check(levi.simple == std::vector<long>{3}, "sl3 Levi with v = E12 does not give k = 3");
    std::size_t pairs = 0;
    for (const auto &[ks, kl] : std::vector<std::pair<Scalar, Scalar>>{
             {0, 0}, {3, 0}, {0, 5}, {2, 2}, {4, 2}, {Scalar(1, 2), 1}, {8, 2}, {-1, 1}, {-6, 3}, {Scalar(-1, 2), 1}, {-4, 1}}) {
        c.check(f4_admissible(ks, kl), "F4 pair rejected");
        ++pairs;
    }
    c.check(!f4_admissible(3, 1), "F4 pair (3c, c) accepted");
    if (c.pass) c.detail = "k = 2 for v = 0 on sl2, sl3, sp4; k = 3 on the sl3 Levi; " + std::to_string(pairs) + " F4 pairs validated";
    return c;
}

Criterion modules() {
    Criterion c;
    auto t0 = Clock::now();
    for (auto [name, k] : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"A1", {"1"}}, {"A2", {"1"}}, {"B2", {"3", "-2"}}, {"G2", {"1", "2"}}, {"A1xA1", {"1", "1"}},
             {"A2flip", {"1"}}, {"A2flip-sign", {"1"}}}) {
        auto r = suite_induced_modules(make(name, k), 20, 5);
        c.check(r.pass && r.cases == 20, name + ": " + r.witness);
    }
    auto cls = classify_rank_one(make("A1", {"1"}, Mode::r1));
    bool st = false, pi0 = false, triv = false;
    for (const auto &i : cls.irreducibles) {
        if (i.name == "St")
            st = i.weights.size() == 1 && i.weights[0].weight[0] == Scalar(-1) && i.tempered && i.discrete_series;
        if (i.name == "pi(0)") pi0 = i.weights.size() == 1 && i.weights[0].weight[0].is_zero() && i.tempered;
        if (i.name == "triv") triv = i.weights[0].weight[0] == Scalar(1) && !i.tempered;
    }
    c.check(st && pi0 && triv, "rank-one irreducibles differ from {St, pi(0), triv}");
    c.check(cls.unipotent_triangular, "restriction matrix is not unipotent triangular");
    if (cls.unipotent_triangular) {
        auto z = zeta_rank_one(cls);
        c.check(z == std::map<std::string, std::string>{{"St", "sgn"}, {"pi(0)", "triv"}}, "zeta differs");
    }
    double s = seconds_since(t0);
    c.check(s < kModuleLimit, "took " + std::to_string(s) + " s");
    if (c.pass) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "20 regular lambda per preset, A1 classification and zeta (%.1fs)", s);
        c.detail = buf;
    }
    return c;
}

Criterion homology() {
    Criterion c;
    auto t0 = Clock::now();
    for (auto name : {"A1", "B2"}) {
        auto h = make(name, {"1"});
        std::size_t n = h.dim() + 1;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            auto lam = Sampler(h, seed).regular_point();
            auto ext = ext_self_induced(h, lam, 1);
            for (std::size_t p = 0; p <= n + 1; ++p)
                c.check(ext.at(p) == choose(n, p), std::string(name) + ": Ext^" + std::to_string(p) + " at " + point_text(lam));
            c.check(ext.at(n) > 0 && ext.at(n + 1) == 0, std::string(name) + ": top Ext probe");
        }
    }
    std::map<std::string, std::vector<std::size_t>> want{{"A1", {2, 4, 2}}, {"A2", {6, 18, 18, 6}}};
    for (const auto &[name, dims] : want)
        for (auto k : {"0", "1", "-1", "3"}) {
            auto [got, vanish] = koszul_dual_dims(make(name, {k}));
            c.check(got == dims && vanish, name + " Koszul dual at k = " + k);
        }
    double s = seconds_since(t0);
    c.check(s < kHomologyLimit, "took " + std::to_string(s) + " s");
    if (c.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "Ext (1,2,1) and (1,3,3,1) at 5 lambda; E(H) (2,4,2), (6,18,18,6) for k in {0,1,-1,3} (%.1fs)", s);
        c.detail = buf;
    }
    return c;
}

Criterion determinism() {
    Criterion c;
    auto run = [] {
        AlgebraSpec s = preset("B2");
        s.k = {"3", "-2"};
        auto h = build_algebra(s);
        nlohmann::json j;
        j["algebra"] = spec_to_json(s);
        j["structure_constants"] = structure_constants_json(h, 4);
        return j.dump(2);
    };
    std::string a = run(), b = run();
    c.check(a == b, "exports differ");
    c.check(a.size() > 1000, "export is suspiciously small");
    if (c.pass) c.detail = "B2 structure constants up to degree 4, " + std::to_string(a.size()) + " bytes, identical";
    return c;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Criterion()>>> criteria{
        {"associativity", associativity}, {"braid relation", braid},  {"center", center},
        {"isomorphisms", isomorphisms},   {"leading terms", leading_terms}, {"parameters", parameters},
        {"modules", modules},             {"homology", homology},   {"determinism", determinism}};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            c = criteria[i].second();
        } catch (const std::exception &e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << c.detail << std::endl;
        failed += c.pass ? 0 : 1;
    }
    return failed ? 1 : 0;
}
