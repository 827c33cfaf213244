#pragma once

#include "ghecke/parameters.hpp"
#include "ghecke/presets.hpp"

#include <map>
#include <set>

namespace ghecke {

/// Finite-dimensional Lie algebra with sparse structure constants and a grading by the
/// restricted roots of T = Z(M)°, written as integer coordinates in the simple restricted roots.
struct LieAlgebra {
    std::string name;
    std::vector<std::string> basis;
    // [e_i, e_j] for the stored ordered pairs; the opposite order is implied by antisymmetry
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> brackets;
    std::vector<std::vector<long>> tags;
    std::vector<std::string> simple_roots;
    std::size_t central_dim = 0;

    // cuspidal support descriptor
    std::vector<Scalar> v;
    bool cuspidal_asserted = false;
    std::vector<std::vector<std::size_t>> gamma;  // 0-based permutations of the simple restricted roots
    std::size_t gamma_order = 1;

    std::size_t dim() const { return basis.size(); }
    std::size_t rank() const { return simple_roots.size(); }

    std::size_t index_of(const std::string &n) const {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == n) return i;
        throw InputError("unknown basis element '" + n + "'");
    }

    bool in_m(std::size_t i) const {
        return std::all_of(tags[i].begin(), tags[i].end(), [](long c) { return c == 0; });
    }
    bool in_u(std::size_t i) const {
        return !in_m(i) && std::all_of(tags[i].begin(), tags[i].end(), [](long c) { return c >= 0; });
    }

    std::vector<Scalar> bracket(std::size_t i, std::size_t j) const {
        std::vector<Scalar> out(dim());
        if (auto it = brackets.find({i, j}); it != brackets.end()) {
            for (const auto &[k, c] : it->second) out[k] += c;
        } else if (auto jt = brackets.find({j, i}); jt != brackets.end()) {
            for (const auto &[k, c] : jt->second) out[k] -= c;
        }
        return out;
    }

    std::vector<Scalar> bracket(const std::vector<Scalar> &a, const std::vector<Scalar> &b) const {
        std::vector<Scalar> out(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (b[j].is_zero()) continue;
                auto c = bracket(i, j);
                for (std::size_t k = 0; k < dim(); ++k)
                    if (!c[k].is_zero()) out[k] += a[i] * b[j] * c[k];
            }
        }
        return out;
    }

    /// ad(a) as a matrix acting on coordinate columns.
    Matrix ad(const std::vector<Scalar> &a) const {
        Matrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            std::vector<Scalar> e(dim());
            e[j] = 1;
            auto col = bracket(a, e);
            for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
        }
        return m;
    }

    /// Antisymmetry, grading additivity and the Jacobi identity over all basis triples.
    std::optional<std::string> validation_error() const {
        std::size_t n = dim();
        if (tags.size() != n) return "every basis element needs a grading tag";
        for (const auto &t : tags)
            if (t.size() != rank()) return "grading tags must have one coordinate per simple restricted root";
        for (const auto &[ij, res] : brackets) {
            auto [i, j] = ij;
            if (i >= n || j >= n) return "bracket refers to a missing basis element";
            if (i == j && std::any_of(res.begin(), res.end(), [](const auto &kv) { return !kv.second.is_zero(); }))
                return "[" + basis[i] + ", " + basis[i] + "] must vanish";
            if (auto it = brackets.find({j, i}); it != brackets.end() && i < j) {
                auto a = bracket(i, j);
                std::vector<Scalar> b(n);
                for (const auto &[k, c] : it->second) b[k] += c;
                for (std::size_t k = 0; k < n; ++k)
                    if (a[k] + b[k] != Scalar(0)) return "antisymmetry fails for (" + basis[i] + ", " + basis[j] + ")";
            }
            for (const auto &[k, c] : res) {
                if (c.is_zero()) continue;
                for (std::size_t a = 0; a < rank(); ++a)
                    if (tags[k][a] != tags[i][a] + tags[j][a])
                        return "grading is not additive on (" + basis[i] + ", " + basis[j] + ", " + basis[k] + ")";
            }
        }
        std::vector<std::vector<std::vector<Scalar>>> table(n, std::vector<std::vector<Scalar>>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) table[i][j] = bracket(i, j);
        auto br = [&](const std::vector<Scalar> &a, std::size_t k) {
            std::vector<Scalar> out(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (a[i].is_zero()) continue;
                for (std::size_t l = 0; l < n; ++l)
                    if (!table[i][k][l].is_zero()) out[l] += a[i] * table[i][k][l];
            }
            return out;
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    auto a = br(table[i][j], k), b = br(table[j][k], i), c = br(table[k][i], j);
                    for (std::size_t l = 0; l < n; ++l)
                        if (!(a[l] + b[l] + c[l]).is_zero())
                            return "Jacobi identity fails on (" + basis[i] + ", " + basis[j] + ", " + basis[k] + ")";
                }
        return std::nullopt;
    }

    void validate() const {
        if (auto e = validation_error()) throw InputError("Lie algebra '" + name + "': " + *e);
    }
};

/// Smallest m >= 1 with a^m = 0, or nullopt when a is not nilpotent.
inline std::optional<std::size_t> nilpotency_index(const Matrix &a) {
    Matrix p = Matrix::identity(a.rows());
    for (std::size_t m = 1; m <= a.rows() + 1; ++m) {
        p = p * a;
        if (p.is_zero()) return m;
    }
    return std::nullopt;
}

/// Indivisible restricted root -> basis of g_alpha + g_{2 alpha}. Keys are sorted coordinate vectors.
inline std::map<std::vector<long>, std::vector<std::size_t>> restricted_root_spaces(const LieAlgebra &L) {
    L.validate();
    std::map<std::vector<long>, std::vector<std::size_t>> spaces;
    for (std::size_t i = 0; i < L.dim(); ++i)
        if (!L.in_m(i)) spaces[L.tags[i]].push_back(i);
    std::map<std::vector<long>, std::vector<std::size_t>> out;
    for (const auto &[t, b] : spaces) {
        bool divisible = std::all_of(t.begin(), t.end(), [](long c) { return c % 2 == 0; });
        if (divisible) {
            std::vector<long> half(t);
            for (auto &c : half) c /= 2;
            if (spaces.count(half)) continue;
        }
        auto &dst = out[t];
        dst.insert(dst.end(), b.begin(), b.end());
        std::vector<long> twice(t);
        for (auto &c : twice) c *= 2;
        if (auto it = spaces.find(twice); it != spaces.end()) dst.insert(dst.end(), it->second.begin(), it->second.end());
    }
    return out;
}

/// Cartan matrix of the reduced restricted system from root strings: cartan[a][b] = -max{q : alpha_a + q alpha_b is a root}.
inline std::vector<std::vector<long>> restricted_cartan(const std::set<std::vector<long>> &roots, std::size_t rank) {
    std::vector<std::vector<long>> c(rank, std::vector<long>(rank, 0));
    for (std::size_t a = 0; a < rank; ++a) {
        std::vector<long> ea(rank, 0);
        ea[a] = 1;
        if (!roots.count(ea)) throw InputError("simple restricted root " + std::to_string(a + 1) + " has no root space");
        for (std::size_t b = 0; b < rank; ++b) {
            if (a == b) {
                c[a][b] = 2;
                continue;
            }
            std::vector<long> r = ea;
            long q = 0;
            for (;;) {
                r[b] += 1;
                if (!roots.count(r)) break;
                ++q;
            }
            c[a][b] = -q;
        }
    }
    return c;
}

inline std::string root_text(const std::vector<long> &r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + ")";
}

struct SupportWeylData {
    std::shared_ptr<const ExtendedWeylGroup> group;
    std::size_t declared_gamma_order = 1;
    std::vector<std::string> notes;  // faithfulness issues, truncations
    bool truncated = false;
};

/// W°_E as the Weyl group of the reduced restricted system, extended by the declared Gamma.
/// Generators acting trivially on t are dropped, since the algebra needs a faithful action.
inline SupportWeylData support_weyl_data(const LieAlgebra &L) {
    auto spaces = restricted_root_spaces(L);
    std::set<std::vector<long>> roots;
    for (const auto &[t, b] : spaces) roots.insert(t);
    auto rs = RootSystem::from_cartan(restricted_cartan(roots, L.rank()), L.central_dim);
    std::set<std::vector<long>> generated(rs.roots().begin(), rs.roots().end());
    if (generated != roots)
        throw InputError("restricted roots of '" + L.name + "' do not form a reduced root system with the given base");
    SupportWeylData out;
    out.declared_gamma_order = L.gamma_order;
    std::vector<std::vector<std::size_t>> gens;
    for (std::size_t j = 0; j < L.gamma.size(); ++j) {
        const auto &p = L.gamma[j];
        bool identity = true;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != i) identity = false;
        if (identity && L.central_dim == 0) {
            out.notes.push_back("Gamma generator " + std::to_string(j + 1) +
                                " acts trivially on t; dropped because the action must be faithful");
            out.truncated = true;
            continue;
        }
        gens.push_back(p);
    }
    try {
        out.group = std::make_shared<const ExtendedWeylGroup>(rs, gens);
    } catch (const InputError &e) {
        throw InputError(std::string("Gamma fails to stabilize the base: ") + e.what());
    }
    if (out.group->gamma_size() != L.gamma_order) {
        out.notes.push_back("declared |Gamma| = " + std::to_string(L.gamma_order) + ", realized on t: " +
                            std::to_string(out.group->gamma_size()));
        out.truncated = true;
    }
    return out;
}

struct LieParameters {
    SupportWeylData weyl;
    std::map<std::vector<long>, long> raw;  // every indivisible restricted root
    std::map<std::vector<long>, std::size_t> space_dim;
    std::vector<long> simple;
    std::optional<ParameterFunction> k;
    std::optional<std::string> conflict;
};

/// k(alpha) = smallest integer with ad(v)^{k-1} = 0 on g_alpha + g_{2 alpha}.
inline LieParameters compute_parameters(const LieAlgebra &L, const std::vector<Scalar> &v) {
    L.validate();
    if (v.size() != L.dim()) throw InputError("v has wrong dimension");
    for (std::size_t i = 0; i < L.dim(); ++i)
        if (!v[i].is_zero() && !L.in_m(i)) throw InputError("v must lie in m, but has a component on " + L.basis[i]);
    Matrix adv = L.ad(v);
    if (!nilpotency_index(adv)) throw InputError("v is not nilpotent");
    LieParameters out;
    out.weyl = support_weyl_data(L);
    for (const auto &[t, b] : restricted_root_spaces(L)) {
        Matrix block(b.size(), b.size());
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) block(i, j) = adv(b[i], b[j]);
        auto m = nilpotency_index(block);
        if (!m) throw Error("ad(v) is not nilpotent on a root space");
        out.raw[t] = static_cast<long>(*m) + 1;
        out.space_dim[t] = b.size();
    }
    const auto &rs = out.weyl.group->roots();
    std::vector<Scalar> simple;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        std::vector<long> e(rs.rank(), 0);
        e[i] = 1;
        out.simple.push_back(out.raw.at(e));
        simple.push_back(Scalar(out.raw.at(e)));
    }
    try {
        ParameterFunction k = ParameterFunction::from_simple(*out.weyl.group, simple);
        for (std::size_t idx = 0; idx < rs.num_roots(); ++idx) {
            long expect = out.raw.at(rs.roots()[idx]);
            if (k(idx) != Scalar(expect)) {
                std::string orbit;
                for (std::size_t w = 0; w < out.weyl.group->size(); ++w) {
                    std::size_t b = out.weyl.group->act_on_root(w, idx);
                    if (rs.is_positive(b) && orbit.find(root_text(rs.roots()[b])) == std::string::npos)
                        orbit += (orbit.empty() ? "" : ", ") + root_text(rs.roots()[b]);
                }
                out.conflict = "root " + root_text(rs.roots()[idx]) + " has k = " + std::to_string(expect) +
                               " but its orbit {" + orbit + "} carries " + k(idx).to_string();
                break;
            }
        }
        if (!out.conflict) out.k = k;
    } catch (const InputError &e) {
        out.conflict = e.what();
    }
    return out;
}

/// Membership of (k(short), k(long)) in the list of allowed F4 parameter shapes (c nonzero).
inline bool f4_admissible(const Scalar &k_short, const Scalar &k_long) {
    if (k_long.is_zero()) return true;  // (0,0) and (c,0)
    const Scalar &c = k_long;
    for (const Scalar &f : {Scalar(0), Scalar(1), Scalar(2), Scalar(1, 2), Scalar(4), Scalar(-1), Scalar(-2),
                            Scalar(-1, 2), Scalar(-4)})
        if (k_short == f * c) return true;
    return false;
}

namespace detail {

inline std::vector<Scalar> flatten(const Matrix &m) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

inline Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
}

/// Grades a matrix Lie algebra whose basis elements are torus weight vectors.
/// Weights are integer vectors in epsilon coordinates; positivity uses the functional (m, m-1, ..., 1).
inline LieAlgebra from_matrix_model(std::string name, std::vector<std::string> names, const std::vector<Matrix> &mats,
                                    const std::vector<std::vector<long>> &weights) {
    std::size_t dim = mats.size(), n = mats[0].rows();
    std::size_t m = weights[0].size();
    Matrix basis(n * n, dim);
    for (std::size_t c = 0; c < dim; ++c) {
        auto f = flatten(mats[c]);
        for (std::size_t r = 0; r < n * n; ++r) basis(r, c) = f[r];
    }
    LieAlgebra L;
    L.name = std::move(name);
    L.basis = std::move(names);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            Matrix br = mats[i] * mats[j] - mats[j] * mats[i];
            if (br.is_zero()) continue;
            auto col = Matrix::column(flatten(br));
            auto coords = basis.solve(col);
            if (!coords) throw Error("matrix model is not closed under the bracket");
            auto &entry = L.brackets[{i, j}];
            for (std::size_t k = 0; k < dim; ++k)
                if (!(*coords)(k, 0).is_zero()) entry[k] = (*coords)(k, 0);
        }
    auto value = [&](const std::vector<long> &w) {
        long s = 0;
        for (std::size_t a = 0; a < m; ++a) s += w[a] * static_cast<long>(m - a);
        return s;
    };
    std::set<std::vector<long>> positive;
    for (const auto &w : weights)
        if (value(w) > 0) positive.insert(w);
    std::vector<std::vector<long>> simple;
    for (const auto &w : positive) {
        bool decomposable = false;
        for (const auto &a : positive) {
            std::vector<long> rest(m);
            for (std::size_t i = 0; i < m; ++i) rest[i] = w[i] - a[i];
            if (positive.count(rest)) decomposable = true;
        }
        if (!decomposable) simple.push_back(w);
    }
    std::sort(simple.begin(), simple.end(), [&](const auto &a, const auto &b) {
        // left to right along the epsilon coordinates
        auto lead = [](const std::vector<long> &w) {
            std::size_t i = 0;
            while (w[i] == 0) ++i;
            return i;
        };
        if (lead(a) != lead(b)) return lead(a) < lead(b);
        return a > b;
    });
    Matrix sm(m, simple.size());
    for (std::size_t c = 0; c < simple.size(); ++c)
        for (std::size_t r = 0; r < m; ++r) sm(r, c) = simple[c][r];
    for (std::size_t a = 0; a < simple.size(); ++a) L.simple_roots.push_back("a" + std::to_string(a + 1));
    for (const auto &w : weights) {
        std::vector<long> tag(simple.size(), 0);
        if (std::any_of(w.begin(), w.end(), [](long c) { return c != 0; })) {
            std::vector<Scalar> ws(w.begin(), w.end());
            auto c = sm.solve(Matrix::column(ws));
            if (!c) throw Error("weight outside the span of the simple restricted roots");
            for (std::size_t a = 0; a < simple.size(); ++a) {
                Scalar x = (*c)(a, 0);
                if (!x.is_rational() || x.rational().get_den() != 1) throw Error("non-integral restricted root");
                tag[a] = x.rational().get_num().get_si();
            }
        }
        L.tags.push_back(std::move(tag));
    }
    L.v.assign(dim, Scalar(0));
    return L;
}

}  // namespace detail

/// sl_n with M the block-diagonal Levi for the given block sizes; the grading is by Z(M)°.
inline LieAlgebra sl_levi(const std::vector<std::size_t> &blocks, std::string name = "") {
    std::size_t n = 0;
    std::vector<std::size_t> block_of;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t i = 0; i < blocks[b]; ++i, ++n) block_of.push_back(b);
    if (n < 2) throw InputError("sl_n needs n >= 2");
    std::vector<Matrix> mats;
    std::vector<std::string> names;
    std::vector<std::vector<long>> weights;
    auto weight = [&](std::size_t i, std::size_t j) {
        std::vector<long> w(blocks.size(), 0);
        w[block_of[i]] += 1;
        w[block_of[j]] -= 1;
        return w;
    };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        mats.push_back(detail::unit(n, i, i) - detail::unit(n, i + 1, i + 1));
        names.push_back("H" + std::to_string(i + 1));
        weights.emplace_back(blocks.size(), 0);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            mats.push_back(detail::unit(n, i, j));
            names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
            weights.push_back(weight(i, j));
        }
    if (name.empty()) name = "sl" + std::to_string(n);
    return detail::from_matrix_model(std::move(name), std::move(names), mats, weights);
}

/// Classical algebra {X : X^T J + J X = 0} for an antidiagonal form J, graded by the diagonal maximal torus.
/// symplectic: sp(2n) with J = antidiag(1,..,1,-1,..,-1); otherwise so(N) with J = antidiag(1,..,1).
inline LieAlgebra classical_algebra(std::size_t N, bool symplectic, std::string name) {
    Matrix J(N, N);
    for (std::size_t i = 0; i < N; ++i) J(i, N - 1 - i) = symplectic && i >= N / 2 ? -1 : 1;
    std::size_t rank = N / 2;
    // diagonal torus entry i is +eps_i for i < rank, -eps_{N-1-i} for i >= N - rank, and 0 in the middle (odd N)
    auto eps = [&](std::size_t i) {
        std::vector<long> w(rank, 0);
        if (i < rank) w[i] = 1;
        else if (i >= N - rank) w[N - 1 - i] = -1;
        return w;
    };
    std::map<std::vector<long>, std::vector<std::pair<std::size_t, std::size_t>>> groups;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            auto a = eps(i), b = eps(j);
            for (std::size_t k = 0; k < rank; ++k) a[k] -= b[k];
            groups[a].emplace_back(i, j);
        }
    std::vector<Matrix> mats;
    std::vector<std::string> names;
    std::vector<std::vector<long>> weights;
    std::size_t h = 0;
    // zero weight first so that the torus comes first in the basis
    std::vector<std::vector<long>> order;
    std::vector<long> zero(rank, 0);
    order.push_back(zero);
    for (const auto &[w, units] : groups)
        if (w != zero) order.push_back(w);
    for (const auto &w : order) {
        const auto &units = groups.at(w);
        // linear condition X^T J + J X = 0 on the span of these matrix units
        Matrix cond(N * N, units.size());
        for (std::size_t c = 0; c < units.size(); ++c) {
            Matrix x = detail::unit(N, units[c].first, units[c].second);
            auto f = detail::flatten(x.transpose() * J + J * x);
            for (std::size_t r = 0; r < N * N; ++r) cond(r, c) = f[r];
        }
        Matrix ker = cond.nullspace();
        for (std::size_t c = 0; c < ker.cols(); ++c) {
            Matrix x(N, N);
            std::optional<std::pair<std::size_t, std::size_t>> lead;
            for (std::size_t u = 0; u < units.size(); ++u) {
                if (ker(u, c).is_zero()) continue;
                x(units[u].first, units[u].second) = ker(u, c);
                if (!lead) lead = units[u];
            }
            mats.push_back(x);
            if (w == zero)
                names.push_back("H" + std::to_string(++h));
            else
                names.push_back("X" + std::to_string(lead->first + 1) + std::to_string(lead->second + 1));
            weights.push_back(w);
        }
    }
    return detail::from_matrix_model(std::move(name), std::move(names), mats, weights);
}

inline std::vector<std::string> lie_fixture_names() { return {"sl2", "sl3-gl2", "sl3-T", "sp4", "so5", "sl3-flip"}; }

inline LieAlgebra lie_fixture(const std::string &name) {
    if (name == "sl2") return sl_levi({1, 1}, name);
    if (name == "sl3-gl2") return sl_levi({2, 1}, name);
    if (name == "sl3-T") return sl_levi({1, 1, 1}, name);
    if (name == "sp4") return classical_algebra(4, true, name);
    if (name == "so5") return classical_algebra(5, false, name);
    if (name == "sl3-flip") {
        // the outer automorphism normalizes the gl2 Levi data only up to conjugacy and fixes the 1-dim t pointwise
        LieAlgebra L = sl_levi({2, 1}, name);
        L.gamma = {{0}};
        L.gamma_order = 2;
        return L;
    }
    std::string known;
    for (const auto &n : lie_fixture_names()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown Lie fixture '" + name + "' (known: " + known + ")");
}

/// v given as "0" or a sum of "c*Name" / "Name" terms, e.g. "E12" or "2*E12+E21".
inline std::vector<Scalar> parse_lie_vector(const LieAlgebra &L, const std::string &text) {
    std::vector<Scalar> v(L.dim());
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty() || t == "0") return v;
    std::size_t pos = 0;
    while (pos < t.size()) {
        Scalar sign = 1;
        if (t[pos] == '+' || t[pos] == '-') {
            if (t[pos] == '-') sign = -1;
            ++pos;
        }
        std::size_t end = t.find_first_of("+-", pos);
        std::string term = t.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? t.size() : end;
        Scalar coef = 1;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coef = Scalar::parse(term.substr(0, star));
            term = term.substr(star + 1);
        }
        v[L.index_of(term)] += sign * coef;
    }
    return v;
}

inline nlohmann::json lie_to_json(const LieAlgebra &L) {
    nlohmann::json j;
    j["name"] = L.name;
    j["basis"] = L.basis;
    j["simple_roots"] = L.simple_roots;
    j["central_dim"] = L.central_dim;
    nlohmann::json tags = nlohmann::json::object();
    for (std::size_t i = 0; i < L.dim(); ++i) tags[L.basis[i]] = L.tags[i];
    j["tags"] = tags;
    nlohmann::json m = nlohmann::json::array(), u = nlohmann::json::array();
    for (std::size_t i = 0; i < L.dim(); ++i) {
        if (L.in_m(i)) m.push_back(L.basis[i]);
        if (L.in_u(i)) u.push_back(L.basis[i]);
    }
    j["m"] = m;
    j["u"] = u;
    nlohmann::json br = nlohmann::json::array();
    for (const auto &[ij, res] : L.brackets) {
        nlohmann::json r = nlohmann::json::object();
        for (const auto &[k, c] : res) r[L.basis[k]] = c.to_string();
        br.push_back({{"x", L.basis[ij.first]}, {"y", L.basis[ij.second]}, {"result", r}});
    }
    j["brackets"] = br;
    nlohmann::json v = nlohmann::json::object();
    for (std::size_t i = 0; i < L.dim(); ++i)
        if (!L.v[i].is_zero()) v[L.basis[i]] = L.v[i].to_string();
    j["v"] = v;
    nlohmann::json gamma = nlohmann::json::array();
    for (const auto &p : L.gamma) {
        std::vector<std::size_t> q;
        for (auto x : p) q.push_back(x + 1);
        gamma.push_back(q);
    }
    j["gamma"] = gamma;
    j["gamma_order"] = L.gamma_order;
    j["cuspidal"] = L.cuspidal_asserted;
    return j;
}

/// Reads the fixture format written by lie_to_json. The m/u lists, when present, must agree with the tags.
inline LieAlgebra lie_from_json(const nlohmann::json &j) {
    LieAlgebra L;
    try {
        L.name = j.value("name", std::string("custom"));
        L.basis = j.at("basis").get<std::vector<std::string>>();
        L.simple_roots = j.at("simple_roots").get<std::vector<std::string>>();
        L.central_dim = j.value("central_dim", std::size_t{0});
        const auto &tags = j.at("tags");
        for (const auto &b : L.basis) {
            if (!tags.contains(b)) throw InputError("missing grading tag for " + b);
            L.tags.push_back(tags.at(b).get<std::vector<long>>());
        }
        for (const auto &e : j.at("brackets")) {
            std::size_t x = L.index_of(e.at("x").get<std::string>());
            std::size_t y = L.index_of(e.at("y").get<std::string>());
            auto &dst = L.brackets[{x, y}];
            for (const auto &[k, c] : e.at("result").items()) dst[L.index_of(k)] = parse_scalar_literal(json_scalar_text(c));
        }
        L.v.assign(L.dim(), Scalar(0));
        if (j.contains("v"))
            for (const auto &[k, c] : j.at("v").items()) L.v[L.index_of(k)] = parse_scalar_literal(json_scalar_text(c));
        for (const auto &p : j.value("gamma", nlohmann::json::array())) {
            std::vector<std::size_t> q;
            for (const auto &x : p) {
                long e = x.get<long>();
                if (e < 1) throw InputError("Gamma permutation entries are 1-based");
                q.push_back(static_cast<std::size_t>(e - 1));
            }
            L.gamma.push_back(std::move(q));
        }
        L.gamma_order = j.value("gamma_order", std::size_t{1});
        L.cuspidal_asserted = j.value("cuspidal", false);
        for (const char *key : {"m", "u"}) {
            if (!j.contains(key)) continue;
            std::set<std::string> listed;
            for (const auto &n : j.at(key)) listed.insert(n.get<std::string>());
            for (std::size_t i = 0; i < L.dim(); ++i) {
                if (i >= L.tags.size() || L.tags[i].size() != L.rank()) break;
                bool member = std::string(key) == "m" ? L.in_m(i) : L.in_u(i);
                if (member != static_cast<bool>(listed.count(L.basis[i])))
                    throw InputError(std::string("membership in ") + key + " disagrees with the grading tag of " +
                                     L.basis[i]);
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("bad Lie fixture: ") + e.what());
    }
    return L;
}

}  // namespace ghecke
