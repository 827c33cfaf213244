#pragma once

#include "ghecke/matrix.hpp"
#include "ghecke/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ghecke {

/// Square integer matrix; used for the action of W x| Gamma on t^vee in the simple-root basis.
struct IntMatrix {
    std::size_t n = 0;
    std::vector<long> a;

    IntMatrix() = default;
    explicit IntMatrix(std::size_t size) : n(size), a(size * size, 0) {}
    static IntMatrix identity(std::size_t size) {
        IntMatrix m(size);
        for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
        return m;
    }

    long &operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    long operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    friend IntMatrix operator*(const IntMatrix &x, const IntMatrix &y) {
        IntMatrix z(x.n);
        for (std::size_t i = 0; i < x.n; ++i)
            for (std::size_t k = 0; k < x.n; ++k) {
                long xik = x(i, k);
                if (!xik) continue;
                for (std::size_t j = 0; j < x.n; ++j) z(i, j) += xik * y(k, j);
            }
        return z;
    }
    friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

    std::vector<long> apply(const std::vector<long> &v) const {
        std::vector<long> out(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Matrix to_matrix() const {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(static_cast<long>((*this)(i, j)));
        return m;
    }
};

struct IntMatrixHash {
    std::size_t operator()(const IntMatrix &m) const {
        std::size_t h = 1469598103934665603ull;
        for (long v : m.a) h = (h ^ static_cast<std::size_t>(v + 7)) * 1099511628211ull;
        return h;
    }
};

struct CartanType {
    char family = 'A';
    std::size_t rank = 1;

    std::string name() const { return std::string(1, family) + std::to_string(rank); }

    static CartanType parse(const std::string &text) {
        if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
            throw InputError("bad Cartan type '" + text + "'");
        CartanType t;
        t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
        try {
            t.rank = std::stoul(text.substr(1));
        } catch (const std::exception &) {
            throw InputError("bad Cartan type '" + text + "'");
        }
        bool ok = (t.family == 'A' && t.rank >= 1) || (t.family == 'B' && t.rank >= 2) ||
                  (t.family == 'C' && t.rank >= 2) || (t.family == 'D' && t.rank >= 4) ||
                  (t.family == 'F' && t.rank == 4) || (t.family == 'G' && t.rank == 2);
        if (!ok) throw InputError("unsupported Cartan type '" + text + "'");
        return t;
    }
};

/// Decides membership of a point of a in the obtuse negative cone.
struct ConeMembership {
    bool closed = false;        // real part of the R-span component lies in a^-
    bool open = false;          // ... in the relative interior a^--
    bool central_zero = false;  // the z-component vanishes
    std::vector<mpq_class> coroot_coefficients;
};

/// Reduced integral root system with an orthogonal central complement.
///
/// Coordinates on t^vee are the simple roots followed by `central_dim`
/// coordinates of z; roots are integer vectors in the simple-root basis.
class RootSystem {
  public:
    using Root = std::vector<long>;

    struct Component {
        std::vector<std::size_t> simple;  // simple-root indices
        CartanType type;
    };

    static RootSystem from_types(const std::vector<CartanType> &types, std::size_t central_dim) {
        std::size_t n = 0;
        for (const auto &t : types) n += t.rank;
        std::vector<std::vector<Scalar>> gram(n, std::vector<Scalar>(n));
        std::vector<Component> comps;
        std::size_t off = 0;
        for (const auto &t : types) {
            auto g = standard_gram(t);
            Component c{{}, t};
            for (std::size_t i = 0; i < t.rank; ++i) {
                c.simple.push_back(off + i);
                for (std::size_t j = 0; j < t.rank; ++j) gram[off + i][off + j] = g[i][j];
            }
            comps.push_back(std::move(c));
            off += t.rank;
        }
        return RootSystem(std::move(gram), central_dim, std::move(comps));
    }

    /// Build from a Cartan matrix cartan[i][j] = <alpha_i, alpha_j^vee>; lengths come from a symmetrizer.
    static RootSystem from_cartan(const std::vector<std::vector<long>> &cartan, std::size_t central_dim) {
        std::size_t n = cartan.size();
        std::vector<std::optional<Scalar>> len(n);
        for (std::size_t start = 0; start < n; ++start) {
            if (len[start]) continue;
            len[start] = Scalar(2);
            std::vector<std::size_t> stack{start};
            while (!stack.empty()) {
                std::size_t i = stack.back();
                stack.pop_back();
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || cartan[i][j] == 0) continue;
                    if (cartan[j][i] == 0) throw InputError("Cartan matrix is not symmetrizable");
                    // cartan[i][j] d_j = cartan[j][i] d_i
                    Scalar dj = Scalar(cartan[j][i]) * (*len[i]) / Scalar(cartan[i][j]);
                    if (!len[j]) {
                        len[j] = dj;
                        stack.push_back(j);
                    } else if (*len[j] != dj) {
                        throw InputError("Cartan matrix is not symmetrizable");
                    }
                }
            }
        }
        std::vector<std::vector<Scalar>> gram(n, std::vector<Scalar>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gram[i][j] = Scalar(cartan[i][j]) * (*len[j]) / Scalar(2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (gram[i][j] != gram[j][i]) throw InputError("Cartan matrix is not symmetrizable");
        RootSystem rs(std::move(gram), central_dim, {});
        rs.components_ = rs.identify_components();
        return rs;
    }

    std::size_t rank() const { return rank_; }
    std::size_t central_dim() const { return central_dim_; }
    std::size_t dim() const { return rank_ + central_dim_; }

    const std::vector<Root> &roots() const { return roots_; }
    std::size_t num_roots() const { return roots_.size(); }
    std::size_t num_positive() const { return roots_.size() / 2; }
    bool is_positive(std::size_t idx) const { return idx < num_positive(); }
    std::size_t simple_root_index(std::size_t i) const { return simple_index_[i]; }
    std::size_t negative_of(std::size_t idx) const {
        return idx < num_positive() ? idx + num_positive() : idx - num_positive();
    }

    std::optional<std::size_t> index_of(const Root &r) const {
        auto it = index_.find(r);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const Scalar &gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }
    long cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

    Scalar inner(const Root &a, const Root &b) const {
        Scalar s;
        for (std::size_t i = 0; i < rank_; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < rank_; ++j)
                if (b[j]) s += Scalar(a[i] * b[j]) * gram_[i][j];
        }
        return s;
    }
    Scalar squared_length(std::size_t idx) const { return inner(roots_[idx], roots_[idx]); }

    /// <beta, alpha^vee>
    long pairing(const Root &beta, const Root &alpha) const {
        Scalar v = Scalar(2) * inner(beta, alpha) / inner(alpha, alpha);
        const mpq_class &q = v.rational();
        if (q.get_den() != 1) throw Error("non-integral root pairing");
        return q.get_num().get_si();
    }

    Root reflect(const Root &alpha, const Root &beta) const {
        long p = pairing(beta, alpha);
        Root out = beta;
        for (std::size_t i = 0; i < rank_; ++i) out[i] -= p * alpha[i];
        return out;
    }

    /// Action of s_{alpha_i} on t^vee (columns are images of the coordinate basis).
    IntMatrix simple_reflection(std::size_t i) const {
        IntMatrix m = IntMatrix::identity(dim());
        for (std::size_t j = 0; j < rank_; ++j) m(i, j) -= cartan_[j][i];
        return m;
    }

    /// Coordinates of a root as a linear form on t.
    std::vector<Scalar> linear_form(std::size_t idx) const {
        std::vector<Scalar> v(dim());
        for (std::size_t i = 0; i < rank_; ++i) v[i] = Scalar(roots_[idx][i]);
        return v;
    }

    const std::vector<Component> &components() const { return components_; }
    std::size_t component_of_simple(std::size_t i) const {
        for (std::size_t c = 0; c < components_.size(); ++c)
            for (auto s : components_[c].simple)
                if (s == i) return c;
        throw Error("simple root without component");
    }
    std::size_t component_of_root(std::size_t idx) const {
        for (std::size_t i = 0; i < rank_; ++i)
            if (roots_[idx][i] != 0) return component_of_simple(i);
        throw Error("zero root");
    }

    bool component_has_two_lengths(std::size_t c) const {
        const auto &s = components_[c].simple;
        for (auto i : s)
            if (gram_[i][i] != gram_[s.front()][s.front()]) return true;
        return false;
    }

    /// True when the root is long inside its (two-length) component; false for short or single-length.
    bool is_long(std::size_t idx) const {
        std::size_t c = component_of_root(idx);
        if (!component_has_two_lengths(c)) return false;
        Scalar mx;
        for (auto i : components_[c].simple)
            if (mx.is_zero() || (gram_[i][i] - mx).sign() > 0) mx = gram_[i][i];
        return squared_length(idx) == mx;
    }

    std::string label() const {
        std::string s;
        for (const auto &c : components_) s += (s.empty() ? "" : "x") + c.type.name();
        if (s.empty()) s = "T0";
        if (central_dim_) s += "+Z" + std::to_string(central_dim_);
        return s;
    }

    /// Membership test for a real point of a given by its coordinate values x_i(point).
    ConeMembership cone_membership(const std::vector<mpq_class> &values) const {
        if (values.size() != dim()) throw Error("cone membership: point has wrong dimension");
        ConeMembership out;
        out.central_zero = true;
        for (std::size_t j = rank_; j < dim(); ++j)
            if (values[j] != 0) out.central_zero = false;
        // alpha_i(x) = sum_j c_j <alpha_i, alpha_j^vee>
        Matrix a(rank_, rank_);
        Matrix rhs(rank_, 1);
        for (std::size_t i = 0; i < rank_; ++i) {
            for (std::size_t j = 0; j < rank_; ++j) a(i, j) = Scalar(cartan_[i][j]);
            rhs(i, 0) = Scalar(values[i]);
        }
        auto c = a.solve(rhs);
        out.closed = out.open = true;
        for (std::size_t i = 0; i < rank_; ++i) {
            mpq_class ci = (*c)(i, 0).rational();
            out.coroot_coefficients.push_back(ci);
            if (ci > 0) out.closed = false;
            if (ci >= 0) out.open = false;
        }
        if (!out.closed) out.open = false;
        return out;
    }

    static std::vector<std::vector<Scalar>> standard_gram(const CartanType &t) {
        std::size_t n = t.rank;
        std::vector<std::vector<Scalar>> g(n, std::vector<Scalar>(n));
        auto link = [&](std::size_t i, std::size_t j, Scalar v) { g[i][j] = g[j][i] = v; };
        switch (t.family) {
        case 'A':
            for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case 'B':
            for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
            g[n - 1][n - 1] = 1;
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case 'C':
            for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
            g[n - 1][n - 1] = 2;
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, Scalar(-1, 2));
            link(n - 2, n - 1, -1);
            break;
        case 'D':
            for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case 'F':
            g[0][0] = g[1][1] = 2;
            g[2][2] = g[3][3] = 1;
            link(0, 1, -1);
            link(1, 2, -1);
            link(2, 3, Scalar(-1, 2));
            break;
        case 'G':
            g[0][0] = 2;
            g[1][1] = 6;
            link(0, 1, -3);
            break;
        default:
            throw InputError("unsupported Cartan type " + t.name());
        }
        return g;
    }

  private:
    RootSystem(std::vector<std::vector<Scalar>> gram, std::size_t central_dim, std::vector<Component> comps)
        : rank_(gram.size()), central_dim_(central_dim), gram_(std::move(gram)), components_(std::move(comps)) {
        if (dim() + 1 > 12) throw InputError("rank plus central dimension too large");
        cartan_.assign(rank_, std::vector<long>(rank_, 0));
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) {
                Scalar v = Scalar(2) * gram_[i][j] / gram_[j][j];
                if (v.rational().get_den() != 1) throw InputError("non-integral Cartan matrix");
                cartan_[i][j] = v.rational().get_num().get_si();
            }
        enumerate_roots();
    }

    void enumerate_roots() {
        std::vector<Root> found;
        std::map<Root, bool> seen;
        for (std::size_t i = 0; i < rank_; ++i) {
            Root r(rank_, 0);
            r[i] = 1;
            if (!seen.count(r)) {
                seen[r] = true;
                found.push_back(r);
            }
        }
        for (std::size_t k = 0; k < found.size(); ++k) {
            if (found.size() > 100000) throw InputError("root system too large");
            for (std::size_t i = 0; i < rank_; ++i) {
                Root r = found[k];
                long p = 0;
                for (std::size_t j = 0; j < rank_; ++j) p += r[j] * cartan_[j][i];
                r[i] -= p;
                if (!seen.count(r)) {
                    seen[r] = true;
                    found.push_back(r);
                }
            }
        }
        std::vector<Root> pos;
        for (auto &r : found) {
            bool positive = std::all_of(r.begin(), r.end(), [](long c) { return c >= 0; });
            bool negative = std::all_of(r.begin(), r.end(), [](long c) { return c <= 0; });
            if (!positive && !negative) throw Error("root with mixed-sign coordinates: base is invalid");
            if (positive) pos.push_back(r);
        }
        auto height = [](const Root &r) {
            long h = 0;
            for (auto c : r) h += c;
            return h;
        };
        std::sort(pos.begin(), pos.end(), [&](const Root &a, const Root &b) {
            if (height(a) != height(b)) return height(a) < height(b);
            return a > b;
        });
        roots_ = pos;
        for (auto r : pos) {
            for (auto &c : r) c = -c;
            roots_.push_back(r);
        }
        for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = i;
        simple_index_.resize(rank_);
        for (std::size_t i = 0; i < rank_; ++i) {
            Root r(rank_, 0);
            r[i] = 1;
            simple_index_[i] = index_.at(r);
        }
    }

    std::vector<Component> identify_components() const {
        std::vector<Component> comps;
        std::vector<bool> done(rank_, false);
        for (std::size_t s = 0; s < rank_; ++s) {
            if (done[s]) continue;
            std::vector<std::size_t> nodes{s};
            done[s] = true;
            for (std::size_t k = 0; k < nodes.size(); ++k)
                for (std::size_t j = 0; j < rank_; ++j)
                    if (!done[j] && cartan_[nodes[k]][j] != 0) {
                        done[j] = true;
                        nodes.push_back(j);
                    }
            std::sort(nodes.begin(), nodes.end());
            comps.push_back({nodes, classify(nodes)});
        }
        return comps;
    }

    CartanType classify(const std::vector<std::size_t> &nodes) const {
        std::size_t n = nodes.size();
        std::vector<std::size_t> degree(n, 0);
        long max_bond = 1;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b || cartan_[nodes[a]][nodes[b]] == 0) continue;
                ++degree[a];
                max_bond = std::max(max_bond, cartan_[nodes[a]][nodes[b]] * cartan_[nodes[b]][nodes[a]]);
            }
        if (max_bond == 3) return {'G', 2};
        bool branch = std::any_of(degree.begin(), degree.end(), [](std::size_t d) { return d >= 3; });
        if (branch) {
            if (num_roots_in(nodes) == 2 * n * (n - 1)) return {'D', n};
            throw InputError("exceptional simply-laced type E is not supported");
        }
        if (max_bond == 1) return {'A', n};
        if (n == 2) return {'B', 2};
        // find the double bond
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b || cartan_[nodes[a]][nodes[b]] * cartan_[nodes[b]][nodes[a]] != 2) continue;
                bool a_end = degree[a] == 1, b_end = degree[b] == 1;
                if (!a_end && !b_end) return {'F', 4};
                std::size_t end = a_end ? a : b, inner = a_end ? b : a;
                // B_n: the end node is the unique short root
                if (cartan_[nodes[inner]][nodes[end]] == -2) return {'B', n};
                return {'C', n};
            }
        throw InputError("could not identify root system component");
    }

    std::size_t num_roots_in(const std::vector<std::size_t> &nodes) const {
        std::size_t count = 0;
        for (const auto &r : roots_) {
            bool inside = true;
            for (std::size_t i = 0; i < rank_; ++i)
                if (r[i] != 0 && std::find(nodes.begin(), nodes.end(), i) == nodes.end()) inside = false;
            if (inside) ++count;
        }
        return count;
    }

    std::size_t rank_ = 0;
    std::size_t central_dim_ = 0;
    std::vector<std::vector<Scalar>> gram_;
    std::vector<std::vector<long>> cartan_;
    std::vector<Root> roots_;
    std::map<Root, std::size_t> index_;
    std::vector<std::size_t> simple_index_;
    std::vector<Component> components_;
};

}  // namespace ghecke
