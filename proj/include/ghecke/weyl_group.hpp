#pragma once

#include "ghecke/root_system.hpp"

#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ghecke {

/// Normalized 2-cocycle on Gamma, indexed by the Gamma enumeration order (identity first).
class Cocycle {
  public:
    struct Violation {
        std::size_t a = 0, b = 0, c = 0;  // indices into Gamma; c unused for normalization failures
        std::string kind;
        std::string describe() const {
            return kind + " at (" + std::to_string(a) + ", " + std::to_string(b) +
                   (kind == "cocycle identity" ? ", " + std::to_string(c) : std::string()) + ")";
        }
    };

    Cocycle() : order_(1), table_{Scalar(1)} {}
    Cocycle(std::size_t order, std::vector<Scalar> table) : order_(order), table_(std::move(table)) {
        if (table_.size() != order_ * order_) throw InputError("cocycle table has wrong size");
    }
    static Cocycle trivial(std::size_t order) { return Cocycle(order, std::vector<Scalar>(order * order, Scalar(1))); }

    std::size_t order() const { return order_; }
    const Scalar &operator()(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
    const std::vector<Scalar> &table() const { return table_; }

    bool is_trivial() const {
        for (const auto &v : table_)
            if (!v.is_one()) return false;
        return true;
    }

    /// Checks nonvanishing, normalization and natural(a,b) natural(ab,c) = natural(b,c) natural(a,bc).
    std::optional<Violation> validate(const std::vector<std::size_t> &mult) const {
        for (std::size_t a = 0; a < order_; ++a)
            for (std::size_t b = 0; b < order_; ++b)
                if ((*this)(a, b).is_zero()) return Violation{a, b, 0, "zero value"};
        // the identity comes first so that a bad table is reported by a triple
        if (auto v = check_identity(mult)) return v;
        for (std::size_t a = 0; a < order_; ++a) {
            if (!(*this)(0, a).is_one()) return Violation{0, a, 0, "normalization"};
            if (!(*this)(a, 0).is_one()) return Violation{a, 0, 0, "normalization"};
        }
        return std::nullopt;
    }

    std::optional<Violation> check_identity(const std::vector<std::size_t> &mult) const {
        auto m = [&](std::size_t x, std::size_t y) { return mult[x * order_ + y]; };
        for (std::size_t a = 0; a < order_; ++a)
            for (std::size_t b = 0; b < order_; ++b)
                for (std::size_t c = 0; c < order_; ++c)
                    if ((*this)(a, b) * (*this)(m(a, b), c) != (*this)(b, c) * (*this)(a, m(b, c)))
                        return Violation{a, b, c, "cocycle identity"};
        return std::nullopt;
    }

    /// Divide by the constant coboundary natural(e,e); any cocycle has natural(e,g) = natural(g,e) = natural(e,e).
    Cocycle normalized() const {
        Scalar c = (*this)(0, 0);
        if (c.is_zero()) throw InputError("cocycle has a zero value");
        std::vector<Scalar> t = table_;
        for (auto &v : t) v /= c;
        return Cocycle(order_, std::move(t));
    }

  private:
    std::size_t order_;
    std::vector<Scalar> table_;
};

/// Element of W x| Gamma with a reduced word for its W-part.
struct GroupElement {
    std::size_t w = 0;      // index into the W enumeration
    std::size_t gamma = 0;  // index into the Gamma enumeration
    std::vector<std::size_t> word;        // reduced word in simple reflections
    std::vector<std::size_t> gamma_word;  // word in the Gamma generators
    IntMatrix matrix;                     // action on t^vee
    int sign = 1;                         // (-1)^length of the W-part
    std::size_t length() const { return word.size(); }
};

/// The finite group W x| Gamma acting on t, with Gamma realized by diagram automorphisms.
///
/// Elements are numbered gamma * |W| + w, so W occupies the first |W| slots and
/// index 0 is the identity.
class ExtendedWeylGroup {
  public:
    ExtendedWeylGroup(RootSystem roots, std::vector<std::vector<std::size_t>> gamma_generators = {},
                      std::size_t cap = 60000)
        : roots_(std::move(roots)), gamma_generators_(std::move(gamma_generators)) {
        validate_gamma();
        enumerate_w(cap);
        enumerate_gamma();
        build_elements(cap);
    }

    const RootSystem &roots() const { return roots_; }
    std::size_t size() const { return elements_.size(); }
    std::size_t w_size() const { return w_matrices_.size(); }
    std::size_t gamma_size() const { return gamma_perms_.size(); }
    std::size_t dim() const { return roots_.dim(); }
    std::size_t rank() const { return roots_.rank(); }
    const GroupElement &element(std::size_t i) const { return elements_[i]; }
    const std::vector<GroupElement> &elements() const { return elements_; }
    const std::vector<std::vector<std::size_t>> &gamma_generators() const { return gamma_generators_; }
    const std::vector<std::vector<std::size_t>> &gamma_permutations() const { return gamma_perms_; }

    std::size_t index(std::size_t w, std::size_t gamma) const { return gamma * w_size() + w; }
    std::size_t simple_reflection(std::size_t i) const { return simple_elements_[i]; }
    std::size_t gamma_generator(std::size_t j) const { return index(0, gamma_gen_index_[j]); }
    /// Element index of a Gamma enumeration index.
    std::size_t gamma_element(std::size_t g) const { return index(0, g); }

    std::size_t multiply(std::size_t a, std::size_t b) const {
        if (!table_.empty()) return table_[a * size() + b];
        return multiply_uncached(a, b);
    }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }

    std::optional<std::size_t> find(const IntMatrix &m) const {
        auto it = by_matrix_.find(m);
        if (it == by_matrix_.end()) return std::nullopt;
        return it->second;
    }

    /// Gamma multiplication table (indices in the Gamma enumeration).
    const std::vector<std::size_t> &gamma_table() const { return gamma_table_; }

    /// Image of root `idx` under element `g`.
    std::size_t act_on_root(std::size_t g, std::size_t idx) const {
        const auto &m = elements_[g].matrix;
        const auto &r = roots_.roots()[idx];
        std::vector<long> v(dim(), 0);
        for (std::size_t i = 0; i < roots_.rank(); ++i) v[i] = r[i];
        auto img = m.apply(v);
        img.resize(roots_.rank());
        auto found = roots_.index_of(img);
        if (!found) throw Error("group element does not preserve the root system");
        return *found;
    }

    /// Element index of the reflection s_beta for any root.
    std::size_t reflection(std::size_t root_idx) const {
        const auto &alpha = roots_.roots()[root_idx];
        IntMatrix m = IntMatrix::identity(dim());
        for (std::size_t j = 0; j < roots_.rank(); ++j) {
            RootSystem::Root e(roots_.rank(), 0);
            e[j] = 1;
            long p = roots_.pairing(e, alpha);
            for (std::size_t i = 0; i < roots_.rank(); ++i) m(i, j) -= p * alpha[i];
        }
        auto found = find(m);
        if (!found) throw Error("reflection not found in group");
        return *found;
    }

    /// Point action on t: the values x_i(w lambda) from x_i(lambda).
    std::vector<Scalar> act_on_point(std::size_t g, const std::vector<Scalar> &lambda) const {
        // x_i(w lambda) = (w^{-1} x_i)(lambda)
        const auto &m = elements_[inverse(g)].matrix;
        std::vector<Scalar> out(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t k = 0; k < dim(); ++k)
                if (m(k, i)) out[i] += Scalar(m(k, i)) * lambda[k];
        return out;
    }

    std::string element_name(std::size_t g) const {
        const auto &e = elements_[g];
        if (e.word.empty() && e.gamma_word.empty()) return "e";
        std::string s;
        for (auto i : e.word) s += (s.empty() ? "" : "*") + reflection_name(i);
        for (auto j : e.gamma_word) s += (s.empty() ? "" : "*") + std::string("g") + std::to_string(j + 1);
        return s;
    }
    std::string reflection_name(std::size_t i) const { return rank() == 1 ? "s" : "s" + std::to_string(i + 1); }

  private:
    void validate_gamma() {
        std::size_t n = roots_.rank();
        for (const auto &p : gamma_generators_) {
            if (p.size() != n) throw InputError("Gamma generator must permute all simple roots");
            std::vector<bool> hit(n, false);
            for (auto v : p) {
                if (v >= n || hit[v]) throw InputError("Gamma generator is not a permutation");
                hit[v] = true;
            }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (roots_.gram(p[i], p[j]) != roots_.gram(i, j))
                        throw InputError("Gamma generator is not a diagram automorphism");
        }
    }

    IntMatrix gamma_matrix(const std::vector<std::size_t> &perm) const {
        IntMatrix m = IntMatrix::identity(dim());
        for (std::size_t i = 0; i < roots_.rank(); ++i) m(i, i) = 0;
        for (std::size_t i = 0; i < roots_.rank(); ++i) m(perm[i], i) = 1;
        return m;
    }

    void enumerate_w(std::size_t cap) {
        std::vector<IntMatrix> gens;
        for (std::size_t i = 0; i < roots_.rank(); ++i) gens.push_back(roots_.simple_reflection(i));
        w_matrices_.push_back(IntMatrix::identity(dim()));
        w_words_.push_back({});
        w_index_.emplace(w_matrices_[0], 0);
        for (std::size_t k = 0; k < w_matrices_.size(); ++k) {
            for (std::size_t i = 0; i < gens.size(); ++i) {
                IntMatrix m = w_matrices_[k] * gens[i];
                if (w_index_.count(m)) continue;
                if (w_matrices_.size() >= cap) throw InputError("group size exceeds cap");
                w_index_.emplace(m, w_matrices_.size());
                w_matrices_.push_back(m);
                auto word = w_words_[k];
                word.push_back(i);
                w_words_.push_back(std::move(word));
            }
        }
    }

    void enumerate_gamma() {
        std::size_t n = roots_.rank();
        std::vector<std::size_t> id(n);
        for (std::size_t i = 0; i < n; ++i) id[i] = i;
        gamma_perms_.push_back(id);
        gamma_words_.push_back({});
        std::map<std::vector<std::size_t>, std::size_t> seen{{id, 0}};
        for (std::size_t k = 0; k < gamma_perms_.size(); ++k)
            for (std::size_t j = 0; j < gamma_generators_.size(); ++j) {
                // composition: apply generator after current
                std::vector<std::size_t> p(n);
                for (std::size_t i = 0; i < n; ++i) p[i] = gamma_perms_[k][gamma_generators_[j][i]];
                if (seen.count(p)) continue;
                seen.emplace(p, gamma_perms_.size());
                gamma_perms_.push_back(p);
                auto word = gamma_words_[k];
                word.push_back(j);
                gamma_words_.push_back(std::move(word));
            }
        std::size_t m = gamma_perms_.size();
        gamma_table_.assign(m * m, 0);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                std::vector<std::size_t> p(n);
                for (std::size_t i = 0; i < n; ++i) p[i] = gamma_perms_[a][gamma_perms_[b][i]];
                gamma_table_[a * m + b] = seen.at(p);
            }
        for (const auto &g : gamma_generators_) gamma_gen_index_.push_back(seen.at(g));
        for (std::size_t a = 0; a < m; ++a) gamma_mats_.push_back(gamma_matrix(gamma_perms_[a]));
    }

    void build_elements(std::size_t cap) {
        std::size_t nw = w_matrices_.size(), ng = gamma_perms_.size();
        if (nw * ng > cap) throw InputError("group size exceeds cap");
        elements_.resize(nw * ng);
        for (std::size_t g = 0; g < ng; ++g)
            for (std::size_t w = 0; w < nw; ++w) {
                auto &e = elements_[index(w, g)];
                e.w = w;
                e.gamma = g;
                e.word = w_words_[w];
                e.gamma_word = gamma_words_[g];
                e.matrix = w_matrices_[w] * gamma_mats_[g];
                e.sign = (e.word.size() % 2) ? -1 : 1;
                if (!by_matrix_.emplace(e.matrix, index(w, g)).second)
                    throw InputError("W x| Gamma does not act faithfully on t");
            }
        // gamma w gamma^{-1} on W
        conj_.assign(ng * nw, 0);
        for (std::size_t g = 0; g < ng; ++g) {
            IntMatrix ginv = gamma_mats_[inverse_gamma(g)];
            for (std::size_t w = 0; w < nw; ++w)
                conj_[g * nw + w] = w_index_.at(gamma_mats_[g] * w_matrices_[w] * ginv);
        }
        simple_elements_.clear();
        for (std::size_t i = 0; i < roots_.rank(); ++i)
            simple_elements_.push_back(w_index_.at(roots_.simple_reflection(i)));
        if (size() <= 2048) {
            table_.assign(size() * size(), 0);
            for (std::size_t a = 0; a < size(); ++a)
                for (std::size_t b = 0; b < size(); ++b) table_[a * size() + b] = multiply_uncached(a, b);
        }
        inverse_.assign(size(), 0);
        for (std::size_t a = 0; a < size(); ++a) {
            const auto &e = elements_[a];
            // (w g)^{-1} = g^{-1} w^{-1} = (g^{-1} w^{-1} g) g^{-1}
            std::size_t gi = inverse_gamma(e.gamma);
            std::size_t winv = w_inverse(e.w);
            inverse_[a] = index(conj_[gi * nw + winv], gi);
        }
    }

    std::size_t inverse_gamma(std::size_t g) const {
        std::size_t m = gamma_perms_.size();
        for (std::size_t h = 0; h < m; ++h)
            if (gamma_table_[g * m + h] == 0) return h;
        throw Error("Gamma element without inverse");
    }

    std::size_t w_inverse(std::size_t w) const {
        // reverse the word
        IntMatrix m = IntMatrix::identity(dim());
        const auto &word = w_words_[w];
        for (auto it = word.rbegin(); it != word.rend(); ++it) m = m * roots_.simple_reflection(*it);
        return w_index_.at(m);
    }

    std::size_t multiply_uncached(std::size_t a, std::size_t b) const {
        const auto &x = elements_[a];
        const auto &y = elements_[b];
        std::size_t nw = w_matrices_.size();
        // (w1 g1)(w2 g2) = w1 (g1 w2 g1^-1) g1 g2
        std::size_t conj = conj_[x.gamma * nw + y.w];
        std::size_t w = w_index_.at(w_matrices_[x.w] * w_matrices_[conj]);
        std::size_t g = gamma_table_[x.gamma * gamma_perms_.size() + y.gamma];
        return index(w, g);
    }

    RootSystem roots_;
    std::vector<std::vector<std::size_t>> gamma_generators_;
    std::vector<IntMatrix> w_matrices_;
    std::vector<std::vector<std::size_t>> w_words_;
    std::unordered_map<IntMatrix, std::size_t, IntMatrixHash> w_index_;
    std::vector<std::vector<std::size_t>> gamma_perms_;
    std::vector<std::vector<std::size_t>> gamma_words_;
    std::vector<IntMatrix> gamma_mats_;
    std::vector<std::size_t> gamma_table_;
    std::vector<std::size_t> gamma_gen_index_;
    std::vector<GroupElement> elements_;
    std::unordered_map<IntMatrix, std::size_t, IntMatrixHash> by_matrix_;
    std::vector<std::size_t> conj_;
    std::vector<std::size_t> simple_elements_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
};

}  // namespace ghecke
