#pragma once

#include "ghecke/hecke_algebra.hpp"

namespace ghecke {

/// Splitting of an r = 1 algebra over R_1 x ... x R_e (+ z) with trivial Gamma into the tensor
/// product of the component algebras and O(z).
class TensorDecomposition {
  public:
    /// Basis tensor: one group element and one monomial per component, then the z-monomial.
    struct Key {
        std::vector<std::size_t> g;
        std::vector<Monomial> m;  // size = components + 1
        friend auto operator<=>(const Key &, const Key &) = default;
        friend bool operator==(const Key &, const Key &) = default;
    };
    using Tensor = std::map<Key, Scalar>;

    explicit TensorDecomposition(const HeckeAlgebra &h) : h_(h) {
        if (h.group().gamma_size() != 1) throw InputError("tensor decomposition needs trivial Gamma");
        if (h.mode() != Mode::r1) throw InputError("tensor decomposition is implemented for the r = 1 algebra");
        const auto &rs = h.roots();
        for (const auto &comp : rs.components()) {
            std::vector<std::vector<long>> cartan(comp.simple.size(), std::vector<long>(comp.simple.size()));
            for (std::size_t a = 0; a < comp.simple.size(); ++a)
                for (std::size_t b = 0; b < comp.simple.size(); ++b)
                    cartan[a][b] = rs.cartan(comp.simple[a], comp.simple[b]);
            auto grp = std::make_shared<const ExtendedWeylGroup>(RootSystem::from_cartan(cartan, 0));
            std::vector<Scalar> kv;
            for (auto i : comp.simple) kv.push_back(h.k().simple(rs, i));
            factors_.emplace_back(grp, ParameterFunction::from_simple(*grp, kv), Cocycle::trivial(1), Mode::r1);
            simple_.push_back(comp.simple);
        }
        for (std::size_t c = 0; c < simple_.size(); ++c)
            for (auto i : simple_[c]) letter_component_[i] = c;
    }

    std::size_t num_components() const { return factors_.size(); }
    const HeckeAlgebra &factor(std::size_t c) const { return factors_[c]; }

    Tensor to_tensor(const HeckeElement &a) const {
        Tensor t;
        for (const auto &[g, p] : a.terms()) {
            std::vector<std::size_t> parts(factors_.size(), 0);
            for (auto letter : h_.group().element(g).word) {
                std::size_t c = letter_component_.at(letter);
                std::size_t local = position(c, letter);
                parts[c] = factors_[c].group().multiply(parts[c], factors_[c].group().simple_reflection(local));
            }
            for (const auto &[m, coef] : p.terms()) {
                if (m.exp[h_.dim()]) throw InputError("r must be specialized before decomposing");
                Key k{parts, split(m)};
                add(t, k, coef);
            }
        }
        return t;
    }

    HeckeElement from_tensor(const Tensor &t) const {
        HeckeElement out = h_.zero();
        for (const auto &[k, coef] : t) {
            std::size_t g = 0;
            for (std::size_t c = 0; c < factors_.size(); ++c)
                for (auto letter : factors_[c].group().element(k.g[c]).word)
                    g = h_.group().multiply(g, h_.group().simple_reflection(simple_[c][letter]));
            Polynomial p(h_.dim());
            p.add_term(join(k.m), coef);
            out.add(g, p);
        }
        return out;
    }

    /// Componentwise product in the tensor product algebra.
    Tensor multiply(const Tensor &a, const Tensor &b) const {
        Tensor out;
        std::size_t e = factors_.size();
        for (const auto &[ka, ca] : a)
            for (const auto &[kb, cb] : b) {
                // per component: list of (group, monomial, coefficient)
                std::vector<std::vector<std::tuple<std::size_t, Monomial, Scalar>>> parts(e);
                for (std::size_t c = 0; c < e; ++c) {
                    const auto &fa = factors_[c];
                    Polynomial pa(fa.dim()), pb(fa.dim());
                    pa.add_term(ka.m[c], 1);
                    pb.add_term(kb.m[c], 1);
                    auto prod = fa.multiply(fa.N(ka.g[c], pa), fa.N(kb.g[c], pb));
                    for (const auto &[g, p] : prod.terms())
                        for (const auto &[m, coef] : p.terms()) parts[c].emplace_back(g, m, coef);
                }
                Monomial z = ka.m[e] * kb.m[e];
                Key key;
                key.g.resize(e);
                key.m.resize(e + 1);
                key.m[e] = z;
                std::function<void(std::size_t, Scalar)> rec = [&](std::size_t c, Scalar coef) {
                    if (c == e) {
                        add(out, key, coef);
                        return;
                    }
                    for (const auto &[g, m, x] : parts[c]) {
                        key.g[c] = g;
                        key.m[c] = m;
                        rec(c + 1, coef * x);
                    }
                };
                rec(0, ca * cb);
            }
        return out;
    }

    std::string to_string(const Tensor &t) const {
        if (t.empty()) return "0";
        std::string s;
        for (const auto &[k, coef] : t) {
            if (!s.empty()) s += " + ";
            s += "(" + coef.to_string() + ")";
            for (std::size_t c = 0; c < factors_.size(); ++c) {
                Polynomial p(factors_[c].dim());
                p.add_term(k.m[c], 1);
                s += (c ? " (x) " : " ") + std::string("N[") + factors_[c].element_name(k.g[c]) + "]*(" +
                     p.to_string() + ")";
            }
            if (h_.roots().central_dim()) {
                Polynomial p(h_.roots().central_dim());
                p.add_term(k.m.back(), 1);
                s += " (x) " + p.to_string();
            }
        }
        return s;
    }

  private:
    static void add(Tensor &t, const Key &k, const Scalar &c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t.try_emplace(k, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }

    std::size_t position(std::size_t c, std::size_t letter) const {
        const auto &s = simple_[c];
        return static_cast<std::size_t>(std::find(s.begin(), s.end(), letter) - s.begin());
    }

    std::vector<Monomial> split(const Monomial &m) const {
        std::vector<Monomial> out(factors_.size() + 1);
        for (std::size_t c = 0; c < factors_.size(); ++c)
            for (std::size_t j = 0; j < simple_[c].size(); ++j) out[c].exp[j] = m.exp[simple_[c][j]];
        std::size_t rank = h_.roots().rank();
        for (std::size_t j = rank; j < h_.dim(); ++j) out.back().exp[j - rank] = m.exp[j];
        return out;
    }

    Monomial join(const std::vector<Monomial> &parts) const {
        Monomial m;
        for (std::size_t c = 0; c < factors_.size(); ++c)
            for (std::size_t j = 0; j < simple_[c].size(); ++j) m.exp[simple_[c][j]] = parts[c].exp[j];
        std::size_t rank = h_.roots().rank();
        for (std::size_t j = rank; j < h_.dim(); ++j) m.exp[j] = parts.back().exp[j - rank];
        return m;
    }

    HeckeAlgebra h_;
    std::vector<HeckeAlgebra> factors_;
    std::vector<std::vector<std::size_t>> simple_;
    std::map<std::size_t, std::size_t> letter_component_;
};

}  // namespace ghecke
