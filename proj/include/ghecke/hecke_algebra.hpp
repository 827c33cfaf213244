#pragma once

#include "ghecke/parameters.hpp"
#include "ghecke/polynomial.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

namespace ghecke {

/// generic: r is a free central variable; r1: quotient by r - 1; k0: crossed product (k == 0, r generic).
enum class Mode { generic, r1, k0 };

inline std::string mode_name(Mode m) {
    switch (m) {
    case Mode::generic:
        return "generic";
    case Mode::r1:
        return "r1";
    case Mode::k0:
        return "k0";
    }
    return "?";
}

inline Mode parse_mode(const std::string &s) {
    if (s == "generic") return Mode::generic;
    if (s == "r1") return Mode::r1;
    if (s == "k0") return Mode::k0;
    throw InputError("unknown mode '" + s + "' (expected generic, r1 or k0)");
}

/// Finite sum  sum_w N_w * p_w  with polynomials on the right.
class HeckeElement {
  public:
    using Terms = std::map<std::size_t, Polynomial>;

    HeckeElement() = default;
    explicit HeckeElement(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(std::size_t g, const Polynomial &p) {
        if (p.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(g, p);
        if (inserted) return;
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Polynomial coefficient(std::size_t g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? Polynomial(dim_) : it->second;
    }

    HeckeElement &operator+=(const HeckeElement &o) {
        for (const auto &[g, p] : o.terms_) add(g, p);
        return *this;
    }
    HeckeElement &operator-=(const HeckeElement &o) {
        for (const auto &[g, p] : o.terms_) add(g, -p);
        return *this;
    }
    HeckeElement &operator*=(const Scalar &s) {
        if (s.is_zero()) terms_.clear();
        for (auto &[g, p] : terms_) p *= s;
        return *this;
    }
    friend HeckeElement operator+(HeckeElement a, const HeckeElement &b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement &b) { return a -= b; }
    friend HeckeElement operator-(HeckeElement a) { return a *= Scalar(-1); }
    friend HeckeElement operator*(const Scalar &s, HeckeElement a) { return a *= s; }
    friend bool operator==(const HeckeElement &a, const HeckeElement &b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HeckeElement &a, const HeckeElement &b) { return !(a == b); }

    /// Apply a map to every polynomial coefficient and an optional scalar per group element.
    template <class PolyMap, class GroupSign>
    HeckeElement transform(PolyMap &&pmap, GroupSign &&gsign) const {
        HeckeElement out(dim_);
        for (const auto &[g, p] : terms_) out.add(g, Scalar(gsign(g)) * pmap(p));
        return out;
    }

    int max_graded_degree() const {
        int d = -1;
        for (const auto &[g, p] : terms_) d = std::max(d, p.max_graded_degree());
        return d;
    }

  private:
    std::size_t dim_ = 0;
    Terms terms_;
};

/// The graded Hecke algebra attached to (t, W x| Gamma, k, natural) in one of three modes.
class HeckeAlgebra {
  public:
    HeckeAlgebra(std::shared_ptr<const ExtendedWeylGroup> group, ParameterFunction k, Cocycle natural, Mode mode)
        : group_(std::move(group)), k_(std::move(k)), natural_(std::move(natural)), mode_(mode) {
        dim_ = group_->dim();
        if (natural_.order() != group_->gamma_size())
            throw InputError("cocycle table size does not match |Gamma| = " + std::to_string(group_->gamma_size()));
        natural_ = natural_.normalized();
        if (auto v = natural_.validate(group_->gamma_table())) throw InputError("invalid cocycle: " + v->describe());
        if (k_.values().size() != group_->roots().num_roots())
            throw InputError("parameter function does not match the root system");
        if (auto v = k_.invariance_violation(*group_)) throw InputError("parameter function is not invariant");
        if (mode_ == Mode::k0 && !k_.is_zero()) throw InputError("crossed-product mode requires k = 0");
        images_.resize(group_->size());
        for (std::size_t g = 0; g < group_->size(); ++g) {
            const auto &m = group_->element(g).matrix;
            for (std::size_t j = 0; j < dim_; ++j) {
                Polynomial img(dim_);
                for (std::size_t i = 0; i < dim_; ++i)
                    img.add_term(Polynomial::unit(i), Scalar(static_cast<long>(m(i, j))));
                images_[g].push_back(std::move(img));
            }
        }
        for (std::size_t i = 0; i < group_->rank(); ++i) {
            Polynomial c(dim_);
            const Scalar &ki = k_.simple(group_->roots(), i);
            if (mode_ == Mode::generic) c = ki * Polynomial::r(dim_);
            if (mode_ == Mode::r1) c = Polynomial::constant(dim_, ki);
            correction_.push_back(std::move(c));
        }
    }

    /// Same group and cocycle, different parameters and/or mode.
    HeckeAlgebra with(const ParameterFunction &k, Mode mode) const { return HeckeAlgebra(group_, k, natural_, mode); }
    HeckeAlgebra with(const ParameterFunction &k) const { return with(k, mode_); }

    const ExtendedWeylGroup &group() const { return *group_; }
    std::shared_ptr<const ExtendedWeylGroup> group_ptr() const { return group_; }
    const RootSystem &roots() const { return group_->roots(); }
    const ParameterFunction &k() const { return k_; }
    const Cocycle &cocycle() const { return natural_; }
    Mode mode() const { return mode_; }
    std::size_t dim() const { return dim_; }

    Scalar natural(std::size_t a, std::size_t b) const {
        return natural_(group_->element(a).gamma, group_->element(b).gamma);
    }

    HeckeElement zero() const { return HeckeElement(dim_); }
    HeckeElement one() const { return N(0); }
    HeckeElement N(std::size_t g) const { return N(g, Polynomial::constant(dim_, 1)); }
    HeckeElement N(std::size_t g, const Polynomial &p) const {
        HeckeElement e(dim_);
        e.add(g, p);
        return e;
    }
    HeckeElement poly(const Polynomial &p) const { return N(0, p); }
    HeckeElement scalar(const Scalar &c) const { return poly(Polynomial::constant(dim_, c)); }
    HeckeElement x(std::size_t i) const { return poly(Polynomial::variable(dim_, i)); }
    HeckeElement r() const {
        if (mode_ == Mode::r1) return one();
        return poly(Polynomial::r(dim_));
    }

    /// ^g p
    Polynomial act(std::size_t g, const Polynomial &p) const {
        if (g == 0) return p;
        return p.substitute(images_[g], Polynomial::r(dim_));
    }

    /// (p - ^{s_beta} p) / beta for any root beta.
    Polynomial demazure(std::size_t root, const Polynomial &p) const {
        std::size_t s = group_->reflection(root);
        Polynomial num = p - act(s, p);
        if (num.is_zero()) return Polynomial(dim_);
        return num.divide_exact_linear(Polynomial::linear_form(roots().linear_form(root)));
    }

    HeckeElement multiply(const HeckeElement &a, const HeckeElement &b) const {
        HeckeElement out(dim_);
        for (const auto &[u, p] : a.terms()) {
            for (const auto &[v, q] : b.terms()) {
                HeckeElement pn = straighten(p, v);
                for (const auto &[x, rx] : pn.terms()) {
                    std::size_t ux = group_->multiply(u, x);
                    Scalar c = natural(u, x);
                    out.add(ux, c * (rx * q));
                }
            }
        }
        return out;
    }

    HeckeElement power(const HeckeElement &a, unsigned e) const {
        HeckeElement result = one();
        for (unsigned i = 0; i < e; ++i) result = multiply(result, a);
        return result;
    }

    HeckeElement commutator(const HeckeElement &a, const HeckeElement &b) const {
        return multiply(a, b) - multiply(b, a);
    }

    /// p * N_v as a normal form.
    HeckeElement straighten(const Polynomial &p, std::size_t v) const {
        HeckeElement out(dim_);
        for (const auto &[m, c] : p.terms()) {
            const HeckeElement &t = mono_times_N(m, v);
            for (const auto &[g, q] : t.terms()) out.add(g, c * q);
        }
        return out;
    }

    /// The generators used by is_central, with printable names.
    std::vector<std::pair<std::string, HeckeElement>> generators() const {
        std::vector<std::pair<std::string, HeckeElement>> gens;
        for (std::size_t i = 0; i < group_->rank(); ++i)
            gens.emplace_back("N[" + group_->reflection_name(i) + "]", N(group_->simple_reflection(i)));
        for (std::size_t j = 0; j < group_->gamma_generators().size(); ++j)
            gens.emplace_back("N[g" + std::to_string(j + 1) + "]", N(group_->gamma_generator(j)));
        auto names = variable_names();
        for (std::size_t i = 0; i < dim_; ++i) gens.emplace_back(names[i], x(i));
        if (mode_ != Mode::r1) gens.emplace_back("r", r());
        return gens;
    }

    /// Returns the name of a generator that does not commute with `a`, or nullopt when central.
    std::optional<std::string> central_witness(const HeckeElement &a) const {
        for (const auto &[name, g] : generators())
            if (!commutator(a, g).is_zero()) return name;
        return std::nullopt;
    }
    bool is_central(const HeckeElement &a) const { return !central_witness(a); }

    std::vector<std::string> variable_names() const { return Polynomial::default_names(dim_); }

    std::string element_name(std::size_t g) const { return group_->element_name(g); }

    std::string to_string(const HeckeElement &a) const {
        if (a.is_zero()) return "0";
        std::string s;
        auto names = variable_names();
        for (const auto &[g, p] : a.terms()) {
            if (!s.empty()) s += " + ";
            s += "N[" + element_name(g) + "]*(" + p.to_string(names) + ")";
        }
        return s;
    }

    /// Homogeneous components by graded degree (generic and k0 modes only).
    std::map<int, HeckeElement> homogeneous_components(const HeckeElement &a) const {
        if (mode_ == Mode::r1) throw InputError("r = 1 specialization is only filtered, not graded");
        std::map<int, HeckeElement> out;
        for (const auto &[g, p] : a.terms())
            for (const auto &[d, part] : p.homogeneous_components()) {
                auto [it, _] = out.try_emplace(d, HeckeElement(dim_));
                it->second.add(g, part);
            }
        return out;
    }

    /// Graded degree when homogeneous; nullopt for inhomogeneous or zero elements.
    std::optional<int> graded_degree(const HeckeElement &a) const {
        auto parts = homogeneous_components(a);
        if (parts.size() != 1) return std::nullopt;
        return parts.begin()->first;
    }

    std::size_t cache_size() const {
        std::lock_guard<std::mutex> lock(*cache_mutex_);
        return cache_->size();
    }

  private:
    struct Key {
        Monomial m;
        std::size_t g;
        friend bool operator==(const Key &, const Key &) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key &k) const { return MonomialHash{}(k.m) * 31 + k.g; }
    };
    using Cache = std::unordered_map<Key, HeckeElement, KeyHash>;

    // m * N_g. N_{w gamma} = N_w N_gamma, and N_w is built along the stored reduced word of w.
    const HeckeElement &mono_times_N(const Monomial &m, std::size_t g) const {
        Key key{m, g};
        {
            std::lock_guard<std::mutex> lock(*cache_mutex_);
            auto it = cache_->find(key);
            if (it != cache_->end()) return it->second;
        }
        HeckeElement out = compute_mono_times_N(m, g);
        std::lock_guard<std::mutex> lock(*cache_mutex_);
        return cache_->emplace(key, std::move(out)).first->second;
    }

    HeckeElement compute_mono_times_N(const Monomial &m, std::size_t g) const {
        Polynomial pm(dim_);
        pm.add_term(m, Scalar(1));
        const auto &el = group_->element(g);
        HeckeElement out(dim_);
        if (el.word.empty()) {
            // m N_gamma = N_gamma (gamma^{-1} m)
            out.add(g, act(group_->inverse(g), pm));
            return out;
        }
        std::size_t gamma = group_->gamma_element(el.gamma);
        if (el.gamma != 0) {
            // m N_w N_gamma
            std::size_t w = group_->index(el.w, 0);
            const HeckeElement &mw = mono_times_N(m, w);
            std::size_t ginv = group_->inverse(gamma);
            for (const auto &[x, rx] : mw.terms()) out.add(group_->multiply(x, gamma), act(ginv, rx));
            return out;
        }
        // g in W with reduced word s_{i1} ... ; N_g = N_s N_{g'}
        std::size_t i = el.word.front();
        std::size_t s = group_->simple_reflection(i);
        std::size_t rest = group_->multiply(s, g);
        // m N_s = N_s (s m) + c_s Delta_s(m)
        Polynomial sm = act(s, pm);
        Polynomial dm = demazure(roots().simple_root_index(i), pm);
        HeckeElement first = straighten(sm, rest);
        for (const auto &[y, ry] : first.terms()) out.add(group_->multiply(s, y), ry);
        if (mode_ != Mode::k0 && !dm.is_zero() && !correction_[i].is_zero()) {
            HeckeElement second = straighten(correction_[i] * dm, rest);
            out += second;
        }
        return out;
    }

    std::shared_ptr<const ExtendedWeylGroup> group_;
    ParameterFunction k_;
    Cocycle natural_;
    Mode mode_;
    std::size_t dim_ = 0;
    std::vector<std::vector<Polynomial>> images_;
    std::vector<Polynomial> correction_;
    std::shared_ptr<std::mutex> cache_mutex_ = std::make_shared<std::mutex>();
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace ghecke
