#pragma once

#include "ghecke/matrix.hpp"
#include "ghecke/scalar.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ghecke {

/// Upper bound on dim t + 1 (the extra slot is r).
inline constexpr std::size_t kMaxVariables = 12;

/// Dense exponent vector; slot `dim` holds the exponent of r.
struct Monomial {
    std::array<std::uint16_t, kMaxVariables> exp{};

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    unsigned graded_degree() const { return 2 * total_degree(); }

    friend Monomial operator*(const Monomial &a, const Monomial &b) {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
        return m;
    }
    friend auto operator<=>(const Monomial &, const Monomial &) = default;
    friend bool operator==(const Monomial &, const Monomial &) = default;
};

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto e : m.exp) h = (h ^ e) * 1099511628211ull;
        return h;
    }
};

/// Exact polynomial in the coordinates x_1..x_d of t plus the formal variable r.
///
/// Terms are kept in a sorted map without zero coefficients, so structural
/// equality is ring equality.
class Polynomial {
  public:
    using Terms = std::map<Monomial, Scalar>;

    Polynomial() = default;
    explicit Polynomial(std::size_t dim) : dim_(dim) {
        if (dim + 1 > kMaxVariables) throw InputError("dimension of t exceeds supported maximum");
    }

    static Polynomial constant(std::size_t dim, const Scalar &c) {
        Polynomial p(dim);
        if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
        return p;
    }
    /// Coordinate x_i (0-based), or r when i == dim.
    static Polynomial variable(std::size_t dim, std::size_t i) {
        Polynomial p(dim);
        if (i > dim) throw Error("variable index out of range");
        Monomial m;
        m.exp[i] = 1;
        p.terms_.emplace(m, Scalar(1));
        return p;
    }
    static Polynomial r(std::size_t dim) { return variable(dim, dim); }
    static Polynomial linear_form(const std::vector<Scalar> &coeffs) {
        Polynomial p(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(unit(i), coeffs[i]);
        return p;
    }
    static Monomial unit(std::size_t i) {
        Monomial m;
        m.exp[i] = 1;
        return m;
    }

    std::size_t dim() const { return dim_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial &m, const Scalar &c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Scalar coefficient(const Monomial &m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar() : it->second;
    }
    Scalar constant_term() const { return coefficient(Monomial{}); }

    bool has_r() const {
        for (const auto &[m, c] : terms_)
            if (m.exp[dim_] != 0) return true;
        return false;
    }

    Polynomial &operator+=(const Polynomial &o) {
        check_basis(o);
        for (const auto &[m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial &operator-=(const Polynomial &o) {
        check_basis(o);
        for (const auto &[m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial &operator*=(const Scalar &s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &[m, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Scalar &s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
        a.check_basis(b);
        Polynomial p(a.dim_);
        for (const auto &[ma, ca] : a.terms_)
            for (const auto &[mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
        return p;
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial &a, const Polynomial &b) { return !(a == b); }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(dim_, 1);
        Polynomial base = *this;
        while (e) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return result;
    }

    /// Largest graded degree present (-1 for zero).
    int max_graded_degree() const {
        int d = -1;
        for (const auto &[m, c] : terms_) d = std::max(d, static_cast<int>(m.graded_degree()));
        return d;
    }

    std::map<int, Polynomial> homogeneous_components() const {
        std::map<int, Polynomial> parts;
        for (const auto &[m, c] : terms_) {
            auto [it, _] = parts.try_emplace(static_cast<int>(m.graded_degree()), Polynomial(dim_));
            it->second.add_term(m, c);
        }
        return parts;
    }

    /// Substitute x_j -> sum_i action(i, j) x_i; r is fixed. `action` is d x d.
    Polynomial act(const Matrix &action) const {
        if (action.rows() != dim_ || action.cols() != dim_) throw Error("action matrix does not match dim t");
        std::vector<Polynomial> images;
        images.reserve(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Polynomial img(dim_);
            for (std::size_t i = 0; i < dim_; ++i) img.add_term(unit(i), action(i, j));
            images.push_back(std::move(img));
        }
        return substitute(images, variable(dim_, dim_));
    }

    /// Ring homomorphism x_j -> images[j], r -> r_image.
    Polynomial substitute(const std::vector<Polynomial> &images, const Polynomial &r_image) const {
        std::vector<std::vector<Polynomial>> powers(dim_ + 1);
        auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial & {
            auto &cache = powers[var];
            const Polynomial &base = var == dim_ ? r_image : images[var];
            if (cache.empty()) cache.push_back(constant(dim_, 1));
            while (cache.size() <= e) cache.push_back(cache.back() * base);
            return cache[e];
        };
        Polynomial out(dim_);
        for (const auto &[m, c] : terms_) {
            Polynomial term = constant(dim_, c);
            for (std::size_t v = 0; v <= dim_; ++v)
                if (m.exp[v]) term = term * power_of(v, m.exp[v]);
            out += term;
        }
        return out;
    }

    /// Multiply each monomial by x_scale^(x-degree) * r_scale^(r-degree).
    Polynomial scale(const Scalar &x_scale, const Scalar &r_scale) const {
        Polynomial out(dim_);
        for (const auto &[m, c] : terms_) {
            unsigned xdeg = m.total_degree() - m.exp[dim_];
            out.add_term(m, c * ghecke::pow(x_scale, xdeg) * ghecke::pow(r_scale, m.exp[dim_]));
        }
        return out;
    }

    Polynomial specialize_r(const Scalar &value) const {
        Polynomial out(dim_);
        for (const auto &[m, c] : terms_) {
            Monomial mm = m;
            unsigned e = mm.exp[dim_];
            mm.exp[dim_] = 0;
            out.add_term(mm, c * ghecke::pow(value, e));
        }
        return out;
    }

    Scalar evaluate(const std::vector<Scalar> &point, const Scalar &r_value) const {
        if (point.size() != dim_) throw Error("evaluation point has wrong dimension");
        Scalar total;
        for (const auto &[m, c] : terms_) {
            Scalar t = c;
            for (std::size_t v = 0; v < dim_; ++v)
                if (m.exp[v]) t *= ghecke::pow(point[v], m.exp[v]);
            if (m.exp[dim_]) t *= ghecke::pow(r_value, m.exp[dim_]);
            total += t;
        }
        return total;
    }

    /// Exact quotient by a nonzero linear form in the x's. Throws if the division leaves a remainder.
    Polynomial divide_exact_linear(const Polynomial &linear) const {
        check_basis(linear);
        // lead variable: the lex-largest variable present, i.e. the smallest index
        std::size_t lead = kMaxVariables;
        for (const auto &[m, c] : linear.terms_) {
            if (m.total_degree() != 1) throw Error("divisor is not a linear form");
            for (std::size_t v = 0; v < dim_; ++v)
                if (m.exp[v]) lead = std::min(lead, v);
        }
        if (lead == kMaxVariables) throw Error("division by zero linear form");
        Scalar lead_coeff = linear.coefficient(unit(lead));
        Scalar inv = lead_coeff.inverse();
        Polynomial rem = *this;
        Polynomial quot(dim_);
        while (!rem.is_zero()) {
            // map order is lex ascending; the lex-largest monomial is last
            auto it = std::prev(rem.terms_.end());
            Monomial m = it->first;
            if (m.exp[lead] == 0) throw Error("polynomial is not divisible by the linear form");
            Scalar c = it->second * inv;
            m.exp[lead] -= 1;
            quot.add_term(m, c);
            for (const auto &[lm, lc] : linear.terms_) rem.add_term(m * lm, -(c * lc));
        }
        return quot;
    }

    /// Canonical text: graded descending order, "p/q" coefficients.
    std::string to_string(const std::vector<std::string> &names) const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Monomial, Scalar>> sorted(terms_.begin(), terms_.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
            unsigned da = a.first.total_degree(), db = b.first.total_degree();
            if (da != db) return da > db;
            return a.first > b.first;
        });
        std::string out;
        bool first = true;
        for (const auto &[m, c] : sorted) {
            std::string mono;
            for (std::size_t v = 0; v <= dim_; ++v) {
                if (!m.exp[v]) continue;
                if (!mono.empty()) mono += "*";
                mono += names.at(v);
                if (m.exp[v] > 1) mono += "^" + std::to_string(m.exp[v]);
            }
            bool negative = c.is_rational() && c.sign() < 0;
            Scalar mag = negative ? -c : c;
            std::string coeff = mag.is_rational() ? mag.to_string() : "(" + mag.to_string() + ")";
            std::string body;
            if (mono.empty())
                body = coeff;
            else if (mag.is_one())
                body = mono;
            else
                body = coeff + "*" + mono;
            if (first)
                out += (negative ? "-" : "") + body;
            else
                out += (negative ? " - " : " + ") + body;
            first = false;
        }
        return out;
    }

    /// Default names: "x" when dim == 1, else x1..xd; then "r".
    static std::vector<std::string> default_names(std::size_t dim) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < dim; ++i) names.push_back(dim == 1 ? "x" : "x" + std::to_string(i + 1));
        names.push_back("r");
        return names;
    }
    std::string to_string() const { return to_string(default_names(dim_)); }

  private:
    void check_basis(const Polynomial &o) const {
        if (o.dim_ != dim_) throw Error("polynomial basis mismatch");
    }

    std::size_t dim_ = 0;
    Terms terms_;
};

}  // namespace ghecke
