#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ghecke {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed user input (presets, fixtures, expressions). The CLI maps it to exit code 2.
struct InputError : Error {
    using Error::Error;
};

namespace cyclotomic {

inline std::size_t euler_phi(std::size_t n) {
    std::size_t result = n;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

using IntPoly = std::vector<mpz_class>;  // low degree first

inline IntPoly exact_divide(IntPoly num, const IntPoly &den) {
    // den is monic
    IntPoly quot(num.size() - den.size() + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return quot;
}

namespace detail {
inline const IntPoly &polynomial_locked(std::map<std::size_t, IntPoly> &cache, std::size_t n) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::size_t d = 1; d < n; ++d)
        if (n % d == 0) p = exact_divide(p, polynomial_locked(cache, d));
    return cache.emplace(n, std::move(p)).first->second;
}
}  // namespace detail

/// Coefficients of the n-th cyclotomic polynomial, cached.
inline const IntPoly &polynomial(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, IntPoly> cache;
    std::lock_guard<std::mutex> lock(mutex);
    return detail::polynomial_locked(cache, n);
}

}  // namespace cyclotomic

/// Exact element of a cyclotomic field Q(zeta_n). Order 1 is the rationals.
///
/// Non-rational values are stored as coefficients on the power basis
/// 1, zeta, ..., zeta^(phi(n)-1) reduced modulo the cyclotomic polynomial, so
/// equality is decided coefficientwise after lifting both sides to a common order.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}
    Scalar(int v) : q_(v) {}
    Scalar(long num, long den) : q_(num, den) { q_.canonicalize(); }
    Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    explicit Scalar(const mpz_class &z) : q_(z) {}

    /// zeta_n^power
    static Scalar root_of_unity(long power, std::size_t n) {
        if (n == 0) throw InputError("root of unity of order 0");
        long p = power % static_cast<long>(n);
        if (p < 0) p += static_cast<long>(n);
        if (n == 1) return Scalar(1);
        if (n == 2) return Scalar(p == 0 ? 1 : -1);
        std::vector<mpq_class> raw(static_cast<std::size_t>(p) + 1, 0);
        raw[static_cast<std::size_t>(p)] = 1;
        return from_power_coefficients(n, std::move(raw));
    }

    static Scalar parse(const std::string &text) {
        mpq_class q;
        std::string t = text;
        while (!t.empty() && t.front() == ' ') t.erase(t.begin());
        while (!t.empty() && t.back() == ' ') t.pop_back();
        if (t.empty()) throw InputError("empty scalar literal");
        if (t.front() == '+') t.erase(t.begin());
        auto dot = t.find('.');
        if (dot != std::string::npos) {
            std::string digits = t.substr(0, dot) + t.substr(dot + 1);
            std::string den = "1" + std::string(t.size() - dot - 1, '0');
            if (q.set_str(digits, 10) != 0) throw InputError("bad scalar literal '" + text + "'");
            return Scalar(q / mpq_class(mpz_class(den)));
        }
        if (q.set_str(t, 10) != 0 || q.get_den() == 0) throw InputError("bad scalar literal '" + text + "'");
        return Scalar(q);
    }

    std::size_t order() const { return ext_.empty() ? 1 : order_; }
    bool is_rational() const { return ext_.empty(); }
    bool is_zero() const { return ext_.empty() && q_ == 0; }
    bool is_one() const { return ext_.empty() && q_ == 1; }

    const mpq_class &rational() const {
        if (!ext_.empty()) throw Error("scalar " + to_string() + " is not rational");
        return q_;
    }

    int sign() const { return sgn(rational()); }

    /// Coefficients on the power basis of Q(zeta_order()).
    std::vector<mpq_class> coefficients() const {
        if (ext_.empty()) return {q_};
        return ext_;
    }

    Scalar operator-() const {
        Scalar r = *this;
        r.q_ = -r.q_;
        for (auto &c : r.ext_) c = -c;
        return r;
    }

    Scalar &operator+=(const Scalar &o) { return *this = add(*this, o, 1); }
    Scalar &operator-=(const Scalar &o) { return *this = add(*this, o, -1); }
    Scalar &operator*=(const Scalar &o) { return *this = mul(*this, o); }
    Scalar &operator/=(const Scalar &o) { return *this = mul(*this, o.inverse()); }

    friend Scalar operator+(const Scalar &a, const Scalar &b) { return add(a, b, 1); }
    friend Scalar operator-(const Scalar &a, const Scalar &b) { return add(a, b, -1); }
    friend Scalar operator*(const Scalar &a, const Scalar &b) { return mul(a, b); }
    friend Scalar operator/(const Scalar &a, const Scalar &b) { return mul(a, b.inverse()); }

    friend bool operator==(const Scalar &a, const Scalar &b) {
        if (a.ext_.empty() && b.ext_.empty()) return a.q_ == b.q_;
        if (a.ext_.empty() != b.ext_.empty()) return false;
        std::size_t n = std::lcm(a.order_, b.order_);
        return a.lift(n) == b.lift(n);
    }
    friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

    Scalar inverse() const {
        if (is_zero()) throw Error("division by zero");
        if (ext_.empty()) return Scalar(mpq_class(1) / q_);
        // solve M y = e_0 where M is multiplication by *this on the power basis
        std::size_t m = ext_.size();
        std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1, 0));
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<mpq_class> basis(j + 1, 0);
            basis[j] = 1;
            Scalar col = mul(*this, from_power_coefficients(order_, basis));
            auto c = col.lift(order_);
            for (std::size_t i = 0; i < m; ++i) a[i][j] = c[i];
        }
        a[0][m] = 1;
        for (std::size_t col = 0, row = 0; col < m; ++col, ++row) {
            std::size_t piv = row;
            while (piv < m && a[piv][col] == 0) ++piv;
            if (piv == m) throw Error("singular cyclotomic multiplication matrix");
            std::swap(a[piv], a[row]);
            for (std::size_t i = 0; i < m; ++i) {
                if (i == row || a[i][col] == 0) continue;
                mpq_class f = a[i][col] / a[row][col];
                for (std::size_t j = col; j <= m; ++j) a[i][j] -= f * a[row][j];
            }
        }
        std::vector<mpq_class> y(m);
        for (std::size_t i = 0; i < m; ++i) y[i] = a[i][m] / a[i][i];
        return from_power_coefficients(order_, std::move(y));
    }

    /// Complex conjugate (zeta -> zeta^-1).
    Scalar conjugate() const {
        if (ext_.empty()) return *this;
        std::vector<mpq_class> raw(order_, 0);
        for (std::size_t j = 0; j < ext_.size(); ++j) raw[(order_ - j) % order_] += ext_[j];
        return from_power_coefficients(order_, std::move(raw));
    }

    /// Real and imaginary parts, available when the value lies in Q(i).
    std::pair<mpq_class, mpq_class> gaussian_parts() const {
        if (ext_.empty()) return {q_, 0};
        auto c = lift(std::lcm(order_, std::size_t{4}));
        std::size_t n = std::lcm(order_, std::size_t{4});
        if (n != 4) throw Error("scalar " + to_string() + " does not lie in Q(i)");
        return {c[0], c[1]};
    }

    std::string to_string() const {
        if (ext_.empty()) return q_.get_str();
        std::ostringstream os;
        bool first = true;
        for (std::size_t j = 0; j < ext_.size(); ++j) {
            const mpq_class &c = ext_[j];
            if (c == 0) continue;
            mpq_class mag = abs(c);
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (j == 0) {
                os << mag.get_str();
                continue;
            }
            if (mag != 1) os << mag.get_str() << "*";
            os << "zeta" << order_;
            if (j > 1) os << "^" << j;
        }
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

  private:
    static Scalar from_power_coefficients(std::size_t n, std::vector<mpq_class> raw) {
        // raw[j] is the coefficient of zeta_n^j for arbitrary j
        std::vector<mpq_class> folded(n, 0);
        for (std::size_t j = 0; j < raw.size(); ++j) folded[j % n] += raw[j];
        const auto &phi = cyclotomic::polynomial(n);
        std::size_t deg = phi.size() - 1;
        for (std::size_t i = folded.size(); i-- > deg;) {
            if (folded[i] == 0) continue;
            mpq_class c = folded[i];
            for (std::size_t j = 0; j <= deg; ++j) folded[i - deg + j] -= c * mpq_class(phi[j]);
        }
        folded.resize(deg);
        Scalar s;
        bool rational = true;
        for (std::size_t j = 1; j < folded.size(); ++j)
            if (folded[j] != 0) rational = false;
        if (rational) {
            s.q_ = folded.empty() ? mpq_class(0) : folded[0];
            return s;
        }
        s.order_ = n;
        s.ext_ = std::move(folded);
        return s;
    }

    std::vector<mpq_class> lift(std::size_t n) const {
        std::size_t deg = cyclotomic::euler_phi(n);
        if (ext_.empty()) {
            std::vector<mpq_class> out(deg, 0);
            out[0] = q_;
            return out;
        }
        if (n == order_) return ext_;
        std::size_t step = n / order_;
        std::vector<mpq_class> raw(ext_.size() * step, 0);
        for (std::size_t j = 0; j < ext_.size(); ++j) raw[j * step] = ext_[j];
        Scalar up = from_power_coefficients(n, std::move(raw));
        if (up.ext_.empty()) {
            std::vector<mpq_class> out(deg, 0);
            out[0] = up.q_;
            return out;
        }
        return up.ext_;
    }

    static Scalar add(const Scalar &a, const Scalar &b, int sign) {
        if (a.ext_.empty() && b.ext_.empty()) {
            Scalar r;
            if (sign > 0)
                r.q_ = a.q_ + b.q_;
            else
                r.q_ = a.q_ - b.q_;
            return r;
        }
        std::size_t n = std::lcm(a.order(), b.order());
        auto x = a.lift(n);
        auto y = b.lift(n);
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (sign > 0)
                x[j] += y[j];
            else
                x[j] -= y[j];
        }
        return from_power_coefficients(n, std::move(x));
    }

    static Scalar mul(const Scalar &a, const Scalar &b) {
        if (a.ext_.empty() && b.ext_.empty()) {
            Scalar r;
            r.q_ = a.q_ * b.q_;
            return r;
        }
        if (a.ext_.empty() || b.ext_.empty()) {
            const Scalar &rat = a.ext_.empty() ? a : b;
            Scalar r = a.ext_.empty() ? b : a;
            if (rat.q_ == 0) return Scalar();
            for (auto &c : r.ext_) c *= rat.q_;
            return r;
        }
        std::size_t n = std::lcm(a.order_, b.order_);
        auto x = a.lift(n);
        auto y = b.lift(n);
        std::vector<mpq_class> raw(x.size() + y.size(), 0);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j) raw[i + j] += x[i] * y[j];
        }
        return from_power_coefficients(n, std::move(raw));
    }

    mpq_class q_ = 0;
    std::size_t order_ = 1;
    std::vector<mpq_class> ext_;
};

inline Scalar pow(Scalar base, unsigned exponent) {
    Scalar result(1);
    while (exponent) {
        if (exponent & 1u) result *= base;
        base *= base;
        exponent >>= 1u;
    }
    return result;
}

}  // namespace ghecke
