#pragma once

#include "ghecke/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ghecke {

/// Dense matrix over exact scalars, row-major.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix scalar(std::size_t n, const Scalar &s) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }
    static Matrix column(const std::vector<Scalar> &v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Scalar> column_vector(std::size_t j) const {
        std::vector<Scalar> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar &s) { return s.is_zero(); });
    }
    bool is_rational() const {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar &s) { return s.is_rational(); });
    }

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

    friend Matrix operator+(Matrix a, const Matrix &b) {
        check_same(a, b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix &b) {
        check_same(a, b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend Matrix operator*(const Scalar &s, Matrix a) {
        for (auto &x : a.data_) x *= s;
        return a;
    }
    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar &aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Scalar &bkj = b(k, j);
                    if (!bkj.is_zero()) c(i, j) += aik * bkj;
                }
            }
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Scalar trace() const {
        Scalar t;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    Matrix power(unsigned e) const {
        Matrix result = identity(rows_);
        Matrix base = *this;
        while (e) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return result;
    }

    /// Reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> row_reduce() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && (*this)(piv, col).is_zero()) ++piv;
            if (piv == rows_) continue;
            swap_rows(piv, row);
            Scalar inv = (*this)(row, col).inverse();
            for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || (*this)(i, col).is_zero()) continue;
                Scalar f = (*this)(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    if (!(*this)(row, j).is_zero()) (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        if (is_rational()) return rank_fraction_free();
        Matrix m = *this;
        return m.row_reduce().size();
    }

    /// Basis of the right kernel, as columns of the returned matrix.
    Matrix nullspace() const {
        Matrix m = *this;
        auto pivots = m.row_reduce();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::size_t> free;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!is_pivot[j]) free.push_back(j);
        Matrix basis(cols_, free.size());
        for (std::size_t f = 0; f < free.size(); ++f) {
            basis(free[f], f) = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], f) = -m(r, free[f]);
        }
        return basis;
    }

    /// Some solution X of A X = B, or nullopt when inconsistent.
    std::optional<Matrix> solve(const Matrix &rhs) const {
        if (rhs.rows_ != rows_) throw Error("solve: dimension mismatch");
        Matrix aug(rows_, cols_ + rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < rhs.cols_; ++j) aug(i, cols_ + j) = rhs(i, j);
        }
        auto pivots = aug.row_reduce();
        Matrix x(cols_, rhs.cols_);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] >= cols_) return std::nullopt;
            for (std::size_t j = 0; j < rhs.cols_; ++j) x(pivots[r], j) = aug(r, cols_ + j);
        }
        return x;
    }

    Matrix inverse() const {
        if (!square()) throw Error("inverse of non-square matrix");
        auto x = solve(identity(rows_));
        if (!x || (*this) * (*x) != identity(rows_)) throw Error("matrix is singular");
        return *x;
    }

    /// Coefficients c_0..c_n of det(t I - A), low degree first (Faddeev-LeVerrier).
    std::vector<Scalar> characteristic_polynomial() const {
        if (!square()) throw Error("characteristic polynomial of non-square matrix");
        std::size_t n = rows_;
        std::vector<Scalar> c(n + 1);
        c[n] = 1;
        Matrix m(n, n);
        for (std::size_t k = 1; k <= n; ++k) {
            m = (*this) * m;
            for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
            Scalar tr = ((*this) * m).trace();
            c[n - k] = -tr / Scalar(static_cast<long>(k));
        }
        return c;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
            s += "]";
        }
        return s + "]";
    }

  private:
    static void check_same(const Matrix &a, const Matrix &b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix dimension mismatch");
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    // Bareiss elimination over the integers after clearing row denominators.
    std::size_t rank_fraction_free() const {
        std::vector<std::vector<mpz_class>> a(rows_, std::vector<mpz_class>(cols_));
        for (std::size_t i = 0; i < rows_; ++i) {
            mpz_class l = 1;
            for (std::size_t j = 0; j < cols_; ++j) {
                const mpq_class &q = (*this)(i, j).rational();
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
            }
            for (std::size_t j = 0; j < cols_; ++j) {
                const mpq_class &q = (*this)(i, j).rational();
                a[i][j] = q.get_num() * (l / q.get_den());
            }
        }
        mpz_class prev = 1;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t piv = rank;
            while (piv < rows_ && a[piv][col] == 0) ++piv;
            if (piv == rows_) continue;
            std::swap(a[piv], a[rank]);
            for (std::size_t i = rank + 1; i < rows_; ++i) {
                for (std::size_t j = col + 1; j < cols_; ++j) {
                    a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                    mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
                }
                a[i][col] = 0;
            }
            prev = a[rank][col];
            ++rank;
        }
        return rank;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace ghecke
