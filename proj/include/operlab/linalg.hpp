#ifndef OPERLAB_LINALG_HPP
#define OPERLAB_LINALG_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace operlab {

/// Dense matrix over an exact field F.
template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, F(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const F& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
        return c;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    /// Row echelon form in place; returns the pivot columns.
    std::vector<int> echelonize() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (!(*this)(i, c).is_zero()) { p = i; break; }
            if (p < 0) continue;
            swap_rows(p, r);
            F inv = F(1) / (*this)(r, c);
            for (int j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c).is_zero()) continue;
                F f = (*this)(i, c);
                for (int j = c; j < cols_; ++j)
                    (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.echelonize().size());
    }

    F det() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        Matrix m = *this;
        F d = F(1);
        for (int c = 0; c < cols_; ++c) {
            int p = -1;
            for (int i = c; i < rows_; ++i)
                if (!m(i, c).is_zero()) { p = i; break; }
            if (p < 0) return F(0);
            if (p != c) { m.swap_rows(p, c); d = -d; }
            d = d * m(c, c);
            F inv = F(1) / m(c, c);
            for (int i = c + 1; i < rows_; ++i) {
                if (m(i, c).is_zero()) continue;
                F f = m(i, c) * inv;
                for (int j = c; j < cols_; ++j) m(i, j) = m(i, j) - f * m(c, j);
            }
        }
        return d;
    }

    /// One solution of A x = b, if any.
    std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
        Matrix aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        std::vector<int> pivots = aug.echelonize();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<F> x(cols_, F(0));
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(int(r), cols_);
        return x;
    }

    /// Basis of the right nullspace.
    std::vector<std::vector<F>> nullspace() const {
        Matrix m = *this;
        std::vector<int> pivots = m.echelonize();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<std::vector<F>> basis;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            std::vector<F> v(cols_, F(0));
            v[c] = F(1);
            for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(int(r), c);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    int rows_, cols_;
    std::vector<F> data_;
};

/// Prime field F_p for small p.
class Fp {
public:
    Fp() : v_(0), p_(2) {}
    Fp(long v, long p = 2) : p_(p) { v_ = ((v % p) + p) % p; }

    long value() const { return v_; }
    long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return Fp(-v_, p_); }
    // Literal constants (F(0), F(1)) carry the default modulus; binary ops
    // adopt the larger modulus so constants mix correctly with any F_p.
    friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.v_ + b.v_, std::max(a.p_, b.p_)); }
    friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.v_ - b.v_, std::max(a.p_, b.p_)); }
    friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.v_ * b.v_, std::max(a.p_, b.p_)); }
    friend Fp operator/(const Fp& a, const Fp& b) {
        if (b.is_zero()) throw std::domain_error("division by zero in F_p");
        // Fermat inverse; p is prime.
        long inv = 1, base = b.v_, e = b.p_ - 2;
        for (; e > 0; e >>= 1) {
            if (e & 1) inv = inv * base % b.p_;
            base = base * base % b.p_;
        }
        return Fp(a.v_ * inv, std::max(a.p_, b.p_));
    }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

private:
    long v_, p_;
};

}  // namespace operlab

#endif
