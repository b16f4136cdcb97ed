#pragma once

// Dense square matrices of exact scalars. Doubles as LinearMap on a
// graded piece A_k: entry (i, j) is 1-based, row i, column j.

#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"

namespace exalg {

class SquareMatrix {
public:
    SquareMatrix(int n, FieldSpec f)
        : n_(n), field_(f), e_(static_cast<std::size_t>(n) * n, Scalar::zero(f)) {
        if (n < 1) throw std::invalid_argument("matrix size must be positive");
    }

    static SquareMatrix identity(int n, FieldSpec f) {
        SquareMatrix m(n, f);
        for (int i = 1; i <= n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    int size() const { return n_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(int i, int j) { return e_[index(i, j)]; }
    const Scalar& at(int i, int j) const { return e_[index(i, j)]; }

    SquareMatrix operator*(const SquareMatrix& o) const {
        require_compatible(o);
        SquareMatrix r(n_, field_);
        for (int i = 1; i <= n_; ++i)
            for (int k = 1; k <= n_; ++k) {
                const Scalar& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 1; j <= n_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    SquareMatrix transpose() const {
        SquareMatrix r(n_, field_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool operator==(const SquareMatrix& o) const { return n_ == o.n_ && field_ == o.field_ && e_ == o.e_; }
    bool operator!=(const SquareMatrix& o) const { return !(*this == o); }

    bool is_identity() const { return *this == identity(n_, field_); }

    // Fraction-free enough for our purposes: plain Gaussian elimination
    // with exact field division.
    Scalar det_gauss() const {
        SquareMatrix m = *this;
        Scalar det = Scalar::one(field_);
        for (int col = 1; col <= n_; ++col) {
            int pivot = 0;
            for (int row = col; row <= n_; ++row)
                if (!m.at(row, col).is_zero()) { pivot = row; break; }
            if (pivot == 0) return Scalar::zero(field_);
            if (pivot != col) {
                for (int j = 1; j <= n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
                det = -det;
            }
            det *= m.at(col, col);
            Scalar inv = m.at(col, col).inverse();
            for (int row = col + 1; row <= n_; ++row) {
                Scalar factor = m.at(row, col) * inv;
                if (factor.is_zero()) continue;
                for (int j = col; j <= n_; ++j) m.at(row, j) -= factor * m.at(col, j);
            }
        }
        return det;
    }

    bool invertible() const { return !det_gauss().is_zero(); }

    SquareMatrix inverse() const {
        SquareMatrix m = *this;
        SquareMatrix inv = identity(n_, field_);
        for (int col = 1; col <= n_; ++col) {
            int pivot = 0;
            for (int row = col; row <= n_; ++row)
                if (!m.at(row, col).is_zero()) { pivot = row; break; }
            if (pivot == 0) throw std::domain_error("matrix is singular");
            if (pivot != col)
                for (int j = 1; j <= n_; ++j) {
                    std::swap(m.at(pivot, j), m.at(col, j));
                    std::swap(inv.at(pivot, j), inv.at(col, j));
                }
            Scalar scale = m.at(col, col).inverse();
            for (int j = 1; j <= n_; ++j) {
                m.at(col, j) *= scale;
                inv.at(col, j) *= scale;
            }
            for (int row = 1; row <= n_; ++row) {
                if (row == col) continue;
                Scalar factor = m.at(row, col);
                if (factor.is_zero()) continue;
                for (int j = 1; j <= n_; ++j) {
                    m.at(row, j) -= factor * m.at(col, j);
                    inv.at(row, j) -= factor * inv.at(col, j);
                }
            }
        }
        return inv;
    }

private:
    int n_;
    FieldSpec field_;
    std::vector<Scalar> e_;

    std::size_t index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    void require_compatible(const SquareMatrix& o) const {
        if (n_ != o.n_ || field_ != o.field_) throw std::invalid_argument("matrix shape or field mismatch");
    }
};

using LinearMap = SquareMatrix;

}  // namespace exalg
