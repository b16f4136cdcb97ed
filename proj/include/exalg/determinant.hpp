#pragma once

// Three independent determinant routes: the Leibniz permutation sum, the
// cofactor (Laplace) expansion, and the coefficient of the top blade in
// the wedge of the matrix columns.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "matrix.hpp"
#include "multivector.hpp"

namespace exalg {

inline constexpr int kLeibnizLimit = 8;

// sum over all permutations of sgn(sigma) * prod a_{i, sigma(i)}
inline Scalar det_leibniz(const SquareMatrix& a) {
    int n = a.size();
    if (n > kLeibnizLimit) throw std::invalid_argument("det_leibniz limited to n <= 8");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    Scalar total = Scalar::zero(a.field());
    // iterate permutations in lexicographic order, recomputing the sign
    // by inversion count so the sum stays order-independent
    while (true) {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Scalar prod = Scalar::one(a.field());
        for (int i = 1; i <= n; ++i) prod *= a.at(i, perm[i - 1]);
        total += inversions % 2 == 0 ? prod : -prod;
        if (!std::next_permutation(perm.begin(), perm.end())) break;
    }
    return total;
}

namespace detail {

// Determinant of the minor living on `cols` (a bitmask of 0-based column
// indices), expanding along the topmost surviving row. `skip_row` is the
// 1-based row removed by the caller's top-level expansion, 0 for none.
// Memoized on the column mask: the surviving row set is determined by it.
inline Scalar det_minor(const SquareMatrix& a, std::uint64_t cols, int skip_row,
                        std::unordered_map<std::uint64_t, Scalar>& memo) {
    if (cols == 0) return Scalar::one(a.field());
    if (auto it = memo.find(cols); it != memo.end()) return it->second;

    // rows are consumed top-down (skipping skip_row), so the expansion row
    // is the (n-1-size)-th entry, 0-based, of 1..n with skip_row removed
    int size = std::popcount(cols);
    int idx = a.size() - 1 - size;
    int row = idx + 1 < skip_row ? idx + 1 : idx + 2;

    Scalar result = Scalar::zero(a.field());
    int pos = 0;  // position of the column within the minor, 0-based
    for (std::uint64_t m = cols; m; m &= m - 1, ++pos) {
        int col = std::countr_zero(m) + 1;
        const Scalar& entry = a.at(row, col);
        if (!entry.is_zero()) {
            Scalar sub = det_minor(a, cols & ~(std::uint64_t{1} << (col - 1)), skip_row, memo);
            Scalar term = entry * sub;
            result += pos % 2 == 0 ? term : -term;
        }
    }
    memo.emplace(cols, result);
    return result;
}

}  // namespace detail

// Cofactor expansion along the given 1-based row, recursing on minors.
inline Scalar det_cofactor(const SquareMatrix& a, int row) {
    int n = a.size();
    if (row < 1 || row > n) throw std::out_of_range("expansion row out of range");
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::unordered_map<std::uint64_t, Scalar> memo;
    Scalar result = Scalar::zero(a.field());
    int pos = 0;
    for (int col = 1; col <= n; ++col, ++pos) {
        const Scalar& entry = a.at(row, col);
        if (entry.is_zero()) continue;
        Scalar minor = detail::det_minor(a, all & ~(std::uint64_t{1} << (col - 1)), row, memo);
        Scalar term = entry * minor;  // cofactor sign is (-1)^{row+col}
        result += (row + col) % 2 == 0 ? term : -term;
    }
    return result;
}

// v_1 ^ ... ^ v_n = det(A) e_1 ^ ... ^ e_n, with v_j the j-th column.
inline Scalar det_wedge(const SquareMatrix& a) {
    int n = a.size();
    if (n > kMaxGenerators) throw std::invalid_argument("matrix larger than generator cap");
    AlgebraSignature sig(n, a.field());
    Multivector product = Multivector::unit(sig);
    for (int j = 1; j <= n; ++j) {
        Multivector column(sig);
        for (int i = 1; i <= n; ++i)
            column.add_term(Blade::from_indices({i}, n), a.at(i, j));
        product = product.wedge(column);
        if (product.is_zero()) return Scalar::zero(a.field());
    }
    std::uint64_t top = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return product.coefficient(Blade(top));
}

// Any alternating multilinear functional F is c * det with
// c = F(e_1, ..., e_n); evaluate that normal form on A.
inline Scalar det_uniqueness_check(const Scalar& c, const SquareMatrix& a) {
    return c * det_wedge(a);
}

}  // namespace exalg
