#pragma once

/*
 * Exact linear algebra over Z[x]: characteristic matrices, determinants,
 * adjugates, and evaluated matrix-vector products.
 *
 * The determinant uses fraction-free Bareiss elimination; every division
 * in the pivot update is exact in Z[x] by the Bareiss identity, and a
 * nonzero remainder is reported as an internal invariant failure. The
 * adjugate is assembled from the n^2 signed minor determinants, entry
 * (i,j) being (-1)^(i+j) times the determinant of the input with row j
 * and column i removed. It satisfies M * adj(M) = adj(M) * M = det(M) * I
 * exactly.
 *
 * Empty-product conventions keep everything total: det of the 0x0 matrix
 * is 1, adj of the 0x0 matrix is empty, adj of any 1x1 matrix is [[1]].
 */

#include <cstddef>
#include <vector>

#include "linrep/poly.hpp"

namespace linrep {

class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n, Int(0)) {}

    std::size_t dim() const noexcept { return n_; }
    Int& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    bool operator==(const IntMatrix& other) const noexcept = default;

private:
    std::size_t n_ = 0;
    std::vector<Int> entries_;  // row-major
};

class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    static PolyMatrix identity(std::size_t n);

    std::size_t dim() const noexcept { return n_; }
    IntPoly& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const IntPoly& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    bool operator==(const PolyMatrix& other) const noexcept = default;

private:
    std::size_t n_ = 0;
    std::vector<IntPoly> entries_;  // row-major
};

// x*I - A, the characteristic matrix of A.
PolyMatrix char_matrix(const IntMatrix& a);

// Exact determinant via fraction-free Bareiss elimination.
IntPoly determinant(const PolyMatrix& m);

// Classical adjugate (transposed cofactor matrix).
PolyMatrix adjugate(const PolyMatrix& m);

// y_i = sum_k m[i][k](t) * v[k]. Throws input_error on length mismatch.
std::vector<Int> apply_vector(const PolyMatrix& m, const std::vector<Int>& v, const Int& t);

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

namespace detail {
// Quotient of num/den in Z[x] when the division is exact; throws
// internal_error otherwise. Only Bareiss pivot updates call this.
IntPoly exact_div(const IntPoly& num, const IntPoly& den);
}  // namespace detail

}  // namespace linrep
