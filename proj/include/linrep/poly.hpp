#pragma once

/*
 * Dense univariate polynomials over Z with arbitrary-precision integer
 * coefficients (GMP). Coefficient k of the backing vector is the
 * coefficient of x^k; the vector is kept normalized: either empty (the
 * zero polynomial) or with a nonzero last entry.
 *
 * Conventions:
 *   - degree(0) = 0 and leading_coeff(0) = 0 (natural-degree convention);
 *     every degree bound in this project is stated under it.
 *   - coeff_bound(p) = sum of |c_k| over all coefficients; for p with a
 *     positive leading coefficient, p(t) > 0 for every integer
 *     t >= coeff_bound(p).
 *
 * All operations are pure and values are immutable after construction,
 * so instances can be shared freely across threads.
 */

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace linrep {

using Int = mpz_class;

class IntPoly {
public:
    IntPoly() = default;  // zero polynomial
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);  // lowest-degree first

    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, std::size_t k);  // c * x^k
    static IntPoly variable() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t degree() const noexcept;
    Int coeff(std::size_t k) const;  // 0 beyond the stored range
    Int leading_coeff() const;       // 0 for the zero polynomial
    Int coeff_bound() const;
    Int eval(const Int& t) const;    // Horner

    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

    // "[0, 1, -2, 1]" for x^3 - 2x^2 + x; "[]" for the zero polynomial.
    std::string to_string() const;

    IntPoly operator-() const;
    IntPoly scaled(const Int& c) const;

    friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);

    bool operator==(const IntPoly& other) const noexcept = default;

private:
    std::vector<Int> coeffs_;

    void normalize();
};

}  // namespace linrep
