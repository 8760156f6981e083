#pragma once

/*
 * The construction at the heart of this project: every function f on
 * {0,...,n-1} becomes multiplication by a constant after an injective
 * embedding into Z/mZ.
 *
 * Pipeline, for A the adjacency matrix of f and v = (1, 2, ..., n):
 *
 *   M(x)      = adj(x*I - A)
 *   p_i(x)    = sum_k M(x)[i][k] * (k+1)        (row polynomials)
 *   char_poly = det(x*I - A)                    (monic, degree n)
 *
 * Evaluating at a suitable integer x gives j[i] = p_i(x), m = char_poly(x)
 * and a = x mod m with j(f(i)) = a * j(i) (mod m). The strictly increasing
 * chain 0 < j[0] < ... < j[n-1] < m makes j injective; it holds at every
 * x >= threshold(rp) because each chain-difference polynomial has positive
 * leading coefficient and is therefore positive from its coefficient bound
 * onward.
 *
 * The underlying exact identity j[f(i)] = x*j[i] - m*(i+1) holds at every
 * integer x, chain or no chain; verify() records its residuals.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linrep/funcgraph.hpp"
#include "linrep/poly.hpp"

namespace linrep {

struct RowPolynomials {
    std::size_t n = 0;
    std::vector<IntPoly> p;  // p[i] has degree n-1 and leading coefficient i+1
    IntPoly char_poly;       // monic of degree n
};

enum class RepMode {
    BoundDerived,  // x = threshold(rp)
    Tight,         // smallest x satisfying the chain, found by ascending scan
    Explicit,      // caller-chosen x, chain-checked
    UserSupplied,  // (m, a, j) from outside the construction; no meaningful x
};

std::string to_string(RepMode mode);

struct LinearRepresentation {
    std::size_t n = 0;
    Int x;               // evaluation point (equals a for user-supplied triples)
    Int m;               // modulus, char_poly(x) for constructed representations
    Int a;               // multiplier, x mod m
    std::vector<Int> j;  // embedding values
    RepMode mode = RepMode::BoundDerived;
};

struct CertificateRecord {
    std::size_t index = 0;             // i
    std::size_t image = 0;             // f(i)
    Int j_value;                       // j[i]
    Int j_image;                       // j[f(i)]
    Int a_j_mod_m;                     // a * j[i] mod m
    bool congruent = false;            // j[f(i)] == a * j[i] (mod m)
    std::optional<Int> residual;       // x*j[i] - m*(i+1) - j[f(i)]; constructed modes only
};

struct Certificate {
    std::vector<CertificateRecord> records;
    bool injective = false;      // j values distinct and within [0, m)
    bool ordered = false;        // 0 < j[0] < ... < j[n-1] < m
    bool congruence_ok = false;
    std::optional<bool> identity_ok;  // unset for user-supplied representations
    bool passed = false;
};

// Adjugate row combination and characteristic polynomial for f; requires
// n >= 1. Postconditions (checked): p[i] monic-scaled as documented,
// char_poly monic of degree n.
RowPolynomials row_polynomials(const FiniteFunction& f);

// Smallest evaluation point this module can certify from coefficient
// bounds: the max of coeff_bound(p[0]), the consecutive chain differences,
// and (for n >= 2) char_poly - p[n-1] and char_poly - x, floored at 2.
// Every inequality of the chain holds at each integer x >= threshold; for
// n = 1 the two char_poly clauses are exempt and construct() applies the
// x >= 3 rule instead.
Int threshold(const RowPolynomials& rp);

enum class XChoice { BoundDerived, Tight };

LinearRepresentation construct(const FiniteFunction& f, XChoice choice);

// Evaluate at a caller-supplied x >= 1; throws chain_violation naming the
// first violated inequality if the strict chain fails there.
LinearRepresentation construct_at(const FiniteFunction& f, const Int& x);

// Full verification: injectivity within [0, m), the strict ordering
// chain, every congruence j[f(i)] = a*j(i) (mod m), and (for constructed
// representations) the exact integer identity. User-supplied triples pass
// on injectivity + congruence alone; the other flags are still recorded.
Certificate verify(const FiniteFunction& f, const LinearRepresentation& rep);

}  // namespace linrep
