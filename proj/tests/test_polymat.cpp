#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linrep/errors.hpp"
#include "linrep/funcgraph.hpp"
#include "linrep/polymat.hpp"
#include "test_support.hpp"

using linrep::FiniteFunction;
using linrep::Int;
using linrep::IntMatrix;
using linrep::IntPoly;
using linrep::PolyMatrix;
using namespace testsupport;

namespace {

PolyMatrix char_matrix_of(std::initializer_list<std::size_t> images) {
    return linrep::char_matrix(
        linrep::func_matrix(FiniteFunction(std::vector<std::size_t>(images))));
}

}  // namespace

TEST_CASE("char_matrix lays out xI - A") {
    const PolyMatrix chi = char_matrix_of({0, 1, 1});
    CHECK(chi.at(0, 0) == IntPoly{-1, 1});
    CHECK(chi.at(0, 1) == IntPoly{});
    CHECK(chi.at(0, 2) == IntPoly{});
    CHECK(chi.at(1, 1) == IntPoly{-1, 1});
    CHECK(chi.at(2, 1) == IntPoly{-1});
    CHECK(chi.at(2, 2) == IntPoly{0, 1});

    IntMatrix zero1(1);
    CHECK(linrep::char_matrix(zero1).at(0, 0) == IntPoly{0, 1});

    IntMatrix ident2(2);
    ident2.at(0, 0) = 1;
    ident2.at(1, 1) = 1;
    const PolyMatrix chi2 = linrep::char_matrix(ident2);
    CHECK(chi2.at(0, 0) == IntPoly{-1, 1});
    CHECK(chi2.at(1, 1) == IntPoly{-1, 1});
    CHECK(chi2.at(0, 1) == IntPoly{});
}

TEST_CASE("determinant of worked characteristic matrices") {
    CHECK(linrep::determinant(char_matrix_of({0, 1, 1})) == IntPoly{0, 1, -2, 1});
    CHECK(linrep::determinant(char_matrix_of({1, 0})) == IntPoly{-1, 0, 1});
    CHECK(linrep::determinant(PolyMatrix{}) == IntPoly{1});
}

TEST_CASE("determinant handles zero pivots via row swaps") {
    // rows (0, 1), (1, 0): constant matrix with det -1
    PolyMatrix m(2);
    m.at(0, 1) = IntPoly{1};
    m.at(1, 0) = IntPoly{1};
    CHECK(linrep::determinant(m) == IntPoly{-1});

    // singular: a zero column
    PolyMatrix s(2);
    s.at(0, 1) = IntPoly{0, 1};
    s.at(1, 1) = IntPoly{3};
    CHECK(linrep::determinant(s) == IntPoly{});
}

TEST_CASE("adjugate of worked matrices") {
    const PolyMatrix adj = linrep::adjugate(char_matrix_of({0, 1, 1}));
    CHECK(adj.at(0, 0) == IntPoly{0, -1, 1});  // x(x-1)
    CHECK(adj.at(0, 1) == IntPoly{});
    CHECK(adj.at(1, 1) == IntPoly{0, -1, 1});
    CHECK(adj.at(2, 1) == IntPoly{-1, 1});     // x-1
    CHECK(adj.at(2, 2) == IntPoly{1, -2, 1});  // (x-1)^2
    CHECK(adj.at(2, 0) == IntPoly{});

    const PolyMatrix swap_adj = linrep::adjugate(char_matrix_of({1, 0}));
    CHECK(swap_adj.at(0, 0) == IntPoly{0, 1});
    CHECK(swap_adj.at(0, 1) == IntPoly{1});
    CHECK(swap_adj.at(1, 0) == IntPoly{1});
    CHECK(swap_adj.at(1, 1) == IntPoly{0, 1});

    PolyMatrix one(1);
    one.at(0, 0) = IntPoly{42, 3};
    CHECK(linrep::adjugate(one).at(0, 0) == IntPoly{1});

    CHECK(linrep::adjugate(PolyMatrix{}).dim() == 0);
}

TEST_CASE("apply_vector evaluates row combinations") {
    const PolyMatrix adj = linrep::adjugate(char_matrix_of({0, 1, 1}));
    const std::vector<Int> y = linrep::apply_vector(adj, {Int(1), Int(2), Int(3)}, 4);
    REQUIRE(y.size() == 3);
    CHECK(y[0] == 12);
    CHECK(y[1] == 24);
    CHECK(y[2] == 33);

    const std::vector<Int> ident =
        linrep::apply_vector(PolyMatrix::identity(2), {Int(5), Int(7)}, 123);
    CHECK(ident[0] == 5);
    CHECK(ident[1] == 7);

    const PolyMatrix swap_adj = linrep::adjugate(char_matrix_of({1, 0}));
    const std::vector<Int> sw = linrep::apply_vector(swap_adj, {Int(1), Int(2)}, 5);
    CHECK(sw[0] == 7);
    CHECK(sw[1] == 11);

    CHECK_THROWS_AS(linrep::apply_vector(swap_adj, {Int(1)}, 5), linrep::input_error);
}

TEST_CASE("exact division recovers factors and rejects inexact input") {
    const IntPoly p{-1, 1};       // x - 1
    const IntPoly q{0, 2, 1};     // x^2 + 2x
    CHECK(linrep::detail::exact_div(p * q, p) == q);
    CHECK(linrep::detail::exact_div(p * q, q) == p);
    CHECK(linrep::detail::exact_div(IntPoly{}, p) == IntPoly{});
    CHECK_THROWS_AS(linrep::detail::exact_div(IntPoly{1, 1}, IntPoly{0, 2}),
                    linrep::internal_error);
    CHECK_THROWS_AS(linrep::detail::exact_div(IntPoly{1, 1}, IntPoly{}), linrep::internal_error);
}

TEST_CASE("adjugate identity on random integer matrices") {
    std::mt19937_64 rng(20240401);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 6);
        const IntMatrix a = random_int_matrix(rng, n, -9, 9);
        const PolyMatrix chi = linrep::char_matrix(a);
        const PolyMatrix adj = linrep::adjugate(chi);
        const IntPoly det = linrep::determinant(chi);

        PolyMatrix expected(n);
        for (std::size_t i = 0; i < n; ++i) expected.at(i, i) = det;
        CHECK(chi * adj == expected);
        CHECK(adj * chi == expected);
    }
}

TEST_CASE("characteristic polynomial is monic of degree n") {
    std::mt19937_64 rng(20240402);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 6);
        const IntPoly cp = linrep::determinant(linrep::char_matrix(random_int_matrix(rng, n, -9, 9)));
        CHECK(cp.degree() == n);
        CHECK(cp.leading_coeff() == 1);
    }
}

TEST_CASE("determinant degree bounded by the sum of entry degrees") {
    std::mt19937_64 rng(20240403);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 4);
        const PolyMatrix m = random_poly_matrix(rng, n, 3, -5, 5);
        std::size_t degree_sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) degree_sum += m.at(i, k).degree();
        }
        CHECK(linrep::determinant(m).degree() <= degree_sum);
    }
}

TEST_CASE("adjugate degree structure for functional matrices") {
    std::mt19937_64 rng(20240404);
    for (std::size_t n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const FiniteFunction f = random_function(rng, n);
            const PolyMatrix adj = linrep::adjugate(linrep::char_matrix(linrep::func_matrix(f)));
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t k = 0; k < n; ++k) {
                    if (i == k) {
                        CHECK(adj.at(i, k).degree() == n - 1);
                        CHECK(adj.at(i, k).leading_coeff() == 1);
                    } else {
                        CHECK(adj.at(i, k).degree() <= std::max<std::size_t>(n - 2, 0));
                    }
                }
            }
        }
    }
}

TEST_CASE("Bareiss determinant agrees with the permutation-sum oracle") {
    std::mt19937_64 rng(20240405);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng() % 5);  // includes n = 0
        const PolyMatrix m = random_poly_matrix(rng, n, 2, -6, 6);
        CHECK(linrep::determinant(m) == permutation_sum_determinant(m));
    }
}
