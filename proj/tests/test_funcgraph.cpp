#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>
#include <stdexcept>

#include "linrep/errors.hpp"
#include "linrep/funcgraph.hpp"
#include "test_support.hpp"

using linrep::FiniteFunction;
using linrep::FunctionEnumerator;
using linrep::Int;
using linrep::IntMatrix;
using namespace testsupport;

TEST_CASE("parse accepts comma and whitespace separated tables") {
    const FiniteFunction f = FiniteFunction::parse("0,1,1");
    CHECK(f.size() == 3);
    CHECK(f.images() == std::vector<std::size_t>{0, 1, 1});

    CHECK(FiniteFunction::parse("0").size() == 1);
    CHECK(FiniteFunction::parse("2 0 1").images() == std::vector<std::size_t>{2, 0, 1});
    CHECK(FiniteFunction::parse("1, 0").images() == std::vector<std::size_t>{1, 0});
    CHECK(FiniteFunction::parse("").size() == 0);
    CHECK(FiniteFunction::parse("  \t ").size() == 0);
}

TEST_CASE("parse rejects junk and out-of-domain images") {
    CHECK_THROWS_AS(FiniteFunction::parse("0,x,1"), linrep::input_error);
    CHECK_THROWS_AS(FiniteFunction::parse("-1,0"), linrep::input_error);
    CHECK_THROWS_AS(FiniteFunction::parse("1.5"), linrep::input_error);

    try {
        FiniteFunction::parse("2,0,1,5");
        FAIL("expected input_error");
    } catch (const linrep::input_error& e) {
        // closure error names the offending index
        CHECK(std::string(e.what()).find("index 3") != std::string::npos);
        CHECK(std::string(e.what()).find("5") != std::string::npos);
    }
}

TEST_CASE("apply returns images and range-checks") {
    const FiniteFunction f = FiniteFunction::parse("0,1,1");
    CHECK(f.apply(2) == 1);
    CHECK(f(0) == 0);
    CHECK_THROWS_AS(f.apply(3), std::out_of_range);

    const FiniteFunction ident = FiniteFunction::parse("0,1,2");
    for (std::size_t i = 0; i < 3; ++i) CHECK(ident(i) == i);
    CHECK(FiniteFunction::parse("1,0")(0) == 1);
}

TEST_CASE("func_matrix places a single 1 per row") {
    const IntMatrix a = linrep::func_matrix(FiniteFunction::parse("0,1,1"));
    CHECK(a.at(0, 0) == 1);
    CHECK(a.at(1, 1) == 1);
    CHECK(a.at(2, 1) == 1);
    CHECK(a.at(2, 2) == 0);

    const IntMatrix ident = linrep::func_matrix(FiniteFunction::parse("0,1"));
    CHECK(ident.at(0, 0) == 1);
    CHECK(ident.at(1, 1) == 1);
    CHECK(ident.at(0, 1) == 0);

    const IntMatrix swap = linrep::func_matrix(FiniteFunction::parse("1,0"));
    CHECK(swap.at(0, 1) == 1);
    CHECK(swap.at(1, 0) == 1);
    CHECK(swap.at(0, 0) == 0);
}

TEST_CASE("every row of a functional matrix sums to 1") {
    std::mt19937_64 rng(20240501);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 8);
        const IntMatrix a = linrep::func_matrix(random_function(rng, n));
        for (std::size_t i = 0; i < n; ++i) {
            Int row_sum = 0;
            for (std::size_t k = 0; k < n; ++k) row_sum += a.at(i, k);
            CHECK(row_sum == 1);
        }
    }
}

TEST_CASE("matrix action picks out y[f(i)]") {
    std::mt19937_64 rng(20240502);
    std::uniform_int_distribution<long> value(-1000, 1000);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng() % 8);
        const FiniteFunction f = random_function(rng, n);
        std::vector<Int> y(n);
        for (auto& v : y) v = value(rng);
        const std::vector<Int> ay = matrix_times_vector(linrep::func_matrix(f), y);
        for (std::size_t i = 0; i < n; ++i) CHECK(ay[i] == y[f(i)]);
    }
}

TEST_CASE("render/parse round-trip over all functions with n <= 4") {
    for (std::size_t n = 0; n <= 4; ++n) {
        FunctionEnumerator en(n);
        while (auto f = en.next()) {
            CHECK(FiniteFunction::parse(f->render()) == *f);
        }
    }
}

TEST_CASE("enumeration is lexicographic and complete") {
    FunctionEnumerator e1(1);
    CHECK(e1.next()->images() == std::vector<std::size_t>{0});
    CHECK(!e1.next().has_value());

    FunctionEnumerator e2(2);
    CHECK(e2.next()->images() == std::vector<std::size_t>{0, 0});
    CHECK(e2.next()->images() == std::vector<std::size_t>{0, 1});
    CHECK(e2.next()->images() == std::vector<std::size_t>{1, 0});
    CHECK(e2.next()->images() == std::vector<std::size_t>{1, 1});
    CHECK(!e2.next().has_value());

    FunctionEnumerator e3(3);
    std::size_t count = 0;
    while (e3.next()) ++count;
    CHECK(count == 27);

    FunctionEnumerator e0(0);
    CHECK(e0.next()->size() == 0);  // the one empty function
    CHECK(!e0.next().has_value());
}

TEST_CASE("enumeration cap refuses large n with the would-be count") {
    unsetenv("LINREP_ENUM_CAP");
    CHECK(linrep::enumeration_cap() == 6);
    try {
        FunctionEnumerator big(9);
        FAIL("expected input_error");
    } catch (const linrep::input_error& e) {
        CHECK(std::string(e.what()).find("387420489") != std::string::npos);
    }

    setenv("LINREP_ENUM_CAP", "3", 1);
    CHECK(linrep::enumeration_cap() == 3);
    CHECK_THROWS_AS(FunctionEnumerator{4}, linrep::input_error);
    unsetenv("LINREP_ENUM_CAP");
}
