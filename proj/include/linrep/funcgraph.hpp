#pragma once

// Functions on {0,...,n-1} as image tables. Text format: comma- or
// whitespace-separated images, e.g. "0,1,1"; empty input is the function
// on the empty set. func_matrix gives the 0/1 encoding a_ij = [f(i) = j].

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linrep/polymat.hpp"

namespace linrep {

class FiniteFunction {
public:
    FiniteFunction() = default;  // n = 0
    explicit FiniteFunction(std::vector<std::size_t> images);

    static FiniteFunction parse(std::string_view text);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t apply(std::size_t i) const;
    std::size_t operator()(std::size_t i) const { return apply(i); }
    const std::vector<std::size_t>& images() const noexcept { return images_; }

    std::string render() const;

    bool operator==(const FiniteFunction& other) const noexcept = default;

private:
    std::vector<std::size_t> images_;
};

IntMatrix func_matrix(const FiniteFunction& f);

// Enumeration cap for exhaustive sweeps; LINREP_ENUM_CAP overrides the
// default of 6.
std::size_t enumeration_cap();

// Streams all n^n functions on {0,...,n-1} in lexicographic order of
// their image tables. Refuses n above the enumeration cap. Single
// consumer per instance; independent instances are fine in parallel.
class FunctionEnumerator {
public:
    explicit FunctionEnumerator(std::size_t n);

    std::optional<FiniteFunction> next();

private:
    std::size_t n_;
    std::vector<std::size_t> odometer_;
    bool exhausted_ = false;
};

}  // namespace linrep
