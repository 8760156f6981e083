#pragma once

#include <stdexcept>
#include <string>

namespace linrep {

// Malformed user input: unparseable function text, images outside the
// domain, dimension mismatches, enumeration cap overruns. CLI exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An explicitly supplied evaluation point fails the strict ordering chain
// 0 < y_0 < ... < y_{n-1} < m. Carries the first violated inequality in
// the message. CLI exit code 3.
class chain_violation : public std::runtime_error {
public:
    explicit chain_violation(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant: nonzero remainder in an exact division,
// a threshold target with non-positive leading coefficient, and the like.
// Always a bug, never a user mistake. CLI exit code 70.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace linrep
