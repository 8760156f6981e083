#pragma once

/*
 * Exhaustive search for the smallest modulus admitting a linear
 * representation of f, independent of the adjugate construction. It
 * checks the bare definition: some a in [0, m) and injective
 * j: {0,...,n-1} -> [0, m) with j[f(i)] = a*j[i] (mod m) for all i.
 * Unlike the construction, j values may include 0.
 *
 * Search order is fully deterministic: moduli ascending from n,
 * multipliers ascending, and j assignments depth-first in index order
 * with values ascending. Assigning one value on an f-orbit forces the
 * values along the rest of the orbit, which prunes most of the m^n
 * space. The first solution found is therefore the minimal m, smallest
 * a for that m, and lexicographically smallest j for that (m, a).
 */

#include <cstdint>
#include <optional>

#include "linrep/funcgraph.hpp"
#include "linrep/represent.hpp"

namespace linrep {

struct SearchBudget {
    Int max_m = 64;                            // largest modulus to try
    std::uint64_t max_assignments = 10'000'000;  // cap on backtracking nodes
};

struct SearchOutcome {
    std::optional<LinearRepresentation> rep;  // mode UserSupplied when found
    Int largest_m_searched;                   // last modulus fully explored
    std::uint64_t assignments_used = 0;
    bool assignment_cap_hit = false;

    bool found() const noexcept { return rep.has_value(); }
};

SearchOutcome search_minimal(const FiniteFunction& f, const SearchBudget& budget = {});

}  // namespace linrep
