#include "linrep/oracle.hpp"

#include <vector>

#include "linrep/errors.hpp"

namespace linrep {

namespace {

constexpr unsigned long kUnassigned = ~0ul;

struct Searcher {
    const std::vector<std::size_t>& f;
    std::size_t n;
    unsigned long m = 0;
    unsigned long a = 0;
    std::vector<unsigned long> j;
    std::uint64_t nodes = 0;
    std::uint64_t node_cap = 0;
    bool cap_hit = false;

    explicit Searcher(const FiniteFunction& fn, std::uint64_t cap)
        : f(fn.images()), n(fn.size()), j(fn.size(), kUnassigned), node_cap(cap) {}

    bool value_in_use(unsigned long v) const {
        for (unsigned long w : j) {
            if (w != kUnassigned && w == v) return true;
        }
        return false;
    }

    // Assign j[start] = v and walk the f-orbit, forcing each successor to
    // a*value mod m. Appends every index it assigns to trail. Returns false
    // on an injectivity or congruence conflict (trail still records what
    // must be undone).
    bool propagate(std::size_t start, unsigned long v, std::vector<std::size_t>& trail) {
        j[start] = v;
        trail.push_back(start);
        std::size_t cur = start;
        while (true) {
            const std::size_t nxt = f[cur];
            const unsigned long want =
                static_cast<unsigned long>((static_cast<std::uint64_t>(a) * j[cur]) % m);
            if (j[nxt] != kUnassigned) return j[nxt] == want;
            if (value_in_use(want)) return false;
            j[nxt] = want;
            trail.push_back(nxt);
            cur = nxt;
        }
    }

    bool extend(std::size_t from) {
        std::size_t i = from;
        while (i < n && j[i] != kUnassigned) ++i;
        if (i == n) return true;
        for (unsigned long v = 0; v < m; ++v) {
            if (value_in_use(v)) continue;
            if (++nodes > node_cap) {
                cap_hit = true;
                return false;
            }
            std::vector<std::size_t> trail;
            if (propagate(i, v, trail) && extend(i + 1)) return true;
            for (std::size_t idx : trail) j[idx] = kUnassigned;
            if (cap_hit) return false;
        }
        return false;
    }
};

}  // namespace

SearchOutcome search_minimal(const FiniteFunction& f, const SearchBudget& budget) {
    const std::size_t n = f.size();
    if (n == 0) throw input_error("search_minimal: degenerate n=0 input");
    if (budget.max_m < 1) throw input_error("search_minimal: max_m must be at least 1");
    // multiplier products are computed in 64 bits, so moduli stay below 2^32
    if (budget.max_m > Int(0xFFFFFFFFul)) {
        throw input_error("search_minimal: max_m too large for exhaustive search");
    }
    const unsigned long max_m = budget.max_m.get_ui();

    SearchOutcome outcome;
    outcome.largest_m_searched = budget.max_m;

    Searcher searcher(f, budget.max_assignments);
    for (unsigned long m = static_cast<unsigned long>(n); m <= max_m; ++m) {
        searcher.m = m;
        for (unsigned long a = 0; a < m; ++a) {
            searcher.a = a;
            searcher.j.assign(n, kUnassigned);
            if (searcher.extend(0)) {
                LinearRepresentation rep;
                rep.n = n;
                rep.m = m;
                rep.a = a;
                rep.x = a;  // no evaluation point behind a searched triple
                rep.mode = RepMode::UserSupplied;
                rep.j.reserve(n);
                for (unsigned long v : searcher.j) rep.j.emplace_back(v);
                outcome.rep = std::move(rep);
                outcome.largest_m_searched = m;
                outcome.assignments_used = searcher.nodes;
                return outcome;
            }
            if (searcher.cap_hit) {
                outcome.largest_m_searched = m - 1;
                outcome.assignments_used = searcher.nodes;
                outcome.assignment_cap_hit = true;
                return outcome;
            }
        }
    }
    outcome.assignments_used = searcher.nodes;
    return outcome;
}

}  // namespace linrep
