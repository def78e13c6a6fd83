#pragma once

#include <cstdint>
#include <vector>

#include "gzcz/sets.hpp"

namespace gzcz {

/// Parameters for the binary (M,M,N) code search. v1 targets M == 4; the
/// engine itself is generic over small set sizes.
struct SearchConfig {
    std::size_t set_size = 4; // M
    std::size_t length = 1;   // N
    double timeout_seconds = 60.0;
    std::size_t max_solutions = 1;
    bool symmetry_reduction = true; // pin row 0 of set 0 to all-zero exponents
    bool pruning = true;            // disable only to audit pruning soundness
};

struct SearchCounters {
    std::uint64_t nodes = 0;  // entry assignments explored
    std::uint64_t prunes = 0; // branches cut before full assignment
    std::uint64_t solutions = 0;
};

struct SearchResult {
    std::vector<CompleteComplementaryCode> codes;
    bool timed_out = false;
    SearchCounters counters;
};

/// Depth-first search over binary entries in set-major, row-major, column
/// order, exponent 0 branched before 1. A completed row updates the running
/// autocorrelation sum of its set and the cross-correlation sums against
/// every earlier set; a branch is cut as soon as some required shift can no
/// longer reach zero (each unfilled row can move a shift-tau sum by at most
/// N - |tau|). Every emitted code is re-verified before being returned.
/// Single-threaded runs are deterministic; threads > 1 partitions the
/// subtrees under the first free row across workers and merges solutions in
/// branch order, yielding the same solution set.
SearchResult search_ccc(const SearchConfig& config, unsigned threads = 1);

/// Canonical representative under the correlation-preserving global
/// symmetries: entrywise negation of the whole code and simultaneous
/// reversal of all rows. Returns the lexicographically least of the images
/// (exponent order, set-major). Idempotent.
CompleteComplementaryCode canonicalize(const CompleteComplementaryCode& code);

} // namespace gzcz
