#pragma once

#include <cstddef>
#include <vector>

#include "gzcz/phase_sequence.hpp"

namespace gzcz {

/// An ordered M x N set of sequences sharing one modulus. The complementary
/// contract (row autocorrelations summing to zero off-peak) is a property of
/// particular sets, checked by the correlation ops, not by this container.
class ComplementarySet {
public:
    explicit ComplementarySet(std::vector<PhaseSequence> rows);

    std::size_t set_size() const { return rows_.size(); } // M
    std::size_t length() const;                           // N
    std::uint32_t modulus() const;

    const PhaseSequence& row(std::size_t m) const { return rows_.at(m); }
    const std::vector<PhaseSequence>& rows() const { return rows_; }

    bool operator==(const ComplementarySet&) const = default;

private:
    std::vector<PhaseSequence> rows_;
};

/// An ordered list of complementary sets sharing modulus, length and row
/// count. All constructions here produce square codes (set count == rows per
/// set); squareness is demanded by the code-level ops, which raise ShapeError,
/// so that malformed inputs can still be represented and rejected.
class CompleteComplementaryCode {
public:
    explicit CompleteComplementaryCode(std::vector<ComplementarySet> sets);

    std::size_t set_count() const { return sets_.size(); }
    std::size_t rows_per_set() const;  // M
    std::size_t length() const;        // N
    std::uint32_t modulus() const;
    bool square() const { return set_count() == rows_per_set(); }

    const ComplementarySet& set(std::size_t k) const { return sets_.at(k); }
    const std::vector<ComplementarySet>& sets() const { return sets_; }

    bool operator==(const CompleteComplementaryCode&) const = default;

private:
    std::vector<ComplementarySet> sets_;
};

} // namespace gzcz
