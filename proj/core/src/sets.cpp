#include "gzcz/sets.hpp"

#include "gzcz/errors.hpp"

namespace gzcz {

ComplementarySet::ComplementarySet(std::vector<PhaseSequence> rows)
    : rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw Error("a complementary set needs at least one row");
    }
    const std::size_t n = rows_.front().length();
    const std::uint32_t q = rows_.front().modulus();
    for (const auto& r : rows_) {
        if (r.length() != n) {
            throw LengthMismatchError("set rows must share one length");
        }
        if (r.modulus() != q) {
            throw ModulusMismatchError("set rows must share one modulus");
        }
    }
}

std::size_t ComplementarySet::length() const { return rows_.front().length(); }

std::uint32_t ComplementarySet::modulus() const { return rows_.front().modulus(); }

CompleteComplementaryCode::CompleteComplementaryCode(std::vector<ComplementarySet> sets)
    : sets_(std::move(sets)) {
    if (sets_.empty()) {
        throw Error("a code needs at least one set");
    }
    const std::size_t rows = sets_.front().set_size();
    const std::size_t n = sets_.front().length();
    const std::uint32_t q = sets_.front().modulus();
    for (const auto& s : sets_) {
        if (s.set_size() != rows) {
            throw ShapeError("all sets in a code must have the same row count");
        }
        if (s.length() != n) {
            throw LengthMismatchError("all sets in a code must share one length");
        }
        if (s.modulus() != q) {
            throw ModulusMismatchError("all sets in a code must share one modulus");
        }
    }
}

std::size_t CompleteComplementaryCode::rows_per_set() const {
    return sets_.front().set_size();
}

std::size_t CompleteComplementaryCode::length() const { return sets_.front().length(); }

std::uint32_t CompleteComplementaryCode::modulus() const {
    return sets_.front().modulus();
}

} // namespace gzcz
