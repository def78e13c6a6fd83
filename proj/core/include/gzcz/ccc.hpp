#pragma once

#include <cstdint>
#include <vector>

#include "gzcz/golay.hpp"
#include "gzcz/sets.hpp"

namespace gzcz {

/// True iff for every ordered pair of sets (k1, k2) the row-wise aperiodic
/// cross-correlation sum equals M*N at (k1 == k2, tau == 0) and zero at every
/// other shift, tau == 0 of distinct sets included. Throws ShapeError for
/// non-square codes.
bool verify_ccc(const CompleteComplementaryCode& code);

/// Row/set rearrangement: output set i collects row i of every input set, in
/// set order. Maps codes to codes; involution. Throws ShapeError.
CompleteComplementaryCode transpose_ccc(const CompleteComplementaryCode& code);

/// Composition of an (M,M,N1) and an (M,M,N2) code into an (M,M,M*N1*N2)
/// code: row l of output set m concatenates kronecker(first^m_j, second^l_j)
/// over j. Throws SetSizeMismatchError when the codes' M differ, ShapeError
/// when either input is non-square.
CompleteComplementaryCode kronecker_ccc(const CompleteComplementaryCode& first,
                                        const CompleteComplementaryCode& second);

/// Bridge: a GCP and a genuine complementary mate form the (2,2,N) code
/// {[a;b], [c;d]}. Throws MateError when the mate cross-sum fails or the
/// assembled code does not verify.
CompleteComplementaryCode ccc_from_gcp(const GolayPair& pair, const GolayPair& mate);

/// Lengths of (4,4,N) codes obtainable from the seeds by closing the base
/// lengths {3, 4, 5, 7, 11, 13} under N -> 4 * N1 * N2, up to the bound.
/// Sorted ascending.
std::vector<std::int64_t> reachable_lengths(std::int64_t bound);

/// Published reference lengths (up to 200) of binary (4,4,N) code designs
/// reported in the literature; comparison data for reachable_lengths, whose
/// single composition rule need not reproduce it.
const std::vector<std::int64_t>& reference_lengths();

} // namespace gzcz
