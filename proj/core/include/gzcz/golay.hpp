#pragma once

#include <utility>

#include "gzcz/correlation.hpp"
#include "gzcz/phase_sequence.hpp"

namespace gzcz {

/// Two equal-length, equal-modulus sequences. A Golay complementary pair
/// additionally has aperiodic autocorrelations summing to zero at every
/// nonzero shift; that contract is checked by verify_gcp and enforced by the
/// constructions that rely on it.
struct GolayPair {
    PhaseSequence a;
    PhaseSequence b;

    GolayPair(PhaseSequence a_in, PhaseSequence b_in);

    std::size_t length() const { return a.length(); }
    std::uint32_t modulus() const { return a.modulus(); }
};

/// Block signs for the length-4N pair construction. Valid quadruples satisfy
/// x1*x2 + x3*x4 == 0; eight of the sixteen sign patterns qualify.
struct SignQuadruple {
    int x1 = 1;
    int x2 = 1;
    int x3 = 1;
    int x4 = -1;

    bool valid() const { return x1 * x2 + x3 * x4 == 0; }
};

/// True iff C_a(tau) + C_b(tau) == 0 for every tau != 0.
bool verify_gcp(const PhaseSequence& a, const PhaseSequence& b);
bool verify_gcp(const GolayPair& pair);

/// Canonical complementary mate (c, d) = (reverse(conj(b)), -reverse(conj(a))).
/// Applying it twice yields a pair with the same correlation profiles.
GolayPair golay_mate(const GolayPair& pair);

/// The mate cross-sum condition: C_{a,b}(tau) + C_{c,d}(tau) == 0 for all tau.
bool mate_property(const GolayPair& pair, const GolayPair& mate);

/// Builds the zero-correlation-zone pair
///   p = x1*a || x2*b || x3*a || x4*b
///   q = x1*c || x2*d || x3*c || x4*d
/// of length 4N. With a GCP (a,b), a genuine complementary mate (c,d) and a
/// valid sign quadruple, (p,q) is a complementary pair whose periodic
/// autocorrelations vanish for 1 <= tau <= N and whose periodic
/// cross-correlation vanishes for 0 <= tau <= N.
///
/// Throws SignConditionError for invalid signs and MateError unless the mate
/// conditions that the guarantee rests on all hold: both pairs are GCPs, the
/// mate cross-sum vanishes, and C_{a,c} + C_{b,d} vanishes everywhere.
std::pair<PhaseSequence, PhaseSequence> build_zcz_pair(const GolayPair& pair,
                                                       const GolayPair& mate,
                                                       const SignQuadruple& signs);

/// Doubling step (a, b) -> (a || b, a || -b); maps GCPs to GCPs of twice the
/// length. Seed supply for tests and searches.
GolayPair double_pair(const GolayPair& pair);

} // namespace gzcz
