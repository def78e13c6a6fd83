#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gzcz/correlation.hpp"
#include "gzcz/sets.hpp"

namespace gzcz {

/// The M x M inverse-DFT matrix with entries w_M^(i*j), w_M = exp(2*pi*i/M),
/// unit magnitude, no 1/M normalization. Columns are pairwise orthogonal with
/// inner product M on the diagonal.
class IdftMatrix {
public:
    explicit IdftMatrix(std::size_t order);

    std::size_t order() const { return order_; }

    /// Exponent of w_M for the (i, j) entry: (i*j) mod M.
    std::uint32_t exponent(std::size_t i, std::size_t j) const;

    std::complex<double> entry(std::size_t i, std::size_t j) const;

private:
    std::size_t order_;
};

/// A reduced fraction; carries exact optimality factors like 3/4.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Fraction&) const = default;
};

enum class Alphabet { binary, polyphase };

/// Measurement verdict for a candidate Golay-ZCZ sequence set.
struct ZczReport {
    std::size_t set_size = 0;       // M
    std::size_t length = 0;         // L
    std::uint32_t modulus = 0;      // q of the measured sequences
    std::int64_t measured_zacz = 0; // widest Z with all pacf zero on 1..Z
    std::int64_t measured_zccz = 0; // widest Z with all pccf zero on 0..Z; -1 if none
    std::int64_t z_min = 0;         // min(measured_zacz, measured_zccz)
    bool complementary = false;     // aperiodic autocorrelation sum zero off-peak
    bool exact = false;             // checks ran on the Gaussian-integer path
    std::int64_t claimed_z = 0;
    bool passed = false;            // complementary && z_min >= claimed_z
    Fraction optimality;            // z_min over the bound optimum, inferred alphabet
    bool binary_bound_exceeded = false; // binary set with z_min > floor(L/(2M))
};

/// Expands a verified (M,M,N) code into M sequences of length M^2*N.
/// Sequence k flattens the M x MN block matrix whose (i, j) block is
/// w_M^(i*j) times row k of set j. Output modulus is lcm(q, M)
/// (0 stays 0), which keeps binary/quadriphase inputs with M in {1,2,4} on
/// the exact arithmetic path. Throws InvalidCccError when the input fails
/// code verification.
std::vector<PhaseSequence> build_zcz_set(const CompleteComplementaryCode& code);

/// Measures the set against the three Golay-ZCZ conditions: complementarity
/// of the aperiodic autocorrelation sum, the periodic zero-autocorrelation
/// width, and the periodic zero-cross-correlation width (|tau| scanned via
/// both correlation orders). Widths scan from the origin and stop at the
/// first nonzero value. Throws LengthMismatchError on ragged input.
ZczReport verify_golay_zcz(const std::vector<PhaseSequence>& seqs,
                           std::int64_t claimed_z);

/// Z over the bound optimum: floor(L/M) for polyphase sets, floor(L/(2M))
/// for binary sets (conjectured bound). Negative measured widths clamp to 0.
Fraction optimality_factor(const ZczReport& report, Alphabet alphabet);

} // namespace gzcz
