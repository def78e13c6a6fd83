#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gzcz/phase_sequence.hpp"
#include "gzcz/sets.hpp"

namespace gzcz {

/// One correlation value. On the exact path (both operands with modulus in
/// {1, 2, 4}) re and im hold Gaussian integers and comparisons carry no
/// tolerance; otherwise they are double-precision sums.
struct ComplexValue {
    double re = 0.0;
    double im = 0.0;
    bool exact = false;

    std::complex<double> value() const { return {re, im}; }
    double magnitude() const { return std::abs(value()); }

    bool operator==(const ComplexValue&) const = default;
};

enum class ShiftRange {
    periodic,  // shifts 0 .. N-1, cyclic
    aperiodic, // shifts -(N-1) .. N-1
};

/// Zero threshold for float-path values: kZeroTolerancePerUnit times the
/// worst-case magnitude of the sum that produced the value.
inline constexpr double kZeroTolerancePerUnit = 1e-9;

/// A vector of correlation values indexed by shift tau.
class CorrelationProfile {
public:
    CorrelationProfile(ShiftRange range, std::size_t seq_length,
                       std::vector<ComplexValue> values, bool exact,
                       double peak_scale);

    ShiftRange range() const { return range_; }
    std::size_t seq_length() const { return length_; }
    bool exact() const { return exact_; }

    std::int64_t min_shift() const;
    std::int64_t max_shift() const { return static_cast<std::int64_t>(length_) - 1; }

    /// Value at shift tau. Periodic profiles reduce tau mod N; aperiodic
    /// profiles require |tau| <= N-1.
    const ComplexValue& at(std::int64_t tau) const;

    /// Like at(), but shifts outside the stored range read as zero
    /// (aperiodic correlations vanish for |tau| >= N).
    ComplexValue at_or_zero(std::int64_t tau) const;

    /// Exact path: true iff re == im == 0. Float path: both components
    /// within the scaled tolerance.
    bool zero_at(std::int64_t tau) const;

    bool equals(const CorrelationProfile& other) const;

    double zero_tolerance() const;

    /// tau-wise sum; operands must agree in range and length. Exactness and
    /// the tolerance scale accumulate.
    CorrelationProfile& operator+=(const CorrelationProfile& other);

private:
    ShiftRange range_;
    std::size_t length_;
    std::vector<ComplexValue> values_;
    bool exact_;
    double peak_scale_; // worst-case magnitude of the underlying sums
};

/// Periodic cross-correlation R_{a,b}(tau) = sum_k a_k * conj(b_{(k+tau) mod N})
/// over shifts 0 .. N-1. R_{a,a} is the periodic autocorrelation.
CorrelationProfile pccf(const PhaseSequence& a, const PhaseSequence& b);

/// Aperiodic cross-correlation over shifts -(N-1) .. N-1:
///   C_{a,b}(tau) = sum_{k=0}^{N-1-tau} a_k * conj(b_{k+tau})       tau >= 0
///   C_{a,b}(tau) = sum_{k=0}^{N-1+tau} a_{k-tau} * conj(b_k)       tau < 0
CorrelationProfile accf(const PhaseSequence& a, const PhaseSequence& b);

/// tau-wise sum of the rows' aperiodic autocorrelations. Equals M*N at
/// tau = 0; a set is complementary when every other shift sums to zero.
CorrelationProfile aacs_sum(const ComplementarySet& set);

/// tau-wise sum of accf(a.row(m), b.row(m)) across row indices. The code-level
/// cross-correlation sum of two sets with equal row counts.
CorrelationProfile accf_sum(const ComplementarySet& a, const ComplementarySet& b);

/// Fold an aperiodic profile into the periodic one of the same pair via
/// R(tau) = C(tau) + C(tau - N). Cross-check oracle for pccf.
CorrelationProfile periodic_from_aperiodic(const CorrelationProfile& aperiodic);

} // namespace gzcz
