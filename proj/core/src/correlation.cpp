#include "gzcz/correlation.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

namespace gzcz {

namespace {

void check_compatible(const PhaseSequence& a, const PhaseSequence& b) {
    if (a.length() != b.length()) {
        throw LengthMismatchError("correlation operands must share a length");
    }
    if (a.modulus() != b.modulus()) {
        throw ModulusMismatchError("correlation operands must share a modulus");
    }
}

// Gaussian units w_q^r for q in {1, 2, 4}, tallied as integer counts per
// residue. counts[r] is how often the phase difference r occurred.
ComplexValue from_residue_counts(std::uint32_t q, const std::array<std::int64_t, 4>& c) {
    std::int64_t re = 0;
    std::int64_t im = 0;
    switch (q) {
        case 1: re = c[0]; break;
        case 2: re = c[0] - c[1]; break;
        default: re = c[0] - c[2]; im = c[1] - c[3]; break; // q == 4
    }
    return {static_cast<double>(re), static_cast<double>(im), true};
}

std::vector<std::complex<double>> root_table(std::uint32_t q) {
    std::vector<std::complex<double>> roots(q);
    for (std::uint32_t e = 0; e < q; ++e) {
        roots[e] = std::polar(1.0, 2.0 * M_PI * e / q);
    }
    return roots;
}

// One correlation value: sum over k in [k0, k0+n) of a_k * conj(b_{index(k)}).
template <typename IndexFn>
ComplexValue correlate_window(const PhaseSequence& a, const PhaseSequence& b,
                              std::size_t k0, std::size_t n, IndexFn index,
                              const std::vector<std::complex<double>>* roots) {
    const std::uint32_t q = a.modulus();
    if (exact_modulus(q)) {
        std::array<std::int64_t, 4> counts{};
        const auto ea = a.exponents();
        const auto eb = b.exponents();
        for (std::size_t k = k0; k < k0 + n; ++k) {
            counts[(ea[k] + q - eb[index(k)]) % q] += 1;
        }
        return from_residue_counts(q, counts);
    }
    std::complex<double> acc{0.0, 0.0};
    if (q >= 1) {
        const auto ea = a.exponents();
        const auto eb = b.exponents();
        for (std::size_t k = k0; k < k0 + n; ++k) {
            acc += (*roots)[(ea[k] + q - eb[index(k)]) % q];
        }
    } else {
        const auto ra = a.raw_entries();
        const auto rb = b.raw_entries();
        for (std::size_t k = k0; k < k0 + n; ++k) {
            acc += ra[k] * std::conj(rb[index(k)]);
        }
    }
    return {acc.real(), acc.imag(), false};
}

} // namespace

CorrelationProfile::CorrelationProfile(ShiftRange range, std::size_t seq_length,
                                       std::vector<ComplexValue> values, bool exact,
                                       double peak_scale)
    : range_(range), length_(seq_length), values_(std::move(values)), exact_(exact),
      peak_scale_(peak_scale) {}

std::int64_t CorrelationProfile::min_shift() const {
    return range_ == ShiftRange::periodic ? 0 : -(static_cast<std::int64_t>(length_) - 1);
}

const ComplexValue& CorrelationProfile::at(std::int64_t tau) const {
    const auto n = static_cast<std::int64_t>(length_);
    if (range_ == ShiftRange::periodic) {
        std::int64_t r = tau % n;
        if (r < 0) r += n;
        return values_[static_cast<std::size_t>(r)];
    }
    if (tau < -(n - 1) || tau > n - 1) {
        throw Error("aperiodic shift out of range");
    }
    return values_[static_cast<std::size_t>(tau + n - 1)];
}

ComplexValue CorrelationProfile::at_or_zero(std::int64_t tau) const {
    const auto n = static_cast<std::int64_t>(length_);
    if (range_ == ShiftRange::aperiodic && (tau < -(n - 1) || tau > n - 1)) {
        return ComplexValue{0.0, 0.0, exact_};
    }
    return at(tau);
}

double CorrelationProfile::zero_tolerance() const {
    return kZeroTolerancePerUnit * peak_scale_;
}

bool CorrelationProfile::zero_at(std::int64_t tau) const {
    const ComplexValue& v = at(tau);
    if (exact_) {
        return v.re == 0.0 && v.im == 0.0;
    }
    const double eps = zero_tolerance();
    return std::abs(v.re) <= eps && std::abs(v.im) <= eps;
}

bool CorrelationProfile::equals(const CorrelationProfile& other) const {
    if (range_ != other.range_ || length_ != other.length_) {
        return false;
    }
    if (exact_ && other.exact_) {
        return values_ == other.values_;
    }
    const double eps = std::max(zero_tolerance(), other.zero_tolerance());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (std::abs(values_[i].re - other.values_[i].re) > eps ||
            std::abs(values_[i].im - other.values_[i].im) > eps) {
            return false;
        }
    }
    return true;
}

CorrelationProfile& CorrelationProfile::operator+=(const CorrelationProfile& other) {
    if (range_ != other.range_ || length_ != other.length_) {
        throw LengthMismatchError("profiles to be summed must agree in shape");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        values_[i].re += other.values_[i].re;
        values_[i].im += other.values_[i].im;
        values_[i].exact = values_[i].exact && other.values_[i].exact;
    }
    exact_ = exact_ && other.exact_;
    peak_scale_ += other.peak_scale_;
    return *this;
}

CorrelationProfile pccf(const PhaseSequence& a, const PhaseSequence& b) {
    check_compatible(a, b);
    const std::size_t n = a.length();
    const std::uint32_t q = a.modulus();
    std::vector<std::complex<double>> roots;
    if (q >= 1 && !exact_modulus(q)) {
        roots = root_table(q);
    }
    std::vector<ComplexValue> values;
    values.reserve(n);
    for (std::size_t tau = 0; tau < n; ++tau) {
        values.push_back(correlate_window(
            a, b, 0, n, [&](std::size_t k) { return (k + tau) % n; }, &roots));
    }
    return {ShiftRange::periodic, n, std::move(values), exact_modulus(q),
            static_cast<double>(n)};
}

CorrelationProfile accf(const PhaseSequence& a, const PhaseSequence& b) {
    check_compatible(a, b);
    const std::size_t n = a.length();
    const std::uint32_t q = a.modulus();
    std::vector<std::complex<double>> roots;
    if (q >= 1 && !exact_modulus(q)) {
        roots = root_table(q);
    }
    std::vector<ComplexValue> values;
    values.reserve(2 * n - 1);
    for (std::int64_t tau = -(static_cast<std::int64_t>(n) - 1);
         tau <= static_cast<std::int64_t>(n) - 1; ++tau) {
        if (tau >= 0) {
            const auto t = static_cast<std::size_t>(tau);
            values.push_back(correlate_window(
                a, b, 0, n - t, [&](std::size_t k) { return k + t; }, &roots));
        } else {
            const auto t = static_cast<std::size_t>(-tau);
            values.push_back(correlate_window(
                a, b, t, n - t, [&](std::size_t k) { return k - t; }, &roots));
        }
    }
    return {ShiftRange::aperiodic, n, std::move(values), exact_modulus(q),
            static_cast<double>(n)};
}

CorrelationProfile aacs_sum(const ComplementarySet& set) {
    CorrelationProfile sum = accf(set.row(0), set.row(0));
    for (std::size_t m = 1; m < set.set_size(); ++m) {
        sum += accf(set.row(m), set.row(m));
    }
    return sum;
}

CorrelationProfile accf_sum(const ComplementarySet& a, const ComplementarySet& b) {
    if (a.set_size() != b.set_size()) {
        throw ShapeError("cross-correlation sum needs equal row counts");
    }
    CorrelationProfile sum = accf(a.row(0), b.row(0));
    for (std::size_t m = 1; m < a.set_size(); ++m) {
        sum += accf(a.row(m), b.row(m));
    }
    return sum;
}

CorrelationProfile periodic_from_aperiodic(const CorrelationProfile& aperiodic) {
    if (aperiodic.range() != ShiftRange::aperiodic) {
        throw Error("periodic_from_aperiodic expects an aperiodic profile");
    }
    const auto n = static_cast<std::int64_t>(aperiodic.seq_length());
    std::vector<ComplexValue> values;
    values.reserve(static_cast<std::size_t>(n));
    for (std::int64_t tau = 0; tau < n; ++tau) {
        const ComplexValue c0 = aperiodic.at_or_zero(tau);
        const ComplexValue c1 = aperiodic.at_or_zero(tau - n);
        values.push_back({c0.re + c1.re, c0.im + c1.im, aperiodic.exact()});
    }
    return {ShiftRange::periodic, static_cast<std::size_t>(n), std::move(values),
            aperiodic.exact(), static_cast<double>(n)};
}

} // namespace gzcz
