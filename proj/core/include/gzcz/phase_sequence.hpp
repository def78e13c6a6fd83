#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "gzcz/errors.hpp"

namespace gzcz {

/// A unimodular sequence stored either as phase exponents of a q-th root of
/// unity (modulus q >= 1, entry k is w_q^e[k] with w_q = exp(2*pi*i/q)) or as
/// raw unit-magnitude complex entries (modulus 0). Binary sequences are q == 2,
/// quadriphase q == 4. Immutable after construction.
class PhaseSequence {
public:
    /// Exponent form, q >= 1. Every exponent must lie in [0, q).
    PhaseSequence(std::uint32_t modulus, std::vector<std::uint32_t> exponents);

    /// Raw form (q == 0). Every entry must have magnitude within 1e-12 of 1.
    explicit PhaseSequence(std::vector<std::complex<double>> entries);

    std::uint32_t modulus() const { return modulus_; }
    std::size_t length() const;
    bool exponent_form() const { return modulus_ >= 1; }

    /// Valid only in exponent form.
    std::span<const std::uint32_t> exponents() const { return exponents_; }
    /// Valid only in raw form.
    std::span<const std::complex<double>> raw_entries() const { return raw_; }

    /// Numeric value of entry k, whichever the storage form.
    std::complex<double> entry(std::size_t k) const;

    bool operator==(const PhaseSequence&) const = default;

private:
    std::uint32_t modulus_ = 0;
    std::vector<std::uint32_t> exponents_;
    std::vector<std::complex<double>> raw_;
};

/// Entry k of the result equals entry N-1-k of the input. Involution.
PhaseSequence reverse(const PhaseSequence& s);

/// Entry-wise complex conjugate; exponent e maps to (q - e) mod q.
PhaseSequence conjugate(const PhaseSequence& s);

/// Entry-wise negation; exponent e maps to (e + q/2) mod q.
/// Throws OddModulusError for odd q >= 1 (-1 is not a q-th root of unity).
PhaseSequence negate(const PhaseSequence& s);

/// Multiply by a sign in {+1, -1}. sign == -1 negates, +1 is the identity.
PhaseSequence scale(const PhaseSequence& s, int sign);

/// Concatenation in order. All parts must share the modulus.
PhaseSequence concat(std::span<const PhaseSequence> parts);
PhaseSequence concat(std::initializer_list<PhaseSequence> parts);

/// Kronecker product: out[k1*N2 + k2] = x[k1] * y[k2]. The output modulus is
/// lcm(qx, qy), or 0 if either factor is raw.
PhaseSequence kronecker(const PhaseSequence& x, const PhaseSequence& y);

/// True when correlation values over this modulus are Gaussian integers and
/// the exact arithmetic path applies (q in {1, 2, 4}).
constexpr bool exact_modulus(std::uint32_t q) {
    return q == 1 || q == 2 || q == 4;
}

} // namespace gzcz
