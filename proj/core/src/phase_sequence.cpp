#include "gzcz/phase_sequence.hpp"

#include <cmath>
#include <numeric>

namespace gzcz {

PhaseSequence::PhaseSequence(std::uint32_t modulus, std::vector<std::uint32_t> exponents)
    : modulus_(modulus), exponents_(std::move(exponents)) {
    if (modulus_ < 1) {
        throw Error("exponent form requires modulus >= 1");
    }
    if (exponents_.empty()) {
        throw Error("sequence length must be >= 1");
    }
    for (std::uint32_t e : exponents_) {
        if (e >= modulus_) {
            throw Error("phase exponent " + std::to_string(e) +
                        " out of range for modulus " + std::to_string(modulus_));
        }
    }
}

PhaseSequence::PhaseSequence(std::vector<std::complex<double>> entries)
    : modulus_(0), raw_(std::move(entries)) {
    if (raw_.empty()) {
        throw Error("sequence length must be >= 1");
    }
    for (const auto& z : raw_) {
        if (std::abs(std::abs(z) - 1.0) > 1e-12) {
            throw Error("raw entries must be unimodular");
        }
    }
}

std::size_t PhaseSequence::length() const {
    return exponent_form() ? exponents_.size() : raw_.size();
}

std::complex<double> PhaseSequence::entry(std::size_t k) const {
    if (!exponent_form()) {
        return raw_.at(k);
    }
    const double angle = 2.0 * M_PI * static_cast<double>(exponents_.at(k)) /
                         static_cast<double>(modulus_);
    return std::polar(1.0, angle);
}

PhaseSequence reverse(const PhaseSequence& s) {
    if (s.exponent_form()) {
        std::vector<std::uint32_t> e(s.exponents().rbegin(), s.exponents().rend());
        return {s.modulus(), std::move(e)};
    }
    std::vector<std::complex<double>> r(s.raw_entries().rbegin(), s.raw_entries().rend());
    return PhaseSequence{std::move(r)};
}

PhaseSequence conjugate(const PhaseSequence& s) {
    if (s.exponent_form()) {
        const std::uint32_t q = s.modulus();
        std::vector<std::uint32_t> e;
        e.reserve(s.length());
        for (std::uint32_t x : s.exponents()) {
            e.push_back((q - x) % q);
        }
        return {q, std::move(e)};
    }
    std::vector<std::complex<double>> r;
    r.reserve(s.length());
    for (const auto& z : s.raw_entries()) {
        r.push_back(std::conj(z));
    }
    return PhaseSequence{std::move(r)};
}

PhaseSequence negate(const PhaseSequence& s) {
    const std::uint32_t q = s.modulus();
    if (q >= 1 && q % 2 != 0) {
        throw OddModulusError("cannot negate over odd modulus " + std::to_string(q));
    }
    if (s.exponent_form()) {
        std::vector<std::uint32_t> e;
        e.reserve(s.length());
        for (std::uint32_t x : s.exponents()) {
            e.push_back((x + q / 2) % q);
        }
        return {q, std::move(e)};
    }
    std::vector<std::complex<double>> r;
    r.reserve(s.length());
    for (const auto& z : s.raw_entries()) {
        r.push_back(-z);
    }
    return PhaseSequence{std::move(r)};
}

PhaseSequence scale(const PhaseSequence& s, int sign) {
    if (sign == 1) {
        return s;
    }
    if (sign == -1) {
        return negate(s);
    }
    throw Error("scale sign must be +1 or -1");
}

PhaseSequence concat(std::span<const PhaseSequence> parts) {
    if (parts.empty()) {
        throw Error("concat requires at least one part");
    }
    const std::uint32_t q = parts.front().modulus();
    for (const auto& p : parts) {
        if (p.modulus() != q) {
            throw ModulusMismatchError("concat parts must share a modulus");
        }
    }
    if (q >= 1) {
        std::vector<std::uint32_t> e;
        for (const auto& p : parts) {
            e.insert(e.end(), p.exponents().begin(), p.exponents().end());
        }
        return {q, std::move(e)};
    }
    std::vector<std::complex<double>> r;
    for (const auto& p : parts) {
        r.insert(r.end(), p.raw_entries().begin(), p.raw_entries().end());
    }
    return PhaseSequence{std::move(r)};
}

PhaseSequence concat(std::initializer_list<PhaseSequence> parts) {
    return concat(std::span<const PhaseSequence>(parts.begin(), parts.size()));
}

PhaseSequence kronecker(const PhaseSequence& x, const PhaseSequence& y) {
    const std::uint32_t qx = x.modulus();
    const std::uint32_t qy = y.modulus();
    if (qx >= 1 && qy >= 1) {
        // product of a qx-th and a qy-th root of unity is an lcm-th root
        const std::uint32_t q = std::lcm(qx, qy);
        std::vector<std::uint32_t> e;
        e.reserve(x.length() * y.length());
        const std::uint32_t fx = q / qx;
        const std::uint32_t fy = q / qy;
        for (std::uint32_t ex : x.exponents()) {
            for (std::uint32_t ey : y.exponents()) {
                e.push_back((ex * fx + ey * fy) % q);
            }
        }
        return {q, std::move(e)};
    }
    std::vector<std::complex<double>> r;
    r.reserve(x.length() * y.length());
    for (std::size_t k1 = 0; k1 < x.length(); ++k1) {
        for (std::size_t k2 = 0; k2 < y.length(); ++k2) {
            r.push_back(x.entry(k1) * y.entry(k2));
        }
    }
    return PhaseSequence{std::move(r)};
}

} // namespace gzcz
