#include "gzcz/zcz.hpp"

#include <cmath>
#include <numeric>

#include "gzcz/ccc.hpp"
#include "gzcz/errors.hpp"

namespace gzcz {

IdftMatrix::IdftMatrix(std::size_t order) : order_(order) {
    if (order_ < 1) {
        throw Error("matrix order must be >= 1");
    }
}

std::uint32_t IdftMatrix::exponent(std::size_t i, std::size_t j) const {
    return static_cast<std::uint32_t>((i * j) % order_);
}

std::complex<double> IdftMatrix::entry(std::size_t i, std::size_t j) const {
    return std::polar(1.0, 2.0 * M_PI * exponent(i, j) / static_cast<double>(order_));
}

Fraction::Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) {
        throw Error("fraction denominator must be nonzero");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::vector<PhaseSequence> build_zcz_set(const CompleteComplementaryCode& code) {
    if (!verify_ccc(code)) {
        throw InvalidCccError("input is not a complete complementary code");
    }
    const std::size_t m = code.set_count();
    const std::uint32_t q = code.modulus();
    const IdftMatrix idft(m);
    std::vector<PhaseSequence> out;
    out.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<PhaseSequence> blocks;
        blocks.reserve(m * m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const PhaseSequence& row = code.set(j).row(k);
                if (q >= 1) {
                    const auto lifted =
                        static_cast<std::uint32_t>(std::lcm<std::uint64_t>(q, m));
                    const std::uint32_t f_weight = lifted / static_cast<std::uint32_t>(m);
                    const std::uint32_t f_row = lifted / q;
                    std::vector<std::uint32_t> e;
                    e.reserve(row.length());
                    for (std::uint32_t x : row.exponents()) {
                        e.push_back((idft.exponent(i, j) * f_weight + x * f_row) % lifted);
                    }
                    blocks.emplace_back(lifted, std::move(e));
                } else {
                    std::vector<std::complex<double>> r;
                    r.reserve(row.length());
                    for (std::size_t c = 0; c < row.length(); ++c) {
                        r.push_back(idft.entry(i, j) * row.entry(c));
                    }
                    blocks.emplace_back(std::move(r));
                }
            }
        }
        out.push_back(concat(blocks));
    }
    return out;
}

ZczReport verify_golay_zcz(const std::vector<PhaseSequence>& seqs,
                           std::int64_t claimed_z) {
    if (seqs.empty()) {
        throw Error("cannot verify an empty sequence set");
    }
    const std::size_t len = seqs.front().length();
    const std::uint32_t q = seqs.front().modulus();
    for (const auto& s : seqs) {
        if (s.length() != len) {
            throw LengthMismatchError("set members must share a length");
        }
        if (s.modulus() != q) {
            throw ModulusMismatchError("set members must share a modulus");
        }
    }
    const std::size_t m = seqs.size();
    const auto max_tau = static_cast<std::int64_t>(len) - 1;

    ZczReport report;
    report.set_size = m;
    report.length = len;
    report.modulus = q;
    report.exact = exact_modulus(q);
    report.claimed_z = claimed_z;

    // C1: aperiodic autocorrelation sum vanishes off-peak.
    CorrelationProfile sum = accf(seqs[0], seqs[0]);
    for (std::size_t i = 1; i < m; ++i) {
        sum += accf(seqs[i], seqs[i]);
    }
    report.complementary = true;
    for (std::int64_t tau = 1; tau <= max_tau; ++tau) {
        if (!sum.zero_at(tau)) {
            report.complementary = false;
            break;
        }
    }

    // C2: widest prefix 1..Z with every periodic autocorrelation zero.
    std::vector<CorrelationProfile> pacf;
    pacf.reserve(m);
    for (const auto& s : seqs) {
        pacf.push_back(pccf(s, s));
    }
    report.measured_zacz = max_tau;
    for (std::int64_t tau = 1; tau <= max_tau; ++tau) {
        bool all_zero = true;
        for (const auto& p : pacf) {
            if (!p.zero_at(tau)) {
                all_zero = false;
                break;
            }
        }
        if (!all_zero) {
            report.measured_zacz = tau - 1;
            break;
        }
    }

    // C3: widest prefix 0..Z with every periodic cross-correlation zero; both
    // orders cover negative shifts through R_{i,j}(-tau) = conj(R_{j,i}(tau)).
    if (m == 1) {
        report.measured_zccz = max_tau;
    } else {
        std::vector<CorrelationProfile> cross;
        cross.reserve(m * m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (i != j) {
                    cross.push_back(pccf(seqs[i], seqs[j]));
                }
            }
        }
        report.measured_zccz = max_tau;
        for (std::int64_t tau = 0; tau <= max_tau; ++tau) {
            bool all_zero = true;
            for (const auto& p : cross) {
                if (!p.zero_at(tau)) {
                    all_zero = false;
                    break;
                }
            }
            if (!all_zero) {
                report.measured_zccz = tau - 1;
                break;
            }
        }
    }

    report.z_min = std::min(report.measured_zacz, report.measured_zccz);
    report.passed = report.complementary && report.z_min >= claimed_z;
    const Alphabet alphabet = (q == 2) ? Alphabet::binary : Alphabet::polyphase;
    report.optimality = optimality_factor(report, alphabet);
    if (q == 2) {
        const auto binary_opt =
            static_cast<std::int64_t>(len / (2 * m));
        report.binary_bound_exceeded = report.z_min > binary_opt;
    }
    return report;
}

Fraction optimality_factor(const ZczReport& report, Alphabet alphabet) {
    const auto l = static_cast<std::int64_t>(report.length);
    const auto m = static_cast<std::int64_t>(report.set_size);
    const std::int64_t z_opt =
        alphabet == Alphabet::binary ? l / (2 * m) : l / m;
    if (z_opt <= 0) {
        return {0, 1};
    }
    return {std::max<std::int64_t>(report.z_min, 0), z_opt};
}

} // namespace gzcz
