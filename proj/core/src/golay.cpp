#include "gzcz/golay.hpp"

namespace gzcz {

namespace {

bool profile_zero_off_peak(const CorrelationProfile& p) {
    for (std::int64_t tau = p.min_shift(); tau <= p.max_shift(); ++tau) {
        if (tau != 0 && !p.zero_at(tau)) {
            return false;
        }
    }
    return true;
}

bool profile_zero_everywhere(const CorrelationProfile& p) {
    for (std::int64_t tau = p.min_shift(); tau <= p.max_shift(); ++tau) {
        if (!p.zero_at(tau)) {
            return false;
        }
    }
    return true;
}

} // namespace

GolayPair::GolayPair(PhaseSequence a_in, PhaseSequence b_in)
    : a(std::move(a_in)), b(std::move(b_in)) {
    if (a.length() != b.length()) {
        throw LengthMismatchError("pair members must share a length");
    }
    if (a.modulus() != b.modulus()) {
        throw ModulusMismatchError("pair members must share a modulus");
    }
}

bool verify_gcp(const PhaseSequence& a, const PhaseSequence& b) {
    if (a.length() != b.length()) {
        throw LengthMismatchError("pair members must share a length");
    }
    CorrelationProfile sum = accf(a, a);
    sum += accf(b, b);
    return profile_zero_off_peak(sum);
}

bool verify_gcp(const GolayPair& pair) { return verify_gcp(pair.a, pair.b); }

GolayPair golay_mate(const GolayPair& pair) {
    return {reverse(conjugate(pair.b)), negate(reverse(conjugate(pair.a)))};
}

bool mate_property(const GolayPair& pair, const GolayPair& mate) {
    if (pair.length() != mate.length()) {
        throw LengthMismatchError("pair and mate must share a length");
    }
    CorrelationProfile sum = accf(pair.a, pair.b);
    sum += accf(mate.a, mate.b);
    return profile_zero_everywhere(sum);
}

std::pair<PhaseSequence, PhaseSequence> build_zcz_pair(const GolayPair& pair,
                                                       const GolayPair& mate,
                                                       const SignQuadruple& signs) {
    if (!signs.valid()) {
        throw SignConditionError("sign condition x1x2+x3x4 != 0");
    }
    if (pair.length() != mate.length()) {
        throw LengthMismatchError("pair and mate must share a length");
    }
    if (pair.modulus() != mate.modulus()) {
        throw ModulusMismatchError("pair and mate must share a modulus");
    }
    if (!verify_gcp(pair)) {
        throw MateError("input pair is not a Golay complementary pair");
    }
    if (!verify_gcp(mate)) {
        throw MateError("offered mate is not a Golay complementary pair");
    }
    if (!mate_property(pair, mate)) {
        throw MateError("mate cross-sum C_{a,b} + C_{c,d} does not vanish");
    }
    // R_{p,q} over the zone reduces to C_{a,c} + C_{b,d}; demand it vanishes.
    CorrelationProfile ortho = accf(pair.a, mate.a);
    ortho += accf(pair.b, mate.b);
    for (std::int64_t tau = ortho.min_shift(); tau <= ortho.max_shift(); ++tau) {
        if (!ortho.zero_at(tau)) {
            throw MateError("pairs are not mutually orthogonal: C_{a,c} + C_{b,d} != 0");
        }
    }
    const PhaseSequence p = concat({scale(pair.a, signs.x1), scale(pair.b, signs.x2),
                                    scale(pair.a, signs.x3), scale(pair.b, signs.x4)});
    const PhaseSequence q = concat({scale(mate.a, signs.x1), scale(mate.b, signs.x2),
                                    scale(mate.a, signs.x3), scale(mate.b, signs.x4)});
    return {p, q};
}

GolayPair double_pair(const GolayPair& pair) {
    return {concat({pair.a, pair.b}), concat({pair.a, negate(pair.b)})};
}

} // namespace gzcz
