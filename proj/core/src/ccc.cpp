#include "gzcz/ccc.hpp"

#include <set>

#include "gzcz/correlation.hpp"

namespace gzcz {

namespace {

void check_square(const CompleteComplementaryCode& code) {
    if (!code.square()) {
        throw ShapeError("code is not square: " + std::to_string(code.set_count()) +
                         " sets of " + std::to_string(code.rows_per_set()) + " rows");
    }
}

} // namespace

bool verify_ccc(const CompleteComplementaryCode& code) {
    check_square(code);
    const std::size_t m = code.set_count();
    const double peak = static_cast<double>(m) * static_cast<double>(code.length());
    for (std::size_t k1 = 0; k1 < m; ++k1) {
        for (std::size_t k2 = 0; k2 < m; ++k2) {
            const CorrelationProfile sum = accf_sum(code.set(k1), code.set(k2));
            for (std::int64_t tau = sum.min_shift(); tau <= sum.max_shift(); ++tau) {
                if (k1 == k2 && tau == 0) {
                    const ComplexValue& v = sum.at(0);
                    if (sum.exact()) {
                        if (v.re != peak || v.im != 0.0) return false;
                    } else if (std::abs(v.re - peak) > sum.zero_tolerance() ||
                               std::abs(v.im) > sum.zero_tolerance()) {
                        return false;
                    }
                } else if (!sum.zero_at(tau)) {
                    return false;
                }
            }
        }
    }
    return true;
}

CompleteComplementaryCode transpose_ccc(const CompleteComplementaryCode& code) {
    check_square(code);
    const std::size_t m = code.set_count();
    std::vector<ComplementarySet> sets;
    sets.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<PhaseSequence> rows;
        rows.reserve(m);
        for (std::size_t k = 0; k < m; ++k) {
            rows.push_back(code.set(k).row(i));
        }
        sets.emplace_back(std::move(rows));
    }
    return CompleteComplementaryCode{std::move(sets)};
}

CompleteComplementaryCode kronecker_ccc(const CompleteComplementaryCode& first,
                                        const CompleteComplementaryCode& second) {
    check_square(first);
    check_square(second);
    if (first.set_count() != second.set_count()) {
        throw SetSizeMismatchError("codes to be composed must share a set size");
    }
    const std::size_t m = first.set_count();
    std::vector<ComplementarySet> sets;
    sets.reserve(m);
    for (std::size_t sm = 0; sm < m; ++sm) {
        std::vector<PhaseSequence> rows;
        rows.reserve(m);
        for (std::size_t l = 0; l < m; ++l) {
            std::vector<PhaseSequence> blocks;
            blocks.reserve(m);
            for (std::size_t j = 0; j < m; ++j) {
                blocks.push_back(kronecker(first.set(sm).row(j), second.set(l).row(j)));
            }
            rows.push_back(concat(blocks));
        }
        sets.emplace_back(std::move(rows));
    }
    return CompleteComplementaryCode{std::move(sets)};
}

CompleteComplementaryCode ccc_from_gcp(const GolayPair& pair, const GolayPair& mate) {
    if (!mate_property(pair, mate)) {
        throw MateError("mate cross-sum C_{a,b} + C_{c,d} does not vanish");
    }
    std::vector<ComplementarySet> sets;
    sets.emplace_back(std::vector<PhaseSequence>{pair.a, pair.b});
    sets.emplace_back(std::vector<PhaseSequence>{mate.a, mate.b});
    CompleteComplementaryCode code{std::move(sets)};
    if (!verify_ccc(code)) {
        throw MateError("pair and offered mate do not form a complete complementary code");
    }
    return code;
}

std::vector<std::int64_t> reachable_lengths(std::int64_t bound) {
    static const std::int64_t base[] = {3, 4, 5, 7, 11, 13};
    std::set<std::int64_t> reached;
    for (std::int64_t b : base) {
        if (b <= bound) reached.insert(b);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::int64_t> snapshot(reached.begin(), reached.end());
        for (std::int64_t n1 : snapshot) {
            for (std::int64_t n2 : snapshot) {
                if (n2 > bound / (4 * n1)) continue; // 4*n1*n2 would exceed bound
                grew |= reached.insert(4 * n1 * n2).second;
            }
        }
    }
    return {reached.begin(), reached.end()};
}

const std::vector<std::int64_t>& reference_lengths() {
    static const std::vector<std::int64_t> lengths = {
        12,  13,  20,  24,  28,  36,  40,  44,  48,  52,  56,  60,  72,  80, 84,
        88,  96,  112, 120, 132, 140, 144, 156, 160, 168, 176, 192, 196, 200};
    return lengths;
}

} // namespace gzcz
