#pragma once

#include <random>
#include <vector>

#include "gzcz/golay.hpp"
#include "gzcz/phase_sequence.hpp"

namespace gzcz::test {

/// Binary sequence from +-1 signs.
inline PhaseSequence binary(std::initializer_list<int> signs) {
    std::vector<std::uint32_t> e;
    e.reserve(signs.size());
    for (int s : signs) {
        e.push_back(s == 1 ? 0u : 1u);
    }
    return {2, std::move(e)};
}

/// Quadriphase sequence from exponents of i.
inline PhaseSequence quad(std::initializer_list<std::uint32_t> exps) {
    return {4, std::vector<std::uint32_t>(exps)};
}

/// The classical length-10 binary Golay pair used across the suites.
inline GolayPair length10_pair() {
    return {binary({1, 1, -1, 1, 1, 1, 1, 1, -1, -1}),
            binary({1, 1, -1, 1, -1, 1, -1, -1, 1, 1})};
}

/// Quadriphase length-5 Golay pair: a = (1,i,-i,-1,i), b = (1,1,1,i,-i).
inline GolayPair length5_quad_pair() {
    return {quad({0, 1, 3, 2, 1}), quad({0, 0, 0, 1, 3})};
}

inline PhaseSequence random_sequence(std::mt19937& rng, std::uint32_t q, std::size_t n) {
    std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
    std::vector<std::uint32_t> e(n);
    for (auto& x : e) {
        x = dist(rng);
    }
    return {q, std::move(e)};
}

} // namespace gzcz::test
