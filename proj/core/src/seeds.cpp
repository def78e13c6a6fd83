#include "gzcz/seeds.hpp"

#include <array>
#include <map>

#include "gzcz/ccc.hpp"
#include "gzcz/errors.hpp"

namespace gzcz {

namespace {

// Each seed is 4 sets of 4 rows; a row is a string of phase exponents of -1.
using SeedData = std::array<std::array<const char*, 4>, 4>;

const std::map<std::string, SeedData, std::less<>>& seed_table() {
    static const std::map<std::string, SeedData, std::less<>> table = {
        {"table3-N3",
         {{{{"000", "001", "001", "010"}},
           {{"010", "001", "110", "111"}},
           {{"011", "000", "101", "100"}},
           {{"011", "010", "000", "011"}}}}},
        {"table3-N5",
         {{{{"00001", "01100", "01000", "01011"}},
           {{"00010", "00101", "01111", "00110"}},
           {{"00101", "11101", "00110", "10000"}},
           {{"01100", "11110", "01011", "10111"}}}}},
        {"table3-N7",
         {{{{"0000001", "0011010", "0011010", "0100011"}},
           {{"0011101", "0011010", "1100101", "1000000"}},
           {{"0101100", "0100011", "1111110", "1010011"}},
           {{"0101100", "0111111", "0011101", "0101100"}}}}},
        {"table3-N11",
         {{{{"01110110110", "00111000101", "00011010100", "00000001101"}},
           {{"00011010100", "00000001101", "10001001001", "11000111010"}},
           {{"10110000000", "11010100111", "10100011100", "10010010001"}},
           {{"01011100011", "01101101110", "10110000000", "11010100111"}}}}},
        {"table3-N13",
         {{{{"0111011010100", "0011101001101", "0001100001001", "0000000111010"}},
           {{"0001100001001", "0000000111010", "1000100101011", "1100010110010"}},
           {{"0101110000000", "0110111100111", "1011001011100", "1101010010001"}},
           {{"0100110100011", "0010101101110", "0101110000000", "0110111100111"}}}}},
        {"example3-N4",
         {{{{"0000", "0011", "1010", "1001"}},
           {{"1100", "1111", "0110", "0101"}},
           {{"1010", "1001", "0000", "0011"}},
           {{"0110", "0101", "1100", "1111"}}}}},
    };
    return table;
}

PhaseSequence decode_row(const char* digits) {
    std::vector<std::uint32_t> e;
    for (const char* p = digits; *p; ++p) {
        if (*p != '0' && *p != '1') {
            throw Error("registry rows must be binary exponent strings");
        }
        e.push_back(static_cast<std::uint32_t>(*p - '0'));
    }
    return {2, std::move(e)};
}

} // namespace

std::vector<std::string> seed_names() {
    std::vector<std::string> names;
    names.reserve(seed_table().size());
    for (const auto& [name, data] : seed_table()) {
        names.push_back(name);
    }
    return names;
}

CompleteComplementaryCode seed_registry(std::string_view name) {
    const auto it = seed_table().find(name);
    if (it == seed_table().end()) {
        throw UnknownSeedError("unknown seed identifier: " + std::string(name));
    }
    std::vector<ComplementarySet> sets;
    sets.reserve(4);
    for (const auto& set_rows : it->second) {
        std::vector<PhaseSequence> rows;
        rows.reserve(4);
        for (const char* row : set_rows) {
            rows.push_back(decode_row(row));
        }
        sets.emplace_back(std::move(rows));
    }
    CompleteComplementaryCode code{std::move(sets)};
    if (!verify_ccc(code)) {
        // baked-in data failed its own contract; refuse to hand it out
        throw Error("fatal: registry seed " + std::string(name) +
                    " fails code verification");
    }
    return code;
}

} // namespace gzcz
