#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gzcz/sets.hpp"

namespace gzcz {

/// Stable identifiers of the built-in seed codes:
/// table3-N3, table3-N5, table3-N7, table3-N11, table3-N13, example3-N4.
std::vector<std::string> seed_names();

/// The binary (4,4,N) code registered under the given name. Every returned
/// code has been re-verified against the code contract; a verification
/// failure would mean corrupted registry data and is fatal.
/// Throws UnknownSeedError for names outside seed_names().
CompleteComplementaryCode seed_registry(std::string_view name);

} // namespace gzcz
