#pragma once

#include <iosfwd>
#include <string>

#include "gzcz/correlation.hpp"
#include "gzcz/sets.hpp"

namespace gzcz::io {

// Sequence-set text format:
//
//   GZCZ 1
//   q <modulus>
//   M <rows>
//   N <length>
//   <M rows of N space-separated phase exponents>           q >= 1
//   <M rows of N space-separated re,im pairs>               q == 0
//
// A code file carries "SET <k>" lines instead of bare rows, k = 0..M-1 in
// order, each followed by M rows. parse(serialize(x)) == x on valid input.

std::string serialize_set(const ComplementarySet& set);
std::string serialize_code(const CompleteComplementaryCode& code);

ComplementarySet parse_set(std::istream& in);
CompleteComplementaryCode parse_code(std::istream& in);

/// True when the stream holds a code file (has SET blocks). Leaves the
/// stream positioned at the start.
bool looks_like_code(std::istream& in);

ComplementarySet read_set_file(const std::string& path);
CompleteComplementaryCode read_code_file(const std::string& path);
void write_set_file(const std::string& path, const ComplementarySet& set);
void write_code_file(const std::string& path, const CompleteComplementaryCode& code);

/// Correlation CSV: header "tau,real,imag,magnitude", one row per shift.
/// Exact profiles print real/imag as integers; float profiles use 12-decimal
/// fixed point. Magnitude is always 12-decimal fixed point.
std::string profile_csv(const CorrelationProfile& profile);
void write_profile_csv(const std::string& path, const CorrelationProfile& profile);

} // namespace gzcz::io
