#pragma once

// Sequence file v1:
//
//   # zerosum v1 r=<r> s=<s> n=<n>
//   <body>
//
// The body is either whitespace-separated signed decimal values, each -r or s,
// or a single token b:<bitstring> with 0 for -r and 1 for +s. An n = 0 file has
// no body.

#include <iosfwd>
#include <string>
#include <string_view>

#include "zerosum/core.hpp"

namespace zerosum {

inline constexpr const char* kToolVersion = "1.0.0";

enum class BodyEncoding { Values, Bits };

void write_sequence(std::ostream& os, const SignSeq& seq, BodyEncoding encoding = BodyEncoding::Values);
std::string format_sequence(const SignSeq& seq, BodyEncoding encoding = BodyEncoding::Values);

/// Throws InputError on any deviation from the format.
SignSeq parse_sequence(std::string_view text);

SignSeq read_sequence_file(const std::string& path);
void write_sequence_file(const std::string& path, const SignSeq& seq, BodyEncoding encoding = BodyEncoding::Values);

}  // namespace zerosum
