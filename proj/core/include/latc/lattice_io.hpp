#pragma once

#include <iosfwd>
#include <string>

#include "latc/lattice.hpp"

namespace latc {

// "latgram v1" text format:
//
//   latgram 1 n=<n>
//   <n lines of n rationals p/q>      Gram matrix
//   ambient d=<d>                     optional
//   <d lines of n rationals>          basis vectors as columns
//
// Blank lines and lines starting with '#' are ignored. Non-symmetric and
// non-positive-definite Gram matrices are reported with distinct errors.
Lattice read_latgram(std::istream& in);
void write_latgram(std::ostream& out, const Lattice& l);

Lattice load_latgram(const std::string& path);
void save_latgram(const std::string& path, const Lattice& l);

// Whitespace-separated rationals on one line.
RatVector parse_rational_row(const std::string& line);
std::string format_row(std::span<const Rational> row);
std::string format_row(std::span<const Integer> row);

}  // namespace latc
