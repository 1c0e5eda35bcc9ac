#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgeom/sigma_space.hpp"

namespace tgeom {

// σ-table text format, line oriented:
//
//   # comment
//   points: A B C
//   tolerance: 1e-9          (optional)
//   sigma: A B 1
//   sigma: B C 0.5
//
// A table that lists every ordered pair is read as given (and may be
// asymmetric). Otherwise missing (Q,P) lines are mirrored from (P,Q), and any
// pair listed in both orders must agree within the tolerance.
struct TableDocument {
  std::vector<std::string> labels;
  std::optional<double> tolerance;
  std::vector<SigmaEntry> entries;
  std::vector<std::size_t> entry_lines;  // 1-based, parallel to `entries`
};

// Syntax and structure (unknown directives, bad numbers, unknown labels,
// duplicate or conflicting entries, missing pairs). Throws ParseError. Value
// checks (diagonal, finiteness) are left to build_space.
TableDocument parse_table_document(std::istream& in);

// Throws Error(kNonzeroDiagonal / kNonFiniteValue) for invalid values.
SigmaSpace build_space(const TableDocument& doc,
                       std::optional<double> tolerance_override = std::nullopt);

SigmaSpace read_sigma_table(std::istream& in);
SigmaSpace read_sigma_table(std::string_view text);
SigmaSpace read_sigma_file(const std::filesystem::path& path);

// Canonical form: one line per unordered pair when σ is exactly symmetric,
// one line per ordered pair otherwise. Values use the shortest decimal that
// round-trips, so parse(write(space)) reproduces every σ bit for bit.
void write_sigma_table(std::ostream& out, const SigmaSpace& space);
std::string write_sigma_table(const SigmaSpace& space);
void write_sigma_file(const std::filesystem::path& path, const SigmaSpace& space);

// Shortest round-trip decimal.
std::string format_real(double value);
std::optional<double> parse_real(std::string_view text);

}  // namespace tgeom
