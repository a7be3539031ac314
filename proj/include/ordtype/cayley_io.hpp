#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ordtype/finite_group.hpp"

namespace ordtype {

// Text format: the first line holds n, then n lines of n whitespace-separated
// indices in [0, n), row i listing x_i x_j. The identity is detected, not
// assumed. Tables up to kMaxFullCheckOrder are fully validated.
FiniteGroup read_cayley_table(std::istream& in, std::string label);
FiniteGroup ingest(const std::filesystem::path& path);

// Writes the exact format read_cayley_table accepts: single spaces, '\n'
// line ends, trailing newline.
void write_cayley_table(const FiniteGroup& g, std::ostream& out);
std::string to_cayley_text(const FiniteGroup& g);
void export_group(const FiniteGroup& g, const std::filesystem::path& path);

}  // namespace ordtype
