#include "ordtype/cayley_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "ordtype/errors.hpp"

namespace ordtype {

namespace {

std::vector<std::uint64_t> parse_line(const std::string& line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  for (;;) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::uint64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
      throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer");
    }
    out.push_back(v);
    p = next;
  }
  return out;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

FiniteGroup read_cayley_table(std::istream& in, std::string label) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty input");
  ++line_no;
  const auto header = parse_line(line, line_no);
  if (header.size() != 1) throw ParseError("line 1: expected the table size n");
  const auto n = header.front();
  if (n == 0) throw ParseError("table size must be positive");
  if (n > kMaxFullCheckOrder) {
    throw ParseError("table size " + std::to_string(n) + " exceeds the ingestion limit of " +
                     std::to_string(kMaxFullCheckOrder));
  }
  std::vector<ElementId> table;
  table.reserve(n * n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(i));
    }
    ++line_no;
    const auto row = parse_line(line, line_no);
    if (row.size() != n) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                       " entries, found " + std::to_string(row.size()));
    }
    for (auto v : row) {
      if (v >= n) throw ParseError("line " + std::to_string(line_no) + ": entry " + std::to_string(v) + " out of range");
      table.push_back(static_cast<ElementId>(v));
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) throw ParseError("line " + std::to_string(line_no) + ": unexpected content after the table");
  }
  return FiniteGroup::from_cayley_table(std::move(table), n, std::move(label), CheckLevel::full);
}

FiniteGroup ingest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_cayley_table(in, "file(\"" + path.string() + "\")");
}

void write_cayley_table(const FiniteGroup& g, std::ostream& out) {
  const auto n = g.size();
  out << n << '\n';
  for (ElementId i = 0; i < n; ++i) {
    const auto r = g.row(i);
    for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << r[j];
    out << '\n';
  }
}

std::string to_cayley_text(const FiniteGroup& g) {
  std::ostringstream os;
  write_cayley_table(g, os);
  return os.str();
}

void export_group(const FiniteGroup& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  write_cayley_table(g, out);
  if (!out) throw ParseError("write failed for " + path.string());
}

}  // namespace ordtype
