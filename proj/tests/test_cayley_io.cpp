#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "ordtype/cayley_io.hpp"
#include "ordtype/constructors.hpp"
#include "ordtype/corpus.hpp"
#include "ordtype/errors.hpp"
#include "ordtype/group_expr.hpp"
#include "ordtype/order_stats.hpp"

using namespace ordtype;

namespace {

FiniteGroup read_text(const std::string& text) {
  std::istringstream in(text);
  return read_cayley_table(in, "test");
}

std::string table_text(std::size_t n, const std::vector<ElementId>& t) {
  std::ostringstream out;
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << t[i * n + j];
    out << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("write format") {
  CHECK(to_cayley_text(cyclic(1)) == "1\n0\n");
  CHECK(to_cayley_text(cyclic(3)) == "3\n0 1 2\n1 2 0\n2 0 1\n");
}

TEST_CASE("read accepts flexible whitespace") {
  const auto g = read_text("3\n 2 0 1 \n0\t1 2\n1 2 0\n\n\n");
  CHECK(g.order() == 3);
  CHECK(g.identity() == 1);
  CHECK(g.label() == "test");
}

TEST_CASE("round trip is bit-identical") {
  const auto corpus = builtin_corpus(64);
  for (std::size_t i = 0; i < corpus.size(); i += 7) {
    const auto g = eval_expr(corpus[i]);
    CAPTURE(g.label());
    const auto text = to_cayley_text(g);
    const auto back = read_text(text);
    CHECK(to_cayley_text(back) == text);
    CHECK(std::equal(back.table().begin(), back.table().end(), g.table().begin(), g.table().end()));
  }
}

TEST_CASE("export and ingest through files") {
  const auto path = std::filesystem::temp_directory_path() / "ordtype_io_sym3.txt";
  const auto s3 = symmetric(3);
  export_group(s3, path);
  const auto g = ingest(path);
  CHECK(order_spectrum(g).counts == order_spectrum(s3).counts);
  CHECK(g.label() == "file(\"" + path.string() + "\")");
  std::ifstream in(path, std::ios::binary);
  std::ostringstream bytes;
  bytes << in.rdbuf();
  CHECK(bytes.str() == to_cayley_text(s3));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(ingest(path), ParseError);
}

TEST_CASE("shuffled A_5 ingests with its type") {
  std::mt19937 rng(60);
  const auto a5 = alternating(5);
  const auto g = read_text(table_text(60, oracle::shuffled_table(a5, rng)));
  CHECK(same_order_type(order_spectrum(g)) == SameOrderType{{1, 15, 20, 24}});
}

TEST_CASE("parse errors") {
  const auto s3 = symmetric(3);
  auto full = to_cayley_text(s3);
  auto five_rows = full.substr(0, full.rfind('\n', full.size() - 2) + 1);
  CHECK_THROWS_AS(read_text(five_rows), ParseError);
  CHECK_THROWS_AS(read_text(""), ParseError);
  CHECK_THROWS_AS(read_text("0\n"), ParseError);
  CHECK_THROWS_AS(read_text("-2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(read_text("two\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(read_text("2\n0 1\n1\n"), ParseError);
  CHECK_THROWS_AS(read_text("2\n0 1 0\n1 0\n"), ParseError);
  CHECK_THROWS_AS(read_text("2\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(read_text("2\n0 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(read_text("2\n0 1\n1 0\n1 0\n"), ParseError);
  CHECK_THROWS_AS(read_text("2 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(read_text("1025\n"), ParseError);
}

TEST_CASE("ingest rejects non-groups") {
  const auto s3 = symmetric(3);
  std::vector<ElementId> t(s3.table().begin(), s3.table().end());
  t[1 * 6 + 2] = t[1 * 6 + 3];
  std::swap(t[1 * 6 + 3], t[1 * 6 + 4]);
  CHECK_THROWS_AS(read_text(table_text(6, t)), NotAGroup);
  CHECK_THROWS_AS(read_text("2\n0 0\n0 0\n"), NotAGroup);
  CHECK_THROWS_AS(read_text("3\n0 2 1\n2 1 0\n1 0 2\n"), NotAGroup);
}
