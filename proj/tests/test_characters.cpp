#include <doctest.h>

#include "youngrep/characters.hpp"
#include "youngrep/errors.hpp"
#include "youngrep/specht.hpp"

using namespace youngrep;

namespace {

const std::vector<std::vector<std::int64_t>> kS4Table{
    {1, -1, 1, 1, -1}, {3, -1, -1, 0, 1}, {2, 0, 2, -1, 0}, {3, 1, -1, 0, -1}, {1, 1, 1, 1, 1},
};

std::vector<std::int64_t> values(const CharacterRow &row) {
  std::vector<std::int64_t> out;
  for (const auto &[type, v] : row.values)
    out.push_back(v);
  return out;
}

} // namespace

TEST_CASE("class representatives and sizes") {
  CHECK(class_representative(Partition({3, 1})) == parse_cycles("(1 2 3)", 4));
  CHECK(class_representative(Partition({2, 2})) == parse_cycles("(1 2)(3 4)", 4));
  CHECK(class_representative(Partition({1, 1, 1, 1})).is_identity());
  for (int n = 1; n <= 6; ++n)
    for (const auto &[type, members] : conjugacy_classes(n)) {
      CHECK(cycle_type(class_representative(type)) == type);
      CHECK(class_size(type) == members.size());
    }
}

TEST_CASE("characters of S_4") {
  CHECK(values(character(Partition({3, 1}), BasisOrder::PaperS4)) ==
        std::vector<std::int64_t>{3, 1, -1, 0, -1});
  CHECK(values(character(Partition({4}), BasisOrder::PaperS4)) ==
        std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(values(character(Partition({2, 2}), BasisOrder::PaperS4)) ==
        std::vector<std::int64_t>{2, 0, 2, -1, 0});
}

TEST_CASE("characters do not depend on basis order") {
  for (const auto &lambda : partitions_of(4))
    CHECK(character(lambda, BasisOrder::PaperS4).values ==
          character(lambda, BasisOrder::RowWordLex).values);
}

TEST_CASE("character table of S_4") {
  const auto table = character_table(4);
  CHECK(table.shapes == partitions_of(4));
  CHECK(table.classes == partitions_of(4));
  CHECK(table.class_sizes == std::vector<BigInt>{1, 6, 3, 8, 6});
  CHECK(table.values == kS4Table);
}

TEST_CASE("character table of S_1") {
  const auto table = character_table(1);
  CHECK(table.values == std::vector<std::vector<std::int64_t>>{{1}});
  CHECK_THROWS_AS(character_table(kEnumerationLimit + 1), LimitError);
  CHECK_THROWS_AS(character_table(0), std::invalid_argument);
}

TEST_CASE("row and column orthogonality of the S_5 table") {
  const auto table = character_table(5);
  REQUIRE(table.values.size() == 7);
  BigInt order = 120;
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b) {
      BigInt rows = 0;
      BigInt cols = 0;
      for (std::size_t k = 0; k < 7; ++k) {
        rows += table.class_sizes[k] * table.values[a][k] * table.values[b][k];
        cols += BigInt(table.values[k][a]) * table.values[k][b];
      }
      CHECK(rows == (a == b ? order : 0));
      CHECK(cols * table.class_sizes[a] == (a == b ? order : 0));
    }
}

TEST_CASE("inner products") {
  const auto chi31 = character(Partition({3, 1}), BasisOrder::RowWordLex);
  const auto chi22 = character(Partition({2, 2}), BasisOrder::RowWordLex);
  const auto triv = character(Partition({4}), BasisOrder::RowWordLex);
  CHECK(inner_product(chi31, chi31, 4) == 1);
  CHECK(inner_product(triv, triv, 4) == 1);
  CHECK(inner_product(chi31, chi22, 4) == 0);
  const auto chi5 = character(Partition({5}), BasisOrder::RowWordLex);
  CHECK_THROWS_AS(inner_product(chi31, chi5, 4), std::invalid_argument);
}

TEST_CASE("irreducible characters are orthonormal for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<CharacterRow> rows;
    for (const auto &lambda : partitions_of(n))
      rows.push_back(character(lambda, BasisOrder::RowWordLex));
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < rows.size(); ++b)
        REQUIRE(inner_product(rows[a], rows[b], n) == Rational(a == b ? 1 : 0));
  }
}

TEST_CASE("sign and trivial characters; identity column holds dimensions") {
  for (int n = 1; n <= 5; ++n) {
    const Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
    const Partition row({n});
    const auto sgn = young_representation(column, BasisOrder::RowWordLex);
    const auto triv = young_representation(row, BasisOrder::RowWordLex);
    for (const auto &sigma : all_permutations(n)) {
      REQUIRE(sgn->matrix(sigma).trace() == sign(sigma));
      REQUIRE(triv->matrix(sigma).trace() == 1);
    }
    for (const auto &lambda : partitions_of(n))
      CHECK(character(lambda, BasisOrder::RowWordLex).values.at(column) ==
            static_cast<std::int64_t>(dimension(lambda)));
  }
}
