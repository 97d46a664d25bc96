#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "s4_word_table.hpp"
#include "youngrep/errors.hpp"
#include "youngrep/perm.hpp"

using namespace youngrep;

namespace {

Permutation P(std::string_view text, int n = 4) { return parse_cycles(text, n); }

// Cycle type by walking orbits of a raw one-line array.
std::vector<int> brute_cycle_type(const std::vector<int> &line) {
  std::vector<bool> seen(line.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (std::size_t x = i; !seen[x]; x = static_cast<std::size_t>(line[x] - 1)) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

} // namespace

TEST_CASE("parse_cycles") {
  const auto s = P("(1 2)(3 4)");
  CHECK(std::vector<int>(s.images().begin(), s.images().end()) == std::vector<int>{2, 1, 4, 3});
  CHECK(P("").is_identity());
  CHECK(P("e").is_identity());
  CHECK(P("  e ").is_identity());
  const auto c = P("(1 2 3 4)");
  CHECK(std::vector<int>(c.images().begin(), c.images().end()) == std::vector<int>{2, 3, 4, 1});
  CHECK(P(" ( 1  2 ) (3 4) ") == s);
  CHECK(P("(3)").is_identity());
  // Rightmost cycle acts first.
  CHECK(P("(1 2)(2 3)") == P("(1 2 3)"));
}

TEST_CASE("parse_cycles rejects bad input") {
  CHECK_THROWS_AS(P("(1 5)"), ParseError);
  CHECK_THROWS_AS(P("(0 1)"), ParseError);
  CHECK_THROWS_AS(P("(1 2 1)"), ParseError);
  CHECK_THROWS_AS(P("(1 2"), ParseError);
  CHECK_THROWS_AS(P("1 2)"), ParseError);
  CHECK_THROWS_AS(P("(1 a)"), ParseError);
  CHECK_THROWS_AS(P("()"), ParseError);
  CHECK_THROWS_AS(P("e(1 2)"), ParseError);
  CHECK_THROWS_AS(P("(1,2)"), ParseError);
}

TEST_CASE("parse_permutation accepts one-line form") {
  CHECK(parse_permutation("[2,1,4,3]", 4) == P("(1 2)(3 4)"));
  CHECK(parse_permutation("[ 1, 2 ]", 2).is_identity());
  CHECK(parse_permutation("(1 2)", 4) == P("(1 2)"));
  CHECK_THROWS_AS(parse_permutation("[2,1,4,3]", 5), ParseError);
  CHECK_THROWS_AS(parse_permutation("[1,1,2,3]", 4), ParseError);
  CHECK_THROWS_AS(parse_permutation("[2,1,", 3), ParseError);
}

TEST_CASE("printing") {
  CHECK(P("e").to_string() == "e");
  CHECK(P("(3 4)(1 2)").to_string() == "(1 2)(3 4)");
  CHECK(P("(2 4 3)").to_string() == "(2 4 3)");
  CHECK(P("(4 3 2)").to_string() == "(2 4 3)");
  CHECK(P("(1 2)(3 4)").to_one_line() == "[2,1,4,3]");
  for (const auto &sigma : all_permutations(5))
    CHECK(parse_cycles(sigma.to_string(), 5) == sigma);
}

TEST_CASE("compose applies the right factor first") {
  CHECK(compose(P("(1 2)"), P("(2 3)")) == P("(1 2 3)"));
  CHECK(compose(P("(1 2 3 4)"), P("e")) == P("(1 2 3 4)"));
  CHECK(compose(P("(2 3)"), compose(P("(3 4)"), P("(2 3)"))) == P("(2 4)"));
  CHECK(compose(P("(1 2)"), P("(1 2)")).is_identity());
  CHECK_THROWS_AS(compose(P("(1 2)", 3), P("(1 2)", 4)), std::invalid_argument);
  for (const auto &s : all_permutations(4))
    CHECK((s * s.inverse()).is_identity());
}

TEST_CASE("sign") {
  CHECK(sign(P("e")) == 1);
  CHECK(sign(P("(1 2)")) == -1);
  CHECK(sign(P("(1 2 3 4)")) == -1);
  CHECK(sign(P("(1 2 3)")) == 1);
  const auto group = all_permutations(4);
  for (const auto &s : group)
    for (const auto &t : group)
      CHECK(sign(s * t) == sign(s) * sign(t));
}

TEST_CASE("cycle_type") {
  CHECK(cycle_type(P("(1 2)(3 4)")) == Partition({2, 2}));
  CHECK(cycle_type(P("e")) == Partition({1, 1, 1, 1}));
  CHECK(cycle_type(P("(2 3 4)")) == Partition({3, 1}));
  CHECK(cycle_type(P("(1 4 2 3)")) == Partition({4}));
}

TEST_CASE("cycle type is a conjugation invariant for n <= 5") {
  const auto group = all_permutations(5);
  for (const auto &s : group) {
    const auto type = cycle_type(s);
    for (const auto &t : group)
      if (cycle_type(t * s * t.inverse()) != type) {
        FAIL("conjugate of " << s.to_string() << " changes cycle type");
      }
  }
}

TEST_CASE("conjugacy classes of S_4") {
  const auto classes = conjugacy_classes(4);
  const std::map<Partition, std::size_t> sizes{{Partition({1, 1, 1, 1}), 1},
                                               {Partition({2, 1, 1}), 6},
                                               {Partition({2, 2}), 3},
                                               {Partition({3, 1}), 8},
                                               {Partition({4}), 6}};
  REQUIRE(classes.size() == sizes.size());
  std::size_t total = 0;
  for (const auto &[type, members] : classes) {
    CHECK(members.size() == sizes.at(type));
    total += members.size();
  }
  CHECK(total == 24);
  // The K_(2,2) listing.
  CHECK(classes.at(Partition({2, 2})) ==
        std::vector<Permutation>{P("(1 2)(3 4)"), P("(1 3)(2 4)"), P("(1 4)(2 3)")});
}

TEST_CASE("conjugacy classes of S_1 and S_5") {
  const auto one = conjugacy_classes(1);
  REQUIRE(one.size() == 1);
  CHECK(one.at(Partition({1})) == std::vector<Permutation>{Permutation(1)});

  // Bucket raw one-line arrays by orbit lengths.
  std::map<std::vector<int>, std::size_t> brute;
  std::vector<int> line{1, 2, 3, 4, 5};
  do {
    ++brute[brute_cycle_type(line)];
  } while (std::next_permutation(line.begin(), line.end()));
  const std::map<std::vector<int>, std::size_t> frozen{
      {{1, 1, 1, 1, 1}, 1}, {{2, 1, 1, 1}, 10}, {{2, 2, 1}, 15}, {{3, 1, 1}, 20},
      {{3, 2}, 20},         {{4, 1}, 30},       {{5}, 24}};
  CHECK(brute == frozen);

  const auto classes = conjugacy_classes(5);
  REQUIRE(classes.size() == frozen.size());
  for (const auto &[type, members] : classes)
    CHECK(members.size() == frozen.at(type.parts()));
}

TEST_CASE("enumeration limit") {
  CHECK(all_permutations(1).size() == 1);
  CHECK_THROWS_AS(all_permutations(kEnumerationLimit + 1), LimitError);
  CHECK_THROWS_AS(conjugacy_classes(11), LimitError);
}

TEST_CASE("adjacent_word examples") {
  const auto w24 = adjacent_word(P("(2 4)"));
  CHECK(w24.letters == std::vector<int>{2, 3, 2});
  CHECK(w24.to_string() == "(2 3)(3 4)(2 3)");
  CHECK(w24.evaluate() == P("(2 4)"));

  CHECK(adjacent_word(P("e")).letters.empty());
  CHECK(adjacent_word(P("e")).to_string().empty());

  const auto w1342 = adjacent_word(P("(1 3 4 2)"));
  CHECK(w1342.letters == std::vector<int>{2, 3, 1});
  CHECK(w1342.evaluate() == P("(1 3 4 2)"));
  CHECK(P(w1342.to_string()) == P("(1 3 4 2)"));
}

TEST_CASE("adjacent words are reduced and evaluate correctly for n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto &sigma : all_permutations(n)) {
      const auto word = adjacent_word(sigma);
      REQUIRE(word.evaluate() == sigma);
      REQUIRE(static_cast<int>(word.letters.size()) == inversions(sigma));
      REQUIRE((word.letters.size() % 2 == 0 ? 1 : -1) == sign(sigma));
      for (int letter : word.letters)
        REQUIRE((letter >= 1 && letter < n));
    }
}

TEST_CASE("printed S_4 decomposition table") {
  REQUIRE(kPrintedS4Words.size() == 23);
  for (const auto &entry : kPrintedS4Words) {
    CAPTURE(entry.element);
    const auto lhs = P(entry.element);
    const auto rhs = P(entry.word);
    if (entry.erratum) {
      CHECK(rhs != lhs);
      // Left-to-right evaluation fails too.
      CHECK(P("(1 3)") * P("(3 4)") * P("(2 3)") != lhs);
      CHECK(P(adjacent_word(lhs).to_string()) == lhs);
    } else {
      CHECK(rhs == lhs);
    }
  }
}
