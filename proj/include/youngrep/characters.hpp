#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "youngrep/partition.hpp"
#include "youngrep/perm.hpp"
#include "youngrep/rational.hpp"
#include "youngrep/tableau.hpp"

namespace youngrep {

/// Trace of Young's natural representation on each conjugacy class.
struct CharacterRow {
  Partition shape;
  std::map<Partition, std::int64_t> values;
};

/// Cycles laid out consecutively: (3,1) -> (1 2 3), (2,2) -> (1 2)(3 4).
Permutation class_representative(const Partition &cycle_type);

/// n! / z_mu.
BigInt class_size(const Partition &cycle_type);

/// For n <= kClassCheckLimit every class member is traced and a
/// std::logic_error is thrown if the trace varies within a class.
inline constexpr int kClassCheckLimit = 5;
CharacterRow character(const Partition &lambda, BasisOrder order);

struct CharacterTable {
  int n = 1;
  std::vector<Partition> shapes;  ///< rows, ascending
  std::vector<Partition> classes; ///< columns, ascending
  std::vector<BigInt> class_sizes;
  std::vector<std::vector<std::int64_t>> values;
};

/// Throws LimitError beyond kEnumerationLimit.
CharacterTable character_table(int n);

/// (1/n!) sum_K |K| a(K) b(K).  Throws std::invalid_argument if the rows are
/// not over the classes of S_n.
Rational inner_product(const CharacterRow &a, const CharacterRow &b, int n);

} // namespace youngrep
