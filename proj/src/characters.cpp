#include "youngrep/characters.hpp"

#include <stdexcept>

#include "youngrep/errors.hpp"
#include "youngrep/specht.hpp"

namespace youngrep {

Permutation class_representative(const Partition &cycle_type) {
  std::vector<int> images(static_cast<std::size_t>(cycle_type.size()));
  int start = 1;
  for (int len : cycle_type.parts()) {
    for (int k = 0; k < len; ++k)
      images[static_cast<std::size_t>(start + k - 1)] = start + (k + 1) % len;
    start += len;
  }
  return Permutation(std::move(images));
}

BigInt class_size(const Partition &cycle_type) {
  BigInt order = 1;
  for (int k = 2; k <= cycle_type.size(); ++k)
    order *= k;
  std::map<int, int> multiplicity;
  for (int len : cycle_type.parts())
    ++multiplicity[len];
  BigInt centralizer = 1;
  for (auto [len, count] : multiplicity)
    for (int k = 1; k <= count; ++k)
      centralizer *= BigInt(len) * k;
  return order / centralizer;
}

CharacterRow character(const Partition &lambda, BasisOrder order) {
  const int n = lambda.size();
  if (n > kEnumerationLimit)
    throw LimitError("characters are limited to n <= " + std::to_string(kEnumerationLimit));
  const auto rep = young_representation(lambda, order);
  CharacterRow row{lambda, {}};
  if (n <= kClassCheckLimit) {
    for (const auto &[type, members] : conjugacy_classes(n)) {
      const auto value = rep->matrix(class_representative(type)).trace();
      for (const auto &sigma : members)
        if (rep->matrix(sigma).trace() != value)
          throw std::logic_error("trace of " + lambda.to_string() + " varies on class " +
                                 type.to_string());
      row.values.emplace(type, value);
    }
  } else {
    for (const auto &type : partitions_of(n))
      row.values.emplace(type, rep->matrix(class_representative(type)).trace());
  }
  return row;
}

CharacterTable character_table(int n) {
  if (n < 1)
    throw std::invalid_argument("character_table requires n >= 1");
  if (n > kEnumerationLimit)
    throw LimitError("character table is limited to n <= " + std::to_string(kEnumerationLimit));
  CharacterTable table;
  table.n = n;
  table.shapes = partitions_of(n);
  table.classes = table.shapes;
  for (const auto &type : table.classes)
    table.class_sizes.push_back(class_size(type));
  for (const auto &lambda : table.shapes) {
    const auto row = character(lambda, BasisOrder::RowWordLex);
    std::vector<std::int64_t> values;
    for (const auto &type : table.classes)
      values.push_back(row.values.at(type));
    table.values.push_back(std::move(values));
  }
  return table;
}

Rational inner_product(const CharacterRow &a, const CharacterRow &b, int n) {
  const auto classes = partitions_of(n);
  if (a.values.size() != classes.size() || b.values.size() != classes.size())
    throw std::invalid_argument("character rows do not cover the classes of S_" +
                                std::to_string(n));
  BigInt sum = 0;
  BigInt order = 1;
  for (int k = 2; k <= n; ++k)
    order *= k;
  for (const auto &type : classes) {
    auto ia = a.values.find(type);
    auto ib = b.values.find(type);
    if (ia == a.values.end() || ib == b.values.end())
      throw std::invalid_argument("character rows have mismatched class sets");
    sum += class_size(type) * ia->second * ib->second;
  }
  return Rational(sum, order);
}

} // namespace youngrep
