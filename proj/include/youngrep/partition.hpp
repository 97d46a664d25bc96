#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace youngrep {

/// A cell of a Ferrers diagram in English notation, 1-based.
struct Cell {
  int row = 1;
  int col = 1;

  auto operator<=>(const Cell &) const = default;
};

/// Weakly decreasing sequence of positive integers.  Names both a shape
/// (an irreducible representation of S_n) and a cycle type (a conjugacy
/// class).  Ordering is lexicographic on the part sequence.
class Partition {
public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts is nonempty, positive and
  /// weakly decreasing.
  explicit Partition(std::vector<int> parts);

  int size() const noexcept { return size_; }
  std::size_t length() const noexcept { return parts_.size(); }
  const std::vector<int> &parts() const noexcept { return parts_; }

  /// Length of row `row` (1-based); 0 below the last row.
  int row_length(int row) const noexcept;
  /// Length of column `col` (1-based); 0 right of the first row.
  int column_length(int col) const noexcept;

  bool contains(Cell cell) const noexcept;

  /// "3,1"
  std::string to_string() const;

  auto operator<=>(const Partition &) const = default;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Parses "3,1".  Rejects input that is not already weakly decreasing.
Partition parse_partition(std::string_view text);

/// All partitions of n in ascending lexicographic order.  For n = 4:
/// (1,1,1,1), (2,1,1), (2,2), (3,1), (4).
std::vector<Partition> partitions_of(int n);

/// Transpose of the Ferrers diagram.
Partition conjugate(const Partition &lambda);

/// 1 + arm + leg.  Throws std::invalid_argument for a cell outside lambda.
int hook_length(const Partition &lambda, Cell cell);

/// Number of standard tableaux of shape lambda, n! / prod(hooks).
/// Computed with arbitrary precision; throws std::overflow_error when the
/// result does not fit 64 bits and std::logic_error if the hook product
/// fails to divide n!.
std::uint64_t dimension(const Partition &lambda);

} // namespace youngrep
