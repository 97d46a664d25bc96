#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "youngrep/partition.hpp"
#include "youngrep/perm.hpp"

namespace youngrep {

/// Bijective filling of a Ferrers diagram with 1..n.
class Tableau {
public:
  /// Shape is read off the row lengths.  Throws std::invalid_argument if the
  /// row lengths increase or the entries are not exactly {1..n}.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const Partition &shape() const noexcept { return shape_; }
  int size() const noexcept { return shape_.size(); }
  const std::vector<std::vector<int>> &rows() const noexcept { return rows_; }

  int at(Cell cell) const;
  Cell position_of(int entry) const;
  /// Entries of column `col` (1-based), top to bottom.
  std::vector<int> column(int col) const;
  /// Row 1 left to right, then row 2, ...
  std::vector<int> row_word() const;

  /// Comma form, rows separated by '/': "1,3,4/2".
  std::string to_string() const;

  auto operator<=>(const Tableau &) const = default;

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Accepts "1,3,4/2" and, when no comma appears anywhere, the compact
/// single-digit form "134/2".
Tableau parse_tableau(std::string_view text);

bool is_standard(const Tableau &t);
bool same_row(const Tableau &t, int a, int b);
bool same_column(const Tableau &t, int a, int b);

/// Entrywise relabelling e -> sigma(e).
Tableau apply_perm(const Permutation &sigma, const Tableau &t);

struct ColumnSorted {
  Tableau tableau;
  int sign;
};

/// Sorts every column ascending.  sign is the product of the signs of the
/// column-sorting permutations, so e_t = sign * e_{result}.
ColumnSorted column_sort(const Tableau &t);

/// First cell, scanning rows top to bottom and then left to right, whose
/// entry exceeds its right neighbour.  Throws std::invalid_argument when the
/// columns of t are not increasing.
std::optional<Cell> first_row_descent(const Tableau &t);

/// Row-equivalence class of a tableau, stored with each row sorted.
class Tabloid {
public:
  explicit Tabloid(const Tableau &t);

  const Partition &shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>> &rows() const noexcept { return rows_; }

  Tabloid relabel(const Permutation &sigma) const;
  std::string to_string() const;

  auto operator<=>(const Tabloid &) const = default;

private:
  Tabloid(Partition shape, std::vector<std::vector<int>> rows);

  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

enum class BasisOrder {
  /// Fixed hand-listed per-shape orderings for S_4.  Only
  /// defined for n = 4.
  PaperS4,
  /// Ascending by row-reading word.
  RowWordLex,
};

/// "paper" / "rowlex"
std::string_view to_string(BasisOrder order);
BasisOrder parse_basis_order(std::string_view text);

/// All standard tableaux of shape lambda in the requested order.  Throws
/// LimitError for PaperS4 with n != 4.
std::vector<Tableau> standard_tableaux(const Partition &lambda, BasisOrder order);

} // namespace youngrep
