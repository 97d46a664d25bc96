#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace youngrep {

/// Square matrix of exact integers, row-major.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0) {}
  /// Row lists; throws std::invalid_argument unless square.
  IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  explicit IntegerMatrix(const std::vector<std::vector<std::int64_t>> &rows);

  static IntegerMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t &operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  std::int64_t operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::int64_t trace() const;
  std::vector<std::vector<std::int64_t>> rows() const;

  bool operator==(const IntegerMatrix &) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Throws std::invalid_argument on dimension mismatch and
/// std::overflow_error if an entry leaves the 64-bit range.
IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b);

} // namespace youngrep
