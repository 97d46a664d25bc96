#include "youngrep/matrix.hpp"

#include <stdexcept>

namespace youngrep {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto &row : rows) {
    if (row.size() != dim_)
      throw std::invalid_argument("IntegerMatrix must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

IntegerMatrix::IntegerMatrix(const std::vector<std::vector<std::int64_t>> &rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto &row : rows) {
    if (row.size() != dim_)
      throw std::invalid_argument("IntegerMatrix must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t dim) {
  IntegerMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    m(i, i) = 1;
  return m;
}

std::int64_t IntegerMatrix::trace() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    sum += (*this)(i, i);
  return sum;
}

std::vector<std::vector<std::int64_t>> IntegerMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    out[r].assign(entries_.begin() + static_cast<std::ptrdiff_t>(r * dim_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * dim_));
  return out;
}

IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t n = a.dim();
  IntegerMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t term = 0;
        if (__builtin_mul_overflow(aik, b(k, j), &term) ||
            __builtin_add_overflow(c(i, j), term, &c(i, j)))
          throw std::overflow_error("integer matrix product overflows 64 bits");
      }
    }
  return c;
}

} // namespace youngrep
