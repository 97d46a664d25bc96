#include "youngrep/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "youngrep/errors.hpp"
#include "youngrep/rational.hpp"

namespace youngrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw std::invalid_argument("partition must have at least one part");
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row_length(int row) const noexcept {
  if (row < 1 || static_cast<std::size_t>(row) > parts_.size())
    return 0;
  return parts_[static_cast<std::size_t>(row - 1)];
}

int Partition::column_length(int col) const noexcept {
  int len = 0;
  for (int p : parts_) {
    if (p < col)
      break;
    ++len;
  }
  return len;
}

bool Partition::contains(Cell cell) const noexcept {
  return cell.row >= 1 && cell.col >= 1 && cell.col <= row_length(cell.row);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0)
      out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ')
      ++pos;
    std::size_t end = pos;
    while (end < text.size() && text[end] >= '0' && text[end] <= '9')
      ++end;
    if (end == pos)
      throw ParseError("malformed partition '" + std::string(text) + "'");
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc{} || value < 1)
      throw ParseError("partition part out of range in '" + std::string(text) + "'");
    parts.push_back(value);
    pos = end;
    while (pos < text.size() && text[pos] == ' ')
      ++pos;
    if (pos == text.size())
      break;
    if (text[pos] != ',')
      throw ParseError("malformed partition '" + std::string(text) + "'");
    ++pos;
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>{}))
    throw ParseError("partition '" + std::string(text) + "' is not weakly decreasing");
  return Partition(std::move(parts));
}

namespace {

// Appends partitions of `remaining` with parts <= `max_part` in descending
// lexicographic order.
void enumerate(int remaining, int max_part, std::vector<int> &prefix,
               std::vector<Partition> &out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 1)
    throw std::invalid_argument("partitions_of requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate(n, n, prefix, out);
  std::reverse(out.begin(), out.end());
  return out;
}

Partition conjugate(const Partition &lambda) {
  std::vector<int> parts;
  for (int col = 1; col <= lambda.row_length(1); ++col)
    parts.push_back(lambda.column_length(col));
  return Partition(std::move(parts));
}

int hook_length(const Partition &lambda, Cell cell) {
  if (!lambda.contains(cell))
    throw std::invalid_argument("cell (" + std::to_string(cell.row) + "," +
                                std::to_string(cell.col) + ") is outside shape " +
                                lambda.to_string());
  const int arm = lambda.row_length(cell.row) - cell.col;
  const int leg = lambda.column_length(cell.col) - cell.row;
  return arm + leg + 1;
}

std::uint64_t dimension(const Partition &lambda) {
  BigInt numerator = 1;
  for (int k = 2; k <= lambda.size(); ++k)
    numerator *= k;
  BigInt hooks = 1;
  for (int row = 1; row <= static_cast<int>(lambda.length()); ++row)
    for (int col = 1; col <= lambda.row_length(row); ++col)
      hooks *= hook_length(lambda, {row, col});
  if (numerator % hooks != 0)
    throw std::logic_error("hook product does not divide n! for " + lambda.to_string());
  const BigInt f = numerator / hooks;
  if (f > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("dimension of " + lambda.to_string() + " exceeds 64 bits");
  return f.convert_to<std::uint64_t>();
}

} // namespace youngrep
