#include "youngrep/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "youngrep/errors.hpp"

namespace youngrep {

namespace {

Partition shape_of(const std::vector<std::vector<int>> &rows) {
  std::vector<int> lengths;
  lengths.reserve(rows.size());
  for (const auto &row : rows)
    lengths.push_back(static_cast<int>(row.size()));
  return Partition(std::move(lengths));
}

} // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows)
    : shape_(shape_of(rows)), rows_(std::move(rows)) {
  std::vector<bool> seen(static_cast<std::size_t>(shape_.size()), false);
  for (const auto &row : rows_)
    for (int e : row) {
      if (e < 1 || e > shape_.size() || seen[static_cast<std::size_t>(e - 1)])
        throw std::invalid_argument("tableau entries must be exactly 1.." +
                                    std::to_string(shape_.size()));
      seen[static_cast<std::size_t>(e - 1)] = true;
    }
}

int Tableau::at(Cell cell) const {
  if (!shape_.contains(cell))
    throw std::invalid_argument("cell outside tableau");
  return rows_[static_cast<std::size_t>(cell.row - 1)][static_cast<std::size_t>(cell.col - 1)];
}

Cell Tableau::position_of(int entry) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] == entry)
        return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
  throw std::invalid_argument("entry " + std::to_string(entry) + " not in tableau");
}

std::vector<int> Tableau::column(int col) const {
  std::vector<int> out;
  for (const auto &row : rows_) {
    if (static_cast<int>(row.size()) < col)
      break;
    out.push_back(row[static_cast<std::size_t>(col - 1)]);
  }
  return out;
}

std::vector<int> Tableau::row_word() const {
  std::vector<int> word;
  for (const auto &row : rows_)
    word.insert(word.end(), row.begin(), row.end());
  return word;
}

namespace {

std::string rows_to_string(const std::vector<std::vector<int>> &rows) {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0)
      out += '/';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0)
        out += ',';
      out += std::to_string(rows[r][c]);
    }
  }
  return out;
}

} // namespace

std::string Tableau::to_string() const { return rows_to_string(rows_); }

Tableau parse_tableau(std::string_view text) {
  const bool compact = text.find(',') == std::string_view::npos;
  std::vector<std::vector<int>> rows;
  std::vector<int> row;
  auto fail = [&](const std::string &what) -> ParseError {
    return ParseError("cannot parse tableau '" + std::string(text) + "': " + what);
  };
  auto finish_row = [&] {
    if (row.empty())
      throw fail("empty row");
    rows.push_back(std::move(row));
    row.clear();
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch == ' ') {
      ++pos;
    } else if (ch == '/') {
      finish_row();
      ++pos;
    } else if (ch == ',') {
      ++pos;
    } else if (ch >= '0' && ch <= '9') {
      std::size_t end = compact ? pos + 1 : pos;
      if (!compact)
        while (end < text.size() && text[end] >= '0' && text[end] <= '9')
          ++end;
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
      if (ec != std::errc{})
        throw fail("bad entry");
      row.push_back(value);
      pos = end;
    } else {
      throw fail(std::string("unexpected character '") + ch + "'");
    }
  }
  finish_row();
  try {
    Tableau t(std::move(rows));
    if (compact && t.size() > 9)
      throw fail("compact form requires n <= 9");
    return t;
  } catch (const std::invalid_argument &e) {
    throw fail(e.what());
  }
}

bool is_standard(const Tableau &t) {
  const auto &rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c + 1 < rows[r].size() && rows[r][c] >= rows[r][c + 1])
        return false;
      if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] >= rows[r + 1][c])
        return false;
    }
  return true;
}

bool same_row(const Tableau &t, int a, int b) {
  return t.position_of(a).row == t.position_of(b).row;
}

bool same_column(const Tableau &t, int a, int b) {
  return t.position_of(a).col == t.position_of(b).col;
}

Tableau apply_perm(const Permutation &sigma, const Tableau &t) {
  if (sigma.degree() != t.size())
    throw std::invalid_argument("permutation of degree " + std::to_string(sigma.degree()) +
                                " cannot act on a tableau with " +
                                std::to_string(t.size()) + " cells");
  auto rows = t.rows();
  for (auto &row : rows)
    for (int &e : row)
      e = sigma(e);
  return Tableau(std::move(rows));
}

ColumnSorted column_sort(const Tableau &t) {
  auto rows = t.rows();
  int sgn = 1;
  for (int col = 1; col <= t.shape().row_length(1); ++col) {
    const int len = t.shape().column_length(col);
    // Insertion sort; each adjacent swap flips the sign.
    for (int i = 1; i < len; ++i)
      for (int j = i; j > 0; --j) {
        int &upper = rows[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(col - 1)];
        int &lower = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(col - 1)];
        if (upper < lower)
          break;
        std::swap(upper, lower);
        sgn = -sgn;
      }
  }
  return {Tableau(std::move(rows)), sgn};
}

std::optional<Cell> first_row_descent(const Tableau &t) {
  const auto &rows = t.rows();
  for (std::size_t r = 0; r + 1 < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r + 1].size(); ++c)
      if (rows[r][c] > rows[r + 1][c])
        throw std::invalid_argument("first_row_descent requires increasing columns: " +
                                    t.to_string());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c + 1 < rows[r].size(); ++c)
      if (rows[r][c] > rows[r][c + 1])
        return Cell{static_cast<int>(r) + 1, static_cast<int>(c) + 1};
  return std::nullopt;
}

Tabloid::Tabloid(const Tableau &t) : shape_(t.shape()), rows_(t.rows()) {
  for (auto &row : rows_)
    std::sort(row.begin(), row.end());
}

Tabloid::Tabloid(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  for (auto &row : rows_)
    std::sort(row.begin(), row.end());
}

Tabloid Tabloid::relabel(const Permutation &sigma) const {
  if (sigma.degree() != shape_.size())
    throw std::invalid_argument("permutation degree does not match tabloid");
  auto rows = rows_;
  for (auto &row : rows)
    for (int &e : row)
      e = sigma(e);
  return Tabloid(shape_, std::move(rows));
}

std::string Tabloid::to_string() const { return "{" + rows_to_string(rows_) + "}"; }

std::string_view to_string(BasisOrder order) {
  return order == BasisOrder::PaperS4 ? "paper" : "rowlex";
}

BasisOrder parse_basis_order(std::string_view text) {
  if (text == "paper")
    return BasisOrder::PaperS4;
  if (text == "rowlex")
    return BasisOrder::RowWordLex;
  throw ParseError("unknown basis order '" + std::string(text) + "' (expected paper|rowlex)");
}

namespace {

void place(const Partition &lambda, int next, std::vector<std::vector<int>> &rows,
           std::vector<Tableau> &out) {
  if (next > lambda.size()) {
    out.emplace_back(rows);
    return;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto len = rows[r].size();
    if (static_cast<int>(len) >= lambda.parts()[r])
      continue;
    if (r > 0 && rows[r - 1].size() <= len)
      continue;
    rows[r].push_back(next);
    place(lambda, next + 1, rows, out);
    rows[r].pop_back();
  }
}

// Fixed hand-listed orderings of the S_4 standard bases.
const std::map<Partition, std::vector<std::string_view>> &paper_s4_listing() {
  static const std::map<Partition, std::vector<std::string_view>> listing{
      {Partition({1, 1, 1, 1}), {"1/2/3/4"}},
      {Partition({2, 1, 1}), {"1,2/3/4", "1,3/2/4", "1,4/2/3"}},
      {Partition({2, 2}), {"1,2/3,4", "1,3/2,4"}},
      {Partition({3, 1}), {"1,3,4/2", "1,2,4/3", "1,2,3/4"}},
      {Partition({4}), {"1,2,3,4"}},
  };
  return listing;
}

} // namespace

std::vector<Tableau> standard_tableaux(const Partition &lambda, BasisOrder order) {
  if (order == BasisOrder::PaperS4) {
    if (lambda.size() != 4)
      throw LimitError("paper basis order is only defined for n = 4, got shape " +
                       lambda.to_string());
    std::vector<Tableau> out;
    for (auto text : paper_s4_listing().at(lambda))
      out.push_back(parse_tableau(text));
    return out;
  }
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(lambda.length());
  place(lambda, 1, rows, out);
  std::sort(out.begin(), out.end(), [](const Tableau &a, const Tableau &b) {
    return a.row_word() < b.row_word();
  });
  return out;
}

} // namespace youngrep
