#include "youngrep/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "youngrep/errors.hpp"

namespace youngrep {

void TabloidVector::add(const Tabloid &tabloid, const Rational &coeff) {
  if (tabloid.shape() != shape_)
    throw std::invalid_argument("tabloid shape does not match vector shape");
  if (coeff == 0)
    return;
  auto [it, inserted] = coeffs_.try_emplace(tabloid, coeff);
  if (inserted)
    return;
  it->second += coeff;
  if (it->second == 0)
    coeffs_.erase(it);
}

Rational TabloidVector::coefficient(const Tabloid &tabloid) const {
  auto it = coeffs_.find(tabloid);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

TabloidVector TabloidVector::operator-() const {
  TabloidVector out = *this;
  for (auto &[tabloid, coeff] : out.coeffs_)
    coeff = -coeff;
  return out;
}

TabloidVector &TabloidVector::operator+=(const TabloidVector &other) {
  if (other.shape_ != shape_)
    throw std::invalid_argument("cannot add tabloid vectors of different shapes");
  for (const auto &[tabloid, coeff] : other.coeffs_)
    add(tabloid, coeff);
  return *this;
}

TabloidVector &TabloidVector::operator*=(const Rational &factor) {
  if (factor == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto &[tabloid, coeff] : coeffs_)
    coeff *= factor;
  return *this;
}

TabloidVector operator+(TabloidVector a, const TabloidVector &b) { return a += b; }

TabloidVector operator*(const Rational &factor, TabloidVector v) { return v *= factor; }

namespace {

int arrangement_sign(const std::vector<std::size_t> &order) {
  int inv = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (order[i] > order[j])
        ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// Every arrangement of each column, sign accumulated across columns.
void expand_columns(const Tableau &t, int col, std::vector<std::vector<int>> &rows, int sgn,
                    TabloidVector &out) {
  if (col > t.shape().row_length(1)) {
    out.add(Tabloid(Tableau(rows)), sgn);
    return;
  }
  const auto entries = t.column(col);
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  do {
    for (std::size_t r = 0; r < order.size(); ++r)
      rows[r][static_cast<std::size_t>(col - 1)] = entries[order[r]];
    expand_columns(t, col + 1, rows, sgn * arrangement_sign(order), out);
  } while (std::next_permutation(order.begin(), order.end()));
}

} // namespace

TabloidVector polytabloid(const Tableau &t) {
  TabloidVector out(t.shape());
  auto rows = t.rows();
  expand_columns(t, 1, rows, 1, out);
  return out;
}

TabloidVector act(const Permutation &sigma, const TabloidVector &v) {
  if (sigma.degree() != v.shape().size())
    throw std::invalid_argument("permutation degree does not match tabloid vector");
  TabloidVector out(v.shape());
  for (const auto &[tabloid, coeff] : v.coeffs())
    out.add(tabloid.relabel(sigma), coeff);
  return out;
}

namespace {

const Partition &within_oracle_limits(const Partition &shape) {
  if (shape.size() > kOracleMaxDegree)
    throw LimitError("oracle is limited to n <= " + std::to_string(kOracleMaxDegree));
  if (dimension(shape) > kOracleMaxDimension)
    throw LimitError("oracle is limited to dimension <= " +
                     std::to_string(kOracleMaxDimension) + "; shape " + shape.to_string() +
                     " is larger");
  return shape;
}

// Row-reduces `m` in place over its first `cols` columns; returns the pivot
// column of each pivot row, in row order.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>> &m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0)
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[row], m[pivot]);
    const Rational lead = m[row][col];
    for (auto &x : m[row])
      x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0)
        continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c)
        m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::map<Tabloid, std::size_t> index_rows(const std::vector<TabloidVector> &a,
                                          const std::vector<TabloidVector> &b) {
  std::map<Tabloid, std::size_t> rows;
  for (const auto *group : {&a, &b})
    for (const auto &v : *group)
      for (const auto &[tabloid, coeff] : v.coeffs())
        rows.try_emplace(tabloid, 0);
  std::size_t k = 0;
  for (auto &[tabloid, index] : rows)
    index = k++;
  return rows;
}

} // namespace

SpechtOracle::SpechtOracle(const Partition &shape, BasisOrder order)
    : basis_(within_oracle_limits(shape), order) {
  vectors_.reserve(basis_.size());
  for (const auto &t : basis_.tableaux())
    vectors_.push_back(polytabloid(t));
}

std::size_t SpechtOracle::rank() const {
  const auto rows = index_rows(vectors_, {});
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(vectors_.size()));
  for (std::size_t j = 0; j < vectors_.size(); ++j)
    for (const auto &[tabloid, coeff] : vectors_[j].coeffs())
      m[rows.at(tabloid)][j] = coeff;
  return row_reduce(m, vectors_.size()).size();
}

std::vector<std::vector<Rational>> SpechtOracle::solve(const std::vector<TabloidVector> &rhs) const {
  const std::size_t f = vectors_.size();
  const auto rows = index_rows(vectors_, rhs);
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(f + rhs.size()));
  for (std::size_t j = 0; j < f; ++j)
    for (const auto &[tabloid, coeff] : vectors_[j].coeffs())
      m[rows.at(tabloid)][j] = coeff;
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    if (rhs[k].shape() != basis_.shape())
      throw std::invalid_argument("vector shape does not match oracle shape");
    for (const auto &[tabloid, coeff] : rhs[k].coeffs())
      m[rows.at(tabloid)][f + k] = coeff;
  }

  const auto pivots = row_reduce(m, f);
  if (pivots.size() != f)
    throw OracleError("standard polytabloids of " + basis_.shape().to_string() +
                      " are linearly dependent");
  for (std::size_t r = f; r < m.size(); ++r)
    for (std::size_t k = 0; k < rhs.size(); ++k)
      if (m[r][f + k] != 0)
        throw OracleError("vector lies outside the Specht module of " +
                          basis_.shape().to_string());

  std::vector<std::vector<Rational>> solutions(rhs.size(), std::vector<Rational>(f));
  for (std::size_t r = 0; r < f; ++r)
    for (std::size_t k = 0; k < rhs.size(); ++k)
      solutions[k][pivots[r]] = m[r][f + k];
  return solutions;
}

namespace {

std::int64_t to_integer(const Rational &q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) != 1)
    throw OracleError("non-integral coordinate " + q.str() + "; basis order mismatch?");
  const BigInt value = numerator(q);
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    throw OracleError("coordinate exceeds 64 bits");
  return value.convert_to<std::int64_t>();
}

} // namespace

PolytabloidExpansion SpechtOracle::express(const TabloidVector &v) const {
  const auto solution = solve({v}).front();
  PolytabloidExpansion out(basis_.shape(), basis_.order());
  for (std::size_t j = 0; j < solution.size(); ++j)
    out.add(j, to_integer(solution[j]));
  return out;
}

IntegerMatrix SpechtOracle::matrix(const Permutation &sigma) const {
  std::vector<TabloidVector> images;
  images.reserve(vectors_.size());
  for (const auto &v : vectors_)
    images.push_back(act(sigma, v));
  const auto solutions = solve(images);
  IntegerMatrix m(vectors_.size());
  for (std::size_t j = 0; j < solutions.size(); ++j)
    for (std::size_t i = 0; i < solutions[j].size(); ++i)
      m(i, j) = to_integer(solutions[j][i]);
  return m;
}

PolytabloidExpansion express_in_standard_basis(const TabloidVector &v, BasisOrder order) {
  return SpechtOracle(v.shape(), order).express(v);
}

IntegerMatrix oracle_matrix(const Partition &lambda, const Permutation &sigma, BasisOrder order) {
  return SpechtOracle(lambda, order).matrix(sigma);
}

} // namespace youngrep
