#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "youngrep/matrix.hpp"
#include "youngrep/partition.hpp"
#include "youngrep/perm.hpp"
#include "youngrep/rational.hpp"
#include "youngrep/specht.hpp"
#include "youngrep/tableau.hpp"

// Brute-force model of the permutation module M^lambda.  Used only to check
// the straightening path; shares nothing with it beyond the basis listing.

namespace youngrep {

/// Oracle refuses shapes beyond these sizes.
inline constexpr int kOracleMaxDegree = 8;
inline constexpr std::size_t kOracleMaxDimension = 200;

/// Element of M^lambda: rational combination of tabloids of one shape.
class TabloidVector {
public:
  explicit TabloidVector(Partition shape) : shape_(std::move(shape)) {}

  const Partition &shape() const noexcept { return shape_; }
  const std::map<Tabloid, Rational> &coeffs() const noexcept { return coeffs_; }
  std::size_t support_size() const noexcept { return coeffs_.size(); }

  void add(const Tabloid &tabloid, const Rational &coeff);
  Rational coefficient(const Tabloid &tabloid) const;

  TabloidVector operator-() const;
  TabloidVector &operator+=(const TabloidVector &other);
  TabloidVector &operator*=(const Rational &factor);

  bool operator==(const TabloidVector &) const = default;

private:
  Partition shape_;
  std::map<Tabloid, Rational> coeffs_;
};

TabloidVector operator+(TabloidVector a, const TabloidVector &b);
TabloidVector operator*(const Rational &factor, TabloidVector v);

/// e_t = sum over the column group C_t of sign(pi) {pi t}.
TabloidVector polytabloid(const Tableau &t);

/// Relabels every tabloid by sigma.
TabloidVector act(const Permutation &sigma, const TabloidVector &v);

/// Standard polytabloids of one shape expanded into tabloids, with exact
/// coordinate solves against them.  Immutable after construction.
class SpechtOracle {
public:
  /// Throws LimitError beyond kOracleMaxDegree / kOracleMaxDimension.
  SpechtOracle(const Partition &shape, BasisOrder order);

  const StandardBasis &basis() const noexcept { return basis_; }
  const std::vector<TabloidVector> &basis_vectors() const noexcept { return vectors_; }

  /// Rank of the tabloid-coordinate matrix of the standard polytabloids.
  std::size_t rank() const;

  /// Coordinates of v in the standard polytabloid basis.  Throws
  /// OracleError if v is outside the span or the solution is not integral.
  PolytabloidExpansion express(const TabloidVector &v) const;

  /// Column j = express(act(sigma, e_{t_j})), all columns in one solve.
  IntegerMatrix matrix(const Permutation &sigma) const;

private:
  std::vector<std::vector<Rational>> solve(const std::vector<TabloidVector> &rhs) const;

  StandardBasis basis_;
  std::vector<TabloidVector> vectors_;
};

PolytabloidExpansion express_in_standard_basis(const TabloidVector &v, BasisOrder order);
IntegerMatrix oracle_matrix(const Partition &lambda, const Permutation &sigma, BasisOrder order);

} // namespace youngrep
