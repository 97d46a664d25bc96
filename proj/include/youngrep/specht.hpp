#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "youngrep/matrix.hpp"
#include "youngrep/partition.hpp"
#include "youngrep/perm.hpp"
#include "youngrep/tableau.hpp"

namespace youngrep {

/// The standard tableaux of one shape in a fixed order, with reverse lookup.
class StandardBasis {
public:
  StandardBasis(Partition shape, BasisOrder order);

  const Partition &shape() const noexcept { return shape_; }
  BasisOrder order() const noexcept { return order_; }
  std::size_t size() const noexcept { return tableaux_.size(); }
  const std::vector<Tableau> &tableaux() const noexcept { return tableaux_; }
  const Tableau &operator[](std::size_t j) const { return tableaux_[j]; }

  std::optional<std::size_t> index_of(const Tableau &t) const;

private:
  Partition shape_;
  BasisOrder order_;
  std::vector<Tableau> tableaux_;
  std::map<Tableau, std::size_t> index_;
};

/// Integer combination of standard polytabloids.  Terms are kept in the
/// order they first received a nonzero coefficient; equality ignores that
/// order.
class PolytabloidExpansion {
public:
  struct Term {
    std::size_t index;
    std::int64_t coeff;

    bool operator==(const Term &) const = default;
  };

  PolytabloidExpansion(Partition shape, BasisOrder order)
      : shape_(std::move(shape)), order_(order) {}

  const Partition &shape() const noexcept { return shape_; }
  BasisOrder order() const noexcept { return order_; }
  const std::vector<Term> &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(std::size_t index, std::int64_t coeff);
  void add_scaled(const PolytabloidExpansion &other, std::int64_t factor);

  std::int64_t coefficient(std::size_t index) const;
  std::vector<std::int64_t> dense(std::size_t dim) const;

  /// "+t1 -t2 +t3", 1-based labels; "0" when empty.
  std::string to_string() const;

  bool operator==(const PolytabloidExpansion &other) const;

private:
  Partition shape_;
  BasisOrder order_;
  std::vector<Term> terms_;
};

/// Sets exchanged by a Garnir element: A from column j at and below the
/// descent row, B from column j+1 at and above it.  Both sorted.
struct GarnirPair {
  std::vector<int> a;
  std::vector<int> b;

  bool operator==(const GarnirPair &) const = default;
};

/// Pair for the descent at `descent`, i.e. t(descent) > t(descent + (0,1)).
GarnirPair garnir_pair(const Tableau &t, Cell descent);

struct SignedPermutation {
  int sign;
  Permutation perm;
};

/// One representative per left coset of S_A x S_B in S_{A u B}: for each
/// choice of k elements of A and k elements of B, the product of the
/// transpositions pairing them in increasing order.  The identity comes
/// first; there are binomial(|A|+|B|, |A|) entries.  Throws
/// std::invalid_argument if A and B overlap or either is empty.
std::vector<SignedPermutation> garnir_transversal(const GarnirPair &pair, int degree);

/// One rewrite e_t = -sum_{pi != e} sign(pi) e_{pi t} performed during
/// straightening.
struct GarnirStep {
  struct Term {
    int sign;
    Permutation perm;
    Tableau image;
  };

  Tableau tableau;
  GarnirPair pair;
  std::vector<Term> terms;
};

/// Rewrites polytabloids of arbitrary fillings in the standard basis.
/// Memoizes per instance; not safe for concurrent use of one instance.
class Straightener {
public:
  explicit Straightener(std::shared_ptr<const StandardBasis> basis, bool record_trace = false);

  const StandardBasis &basis() const noexcept { return *basis_; }

  /// Expansion of e_t.  Throws std::invalid_argument if t has the wrong shape.
  PolytabloidExpansion straighten(const Tableau &t);

  /// Garnir rewrites in the order they were first performed.
  const std::vector<GarnirStep> &trace() const noexcept { return trace_; }

private:
  const PolytabloidExpansion &straighten_sorted(const Tableau &t);

  std::shared_ptr<const StandardBasis> basis_;
  bool record_trace_;
  std::map<Tableau, PolytabloidExpansion> memo_;
  std::vector<GarnirStep> trace_;
};

PolytabloidExpansion straighten(const Tableau &t, BasisOrder order);

/// How s_i = (i, i+1) meets a tableau.
enum class ActionCase {
  SameColumn, ///< s_i e_t = -e_t
  SameRow,    ///< s_i t needs straightening
  Neither,    ///< s_i t is again standard
};

ActionCase classify_action(const Tableau &t, int i);

/// X_lambda(s_i): column j holds the coordinates of s_i e_{t_j}.
/// Throws std::invalid_argument unless 1 <= i < n.
IntegerMatrix generator_matrix(const Partition &lambda, int i, BasisOrder order);

/// Young's natural representation of one shape, with all generator
/// matrices computed up front.  Immutable after construction.
class YoungRepresentation {
public:
  YoungRepresentation(Partition shape, BasisOrder order);

  const StandardBasis &basis() const noexcept { return *basis_; }
  std::size_t dimension() const noexcept { return basis_->size(); }
  int degree() const noexcept { return basis_->shape().size(); }

  /// X(s_i), 1 <= i < n.
  const IntegerMatrix &generator(int i) const;
  IntegerMatrix matrix(const GeneratorWord &word) const;
  IntegerMatrix matrix(const Permutation &sigma) const;

private:
  std::shared_ptr<const StandardBasis> basis_;
  std::vector<IntegerMatrix> generators_;
};

/// Process-wide cache keyed by (shape, order); safe to call concurrently.
std::shared_ptr<const YoungRepresentation> young_representation(const Partition &lambda,
                                                                BasisOrder order);

/// Product of generator matrices along adjacent_word(sigma).
IntegerMatrix rep_matrix(const Partition &lambda, const Permutation &sigma, BasisOrder order);

} // namespace youngrep
