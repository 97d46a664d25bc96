#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "youngrep/partition.hpp"

namespace youngrep {

/// Largest degree for which the whole group may be enumerated (10! elements).
inline constexpr int kEnumerationLimit = 10;

/// A bijection of {1..n}.
class Permutation {
public:
  /// Identity of the given degree.
  explicit Permutation(int degree);
  /// One-line form: images[i-1] = sigma(i).  Throws std::invalid_argument
  /// if the sequence is not a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }
  static Permutation transposition(int degree, int a, int b);
  /// s_i = (i, i+1)
  static Permutation adjacent(int degree, int i);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Nontrivial cycles, each starting at its smallest entry, ordered by
  /// that entry.
  std::vector<std::vector<int>> cycles() const;

  /// "e" for the identity, otherwise "(1 2)(3 4)".
  std::string to_string() const;
  /// "[2,1,4,3]"
  std::string to_one_line() const;

  auto operator<=>(const Permutation &) const = default;

private:
  std::vector<int> images_;
};

/// (sigma o tau)(x) = sigma(tau(x)); tau is applied first.
/// Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation &sigma, const Permutation &tau);
inline Permutation operator*(const Permutation &sigma, const Permutation &tau) {
  return compose(sigma, tau);
}

int inversions(const Permutation &sigma);
int sign(const Permutation &sigma);
Partition cycle_type(const Permutation &sigma);

/// Product of cycles, rightmost applied first.  "" and "e" give the
/// identity.  Throws ParseError on malformed text, out-of-range entries or
/// an entry repeated within one cycle.
Permutation parse_cycles(std::string_view text, int degree);

/// parse_cycles, plus the one-line form "[2,1,4,3]".
Permutation parse_permutation(std::string_view text, int degree);

/// All n! permutations in lexicographic order of their one-line form.
/// Throws LimitError beyond kEnumerationLimit.
std::vector<Permutation> all_permutations(int degree);

/// Elements of S_n bucketed by cycle type.
std::map<Partition, std::vector<Permutation>> conjugacy_classes(int degree);

/// Word in the adjacent transpositions s_i = (i, i+1).  Evaluation applies
/// the rightmost letter first, so letters {a, b} evaluate to s_a o s_b.
struct GeneratorWord {
  int degree = 1;
  std::vector<int> letters;

  Permutation evaluate() const;
  /// "(2 3)(3 4)(2 3)"; empty for the empty word.
  std::string to_string() const;
};

/// Reduced word for sigma obtained by bubble-sorting its one-line form.
/// Its length equals the inversion count of sigma.
GeneratorWord adjacent_word(const Permutation &sigma);

} // namespace youngrep
