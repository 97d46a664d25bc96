#include "youngrep/specht.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace youngrep {

StandardBasis::StandardBasis(Partition shape, BasisOrder order)
    : shape_(std::move(shape)), order_(order), tableaux_(standard_tableaux(shape_, order)) {
  for (std::size_t j = 0; j < tableaux_.size(); ++j)
    index_.emplace(tableaux_[j], j);
}

std::optional<std::size_t> StandardBasis::index_of(const Tableau &t) const {
  auto it = index_.find(t);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

void PolytabloidExpansion::add(std::size_t index, std::int64_t coeff) {
  if (coeff == 0)
    return;
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [index](const Term &term) { return term.index == index; });
  if (it == terms_.end()) {
    terms_.push_back({index, coeff});
    return;
  }
  it->coeff += coeff;
  if (it->coeff == 0)
    terms_.erase(it);
}

void PolytabloidExpansion::add_scaled(const PolytabloidExpansion &other, std::int64_t factor) {
  for (const auto &term : other.terms_)
    add(term.index, term.coeff * factor);
}

std::int64_t PolytabloidExpansion::coefficient(std::size_t index) const {
  for (const auto &term : terms_)
    if (term.index == index)
      return term.coeff;
  return 0;
}

std::vector<std::int64_t> PolytabloidExpansion::dense(std::size_t dim) const {
  std::vector<std::int64_t> out(dim, 0);
  for (const auto &term : terms_)
    out.at(term.index) = term.coeff;
  return out;
}

std::string PolytabloidExpansion::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &term : terms_) {
    if (!out.empty())
      out += ' ';
    out += term.coeff > 0 ? '+' : '-';
    const auto magnitude = term.coeff > 0 ? term.coeff : -term.coeff;
    if (magnitude != 1)
      out += std::to_string(magnitude);
    out += 't' + std::to_string(term.index + 1);
  }
  return out;
}

bool PolytabloidExpansion::operator==(const PolytabloidExpansion &other) const {
  if (shape_ != other.shape_ || order_ != other.order_ || terms_.size() != other.terms_.size())
    return false;
  for (const auto &term : terms_)
    if (other.coefficient(term.index) != term.coeff)
      return false;
  return true;
}

GarnirPair garnir_pair(const Tableau &t, Cell descent) {
  const Partition &shape = t.shape();
  if (!shape.contains(descent) || !shape.contains({descent.row, descent.col + 1}))
    throw std::invalid_argument("garnir_pair: descent cell has no right neighbour");
  GarnirPair pair;
  const auto left = t.column(descent.col);
  const auto right = t.column(descent.col + 1);
  pair.a.assign(left.begin() + (descent.row - 1), left.end());
  pair.b.assign(right.begin(), right.begin() + descent.row);
  std::sort(pair.a.begin(), pair.a.end());
  std::sort(pair.b.begin(), pair.b.end());
  return pair;
}

namespace {

// k-subsets of `items` in lexicographic order of positions.
std::vector<std::vector<int>> subsets(const std::vector<int> &items, std::size_t k) {
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i)
    pick[i] = i;
  while (true) {
    std::vector<int> subset;
    subset.reserve(k);
    for (auto p : pick)
      subset.push_back(items[p]);
    out.push_back(std::move(subset));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == items.size() - k + (i - 1))
      --i;
    if (i == 0)
      break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j)
      pick[j] = pick[j - 1] + 1;
  }
  return out;
}

} // namespace

std::vector<SignedPermutation> garnir_transversal(const GarnirPair &pair, int degree) {
  if (pair.a.empty() || pair.b.empty())
    throw std::invalid_argument("Garnir sets must be nonempty");
  for (int x : pair.a)
    if (std::find(pair.b.begin(), pair.b.end(), x) != pair.b.end())
      throw std::invalid_argument("Garnir sets overlap in " + std::to_string(x));
  auto a = pair.a;
  auto b = pair.b;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  std::vector<SignedPermutation> out;
  const std::size_t max_k = std::min(a.size(), b.size());
  for (std::size_t k = 0; k <= max_k; ++k) {
    const int sgn = k % 2 == 0 ? 1 : -1;
    const auto outgoing = subsets(a, k);
    const auto incoming = subsets(b, k);
    for (const auto &x : outgoing)
      for (const auto &y : incoming) {
        Permutation pi(degree);
        for (std::size_t m = 0; m < k; ++m)
          pi = compose(pi, Permutation::transposition(degree, x[m], y[m]));
        out.push_back({sgn, std::move(pi)});
      }
  }
  return out;
}

Straightener::Straightener(std::shared_ptr<const StandardBasis> basis, bool record_trace)
    : basis_(std::move(basis)), record_trace_(record_trace) {}

PolytabloidExpansion Straightener::straighten(const Tableau &t) {
  if (t.shape() != basis_->shape())
    throw std::invalid_argument("tableau of shape " + t.shape().to_string() +
                                " does not match basis shape " + basis_->shape().to_string());
  auto sorted = column_sort(t);
  PolytabloidExpansion result(basis_->shape(), basis_->order());
  result.add_scaled(straighten_sorted(sorted.tableau), sorted.sign);
  return result;
}

const PolytabloidExpansion &Straightener::straighten_sorted(const Tableau &t) {
  if (auto it = memo_.find(t); it != memo_.end())
    return it->second;

  PolytabloidExpansion result(basis_->shape(), basis_->order());
  const auto descent = first_row_descent(t);
  if (!descent) {
    const auto index = basis_->index_of(t);
    if (!index)
      throw std::logic_error("standard tableau " + t.to_string() + " missing from basis");
    result.add(*index, 1);
  } else {
    auto pair = garnir_pair(t, *descent);
    const auto transversal = garnir_transversal(pair, t.size());
    // Parent step precedes the sub-steps it triggers.
    const std::size_t slot = trace_.size();
    if (record_trace_)
      trace_.push_back({t, std::move(pair), {}});
    std::vector<GarnirStep::Term> terms;
    // transversal[0] is the identity: e_t = -sum_{pi != e} sign(pi) e_{pi t}.
    for (std::size_t k = 1; k < transversal.size(); ++k) {
      const auto &[sgn, pi] = transversal[k];
      auto image = apply_perm(pi, t);
      auto sorted = column_sort(image);
      if (record_trace_)
        terms.push_back({sgn, pi, std::move(image)});
      result.add_scaled(straighten_sorted(sorted.tableau), -sgn * sorted.sign);
    }
    if (record_trace_)
      trace_[slot].terms = std::move(terms);
  }
  return memo_.emplace(t, std::move(result)).first->second;
}

PolytabloidExpansion straighten(const Tableau &t, BasisOrder order) {
  Straightener s(std::make_shared<const StandardBasis>(t.shape(), order));
  return s.straighten(t);
}

ActionCase classify_action(const Tableau &t, int i) {
  const Cell a = t.position_of(i);
  const Cell b = t.position_of(i + 1);
  if (a.col == b.col)
    return ActionCase::SameColumn;
  if (a.row == b.row)
    return ActionCase::SameRow;
  return ActionCase::Neither;
}

namespace {

IntegerMatrix build_generator(Straightener &straightener, int i) {
  const StandardBasis &basis = straightener.basis();
  const int n = basis.shape().size();
  if (i < 1 || i >= n)
    throw std::invalid_argument("generator index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(n - 1));
  const auto s = Permutation::adjacent(n, i);
  IntegerMatrix m(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Tableau &t = basis[j];
    switch (classify_action(t, i)) {
    case ActionCase::SameColumn:
      m(j, j) = -1;
      break;
    case ActionCase::SameRow: {
      const auto column = straightener.straighten(apply_perm(s, t));
      for (const auto &term : column.terms())
        m(term.index, j) = term.coeff;
      break;
    }
    case ActionCase::Neither: {
      const auto index = basis.index_of(apply_perm(s, t));
      if (!index)
        throw std::logic_error("s_i t is not standard for " + t.to_string());
      m(*index, j) = 1;
      break;
    }
    }
  }
  return m;
}

} // namespace

IntegerMatrix generator_matrix(const Partition &lambda, int i, BasisOrder order) {
  Straightener straightener(std::make_shared<const StandardBasis>(lambda, order));
  return build_generator(straightener, i);
}

YoungRepresentation::YoungRepresentation(Partition shape, BasisOrder order)
    : basis_(std::make_shared<const StandardBasis>(std::move(shape), order)) {
  Straightener straightener(basis_);
  for (int i = 1; i < basis_->shape().size(); ++i)
    generators_.push_back(build_generator(straightener, i));
}

const IntegerMatrix &YoungRepresentation::generator(int i) const {
  if (i < 1 || i >= degree())
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
  return generators_[static_cast<std::size_t>(i - 1)];
}

IntegerMatrix YoungRepresentation::matrix(const GeneratorWord &word) const {
  if (word.degree != degree())
    throw std::invalid_argument("word degree does not match representation");
  auto result = IntegerMatrix::identity(dimension());
  for (int letter : word.letters)
    result = result * generator(letter);
  return result;
}

IntegerMatrix YoungRepresentation::matrix(const Permutation &sigma) const {
  if (sigma.degree() != degree())
    throw std::invalid_argument("permutation of degree " + std::to_string(sigma.degree()) +
                                " does not act on shape " + basis_->shape().to_string());
  return matrix(adjacent_word(sigma));
}

std::shared_ptr<const YoungRepresentation> young_representation(const Partition &lambda,
                                                                BasisOrder order) {
  static std::mutex mutex;
  static std::map<std::pair<Partition, BasisOrder>, std::shared_ptr<const YoungRepresentation>>
      cache;
  const auto key = std::make_pair(lambda, order);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end())
      return it->second;
  }
  // Built outside the lock; concurrent builders produce identical values.
  auto rep = std::make_shared<const YoungRepresentation>(lambda, order);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(rep)).first->second;
}

IntegerMatrix rep_matrix(const Partition &lambda, const Permutation &sigma, BasisOrder order) {
  return young_representation(lambda, order)->matrix(sigma);
}

} // namespace youngrep
