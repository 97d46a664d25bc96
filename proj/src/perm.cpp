#include "youngrep/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "youngrep/errors.hpp"

namespace youngrep {

Permutation::Permutation(int degree) {
  if (degree < 1)
    throw std::invalid_argument("permutation degree must be positive");
  images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i)
    images_[static_cast<std::size_t>(i)] = i + 1;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1)
    throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("images do not form a bijection of {1.." +
                                  std::to_string(n) + "}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p(degree);
  if (a < 1 || a > degree || b < 1 || b > degree)
    throw std::invalid_argument("transposition entry out of range");
  std::swap(p.images_[static_cast<std::size_t>(a - 1)],
            p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::adjacent(int degree, int i) {
  if (i < 1 || i >= degree)
    throw std::invalid_argument("adjacent transposition index " + std::to_string(i) +
                                " out of range for degree " + std::to_string(degree));
  return transposition(degree, i, i + 1);
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1)
      return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)])
      continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      cycle.push_back(x);
    }
    if (cycle.size() > 1)
      out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty())
    return "e";
  std::string out;
  for (const auto &cycle : cs) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0)
        out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

std::string Permutation::to_one_line() const {
  std::string out = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k > 0)
      out += ',';
    out += std::to_string(images_[k]);
  }
  return out + "]";
}

Permutation compose(const Permutation &sigma, const Permutation &tau) {
  if (sigma.degree() != tau.degree())
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(sigma.degree()) + " and " +
                                std::to_string(tau.degree()));
  std::vector<int> images(static_cast<std::size_t>(tau.degree()));
  for (int x = 1; x <= tau.degree(); ++x)
    images[static_cast<std::size_t>(x - 1)] = sigma(tau(x));
  return Permutation(std::move(images));
}

int inversions(const Permutation &sigma) {
  const auto img = sigma.images();
  int count = 0;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j])
        ++count;
  return count;
}

int sign(const Permutation &sigma) { return inversions(sigma) % 2 == 0 ? 1 : -1; }

Partition cycle_type(const Permutation &sigma) {
  std::vector<int> lengths;
  int moved = 0;
  for (const auto &cycle : sigma.cycles()) {
    lengths.push_back(static_cast<int>(cycle.size()));
    moved += static_cast<int>(cycle.size());
  }
  lengths.insert(lengths.end(), static_cast<std::size_t>(sigma.degree() - moved), 1);
  std::sort(lengths.begin(), lengths.end(), std::greater<>{});
  return Partition(std::move(lengths));
}

namespace {

class CycleScanner {
public:
  CycleScanner(std::string_view text, int degree) : text_(text), degree_(degree) {}

  Permutation parse() {
    skip_space();
    Permutation result(degree_);
    if (at_end())
      return result;
    if (text_[pos_] == 'e') {
      ++pos_;
      skip_space();
      if (!at_end())
        fail("unexpected text after 'e'");
      return result;
    }
    std::vector<std::vector<int>> cycles;
    while (!at_end()) {
      cycles.push_back(parse_cycle());
      skip_space();
    }
    // Rightmost cycle acts first.
    for (const auto &cycle : cycles)
      result = compose(result, cycle_permutation(cycle));
    return result;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError("cannot parse permutation '" + std::string(text_) + "': " + what);
  }

  std::vector<int> parse_cycle() {
    if (text_[pos_] != '(')
      fail("expected '('");
    ++pos_;
    std::vector<int> cycle;
    std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
    while (true) {
      skip_space();
      if (at_end())
        fail("unterminated cycle");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
        ++end;
      if (end == pos_)
        fail(std::string("unexpected character '") + text_[pos_] + "'");
      int value = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + end, value);
      if (ec != std::errc{} || value < 1 || value > degree_)
        fail("entry out of range 1.." + std::to_string(degree_));
      if (seen[static_cast<std::size_t>(value - 1)])
        fail("entry " + std::to_string(value) + " repeated within a cycle");
      seen[static_cast<std::size_t>(value - 1)] = true;
      cycle.push_back(value);
      pos_ = end;
    }
    if (cycle.empty())
      fail("empty cycle");
    return cycle;
  }

  Permutation cycle_permutation(const std::vector<int> &cycle) const {
    std::vector<int> images(static_cast<std::size_t>(degree_));
    for (int x = 1; x <= degree_; ++x)
      images[static_cast<std::size_t>(x - 1)] = x;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    return Permutation(std::move(images));
  }

  std::string_view text_;
  int degree_;
  std::size_t pos_ = 0;
};

Permutation parse_one_line(std::string_view text, int degree) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.remove_suffix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
    body.remove_prefix(1);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw ParseError("malformed one-line permutation '" + std::string(text) + "'");
  body = body.substr(1, body.size() - 2);
  std::vector<int> images;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string_view::npos)
      end = body.size();
    std::string_view token = body.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ')
      token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ')
      token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("malformed one-line permutation '" + std::string(text) + "'");
    images.push_back(value);
    pos = end + 1;
  }
  if (static_cast<int>(images.size()) != degree)
    throw ParseError("one-line permutation '" + std::string(text) + "' has degree " +
                     std::to_string(images.size()) + ", expected " +
                     std::to_string(degree));
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

} // namespace

Permutation parse_cycles(std::string_view text, int degree) {
  if (degree < 1)
    throw std::invalid_argument("permutation degree must be positive");
  return CycleScanner(text, degree).parse();
}

Permutation parse_permutation(std::string_view text, int degree) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '[')
    return parse_one_line(text, degree);
  return parse_cycles(text, degree);
}

std::vector<Permutation> all_permutations(int degree) {
  if (degree < 1)
    throw std::invalid_argument("permutation degree must be positive");
  if (degree > kEnumerationLimit)
    throw LimitError("refusing to enumerate S_" + std::to_string(degree) +
                     "; limit is n <= " + std::to_string(kEnumerationLimit));
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i)
    images[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::map<Partition, std::vector<Permutation>> conjugacy_classes(int degree) {
  std::map<Partition, std::vector<Permutation>> classes;
  for (auto &sigma : all_permutations(degree)) {
    auto type = cycle_type(sigma);
    classes[std::move(type)].push_back(std::move(sigma));
  }
  return classes;
}

Permutation GeneratorWord::evaluate() const {
  Permutation result(degree);
  for (int letter : letters)
    result = compose(result, Permutation::adjacent(degree, letter));
  return result;
}

std::string GeneratorWord::to_string() const {
  std::string out;
  for (int letter : letters)
    out += "(" + std::to_string(letter) + " " + std::to_string(letter + 1) + ")";
  return out;
}

GeneratorWord adjacent_word(const Permutation &sigma) {
  // Swapping positions i, i+1 of the one-line form is right multiplication
  // by s_i; sorting gives sigma s_{k1} ... s_{km} = e, so the word for
  // sigma is the swaps in reverse order.
  std::vector<int> line(sigma.images().begin(), sigma.images().end());
  std::vector<int> swaps;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      if (line[i] > line[i + 1]) {
        std::swap(line[i], line[i + 1]);
        swaps.push_back(static_cast<int>(i) + 1);
        swapped = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return GeneratorWord{sigma.degree(), std::move(swaps)};
}

} // namespace youngrep
