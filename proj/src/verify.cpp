#include "youngrep/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "youngrep/characters.hpp"
#include "youngrep/errors.hpp"
#include "youngrep/oracle.hpp"
#include "youngrep/specht.hpp"

namespace youngrep {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

namespace {

struct GoldenGenerator {
  Partition shape;
  int i;
  IntegerMatrix matrix;
};

// Generator matrices of S_4 in the fixture basis order.
std::vector<GoldenGenerator> golden_s4_generators() {
  const Partition l1({1, 1, 1, 1}), l2({2, 1, 1}), l3({2, 2}), l4({3, 1}), l5({4});
  return {
      {l1, 1, {{-1}}},
      {l1, 2, {{-1}}},
      {l1, 3, {{-1}}},
      {l2, 1, {{1, 0, 0}, {-1, -1, 0}, {1, 0, -1}}},
      {l2, 2, {{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}},
      {l2, 3, {{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}},
      {l3, 1, {{1, 0}, {-1, -1}}},
      {l3, 2, {{0, 1}, {1, 0}}},
      {l3, 3, {{1, 0}, {-1, -1}}},
      {l4, 1, {{-1, -1, -1}, {0, 1, 0}, {0, 0, 1}}},
      {l4, 2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}},
      {l4, 3, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}},
      {l5, 1, {{1}}},
      {l5, 2, {{1}}},
      {l5, 3, {{1}}},
  };
}

const std::vector<std::vector<std::int64_t>> kGoldenS4Characters{
    {1, -1, 1, 1, -1}, {3, -1, -1, 0, 1}, {2, 0, 2, -1, 0}, {3, 1, -1, 0, -1}, {1, 1, 1, 1, 1},
};

class Suite {
public:
  explicit Suite(VerificationReport &report) : report_(report) {}

  // Runs `body`, which records failures through `fail`.
  void run(const std::string &name, const std::function<void()> &body) {
    current_ = {name, true, ""};
    failures_ = 0;
    try {
      body();
    } catch (const std::exception &e) {
      fail(std::string("exception: ") + e.what());
    }
    if (failures_ > 3)
      current_.detail += "; ... " + std::to_string(failures_ - 3) + " more";
    report_.checks.push_back(current_);
  }

  void fail(const std::string &what) {
    current_.passed = false;
    if (++failures_ <= 3)
      current_.detail += (current_.detail.empty() ? "" : "; ") + what;
  }

private:
  VerificationReport &report_;
  CheckResult current_;
  int failures_ = 0;
};

std::vector<Permutation> sample(const std::vector<Permutation> &all, std::size_t count,
                                std::mt19937 &rng) {
  if (all.size() <= count)
    return all;
  std::vector<Permutation> out;
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(all[pick(rng)]);
  return out;
}

} // namespace

VerificationReport run_verification(int n, bool with_oracle) {
  if (n < 1)
    throw std::invalid_argument("verify requires n >= 1");
  if (n > kVerifyLimit)
    throw LimitError("verify is limited to n <= " + std::to_string(kVerifyLimit));

  VerificationReport report{n, with_oracle, {}};
  Suite suite(report);
  std::mt19937 rng(20240611u);
  const auto shapes = partitions_of(n);
  const auto group = all_permutations(n);
  const auto order = BasisOrder::RowWordLex;

  if (n == 4) {
    suite.run("golden generator matrices (S_4, paper order)", [&] {
      for (const auto &g : golden_s4_generators())
        if (generator_matrix(g.shape, g.i, BasisOrder::PaperS4) != g.matrix)
          suite.fail("X_" + g.shape.to_string() + "(s_" + std::to_string(g.i) + ") differs");
    });
    suite.run("golden character table (S_4)", [&] {
      const auto table = character_table(4);
      if (table.values != kGoldenS4Characters)
        suite.fail("character table differs");
      const std::vector<BigInt> sizes{1, 6, 3, 8, 6};
      if (table.class_sizes != sizes)
        suite.fail("class sizes differ");
    });
  }

  suite.run("hook formula matches tableau enumeration", [&] {
    for (const auto &lambda : shapes) {
      const auto count = standard_tableaux(lambda, order).size();
      if (count != dimension(lambda))
        suite.fail(lambda.to_string() + ": " + std::to_string(count) + " tableaux vs f = " +
                   std::to_string(dimension(lambda)));
    }
  });

  suite.run("sum of squared dimensions equals n!", [&] {
    std::uint64_t sum = 0;
    for (const auto &lambda : shapes)
      sum += dimension(lambda) * dimension(lambda);
    if (sum != group.size())
      suite.fail("sum f^2 = " + std::to_string(sum) + ", n! = " + std::to_string(group.size()));
  });

  suite.run("adjacent words evaluate to their permutation", [&] {
    for (const auto &sigma : group) {
      const auto word = adjacent_word(sigma);
      if (word.evaluate() != sigma ||
          static_cast<int>(word.letters.size()) != inversions(sigma))
        suite.fail("word for " + sigma.to_string());
    }
  });

  suite.run("Coxeter relations", [&] {
    for (const auto &lambda : shapes) {
      const auto rep = young_representation(lambda, order);
      const auto id = IntegerMatrix::identity(rep->dimension());
      for (int i = 1; i < n; ++i) {
        const auto &si = rep->generator(i);
        if (si * si != id)
          suite.fail(lambda.to_string() + ": s_" + std::to_string(i) + "^2 != 1");
        if (i + 1 < n) {
          const auto braid = si * rep->generator(i + 1);
          if (braid * braid * braid != id)
            suite.fail(lambda.to_string() + ": (s_" + std::to_string(i) + " s_" +
                       std::to_string(i + 1) + ")^3 != 1");
        }
        for (int j = i + 2; j < n; ++j)
          if (si * rep->generator(j) != rep->generator(j) * si)
            suite.fail(lambda.to_string() + ": s_" + std::to_string(i) + " s_" +
                       std::to_string(j) + " do not commute");
      }
    }
  });

  suite.run("homomorphism X(st) = X(s) X(t)", [&] {
    const std::size_t pairs = n <= 6 ? 1000 : 100;
    for (const auto &lambda : shapes) {
      const auto rep = young_representation(lambda, order);
      auto check = [&](const Permutation &s, const Permutation &t) {
        if (rep->matrix(s * t) != rep->matrix(s) * rep->matrix(t))
          suite.fail(lambda.to_string() + ": " + s.to_string() + " * " + t.to_string());
      };
      if (n <= 4) {
        for (const auto &s : group)
          for (const auto &t : group)
            check(s, t);
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
        for (std::size_t k = 0; k < pairs; ++k)
          check(group[pick(rng)], group[pick(rng)]);
      }
    }
  });

  suite.run("class constancy of traces", [&] {
    const auto classes = conjugacy_classes(n);
    for (const auto &lambda : shapes) {
      const auto rep = young_representation(lambda, order);
      for (const auto &[type, members] : classes) {
        const auto value = rep->matrix(class_representative(type)).trace();
        for (const auto &sigma : n <= 6 ? members : sample(members, 20, rng))
          if (rep->matrix(sigma).trace() != value) {
            suite.fail(lambda.to_string() + " on class " + type.to_string());
            break;
          }
      }
    }
  });

  suite.run("character orthogonality", [&] {
    std::vector<CharacterRow> rows;
    for (const auto &lambda : shapes)
      rows.push_back(character(lambda, order));
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < rows.size(); ++b) {
        const Rational expected = a == b ? 1 : 0;
        if (inner_product(rows[a], rows[b], n) != expected)
          suite.fail("<" + shapes[a].to_string() + ", " + shapes[b].to_string() + ">");
      }
    for (std::size_t a = 0; a < rows.size(); ++a)
      if (rows[a].values.at(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) !=
          static_cast<std::int64_t>(dimension(shapes[a])))
        suite.fail("identity column of " + shapes[a].to_string());
  });

  if (with_oracle) {
    suite.run("tabloid oracle agrees with straightening", [&] {
      std::vector<BasisOrder> orders{BasisOrder::RowWordLex};
      if (n == 4)
        orders.push_back(BasisOrder::PaperS4);
      const std::size_t per_shape = n <= 5 ? group.size() : (n == 6 ? 20 : 5);
      for (auto ord : orders)
        for (const auto &lambda : shapes) {
          if (dimension(lambda) > kOracleMaxDimension)
            continue;
          const SpechtOracle oracle(lambda, ord);
          const auto rep = young_representation(lambda, ord);
          for (const auto &sigma : sample(group, per_shape, rng))
            if (oracle.matrix(sigma) != rep->matrix(sigma))
              suite.fail(lambda.to_string() + " (" + std::string(to_string(ord)) +
                         ") at " + sigma.to_string());
        }
    });
  }
  return report;
}

} // namespace youngrep
