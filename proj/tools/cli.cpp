#include "cli.hpp"

#include <optional>

#include <CLI11.hpp>

#include "render.hpp"
#include "youngrep/characters.hpp"
#include "youngrep/errors.hpp"
#include "youngrep/specht.hpp"
#include "youngrep/verify.hpp"

namespace youngrep::cli {

namespace {

struct Options {
  std::string shape;
  std::string perm = "e";
  std::string tableau;
  std::optional<int> n;
  std::string order = "rowlex";
  std::string format = "text";
  bool oracle = false;
};

Partition shape_option(const Options &opt) {
  auto shape = parse_partition(opt.shape);
  if (opt.n && *opt.n != shape.size())
    throw ParseError("--n " + std::to_string(*opt.n) + " does not match shape " +
                     shape.to_string());
  return shape;
}

int required_n(const Options &opt) {
  if (!opt.n)
    throw ParseError("--n is required");
  if (*opt.n < 1)
    throw ParseError("--n must be positive");
  return *opt.n;
}

// Without --n, the degree is the largest entry (or the one-line length).
int infer_degree(const std::string &text) {
  if (const auto first = text.find_first_not_of(" \t");
      first != std::string::npos && text[first] == '[')
    return static_cast<int>(std::count(text.begin(), text.end(), ',')) + 1;
  int largest = 1;
  int value = 0;
  bool in_number = false;
  for (char ch : text + " ") {
    if (ch >= '0' && ch <= '9') {
      value = value * 10 + (ch - '0');
      in_number = true;
    } else if (in_number) {
      largest = std::max(largest, value);
      value = 0;
      in_number = false;
    }
  }
  return largest;
}

int cmd_matrix(const Options &opt, std::ostream &out) {
  const auto shape = shape_option(opt);
  const auto order = parse_basis_order(opt.order);
  const auto format = parse_output_format(opt.format);
  const auto sigma = parse_permutation(opt.perm, shape.size());
  const auto rep = young_representation(shape, order);
  out << render_matrix(rep->basis(), sigma, rep->matrix(sigma), format);
  return kSuccess;
}

int cmd_straighten(const Options &opt, std::ostream &out) {
  const auto t = parse_tableau(opt.tableau);
  if (!opt.shape.empty() && shape_option(opt) != t.shape())
    throw ParseError("tableau " + t.to_string() + " does not have shape " + opt.shape);
  const auto order = parse_basis_order(opt.order);
  const auto format = parse_output_format(opt.format);
  Straightener straightener(std::make_shared<const StandardBasis>(t.shape(), order), true);
  const auto expansion = straightener.straighten(t);
  out << render_straighten(t, straightener.basis(), expansion, straightener.trace(), format);
  return kSuccess;
}

int cmd_chartable(const Options &opt, std::ostream &out) {
  const int n = required_n(opt);
  const auto format = parse_output_format(opt.format);
  out << render_character_table(character_table(n), format);
  return kSuccess;
}

int cmd_decompose(const Options &opt, std::ostream &out) {
  const int n = opt.n ? *opt.n : infer_degree(opt.perm);
  if (n < 1)
    throw ParseError("--n must be positive");
  const auto format = parse_output_format(opt.format);
  const auto sigma = parse_permutation(opt.perm, n);
  const auto word = adjacent_word(sigma);
  if (word.evaluate() != sigma)
    throw std::logic_error("adjacent word does not evaluate to " + sigma.to_string());
  out << render_word(sigma, word, format);
  return kSuccess;
}

int cmd_verify(const Options &opt, std::ostream &out) {
  const int n = required_n(opt);
  const auto format = parse_output_format(opt.format);
  const auto report = run_verification(n, opt.oracle);
  out << render_report(report, format);
  return report.all_passed() ? kSuccess : kVerificationFailed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Young's natural representations of symmetric groups", "youngrep"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App *cmd) {
    cmd->add_option("--format", opt.format, "text|json|latex")->capture_default_str();
  };
  auto add_order = [&](CLI::App *cmd) {
    cmd->add_option("--order", opt.order, "basis order: paper (n = 4 only) | rowlex")
        ->capture_default_str();
  };

  auto *matrix = app.add_subcommand("matrix", "representation matrix X_shape(perm)");
  matrix->add_option("--shape", opt.shape, "partition, e.g. 3,1")->required();
  matrix->add_option("--perm", opt.perm, "cycles \"(1 2)(3 4)\", \"e\" or one-line [2,1,4,3]")
      ->capture_default_str();
  matrix->add_option("--n", opt.n, "degree (defaults to the size of the shape)");
  add_order(matrix);
  add_format(matrix);

  auto *straighten = app.add_subcommand("straighten", "expand e_t in standard polytabloids");
  straighten->add_option("--tableau", opt.tableau, "filling, e.g. 2,1/3/4")->required();
  straighten->add_option("--shape", opt.shape, "expected shape");
  add_order(straighten);
  add_format(straighten);

  auto *chartable = app.add_subcommand("chartable", "character table of S_n");
  chartable->add_option("--n", opt.n, "degree")->required();
  add_format(chartable);

  auto *decompose = app.add_subcommand("decompose", "reduced word in adjacent transpositions");
  decompose->add_option("--perm", opt.perm, "permutation")->required();
  decompose->add_option("--n", opt.n, "degree (defaults to the largest entry)");
  add_format(decompose);

  auto *verify = app.add_subcommand("verify", "run the invariant suites for S_n");
  verify->add_option("--n", opt.n, "degree")->required();
  verify->add_flag("--oracle", opt.oracle, "also compare against the tabloid oracle");
  add_format(verify);

  std::vector<std::string> argv_storage{"youngrep"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_storage)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*matrix)
      return cmd_matrix(opt, out);
    if (*straighten)
      return cmd_straighten(opt, out);
    if (*chartable)
      return cmd_chartable(opt, out);
    if (*decompose)
      return cmd_decompose(opt, out);
    return cmd_verify(opt, out);
  } catch (const LimitError &e) {
    err << "error: " << e.what() << "\n";
    return kLimitError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

} // namespace youngrep::cli
