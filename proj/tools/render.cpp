#include "render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "youngrep/errors.hpp"

namespace youngrep::cli {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text")
    return OutputFormat::Text;
  if (text == "json")
    return OutputFormat::Json;
  if (text == "latex")
    return OutputFormat::Latex;
  throw ParseError("unknown format '" + std::string(text) + "' (expected text|json|latex)");
}

namespace {

std::string latex_perm(const Permutation &sigma) {
  if (sigma.is_identity())
    return "\\epsilon";
  std::string out;
  for (char ch : sigma.to_string())
    out += ch == ' ' ? std::string("\\,") : std::string(1, ch);
  return out;
}

std::string latex_shape(const Partition &p) { return "(" + p.to_string() + ")"; }

std::string text_matrix(const IntegerMatrix &m) {
  std::size_t width = 1;
  for (const auto &row : m.rows())
    for (auto x : row)
      width = std::max(width, std::to_string(x).size());
  std::ostringstream out;
  for (const auto &row : m.rows()) {
    out << "  [";
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto s = std::to_string(row[c]);
      out << (c > 0 ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    out << "]\n";
  }
  return out.str();
}

void text_basis(std::ostream &out, const StandardBasis &basis) {
  out << "basis:\n";
  for (std::size_t j = 0; j < basis.size(); ++j)
    out << "  t" << j + 1 << " = " << basis[j].to_string() << "\n";
}

ordered_json json_basis(const StandardBasis &basis) {
  auto list = ordered_json::array();
  for (const auto &t : basis.tableaux())
    list.push_back(t.to_string());
  return list;
}

std::string set_string(const std::vector<int> &set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k)
    out += (k > 0 ? "," : "") + std::to_string(set[k]);
  return out + "}";
}

} // namespace

std::string latex_matrix(const IntegerMatrix &m) {
  std::ostringstream out;
  out << "\\begin{bmatrix}\n";
  const auto rows = m.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      out << (c > 0 ? " & " : "") << rows[r][c];
    out << (r + 1 < rows.size() ? " \\\\\n" : "\n");
  }
  out << "\\end{bmatrix}";
  return out.str();
}

std::string latex_tableau(const Tableau &t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0)
      out += " \\\\ ";
    for (int e : t.rows()[r])
      out += "{" + std::to_string(e) + "}";
  }
  return out;
}

std::string render_matrix(const StandardBasis &basis, const Permutation &sigma,
                          const IntegerMatrix &m, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
  case OutputFormat::Json: {
    ordered_json doc;
    doc["shape"] = basis.shape().parts();
    doc["perm"] = sigma.to_string();
    doc["order"] = to_string(basis.order());
    doc["basis"] = json_basis(basis);
    doc["matrix"] = m.rows();
    out << doc.dump() << "\n";
    break;
  }
  case OutputFormat::Latex:
    for (std::size_t j = 0; j < basis.size(); ++j)
      out << "% t_{" << j + 1 << "} = " << latex_tableau(basis[j]) << "\n";
    // A single cycle already carries its own parentheses.
    if (sigma.cycles().size() == 1)
      out << "X_{" << latex_shape(basis.shape()) << "}" << latex_perm(sigma);
    else
      out << "X_{" << latex_shape(basis.shape()) << "}(" << latex_perm(sigma) << ")";
    out << " = " << latex_matrix(m) << "\n";
    break;
  case OutputFormat::Text:
    out << "shape: " << basis.shape().to_string() << "\n"
        << "perm: " << sigma.to_string() << "\n"
        << "order: " << to_string(basis.order()) << "\n";
    text_basis(out, basis);
    out << "matrix:\n" << text_matrix(m);
    break;
  }
  return out.str();
}

std::string render_straighten(const Tableau &t, const StandardBasis &basis,
                              const PolytabloidExpansion &expansion,
                              const std::vector<GarnirStep> &trace, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
  case OutputFormat::Json: {
    ordered_json doc;
    doc["shape"] = basis.shape().parts();
    doc["tableau"] = t.to_string();
    doc["order"] = to_string(basis.order());
    doc["basis"] = json_basis(basis);
    doc["coefficients"] = expansion.dense(basis.size());
    doc["expansion"] = expansion.to_string();
    out << doc.dump() << "\n";
    break;
  }
  case OutputFormat::Latex: {
    for (std::size_t j = 0; j < basis.size(); ++j)
      out << "% t_{" << j + 1 << "} = " << latex_tableau(basis[j]) << "\n";
    out << "e_{" << latex_tableau(t) << "} = ";
    if (expansion.is_zero())
      out << "0";
    bool first = true;
    for (const auto &term : expansion.terms()) {
      const auto magnitude = term.coeff > 0 ? term.coeff : -term.coeff;
      if (term.coeff < 0)
        out << (first ? "-" : " - ");
      else if (!first)
        out << " + ";
      if (magnitude != 1)
        out << magnitude;
      out << "e_{t_{" << term.index + 1 << "}}";
      first = false;
    }
    out << "\n";
    break;
  }
  case OutputFormat::Text: {
    out << "tableau: " << t.to_string() << "\n"
        << "shape: " << basis.shape().to_string() << "\n"
        << "order: " << to_string(basis.order()) << "\n";
    text_basis(out, basis);
    const auto sorted = column_sort(t);
    if (sorted.tableau != t)
      out << "column sort: " << t.to_string() << " -> " << sorted.tableau.to_string()
          << " (sign " << (sorted.sign > 0 ? "+1" : "-1") << ")\n";
    if (!trace.empty())
      out << "garnir steps:\n";
    for (std::size_t k = 0; k < trace.size(); ++k) {
      const auto &step = trace[k];
      out << "  step " << k + 1 << ": " << step.tableau.to_string()
          << "  A=" << set_string(step.pair.a) << " B=" << set_string(step.pair.b) << "\n";
      for (const auto &term : step.terms)
        out << "    " << (term.sign > 0 ? '+' : '-') << term.perm.to_string() << " -> "
            << term.image.to_string() << "\n";
    }
    out << "expansion: " << expansion.to_string() << "\n";
    break;
  }
  }
  return out.str();
}

std::string render_character_table(const CharacterTable &table, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
  case OutputFormat::Json: {
    ordered_json doc;
    doc["n"] = table.n;
    auto classes = ordered_json::array();
    for (const auto &c : table.classes)
      classes.push_back(c.parts());
    doc["classes"] = classes;
    auto sizes = ordered_json::array();
    for (const auto &s : table.class_sizes)
      sizes.push_back(s.convert_to<std::uint64_t>());
    doc["class_sizes"] = sizes;
    auto shapes = ordered_json::array();
    for (const auto &s : table.shapes)
      shapes.push_back(s.parts());
    doc["shapes"] = shapes;
    doc["table"] = table.values;
    out << doc.dump() << "\n";
    break;
  }
  case OutputFormat::Latex: {
    out << "\\begin{tabular}{r|" << std::string(table.classes.size(), 'c') << "}\n"
        << "$S_{" << table.n << "}$";
    for (const auto &c : table.classes)
      out << " & $K_{" << latex_shape(c) << "}$";
    out << " \\\\\n$|K|$";
    for (const auto &s : table.class_sizes)
      out << " & $" << s << "$";
    out << " \\\\\n\\hline\\hline\n";
    for (std::size_t r = 0; r < table.shapes.size(); ++r) {
      out << "$X_{" << latex_shape(table.shapes[r]) << "}$";
      for (auto v : table.values[r])
        out << " & $" << v << "$";
      out << (r + 1 < table.shapes.size() ? " \\\\\n" : "\n");
    }
    out << "\\end{tabular}\n";
    break;
  }
  case OutputFormat::Text: {
    std::size_t label = std::string("size").size();
    for (const auto &s : table.shapes)
      label = std::max(label, s.to_string().size());
    std::vector<std::size_t> widths;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
      std::size_t w = std::max(table.classes[c].to_string().size(),
                               table.class_sizes[c].str().size());
      for (const auto &row : table.values)
        w = std::max(w, std::to_string(row[c]).size());
      widths.push_back(w);
    }
    auto cell = [&](const std::string &s, std::size_t w) {
      out << "  " << std::string(w - s.size(), ' ') << s;
    };
    out << std::string(label, ' ') << " |";
    for (std::size_t c = 0; c < table.classes.size(); ++c)
      cell(table.classes[c].to_string(), widths[c]);
    out << "\n" << "size" << std::string(label - 4, ' ') << " |";
    for (std::size_t c = 0; c < table.classes.size(); ++c)
      cell(table.class_sizes[c].str(), widths[c]);
    std::size_t total = label + 2;
    for (auto w : widths)
      total += w + 2;
    out << "\n" << std::string(total, '-') << "\n";
    for (std::size_t r = 0; r < table.shapes.size(); ++r) {
      const auto name = table.shapes[r].to_string();
      out << name << std::string(label - name.size(), ' ') << " |";
      for (std::size_t c = 0; c < table.classes.size(); ++c)
        cell(std::to_string(table.values[r][c]), widths[c]);
      out << "\n";
    }
    break;
  }
  }
  return out.str();
}

std::string render_word(const Permutation &sigma, const GeneratorWord &word,
                        OutputFormat format) {
  std::ostringstream out;
  const auto length = word.letters.size();
  const int sgn = length % 2 == 0 ? 1 : -1;
  switch (format) {
  case OutputFormat::Json: {
    ordered_json doc;
    doc["n"] = sigma.degree();
    doc["perm"] = sigma.to_string();
    doc["letters"] = word.letters;
    doc["word"] = word.to_string();
    doc["length"] = length;
    doc["sign"] = sgn;
    out << doc.dump() << "\n";
    break;
  }
  case OutputFormat::Latex: {
    out << latex_perm(sigma) << " = ";
    if (word.letters.empty())
      out << "\\epsilon";
    for (int letter : word.letters)
      out << "(" << letter << "\\," << letter + 1 << ")";
    out << "\n";
    break;
  }
  case OutputFormat::Text:
    out << "perm: " << sigma.to_string() << "\n"
        << "word: " << word.to_string() << "\n"
        << "length: " << length << "\n"
        << "sign: " << sgn << "\n";
    break;
  }
  return out.str();
}

std::string render_report(const VerificationReport &report, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::Json) {
    ordered_json doc;
    doc["n"] = report.n;
    doc["oracle"] = report.with_oracle;
    auto checks = ordered_json::array();
    for (const auto &c : report.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    doc["checks"] = checks;
    doc["passed"] = report.all_passed();
    out << doc.dump() << "\n";
    return out.str();
  }
  std::size_t failed = 0;
  for (const auto &c : report.checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.passed) {
      ++failed;
      out << ": " << c.detail;
    }
    out << "\n";
  }
  out << report.checks.size() - failed << "/" << report.checks.size()
      << " checks passed for n = " << report.n
      << (report.with_oracle ? " (with oracle)" : "") << "\n";
  return out.str();
}

} // namespace youngrep::cli
