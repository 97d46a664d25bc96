#pragma once

#include <string>
#include <string_view>

#include "youngrep/characters.hpp"
#include "youngrep/matrix.hpp"
#include "youngrep/perm.hpp"
#include "youngrep/specht.hpp"
#include "youngrep/verify.hpp"

namespace youngrep::cli {

enum class OutputFormat { Text, Json, Latex };

OutputFormat parse_output_format(std::string_view text);

std::string render_matrix(const StandardBasis &basis, const Permutation &sigma,
                          const IntegerMatrix &m, OutputFormat format);

std::string render_straighten(const Tableau &t, const StandardBasis &basis,
                              const PolytabloidExpansion &expansion,
                              const std::vector<GarnirStep> &trace, OutputFormat format);

std::string render_character_table(const CharacterTable &table, OutputFormat format);

std::string render_word(const Permutation &sigma, const GeneratorWord &word,
                        OutputFormat format);

std::string render_report(const VerificationReport &report, OutputFormat format);

/// LaTeX bmatrix body for m.
std::string latex_matrix(const IntegerMatrix &m);
/// Rows of braced entries: "{1}{3}{4} \\ {2}".
std::string latex_tableau(const Tableau &t);

} // namespace youngrep::cli
