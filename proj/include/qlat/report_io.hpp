#pragma once
// Rendering of checker reports and demo results for the command-line tool.
// Both formats are byte-deterministic: text for terminals, JSON for scripts.
// The exact demo probabilities are printed as rational strings ("1/2"), the
// floating-point correlation numbers with %.12g.

#include <string>
#include <utility>
#include <vector>

#include "qlat/report.hpp"
#include "qlat/separated.hpp"

namespace qlat {

enum class OutputFormat { text, json };

// Leading key/value lines identifying what was checked (kind, sizes, ...).
using ReportFacts = std::vector<std::pair<std::string, std::string>>;

// A named supplementary check, rendered apart from the axioms because it
// never affects the exit code.
using Diagnostic = std::pair<std::string, AxiomReport>;

// True when any report in the list is fail or error — the exit-1 condition.
bool any_axiom_failure(const std::vector<AxiomReport>& axioms);

std::string check_output(const ReportFacts& facts, const std::vector<AxiomReport>& axioms,
                         const std::vector<Diagnostic>& diagnostics, OutputFormat format);

std::string epr_output(const EprReport<GaussRat>& report, OutputFormat format);

struct ChshResult {
  double a = 0, a_prime = 0, b = 0, b_prime = 0;       // analyzer angles
  double e_ab = 0, e_ab_prime = 0, e_a_prime_b = 0, e_a_prime_b_prime = 0;
  double value = 0;  // E(a,b) + E(a,b') + E(a',b) - E(a',b')
};

std::string chsh_output(const ChshResult& result, OutputFormat format);

// Shortest %.12g rendering, shared by both formats.
std::string format_double(double x);

}  // namespace qlat
