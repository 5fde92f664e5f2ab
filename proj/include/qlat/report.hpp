#pragma once
// Checker report types. Pure data; the checkers live in axioms.hpp and the
// rendering in report_io.hpp.

#include <string>
#include <vector>

namespace qlat {

enum class Axiom {
  completeness,          // 1: the order is a complete lattice
  orthocomplementation,  // 2
  state_determination,   // 3
  atomicity,             // 4
  covering_law,          // 5
  weak_modularity,       // 6
  ssr,                   // superselection diagnostic
  classicality,          // supplementary: every property decided in every state
};

enum class Verdict { pass, fail, error };

const char* axiom_name(Axiom a);
const char* verdict_name(Verdict v);

// One concrete violation. `kind` is a machine-readable tag naming the exact
// defining condition that broke, so the violation can be replayed; `indices`
// are the element/state indices the condition was evaluated at.
struct Witness {
  std::string kind;
  std::vector<int> indices;
  std::vector<std::string> labels;  // same arity as indices, presentation only
  std::string detail;
};

struct AxiomReport {
  Axiom axiom = Axiom::completeness;
  Verdict verdict = Verdict::pass;
  std::vector<Witness> witnesses;  // nonempty exactly when verdict == fail;
                                   // front() is the first violation in scan order
  std::string error;               // nonempty exactly when verdict == error

  bool failed() const { return verdict == Verdict::fail; }
};

// Options shared by the checkers. all_witnesses enumerates every violation
// instead of stopping at the first.
struct CheckOptions {
  bool all_witnesses = false;
};

}  // namespace qlat
