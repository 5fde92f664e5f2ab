#pragma once
// Operational layer: finite state-property systems.
//
// A system couples a finite set of states with a property lattice through an
// actuality table. Per property the table is a triple of state sets — certain
// yes, certain no, indeterminate (the remainder) — and "a actual in p" means
// p lies in the certain-yes set of a. State orthogonality is an extra
// symmetric irreflexive relation used by the orthogonality checks and by the
// separated-product construction.

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qlat/bits.hpp"
#include "qlat/lattice.hpp"
#include "qlat/report.hpp"

namespace qlat {

struct StatePropertySystem {
  std::vector<std::string> state_labels;
  FiniteOrtholattice lattice;
  std::vector<Bits> certain_yes;  // per property, set of states (certainly yes)
  std::vector<Bits> certain_no;   // per property, set of states (certainly no)
  std::vector<Bits> state_ortho;  // symmetric irreflexive relation, row per state

  int state_count() const { return (int)state_labels.size(); }
  int property_count() const { return lattice.size(); }
  bool actual(int state, int property) const { return certain_yes[property].test(state); }
  bool excluded(int state, int property) const { return certain_no[property].test(state); }
  bool indeterminate(int state, int property) const {
    return !actual(state, property) && !excluded(state, property);
  }
  bool states_orthogonal(int p, int q) const { return state_ortho[p].test(q); }
  const std::string& state_label(int i) const { return state_labels[i]; }

  // Validating constructor. actuality lists (state, property, value) triples,
  // value true = certain yes, false = certain no; anything unlisted is
  // indeterminate. Rejected inputs: duplicate/empty labels, out-of-range
  // indices, contradictory triples, a bottom with a nonempty yes set, a top
  // that is not certain-yes everywhere, actuality not upward closed along the
  // lattice order, and a state_ortho relation that is not irreflexive.
  static StatePropertySystem make(std::vector<std::string> state_labels, FiniteOrtholattice lattice,
                                  const std::vector<std::tuple<int, int, bool>>& actuality,
                                  const std::vector<std::pair<int, int>>& state_ortho_pairs);
};

// Set of properties actual in state p (the Cartan image of p), as a bitset
// over property indices. Always contains top, never bottom.
Bits cartan(const StatePropertySystem& S, int p);

// Meet of all properties actual in p. The optional form returns nullopt when
// the lattice lacks the needed infimum; the plain form throws InputError then.
std::optional<int> try_property_state(const StatePropertySystem& S, int p);
int property_state(const StatePropertySystem& S, int p);

// Axiom 3: distinct states have distinct Cartan sets.
AxiomReport check_state_determination(const StatePropertySystem& S, const CheckOptions& opts = {});

// Axiom 4: every property state is an atom, and every atom is the property
// state of some state.
AxiomReport check_atomicity(const StatePropertySystem& S, const CheckOptions& opts = {});

// r is a superposition of p and q: every property actual in both p and q is
// actual in r.
bool is_superposition(const StatePropertySystem& S, int r, int p, int q);

// Properties a, b are orthogonal when every state making a actual is
// orthogonal to every state making b actual; the state-property form fixes
// one side to a single state.
bool property_orthogonal(const StatePropertySystem& S, int a, int b);
bool state_property_orthogonal(const StatePropertySystem& S, int p, int a);

// ---- yes-no measurement semantics -------------------------------------

// The per-property triple in isolation: yes/no state sets of one test.
struct PropertySemantics {
  Bits yes;
  Bits no;
};

// Product test (free choice among the component tests): yes is certain iff
// yes is certain for every component, and no is certain iff no is certain for
// every component — any state where the components disagree is indeterminate.
PropertySemantics product_semantics(const std::vector<PropertySemantics>& components);

// Inverse test: swap the roles of the yes and no outcomes.
PropertySemantics inverse_semantics(const PropertySemantics& s);

// ---- closure systems ----------------------------------------------------

// Intersection-closed family over a fixed ground set. The family always
// contains the ground set and is sorted canonically (cardinality, then
// lowest-differing-index), so equal families compare equal.
struct ClosureSystem {
  int ground_size = 0;
  std::vector<Bits> closed;

  // Smallest member containing x.
  Bits closure(const Bits& x) const;
  // Index of a member, -1 if not closed.
  int index_of(const Bits& x) const;
};

// Fixpoint of pairwise intersections over the generators plus the ground set.
// Throws InputError when the family would exceed max_family.
ClosureSystem closure_from_sets(int ground_size, const std::vector<Bits>& generators,
                                int max_family = kDefaultMaxElements);

// Same, with generators given as state-index lists validated against S.
ClosureSystem closure_from_actuality(const StatePropertySystem& S,
                                     const std::vector<std::vector<int>>& generators,
                                     int max_family = kDefaultMaxElements);

}  // namespace qlat
