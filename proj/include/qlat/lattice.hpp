#pragma once
// Finite bounded posets with an optional orthocomplement candidate map.
//
// The order is stored densely both ways (up-sets and down-sets) so meets,
// joins and subset infima reduce to bitset scans. Element identity is index
// identity; labels are presentation only. Nothing here assumes the order is
// actually a lattice — that is what verify_lattice (axioms.hpp) decides.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlat/bits.hpp"
#include "qlat/errors.hpp"

namespace qlat {

inline constexpr int kDefaultMaxElements = 4096;

struct FiniteOrtholattice {
  std::vector<std::string> labels;
  std::vector<Bits> up;    // up[a].test(b)  == (a <= b)
  std::vector<Bits> down;  // down[b].test(a) == (a <= b)
  std::vector<int> ortho;  // candidate orthocomplement map; empty when absent
  int bottom = 0;
  int top = 0;

  int size() const { return (int)labels.size(); }
  bool leq(int a, int b) const { return up[a].test(b); }
  bool has_ortho() const { return !ortho.empty(); }
  const std::string& label(int i) const { return labels[i]; }

  // Builds from an explicit relation given as (a, b) pairs meaning a <= b.
  // Validates shape only: label uniqueness, index ranges, ortho given as a
  // total map, bottom/top in range, size cap. Order properties (reflexivity,
  // antisymmetry, existence of meets/joins) and ortho involution are checked
  // by verify_lattice / check_orthocomplementation, not here — a relation
  // that breaks them must be constructible so the checkers can report it.
  static FiniteOrtholattice make(std::vector<std::string> labels,
                                 const std::vector<std::pair<int, int>>& leq_pairs,
                                 const std::vector<std::pair<int, int>>& ortho_pairs,
                                 int bottom, int top,
                                 int max_elements = kDefaultMaxElements);

  // Same, with the relation already in row form.
  static FiniteOrtholattice from_rows(std::vector<std::string> labels, std::vector<Bits> up_rows,
                                      std::vector<int> ortho_map, int bottom, int top,
                                      int max_elements = kDefaultMaxElements);
};

// Greatest / least element of an explicit subset, when one exists.
std::optional<int> greatest_of(const FiniteOrtholattice& L, const Bits& subset);
std::optional<int> least_of(const FiniteOrtholattice& L, const Bits& subset);

// Infimum of an arbitrary subset: the greatest element of the set of common
// lower bounds. supremum dually. Empty subset: infimum = top, supremum = bottom.
std::optional<int> infimum(const FiniteOrtholattice& L, const Bits& subset);
std::optional<int> supremum(const FiniteOrtholattice& L, const Bits& subset);

// Binary meet = greatest lower bound. Binary join is computed as the infimum
// of the set of upper bounds (the conjunction-of-upper-bounds construction),
// which in a complete lattice coincides with the least upper bound.
std::optional<int> try_meet(const FiniteOrtholattice& L, int a, int b);
std::optional<int> try_join(const FiniteOrtholattice& L, int a, int b);

// Throwing forms for contexts where existence is already established.
int meet(const FiniteOrtholattice& L, int a, int b);
int join(const FiniteOrtholattice& L, int a, int b);

// Elements whose only strict lower bound is bottom.
std::vector<int> atoms(const FiniteOrtholattice& L);
bool is_atom(const FiniteOrtholattice& L, int x);

// True when b covers a: a < b with nothing strictly between.
bool covers(const FiniteOrtholattice& L, int a, int b);

}  // namespace qlat
