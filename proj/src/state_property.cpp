#include "qlat/state_property.hpp"

#include <algorithm>
#include <set>

#include "qlat/errors.hpp"

namespace qlat {

StatePropertySystem StatePropertySystem::make(
    std::vector<std::string> state_labels, FiniteOrtholattice lattice,
    const std::vector<std::tuple<int, int, bool>>& actuality,
    const std::vector<std::pair<int, int>>& state_ortho_pairs) {
  if (state_labels.empty()) throw InputError("state-property system: no states");
  {
    std::set<std::string> seen;
    for (const auto& s : state_labels) {
      if (s.empty()) throw InputError("state-property system: empty state label");
      if (!seen.insert(s).second)
        throw InputError("state-property system: duplicate state label \"" + s + "\"");
    }
  }

  StatePropertySystem S;
  S.state_labels = std::move(state_labels);
  S.lattice = std::move(lattice);
  const int ns = S.state_count();
  const int np = S.property_count();
  S.certain_yes.assign(np, Bits(ns));
  S.certain_no.assign(np, Bits(ns));
  S.state_ortho.assign(ns, Bits(ns));

  for (const auto& [st, prop, value] : actuality) {
    if (st < 0 || st >= ns)
      throw InputError("actuality entry: state index " + std::to_string(st) + " out of range");
    if (prop < 0 || prop >= np)
      throw InputError("actuality entry: property index " + std::to_string(prop) +
                       " out of range");
    (value ? S.certain_yes : S.certain_no)[prop].set(st);
  }
  for (int a = 0; a < np; a++) {
    Bits both = S.certain_yes[a] & S.certain_no[a];
    int st = both.next_set(0);
    if (st >= 0)
      throw InputError("property " + S.lattice.label(a) + " is declared both certain-yes and "
                       "certain-no in state " + S.state_label(st));
  }

  if (S.certain_yes[S.lattice.bottom].any()) {
    int st = S.certain_yes[S.lattice.bottom].next_set(0);
    throw InputError("bottom property must never be actual, but it is in state " +
                     S.state_label(st));
  }
  if (S.certain_yes[S.lattice.top] != Bits::full(ns)) {
    int st = S.certain_yes[S.lattice.top].complemented().next_set(0);
    throw InputError("top property must be actual in every state, but it is not in state " +
                     S.state_label(st));
  }
  for (int a = 0; a < np; a++)
    for (int b = S.lattice.up[a].next_set(0); b >= 0; b = S.lattice.up[a].next_set(b + 1)) {
      if (S.certain_yes[a].is_subset_of(S.certain_yes[b])) continue;
      int st = S.certain_yes[a].andnot(S.certain_yes[b]).next_set(0);
      throw InputError("actuality is not upward closed: " + S.lattice.label(a) + " <= " +
                       S.lattice.label(b) + " but only the former is actual in state " +
                       S.state_label(st));
    }

  for (auto [p, q] : state_ortho_pairs) {
    if (p < 0 || p >= ns || q < 0 || q >= ns)
      throw InputError("state orthogonality: state index out of range");
    if (p == q)
      throw InputError("state orthogonality must be irreflexive; got (" + S.state_label(p) +
                       ", " + S.state_label(q) + ")");
    S.state_ortho[p].set(q);
    S.state_ortho[q].set(p);
  }
  return S;
}

Bits cartan(const StatePropertySystem& S, int p) {
  if (p < 0 || p >= S.state_count()) throw InputError("cartan: state index out of range");
  Bits out(S.property_count());
  for (int a = 0; a < S.property_count(); a++)
    if (S.certain_yes[a].test(p)) out.set(a);
  return out;
}

std::optional<int> try_property_state(const StatePropertySystem& S, int p) {
  return infimum(S.lattice, cartan(S, p));
}

int property_state(const StatePropertySystem& S, int p) {
  auto e = try_property_state(S, p);
  if (!e)
    throw InputError("property state of " + S.state_label(p) +
                     " does not exist; run the completeness check");
  return *e;
}

bool is_superposition(const StatePropertySystem& S, int r, int p, int q) {
  return (cartan(S, p) & cartan(S, q)).is_subset_of(cartan(S, r));
}

bool property_orthogonal(const StatePropertySystem& S, int a, int b) {
  if (a < 0 || a >= S.property_count() || b < 0 || b >= S.property_count())
    throw InputError("property orthogonality: property index out of range");
  const Bits& pa = S.certain_yes[a];
  const Bits& pb = S.certain_yes[b];
  for (int p = pa.next_set(0); p >= 0; p = pa.next_set(p + 1))
    if (!pb.is_subset_of(S.state_ortho[p])) return false;
  return true;
}

bool state_property_orthogonal(const StatePropertySystem& S, int p, int a) {
  if (p < 0 || p >= S.state_count()) throw InputError("state index out of range");
  if (a < 0 || a >= S.property_count()) throw InputError("property index out of range");
  return S.certain_yes[a].is_subset_of(S.state_ortho[p]);
}

PropertySemantics product_semantics(const std::vector<PropertySemantics>& components) {
  if (components.empty()) throw InputError("product test needs at least one component");
  PropertySemantics out = components.front();
  for (size_t i = 1; i < components.size(); i++) {
    if (components[i].yes.size() != out.yes.size())
      throw InputError("product test components disagree on the state count");
    out.yes &= components[i].yes;
    out.no &= components[i].no;
  }
  return out;
}

PropertySemantics inverse_semantics(const PropertySemantics& s) { return {s.no, s.yes}; }

Bits ClosureSystem::closure(const Bits& x) const {
  Bits acc = Bits::full(ground_size);
  for (const Bits& c : closed)
    if (x.is_subset_of(c)) acc &= c;
  return acc;
}

int ClosureSystem::index_of(const Bits& x) const {
  auto it = std::lower_bound(closed.begin(), closed.end(), x, &Bits::canon_less);
  if (it != closed.end() && *it == x) return (int)(it - closed.begin());
  return -1;
}

ClosureSystem closure_from_sets(int ground_size, const std::vector<Bits>& generators,
                                int max_family) {
  for (const Bits& g : generators)
    if (g.size() != ground_size)
      throw InputError("closure system: generator does not match the ground set size");

  std::set<Bits, bool (*)(const Bits&, const Bits&)> family(&Bits::canon_less);
  std::vector<Bits> fresh;
  auto push = [&](const Bits& x) {
    if (family.insert(x).second) {
      fresh.push_back(x);
      if ((int)family.size() > max_family)
        throw InputError("closure system exceeds the cap of " + std::to_string(max_family) +
                         " members");
    }
  };

  push(Bits::full(ground_size));
  for (const Bits& g : generators) push(g);

  while (!fresh.empty()) {
    Bits x = std::move(fresh.back());
    fresh.pop_back();
    // snapshot: iterating the set while push() inserts would invalidate nothing
    // for std::set, but new members must also be intersected with x eventually;
    // they enter `fresh` and get their own pass.
    std::vector<Bits> members(family.begin(), family.end());
    for (const Bits& y : members) push(x & y);
  }

  ClosureSystem out;
  out.ground_size = ground_size;
  out.closed.assign(family.begin(), family.end());
  return out;
}

ClosureSystem closure_from_actuality(const StatePropertySystem& S,
                                     const std::vector<std::vector<int>>& generators,
                                     int max_family) {
  std::vector<Bits> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    Bits b(S.state_count());
    for (int st : g) {
      if (st < 0 || st >= S.state_count())
        throw InputError("closure system: generator references unknown state index " +
                         std::to_string(st));
      b.set(st);
    }
    gens.push_back(std::move(b));
  }
  return closure_from_sets(S.state_count(), gens, max_family);
}

}  // namespace qlat
