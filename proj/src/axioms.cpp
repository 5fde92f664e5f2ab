#include "qlat/axioms.hpp"

#include <algorithm>
#include <set>

#include "qlat/errors.hpp"
#include "qlat/state_property.hpp"

namespace qlat {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::completeness: return "completeness";
    case Axiom::orthocomplementation: return "orthocomplementation";
    case Axiom::state_determination: return "state-determination";
    case Axiom::atomicity: return "atomicity";
    case Axiom::covering_law: return "covering-law";
    case Axiom::weak_modularity: return "weak-modularity";
    case Axiom::ssr: return "ssr";
    case Axiom::classicality: return "classicality";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::error: return "error";
  }
  return "?";
}

namespace {

// Collects witnesses for one report; done() drives the early exit when only
// the first witness is wanted.
class Recorder {
 public:
  Recorder(Axiom axiom, const CheckOptions& opts) : opts_(opts) { report_.axiom = axiom; }

  void add(Witness w) {
    report_.verdict = Verdict::fail;
    report_.witnesses.push_back(std::move(w));
  }
  bool done() const { return report_.failed() && !opts_.all_witnesses; }

  AxiomReport error(std::string message) && {
    report_.verdict = Verdict::error;
    report_.witnesses.clear();
    report_.error = std::move(message);
    return std::move(report_);
  }
  AxiomReport take() && { return std::move(report_); }

 private:
  CheckOptions opts_;
  AxiomReport report_;
};

Witness witness(const FiniteOrtholattice& L, std::string kind, std::vector<int> indices,
                std::string detail = {}) {
  Witness w;
  w.kind = std::move(kind);
  w.indices = std::move(indices);
  for (int i : w.indices) w.labels.push_back(L.label(i));
  w.detail = std::move(detail);
  return w;
}

std::string pair_text(const FiniteOrtholattice& L, int a, int b) {
  return "(" + L.label(a) + ", " + L.label(b) + ")";
}

}  // namespace

AxiomReport verify_lattice(const FiniteOrtholattice& L, const CheckOptions& opts) {
  Recorder rec(Axiom::completeness, opts);
  const int n = L.size();

  for (int a = 0; a < n && !rec.done(); a++)
    if (!L.leq(a, a))
      rec.add(witness(L, "not-reflexive", {a}, L.label(a) + " is not below itself"));
  if (rec.done()) return std::move(rec).take();

  for (int a = 0; a < n && !rec.done(); a++)
    for (int b = a + 1; b < n && !rec.done(); b++)
      if (L.leq(a, b) && L.leq(b, a))
        rec.add(witness(L, "not-antisymmetric", {a, b},
                        pair_text(L, a, b) + " are mutually below each other"));
  if (rec.done()) return std::move(rec).take();

  for (int a = 0; a < n && !rec.done(); a++)
    for (int b = L.up[a].next_set(0); b >= 0 && !rec.done(); b = L.up[a].next_set(b + 1)) {
      if (L.up[b].is_subset_of(L.up[a])) continue;
      int c = L.up[b].andnot(L.up[a]).next_set(0);
      rec.add(witness(L, "not-transitive", {a, b, c},
                      L.label(a) + " <= " + L.label(b) + " <= " + L.label(c) +
                          " but the outer relation fails"));
    }
  if (rec.done()) return std::move(rec).take();

  for (int a = 0; a < n && !rec.done(); a++)
    for (int b = a; b < n && !rec.done(); b++) {
      if (!try_meet(L, a, b))
        rec.add(witness(L, "no-meet", {a, b},
                        pair_text(L, a, b) + " has no greatest lower bound"));
      if (rec.done()) break;
      if (!try_join(L, a, b))
        rec.add(witness(L, "no-join", {a, b},
                        pair_text(L, a, b) + " has no least upper bound"));
    }
  if (rec.done()) return std::move(rec).take();

  for (int x = 0; x < n && !rec.done(); x++)
    if (!L.leq(L.bottom, x))
      rec.add(witness(L, "bottom-not-least", {x},
                      "declared bottom " + L.label(L.bottom) + " is not below " + L.label(x)));
  if (rec.done()) return std::move(rec).take();

  for (int x = 0; x < n && !rec.done(); x++)
    if (!L.leq(x, L.top))
      rec.add(witness(L, "top-not-greatest", {x},
                      "declared top " + L.label(L.top) + " is not above " + L.label(x)));
  return std::move(rec).take();
}

AxiomReport check_orthocomplementation(const FiniteOrtholattice& L, const CheckOptions& opts) {
  if (!L.has_ortho())
    throw InputError("orthocomplementation check: no orthocomplement map declared");
  Recorder rec(Axiom::orthocomplementation, opts);
  const int n = L.size();

  for (int a = 0; a < n && !rec.done(); a++)
    if (L.ortho[L.ortho[a]] != a)
      rec.add(witness(L, "ortho-not-involutive", {a},
                      L.label(a) + "'' = " + L.label(L.ortho[L.ortho[a]])));
  if (rec.done()) return std::move(rec).take();

  for (int a = 0; a < n && !rec.done(); a++) {
    auto m = try_meet(L, a, L.ortho[a]);
    if (!m)
      return std::move(rec).error("meet of " + pair_text(L, a, L.ortho[a]) +
                                  " does not exist; run the completeness check");
    if (*m != L.bottom)
      rec.add(witness(L, "complement-meet-not-bottom", {a},
                      "meet(" + L.label(a) + ", " + L.label(L.ortho[a]) + ") = " + L.label(*m)));
  }
  if (rec.done()) return std::move(rec).take();

  for (int a = 0; a < n && !rec.done(); a++)
    for (int b = L.up[a].next_set(0); b >= 0 && !rec.done(); b = L.up[a].next_set(b + 1))
      if (!L.leq(L.ortho[b], L.ortho[a]))
        rec.add(witness(L, "ortho-not-order-reversing", {a, b},
                        L.label(a) + " <= " + L.label(b) + " but " + L.label(L.ortho[b]) +
                            " is not below " + L.label(L.ortho[a])));
  return std::move(rec).take();
}

AxiomReport check_atomic(const FiniteOrtholattice& L, const CheckOptions& opts) {
  Recorder rec(Axiom::atomicity, opts);
  Bits atom_mask(L.size());
  for (int t : atoms(L)) atom_mask.set(t);
  for (int x = 0; x < L.size() && !rec.done(); x++) {
    if (x == L.bottom) continue;
    if (!(atom_mask & L.down[x]).any())
      rec.add(witness(L, "no-atom-below", {x}, "no atom lies below " + L.label(x)));
  }
  return std::move(rec).take();
}

AxiomReport check_covering_law(const FiniteOrtholattice& L, const CheckOptions& opts) {
  Recorder rec(Axiom::covering_law, opts);
  const int n = L.size();
  for (int a : atoms(L)) {
    for (int b = 0; b < n && !rec.done(); b++) {
      auto m = try_meet(L, a, b);
      auto j = try_join(L, a, b);
      if (!m || !j)
        return std::move(rec).error("meet/join of " + pair_text(L, a, b) +
                                    " does not exist; run the completeness check");
      if (*m != L.bottom || *j == b) continue;
      // join(a, b) must cover b: nothing strictly between.
      Bits between = L.up[b] & L.down[*j];
      between.set(b, false);
      between.set(*j, false);
      int c = between.next_set(0);
      if (c >= 0)
        rec.add(witness(L, "covering-violated", {a, b, c},
                        "join(" + L.label(a) + ", " + L.label(b) + ") = " + L.label(*j) +
                            " does not cover " + L.label(b) + ": " + L.label(c) +
                            " lies strictly between"));
    }
    if (rec.done()) break;
  }
  return std::move(rec).take();
}

AxiomReport check_weak_modularity(const FiniteOrtholattice& L, const CheckOptions& opts) {
  if (!L.has_ortho())
    throw InputError("weak-modularity check: no orthocomplement map declared");
  Recorder rec(Axiom::weak_modularity, opts);
  const int n = L.size();
  for (int a = 0; a < n && !rec.done(); a++)
    for (int b = L.up[a].next_set(0); b >= 0 && !rec.done(); b = L.up[a].next_set(b + 1)) {
      auto j = try_join(L, a, L.ortho[b]);
      if (!j)
        return std::move(rec).error("join of " + pair_text(L, a, L.ortho[b]) +
                                    " does not exist; run the completeness check");
      auto m = try_meet(L, *j, b);
      if (!m)
        return std::move(rec).error("meet of " + pair_text(L, *j, b) +
                                    " does not exist; run the completeness check");
      if (*m != a)
        rec.add(witness(L, "weak-modularity-violated", {a, b},
                        "meet(join(" + L.label(a) + ", " + L.label(L.ortho[b]) + "), " +
                            L.label(b) + ") = " + L.label(*m) + ", expected " + L.label(a)));
    }
  return std::move(rec).take();
}

std::vector<int> sublattice_closure(const FiniteOrtholattice& L, const std::vector<int>& seeds) {
  Bits in(L.size());
  for (int s : seeds) {
    if (s < 0 || s >= L.size()) throw InputError("sublattice closure: element index out of range");
    in.set(s);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> members = in.indices();
    for (int x : members) {
      if (L.has_ortho() && !in.test(L.ortho[x])) { in.set(L.ortho[x]); grew = true; }
      for (int y : members) {
        auto m = try_meet(L, x, y);
        auto j = try_join(L, x, y);
        if (!m || !j)
          throw InputError("sublattice closure: meet/join of " + pair_text(L, x, y) +
                           " does not exist");
        if (!in.test(*m)) { in.set(*m); grew = true; }
        if (!in.test(*j)) { in.set(*j); grew = true; }
      }
    }
  }
  return in.indices();
}

AxiomReport check_boolean_sublattice(const FiniteOrtholattice& L, int a, int b,
                                     const CheckOptions& opts) {
  if (a < 0 || a >= L.size() || b < 0 || b >= L.size())
    throw InputError("boolean-sublattice check: element index out of range");
  if (!L.has_ortho())
    throw InputError("boolean-sublattice check: no orthocomplement map declared");
  if (!L.leq(a, b))
    throw InputError("boolean-sublattice check: " + L.label(a) + " is not below " + L.label(b));

  Recorder rec(Axiom::weak_modularity, opts);
  std::vector<int> sub = sublattice_closure(L, {a, b});
  std::string where = " in the sublattice generated by " + pair_text(L, a, b) + " (" +
                      std::to_string(sub.size()) + " elements)";

  for (int x : sub) {
    auto m = try_meet(L, x, L.ortho[x]);
    auto j = try_join(L, x, L.ortho[x]);
    if (!m || !j)
      return std::move(rec).error("meet/join of " + pair_text(L, x, L.ortho[x]) +
                                  " does not exist; run the completeness check");
    if (*m != L.bottom || *j != L.top)
      rec.add(witness(L, "complement-fails-in-sublattice", {x},
                      L.label(x) + " and its orthocomplement do not bound the lattice" + where));
    if (rec.done()) return std::move(rec).take();
  }

  for (int x : sub)
    for (int y : sub)
      for (int z : sub) {
        int lhs = meet(L, x, join(L, y, z));
        int rhs = join(L, meet(L, x, y), meet(L, x, z));
        if (lhs != rhs) {
          rec.add(witness(L, "not-distributive", {x, y, z},
                          "meet(" + L.label(x) + ", join(" + L.label(y) + ", " + L.label(z) +
                              ")) = " + L.label(lhs) + " but the meets join to " + L.label(rhs) +
                              where));
          if (rec.done()) return std::move(rec).take();
        }
      }
  return std::move(rec).take();
}

bool detect_ssr(const StatePropertySystem& S, int a, int b) {
  const FiniteOrtholattice& L = S.lattice;
  if (a < 0 || a >= L.size() || b < 0 || b >= L.size())
    throw InputError("superselection check: property index out of range");
  auto j = try_join(L, a, b);
  if (!j)
    throw InputError("superselection check: join of " + pair_text(L, a, b) + " does not exist");
  Bits offending = S.certain_yes[*j].andnot(S.certain_yes[a] | S.certain_yes[b]);
  return offending.none();
}

bool is_classical_property(const StatePropertySystem& S, int a) {
  if (a < 0 || a >= S.property_count())
    throw InputError("classicality check: property index out of range");
  return (S.certain_yes[a] | S.certain_no[a]) == Bits::full(S.state_count());
}

AxiomReport check_classicality(const StatePropertySystem& S, const CheckOptions& opts) {
  Recorder rec(Axiom::classicality, opts);
  for (int a = 0; a < S.property_count() && !rec.done(); a++) {
    if (is_classical_property(S, a)) continue;
    Bits undecided = (S.certain_yes[a] | S.certain_no[a]).complemented();
    for (int p = undecided.next_set(0); p >= 0 && !rec.done(); p = undecided.next_set(p + 1)) {
      Witness w;
      w.kind = "property-indeterminate";
      w.indices = {a, p};
      w.labels = {S.lattice.label(a), S.state_label(p)};
      w.detail = S.lattice.label(a) + " is neither certain-yes nor certain-no in state " +
                 S.state_label(p);
      rec.add(std::move(w));
    }
  }
  return std::move(rec).take();
}

AxiomReport check_state_determination(const StatePropertySystem& S, const CheckOptions& opts) {
  Recorder rec(Axiom::state_determination, opts);
  std::vector<Bits> images;
  images.reserve(S.state_count());
  for (int p = 0; p < S.state_count(); p++) images.push_back(cartan(S, p));
  for (int p = 0; p < S.state_count() && !rec.done(); p++)
    for (int q = p + 1; q < S.state_count() && !rec.done(); q++)
      if (images[p] == images[q]) {
        Witness w;
        w.kind = "states-indistinguishable";
        w.indices = {p, q};
        w.labels = {S.state_label(p), S.state_label(q)};
        w.detail = "states " + S.state_label(p) + " and " + S.state_label(q) +
                   " share the same set of actual properties";
        rec.add(std::move(w));
      }
  return std::move(rec).take();
}

AxiomReport check_atomicity(const StatePropertySystem& S, const CheckOptions& opts) {
  const FiniteOrtholattice& L = S.lattice;
  Recorder rec(Axiom::atomicity, opts);

  std::vector<int> ps(S.state_count());
  for (int p = 0; p < S.state_count(); p++) {
    auto e = try_property_state(S, p);
    if (!e)
      return std::move(rec).error("property state of " + S.state_label(p) +
                                  " does not exist; run the completeness check");
    ps[p] = *e;
  }

  for (int p = 0; p < S.state_count() && !rec.done(); p++)
    if (!is_atom(L, ps[p])) {
      Witness w;
      w.kind = "property-state-not-atom";
      w.indices = {p};
      w.labels = {S.state_label(p)};
      w.detail = "property state of " + S.state_label(p) + " is " + L.label(ps[p]) +
                 ", which is not an atom";
      rec.add(std::move(w));
    }
  if (rec.done()) return std::move(rec).take();

  for (int t : atoms(L)) {
    if (rec.done()) break;
    if (std::find(ps.begin(), ps.end(), t) == ps.end())
      rec.add(witness(L, "orphan-atom", {t},
                      "atom " + L.label(t) + " is not the property state of any state"));
  }
  return std::move(rec).take();
}

namespace {

template <class Fn>
AxiomReport guarded(Axiom axiom, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    AxiomReport r;
    r.axiom = axiom;
    r.verdict = Verdict::error;
    r.error = e.what();
    return r;
  }
}

}  // namespace

std::vector<AxiomReport> full_report(const FiniteOrtholattice& L, const CheckOptions& opts) {
  std::vector<AxiomReport> out;
  out.push_back(guarded(Axiom::completeness, [&] { return verify_lattice(L, opts); }));
  if (L.has_ortho())
    out.push_back(guarded(Axiom::orthocomplementation,
                          [&] { return check_orthocomplementation(L, opts); }));
  out.push_back(guarded(Axiom::atomicity, [&] { return check_atomic(L, opts); }));
  out.push_back(guarded(Axiom::covering_law, [&] { return check_covering_law(L, opts); }));
  if (L.has_ortho())
    out.push_back(guarded(Axiom::weak_modularity, [&] { return check_weak_modularity(L, opts); }));
  return out;
}

std::vector<AxiomReport> full_report(const StatePropertySystem& S, const CheckOptions& opts) {
  const FiniteOrtholattice& L = S.lattice;
  std::vector<AxiomReport> out;
  out.push_back(guarded(Axiom::completeness, [&] { return verify_lattice(L, opts); }));
  if (L.has_ortho())
    out.push_back(guarded(Axiom::orthocomplementation,
                          [&] { return check_orthocomplementation(L, opts); }));
  out.push_back(guarded(Axiom::state_determination,
                        [&] { return check_state_determination(S, opts); }));
  out.push_back(guarded(Axiom::atomicity, [&] { return check_atomicity(S, opts); }));
  out.push_back(guarded(Axiom::covering_law, [&] { return check_covering_law(L, opts); }));
  if (L.has_ortho())
    out.push_back(guarded(Axiom::weak_modularity, [&] { return check_weak_modularity(L, opts); }));
  return out;
}

// ---- witness replay -------------------------------------------------------

namespace {

// Re-evaluates the defining condition named by w.kind. S may be null for
// purely lattice-level witnesses.
bool replay_one(const FiniteOrtholattice& L, const StatePropertySystem* S, const Witness& w) {
  const auto& ix = w.indices;
  auto arity = [&](size_t k) { return ix.size() == k; };
  auto in_lattice = [&](int i) { return i >= 0 && i < L.size(); };
  for (int i : ix)
    if (i < 0) return false;

  if (w.kind == "not-reflexive")
    return arity(1) && in_lattice(ix[0]) && !L.leq(ix[0], ix[0]);
  if (w.kind == "not-antisymmetric")
    return arity(2) && in_lattice(ix[0]) && in_lattice(ix[1]) && ix[0] != ix[1] &&
           L.leq(ix[0], ix[1]) && L.leq(ix[1], ix[0]);
  if (w.kind == "not-transitive")
    return arity(3) && in_lattice(ix[0]) && in_lattice(ix[1]) && in_lattice(ix[2]) &&
           L.leq(ix[0], ix[1]) && L.leq(ix[1], ix[2]) && !L.leq(ix[0], ix[2]);
  if (w.kind == "no-meet")
    return arity(2) && in_lattice(ix[0]) && in_lattice(ix[1]) && !try_meet(L, ix[0], ix[1]);
  if (w.kind == "no-join")
    return arity(2) && in_lattice(ix[0]) && in_lattice(ix[1]) && !try_join(L, ix[0], ix[1]);
  if (w.kind == "bottom-not-least")
    return arity(1) && in_lattice(ix[0]) && !L.leq(L.bottom, ix[0]);
  if (w.kind == "top-not-greatest")
    return arity(1) && in_lattice(ix[0]) && !L.leq(ix[0], L.top);

  if (w.kind == "ortho-not-involutive")
    return arity(1) && in_lattice(ix[0]) && L.has_ortho() && L.ortho[L.ortho[ix[0]]] != ix[0];
  if (w.kind == "complement-meet-not-bottom") {
    if (!arity(1) || !in_lattice(ix[0]) || !L.has_ortho()) return false;
    auto m = try_meet(L, ix[0], L.ortho[ix[0]]);
    return m && *m != L.bottom;
  }
  if (w.kind == "ortho-not-order-reversing")
    return arity(2) && in_lattice(ix[0]) && in_lattice(ix[1]) && L.has_ortho() &&
           L.leq(ix[0], ix[1]) && !L.leq(L.ortho[ix[1]], L.ortho[ix[0]]);

  if (w.kind == "no-atom-below") {
    if (!arity(1) || !in_lattice(ix[0]) || ix[0] == L.bottom) return false;
    for (int t : atoms(L))
      if (L.leq(t, ix[0])) return false;
    return true;
  }
  if (w.kind == "covering-violated") {
    if (!arity(3)) return false;
    for (int i : ix)
      if (!in_lattice(i)) return false;
    auto [a, b, c] = std::tuple(ix[0], ix[1], ix[2]);
    auto m = try_meet(L, a, b);
    auto j = try_join(L, a, b);
    return is_atom(L, a) && m && *m == L.bottom && j && *j != b && c != b && c != *j &&
           L.leq(b, c) && L.leq(c, *j);
  }
  if (w.kind == "weak-modularity-violated") {
    if (!arity(2) || !in_lattice(ix[0]) || !in_lattice(ix[1]) || !L.has_ortho()) return false;
    if (!L.leq(ix[0], ix[1])) return false;
    auto j = try_join(L, ix[0], L.ortho[ix[1]]);
    if (!j) return false;
    auto m = try_meet(L, *j, ix[1]);
    return m && *m != ix[0];
  }
  if (w.kind == "complement-fails-in-sublattice") {
    if (!arity(1) || !in_lattice(ix[0]) || !L.has_ortho()) return false;
    auto m = try_meet(L, ix[0], L.ortho[ix[0]]);
    auto j = try_join(L, ix[0], L.ortho[ix[0]]);
    return m && j && (*m != L.bottom || *j != L.top);
  }
  if (w.kind == "not-distributive") {
    if (!arity(3)) return false;
    for (int i : ix)
      if (!in_lattice(i)) return false;
    return meet(L, ix[0], join(L, ix[1], ix[2])) !=
           join(L, meet(L, ix[0], ix[1]), meet(L, ix[0], ix[2]));
  }

  if (!S) return false;
  auto in_states = [&](int i) { return i >= 0 && i < S->state_count(); };

  if (w.kind == "states-indistinguishable")
    return arity(2) && in_states(ix[0]) && in_states(ix[1]) && ix[0] != ix[1] &&
           cartan(*S, ix[0]) == cartan(*S, ix[1]);
  if (w.kind == "property-state-not-atom") {
    if (!arity(1) || !in_states(ix[0])) return false;
    auto ps = try_property_state(*S, ix[0]);
    return ps && !is_atom(L, *ps);
  }
  if (w.kind == "orphan-atom") {
    if (!arity(1) || !in_lattice(ix[0]) || !is_atom(L, ix[0])) return false;
    for (int p = 0; p < S->state_count(); p++)
      if (try_property_state(*S, p) == std::optional<int>(ix[0])) return false;
    return true;
  }
  if (w.kind == "property-indeterminate")
    return arity(2) && in_lattice(ix[0]) && in_states(ix[1]) &&
           S->indeterminate(ix[1], ix[0]);
  if (w.kind == "nonorthogonal-ssr-pair") {
    if (!arity(2) || !in_lattice(ix[0]) || !in_lattice(ix[1]) || ix[0] == ix[1]) return false;
    return is_atom(L, ix[0]) && is_atom(L, ix[1]) && detect_ssr(*S, ix[0], ix[1]) &&
           !property_orthogonal(*S, ix[0], ix[1]);
  }
  if (w.kind == "two-point-plane") {
    if (!arity(2) || !in_lattice(ix[0]) || !in_lattice(ix[1]) || ix[0] == ix[1]) return false;
    if (!is_atom(L, ix[0]) || !is_atom(L, ix[1])) return false;
    if (property_orthogonal(*S, ix[0], ix[1])) return false;
    auto j = try_join(L, ix[0], ix[1]);
    if (!j) return false;
    int atoms_below = 0;
    for (int t : atoms(L))
      if (L.leq(t, *j)) atoms_below++;
    return atoms_below == 2;
  }
  return false;
}

bool replay_report(const FiniteOrtholattice& L, const StatePropertySystem* S,
                   const AxiomReport& report) {
  if (report.verdict == Verdict::fail && report.witnesses.empty()) return false;
  if (report.verdict != Verdict::fail && !report.witnesses.empty()) return false;
  for (const Witness& w : report.witnesses)
    if (!replay_one(L, S, w)) return false;
  return true;
}

}  // namespace

bool replay_witness(const FiniteOrtholattice& L, const AxiomReport& report) {
  return replay_report(L, nullptr, report);
}

bool replay_witness(const StatePropertySystem& S, const AxiomReport& report) {
  return replay_report(S.lattice, &S, report);
}

}  // namespace qlat
