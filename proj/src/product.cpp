#include "qlat/product.hpp"

#include <string>

#include "qlat/axioms.hpp"
#include "qlat/errors.hpp"
#include "qlat/lattice.hpp"

namespace qlat {

namespace {

// Orthogonal set of F: the states orthogonal to every member of F.
Bits perp_of(const Bits& f, const std::vector<Bits>& ortho_rows, int n) {
  Bits out = Bits(n).complemented();  // full ground set
  for (int s = f.next_set(0); s >= 0; s = f.next_set(s + 1)) out &= ortho_rows[s];
  return out;
}

}  // namespace

SeparatedProductSystem build_separated_product(const StatePropertySystem& s1,
                                               const StatePropertySystem& s2,
                                               const SeparatedProductOptions& options) {
  const long long n1 = s1.state_count(), n2 = s2.state_count();
  const long long n_states = n1 * n2;
  if (n_states > 64)
    throw InputError("separated product supports at most 64 product states, got " +
                     std::to_string(n_states));
  const int n = static_cast<int>(n_states);

  SeparatedProductSystem sp;
  sp.n1 = static_cast<int>(n1);
  sp.n2 = static_cast<int>(n2);

  std::vector<std::string> state_labels;
  state_labels.reserve(n);
  sp.pair_of_state.reserve(n);
  for (int p = 0; p < n1; ++p)
    for (int q = 0; q < n2; ++q) {
      state_labels.push_back("(" + s1.state_label(p) + "," + s2.state_label(q) + ")");
      sp.pair_of_state.emplace_back(p, q);
    }
  auto flat = [&](int p, int q) { return p * static_cast<int>(n2) + q; };

  // componentwise orthogonality
  std::vector<Bits> ortho_rows(n, Bits(n));
  std::vector<std::pair<int, int>> ortho_pairs;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      auto [p, q] = sp.pair_of_state[s];
      auto [p2, q2] = sp.pair_of_state[t];
      if (s1.states_orthogonal(p, p2) || s2.states_orthogonal(q, q2)) {
        ortho_rows[s].set(t);
        ortho_rows[t].set(s);
        ortho_pairs.emplace_back(s, t);
      }
    }

  // generators: rectangles and crosses of the factors' actuality sets
  auto rectangle = [&](const Bits& a_states, const Bits& b_states) {
    Bits r(n);
    for (int p = a_states.next_set(0); p >= 0; p = a_states.next_set(p + 1))
      for (int q = b_states.next_set(0); q >= 0; q = b_states.next_set(q + 1)) r.set(flat(p, q));
    return r;
  };
  const Bits all1 = Bits(static_cast<int>(n1)).complemented();
  const Bits all2 = Bits(static_cast<int>(n2)).complemented();
  auto cross = [&](const Bits& a_states, const Bits& b_states) {
    return rectangle(a_states, all2) | rectangle(all1, b_states);
  };
  std::vector<Bits> gens;
  for (int a = 0; a < s1.property_count(); ++a)
    for (int b = 0; b < s2.property_count(); ++b) {
      gens.push_back(rectangle(s1.certain_yes[a], s2.certain_yes[b]));
      gens.push_back(cross(s1.certain_yes[a], s2.certain_yes[b]));
      if (options.extended_generators) {
        gens.push_back(rectangle(s1.certain_no[a], s2.certain_no[b]));
        gens.push_back(cross(s1.certain_no[a], s2.certain_no[b]));
      }
    }

  // intersection closure, then orthogonal-set fixpoint
  ClosureSystem fam = closure_from_sets(n, gens, options.max_family);
  for (;;) {
    std::vector<Bits> extended = fam.closed;
    bool grew = false;
    for (const Bits& f : fam.closed) {
      Bits perp = perp_of(f, ortho_rows, n);
      if (fam.index_of(perp) < 0) {
        extended.push_back(perp);
        grew = true;
      }
    }
    if (!grew) break;
    fam = closure_from_sets(n, extended, options.max_family);
  }

  // the induced ortholattice: inclusion order, orthogonal-set complement
  const int m = static_cast<int>(fam.closed.size());
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = "F" + std::to_string(i);
  std::vector<Bits> up(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (fam.closed[i].is_subset_of(fam.closed[j])) up[i].set(j);
  std::vector<int> omap(m, -1);
  for (int i = 0; i < m; ++i) omap[i] = fam.index_of(perp_of(fam.closed[i], ortho_rows, n));
  const int bottom = fam.index_of(Bits(n));
  const int top = fam.index_of(Bits(n).complemented());
  if (bottom < 0 || top < 0)
    throw InputError("separated product family lacks a bottom or top member");
  FiniteOrtholattice lattice = FiniteOrtholattice::from_rows(
      std::move(labels), std::move(up), std::move(omap), bottom, top,
      std::max(options.max_family, m));

  // actuality: yes inside the member, no inside its orthogonal set
  std::vector<std::tuple<int, int, bool>> actuality;
  for (int i = 0; i < m; ++i) {
    const Bits& f = fam.closed[i];
    Bits no = perp_of(f, ortho_rows, n);
    for (int s = f.next_set(0); s >= 0; s = f.next_set(s + 1)) actuality.emplace_back(s, i, true);
    for (int s = no.next_set(0); s >= 0; s = no.next_set(s + 1))
      actuality.emplace_back(s, i, false);
  }

  sp.sps = StatePropertySystem::make(std::move(state_labels), std::move(lattice), actuality,
                                     ortho_pairs);
  sp.family = std::move(fam);
  return sp;
}

AtomJoin join_of_product_atoms(const SeparatedProductSystem& sp, std::pair<int, int> s,
                               std::pair<int, int> t) {
  for (auto [p, q] : {s, t})
    if (p < 0 || p >= sp.n1 || q < 0 || q >= sp.n2)
      throw InputError("unknown product state (" + std::to_string(p) + ", " + std::to_string(q) +
                       ")");
  const int n = sp.n1 * sp.n2;
  Bits bs(n), bt(n);
  bs.set(s.first * sp.n2 + s.second);
  bt.set(t.first * sp.n2 + t.second);

  AtomJoin out;
  Bits cs = sp.family.closure(bs), ct = sp.family.closure(bt);
  out.first_element = sp.family.index_of(cs);
  out.second_element = sp.family.index_of(ct);
  Bits joined = sp.family.closure(cs | ct);
  out.join_element = sp.family.index_of(joined);
  out.member_states = joined.indices();
  for (int atom : atoms(sp.sps.lattice))
    if (sp.sps.lattice.leq(atom, out.join_element)) out.atom_count++;
  out.two_point = (cs != ct) && out.atom_count == 2;
  return out;
}

AxiomReport ssr_diagnostic(const StatePropertySystem& S, const CheckOptions& opts) {
  AxiomReport rep;
  rep.axiom = Axiom::ssr;
  rep.verdict = Verdict::pass;
  std::vector<int> at = atoms(S.lattice);
  for (size_t i = 0; i < at.size() && (opts.all_witnesses || rep.witnesses.empty()); ++i)
    for (size_t j = i + 1; j < at.size(); ++j) {
      int a = at[i], b = at[j];
      if (!detect_ssr(S, a, b) || property_orthogonal(S, a, b)) continue;
      Witness w;
      w.kind = "nonorthogonal-ssr-pair";
      w.indices = {a, b};
      w.labels = {S.lattice.label(a), S.lattice.label(b)};
      w.detail = "the join of these atoms is actual only when one of them is, "
                 "yet they are not orthogonal";
      rep.witnesses.push_back(std::move(w));
      if (!opts.all_witnesses) break;
    }
  if (!rep.witnesses.empty()) rep.verdict = Verdict::fail;
  return rep;
}

AxiomReport three_points_per_line_check(const StatePropertySystem& S, const CheckOptions& opts) {
  AxiomReport rep;
  rep.axiom = Axiom::covering_law;
  rep.verdict = Verdict::pass;
  std::vector<int> at = atoms(S.lattice);
  for (size_t i = 0; i < at.size() && (opts.all_witnesses || rep.witnesses.empty()); ++i)
    for (size_t j = i + 1; j < at.size(); ++j) {
      int a = at[i], b = at[j];
      if (property_orthogonal(S, a, b)) continue;
      int line = join(S.lattice, a, b);
      int below = 0;
      for (int atom : at)
        if (S.lattice.leq(atom, line)) below++;
      if (below != 2) continue;
      Witness w;
      w.kind = "two-point-plane";
      w.indices = {a, b};
      w.labels = {S.lattice.label(a), S.lattice.label(b)};
      w.detail = "the line through these non-orthogonal atoms contains no third atom";
      rep.witnesses.push_back(std::move(w));
      if (!opts.all_witnesses) break;
    }
  if (!rep.witnesses.empty()) rep.verdict = Verdict::fail;
  return rep;
}

std::vector<AxiomReport> separated_axiom_report(const SeparatedProductSystem& sp,
                                                const CheckOptions& opts) {
  std::vector<AxiomReport> reports = full_report(sp.sps);
  reports.push_back(ssr_diagnostic(sp.sps, opts));
  reports.push_back(three_points_per_line_check(sp.sps, opts));
  return reports;
}

}  // namespace qlat
