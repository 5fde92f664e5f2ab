#pragma once
// Axiom checkers for finite ortholattices and state-property systems.
//
// Every checker is a pure function returning an AxiomReport. A failed report
// carries at least one witness; the first witness is the first violation in
// ascending index scan order (hence the lexicographically smallest tuple for
// the condition that fired). Witnesses are self-verifying: replay_witness
// re-evaluates the defining formula on the stored indices.
//
// Precondition violations on otherwise well-formed input (e.g. a checker that
// needs meets on an order that is not a lattice) come back as verdict ==
// error, never as exceptions, so one broken axiom cannot suppress the other
// checks in a full report.

#include <vector>

#include "qlat/lattice.hpp"
#include "qlat/report.hpp"

namespace qlat {

struct StatePropertySystem;  // state_property.hpp

// Axiom 1 — the order is a complete lattice with the declared bounds:
// reflexive, antisymmetric, transitive; every pair has a meet and a join
// (join evaluated as the infimum of the upper bounds); bottom <= x <= top.
AxiomReport verify_lattice(const FiniteOrtholattice& L, const CheckOptions& opts = {});

// Axiom 2 — the candidate map is an orthocomplementation: involutive,
// meet(a, a') = bottom, and order-reversing. Checked in that phase order.
AxiomReport check_orthocomplementation(const FiniteOrtholattice& L, const CheckOptions& opts = {});

// Axiom 4 on a bare lattice — atomic: every nonzero element has an atom below it.
AxiomReport check_atomic(const FiniteOrtholattice& L, const CheckOptions& opts = {});

// Axiom 5 — covering law: for every atom a and every b with meet(a, b) =
// bottom, join(a, b) covers b.
AxiomReport check_covering_law(const FiniteOrtholattice& L, const CheckOptions& opts = {});

// Axiom 6 — weak modularity: a <= b implies meet(join(a, b'), b) = a.
AxiomReport check_weak_modularity(const FiniteOrtholattice& L, const CheckOptions& opts = {});

// Elements reachable from the seeds by meet, join and ortho (ascending
// indices). Throws InputError when a required meet or join does not exist.
std::vector<int> sublattice_closure(const FiniteOrtholattice& L, const std::vector<int>& seeds);

// The Boolean-sublattice formulation of axiom 6: the sublattice generated by
// {a, b} under meet, join and ortho is distributive and keeps the complement
// laws. Equivalent to weak modularity holding at the pair (a, b).
// Preconditions (InputError): a <= b, ortho map present.
AxiomReport check_boolean_sublattice(const FiniteOrtholattice& L, int a, int b,
                                     const CheckOptions& opts = {});

// Superselection rule between properties a and b: every state in which
// join(a, b) is actual makes a actual or b actual.
bool detect_ssr(const StatePropertySystem& S, int a, int b);

// A property is classical when no state leaves it indeterminate.
bool is_classical_property(const StatePropertySystem& S, int a);
AxiomReport check_classicality(const StatePropertySystem& S, const CheckOptions& opts = {});

// Axiom order 1, 2, 4, 5, 6 on a bare lattice (2 and 6 are omitted when no
// ortho map is present); 1..6 on a state-property system. Later checks run
// regardless of earlier failures.
std::vector<AxiomReport> full_report(const FiniteOrtholattice& L, const CheckOptions& opts = {});
std::vector<AxiomReport> full_report(const StatePropertySystem& S, const CheckOptions& opts = {});

// Re-evaluates the defining formula behind every witness of a failed report.
// True iff each witness still exhibits the violation. Pass/error reports
// replay trivially (they carry no witnesses).
bool replay_witness(const FiniteOrtholattice& L, const AxiomReport& report);
bool replay_witness(const StatePropertySystem& S, const AxiomReport& report);

}  // namespace qlat
