#pragma once
// Joint measurements of two separate subsystems, the superposition-state
// contradiction demo, and spin-pair correlation / CHSH evaluation.
//
// The demo: given commuting projectors P1 (outcome x1 of measurement M1) and
// P2 (outcome y1 of measurement M2), pick unit vectors
//   φ ∈ ran(P1 (I−P2))   — "x1 certain, y2 certain"
//   χ ∈ ran((I−P1) P2)   — "x2 certain, y1 certain"
// and form ψ = (φ̂ + χ̂)/√2. In state ψ each measurement alone has both
// outcomes possible (probability 1/2 each), yet the joint outcomes (x1,y1)
// and (x2,y2) never occur. Separate measurements cannot produce such
// correlations, so no state of a compound system made of two genuinely
// separate subsystems can be a superposition of this kind.
//
// Every probability reported below is computed from the ratio form
//   p(Q) = (‖Qφ‖²/‖φ‖² + ‖Qχ‖²/‖χ‖²) / 2,
// which equals ‖Qψ‖² exactly when the cross terms ⟨Qφ, Qχ⟩ vanish; the
// report records that they do. With rational inputs everything is exact.

#include <string>
#include <vector>

#include "qlat/errors.hpp"
#include "qlat/hilbert.hpp"
#include "qlat/matrix.hpp"

namespace qlat {

template <class S>
struct JointMeasurement {
  Mat<S> p1;  // projector for outcome x1 of M1
  Mat<S> p2;  // projector for outcome y1 of M2
  std::string x1 = "x1", x2 = "x2";  // outcome labels of M1
  std::string y1 = "y1", y2 = "y2";  // outcome labels of M2
};

// Shape, projector and commutation checks; throws InputError on violation.
template <class S>
void validate_joint_measurement(const JointMeasurement<S>& j, double eps = kHilbertEps) {
  if (!validate_projector(j.p1, eps) || !validate_projector(j.p2, eps))
    throw InputError("joint measurement requires two orthogonal projectors");
  if (j.p1.rows != j.p2.rows)
    throw InputError("joint measurement projectors must act on the same space");
  Mat<S> comm = sub(mul(j.p1, j.p2), mul(j.p2, j.p1));
  if (!is_zero_mat(comm, eps))
    throw InputError("joint measurement projectors must commute");
}

template <class S>
struct EprReport {
  using Real = typename ScalarOps<S>::Real;

  int dim = 0;
  Mat<S> phi, chi;  // range representatives; unit vectors in float mode,
                    // unnormalized rational columns in exact mode

  // joint-outcome probabilities in state ψ
  Real p_x1y1{}, p_x1y2{}, p_x2y1{}, p_x2y2{};
  // single-measurement outcome probabilities in state ψ
  Real p_x1{}, p_x2{}, p_y1{}, p_y2{};

  // φ is fixed by P1 and killed by P2; χ the other way around. These force
  // the measurement-collapse images: P1 ψ = φ̂/√2, P1(I−P2) ψ = φ̂/√2, and
  // the symmetric statements for χ.
  bool images_match = false;
  // P1P2 and (I−P1)(I−P2) annihilate both φ and χ, so both branches of ψ
  // vanish under the "both yes" and "both no" joint outcomes.
  bool branches_vanish = false;
  // ⟨Qφ, Qχ⟩ = 0 for all eight outcome projectors Q, so the ratio-form
  // probabilities above are the honest squared norms ‖Qψ‖².
  bool cross_terms_vanish = false;
  // both single outcomes possible for each measurement, both diagonal joint
  // outcomes impossible
  bool not_separate = false;

  std::string verdict;  // one-line human-readable summary
};

namespace detail {

template <class S>
Mat<S> first_nonzero_column(const Mat<S>& m, double eps) {
  for (int j = 0; j < m.cols; ++j) {
    Mat<S> c = column(m, j);
    if (!is_zero_mat(c, eps)) return c;
  }
  return Mat<S>(m.rows, 0);
}

}  // namespace detail

// The constructive non-separateness demo. Throws InputError when the input
// is not a commuting projector pair, when either projector is trivial
// (0 or the identity: the demo is not applicable), or when one of the two
// ranges ran(P1(I−P2)), ran((I−P1)P2) is zero (the configuration cannot
// exhibit the construction).
template <class S>
EprReport<S> epr_contradiction_demo(const JointMeasurement<S>& j, double eps = kHilbertEps) {
  validate_joint_measurement(j, eps);
  int n = j.p1.rows;
  Mat<S> id = Mat<S>::identity(n);
  for (const Mat<S>* p : {&j.p1, &j.p2})
    if (is_zero_mat(*p, eps) || approx_equal(*p, id, eps))
      throw InputError(
          "demo not applicable: a trivial projector (zero or identity) has a "
          "certain outcome in every state");

  // P1(I−P2) and (I−P1)P2 are themselves projectors because P1, P2 commute;
  // the image of the first canonical basis vector that is not annihilated is
  // the deterministic range representative.
  Mat<S> r1 = mul(j.p1, ortho_projector(j.p2));
  Mat<S> r2 = mul(ortho_projector(j.p1), j.p2);
  Mat<S> phi = detail::first_nonzero_column(r1, eps);
  Mat<S> chi = detail::first_nonzero_column(r2, eps);
  if (phi.cols == 0 || chi.cols == 0)
    throw InputError(
        "configuration cannot exhibit the construction: one of the ranges "
        "ran(P1(I-P2)), ran((I-P1)P2) is zero");

  EprReport<S> rep;
  rep.dim = n;
  if constexpr (!ScalarOps<S>::exact) {
    phi = scale(S{1.0 / std::sqrt(norm_sq_vec(phi))}, phi);
    chi = scale(S{1.0 / std::sqrt(norm_sq_vec(chi))}, chi);
  }
  rep.phi = phi;
  rep.chi = chi;

  auto fixes = [&](const Mat<S>& p, const Mat<S>& v) { return approx_equal(mul(p, v), v, eps); };
  auto kills = [&](const Mat<S>& p, const Mat<S>& v) { return is_zero_mat(mul(p, v), eps); };
  Mat<S> q1 = ortho_projector(j.p1), q2 = ortho_projector(j.p2);
  rep.images_match = fixes(j.p1, phi) && kills(j.p2, phi) && kills(j.p1, chi) && fixes(j.p2, chi);
  rep.branches_vanish = kills(mul(j.p1, j.p2), phi) && kills(mul(j.p1, j.p2), chi) &&
                        kills(mul(q1, q2), phi) && kills(mul(q1, q2), chi);

  using Real = typename ScalarOps<S>::Real;
  Real nphi = norm_sq_vec(phi), nchi = norm_sq_vec(chi);
  bool cross_ok = true;
  auto prob = [&](const Mat<S>& q) -> Real {
    Mat<S> qphi = mul(q, phi), qchi = mul(q, chi);
    if (!ScalarOps<S>::is_zero(inner(qphi, qchi), eps)) cross_ok = false;
    return (norm_sq_vec(qphi) / nphi + norm_sq_vec(qchi) / nchi) / Real{2};
  };
  rep.p_x1y1 = prob(mul(j.p1, j.p2));
  rep.p_x1y2 = prob(r1);
  rep.p_x2y1 = prob(r2);
  rep.p_x2y2 = prob(mul(q1, q2));
  rep.p_x1 = prob(j.p1);
  rep.p_x2 = prob(q1);
  rep.p_y1 = prob(j.p2);
  rep.p_y2 = prob(q2);
  rep.cross_terms_vanish = cross_ok;

  auto positive = [&](const Real& p) {
    if constexpr (ScalarOps<S>::exact)
      return p > 0;
    else
      return p > eps;
  };
  auto vanishes = [&](const Real& p) { return !positive(p); };
  rep.not_separate = positive(rep.p_x1) && positive(rep.p_x2) && positive(rep.p_y1) &&
                     positive(rep.p_y2) && vanishes(rep.p_x1y1) && vanishes(rep.p_x2y2);
  if (rep.not_separate)
    rep.verdict = "each outcome of either measurement alone is possible, yet the joint outcomes (" +
                  j.x1 + "," + j.y1 + ") and (" + j.x2 + "," + j.y2 +
                  ") never occur: the measurements are not separate in this state";
  else
    rep.verdict = "the configuration does not exhibit the separateness contradiction";
  return rep;
}

// ---------- spin pairs, anti-correlation, CHSH (floating point) ----------

// Projector onto the spin-up direction at angle theta in the measurement
// plane: the line through (cos(θ/2), sin(θ/2)) in C².
CxMat spin_up_projector(double theta);

// The two-qubit singlet state (|01⟩ − |10⟩)/√2 as a column in C⁴.
CxMat singlet_state();

// Expectation of the ±1 outcome product when the first qubit is measured
// along angle_a and the second along angle_b, in the given normalized
// two-qubit state. Computed from the four joint-outcome probabilities.
double pair_correlation(const CxMat& state, double angle_a, double angle_b,
                        double eps = kHilbertEps);

// pair_correlation on the singlet state: equals −cos(θa − θb).
double singlet_correlation(double theta_a, double theta_b);

// E(a,b) + E(a,b') + E(a',b) − E(a',b') for the given normalized state.
double chsh_value(const CxMat& state, double a, double a_prime, double b, double b_prime,
                  double eps = kHilbertEps);

}  // namespace qlat
