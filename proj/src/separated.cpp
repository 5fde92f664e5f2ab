#include "qlat/separated.hpp"

#include <cmath>

namespace qlat {

CxMat spin_up_projector(double theta) {
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  CxMat p(2, 2);
  p.at(0, 0) = c * c;
  p.at(0, 1) = c * s;
  p.at(1, 0) = c * s;
  p.at(1, 1) = s * s;
  return p;
}

CxMat singlet_state() {
  CxMat psi(4, 1);
  psi.at(1, 0) = 1.0 / std::sqrt(2.0);
  psi.at(2, 0) = -1.0 / std::sqrt(2.0);
  return psi;
}

double pair_correlation(const CxMat& state, double angle_a, double angle_b, double eps) {
  if (state.cols != 1 || state.rows != 4)
    throw InputError("pair correlation requires a two-qubit state in C^4");
  CxMat pa = spin_up_projector(angle_a), pb = spin_up_projector(angle_b);
  CxMat qa = ortho_projector(pa), qb = ortho_projector(pb);
  double p_yy = born_probability(kron(pa, pb), state, eps);
  double p_yn = born_probability(kron(pa, qb), state, eps);
  double p_ny = born_probability(kron(qa, pb), state, eps);
  double p_nn = born_probability(kron(qa, qb), state, eps);
  return p_yy - p_yn - p_ny + p_nn;
}

double singlet_correlation(double theta_a, double theta_b) {
  return pair_correlation(singlet_state(), theta_a, theta_b);
}

double chsh_value(const CxMat& state, double a, double a_prime, double b, double b_prime,
                  double eps) {
  return pair_correlation(state, a, b, eps) + pair_correlation(state, a, b_prime, eps) +
         pair_correlation(state, a_prime, b, eps) - pair_correlation(state, a_prime, b_prime, eps);
}

}  // namespace qlat
