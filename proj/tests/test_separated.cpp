// Joint measurements on separate subsystems: the superposition contradiction
// demo (exact and float), singlet anti-correlation, and CHSH values.
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fixture_data.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "qlat/matrix.hpp"
#include "qlat/rational.hpp"
#include "qlat/separated.hpp"

using namespace qlat;
using helpers::rmat;
namespace frozen = fixture::frozen;

namespace {

// P (x) I and I (x) Q on C^2 (x) C^2 from one-qubit projectors.
JointMeasurement<GaussRat> tensor_pair(const RatMat& p, const RatMat& q) {
  JointMeasurement<GaussRat> j;
  j.p1 = kron(p, RatMat::identity(2));
  j.p2 = kron(RatMat::identity(2), q);
  return j;
}

// Commuting but not tensor-factored: span{e1, e2+e3} and span{e1, e2-e3}.
JointMeasurement<GaussRat> oblique_pair() {
  JointMeasurement<GaussRat> j;
  j.p1 = RatSubspace::from_span(rmat(4, 2, {1, 0, 0, 1, 0, 1, 0, 0})).projector;
  j.p2 = RatSubspace::from_span(rmat(4, 2, {1, 0, 0, 1, 0, -1, 0, 0})).projector;
  return j;
}

CxMat spin_up_vector(double theta) {
  CxMat v(2, 1);
  v.at(0, 0) = std::cos(theta / 2);
  v.at(1, 0) = std::sin(theta / 2);
  return v;
}

void check_epr_shape(const EprReport<GaussRat>& rep) {
  const BigRat half = BigRat(1) / 2;
  CHECK(rep.p_x1y1 == BigRat(frozen::epr_joint_num[0][0]) / frozen::epr_joint_den);
  CHECK(rep.p_x1y2 == BigRat(frozen::epr_joint_num[0][1]) / frozen::epr_joint_den);
  CHECK(rep.p_x2y1 == BigRat(frozen::epr_joint_num[1][0]) / frozen::epr_joint_den);
  CHECK(rep.p_x2y2 == BigRat(frozen::epr_joint_num[1][1]) / frozen::epr_joint_den);
  CHECK(rep.p_x1 == half);
  CHECK(rep.p_x2 == half);
  CHECK(rep.p_y1 == half);
  CHECK(rep.p_y2 == half);
  CHECK(rep.p_x1y1 + rep.p_x1y2 + rep.p_x2y1 + rep.p_x2y2 == BigRat(1));
  CHECK(rep.images_match);
  CHECK(rep.branches_vanish);
  CHECK(rep.cross_terms_vanish);
  CHECK(rep.not_separate);
}

}  // namespace

TEST_SUITE("separated") {
  TEST_CASE("tensor-built demo: exact probabilities 0, 1/2, 1/2, 0") {
    RatMat pz = rmat(2, 2, {1, 0, 0, 0});
    JointMeasurement<GaussRat> j = tensor_pair(pz, pz);
    // tensor-built projectors commute exactly
    CHECK(mul(j.p1, j.p2) == mul(j.p2, j.p1));
    EprReport<GaussRat> rep = epr_contradiction_demo(j);
    check_epr_shape(rep);
    CHECK(rep.dim == 4);
    // the deterministic representatives: phi = e1, chi = e2 (0-based)
    CHECK(rep.phi == rmat(4, 1, {0, 1, 0, 0}));
    CHECK(rep.chi == rmat(4, 1, {0, 0, 1, 0}));
    CHECK(rep.verdict.find("not separate") != std::string::npos);
    CHECK(rep.verdict.find("(x1,y1)") != std::string::npos);
  }

  TEST_CASE("the same identities hold without a tensor factorization") {
    JointMeasurement<GaussRat> j = oblique_pair();
    // genuinely commuting, non-trivial, and not equal
    CHECK(mul(j.p1, j.p2) == mul(j.p2, j.p1));
    CHECK(j.p1 != j.p2);
    EprReport<GaussRat> rep = epr_contradiction_demo(j);
    check_epr_shape(rep);
    // representatives proportional to e2+e3 and e2-e3
    RatMat half_sum(4, 1), half_diff(4, 1);
    half_sum.at(1, 0) = GaussRat{BigRat(1) / 2};
    half_sum.at(2, 0) = GaussRat{BigRat(1) / 2};
    half_diff.at(1, 0) = GaussRat{BigRat(1) / 2};
    half_diff.at(2, 0) = GaussRat{BigRat(-1) / 2};
    CHECK(rep.phi == half_sum);
    CHECK(rep.chi == half_diff);
  }

  TEST_CASE("demo rejects ill-posed inputs") {
    RatMat pz = rmat(2, 2, {1, 0, 0, 0});
    RatMat px = RatSubspace::from_span(rmat(2, 1, {1, 1})).projector;

    // non-commuting pair: both projectors act on the first factor
    JointMeasurement<GaussRat> noncomm;
    noncomm.p1 = kron(pz, RatMat::identity(2));
    noncomm.p2 = kron(px, RatMat::identity(2));
    CHECK_THROWS_WITH_AS(epr_contradiction_demo(noncomm),
                         doctest::Contains("must commute"), InputError);

    // trivial projectors are not applicable
    JointMeasurement<GaussRat> degen = tensor_pair(pz, pz);
    degen.p2 = RatMat(4, 4);
    CHECK_THROWS_WITH_AS(epr_contradiction_demo(degen), doctest::Contains("not applicable"),
                         InputError);
    degen.p2 = RatMat::identity(4);
    CHECK_THROWS_WITH_AS(epr_contradiction_demo(degen), doctest::Contains("not applicable"),
                         InputError);

    // equal non-trivial projectors commute but leave ran(P1(I-P2)) empty
    JointMeasurement<GaussRat> same;
    same.p1 = kron(pz, RatMat::identity(2));
    same.p2 = same.p1;
    CHECK_THROWS_WITH_AS(epr_contradiction_demo(same),
                         doctest::Contains("cannot exhibit the construction"), InputError);

    // non-projector and shape mismatches
    JointMeasurement<GaussRat> bad;
    bad.p1 = rmat(2, 2, {1, 1, 0, 1});
    bad.p2 = rmat(2, 2, {1, 0, 0, 0});
    CHECK_THROWS_AS(epr_contradiction_demo(bad), InputError);
    JointMeasurement<GaussRat> mismatch;
    mismatch.p1 = kron(pz, RatMat::identity(2));
    mismatch.p2 = pz;
    CHECK_THROWS_AS(epr_contradiction_demo(mismatch), InputError);
  }

  TEST_CASE("float route reproduces the exact demo within 1e-12") {
    for (bool oblique : {false, true}) {
      JointMeasurement<GaussRat> je =
          oblique ? oblique_pair() : tensor_pair(rmat(2, 2, {1, 0, 0, 0}), rmat(2, 2, {1, 0, 0, 0}));
      JointMeasurement<std::complex<double>> jf;
      jf.p1 = to_complex(je.p1);
      jf.p2 = to_complex(je.p2);
      EprReport<std::complex<double>> rep = epr_contradiction_demo(jf);
      CHECK(rep.p_x1y1 == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(rep.p_x1y2 == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(rep.p_x2y1 == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(rep.p_x2y2 == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(rep.p_x1 == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(norm_sq_vec(rep.phi) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(norm_sq_vec(rep.chi) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(rep.images_match);
      CHECK(rep.branches_vanish);
      CHECK(rep.not_separate);
    }
  }

  TEST_CASE("probability conservation on random tensor instances") {
    std::mt19937_64 rng(424242);
    int built = 0;
    while (built < 25) {
      RatSubspace p = helpers::random_subspace(rng, 2);
      RatSubspace q = helpers::random_subspace(rng, 3);
      if (p.rank() != 1 || q.rank() == 0 || q.rank() == 3) continue;
      JointMeasurement<GaussRat> j;
      j.p1 = kron(p.projector, RatMat::identity(3));
      j.p2 = kron(RatMat::identity(2), q.projector);
      EprReport<GaussRat> rep = epr_contradiction_demo(j);
      built++;
      CHECK(rep.p_x1y1 + rep.p_x1y2 + rep.p_x2y1 + rep.p_x2y2 == BigRat(1));
      // marginals are the row/column sums of the joint table
      CHECK(rep.p_x1 == rep.p_x1y1 + rep.p_x1y2);
      CHECK(rep.p_x2 == rep.p_x2y1 + rep.p_x2y2);
      CHECK(rep.p_y1 == rep.p_x1y1 + rep.p_x2y1);
      CHECK(rep.p_y2 == rep.p_x1y2 + rep.p_x2y2);
      CHECK(rep.images_match);
      CHECK(rep.branches_vanish);
      CHECK(rep.cross_terms_vanish);
      CHECK(rep.not_separate);
    }
  }

  TEST_CASE("spin projectors") {
    CHECK(oracle::cmax_diff(helpers::to_oracle(spin_up_projector(0)),
                            {{1.0, 0.0}, {0.0, 0.0}}) <= 1e-12);
    CHECK(oracle::cmax_diff(helpers::to_oracle(spin_up_projector(std::numbers::pi)),
                            {{0.0, 0.0}, {0.0, 1.0}}) <= 1e-12);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    for (int t = 0; t < 20; t++) {
      double th = angle(rng);
      CxMat p = spin_up_projector(th);
      CHECK(validate_projector(p, 1e-12));
      // antipodal directions are complementary
      CHECK(approx_equal(add(p, spin_up_projector(th + std::numbers::pi)), CxMat::identity(2),
                         1e-12));
      // the defining vector lies in the range
      CxMat v = spin_up_vector(th);
      CHECK(approx_equal(mul(p, v), v, 1e-12));
    }
  }

  TEST_CASE("singlet anti-correlation matches the closed form") {
    CHECK(singlet_correlation(0.3, 0.3) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(singlet_correlation(1.0, 1.0 + std::numbers::pi / 2) ==
          doctest::Approx(0.0).epsilon(1e-9));
    CHECK(singlet_correlation(0.5, 0.5 + std::numbers::pi) == doctest::Approx(1.0).epsilon(1e-9));
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    for (int t = 0; t < 20; t++) {
      double a = angle(rng), b = angle(rng);
      CHECK(std::abs(singlet_correlation(a, b) - oracle::singlet_correlation_closed_form(a, b)) <=
            1e-9);
    }
  }

  TEST_CASE("chsh values on the singlet") {
    const double root8 = 2 * std::sqrt(2.0);
    CxMat psi = singlet_state();
    double attained = chsh_value(psi, frozen::chsh_attaining[0], frozen::chsh_attaining[1],
                                 frozen::chsh_attaining[2], frozen::chsh_attaining[3]);
    CHECK(attained == doctest::Approx(-root8).epsilon(1e-9));
    CHECK(std::abs(attained) == doctest::Approx(root8).epsilon(1e-9));
    // the same four angles in naive tuple order cancel to zero
    double naive = chsh_value(psi, frozen::chsh_naive[0], frozen::chsh_naive[1],
                              frozen::chsh_naive[2], frozen::chsh_naive[3]);
    CHECK(naive == doctest::Approx(0.0).epsilon(1e-9));
    // all angles equal: three terms cancel one, |S| = 2|E| = 2
    CHECK(std::abs(chsh_value(psi, 0.7, 0.7, 0.7, 0.7)) == doctest::Approx(2.0).epsilon(1e-9));
    // unnormalized or ill-shaped states are rejected
    CxMat unnorm(4, 1);
    unnorm.at(0, 0) = 2.0;
    CHECK_THROWS_AS(chsh_value(unnorm, 0, 1, 2, 3), InputError);
    CHECK_THROWS_AS(pair_correlation(CxMat(2, 1), 0, 1), InputError);
  }

  TEST_CASE("product states respect the classical bound") {
    std::mt19937_64 rng(9001);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    // correlations factorize through the closed form
    for (int t = 0; t < 20; t++) {
      double t1 = angle(rng), t2 = angle(rng), a = angle(rng), b = angle(rng);
      CxMat prod = kron(spin_up_vector(t1), spin_up_vector(t2));
      CHECK(std::abs(pair_correlation(prod, a, b) -
                     oracle::product_state_correlation_closed_form(t1, t2, a, b)) <= 1e-9);
    }
    // |00> over a coarse angle grid never beats 2
    CxMat zz(4, 1);
    zz.at(0, 0) = 1.0;
    const int grid = 8;
    for (int i = 0; i < grid; i++)
      for (int j = 0; j < grid; j++)
        for (int k = 0; k < grid; k++) {
          double a = 2 * std::numbers::pi * i / grid;
          double ap = 2 * std::numbers::pi * j / grid;
          double b = 2 * std::numbers::pi * k / grid;
          // the bound holds for every assignment; scan three angles and tie
          // the fourth to keep the loop cubic
          CHECK(std::abs(chsh_value(zz, a, ap, b, a + ap)) <= 2.0 + 1e-9);
        }
  }
}
