#pragma once
// Glue between the raw fixture data, the oracle representations, and the
// library builders.

#include <random>
#include <utility>

#include "fixture_data.hpp"
#include "oracles.hpp"
#include "qlat/hilbert.hpp"
#include "qlat/lattice.hpp"
#include "qlat/matrix.hpp"
#include "qlat/rational.hpp"
#include "qlat/state_property.hpp"

namespace helpers {

inline qlat::FiniteOrtholattice to_lattice(const fixture::RawLattice& raw,
                                           int cap = qlat::kDefaultMaxElements) {
  return qlat::FiniteOrtholattice::make(raw.labels, raw.leq, raw.ortho, raw.bottom, raw.top, cap);
}

inline oracle::Rel to_rel(const fixture::RawLattice& raw) {
  return oracle::rel_from_pairs((int)raw.labels.size(), raw.leq);
}

inline std::vector<int> ortho_vec(const fixture::RawLattice& raw) {
  std::vector<int> o(raw.labels.size(), -1);
  for (auto [x, y] : raw.ortho) {
    o[x] = y;
    o[y] = x;
  }
  return o;
}

inline qlat::StatePropertySystem to_sps(const fixture::RawSps& raw) {
  return qlat::StatePropertySystem::make(raw.states, to_lattice(raw.lattice), raw.actuality,
                                         raw.state_ortho);
}

// ---------- exact matrix construction -----------------------------------

// Column vector from (re, im) integer pairs.
inline qlat::RatMat gvec(const std::vector<std::pair<long, long>>& entries) {
  qlat::RatMat v((int)entries.size(), 1);
  for (size_t i = 0; i < entries.size(); i++)
    v.at((int)i, 0) = qlat::GaussRat(qlat::BigRat(entries[i].first),
                                     qlat::BigRat(entries[i].second));
  return v;
}

// Row-major matrix from integer (real) entries.
inline qlat::RatMat rmat(int rows, int cols, const std::vector<long>& vals) {
  qlat::RatMat m(rows, cols);
  for (int i = 0; i < rows; i++)
    for (int j = 0; j < cols; j++) m.at(i, j) = qlat::GaussRat(qlat::BigRat(vals[i * cols + j]));
  return m;
}

// Matrix of random Gaussian integers with entries in [-3, 3].
inline qlat::RatMat random_gauss_mat(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> d(-3, 3);
  qlat::RatMat m(rows, cols);
  for (auto& x : m.a) x = qlat::GaussRat(qlat::BigRat(d(rng)), qlat::BigRat(d(rng)));
  return m;
}

// Comparable pair a <= b: a spans a prefix of the random columns spanning b.
// Degenerate ranks (0 or full) are deliberately included.
inline std::pair<qlat::RatSubspace, qlat::RatSubspace> random_comparable_pair(
    std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> dk(0, dim);
  int k = dk(rng);
  int j = std::uniform_int_distribution<int>(0, k)(rng);
  qlat::RatMat cols = random_gauss_mat(rng, dim, k);
  qlat::RatMat prefix(dim, j);
  for (int c = 0; c < j; c++)
    for (int r = 0; r < dim; r++) prefix.at(r, c) = cols.at(r, c);
  return {qlat::RatSubspace::from_span(prefix), qlat::RatSubspace::from_span(cols)};
}

// Random subspace of the given ambient dimension.
inline qlat::RatSubspace random_subspace(std::mt19937_64& rng, int dim) {
  int k = std::uniform_int_distribution<int>(0, dim)(rng);
  return qlat::RatSubspace::from_span(random_gauss_mat(rng, dim, k));
}

inline oracle::CMat to_oracle(const qlat::CxMat& m) {
  oracle::CMat o(m.rows, std::vector<oracle::cd>(m.cols));
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) o[i][j] = m.at(i, j);
  return o;
}

inline oracle::CMat to_oracle(const qlat::RatMat& m) { return to_oracle(qlat::to_complex(m)); }

// ---------- state-property factor builders -------------------------------

// Classical k-state system: the property lattice is the power set of the
// state set (element index = state bitmask), every property is decided in
// every state, and distinct states are orthogonal.
inline qlat::StatePropertySystem classical_sps(int k) {
  std::vector<std::string> states;
  for (int p = 0; p < k; p++) states.push_back("c" + std::to_string(p));
  std::vector<std::tuple<int, int, bool>> acts;
  for (int p = 0; p < k; p++)
    for (int m = 0; m < (1 << k); m++) acts.emplace_back(p, m, ((m >> p) & 1) != 0);
  std::vector<std::pair<int, int>> orth;
  for (int p = 0; p < k; p++)
    for (int q = p + 1; q < k; q++) orth.push_back({p, q});
  return qlat::StatePropertySystem::make(states, to_lattice(fixture::boolean_algebra(k)), acts,
                                         orth);
}

// Qubit direction sample {z+, z-, x+} (and optionally x-), sampled against
// the subspace lattice generated by the same lines.
inline qlat::StatePropertySystem qubit_sample(bool with_x_minus) {
  std::vector<qlat::RatMat> dirs = {gvec({{1, 0}, {0, 0}}), gvec({{0, 0}, {1, 0}}),
                                    gvec({{1, 0}, {1, 0}})};
  std::vector<std::string> dir_labels = {"z+", "z-", "x+"};
  std::vector<std::string> prop_labels = {"pz+", "pz-", "px+"};
  if (with_x_minus) {
    dirs.push_back(gvec({{1, 0}, {-1, 0}}));
    dir_labels.push_back("x-");
    prop_labels.push_back("px-");
  }
  std::vector<qlat::RatSubspace> props;
  for (const auto& d : dirs) props.push_back(qlat::RatSubspace::from_span(d));
  return qlat::sample_sps(dirs, dir_labels, props, prop_labels);
}

// One-state system over the two-element lattice.
inline qlat::StatePropertySystem single_state_sps() {
  return qlat::StatePropertySystem::make({"s"}, to_lattice(fixture::chain(2)),
                                         {{0, 1, true}, {0, 0, false}}, {});
}

}  // namespace helpers
