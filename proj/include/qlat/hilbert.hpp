#pragma once
// Subspaces of a finite-dimensional complex Hilbert space, represented by
// their orthogonal projectors, and the finite ortholattices they generate.
// Everything is templated over the scalar: GaussRat gives exact results for
// rational inputs, std::complex<double> covers irrational data (rotated spin
// directions) with a tolerance.
//
// Order and operations on subspaces:
//   a ≤ b        iff  Pa Pb == Pa  (equivalently Pb Pa == Pa)
//   orthocomplement  a'  has projector  I − Pa
//   meet  a ∧ b  = intersection   (kernel of the stacked complements)
//   join  a ∨ b  = closed span of the union of bases
// The three identities every orthoprojector pair must satisfy:
//   (1)  a ≤ b implies (I−Pb)(I−Pa) == I−Pb      (complement reverses order)
//   (2)  I − (I − Pa) == Pa                       (complement is involutive)
//   (3)  Pa (I − Pa) == 0                         (meet with complement is 0)

#include <cctype>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qlat/errors.hpp"
#include "qlat/lattice.hpp"
#include "qlat/matrix.hpp"
#include "qlat/state_property.hpp"

namespace qlat {

inline constexpr double kHilbertEps = 1e-9;
inline constexpr int kMaxAmbientDim = 8;

template <class S>
bool validate_projector(const Mat<S>& p, double eps = kHilbertEps) {
  if (p.rows != p.cols || p.rows == 0) return false;
  return approx_equal(mul(p, p), p, eps) && approx_equal(adjoint(p), p, eps);
}

// Subspace order: Pa Pb == Pa and Pb Pa == Pa (both checked; for honest
// projectors each implies the other via the adjoint).
template <class S>
bool leq_projector(const Mat<S>& pa, const Mat<S>& pb, double eps = kHilbertEps) {
  if (pa.rows != pb.rows || pa.cols != pb.cols)
    throw InputError("projectors must share an ambient dimension");
  return approx_equal(mul(pa, pb), pa, eps) && approx_equal(mul(pb, pa), pa, eps);
}

template <class S>
Mat<S> ortho_projector(const Mat<S>& p) {
  if (p.rows != p.cols) throw InputError("projectors must be square");
  return sub(Mat<S>::identity(p.rows), p);
}

namespace detail {

// Orthonormalize the columns of v (modified Gram-Schmidt, two passes for
// stability), dropping dependent columns. Float path only.
inline CxMat orthonormal_columns(const CxMat& v, double eps) {
  CxMat q(v.rows, 0);
  for (int j = 0; j < v.cols; ++j) {
    CxMat w = column(v, j);
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < q.cols; ++k) {
        CxMat qk = column(q, k);
        std::complex<double> c = inner(qk, w);
        w = sub(w, scale(c, qk));
      }
    double nrm = std::sqrt(norm_sq_vec(w));
    if (nrm <= eps) continue;
    w = scale(std::complex<double>(1.0 / nrm, 0.0), w);
    q = hcat(q, w);
  }
  return q;
}

}  // namespace detail

template <class S>
struct Subspace {
  int dim = 0;        // ambient dimension
  Mat<S> basis;       // dim × rank, independent columns spanning the subspace
  Mat<S> projector;   // dim × dim orthogonal projector onto the subspace

  int rank() const { return basis.cols; }

  static Subspace zero(int n) {
    if (n <= 0) throw InputError("ambient dimension must be positive");
    Subspace s;
    s.dim = n;
    s.basis = Mat<S>(n, 0);
    s.projector = Mat<S>(n, n);
    return s;
  }

  static Subspace full(int n) {
    if (n <= 0) throw InputError("ambient dimension must be positive");
    Subspace s;
    s.dim = n;
    s.basis = Mat<S>::identity(n);
    s.projector = Mat<S>::identity(n);
    return s;
  }

  // Span of the given columns. Exact scalars build P = B (B†B)⁻¹ B† over the
  // rationals; floats orthonormalize and use P = Q Q†.
  static Subspace from_span(const Mat<S>& vectors, double eps = kHilbertEps) {
    if (vectors.rows <= 0) throw InputError("ambient dimension must be positive");
    Subspace s;
    s.dim = vectors.rows;
    if constexpr (ScalarOps<S>::exact) {
      s.basis = column_space_basis(vectors, eps);
      if (s.basis.cols == 0) {
        s.projector = Mat<S>(s.dim, s.dim);
        return s;
      }
      Mat<S> bh = adjoint(s.basis);
      Mat<S> gram = mul(bh, s.basis);
      Mat<S> x = solve_linear(gram, bh, eps);  // (B†B)⁻¹ B†
      s.projector = mul(s.basis, x);
    } else {
      s.basis = detail::orthonormal_columns(vectors, eps);
      s.projector = mul(s.basis, adjoint(s.basis));
    }
    return s;
  }

  static Subspace from_projector(const Mat<S>& p, double eps = kHilbertEps) {
    if (!validate_projector(p, eps))
      throw InputError("matrix is not an orthogonal projector (idempotent and self-adjoint)");
    Subspace s;
    s.dim = p.rows;
    s.projector = p;
    s.basis = column_space_basis(p, eps);
    return s;
  }
};

using RatSubspace = Subspace<GaussRat>;
using CxSubspace = Subspace<std::complex<double>>;

template <class S>
Subspace<S> ortho_subspace(const Subspace<S>& s, double eps = kHilbertEps) {
  return Subspace<S>::from_projector(ortho_projector(s.projector), eps);
}

// Intersection: vectors fixed by both projectors, i.e. the kernel of the
// stacked complements [(I−Pa); (I−Pb)].
template <class S>
Subspace<S> meet_subspace(const Subspace<S>& x, const Subspace<S>& y, double eps = kHilbertEps) {
  if (x.dim != y.dim) throw InputError("subspaces must share an ambient dimension");
  Mat<S> stacked = vcat(ortho_projector(x.projector), ortho_projector(y.projector));
  return Subspace<S>::from_span(kernel_basis(stacked, eps), eps);
}

// Closed span of the union: the span of both bases side by side.
template <class S>
Subspace<S> join_subspace(const Subspace<S>& x, const Subspace<S>& y, double eps = kHilbertEps) {
  if (x.dim != y.dim) throw InputError("subspaces must share an ambient dimension");
  return Subspace<S>::from_span(hcat(x.basis, y.basis), eps);
}

// Canonical representative of the subspace's basis: column-reduced echelon
// form, leading entry of every column equal to 1. Equal subspaces (over exact
// scalars) produce identical canonical bases.
template <class S>
Mat<S> canonical_subspace_basis(const Subspace<S>& s, double eps = kHilbertEps) {
  return canonical_basis(s.basis, eps);
}

template <class S>
Mat<S> tensor(const Mat<S>& x, const Mat<S>& y) {
  return kron(x, y);
}

template <class S>
Subspace<S> tensor_subspace(const Subspace<S>& x, const Subspace<S>& y, double eps = kHilbertEps) {
  return Subspace<S>::from_projector(kron(x.projector, y.projector), eps);
}

// Expectation value ⟨v, P v⟩ / ⟨v, v⟩ for a projector P and a nonzero vector
// v that need not be normalized. Always a real number in [0, 1].
template <class S>
typename ScalarOps<S>::Real born_ratio(const Mat<S>& projector, const Mat<S>& v,
                                       double eps = kHilbertEps) {
  if (v.cols != 1 || v.rows != projector.rows)
    throw InputError("state must be a column vector in the projector's space");
  typename ScalarOps<S>::Real denom = norm_sq_vec(v);
  if (ScalarOps<S>::is_zero(S{denom}, eps)) throw InputError("state vector must be nonzero");
  S num = inner(v, mul(projector, v));
  if constexpr (ScalarOps<S>::exact) {
    if (!(ScalarOps<S>::imag(num) == 0))
      throw InputError("expectation value of a projector must be real");
  }
  return ScalarOps<S>::real(num) / denom;
}

// Probability ⟨ψ, P ψ⟩ for a normalized state ψ; rejects unnormalized input.
template <class S>
typename ScalarOps<S>::Real born_probability(const Mat<S>& projector, const Mat<S>& psi,
                                             double eps = kHilbertEps) {
  if (psi.cols != 1 || psi.rows != projector.rows)
    throw InputError("state must be a column vector in the projector's space");
  typename ScalarOps<S>::Real nrm = norm_sq_vec(psi);
  if (!ScalarOps<S>::is_zero(S{nrm} - S{1}, eps))
    throw InputError("state vector must be normalized");
  S num = inner(psi, mul(projector, psi));
  return ScalarOps<S>::real(num);
}

template <class S>
struct GeneratedLattice {
  FiniteOrtholattice lattice;
  std::vector<Subspace<S>> subspaces;  // one per lattice element, same order
};

namespace detail {

template <class S>
int find_subspace(const std::vector<Subspace<S>>& v, const Mat<S>& projector, double eps) {
  for (size_t i = 0; i < v.size(); ++i)
    if (approx_equal(v[i].projector, projector, eps)) return static_cast<int>(i);
  return -1;
}

inline bool reserved_label(const std::string& s) {
  if (s == "0" || s == "1") return true;
  if (s.size() >= 2 && s[0] == 's') {
    bool digits = true;
    for (size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) digits = false;
    if (digits) return true;
  }
  return false;
}

}  // namespace detail

// Close a seed set of subspaces under meet, join and orthocomplement,
// together with the zero and full subspaces, and return the result as a
// finite ortholattice plus the subspace attached to each element. Element 0
// is the zero subspace, element 1 the full space; seeds follow in input
// order (unless a seed duplicates an earlier element), then derived elements
// labeled "s<index>". Seed labels must be unique, nonempty and must avoid
// the reserved forms "0", "1" and "s<digits>".
template <class S>
GeneratedLattice<S> generate_subspace_lattice(const std::vector<Subspace<S>>& seeds,
                                              const std::vector<std::string>& seed_labels,
                                              int max_elements = kDefaultMaxElements,
                                              double eps = kHilbertEps) {
  if (seeds.empty()) throw InputError("at least one seed subspace is required");
  if (seed_labels.size() != seeds.size())
    throw InputError("one label per seed subspace is required");
  int n = seeds[0].dim;
  if (n > kMaxAmbientDim)
    throw InputError("ambient dimension exceeds the supported maximum of " +
                     std::to_string(kMaxAmbientDim));
  for (const auto& s : seeds) {
    if (s.dim != n) throw InputError("seed subspaces must share an ambient dimension");
    if (!validate_projector(s.projector, eps))
      throw InputError("seed is not an orthogonal projector");
  }
  for (const auto& lbl : seed_labels)
    if (lbl.empty() || detail::reserved_label(lbl))
      throw InputError("seed labels must be nonempty and must not look like '0', '1' or 's<k>'");

  std::vector<Subspace<S>> elems = {Subspace<S>::zero(n), Subspace<S>::full(n)};
  std::vector<std::string> labels = {"0", "1"};
  auto add = [&](Subspace<S> sub, const std::string& preferred) -> int {
    int found = detail::find_subspace(elems, sub.projector, eps);
    if (found >= 0) return found;
    if (static_cast<int>(elems.size()) >= max_elements)
      throw InputError("generated lattice exceeds the element cap of " +
                       std::to_string(max_elements));
    elems.push_back(std::move(sub));
    labels.push_back(preferred.empty() ? "s" + std::to_string(elems.size() - 1) : preferred);
    return static_cast<int>(elems.size()) - 1;
  };
  for (size_t i = 0; i < seeds.size(); ++i) add(seeds[i], seed_labels[i]);

  // Fixpoint under meet, join, complement. Rescan until no growth.
  for (size_t next = 0; next < elems.size();) {
    size_t before = elems.size();
    for (size_t i = next; i < before; ++i) {
      add(ortho_subspace(elems[i], eps), "");
      for (size_t j = 0; j < before; ++j) {
        if (i == j) continue;
        add(meet_subspace(elems[i], elems[j], eps), "");
        add(join_subspace(elems[i], elems[j], eps), "");
      }
    }
    next = before;
  }

  int count = static_cast<int>(elems.size());
  std::vector<Bits> up(count, Bits(count));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (leq_projector(elems[i].projector, elems[j].projector, eps)) up[i].set(j);
  std::vector<int> ortho_map(count, -1);
  for (int i = 0; i < count; ++i) {
    Mat<S> comp = ortho_projector(elems[i].projector);
    ortho_map[i] = detail::find_subspace(elems, comp, eps);
  }

  GeneratedLattice<S> out;
  out.lattice =
      FiniteOrtholattice::from_rows(std::move(labels), std::move(up), std::move(ortho_map),
                                    /*bottom=*/0, /*top=*/1, std::max(max_elements, count));
  out.subspaces = std::move(elems);
  return out;
}

// Build a state-property system by sampling: states are the given direction
// vectors (not necessarily normalized), properties are the lattice generated
// by the seed subspaces. A property is certainly-yes in a state when the
// projector fixes the direction, certainly-no when it annihilates it, and
// indeterminate otherwise. Two states are orthogonal iff their vectors are.
// An empty seed list yields the two-element lattice {0, 1}.
template <class S>
StatePropertySystem sample_sps(const std::vector<Mat<S>>& directions,
                               const std::vector<std::string>& direction_labels,
                               const std::vector<Subspace<S>>& properties,
                               const std::vector<std::string>& property_labels,
                               int max_elements = kDefaultMaxElements, double eps = kHilbertEps) {
  if (directions.empty()) throw InputError("at least one direction is required");
  if (direction_labels.size() != directions.size())
    throw InputError("one label per direction is required");
  int n = directions[0].rows;
  for (const auto& d : directions) {
    if (d.cols != 1 || d.rows != n)
      throw InputError("directions must be column vectors of one shared dimension");
    if (is_zero_mat(d, eps)) throw InputError("directions must be nonzero");
  }

  FiniteOrtholattice lattice;
  std::vector<Mat<S>> projectors;
  if (properties.empty()) {
    lattice = FiniteOrtholattice::make({"0", "1"}, {{0, 0}, {0, 1}, {1, 1}}, {{0, 1}}, 0, 1);
    projectors = {Mat<S>(n, n), Mat<S>::identity(n)};
  } else {
    for (const auto& p : properties)
      if (p.dim != n) throw InputError("property subspaces must live in the directions' space");
    GeneratedLattice<S> gen =
        generate_subspace_lattice(properties, property_labels, max_elements, eps);
    lattice = std::move(gen.lattice);
    projectors.reserve(gen.subspaces.size());
    for (auto& s : gen.subspaces) projectors.push_back(std::move(s.projector));
  }

  std::vector<std::tuple<int, int, bool>> actuality;
  for (size_t st = 0; st < directions.size(); ++st)
    for (size_t pr = 0; pr < projectors.size(); ++pr) {
      Mat<S> image = mul(projectors[pr], directions[st]);
      if (approx_equal(image, directions[st], eps))
        actuality.emplace_back(static_cast<int>(st), static_cast<int>(pr), true);
      else if (is_zero_mat(image, eps))
        actuality.emplace_back(static_cast<int>(st), static_cast<int>(pr), false);
    }

  std::vector<std::pair<int, int>> ortho_pairs;
  for (size_t p = 0; p < directions.size(); ++p)
    for (size_t q = p + 1; q < directions.size(); ++q)
      if (ScalarOps<S>::is_zero(inner(directions[p], directions[q]), eps))
        ortho_pairs.emplace_back(static_cast<int>(p), static_cast<int>(q));

  return StatePropertySystem::make(std::vector<std::string>(direction_labels.begin(),
                                                            direction_labels.end()),
                                   std::move(lattice), actuality, ortho_pairs);
}

}  // namespace qlat
