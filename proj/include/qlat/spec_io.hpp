#pragma once
// Document format for lattices, state-property systems, sampled subspace
// families, and separated-product jobs. Files are strict JSON with a version
// field: unknown fields, unknown versions, duplicate labels, and references
// to undeclared labels are all hard errors carrying a source position.
//
// Parsing and building are separate stages. parse_spec_text validates shape
// and references and returns a canonicalized SpecDocument; the build_*
// functions turn a document into live objects, enforcing the element caps.
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qlat/hilbert.hpp"
#include "qlat/lattice.hpp"
#include "qlat/product.hpp"
#include "qlat/state_property.hpp"

namespace qlat {

inline constexpr int kSpecFormatVersion = 1;

// Body of a lattice document (also nested inside a state-property document).
// The order list may give any generating set of pairs; the builder takes the
// reflexive-transitive closure. Canonical form: pairs sorted by declaration
// index, no duplicates, no reflexive pairs; ortho pairs each stored once with
// the lower-indexed label first.
struct LatticeSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;  // [a, b] means a <= b
  bool has_ortho = false;
  std::vector<std::pair<std::string, std::string>> ortho;
  std::string bottom;
  std::string top;
};

// Body of a state-property document: named states, a property lattice, an
// explicit actuality table, and optional state orthogonality.
struct SpsSpec {
  std::vector<std::string> states;
  std::vector<std::pair<std::string, std::string>> state_ortho;
  LatticeSpec lattice;
  std::vector<std::tuple<std::string, std::string, bool>> actuality;
};

// One complex rational scalar, serialized as [re_num, re_den, im_num, im_den].
struct RationalEntry {
  long long re_num = 0;
  long long re_den = 1;
  long long im_num = 0;
  long long im_den = 1;
};

struct SeedStateSpec {
  std::string label;
  std::vector<RationalEntry> vec;  // length == dimension
};

struct SeedSubspaceSpec {
  std::string label;
  std::vector<std::vector<RationalEntry>> columns;  // each of length == dimension
};

// Body of a sampled-subspace document: an ambient dimension, state vectors to
// sample, and seed subspaces whose generated lattice becomes the property
// lattice.
struct HilbertSpec {
  int dimension = 0;
  std::vector<SeedStateSpec> states;
  std::vector<SeedSubspaceSpec> seeds;
};

struct SpecDocument;

// Body of a product-job document: two embedded factor documents (each of kind
// "sps" or "hilbert-seeds") plus construction options.
struct ProductJobSpec {
  std::shared_ptr<SpecDocument> first;
  std::shared_ptr<SpecDocument> second;
  bool extended_generators = false;
  std::optional<int> max_family;
};

// A parsed document. Exactly one body is meaningful, selected by `kind`
// ("lattice", "sps", "hilbert-seeds", or "product-job").
struct SpecDocument {
  int version = kSpecFormatVersion;
  std::string kind;
  LatticeSpec lattice;
  SpsSpec sps;
  HilbertSpec hilbert;
  ProductJobSpec product;
};

// Strict parse. Throws ParseError (with 1-based line/column) on syntax
// errors, unknown versions or kinds, unknown fields, duplicate labels,
// dangling references, and malformed entries.
SpecDocument parse_spec_text(const std::string& text);
SpecDocument parse_spec_file(const std::string& path);

// Canonical serialization: fixed key order, canonicalized bodies, two-space
// indentation, trailing newline. parse(serialize(doc)) == doc.
std::string serialize_spec(const SpecDocument& doc);

// Builders. All throw InputError on semantic problems (caps exceeded,
// inconsistent actuality, invalid seed data).
FiniteOrtholattice build_lattice(const LatticeSpec& spec, int max_elements = kDefaultMaxElements);
StatePropertySystem build_sps(const SpsSpec& spec, int max_elements = kDefaultMaxElements);
StatePropertySystem build_hilbert_sample(const HilbertSpec& spec,
                                         int max_elements = kDefaultMaxElements);
GeneratedLattice<GaussRat> build_generated_lattice(const HilbertSpec& spec,
                                                   int max_elements = kDefaultMaxElements);

// A product factor is a document of kind "sps" or "hilbert-seeds".
StatePropertySystem build_factor(const SpecDocument& doc, int max_elements = kDefaultMaxElements);
SeparatedProductSystem build_product_job(const ProductJobSpec& job,
                                         int max_elements = kDefaultMaxElements);

// Export a lattice as a document body that `check` accepts back, reproducing
// order, orthocomplement, and bounds.
LatticeSpec lattice_to_spec(const FiniteOrtholattice& L);

}  // namespace qlat
