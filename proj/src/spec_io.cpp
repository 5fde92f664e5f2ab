#include "qlat/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"
#include "qlat/bits.hpp"
#include "qlat/errors.hpp"

namespace qlat {
namespace {

using Json = nlohmann::ordered_json;

// ---------- error positions ----------
//
// Syntax errors carry an exact byte offset. Semantic errors (unknown field,
// dangling reference, duplicate label) are located by searching the source
// for the offending token text: exact whenever the token is unique, and the
// message always names the label regardless.

struct Locator {
  const std::string* text = nullptr;

  std::pair<int, int> position_of_byte(size_t byte) const {
    size_t stop = byte > 0 ? byte - 1 : 0;
    if (stop > text->size()) stop = text->size();
    int line = 1, col = 1;
    for (size_t i = 0; i < stop; i++) {
      if ((*text)[i] == '\n') {
        line++;
        col = 1;
      } else {
        col++;
      }
    }
    return {line, col};
  }

  std::pair<int, int> find(const std::string& token, int occurrence) const {
    const std::string needle = Json(token).dump();  // quoted + escaped form
    size_t pos = 0;
    int seen = 0;
    while (true) {
      pos = text->find(needle, pos);
      if (pos == std::string::npos) return {1, 1};
      if (++seen == occurrence) break;
      pos += needle.size();
    }
    return position_of_byte(pos + 1);
  }
};

[[noreturn]] void fail(const Locator& loc, const std::string& token, int occurrence,
                       const std::string& msg) {
  auto [line, col] = token.empty() ? std::pair<int, int>{1, 1} : loc.find(token, occurrence);
  throw ParseError(msg, line, col);
}

// ---------- strict object access ----------

class Fields {
 public:
  Fields(const Json& obj, std::string context, const Locator& loc, const std::string& what)
      : obj_(obj), ctx_(std::move(context)), loc_(loc) {
    if (!obj.is_object()) fail(loc_, ctx_, 1, what + " must be a JSON object");
  }

  const Json* get(const char* key) {
    used_.insert(key);
    auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &it.value();
  }

  const Json& require(const char* key, const std::string& what) {
    const Json* p = get(key);
    if (!p) fail(loc_, ctx_, 1, "missing field '" + std::string(key) + "' in " + what);
    return *p;
  }

  void finish(const std::string& what) {
    for (auto it = obj_.begin(); it != obj_.end(); ++it)
      if (!used_.count(it.key()))
        fail(loc_, it.key(), 1, "unknown field '" + it.key() + "' in " + what);
  }

 private:
  const Json& obj_;
  std::string ctx_;
  const Locator& loc_;
  std::set<std::string> used_;
};

// ---------- shared readers ----------

std::vector<std::string> string_array(const Json& j, const Locator& loc, const std::string& ctx,
                                      const std::string& what) {
  if (!j.is_array()) fail(loc, ctx, 1, what + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string() || e.get<std::string>().empty())
      fail(loc, ctx, 1, what + " entries must be nonempty strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_array(const Json& j, const Locator& loc,
                                                            const std::string& ctx,
                                                            const std::string& what) {
  if (!j.is_array()) fail(loc, ctx, 1, what + " must be an array");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      fail(loc, ctx, 1, what + " entries must be [label, label] pairs");
    out.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
  }
  return out;
}

std::map<std::string, int> index_labels(const std::vector<std::string>& labels, const Locator& loc,
                                        const std::string& what) {
  std::map<std::string, int> ix;
  for (int i = 0; i < (int)labels.size(); i++)
    if (!ix.emplace(labels[i], i).second)
      fail(loc, labels[i], 2, "duplicate " + what + " label '" + labels[i] + "'");
  return ix;
}

int resolve(const std::map<std::string, int>& ix, const std::string& label, const Locator& loc,
            const std::string& what) {
  auto it = ix.find(label);
  if (it == ix.end()) fail(loc, label, 1, what + " references undeclared label '" + label + "'");
  return it->second;
}

// ---------- per-kind parsers ----------

LatticeSpec parse_lattice_fields(Fields& f, const Locator& loc, const std::string& what) {
  LatticeSpec out;
  out.elements = string_array(f.require("elements", what), loc, "elements", "elements");
  if (out.elements.empty()) fail(loc, "elements", 1, "elements must be a nonempty array");
  auto ix = index_labels(out.elements, loc, "element");
  const int n = (int)out.elements.size();

  std::set<std::pair<int, int>> order;
  for (const auto& [a, b] : pair_array(f.require("order", what), loc, "order", "order")) {
    int ia = resolve(ix, a, loc, "order pair");
    int ib = resolve(ix, b, loc, "order pair");
    if (ia != ib) order.insert({ia, ib});
  }
  for (const auto& [ia, ib] : order) out.order.push_back({out.elements[ia], out.elements[ib]});

  if (const Json* oj = f.get("ortho")) {
    out.has_ortho = true;
    std::map<int, int> omap;
    std::set<std::pair<int, int>> opairs;
    for (const auto& [a, b] : pair_array(*oj, loc, "ortho", "ortho")) {
      int ia = resolve(ix, a, loc, "orthocomplement pair");
      int ib = resolve(ix, b, loc, "orthocomplement pair");
      if (ia == ib) fail(loc, a, 1, "orthocomplement pair maps '" + a + "' to itself");
      auto ita = omap.find(ia);
      auto itb = omap.find(ib);
      if ((ita != omap.end() && ita->second != ib) || (itb != omap.end() && itb->second != ia)) {
        const std::string& culprit = (ita != omap.end() && ita->second != ib) ? a : b;
        fail(loc, culprit, 1,
             "element '" + culprit + "' appears in more than one orthocomplement pair");
      }
      omap[ia] = ib;
      omap[ib] = ia;
      opairs.insert({std::min(ia, ib), std::max(ia, ib)});
    }
    for (int i = 0; i < n; i++)
      if (!omap.count(i))
        fail(loc, out.elements[i], 1,
             "element '" + out.elements[i] + "' is missing from the orthocomplement map");
    for (const auto& [ia, ib] : opairs)
      out.ortho.push_back({out.elements[ia], out.elements[ib]});
  }

  const Json& jb = f.require("bottom", what);
  if (!jb.is_string()) fail(loc, "bottom", 1, "bottom must be an element label");
  out.bottom = jb.get<std::string>();
  resolve(ix, out.bottom, loc, "bottom");
  const Json& jt = f.require("top", what);
  if (!jt.is_string()) fail(loc, "top", 1, "top must be an element label");
  out.top = jt.get<std::string>();
  resolve(ix, out.top, loc, "top");
  return out;
}

SpsSpec parse_sps_fields(Fields& f, const Locator& loc, const std::string& what) {
  SpsSpec out;
  out.states = string_array(f.require("states", what), loc, "states", "states");
  if (out.states.empty()) fail(loc, "states", 1, "states must be a nonempty array");
  auto six = index_labels(out.states, loc, "state");

  if (const Json* so = f.get("state_ortho")) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& [a, b] : pair_array(*so, loc, "state_ortho", "state_ortho")) {
      int ia = resolve(six, a, loc, "state_ortho pair");
      int ib = resolve(six, b, loc, "state_ortho pair");
      if (ia == ib) fail(loc, a, 1, "a state cannot be orthogonal to itself: '" + a + "'");
      pairs.insert({std::min(ia, ib), std::max(ia, ib)});
    }
    for (const auto& [ia, ib] : pairs) out.state_ortho.push_back({out.states[ia], out.states[ib]});
  }

  Fields lf(f.require("lattice", what), "lattice", loc, "lattice body");
  out.lattice = parse_lattice_fields(lf, loc, "lattice body");
  lf.finish("lattice body");
  std::map<std::string, int> pix;
  for (int i = 0; i < (int)out.lattice.elements.size(); i++) pix[out.lattice.elements[i]] = i;

  const Json& aj = f.require("actuality", what);
  if (!aj.is_array()) fail(loc, "actuality", 1, "actuality must be an array");
  std::map<std::pair<int, int>, bool> seen;
  for (const auto& e : aj) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
        !e[2].is_boolean())
      fail(loc, "actuality", 1, "actuality entries must be [state, property, boolean] triples");
    int s = resolve(six, e[0].get<std::string>(), loc, "actuality triple");
    int p = resolve(pix, e[1].get<std::string>(), loc, "actuality triple");
    bool v = e[2].get<bool>();
    auto it = seen.find({s, p});
    if (it != seen.end() && it->second != v)
      fail(loc, out.states[s], 1,
           "contradictory actuality for state '" + out.states[s] + "' and property '" +
               out.lattice.elements[p] + "'");
    seen[{s, p}] = v;
  }
  for (const auto& [key, v] : seen)
    out.actuality.emplace_back(out.states[key.first], out.lattice.elements[key.second], v);
  return out;
}

HilbertSpec parse_hilbert_fields(Fields& f, const Locator& loc, const std::string& what) {
  HilbertSpec out;
  const Json& dj = f.require("dimension", what);
  if (!dj.is_number_integer()) fail(loc, "dimension", 1, "dimension must be an integer");
  out.dimension = dj.get<int>();
  if (out.dimension < 1 || out.dimension > kMaxAmbientDim)
    fail(loc, "dimension", 1,
         "dimension must be between 1 and " + std::to_string(kMaxAmbientDim));

  auto read_entry = [&](const Json& e, const std::string& ctx) -> RationalEntry {
    if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer() || !e[3].is_number_integer())
      fail(loc, ctx, 1,
           "scalar entries for '" + ctx + "' must be [re_num, re_den, im_num, im_den] integers");
    RationalEntry r{e[0].get<long long>(), e[1].get<long long>(), e[2].get<long long>(),
                    e[3].get<long long>()};
    if (r.re_den == 0 || r.im_den == 0)
      fail(loc, ctx, 1, "zero denominator in a scalar entry for '" + ctx + "'");
    return r;
  };
  auto read_vector = [&](const Json& v, const std::string& ctx) -> std::vector<RationalEntry> {
    if (!v.is_array() || (int)v.size() != out.dimension)
      fail(loc, ctx, 1,
           "vector for '" + ctx + "' must list exactly " + std::to_string(out.dimension) +
               " scalar entries");
    std::vector<RationalEntry> entries;
    for (const auto& e : v) entries.push_back(read_entry(e, ctx));
    return entries;
  };

  const Json& sj = f.require("states", what);
  if (!sj.is_array()) fail(loc, "states", 1, "states must be an array");
  std::vector<std::string> state_labels;
  for (const auto& e : sj) {
    Fields ef(e, "states", loc, "state entry");
    const Json& lj = ef.require("label", "state entry");
    if (!lj.is_string() || lj.get<std::string>().empty())
      fail(loc, "states", 1, "state entries need a nonempty label");
    std::string label = lj.get<std::string>();
    out.states.push_back({label, read_vector(ef.require("vector", "state entry"), label)});
    state_labels.push_back(label);
    ef.finish("state entry");
  }
  index_labels(state_labels, loc, "state");

  const Json& pj = f.require("seeds", what);
  if (!pj.is_array()) fail(loc, "seeds", 1, "seeds must be an array");
  std::vector<std::string> seed_labels;
  for (const auto& e : pj) {
    Fields ef(e, "seeds", loc, "seed entry");
    const Json& lj = ef.require("label", "seed entry");
    if (!lj.is_string() || lj.get<std::string>().empty())
      fail(loc, "seeds", 1, "seed entries need a nonempty label");
    std::string label = lj.get<std::string>();
    const Json& cj = ef.require("columns", "seed entry");
    if (!cj.is_array() || cj.empty())
      fail(loc, label, 1, "seed '" + label + "' must list at least one basis column");
    SeedSubspaceSpec seed;
    seed.label = label;
    for (const auto& c : cj) seed.columns.push_back(read_vector(c, label));
    out.seeds.push_back(std::move(seed));
    seed_labels.push_back(label);
    ef.finish("seed entry");
  }
  index_labels(seed_labels, loc, "seed");
  return out;
}

SpecDocument parse_document(const Json& j, const Locator& loc, const std::string& ctx);

ProductJobSpec parse_product_fields(Fields& f, const Locator& loc, const std::string& what) {
  ProductJobSpec out;
  auto factor = [&](const char* key) {
    auto doc =
        std::make_shared<SpecDocument>(parse_document(f.require(key, what), loc, key));
    if (doc->kind != "sps" && doc->kind != "hilbert-seeds")
      fail(loc, key, 1,
           std::string("product factor '") + key +
               "' must be a state-property or sampled-subspace document");
    return doc;
  };
  out.first = factor("first");
  out.second = factor("second");
  if (const Json* eg = f.get("extended_generators")) {
    if (!eg->is_boolean()) fail(loc, "extended_generators", 1, "extended_generators must be a boolean");
    out.extended_generators = eg->get<bool>();
  }
  if (const Json* mf = f.get("max_family")) {
    if (!mf->is_number_integer() || mf->get<long long>() < 2)
      fail(loc, "max_family", 1, "max_family must be an integer of at least 2");
    out.max_family = mf->get<int>();
  }
  return out;
}

SpecDocument parse_document(const Json& j, const Locator& loc, const std::string& ctx) {
  const std::string what = ctx.empty() ? "the document" : "the embedded '" + ctx + "' document";
  Fields f(j, ctx, loc, what);
  SpecDocument doc;

  const Json& vj = f.require("version", what);
  if (!vj.is_number_integer() || vj.get<int>() != kSpecFormatVersion)
    fail(loc, "version", 1,
         "unsupported format version (this tool reads version " +
             std::to_string(kSpecFormatVersion) + ")");
  doc.version = vj.get<int>();

  const Json& kj = f.require("kind", what);
  if (!kj.is_string()) fail(loc, "kind", 1, "kind must be a string");
  doc.kind = kj.get<std::string>();

  std::string body_what;
  if (doc.kind == "lattice") {
    body_what = "a lattice document";
    doc.lattice = parse_lattice_fields(f, loc, body_what);
  } else if (doc.kind == "sps") {
    body_what = "a state-property document";
    doc.sps = parse_sps_fields(f, loc, body_what);
  } else if (doc.kind == "hilbert-seeds") {
    body_what = "a sampled-subspace document";
    doc.hilbert = parse_hilbert_fields(f, loc, body_what);
  } else if (doc.kind == "product-job") {
    body_what = "a product-job document";
    doc.product = parse_product_fields(f, loc, body_what);
  } else {
    fail(loc, doc.kind, 1, "unknown document kind '" + doc.kind + "'");
  }
  f.finish(body_what);
  return doc;
}

// ---------- serialization ----------

Json lattice_body_json(const LatticeSpec& s) {
  Json j = Json::object();
  j["elements"] = s.elements;
  Json order = Json::array();
  for (const auto& [a, b] : s.order) order.push_back(Json::array({a, b}));
  j["order"] = std::move(order);
  if (s.has_ortho) {
    Json ortho = Json::array();
    for (const auto& [a, b] : s.ortho) ortho.push_back(Json::array({a, b}));
    j["ortho"] = std::move(ortho);
  }
  j["bottom"] = s.bottom;
  j["top"] = s.top;
  return j;
}

Json entry_json(const RationalEntry& e) {
  return Json::array({e.re_num, e.re_den, e.im_num, e.im_den});
}

Json vector_json(const std::vector<RationalEntry>& v) {
  Json j = Json::array();
  for (const auto& e : v) j.push_back(entry_json(e));
  return j;
}

Json document_json(const SpecDocument& d) {
  Json j = Json::object();
  j["version"] = d.version;
  j["kind"] = d.kind;
  if (d.kind == "lattice") {
    j.update(lattice_body_json(d.lattice));
  } else if (d.kind == "sps") {
    j["states"] = d.sps.states;
    if (!d.sps.state_ortho.empty()) {
      Json so = Json::array();
      for (const auto& [a, b] : d.sps.state_ortho) so.push_back(Json::array({a, b}));
      j["state_ortho"] = std::move(so);
    }
    j["lattice"] = lattice_body_json(d.sps.lattice);
    Json acts = Json::array();
    for (const auto& [s, p, v] : d.sps.actuality) acts.push_back(Json::array({s, p, v}));
    j["actuality"] = std::move(acts);
  } else if (d.kind == "hilbert-seeds") {
    j["dimension"] = d.hilbert.dimension;
    Json states = Json::array();
    for (const auto& s : d.hilbert.states)
      states.push_back(Json{{"label", s.label}, {"vector", vector_json(s.vec)}});
    j["states"] = std::move(states);
    Json seeds = Json::array();
    for (const auto& s : d.hilbert.seeds) {
      Json cols = Json::array();
      for (const auto& c : s.columns) cols.push_back(vector_json(c));
      seeds.push_back(Json{{"label", s.label}, {"columns", std::move(cols)}});
    }
    j["seeds"] = std::move(seeds);
  } else if (d.kind == "product-job") {
    j["first"] = document_json(*d.product.first);
    j["second"] = document_json(*d.product.second);
    if (d.product.extended_generators) j["extended_generators"] = true;
    if (d.product.max_family) j["max_family"] = *d.product.max_family;
  } else {
    throw InputError("cannot serialize a document of unknown kind '" + d.kind + "'");
  }
  return j;
}

// ---------- build helpers ----------

GaussRat to_gauss(const RationalEntry& e) {
  return GaussRat(BigRat(e.re_num, e.re_den), BigRat(e.im_num, e.im_den));
}

RatMat column_of(const std::vector<RationalEntry>& v) {
  RatMat m((int)v.size(), 1);
  for (int i = 0; i < (int)v.size(); i++) m.at(i, 0) = to_gauss(v[i]);
  return m;
}

}  // namespace

SpecDocument parse_spec_text(const std::string& text) {
  Locator loc{&text};
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = loc.position_of_byte(e.byte);
    // e.what() is "[json.exception.parse_error.N] parse error at line L,
    // column C: <detail>"; keep only the detail, our prefix carries the
    // position already.
    std::string msg = e.what();
    size_t at = msg.find("column");
    size_t cut = at == std::string::npos ? msg.find("] ") : msg.find(": ", at);
    if (cut != std::string::npos) msg = msg.substr(cut + 2);
    throw ParseError(msg, line, col);
  }
  if (!root.is_object()) throw ParseError("document must be a JSON object", 1, 1);
  return parse_document(root, loc, "");
}

SpecDocument parse_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spec_text(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string serialize_spec(const SpecDocument& doc) { return document_json(doc).dump(2) + "\n"; }

FiniteOrtholattice build_lattice(const LatticeSpec& spec, int max_elements) {
  const int n = (int)spec.elements.size();
  std::map<std::string, int> ix;
  for (int i = 0; i < n; i++) ix[spec.elements[i]] = i;

  std::vector<Bits> up(n, Bits(n));
  for (int i = 0; i < n; i++) up[i].set(i);
  for (const auto& [a, b] : spec.order) up[ix.at(a)].set(ix.at(b));
  // reflexive-transitive closure
  for (int k = 0; k < n; k++)
    for (int i = 0; i < n; i++)
      if (up[i].test(k)) up[i] |= up[k];

  std::vector<int> omap;
  if (spec.has_ortho) {
    omap.assign(n, -1);
    for (const auto& [a, b] : spec.ortho) {
      omap[ix.at(a)] = ix.at(b);
      omap[ix.at(b)] = ix.at(a);
    }
  }
  return FiniteOrtholattice::from_rows(spec.elements, std::move(up), std::move(omap),
                                       ix.at(spec.bottom), ix.at(spec.top), max_elements);
}

StatePropertySystem build_sps(const SpsSpec& spec, int max_elements) {
  FiniteOrtholattice L = build_lattice(spec.lattice, max_elements);
  std::map<std::string, int> six, pix;
  for (int i = 0; i < (int)spec.states.size(); i++) six[spec.states[i]] = i;
  for (int i = 0; i < L.size(); i++) pix[L.labels[i]] = i;

  std::vector<std::tuple<int, int, bool>> acts;
  for (const auto& [s, p, v] : spec.actuality) acts.emplace_back(six.at(s), pix.at(p), v);
  std::vector<std::pair<int, int>> orth;
  for (const auto& [a, b] : spec.state_ortho) orth.push_back({six.at(a), six.at(b)});
  return StatePropertySystem::make(spec.states, std::move(L), acts, orth);
}

StatePropertySystem build_hilbert_sample(const HilbertSpec& spec, int max_elements) {
  std::vector<RatMat> dirs;
  std::vector<std::string> dir_labels;
  for (const auto& s : spec.states) {
    dirs.push_back(column_of(s.vec));
    dir_labels.push_back(s.label);
  }
  std::vector<RatSubspace> props;
  std::vector<std::string> prop_labels;
  for (const auto& s : spec.seeds) {
    RatMat basis(spec.dimension, (int)s.columns.size());
    for (int c = 0; c < (int)s.columns.size(); c++)
      for (int r = 0; r < spec.dimension; r++) basis.at(r, c) = to_gauss(s.columns[c][r]);
    props.push_back(RatSubspace::from_span(basis));
    prop_labels.push_back(s.label);
  }
  return sample_sps(dirs, dir_labels, props, prop_labels, max_elements);
}

GeneratedLattice<GaussRat> build_generated_lattice(const HilbertSpec& spec, int max_elements) {
  std::vector<RatSubspace> seeds;
  std::vector<std::string> labels;
  for (const auto& s : spec.seeds) {
    RatMat basis(spec.dimension, (int)s.columns.size());
    for (int c = 0; c < (int)s.columns.size(); c++)
      for (int r = 0; r < spec.dimension; r++) basis.at(r, c) = to_gauss(s.columns[c][r]);
    seeds.push_back(RatSubspace::from_span(basis));
    labels.push_back(s.label);
  }
  return generate_subspace_lattice(seeds, labels, max_elements);
}

StatePropertySystem build_factor(const SpecDocument& doc, int max_elements) {
  if (doc.kind == "sps") return build_sps(doc.sps, max_elements);
  if (doc.kind == "hilbert-seeds") return build_hilbert_sample(doc.hilbert, max_elements);
  throw InputError("a product factor must be a state-property or sampled-subspace document, got kind '" +
                   doc.kind + "'");
}

SeparatedProductSystem build_product_job(const ProductJobSpec& job, int max_elements) {
  StatePropertySystem f1 = build_factor(*job.first, max_elements);
  StatePropertySystem f2 = build_factor(*job.second, max_elements);
  SeparatedProductOptions opts;
  opts.extended_generators = job.extended_generators;
  opts.max_family = job.max_family ? *job.max_family : max_elements;
  return build_separated_product(f1, f2, opts);
}

LatticeSpec lattice_to_spec(const FiniteOrtholattice& L) {
  LatticeSpec s;
  s.elements = L.labels;
  for (int i = 0; i < L.size(); i++)
    for (int j = L.up[i].next_set(0); j >= 0; j = L.up[i].next_set(j + 1))
      if (i != j) s.order.push_back({L.labels[i], L.labels[j]});
  if (L.has_ortho()) {
    s.has_ortho = true;
    std::set<std::pair<int, int>> pairs;
    for (int i = 0; i < L.size(); i++) {
      if (L.ortho[i] == i)
        throw InputError("cannot serialize an orthocomplement that maps '" + L.labels[i] +
                         "' to itself");
      pairs.insert({std::min(i, L.ortho[i]), std::max(i, L.ortho[i])});
    }
    for (const auto& [a, b] : pairs) s.ortho.push_back({L.labels[a], L.labels[b]});
  }
  s.bottom = L.labels[L.bottom];
  s.top = L.labels[L.top];
  return s;
}

}  // namespace qlat
