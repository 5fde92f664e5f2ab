#include "qlat/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qlat {
namespace {

using Json = nlohmann::ordered_json;

std::string rat_str(const BigRat& x) { return x.str(); }

Json witness_json(const Witness& w) {
  Json j = Json::object();
  j["kind"] = w.kind;
  j["indices"] = w.indices;
  j["labels"] = w.labels;
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

Json report_json(const AxiomReport& r, const char* name_key, const std::string& name) {
  Json j = Json::object();
  j[name_key] = name;
  j["verdict"] = verdict_name(r.verdict);
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
  j["witnesses"] = std::move(ws);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

void append_report_text(std::ostringstream& out, const std::string& name, const AxiomReport& r) {
  std::string padded = name;
  if (padded.size() < 22) padded.resize(22, ' ');
  out << "  " << padded << verdict_name(r.verdict) << "\n";
  for (const auto& w : r.witnesses) {
    out << "    [" << w.kind << "]";
    for (size_t i = 0; i < w.labels.size(); i++) out << (i ? ", " : " ") << "'" << w.labels[i] << "'";
    if (!w.detail.empty()) out << ": " << w.detail;
    out << "\n";
  }
  if (!r.error.empty()) out << "    error: " << r.error << "\n";
}

int count_failures(const std::vector<AxiomReport>& axioms) {
  int n = 0;
  for (const auto& r : axioms)
    if (r.verdict != Verdict::pass) n++;
  return n;
}

}  // namespace

bool any_axiom_failure(const std::vector<AxiomReport>& axioms) {
  return count_failures(axioms) > 0;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string check_output(const ReportFacts& facts, const std::vector<AxiomReport>& axioms,
                         const std::vector<Diagnostic>& diagnostics, OutputFormat format) {
  const int failed = count_failures(axioms);
  if (format == OutputFormat::json) {
    Json j = Json::object();
    Json fj = Json::object();
    for (const auto& [k, v] : facts) fj[k] = v;
    j["facts"] = std::move(fj);
    Json aj = Json::array();
    for (const auto& r : axioms) aj.push_back(report_json(r, "axiom", axiom_name(r.axiom)));
    j["axioms"] = std::move(aj);
    Json dj = Json::array();
    for (const auto& [name, r] : diagnostics) dj.push_back(report_json(r, "check", name));
    j["diagnostics"] = std::move(dj);
    j["failed_axioms"] = failed;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  for (const auto& [k, v] : facts) out << k << ": " << v << "\n";
  out << "axioms:\n";
  for (const auto& r : axioms) append_report_text(out, axiom_name(r.axiom), r);
  if (!diagnostics.empty()) {
    out << "diagnostics:\n";
    for (const auto& [name, r] : diagnostics) append_report_text(out, name, r);
  }
  if (failed == 0)
    out << "all " << axioms.size() << " axiom checks passed\n";
  else
    out << failed << " of " << axioms.size() << " axiom checks failed\n";
  return out.str();
}

std::string epr_output(const EprReport<GaussRat>& r, OutputFormat format) {
  const std::pair<const char*, const BigRat*> joint[] = {
      {"p(x1,y1)", &r.p_x1y1}, {"p(x1,y2)", &r.p_x1y2},
      {"p(x2,y1)", &r.p_x2y1}, {"p(x2,y2)", &r.p_x2y2}};
  const std::pair<const char*, const BigRat*> single[] = {
      {"p(x1)", &r.p_x1}, {"p(x2)", &r.p_x2}, {"p(y1)", &r.p_y1}, {"p(y2)", &r.p_y2}};
  const std::pair<const char*, bool> checks[] = {{"images-match", r.images_match},
                                                 {"branches-vanish", r.branches_vanish},
                                                 {"cross-terms-vanish", r.cross_terms_vanish},
                                                 {"not-separate", r.not_separate}};

  if (format == OutputFormat::json) {
    Json j = Json::object();
    j["dimension"] = r.dim;
    Json jp = Json::object();
    for (const auto& [k, v] : joint) jp[k] = rat_str(*v);
    j["joint"] = std::move(jp);
    Json sp = Json::object();
    for (const auto& [k, v] : single) sp[k] = rat_str(*v);
    j["marginals"] = std::move(sp);
    Json ck = Json::object();
    for (const auto& [k, v] : checks) ck[k] = v;
    j["identities"] = std::move(ck);
    j["verdict"] = r.verdict;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "dimension: " << r.dim << "\n";
  out << "joint-outcome probabilities (exact):\n";
  for (const auto& [k, v] : joint) out << "  " << k << ": " << rat_str(*v) << "\n";
  out << "single-outcome probabilities (exact):\n";
  for (const auto& [k, v] : single) out << "  " << k << ": " << rat_str(*v) << "\n";
  out << "identities:\n";
  for (const auto& [k, v] : checks) out << "  " << k << ": " << (v ? "yes" : "no") << "\n";
  out << "verdict: " << r.verdict << "\n";
  return out.str();
}

std::string chsh_output(const ChshResult& r, OutputFormat format) {
  const std::pair<const char*, double> angles[] = {
      {"a", r.a}, {"a'", r.a_prime}, {"b", r.b}, {"b'", r.b_prime}};
  const std::pair<const char*, double> corr[] = {{"E(a,b)", r.e_ab},
                                                 {"E(a,b')", r.e_ab_prime},
                                                 {"E(a',b)", r.e_a_prime_b},
                                                 {"E(a',b')", r.e_a_prime_b_prime}};
  if (format == OutputFormat::json) {
    Json j = Json::object();
    Json aj = Json::object();
    for (const auto& [k, v] : angles) aj[k] = format_double(v);
    j["angles"] = std::move(aj);
    Json cj = Json::object();
    for (const auto& [k, v] : corr) cj[k] = format_double(v);
    j["correlations"] = std::move(cj);
    j["value"] = format_double(r.value);
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "analyzer angles (radians):\n";
  for (const auto& [k, v] : angles) out << "  " << k << ": " << format_double(v) << "\n";
  out << "singlet correlations:\n";
  for (const auto& [k, v] : corr) out << "  " << k << ": " << format_double(v) << "\n";
  out << "combination E(a,b) + E(a,b') + E(a',b) - E(a',b'): " << format_double(r.value) << "\n";
  return out.str();
}

}  // namespace qlat
