// Command-line front end: check documents, run the demos, build products,
// and generate subspace lattices. Reports go to stdout, errors to stderr.
// Exit codes: 0 all checks passed, 1 at least one axiom check failed,
// 2 unusable input (bad file, bad flags, caps exceeded).

#include <cstdlib>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlat/axioms.hpp"
#include "qlat/errors.hpp"
#include "qlat/product.hpp"
#include "qlat/report_io.hpp"
#include "qlat/separated.hpp"
#include "qlat/spec_io.hpp"

namespace {

using namespace qlat;

int resolve_max_elements(int flag_value) {
  if (flag_value >= 0) {
    if (flag_value < 2) throw InputError("--max-elements must be an integer of at least 2");
    return flag_value;
  }
  const char* env = std::getenv("QLAT_MAX_ELEMENTS");
  if (env == nullptr || *env == '\0') return kDefaultMaxElements;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 2)
    throw InputError("QLAT_MAX_ELEMENTS must be an integer of at least 2");
  return (int)v;
}

ReportFacts product_facts(const SeparatedProductSystem& sp) {
  return {
      {"kind", "separated product"},
      {"factor-states", std::to_string(sp.n1) + " x " + std::to_string(sp.n2)},
      {"product-states", std::to_string(sp.sps.state_count())},
      {"property-family", std::to_string(sp.sps.property_count())},
  };
}

// separated_axiom_report appends the two product diagnostics after the axiom
// reports; split them off so they never influence the exit code.
int emit_product_report(const SeparatedProductSystem& sp, const CheckOptions& opts,
                        OutputFormat format) {
  std::vector<AxiomReport> reports = separated_axiom_report(sp, opts);
  std::vector<Diagnostic> diagnostics;
  diagnostics.push_back({"classicality", check_classicality(sp.sps, opts)});
  diagnostics.push_back({"three-points-per-line", reports.back()});
  reports.pop_back();
  diagnostics.insert(diagnostics.end() - 1, {"ssr-orthogonality", reports.back()});
  reports.pop_back();
  std::cout << check_output(product_facts(sp), reports, diagnostics, format);
  return any_axiom_failure(reports) ? 1 : 0;
}

int run_check(const std::string& path, const CheckOptions& opts, OutputFormat format,
              int max_elements) {
  SpecDocument doc = parse_spec_file(path);
  if (doc.kind == "lattice") {
    FiniteOrtholattice L = build_lattice(doc.lattice, max_elements);
    ReportFacts facts = {{"kind", "lattice"}, {"elements", std::to_string(L.size())}};
    std::vector<AxiomReport> reports = full_report(L, opts);
    std::cout << check_output(facts, reports, {}, format);
    return any_axiom_failure(reports) ? 1 : 0;
  }
  if (doc.kind == "sps" || doc.kind == "hilbert-seeds") {
    StatePropertySystem S = build_factor(doc, max_elements);
    ReportFacts facts = {
        {"kind", doc.kind == "sps" ? "state-property system" : "sampled subspace system"},
        {"states", std::to_string(S.state_count())},
        {"properties", std::to_string(S.property_count())},
    };
    if (doc.kind == "hilbert-seeds")
      facts.insert(facts.begin() + 1, {"dimension", std::to_string(doc.hilbert.dimension)});
    std::vector<AxiomReport> reports = full_report(S, opts);
    std::vector<Diagnostic> diagnostics = {{"classicality", check_classicality(S, opts)}};
    std::cout << check_output(facts, reports, diagnostics, format);
    return any_axiom_failure(reports) ? 1 : 0;
  }
  // product-job
  SeparatedProductSystem sp = build_product_job(doc.product, max_elements);
  return emit_product_report(sp, opts, format);
}

int run_product(const std::string& first_path, const std::string& second_path,
                bool extended_generators, int max_family, const CheckOptions& opts,
                OutputFormat format, int max_elements) {
  SpecDocument d1 = parse_spec_file(first_path);
  SpecDocument d2 = parse_spec_file(second_path);
  StatePropertySystem f1 = build_factor(d1, max_elements);
  StatePropertySystem f2 = build_factor(d2, max_elements);
  SeparatedProductOptions options;
  options.extended_generators = extended_generators;
  options.max_family = max_family >= 0 ? max_family : max_elements;
  if (options.max_family < 2) throw InputError("--max-family must be an integer of at least 2");
  SeparatedProductSystem sp = build_separated_product(f1, f2, options);
  return emit_product_report(sp, opts, format);
}

int run_gen_hilbert(const std::string& path, int max_elements) {
  SpecDocument doc = parse_spec_file(path);
  if (doc.kind != "hilbert-seeds")
    throw InputError("gen-hilbert needs a sampled-subspace document (kind \"hilbert-seeds\"), "
                     "got kind \"" +
                     doc.kind + "\"");
  GeneratedLattice<GaussRat> gen = build_generated_lattice(doc.hilbert, max_elements);
  SpecDocument out;
  out.version = kSpecFormatVersion;
  out.kind = "lattice";
  out.lattice = lattice_to_spec(gen.lattice);
  std::cout << serialize_spec(out);
  return 0;
}

int run_demo_epr(int n1, int n2, OutputFormat format) {
  if (n1 < 2 || n1 > 4 || n2 < 2 || n2 > 4)
    throw InputError("--dim takes two factor dimensions between 2 and 4");
  RatMat p(n1, n1);
  p.at(0, 0) = GaussRat(1);
  RatMat q(n2, n2);
  q.at(0, 0) = GaussRat(1);
  JointMeasurement<GaussRat> jm;
  jm.p1 = kron(p, RatMat::identity(n2));
  jm.p2 = kron(RatMat::identity(n1), q);
  EprReport<GaussRat> report = epr_contradiction_demo(jm);
  std::cout << epr_output(report, format);
  bool ok = report.images_match && report.branches_vanish && report.cross_terms_vanish &&
            report.not_separate;
  return ok ? 0 : 1;
}

int run_demo_chsh(const std::vector<double>& angles, OutputFormat format) {
  ChshResult r;
  r.a = angles[0];
  r.a_prime = angles[1];
  r.b = angles[2];
  r.b_prime = angles[3];
  CxMat psi = singlet_state();
  r.e_ab = pair_correlation(psi, r.a, r.b);
  r.e_ab_prime = pair_correlation(psi, r.a, r.b_prime);
  r.e_a_prime_b = pair_correlation(psi, r.a_prime, r.b);
  r.e_a_prime_b_prime = pair_correlation(psi, r.a_prime, r.b_prime);
  r.value = chsh_value(psi, r.a, r.a_prime, r.b, r.b_prime);
  std::cout << chsh_output(r, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for finite property lattices and state-property systems"};
  app.require_subcommand(1);

  std::string format_str = "text";
  bool all_witnesses = false;
  int max_elements_flag = -1;
  app.add_option("--format", format_str, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--all-witnesses", all_witnesses, "List every violation, not just the first");
  app.add_option("--max-elements", max_elements_flag,
                 "Cap on lattice/closure sizes (default: QLAT_MAX_ELEMENTS or 4096)");

  auto* check = app.add_subcommand("check", "Run the axiom checks on a document");
  check->fallthrough();
  std::string check_file;
  check->add_option("file", check_file, "Document to check")->required();

  auto* product = app.add_subcommand("product", "Build and check the separated product");
  product->fallthrough();
  std::string first_file, second_file;
  bool extended_generators = false;
  int max_family = -1;
  product->add_option("first", first_file, "First factor document")->required();
  product->add_option("second", second_file, "Second factor document")->required();
  product->add_flag("--extended-generators", extended_generators,
                    "Also generate from the factors' certain-no sets");
  product->add_option("--max-family", max_family, "Cap on the closure-family size");

  auto* gen = app.add_subcommand("gen-hilbert", "Generate the closed subspace lattice of a "
                                                "sampled-subspace document");
  gen->fallthrough();
  std::string gen_file;
  gen->add_option("file", gen_file, "Sampled-subspace document")->required();

  auto* demo = app.add_subcommand("demo", "Run a built-in demonstration");
  demo->fallthrough();
  demo->require_subcommand(1);
  auto* epr = demo->add_subcommand("epr", "Joint-measurement non-separateness construction");
  epr->fallthrough();
  std::vector<int> dims = {2, 2};
  epr->add_option("--dim", dims, "Factor dimensions (two integers, 2..4)")->expected(2);
  auto* chsh = demo->add_subcommand("chsh", "Singlet correlations and the four-angle combination");
  chsh->fallthrough();
  std::vector<double> angles = {std::numbers::pi / 2, 0.0, std::numbers::pi / 4,
                                3 * std::numbers::pi / 4};
  chsh->add_option("--angles", angles, "Analyzer angles a a' b b' (radians)")->expected(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const OutputFormat format = format_str == "json" ? OutputFormat::json : OutputFormat::text;
    CheckOptions opts;
    opts.all_witnesses = all_witnesses;
    const int max_elements = resolve_max_elements(max_elements_flag);

    if (*check) return run_check(check_file, opts, format, max_elements);
    if (*product)
      return run_product(first_file, second_file, extended_generators, max_family, opts, format,
                         max_elements);
    if (*gen) return run_gen_hilbert(gen_file, max_elements);
    if (*epr) return run_demo_epr(dims[0], dims[1], format);
    if (*chsh) return run_demo_chsh(angles, format);
    std::cerr << "error: no subcommand selected\n\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
