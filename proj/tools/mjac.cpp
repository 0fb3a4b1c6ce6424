// mjac: command-line front end. One JSON document per invocation.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "mjac/config_poly.hpp"
#include "mjac/density.hpp"
#include "mjac/error.hpp"
#include "mjac/fp_count.hpp"
#include "mjac/io.hpp"
#include "mjac/jacobian.hpp"
#include "mjac/verify.hpp"

namespace {

using namespace mjac;

enum Exit { ok = 0, verification_failed = 1, input_error = 2, budget_refusal = 3 };

struct Options {
  std::string input;
  std::string output;
  unsigned p = 0;
  unsigned workers = 1;
  std::string method;
  std::string pivot;
  bool torus = false;
  std::optional<unsigned> empirical;
  std::string check;
  std::string lengths;
  std::string suite = "all";
  std::vector<unsigned> primes{2, 3, 5, 7};
};

// Inline JSON, or @path to read it from a file.
Json json_argument(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) fail("cannot open '" + text.substr(1) + "'");
    return parse_json_text(std::string(std::istreambuf_iterator<char>(in), {}));
  }
  return parse_json_text(text);
}

void require_prime(unsigned p) {
  if (!is_prime(p)) fail(std::to_string(p) + " is not prime");
}

std::string subject_name(const std::string& path) { return std::filesystem::path(path).stem().string(); }

struct Labelled {
  std::vector<std::string> labels;
  MultilinearPoly poly;
};

Labelled polynomial_of(const InputDocument& doc) {
  if (auto p = std::get_if<LabelledPoly>(&doc)) return {p->vars, p->poly};
  const RegularMatroid m = as_matroid(doc);
  return {m.ground(), psi_from_bases(m)};
}

std::size_t resolve_pivot(const std::string& name, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return i;
  fail("unknown pivot variable '" + name + "'");
}

int run_psi(const Options& o, Json& out) {
  const RegularMatroid m = as_matroid(read_document_file(o.input));
  const MultilinearPoly psi = o.method == "dc" ? psi_deletion_contraction(m) : psi_from_bases(m);
  out = poly_to_json(psi, m.ground());
  return ok;
}

int run_jac(const Options& o, Json& out) {
  RegularMatroid m = as_matroid(read_document_file(o.input));
  if (!o.lengths.empty()) m = expand(m, length_map_from_json(json_argument(o.lengths), m.ground())).matroid;
  out = group_to_json(jacobian_group(m));
  return ok;
}

int run_expand(const Options& o, Json& out) {
  const RegularMatroid m = as_matroid(read_document_file(o.input));
  const LengthMap lam = length_map_from_json(json_argument(o.lengths), m.ground());
  const ExpandedMatroid ex = expand(m, lam);
  out = matroid_to_json(ex.matroid);
  Json groups = Json::object();
  for (std::size_t e = 0; e < m.size(); ++e) groups[m.ground()[e]] = ex.ground.groups[e];
  out["groups"] = groups;
  return ok;
}

int run_count(const Options& o, Json& out) {
  require_prime(o.p);
  const Labelled in = polynomial_of(read_document_file(o.input));
  std::optional<std::size_t> pivot;
  if (!o.pivot.empty()) pivot = resolve_pivot(o.pivot, in.labels);
  const CountMethod method = o.method == "naive" ? CountMethod::naive : CountMethod::eliminative;
  const CountReport r = count_report(in.poly, o.p, method, pivot, o.torus, o.workers);
  out = count_to_json(r);
  out["method"] = method == CountMethod::naive ? "naive" : "elim";
  if (method == CountMethod::eliminative) {
    const auto used = pivot ? pivot : default_pivot(in.poly);
    if (used) out["pivot"] = in.labels[*used];
  }
  return ok;
}

int run_density(const Options& o, Json& out) {
  require_prime(o.p);
  const RegularMatroid m = as_matroid(read_document_file(o.input));
  const std::string id = subject_name(o.input);

  if (o.check == "sandwich") {
    if (!o.empirical) fail("--check sandwich needs --empirical <m_max>");
    const SandwichReport s = sandwich_report(m, o.p, *o.empirical);
    out = sandwich_to_json(s);
    out["p"] = o.p;
    out["matroid"] = id;
    return s.holds ? ok : verification_failed;
  }
  if (o.check == "dual") {
    DensityReport a = torus_density(m, o.p, o.workers), b = torus_density(dual(m), o.p, o.workers);
    a.matroid_id = id;
    b.matroid_id = id + "*";
    const bool holds = a.value == b.value;
    out = Json{{"check", "dual"}, {"p", o.p}, {"primal", density_to_json(a)}, {"dual", density_to_json(b)}, {"holds", holds}};
    return holds ? ok : verification_failed;
  }
  if (o.check == "asymptotic") {
    const AsymptoticReport a = asymptotic_report(m, o.p, o.workers);
    out = asymptotic_to_json(a);
    out["p"] = o.p;
    out["matroid"] = id;
    return a.holds ? ok : verification_failed;
  }

  DensityReport r = o.torus       ? torus_density(m, o.p, o.workers)
                    : o.empirical ? density_empirical(m, o.p, *o.empirical)
                                  : density_formula(m, o.p, o.workers);
  r.matroid_id = id;
  out = density_to_json(r);
  return ok;
}

int run_verify(const Options& o, Json& out) {
  for (unsigned p : o.primes) require_prime(p);
  VerifyOptions v;
  v.primes = o.primes;
  v.workers = o.workers;
  const auto results = run_suite(o.suite, v);
  out = results_to_json(results);
  return out["failed"].get<std::size_t>() == 0 ? ok : verification_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobians, configuration polynomials and p-torsion densities of regular matroids"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-o,--output", o.output, "Write the JSON document here instead of stdout");

  auto* psi = app.add_subcommand("psi", "Configuration polynomial of a graph or matroid");
  psi->add_option("--input", o.input)->required()->check(CLI::ExistingFile);
  psi->add_option("--method", o.method, "bases or dc")->check(CLI::IsMember({"bases", "dc"}));

  auto* jac = app.add_subcommand("jac", "Jacobian group");
  jac->add_option("--input", o.input)->required()->check(CLI::ExistingFile);
  jac->add_option("--expand", o.lengths, "Length map {label: length}, inline or @file");

  auto* exp = app.add_subcommand("expand", "Metric expansion M_lambda");
  exp->add_option("--input", o.input)->required()->check(CLI::ExistingFile);
  exp->add_option("--lengths", o.lengths, "Length map {label: length}, inline or @file")->required();

  auto* count = app.add_subcommand("count", "F_p zero counts of Psi or a polynomial");
  count->add_option("--p", o.p)->required();
  count->add_option("--input", o.input)->required()->check(CLI::ExistingFile);
  count->add_option("--method", o.method)->check(CLI::IsMember({"naive", "elim"}));
  count->add_option("--pivot", o.pivot, "Pivot variable label");
  count->add_flag("--torus", o.torus, "Also count zeros with all coordinates nonzero");
  count->add_option("--workers", o.workers)->check(CLI::PositiveNumber);

  auto* dens = app.add_subcommand("density", "p-torsion densities");
  dens->add_option("--p", o.p)->required();
  dens->add_option("--input", o.input)->required()->check(CLI::ExistingFile);
  dens->add_flag("--torus", o.torus, "mu(S_p(M)) instead of mu(J_p(M))");
  dens->add_option("--empirical", o.empirical, "Exhaustive density over {1..m}^E");
  dens->add_option("--check", o.check)->check(CLI::IsMember({"sandwich", "dual", "asymptotic"}));
  dens->add_option("--workers", o.workers)->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "Run invariant suites on the built-in corpus");
  ver->add_option("--suite", o.suite, "all or one suite name");
  ver->add_option("--primes", o.primes)->delimiter(',');
  ver->add_option("--workers", o.workers)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  Json out;
  int status = ok;
  try {
    if (*psi) status = run_psi(o, out);
    else if (*jac) status = run_jac(o, out);
    else if (*exp) status = run_expand(o, out);
    else if (*count) status = run_count(o, out);
    else if (*dens) status = run_density(o, out);
    else status = run_verify(o, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::budget ? budget_refusal : input_error;
  }

  const std::string text = out.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.output);
    if (!f) {
      std::cerr << "error: cannot write '" << o.output << "'\n";
      return input_error;
    }
    f << text;
  }
  return status;
}
