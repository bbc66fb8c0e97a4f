// hybridspec command-line front end.
//
// Exit status: 0 success, 1 computation error (or failed verification),
// 2 usage or validation error. Output is JSON unless --format says otherwise.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <hybridspec/hybridspec.hpp>

namespace hs = hybridspec;
using hs::io::json;
using hs::interval::BcKind;

namespace {

struct Options {
  std::string format = "json";
  // problem selection
  std::string problem = "interval";
  std::string left = "D", right = "D", diameter = "D", arc = "D", bc0 = "D";
  double h = 0, length = hs::pi, lambda_max = 400;
  int count = 10;
  // traces and fits
  std::string kind = "heat";
  double t_min = 0.005, t_max = 0.1;
  int points = 60;
  std::vector<double> t_values;
  // coefficients
  bool c1 = false, wedge = false, c32 = false, robin_bk = false, bridge = false, log_form = false;
  std::string geometry, pair = "DD", target = "interval";
  double beta = hs::pi, t = 1;
  int k = 1, terms = 4;
  // zeta
  std::string hemisphere, lune, interval_pair;
  double s = -0.5;
  // casimir
  std::string route = "finite_part";
  std::optional<double> energy;
  bool sqrt_fit = false, probe = false, two_column = false;
  std::vector<double> h_grid = {-0.01, -0.02, -0.04, -0.08};
  // determinant
  std::string layout;
  // verify
  std::string filter;
  bool timings = false;
};

BcKind parse_bc(const std::string& s) {
  if (s == "D") return BcKind::dirichlet;
  if (s == "N") return BcKind::neumann;
  if (s == "R") return BcKind::robin;
  hs::fail(hs::ErrorKind::domain, "boundary condition must be D, N or R: " + s);
}

hs::interval::BoundaryCondition make_bc(const std::string& s, double h) {
  switch (parse_bc(s)) {
    case BcKind::dirichlet: return hs::interval::BoundaryCondition::dirichlet();
    case BcKind::neumann: return hs::interval::BoundaryCondition::neumann();
    case BcKind::robin: return hs::interval::BoundaryCondition::robin(h);
  }
  return {};
}

hs::interval::Pair parse_pair(const std::string& s) {
  using P = hs::interval::Pair;
  if (s == "DD") return P::DD;
  if (s == "NN") return P::NN;
  if (s == "DN" || s == "ND") return P::DN;
  if (s == "DR" || s == "RD") return P::DR;
  if (s == "NR" || s == "RN") return P::NR;
  hs::fail(hs::ErrorKind::domain, "unknown pair: " + s);
}

hs::coeffs::CornerPair parse_corner(const std::string& s) {
  using C = hs::coeffs::CornerPair;
  if (s == "DD") return C::DD;
  if (s == "NN") return C::NN;
  if (s == "RR") return C::RR;
  if (s == "DN" || s == "ND") return C::DN;
  if (s == "DR" || s == "RD") return C::DR;
  if (s == "NR" || s == "RN") return C::NR;
  hs::fail(hs::ErrorKind::domain, "unknown corner pair: " + s);
}

hs::domains::Spectrum build_spectrum(const Options& o) {
  if (o.problem == "interval") {
    hs::interval::IntervalProblem p{o.length, make_bc(o.left, o.h), make_bc(o.right, o.h)};
    return hs::kernels::interval_spectrum(hs::interval::wavenumbers(p, o.count));
  }
  if (o.problem == "half-disc") return hs::domains::half_disc_spectrum({parse_bc(o.diameter), parse_bc(o.arc)}, o.lambda_max);
  if (o.problem == "hemisphere") return hs::domains::hemisphere_spectrum({parse_bc(o.bc0), o.h}, o.lambda_max);
  hs::fail(hs::ErrorKind::domain, "problem must be interval, half-disc or hemisphere");
}

std::vector<double> t_grid(const Options& o) {
  if (!o.t_values.empty()) return o.t_values;
  return hs::log_grid(o.t_min, o.t_max, o.points);
}

void emit(const json& j, const Options& o) {
  if (o.format == "human")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

int cmd_spectrum(const Options& o) {
  if (o.problem == "interval") {
    hs::interval::IntervalProblem p{o.length, make_bc(o.left, o.h), make_bc(o.right, o.h)};
    auto w = hs::interval::wavenumbers(p, o.count);
    if (o.format == "csv") {
      std::cout << "index,k\n";
      for (std::size_t i = 0; i < w.values.size(); ++i) std::printf("%zu,%.17g\n", i, w.values[i]);
      return 0;
    }
    emit({{"problem", "interval"}, {"wavenumbers", hs::io::to_json(w)}}, o);
    return 0;
  }
  auto s = build_spectrum(o);
  if (o.format == "csv") {
    std::cout << "lambda,degeneracy\n";
    for (const auto& l : s.levels) std::printf("%.17g,%d\n", l.lambda, l.degeneracy);
    return 0;
  }
  emit({{"problem", o.problem}, {"spectrum", hs::io::to_json(s)}}, o);
  return 0;
}

int cmd_trace(const Options& o) {
  auto s = build_spectrum(o);
  auto kind = o.kind == "cylinder" ? hs::kernels::TraceKind::cylinder : hs::kernels::TraceKind::heat;
  if (o.kind != "heat" && o.kind != "cylinder") hs::fail(hs::ErrorKind::domain, "kind must be heat or cylinder");
  auto samples = hs::kernels::trace(s, t_grid(o), kind);
  if (o.format == "csv") {
    std::cout << "t,trace\n";
    for (std::size_t i = 0; i < samples.t_values.size(); ++i) std::printf("%.17g,%.17g\n", samples.t_values[i], samples.k_values[i]);
    return 0;
  }
  emit({{"problem", o.problem}, {"trace", hs::io::to_json(samples)}}, o);
  return 0;
}

int cmd_fit(const Options& o) {
  if (o.problem == "half-disc") {
    hs::kernels::HalfDiscFitOptions f{o.lambda_max, o.t_min, o.t_max, o.points};
    emit({{"problem", "half-disc"}, {"fit", hs::io::to_json(hs::kernels::half_disc_fit(parse_bc(o.diameter), parse_bc(o.arc), f))}}, o);
    return 0;
  }
  if (o.problem == "hemisphere") {
    hs::kernels::LogDetectionOptions f{o.lambda_max, o.t_min, o.t_max, o.points};
    emit({{"problem", "hemisphere"}, {"fit", hs::io::to_json(hs::kernels::detect_log_terms(o.h, parse_bc(o.bc0), f))}}, o);
    return 0;
  }
  hs::fail(hs::ErrorKind::domain, "fit supports --problem half-disc or hemisphere");
}

int cmd_coeff(const Options& o) {
  int chosen = o.c1 + o.wedge + o.c32 + o.robin_bk + o.bridge + o.log_form;
  if (chosen != 1) hs::fail(hs::ErrorKind::domain, "coeff needs exactly one of --c1, --wedge, --c32, --robin-bk, --bridge, --log-form");
  if (o.c1) {
    if (o.geometry.empty()) hs::fail(hs::ErrorKind::missing_input, "--c1 needs --geometry");
    auto g = o.geometry == "lune-DD" ? hs::coeffs::lune_dd(o.beta) : hs::coeffs::named_geometry(o.geometry);
    emit({{"geometry", o.geometry}, {"result", hs::io::to_json(hs::coeffs::c1_geometry_detail(g))}}, o);
  } else if (o.wedge) {
    emit({{"beta", o.beta}, {"pair", o.pair}, {"c1", hs::coeffs::c1_wedge(o.beta, parse_corner(o.pair))}}, o);
  } else if (o.c32) {
    double v = (o.pair == "ND") ? hs::coeffs::c32_corner_structure_nd() : hs::coeffs::c32_corner_structure(parse_corner(o.pair), o.beta);
    emit({{"beta", o.beta}, {"pair", o.pair}, {"c32_corner", v}}, o);
  } else if (o.robin_bk) {
    emit({{"h", o.h}, {"k", o.k}, {"b_k", hs::coeffs::robin_interval_bk(o.h, o.k)}}, o);
  } else if (o.bridge) {
    // Robin interval cylinder log coefficients a'_{2n-1} mapped to heat coefficients.
    hs::coeffs::CoefficientTable a{hs::coeffs::Side::cylinder, 1};
    a.entries[-1].plain = hs::coeffs::Coefficient::known(1.0);
    for (int n = 1; n <= o.terms; ++n)
      a.entries[2 * n - 1].log = hs::coeffs::Coefficient::known(hs::coeffs::log_series_coefficient(o.h, n));
    auto b = hs::coeffs::bridge_a_to_b(a);
    emit({{"h", o.h}, {"cylinder", hs::io::to_json(a)}, {"heat", hs::io::to_json(b)}}, o);
  } else {
    auto which = o.target == "hemisphere" ? hs::coeffs::LogTarget::hemisphere : hs::coeffs::LogTarget::interval;
    if (o.target != "interval" && o.target != "hemisphere") hs::fail(hs::ErrorKind::domain, "target must be interval or hemisphere");
    json j = {{"h", o.h}, {"t", o.t}, {"target", o.target}, {"log_part", hs::coeffs::log_closed_forms(o.h, o.t, which)}};
    if (which == hs::coeffs::LogTarget::interval) j["series_partial_sum"] = hs::coeffs::interval_log_series(o.h, o.t, o.terms);
    emit(j, o);
  }
  return 0;
}

int cmd_zeta(const Options& o) {
  int chosen = !o.hemisphere.empty() + !o.lune.empty() + !o.interval_pair.empty();
  if (chosen != 1) hs::fail(hs::ErrorKind::domain, "zeta needs exactly one of --hemisphere, --lune, --interval");
  if (!o.hemisphere.empty()) {
    using HP = hs::zetafns::HemiPair;
    HP p = o.hemisphere == "DD" ? HP::DD : o.hemisphere == "NN" ? HP::NN : HP::ND;
    if (o.hemisphere != "DD" && o.hemisphere != "NN" && o.hemisphere != "ND") hs::fail(hs::ErrorKind::domain, "hemisphere pair must be DD, NN or ND");
    emit(hs::io::to_json(hs::zetafns::hemisphere_zeta_report(p)), o);
  } else if (!o.lune.empty()) {
    using LP = hs::zetafns::LunePair;
    if (o.lune != "DD" && o.lune != "ND") hs::fail(hs::ErrorKind::domain, "lune pair must be DD or ND");
    LP p = o.lune == "DD" ? LP::DD : LP::ND;
    json j = {{"beta", o.beta}, {"pair", o.lune}, {"zeta_0", hs::zetafns::lune_zeta_zero(o.beta, p)}};
    if (p == LP::ND) j["corner_contribution"] = hs::zetafns::lune_nd_corner_contribution(o.beta);
    emit(j, o);
  } else {
    auto z = hs::zetafns::perturbative_interval_zeta(parse_pair(o.interval_pair), o.h, o.s);
    emit({{"pair", o.interval_pair}, {"h", o.h}, {"zeta", hs::io::to_json(z)}}, o);
  }
  return 0;
}

int cmd_casimir(const Options& o) {
  namespace c = hs::casimir;
  if (o.energy) {
    emit({{"energy", *o.energy}, {"h", o.h}, {"c1", c::c1_from_casimir(*o.energy, o.h)}}, o);
    return 0;
  }
  if (o.sqrt_fit) {
    emit(hs::io::to_json(c::sqrt_term_fit(!o.two_column)), o);
    return 0;
  }
  auto pair = parse_pair(o.pair);
  if (o.probe) {
    emit(hs::io::to_json(c::functional_relation_probe(pair, o.h_grid)), o);
    return 0;
  }
  c::CasimirResult r;
  if (o.route == "finite_part")
    r = c::casimir_finite_part(pair, o.h, o.count < 100 ? 10000 : o.count);
  else if (o.route == "perturbative")
    r = c::casimir_perturbative(pair, o.h);
  else if (o.route == "exact_integral")
    r = c::casimir_exact_integral(pair, o.h);
  else
    hs::fail(hs::ErrorKind::domain, "route must be finite_part, perturbative or exact_integral");
  emit(hs::io::to_json(r), o);
  return 0;
}

int cmd_determinant(const Options& o) {
  namespace cf = hs::conformal;
  if (!o.layout.empty()) {
    cf::Layout l = o.layout == "allD" ? cf::Layout::allD : o.layout == "allN" ? cf::Layout::allN_nozero : cf::Layout::ND;
    if (o.layout != "allD" && o.layout != "allN" && o.layout != "ND") hs::fail(hs::ErrorKind::domain, "layout must be allD, allN or ND");
    emit({{"layout", o.layout}, {"cocycle", cf::cocycle_eval(cf::hemisphere_to_disc(), l)}}, o);
    return 0;
  }
  auto r = cf::nd_disc_effective_action();
  json j = hs::io::to_json(r);
  if (!r.agree) {
    j["error"] = {{"kind", hs::to_string(hs::ErrorKind::route_disagreement)},
                  {"message", "hemisphere-plus-cocycle route differs from the closed form"}};
    emit(j, o);
    return 1;
  }
  emit(j, o);
  return 0;
}

int cmd_verify(const Options& o) {
  std::optional<std::string> filter;
  if (!o.filter.empty()) filter = o.filter;
  auto results = hs::verify::verify_suite(filter);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (o.format == "human") {
    for (const auto& r : results) {
      std::printf("%-4s %2d %-18s %s\n", r.passed ? "PASS" : "FAIL", r.number, r.tag.c_str(), r.title.c_str());
      for (const auto& c : r.checks)
        std::printf("       %s %s: observed %.10g expected %.10g tol %.1e\n", c.passed ? "ok  " : "FAIL", c.name.c_str(), c.observed, c.expected,
                    c.tolerance);
      if (!r.error.empty()) std::printf("       error: %s\n", r.error.c_str());
    }
  } else {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(hs::io::to_json(r, o.timings));
    emit({{"all_passed", all}, {"criteria", arr}}, o);
  }
  return all ? 0 : 1;
}

void add_problem_options(CLI::App* sub, Options& o) {
  sub->add_option("--problem", o.problem, "interval, half-disc or hemisphere")->check(CLI::IsMember({"interval", "half-disc", "hemisphere"}));
  sub->add_option("--left", o.left, "interval left end: D, N or R");
  sub->add_option("--right", o.right, "interval right end: D, N or R");
  sub->add_option("--length", o.length, "interval length");
  sub->add_option("--count", o.count, "number of interval wavenumbers");
  sub->add_option("--diameter", o.diameter, "half-disc diameter condition: D or N");
  sub->add_option("--arc", o.arc, "half-disc arc condition: D or N");
  sub->add_option("--bc0", o.bc0, "hemisphere condition on the first half-rim: D or N");
  sub->add_option("--h", o.h, "Robin parameter");
  sub->add_option("--lambda-max", o.lambda_max, "eigenvalue cutoff for 2D problems");
}

void add_window_options(CLI::App* sub, Options& o) {
  sub->add_option("--t-min", o.t_min, "smallest t");
  sub->add_option("--t-max", o.t_max, "largest t");
  sub->add_option("--points", o.points, "number of log-spaced t values");
}

json error_record(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral quantities of hybrid boundary-value problems"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_config("--config", "", "key-value config file; command-line flags take precedence");
  app.allow_config_extras(false);
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues or wavenumbers");
  add_problem_options(spectrum, o);

  auto* trace = app.add_subcommand("trace", "heat or cylinder trace on a t grid");
  add_problem_options(trace, o);
  add_window_options(trace, o);
  trace->add_option("--kind", o.kind, "heat or cylinder");
  trace->add_option("--t", o.t_values, "explicit t values");

  auto* fit = app.add_subcommand("fit", "short-time expansion fits");
  add_problem_options(fit, o);
  add_window_options(fit, o);

  auto* coeff = app.add_subcommand("coeff", "closed-form heat-kernel coefficients");
  coeff->add_flag("--c1", o.c1, "C1 of a named geometry");
  coeff->add_flag("--wedge", o.wedge, "wedge C1 per unit length");
  coeff->add_flag("--c32", o.c32, "right-angle C3/2 corner weight");
  coeff->add_flag("--robin-bk", o.robin_bk, "Robin interval b_k");
  coeff->add_flag("--bridge", o.bridge, "map Robin interval cylinder coefficients to heat coefficients");
  coeff->add_flag("--log-form", o.log_form, "summed log t part of the cylinder kernel");
  coeff->add_option("--geometry", o.geometry, "3ball-DN, unit-square-D, hemisphere-DN/DD/NN, half-disc-DD/ND/NN/DN, lune-DD");
  coeff->add_option("--pair", o.pair, "corner pair");
  coeff->add_option("--beta", o.beta, "angle");
  coeff->add_option("--h", o.h, "Robin parameter");
  coeff->add_option("--k", o.k, "coefficient index");
  coeff->add_option("--t", o.t, "t for --log-form");
  coeff->add_option("--terms", o.terms, "series terms");
  coeff->add_option("--target", o.target, "interval or hemisphere");

  auto* zeta = app.add_subcommand("zeta", "spectral zeta values");
  zeta->add_option("--hemisphere", o.hemisphere, "DD, NN or ND: zeta'(0)");
  zeta->add_option("--lune", o.lune, "DD or ND: zeta(0) on the lune");
  zeta->add_option("--interval", o.interval_pair, "NR or DR: first-order Robin interval zeta");
  zeta->add_option("--beta", o.beta, "lune angle");
  zeta->add_option("--h", o.h, "Robin parameter");
  zeta->add_option("--s", o.s, "argument");

  auto* cas = app.add_subcommand("casimir", "interval Casimir energies");
  cas->add_option("--pair", o.pair, "DD, NN, DN, DR or NR");
  cas->add_option("--h", o.h, "Robin parameter");
  cas->add_option("--route", o.route, "finite_part, perturbative or exact_integral");
  cas->add_option("--count", o.count, "number of roots for the finite part (>= 100)");
  cas->add_option("--c1-from", o.energy, "map an energy to the hemisphere C1");
  cas->add_flag("--sqrt-fit", o.sqrt_fit, "fit the sqrt(-h) term of E(N,R)");
  cas->add_flag("--two-column", o.two_column, "use only {sqrt(-h), h} in --sqrt-fit");
  cas->add_flag("--probe", o.probe, "functional-relation probe");
  cas->add_option("--h-grid", o.h_grid, "h values for --probe");

  auto* det = app.add_subcommand("determinant", "N/D disc effective action");
  det->add_option("--layout", o.layout, "evaluate only the cocycle: allD, allN or ND");

  auto* ver = app.add_subcommand("verify", "run the acceptance checks");
  ver->add_option("--filter", o.filter, "criterion tag or number");
  ver->add_flag("--timings", o.timings, "include runtimes in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_record("usage", e.what()).dump() << "\n";
    return 2;
  }

  try {
    if (*spectrum) return cmd_spectrum(o);
    if (*trace) return cmd_trace(o);
    if (*fit) return cmd_fit(o);
    if (*coeff) return cmd_coeff(o);
    if (*zeta) return cmd_zeta(o);
    if (*cas) return cmd_casimir(o);
    if (*det) return cmd_determinant(o);
    if (*ver) return cmd_verify(o);
  } catch (const hs::Error& e) {
    std::cout << error_record(hs::to_string(e.kind()), e.what()).dump() << "\n";
    return hs::is_validation(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cout << error_record("internal", e.what()).dump() << "\n";
    return 1;
  }
  return 2;
}
