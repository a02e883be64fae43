#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "numrange/dilation_poncelet.hpp"
#include "numrange/error.hpp"
#include "numrange/kms.hpp"
#include "numrange/model_operator.hpp"
#include "numrange/numerical_range.hpp"
#include "numrange/operator_inequalities.hpp"
#include "numrange/parallel.hpp"
#include "numrange/radius_formula.hpp"
#include "numrange/subspace_estimates.hpp"
#include "render.hpp"

namespace numrange::cli {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json factors_json(const std::vector<BlaschkeFactor>& factors) {
  json out = json::array();
  for (const auto& f : factors) out.push_back({f.zero.real(), f.zero.imag(), f.multiplicity});
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << content;
  if (!file.flush()) throw IoError("failed writing '" + path + "'");
}

// Factors sharing a zero are merged; order of first appearance is kept.
std::vector<BlaschkeProduct> distinct_zero_groups(const std::vector<BlaschkeFactor>& factors) {
  std::vector<BlaschkeFactor> merged;
  for (const auto& f : factors) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const BlaschkeFactor& g) { return g.zero == f.zero; });
    if (it == merged.end()) {
      merged.push_back(f);
    } else {
      it->multiplicity += f.multiplicity;
    }
  }
  std::vector<BlaschkeProduct> groups;
  for (const auto& f : merged) groups.push_back(BlaschkeProduct::single_zero(f.zero, f.multiplicity));
  return groups;
}

json g_estimate_json(const GEstimate& g) {
  json out = {{"rho", g.rho},
              {"delta", g.delta},
              {"threshold", g.threshold},
              {"applicable", g.applicable}};
  if (g.bound) out["bound"] = *g.bound;
  return out;
}

json polygon_json(const PonceletPolygon& polygon, const CircumscriptionReport& check) {
  json vertices = json::array();
  double distance = std::numeric_limits<double>::infinity();
  for (const Complex v : polygon.vertices) {
    vertices.push_back(complex_json(v));
    distance = std::min(distance, std::abs(v - polygon.source_vertex));
  }
  return {{"lambda", complex_json(polygon.source_vertex)},
          {"phase", polygon.phase},
          {"residual", polygon.residual},
          {"vertices", vertices},
          {"lambda_distance", distance},
          {"max_violation", check.max_violation},
          {"min_violation", check.min_violation},
          {"boundary_excess", check.boundary_excess},
          {"certified", check.certified}};
}

json boundary_json(const BoundarySample& sample) {
  json x = json::array();
  json y = json::array();
  for (const auto& p : sample.points) {
    x.push_back(p.x);
    y.push_back(p.y);
  }
  return {{"theta", sample.thetas}, {"lambda", sample.support}, {"x", x}, {"y", y}};
}

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

Complex random_alpha(std::mt19937_64& rng, double max_modulus) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = max_modulus * unit(rng);
  return std::polar(r, kTwoPi * unit(rng));
}

int random_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

const std::vector<AnalyticSelfMap>& trial_self_maps() {
  static const std::vector<AnalyticSelfMap> maps = {
      AnalyticSelfMap({0.0, 1.0}),
      AnalyticSelfMap({0.0, 0.0, 1.0}),
      AnalyticSelfMap({0.0, 0.5, 0.0, 0.5}),
      AnalyticSelfMap({0.0, 0.45, 0.45}),
  };
  return maps;
}

struct SuiteResult {
  json summary;
  bool passed;
};

// Collects per-trial values in parallel; `worst` picks the reported extreme.
template <typename Trial>
std::vector<double> run_trials(int trials, Trial&& trial) {
  std::vector<double> values(static_cast<std::size_t>(trials));
  parallel_for(values.size(), [&](std::size_t k) { values[k] = trial(static_cast<int>(k)); });
  return values;
}

SuiteResult suite_radius(const VerifyOptions& o) {
  const auto errors = run_trials(o.trials, [&](int k) {
    auto rng = trial_rng(o.seed, k);
    const Complex alpha = random_alpha(rng, 0.8);
    const int n = random_int(rng, 2, 12);
    const double eigen = numerical_radius(single_zero_matrix(alpha, n).matrix);
    double error = std::max(std::abs(radius_single_zero(alpha, n) - eigen),
                            std::abs(radius_single_zero_poisson(alpha, n) - eigen));
    if (n <= 4) error = std::max(error, std::abs(radius_closed_form(alpha, n) - eigen));
    return error;
  });
  const double worst = *std::max_element(errors.begin(), errors.end());
  return {{{"errors", errors}, {"max_error", worst}, {"trials", o.trials}}, worst < o.agreement_tol};
}

SuiteResult suite_poncelet(const VerifyOptions& o) {
  constexpr int kLambdaSamples = 8;
  std::vector<int> failures(static_cast<std::size_t>(o.trials));
  const auto worst_values = run_trials(o.trials, [&](int k) {
    auto rng = trial_rng(o.seed, k);
    const int n = random_int(rng, 2, 5);
    std::vector<BlaschkeFactor> factors;
    if (k % 2 == 0) {
      factors.push_back({random_alpha(rng, 0.6), n});
    } else {
      const int m1 = random_int(rng, 1, n - 1);
      factors.push_back({random_alpha(rng, 0.6), m1});
      factors.push_back({random_alpha(rng, 0.6), n - m1});
    }
    const ComplexMatrix t = compress_shift_adjoint(BlaschkeProduct(factors)).matrix;
    const double offset = kTwoPi * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double worst = 0.0;
    for (int j = 0; j < kLambdaSamples; ++j) {
      const Complex lambda = std::polar(1.0, offset + kTwoPi * j / kLambdaSamples);
      const PonceletPolygon polygon = poncelet_polygon(t, lambda);
      const CircumscriptionReport check = circumscription_check(polygon, t, 512);
      double distance = std::numeric_limits<double>::infinity();
      double modulus_error = 0.0;
      double separation = std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < polygon.vertices.size(); ++a) {
        distance = std::min(distance, std::abs(polygon.vertices[a] - lambda));
        modulus_error = std::max(modulus_error, std::abs(std::abs(polygon.vertices[a]) - 1.0));
        for (std::size_t b = a + 1; b < polygon.vertices.size(); ++b) {
          separation = std::min(separation, std::abs(polygon.vertices[a] - polygon.vertices[b]));
        }
      }
      const bool ok = polygon.vertices.size() == static_cast<std::size_t>(n + 1) &&
                      distance <= 1e-8 && modulus_error <= 1e-10 && separation > 1e-8 &&
                      std::abs(check.max_violation) <= o.circumscription_tol &&
                      std::abs(check.min_violation) <= o.circumscription_tol &&
                      check.boundary_excess <= o.circumscription_tol;
      if (!ok) ++failures[static_cast<std::size_t>(k)];
      worst = std::max({worst, std::abs(check.max_violation), std::abs(check.min_violation),
                        check.boundary_excess});
    }
    return worst;
  });
  int failed = 0;
  for (const int f : failures) failed += f;
  const double worst = *std::max_element(worst_values.begin(), worst_values.end());
  return {{{"violations", worst_values},
           {"max_violation", worst},
           {"failed_polygons", failed},
           {"polygons", o.trials * kLambdaSamples},
           {"trials", o.trials}},
          failed == 0};
}

SuiteResult suite_schwarz_pick(const VerifyOptions& o) {
  const auto& maps = trial_self_maps();
  std::vector<double> hh(static_cast<std::size_t>(o.trials));
  const auto margins = run_trials(o.trials, [&](int k) {
    auto rng = trial_rng(o.seed, k);
    const int n = random_int(rng, 2, 6);
    const Complex alpha = random_alpha(rng, 0.8);
    const NilpotentContraction t = random_nilpotent_contraction(n, rng());
    hh[static_cast<std::size_t>(k)] = haagerup_harpe_check(t).margin;
    return schwarz_pick_check(t, maps[static_cast<std::size_t>(k) % maps.size()], alpha).margin;
  });
  const double worst = *std::min_element(margins.begin(), margins.end());
  const double worst_hh = *std::min_element(hh.begin(), hh.end());
  return {{{"margins", margins},
           {"min_margin", worst},
           {"haagerup_harpe_min_margin", worst_hh},
           {"trials", o.trials}},
          worst >= -o.margin_tol && worst_hh >= -o.margin_tol};
}

SuiteResult suite_angles(const VerifyOptions& o) {
  const auto margins = run_trials(o.trials, [&](int k) {
    auto rng = trial_rng(o.seed, k);
    const auto phi1 = BlaschkeProduct::single_zero(random_alpha(rng, 0.7), random_int(rng, 1, 3));
    const auto phi2 = BlaschkeProduct::single_zero(random_alpha(rng, 0.7), random_int(rng, 1, 3));
    const AngleReport angle = subspace_cos_angle(phi1, phi2);
    return angle.sin_angle - *angle.f_lower_bound;
  });
  const double worst = *std::min_element(margins.begin(), margins.end());
  return {{{"margins", margins}, {"min_margin", worst}, {"trials", o.trials}}, worst >= -o.angle_tol};
}

}  // namespace

RunReport cmd_radius(const RadiusOptions& o) {
  const auto factors = resolve_factors(o.spec);
  const BlaschkeProduct phi(factors);
  RunReport report;
  report.command = "radius";
  report.inputs = {{"zeros", factors_json(factors)}, {"grid", o.grid}};
  report.tolerances = {{"agreement", o.agreement_tol}, {"refine", 1e-12}};

  const double eigen = numerical_radius(compress_shift_adjoint(phi).matrix, o.grid);
  report.results["eigen_radius"] = eigen;
  const int n = phi.degree();
  const double lower = std::cos(std::numbers::pi / n);
  report.results["lower_bound"] = {{"cos_pi_over_n", lower}, {"holds", n == 1 || lower < eigen}};

  if (phi.is_single_zero()) {
    const Complex alpha = factors.front().zero;
    const double formula = radius_single_zero(alpha, n);
    const double poisson = radius_single_zero_poisson(alpha, n);
    double worst = std::max(std::abs(formula - eigen), std::abs(poisson - eigen));
    report.results["formula_radius"] = formula;
    report.results["poisson_radius"] = poisson;
    report.results["formula_delta"] = std::abs(formula - eigen);
    report.results["poisson_delta"] = std::abs(poisson - eigen);
    if (n >= 2 && n <= 4) {
      const double closed = radius_closed_form(alpha, n);
      report.results["closed_form_radius"] = closed;
      report.results["closed_form_delta"] = std::abs(closed - eigen);
      worst = std::max(worst, std::abs(closed - eigen));
    }
    report.results["methods_agree"] = worst < o.agreement_tol;
  } else {
    const auto groups = distinct_zero_groups(factors);
    if (groups.size() >= 2) {
      report.results["g_estimate"] = {
          {"numeric", g_estimate_json(G_estimate(groups, RhoSource::kNumeric))},
          {"f_proxy", g_estimate_json(G_estimate(groups, RhoSource::kFProxy))}};
    }
  }
  return report;
}

RunReport cmd_boundary(const BoundaryOptions& o) {
  if (o.grid < 64) throw UsageError("--grid must be >= 64");
  const auto factors = resolve_factors(o.spec);
  const ComplexMatrix t = compress_shift_adjoint(BlaschkeProduct(factors)).matrix;
  RunReport report;
  report.command = "boundary";
  report.inputs = {{"zeros", factors_json(factors)}, {"grid", o.grid}};

  const BoundarySample sample = boundary(t, o.grid);
  double rmin = std::numeric_limits<double>::infinity();
  double rmax = 0.0;
  for (const auto& p : sample.points) {
    rmin = std::min(rmin, std::hypot(p.x, p.y));
    rmax = std::max(rmax, std::hypot(p.x, p.y));
  }
  report.results["boundary"] = boundary_json(sample);
  report.results["radius_min"] = rmin;
  report.results["radius_max"] = rmax;
  report.results["support_min"] = *std::min_element(sample.support.begin(), sample.support.end());
  report.results["support_max"] = *std::max_element(sample.support.begin(), sample.support.end());
  if (o.poncelet) {
    const Complex lambda = parse_complex(*o.poncelet);
    report.inputs["poncelet"] = complex_json(lambda);
    report.tolerances["circumscription"] = 1e-6;
    const PonceletPolygon polygon = poncelet_polygon(t, lambda);
    report.results["polygons"] = json::array({polygon_json(polygon, circumscription_check(polygon, t, o.grid))});
  }
  return report;
}

RunReport cmd_poncelet(const PonceletOptions& o) {
  const auto factors = resolve_factors(o.spec);
  const ComplexMatrix t = compress_shift_adjoint(BlaschkeProduct(factors)).matrix;
  RunReport report;
  report.command = "poncelet";
  report.inputs = {{"zeros", factors_json(factors)}, {"grid", o.grid}};
  report.tolerances = {{"circumscription", o.circumscription_tol}, {"residual", 1e-8}};

  std::vector<Complex> lambdas;
  if (o.samples > 0) {
    report.inputs["samples"] = o.samples;
    for (int j = 0; j < o.samples; ++j) lambdas.push_back(std::polar(1.0, kTwoPi * j / o.samples));
  } else {
    const Complex lambda = parse_complex(o.lambda);
    report.inputs["lambda"] = complex_json(lambda);
    lambdas.push_back(lambda / std::abs(lambda));
  }

  json polygons = json::array();
  bool passed = true;
  for (const Complex lambda : lambdas) {
    const PonceletPolygon polygon = poncelet_polygon(t, lambda);
    const CircumscriptionReport check = circumscription_check(polygon, t, o.grid);
    passed = passed && std::abs(check.max_violation) <= o.circumscription_tol &&
             std::abs(check.min_violation) <= o.circumscription_tol &&
             check.boundary_excess <= o.circumscription_tol;
    polygons.push_back(polygon_json(polygon, check));
  }
  report.results["polygons"] = polygons;
  report.results["boundary"] = boundary_json(boundary(t, o.grid));
  report.results["passed"] = passed;
  return report;
}

RunReport cmd_kms(const KmsOptions& o) {
  RunReport report;
  report.command = "kms";
  report.inputs = {{"alpha", o.alpha}, {"n", o.n}};
  report.tolerances = {{"agreement", o.agreement_tol}};
  const KmsRootSystem system = root_system(o.alpha, o.n);
  json brackets = json::array();
  for (const auto& [lo, hi] : system.brackets) brackets.push_back({lo, hi});
  const std::vector<double> formula = kms_eigenvalues(o.alpha, o.n);
  std::vector<double> oracle = hermitian_eig(kms_matrix(o.alpha, o.n)).values;
  std::reverse(oracle.begin(), oracle.end());
  double delta = 0.0;
  for (std::size_t k = 0; k < formula.size(); ++k) delta = std::max(delta, std::abs(formula[k] - oracle[k]));
  report.results["roots"] = system.roots;
  report.results["brackets"] = brackets;
  report.results["eigenvalues"] = formula;
  report.results["eigenvalues_direct"] = oracle;
  report.results["max_delta"] = delta;
  report.results["real_part_spectrum"] = real_part_spectrum(o.alpha, o.n);
  report.results["passed"] = delta < o.agreement_tol;
  return report;
}

RunReport cmd_angles(const AnglesOptions& o) {
  if (o.zeros.size() < 2) throw UsageError("angles needs at least two --zero factors");
  std::vector<BlaschkeFactor> factors;
  std::vector<BlaschkeProduct> parts;
  for (const auto& z : o.zeros) {
    factors.push_back(parse_zero(z));
    parts.push_back(BlaschkeProduct::single_zero(factors.back().zero, factors.back().multiplicity));
  }
  RunReport report;
  report.command = "angles";
  report.inputs = {{"zeros", factors_json(factors)}};
  report.tolerances = {{"angle", o.angle_tol}};

  json pairs = json::array();
  bool passed = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const AngleReport angle = subspace_cos_angle(parts[i], parts[j]);
      const double f = *angle.f_lower_bound;
      passed = passed && angle.sin_angle >= f - o.angle_tol;
      pairs.push_back({{"i", i},
                       {"j", j},
                       {"cos", angle.cos_angle},
                       {"sin", angle.sin_angle},
                       {"F", f},
                       {"truncation", angle.truncation}});
    }
  }
  report.results["pairs"] = pairs;
  report.results["g_estimate"] = {{"numeric", g_estimate_json(G_estimate(parts, RhoSource::kNumeric))},
                                  {"f_proxy", g_estimate_json(G_estimate(parts, RhoSource::kFProxy))}};
  if (parts.size() == 2) report.results["two_zero_bound"] = two_zero_bound(parts[0], parts[1]);
  report.results["passed"] = passed;
  return report;
}

RunReport cmd_verify(const VerifyOptions& o) {
  if (o.trials < 1) throw UsageError("--trials must be >= 1");
  static const std::map<std::string, SuiteResult (*)(const VerifyOptions&)> suites = {
      {"angles", suite_angles},
      {"poncelet", suite_poncelet},
      {"radius", suite_radius},
      {"schwarz-pick", suite_schwarz_pick},
  };
  if (o.suite != "all" && !suites.contains(o.suite)) throw UsageError("unknown suite '" + o.suite + "'");

  RunReport report;
  report.command = "verify";
  report.inputs = {{"suite", o.suite}, {"trials", o.trials}, {"seed", o.seed}};
  report.tolerances = {{"agreement", o.agreement_tol},
                       {"margin", o.margin_tol},
                       {"circumscription", o.circumscription_tol},
                       {"angle", o.angle_tol}};
  bool passed = true;
  json results = json::object();
  for (const auto& [name, run] : suites) {
    if (o.suite != "all" && o.suite != name) continue;
    SuiteResult r = run(o);
    r.summary["passed"] = r.passed;
    results[name] = std::move(r.summary);
    passed = passed && r.passed;
  }
  report.results["suites"] = results;
  report.results["passed"] = passed;
  return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical ranges of compressed shifts and related operator estimates", "numrange"};
  app.require_subcommand(1);

  auto add_spec = [](CLI::App* sub, ZeroSpec& spec) {
    sub->add_option("--alpha", spec.alpha, "single zero as re,im");
    sub->add_option("--n", spec.n, "multiplicity of the single zero");
    sub->add_option("--zero", spec.zeros, "zero as re,im[:m], repeatable");
  };

  RadiusOptions radius;
  auto* radius_cmd = app.add_subcommand("radius", "numerical radius of S(phi)");
  add_spec(radius_cmd, radius.spec);
  radius_cmd->add_option("--grid", radius.grid, "angular grid")->capture_default_str()->check(CLI::Range(64, 1 << 20));
  radius_cmd->add_option("--agreement-tol", radius.agreement_tol)->capture_default_str();

  BoundaryOptions bnd;
  std::string boundary_svg;
  std::string boundary_csv;
  auto* boundary_cmd = app.add_subcommand("boundary", "sampled boundary of W(S(phi))");
  add_spec(boundary_cmd, bnd.spec);
  boundary_cmd->add_option("--grid", bnd.grid)->capture_default_str();
  boundary_cmd->add_option("--poncelet", bnd.poncelet, "overlay the polygon through re,im");
  boundary_cmd->add_option("--svg", boundary_svg, "write an SVG plot");
  boundary_cmd->add_option("--csv", boundary_csv, "write theta,lambda,x,y rows");

  PonceletOptions pon;
  std::string poncelet_svg;
  auto* poncelet_cmd = app.add_subcommand("poncelet", "Poncelet polygons of S(phi)");
  add_spec(poncelet_cmd, pon.spec);
  poncelet_cmd->add_option("--lambda", pon.lambda, "vertex on the unit circle as re,im")->capture_default_str();
  poncelet_cmd->add_option("--samples", pon.samples, "equally spaced vertices instead of --lambda")
      ->check(CLI::NonNegativeNumber);
  poncelet_cmd->add_option("--grid", pon.grid)->capture_default_str()->check(CLI::Range(8, 1 << 20));
  poncelet_cmd->add_option("--circumscription-tol", pon.circumscription_tol)->capture_default_str();
  poncelet_cmd->add_option("--svg", poncelet_svg, "write an SVG plot");

  KmsOptions kms;
  auto* kms_cmd = app.add_subcommand("kms", "KMS Toeplitz spectrum");
  kms_cmd->add_option("--alpha", kms.alpha, "real parameter in [0,1)")->required();
  kms_cmd->add_option("--n", kms.n, "matrix size")->required()->check(CLI::PositiveNumber);
  kms_cmd->add_option("--agreement-tol", kms.agreement_tol)->capture_default_str();

  AnglesOptions angles;
  auto* angles_cmd = app.add_subcommand("angles", "angles between model subspaces");
  angles_cmd->add_option("--zero", angles.zeros, "factor zero as re,im[:m], repeatable")->required();
  angles_cmd->add_option("--angle-tol", angles.angle_tol)->capture_default_str();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "randomized certification suites");
  verify_cmd->add_option("--suite", verify.suite)
      ->capture_default_str()
      ->check(CLI::IsMember({"radius", "poncelet", "schwarz-pick", "angles", "all"}));
  verify_cmd->add_option("--trials", verify.trials)->capture_default_str()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
  verify_cmd->add_option("--agreement-tol", verify.agreement_tol)->capture_default_str();
  verify_cmd->add_option("--margin-tol", verify.margin_tol)->capture_default_str();
  verify_cmd->add_option("--circumscription-tol", verify.circumscription_tol)->capture_default_str();
  verify_cmd->add_option("--angle-tol", verify.angle_tol)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    RunReport report;
    if (radius_cmd->parsed()) {
      report = cmd_radius(radius);
    } else if (boundary_cmd->parsed()) {
      report = cmd_boundary(bnd);
      if (!boundary_csv.empty()) write_file(boundary_csv, render_csv(report));
      if (!boundary_svg.empty()) write_file(boundary_svg, render_svg(report));
    } else if (poncelet_cmd->parsed()) {
      report = cmd_poncelet(pon);
      if (!poncelet_svg.empty()) write_file(poncelet_svg, render_svg(report));
    } else if (kms_cmd->parsed()) {
      report = cmd_kms(kms);
    } else if (angles_cmd->parsed()) {
      report = cmd_angles(angles);
    } else {
      report = cmd_verify(verify);
    }
    out << serialize(report);
    const auto passed = report.results.find("passed");
    if (passed != report.results.end() && !passed->get<bool>()) {
      err << "certification failed\n";
      return 1;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace numrange::cli
