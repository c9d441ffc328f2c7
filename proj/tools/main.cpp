// Command-line front end: compute confocal caustics of the complex elliptic
// billiard, trace and verify orbits, run the property suites, and emit
// plot data.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "billiards/report.hpp"
#include "billiards/verify.hpp"

namespace {

using namespace billiards;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitClosure = 4;
constexpr int kExitIsotropic = 5;

struct FamilyOptions {
  std::string a = "2";
  std::string b = "1";

  ConfocalFamily family() const {
    Rational ra = parse_rational(a);
    Rational rb = parse_rational(b);
    if (ra <= 0 || rb <= 0) throw std::invalid_argument("semi-axes must be positive");
    return ConfocalFamily(ra * ra, rb * rb);
  }
};

Cx parse_complex(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return Cx(to_double(parse_rational(text)), 0.0);
  return Cx(to_double(parse_rational(text.substr(0, comma))),
            to_double(parse_rational(text.substr(comma + 1))));
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << payload;
}

struct OrbitSelection {
  std::string lambda_text;
  int root_index = -1;
  std::string start_text;
  std::string theta_text = "0.3";
  int branch = 0;
};

Cx select_lambda(const ConfocalFamily& fam, int n, const OrbitSelection& sel, double tol) {
  if (!sel.lambda_text.empty()) return parse_complex(sel.lambda_text);
  if (sel.root_index < 0)
    throw std::invalid_argument("one of --lambda or --root is required");
  CausticSet cs = caustic_roots(fam, n, tol);
  if (sel.root_index >= static_cast<int>(cs.roots.size()))
    throw std::invalid_argument("--root index out of range; the polynomial has " +
                                std::to_string(cs.roots.size()) + " roots");
  return cs.roots[static_cast<size_t>(sel.root_index)].lambda;
}

ProjPoint select_start(const ConfocalFamily& fam, const OrbitSelection& sel) {
  if (!sel.start_text.empty()) {
    Cx p = parse_complex(sel.start_text);  // "x,y" with real coordinates
    return ProjPoint::affine(Cx(p.real()), Cx(p.imag()));
  }
  return ellipse_point(fam, parse_complex(sel.theta_text));
}

int run_caustics(const FamilyOptions& fo, int n, double tol, const std::string& format,
                 const std::string& out) {
  ConfocalFamily fam = fo.family();
  CayleyTable table = cayley_polynomial(fam, n);
  CausticSet cs = caustic_roots(table, tol);
  if (format == "json") {
    emit(caustics_report(fam, table, cs, tol).dump(2), out);
  } else if (format == "csv") {
    std::ostringstream os;
    os << "re,im,multiplicity,admissible,kind\n";
    for (const auto& r : cs.roots)
      os << r.lambda.real() << "," << r.lambda.imag() << "," << r.multiplicity << ","
         << (r.admissible ? 1 : 0) << "," << conic_kind(fam, r.lambda, tol) << "\n";
    emit(os.str(), out);
  } else {
    throw std::invalid_argument("caustics supports --format json or csv");
  }
  return kExitOk;
}

int run_orbit(const FamilyOptions& fo, int n, const OrbitSelection& sel, double tol,
              const std::string& format, const std::string& out) {
  ConfocalFamily fam = fo.family();
  Cx lambda = select_lambda(fam, n, sel, tol);
  OrbitTrace tr = trace_orbit(fam, lambda, select_start(fam, sel), sel.branch, n, tol);
  if (format == "json")
    emit(trace_report(fam, tr).dump(2), out);
  else if (format == "csv")
    emit(csv_orbit(tr), out);
  else
    throw std::invalid_argument("orbit supports --format json or csv");

  const double closure_tol = 100.0 * tol;
  if (tr.closure_residual > closure_tol || tr.max_tangency_residual() > tol ||
      tr.max_reflection_residual() > tol) {
    std::cerr << "orbit quality gate failed: closure " << tr.closure_residual << ", tangency "
              << tr.max_tangency_residual() << ", reflection " << tr.max_reflection_residual()
              << "\n";
    return kExitClosure;
  }
  return kExitOk;
}

int run_plot(const FamilyOptions& fo, int n, const std::string& what, const OrbitSelection& sel,
             double tol, const std::string& format, const std::string& out) {
  ConfocalFamily fam = fo.family();
  if (what == "caustics") {
    CausticSet cs = caustic_roots(fam, n, tol);
    emit(format == "svg" ? svg_caustics(fam, cs, tol) : csv_caustics(fam, cs, tol), out);
    return kExitOk;
  }
  if (what == "orbit") {
    Cx lambda = select_lambda(fam, n, sel, tol);
    OrbitTrace tr = trace_orbit(fam, lambda, select_start(fam, sel), sel.branch, n, tol);
    emit(format == "svg" ? svg_orbit(fam, tr, tol) : csv_orbit(tr), out);
    return kExitOk;
  }
  throw std::invalid_argument("plot supports --what caustics or orbit");
}

int run_verify(const std::optional<FamilyOptions>& fo, std::optional<int> n, int nmax, int samples,
               std::uint64_t seed, double, const std::string& format, const std::string& out) {
  std::vector<CheckResult> results;
  ConfocalFamily fam = fo ? fo->family() : ConfocalFamily(Rational(4), Rational(1));

  if (fo) results.push_back(caustic_summary(fam, n.value_or(4)));
  results.push_back(check_algebra_identities(seed));
  results.push_back(check_catalan_hankel(8));
  results.push_back(check_root_finder(seed + 1));
  results.push_back(check_cayley3_identity(samples, seed + 2));
  results.push_back(check_cayley4_identity(samples, seed + 3));
  results.push_back(check_reference_roots_n3());
  results.push_back(check_rational_roots_n4());
  results.push_back(check_degree_table(nmax, false));
  results.push_back(check_root_location(samples, seed + 4));

  std::vector<int> ns;
  if (n) ns.push_back(*n);
  else
    for (int k = 3; k <= std::min(nmax, 9); ++k) ns.push_back(k);
  results.push_back(check_closure_grid(fam, ns, 10, seed + 5));
  results.push_back(check_negative_control(fam, 10, seed + 6));
  if (!fam.is_circle()) {
    results.push_back(check_degenerate_triangles(fam));
    results.push_back(check_focal_properties(fam, 20, seed + 7));
  }
  results.push_back(check_special_quads());

  bool all = true;
  for (const auto& r : results) all = all && r.pass;

  if (format == "json") {
    ordered_json doc;
    doc["pass"] = all;
    ordered_json suites = ordered_json::array();
    for (const auto& r : results)
      suites.push_back(ordered_json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"ms", r.ms}});
    doc["suites"] = suites;
    emit(doc.dump(2), out);
  } else {
    std::ostringstream os;
    for (const auto& r : results)
      os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.ms << " ms) " << r.detail
         << "\n";
    os << (all ? "all suites passed" : "some suites FAILED") << "\n";
    emit(os.str(), out);
  }
  return all ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"confocal caustics of the complex elliptic billiard"};
  app.require_subcommand(1);

  FamilyOptions fam;
  int n = 3;
  double tol = 1e-9;
  std::string format = "json";
  std::string out;
  OrbitSelection sel;
  std::string what = "caustics";
  int nmax = 6, samples = 10;
  std::uint64_t seed = 0;
  bool family_given = false;

  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--a", fam.a, "semi-axis a (decimal or fraction)");
    cmd->add_option("--b", fam.b, "semi-axis b (decimal or fraction)");
    cmd->add_option("--tol", tol, "relative residual tolerance");
    cmd->add_option("--out", out, "write output to a file instead of stdout");
  };

  CLI::App* caustics = app.add_subcommand("caustics", "closure polynomial, roots and caustics");
  add_family(caustics);
  caustics->add_option("--n", n, "polygon side count")->check(CLI::Range(3, 64));
  caustics->add_option("--format", format, "json or csv");

  CLI::App* orbit = app.add_subcommand("orbit", "trace one orbit and verify it");
  add_family(orbit);
  orbit->add_option("--n", n, "number of sides to trace")->check(CLI::Range(1, 4096));
  orbit->add_option("--lambda", sel.lambda_text, "caustic parameter (re or re,im)");
  orbit->add_option("--root", sel.root_index, "root index into the sorted caustic roots");
  orbit->add_option("--start", sel.start_text, "start vertex x,y on the ellipse");
  orbit->add_option("--theta", sel.theta_text, "start parameter (a cos t, b sin t), re or re,im");
  orbit->add_option("--branch", sel.branch, "initial tangent branch, 0 or 1")->check(CLI::Range(0, 1));
  orbit->add_option("--format", format, "json or csv");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--a", fam.a, "semi-axis a (decimal or fraction)")->each([&](const std::string&) {
    family_given = true;
  });
  verify->add_option("--b", fam.b, "semi-axis b (decimal or fraction)")->each([&](const std::string&) {
    family_given = true;
  });
  int verify_n = 0;
  verify->add_option("--n", verify_n, "restrict the closure grid to one side count");
  verify->add_option("--nmax", nmax, "largest n for the degree table and grid")->check(CLI::Range(3, 12));
  verify->add_option("--samples", samples, "random families per identity suite")->check(CLI::Range(1, 1000));
  verify->add_option("--seed", seed, "base seed for all randomized suites");
  verify->add_option("--tol", tol, "relative residual tolerance");
  verify->add_option("--format", format, "text or json");
  verify->add_option("--out", out, "write output to a file instead of stdout");

  CLI::App* plot = app.add_subcommand("plot", "emit SVG or CSV plot data");
  add_family(plot);
  plot->add_option("--n", n, "polygon side count")->check(CLI::Range(3, 64));
  plot->add_option("--what", what, "caustics or orbit");
  plot->add_option("--lambda", sel.lambda_text, "caustic parameter (re or re,im)");
  plot->add_option("--root", sel.root_index, "root index into the sorted caustic roots");
  plot->add_option("--start", sel.start_text, "start vertex x,y on the ellipse");
  plot->add_option("--theta", sel.theta_text, "start parameter, re or re,im");
  plot->add_option("--branch", sel.branch, "initial tangent branch, 0 or 1")->check(CLI::Range(0, 1));
  plot->add_option("--format", format, "svg or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (caustics->parsed()) return run_caustics(fam, n, tol, format, out);
    if (orbit->parsed()) return run_orbit(fam, n, sel, tol, format, out);
    if (plot->parsed()) {
      if (plot->count("--format") == 0) format = "svg";
      return run_plot(fam, n, what, sel, tol, format, out);
    }
    if (verify->parsed()) {
      std::optional<FamilyOptions> custom;
      if (family_given) custom = fam;
      std::optional<int> only_n;
      if (verify->count("--n") > 0) only_n = verify_n;
      return run_verify(custom, only_n, nmax, samples, seed, tol, format, out);
    }
  } catch (const isotropic_degeneration_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIsotropic;
  } catch (const root_convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const geometry_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
