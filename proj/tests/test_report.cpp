#include <doctest.h>

#include "billiards/report.hpp"

#include <cmath>

using namespace billiards;

namespace {
const ConfocalFamily kFam(Rational(4), Rational(1));
}

TEST_CASE("conic kind classification") {
  CHECK(conic_kind(kFam, Cx(-0.98)) == "ellipse");
  CHECK(conic_kind(kFam, Cx(5.43)) == "ellipse");
  CHECK(conic_kind(kFam, Cx(-4.0 / 3.0)) == "hyperbola");
  CHECK(conic_kind(kFam, Cx(-6.0)) == "complex");
  CHECK(conic_kind(kFam, Cx(0.5, 0.5)) == "complex");
}

TEST_CASE("caustics report carries the schema fields") {
  CayleyTable table = cayley_polynomial(kFam, 4);
  CausticSet cs = caustic_roots(table);
  ordered_json doc = caustics_report(kFam, table, cs);

  CHECK(doc["family"]["a2"] == "4");
  CHECK(doc["family"]["b2"] == "1");
  CHECK(doc["n"] == 4);
  REQUIRE(doc["polynomial"].size() == 4);
  CHECK(doc["polynomial"][0] == "-1/16");
  CHECK(doc["polynomial"][3] == "45/1024");
  CHECK(doc["degree"] == 3);
  CHECK(doc["N"] == 3);
  REQUIRE(doc["roots"].size() == 3);
  CHECK(doc["roots"][0]["kind"] == "hyperbola");  // lambda_1 = -4/3 with a > sqrt(2) b
  CHECK(doc["roots"][1]["kind"] == "ellipse");
  CHECK(doc["roots"][2]["kind"] == "ellipse");
  CHECK(doc["roots"][0]["admissible"] == true);
  CHECK(doc["forbidden"]["at_minus_a2"] == "-2");
}

TEST_CASE("trace report round-trips") {
  CausticSet cs = caustic_roots(kFam, 3);
  OrbitTrace tr = trace_orbit(kFam, cs.roots[1].lambda, ProjPoint::affine(Cx(-2), Cx(0)), 0, 3);
  ordered_json doc = trace_report(kFam, tr);

  CHECK(doc["n"] == 3);
  CHECK(doc["P_values"].size() == tr.invariants.size());
  CHECK(doc["closure_residual"] == tr.closure_residual);

  // parse back and recompute every residual from the payload alone
  ordered_json reparsed = ordered_json::parse(doc.dump(2));
  ParsedTrace parsed = parse_trace_report(reparsed);
  REQUIRE(parsed.vertices.size() == tr.vertices.size());
  OrbitTrace rebuilt = trace_from_vertices(kFam, parsed.lambda, parsed.vertices);
  CHECK(std::abs(rebuilt.closure_residual - tr.closure_residual) <= 1e-12);
  REQUIRE(rebuilt.tangency_residuals.size() == tr.tangency_residuals.size());
  for (size_t i = 0; i < tr.tangency_residuals.size(); ++i)
    CHECK(std::abs(rebuilt.tangency_residuals[i] - tr.tangency_residuals[i]) <= 1e-12);
  REQUIRE(rebuilt.invariants.size() == tr.invariants.size());
  for (size_t i = 0; i < tr.invariants.size(); ++i)
    CHECK(std::abs(rebuilt.invariants[i] - tr.invariants[i]) <= 1e-12);
}

TEST_CASE("svg output is deterministic and well-formed") {
  CausticSet cs = caustic_roots(kFam, 4);
  std::string once = svg_caustics(kFam, cs);
  std::string twice = svg_caustics(kFam, cs);
  CHECK(once == twice);
  CHECK(once.find("<svg") == 0);
  CHECK(once.find("viewBox") != std::string::npos);
  CHECK(once.find("<ellipse") != std::string::npos);
  CHECK(once.find("<polyline") != std::string::npos);  // the hyperbola branch
  CHECK(once.rfind("</svg>\n") == once.size() - 7);

  OrbitTrace tr = trace_orbit(kFam, Cx(-0.8), ProjPoint::affine(Cx(-2), Cx(0)), 0, 4);
  std::string orbit_svg = svg_orbit(kFam, tr);
  CHECK(orbit_svg.find("<polyline") != std::string::npos);
  CHECK(orbit_svg == svg_orbit(kFam, tr));
}

TEST_CASE("csv output") {
  CausticSet cs = caustic_roots(kFam, 3);
  std::string csv = csv_caustics(kFam, cs);
  CHECK(csv.rfind("curve,lambda_re,lambda_im,kind,t,x,y\n", 0) == 0);
  CHECK(csv.find("\nC0,") != std::string::npos);
  CHECK(csv.find("C1,") != std::string::npos);

  OrbitTrace tr = trace_orbit(kFam, Cx(-0.8), ProjPoint::affine(Cx(-2), Cx(0)), 0, 4);
  std::string orbit_csv = csv_orbit(tr);
  CHECK(orbit_csv.rfind("vertex,", 0) == 0);
}
