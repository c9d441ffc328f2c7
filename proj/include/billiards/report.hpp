#ifndef BILLIARDS_REPORT_HPP
#define BILLIARDS_REPORT_HPP

#include <string>

#include <json.hpp>

#include "billiards/billiard.hpp"
#include "billiards/cayley.hpp"

namespace billiards {

using ordered_json = nlohmann::ordered_json;

/// "ellipse" / "hyperbola" for real lambda by the sign pattern of
/// a^2+lambda, b^2+lambda; "complex" otherwise (including empty real locus).
std::string conic_kind(const ConfocalFamily& fam, const Cx& lambda, double tol = kDefaultTol);

/// Caustics report: family, n, exact polynomial (ascending fractions), exact
/// degree data, forbidden-value evaluations, roots with flags, and N.
ordered_json caustics_report(const ConfocalFamily& fam, const CayleyTable& table,
                             const CausticSet& roots, double tol = kDefaultTol);

ordered_json trace_report(const ConfocalFamily& fam, const OrbitTrace& trace);

struct ParsedTrace {
  Cx lambda;
  std::vector<ProjPoint> vertices;
};

/// Inverse of trace_report's geometry: lambda and the vertex cycle.
ParsedTrace parse_trace_report(const ordered_json& doc);

/// Deterministic SVG (fixed viewBox, 6-decimal coordinates) of the ellipse
/// with every admissible real caustic.
std::string svg_caustics(const ConfocalFamily& fam, const CausticSet& roots,
                         double tol = kDefaultTol);

/// Ellipse, caustic (when real), and the orbit polygon. Complex vertices are
/// drawn at their real parts and flagged in a legend instead of distorted.
std::string svg_orbit(const ConfocalFamily& fam, const OrbitTrace& trace,
                      double tol = kDefaultTol);

/// Sampled conic points, one row per sample: curve label, parameter, x, y.
std::string csv_caustics(const ConfocalFamily& fam, const CausticSet& roots,
                         double tol = kDefaultTol);

std::string csv_orbit(const OrbitTrace& trace);

}  // namespace billiards

#endif
