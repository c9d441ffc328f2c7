#include "billiards/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace billiards {

namespace {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);  // normalize -0
  return buf;
}

ordered_json cx_json(const Cx& z) { return ordered_json{{"re", z.real()}, {"im", z.imag()}}; }

Cx cx_from(const ordered_json& j) { return Cx(j.at("re").get<double>(), j.at("im").get<double>()); }

ordered_json family_json(const ConfocalFamily& fam) {
  return ordered_json{{"a2", fraction_string(fam.a2)}, {"b2", fraction_string(fam.b2)}};
}

struct Extent {
  double x, y;
};

Extent drawing_extent(const ConfocalFamily& fam, const CausticSet& roots, double tol) {
  double ex = std::sqrt(fam.a2d), ey = std::sqrt(fam.b2d);
  for (const auto& r : roots.roots) {
    if (!r.admissible || conic_kind(fam, r.lambda, tol) != "ellipse") continue;
    ex = std::max(ex, std::sqrt(fam.a2d + r.lambda.real()));
    ey = std::max(ey, std::sqrt(fam.b2d + r.lambda.real()));
  }
  return {1.15 * ex, 1.3 * ey};
}

void svg_open(std::ostringstream& os, const Extent& e) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt6(-e.x) << " " << fmt6(-e.y)
     << " " << fmt6(2 * e.x) << " " << fmt6(2 * e.y) << "\">\n";
}

void svg_axis_ellipse(std::ostringstream& os, double rx, double ry, const std::string& stroke) {
  os << "  <ellipse cx=\"0\" cy=\"0\" rx=\"" << fmt6(rx) << "\" ry=\"" << fmt6(ry)
     << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"0.02\"/>\n";
}

void svg_hyperbola(std::ostringstream& os, double rx, double ry, const Extent& e,
                   const std::string& stroke) {
  double tmax = std::acosh(std::max(1.5, e.x / rx));
  const int samples = 64;
  for (int sign = -1; sign <= 1; sign += 2) {
    os << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"0.02\" points=\"";
    for (int i = 0; i <= samples; ++i) {
      double t = -tmax + 2 * tmax * i / samples;
      os << fmt6(sign * rx * std::cosh(t)) << "," << fmt6(-ry * std::sinh(t));
      if (i != samples) os << " ";
    }
    os << "\"/>\n";
  }
}

const char* kPalette[] = {"#c02020", "#2060c0", "#208040", "#a06010", "#7040a0", "#108080"};

}  // namespace

std::string conic_kind(const ConfocalFamily& fam, const Cx& lambda, double tol) {
  if (std::abs(lambda.imag()) > tol * std::max(1.0, std::abs(lambda))) return "complex";
  double u = fam.a2d + lambda.real();
  double v = fam.b2d + lambda.real();
  if (u > 0 && v > 0) return "ellipse";
  if (u * v < 0) return "hyperbola";
  return "complex";
}

ordered_json caustics_report(const ConfocalFamily& fam, const CayleyTable& table,
                             const CausticSet& roots, double tol) {
  DegreeReport deg = degree_report(table);
  ForbiddenValues fv = forbidden_values(table);

  ordered_json doc;
  doc["family"] = family_json(fam);
  doc["n"] = table.n;
  ordered_json poly = ordered_json::array();
  for (int k = 0; k <= table.bn.degree(); ++k) poly.push_back(fraction_string(table.bn.coeff(k)));
  doc["polynomial"] = poly;
  doc["degree"] = deg.degree;
  doc["degree_bound"] = deg.expected_generic;
  doc["degree_structural"] = deg.structural_bound;
  doc["squarefree"] = roots.squarefree;
  doc["forbidden"] = ordered_json{{"at_minus_a2", fraction_string(fv.at_minus_a2)},
                                  {"at_minus_b2", fraction_string(fv.at_minus_b2)}};
  ordered_json rs = ordered_json::array();
  for (const auto& r : roots.roots) {
    ordered_json jr;
    jr["re"] = r.lambda.real();
    jr["im"] = r.lambda.imag();
    jr["multiplicity"] = r.multiplicity;
    jr["admissible"] = r.admissible;
    jr["kind"] = conic_kind(fam, r.lambda, tol);
    rs.push_back(jr);
  }
  doc["roots"] = rs;
  doc["N"] = roots.admissible_count;
  return doc;
}

ordered_json trace_report(const ConfocalFamily& fam, const OrbitTrace& trace) {
  ordered_json doc;
  doc["family"] = family_json(fam);
  doc["n"] = static_cast<int>(trace.sides.size());
  doc["lambda"] = cx_json(trace.lambda);
  ordered_json verts = ordered_json::array();
  for (const auto& v : trace.vertices) {
    ordered_json triple = ordered_json::array();
    for (const auto& z : v.v) triple.push_back(ordered_json::array({z.real(), z.imag()}));
    verts.push_back(triple);
  }
  doc["vertices"] = verts;
  ordered_json pvals = ordered_json::array();
  for (const auto& p : trace.invariants) pvals.push_back(cx_json(p));
  doc["P_values"] = pvals;
  doc["residuals"] = ordered_json{{"reflection", trace.reflection_residuals},
                                  {"tangency", trace.tangency_residuals}};
  doc["closure_residual"] = trace.closure_residual;
  doc["self_reflection_vertices"] = trace.self_reflection_vertices;
  doc["infinite_vertices"] = trace.infinite_vertices;
  return doc;
}

ParsedTrace parse_trace_report(const ordered_json& doc) {
  ParsedTrace out;
  out.lambda = cx_from(doc.at("lambda"));
  for (const auto& vj : doc.at("vertices")) {
    std::array<Cx, 3> triple;
    for (int i = 0; i < 3; ++i) {
      const auto& zj = vj.at(static_cast<size_t>(i));
      triple[static_cast<size_t>(i)] = Cx(zj.at(0).get<double>(), zj.at(1).get<double>());
    }
    out.vertices.push_back(ProjPoint(triple));
  }
  return out;
}

std::string svg_caustics(const ConfocalFamily& fam, const CausticSet& roots, double tol) {
  Extent e = drawing_extent(fam, roots, tol);
  std::ostringstream os;
  svg_open(os, e);
  svg_axis_ellipse(os, std::sqrt(fam.a2d), std::sqrt(fam.b2d), "#000000");
  int color = 0;
  double label_y = -e.y + 0.12 * e.y;
  for (const auto& r : roots.roots) {
    if (!r.admissible) continue;
    std::string kind = conic_kind(fam, r.lambda, tol);
    const char* stroke = kPalette[color % 6];
    if (kind == "ellipse")
      svg_axis_ellipse(os, std::sqrt(fam.a2d + r.lambda.real()), std::sqrt(fam.b2d + r.lambda.real()), stroke);
    else if (kind == "hyperbola")
      svg_hyperbola(os, std::sqrt(std::abs(fam.a2d + r.lambda.real())),
                    std::sqrt(std::abs(fam.b2d + r.lambda.real())), e, stroke);
    os << "  <text x=\"" << fmt6(-e.x + 0.04 * e.x) << "\" y=\"" << fmt6(label_y)
       << "\" font-size=\"" << fmt6(0.09 * e.y) << "\" fill=\"" << stroke << "\">lambda = "
       << fmt6(r.lambda.real());
    if (std::abs(r.lambda.imag()) > tol) os << " + " << fmt6(r.lambda.imag()) << "i";
    os << " (" << kind << ")</text>\n";
    label_y += 0.11 * e.y;
    ++color;
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_orbit(const ConfocalFamily& fam, const OrbitTrace& trace, double tol) {
  CausticSet single;
  single.roots.push_back({trace.lambda, 1, true});
  single.admissible_count = 1;
  Extent e = drawing_extent(fam, single, tol);
  std::ostringstream os;
  svg_open(os, e);
  svg_axis_ellipse(os, std::sqrt(fam.a2d), std::sqrt(fam.b2d), "#000000");
  std::string kind = conic_kind(fam, trace.lambda, tol);
  if (kind == "ellipse")
    svg_axis_ellipse(os, std::sqrt(fam.a2d + trace.lambda.real()),
                     std::sqrt(fam.b2d + trace.lambda.real()), kPalette[0]);
  else if (kind == "hyperbola")
    svg_hyperbola(os, std::sqrt(std::abs(fam.a2d + trace.lambda.real())),
                  std::sqrt(std::abs(fam.b2d + trace.lambda.real())), e, kPalette[0]);

  bool complex_vertices = false;
  os << "  <polyline fill=\"none\" stroke=\"" << kPalette[1] << "\" stroke-width=\"0.025\" points=\"";
  bool first = true;
  for (const auto& v : trace.vertices) {
    if (v.is_infinite(tol)) {
      complex_vertices = true;
      continue;
    }
    Cx x = v.x(), y = v.y();
    if (std::abs(x.imag()) > tol || std::abs(y.imag()) > tol) complex_vertices = true;
    if (!first) os << " ";
    os << fmt6(x.real()) << "," << fmt6(-y.real());
    first = false;
  }
  os << "\"/>\n";
  for (const auto& v : trace.vertices) {
    if (v.is_infinite(tol)) continue;
    os << "  <circle cx=\"" << fmt6(v.x().real()) << "\" cy=\"" << fmt6(-v.y().real())
       << "\" r=\"0.04\" fill=\"" << kPalette[1] << "\"/>\n";
  }
  if (complex_vertices || !trace.infinite_vertices.empty()) {
    os << "  <text x=\"" << fmt6(-e.x + 0.04 * e.x) << "\" y=\"" << fmt6(-e.y + 0.12 * e.y)
       << "\" font-size=\"" << fmt6(0.09 * e.y)
       << "\">orbit has complex or infinite vertices; drawn at real parts</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string csv_caustics(const ConfocalFamily& fam, const CausticSet& roots, double tol) {
  std::ostringstream os;
  os << "curve,lambda_re,lambda_im,kind,t,x,y\n";
  const int samples = 128;
  auto emit_ellipse = [&](const std::string& label, const Cx& lambda, double rx, double ry,
                          const std::string& kind) {
    for (int i = 0; i < samples; ++i) {
      double t = 2.0 * M_PI * i / samples;
      os << label << "," << fmt6(lambda.real()) << "," << fmt6(lambda.imag()) << "," << kind << ","
         << fmt6(t) << "," << fmt6(rx * std::cos(t)) << "," << fmt6(ry * std::sin(t)) << "\n";
    }
  };
  emit_ellipse("E", Cx(0), std::sqrt(fam.a2d), std::sqrt(fam.b2d), "ellipse");
  int index = 0;
  for (const auto& r : roots.roots) {
    if (!r.admissible) continue;
    std::string kind = conic_kind(fam, r.lambda, tol);
    std::string label = "C" + std::to_string(index++);
    if (kind == "ellipse") {
      emit_ellipse(label, r.lambda, std::sqrt(fam.a2d + r.lambda.real()),
                   std::sqrt(fam.b2d + r.lambda.real()), kind);
    } else if (kind == "hyperbola") {
      double rx = std::sqrt(std::abs(fam.a2d + r.lambda.real()));
      double ry = std::sqrt(std::abs(fam.b2d + r.lambda.real()));
      for (int i = 0; i <= samples; ++i) {
        double t = -2.0 + 4.0 * i / samples;
        os << label << "+," << fmt6(r.lambda.real()) << "," << fmt6(r.lambda.imag()) << "," << kind
           << "," << fmt6(t) << "," << fmt6(rx * std::cosh(t)) << "," << fmt6(ry * std::sinh(t)) << "\n";
        os << label << "-," << fmt6(r.lambda.real()) << "," << fmt6(r.lambda.imag()) << "," << kind
           << "," << fmt6(t) << "," << fmt6(-rx * std::cosh(t)) << "," << fmt6(ry * std::sinh(t)) << "\n";
      }
    }
  }
  return os.str();
}

std::string csv_orbit(const OrbitTrace& trace) {
  std::ostringstream os;
  os << "vertex,x_re,x_im,y_re,y_im,z_re,z_im\n";
  for (size_t i = 0; i < trace.vertices.size(); ++i) {
    const auto& v = trace.vertices[i].v;
    os << i;
    for (const auto& z : v) os << "," << fmt6(z.real()) << "," << fmt6(z.imag());
    os << "\n";
  }
  return os.str();
}

}  // namespace billiards
