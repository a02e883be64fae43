#include "render.hpp"

#include <cstdio>

#include "args.hpp"

namespace numrange::cli {

namespace {

std::string fmt(const char* pattern, double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, pattern, value);
  return buf;
}

std::string exact(double value) { return fmt("%.17g", value); }

// SVG y grows downwards.
std::string point(double x, double y) { return fmt("%.6f", x) + "," + fmt("%.6f", -y); }

}  // namespace

std::string render_csv(const RunReport& report) {
  if (!report.results.contains("boundary")) throw UsageError("report has no boundary sample");
  const auto& b = report.results.at("boundary");
  const auto& theta = b.at("theta");
  const auto& lambda = b.at("lambda");
  const auto& x = b.at("x");
  const auto& y = b.at("y");
  std::string out = "theta,lambda,x,y\n";
  for (std::size_t j = 0; j < theta.size(); ++j) {
    out += exact(theta[j].get<double>()) + "," + exact(lambda[j].get<double>()) + "," +
           exact(x[j].get<double>()) + "," + exact(y[j].get<double>()) + "\n";
  }
  return out;
}

std::string render_svg(const RunReport& report) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
      "viewBox=\"-1.1 -1.1 2.2 2.2\">\n"
      "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#444\" stroke-width=\"0.005\"/>\n";
  if (report.results.contains("boundary")) {
    const auto& b = report.results.at("boundary");
    out += "  <polyline fill=\"#cfe0f5\" stroke=\"#1f4e8c\" stroke-width=\"0.006\" points=\"";
    for (std::size_t j = 0; j < b.at("x").size(); ++j) {
      if (j > 0) out += ' ';
      out += point(b.at("x")[j].get<double>(), b.at("y")[j].get<double>());
    }
    if (!b.at("x").empty()) out += ' ' + point(b.at("x")[0].get<double>(), b.at("y")[0].get<double>());
    out += "\"/>\n";
  }
  if (report.results.contains("polygons")) {
    for (const auto& polygon : report.results.at("polygons")) {
      out += "  <polygon fill=\"none\" stroke=\"#b03a2e\" stroke-width=\"0.005\" points=\"";
      bool first = true;
      for (const auto& v : polygon.at("vertices")) {
        if (!first) out += ' ';
        first = false;
        out += point(v[0].get<double>(), v[1].get<double>());
      }
      out += "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace numrange::cli
