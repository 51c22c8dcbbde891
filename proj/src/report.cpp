#include "hamedge/report.hpp"

#include "hamedge/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hamedge {

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    out += ch;
    if (ch == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// SVG file names come from entry names; keep them filesystem-safe.
std::string slug(const std::string& name) {
  std::string out;
  for (char ch : name)
    out += (std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_');
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IOFailure("cannot open " + path + " for writing");
  os << contents;
  if (!os) throw IOFailure("write failed for " + path);
}

}  // namespace

json report_to_json(const Report& report, bool deterministic) {
  json j;
  j["version"] = report.version;
  j["seed"] = report.seed;
  if (!deterministic) j["timestamp"] = static_cast<std::int64_t>(std::time(nullptr));
  json checks = json::array();
  for (const auto& rec : report.records)
    checks.push_back({{"module", rec.module},
                      {"name", rec.name},
                      {"status", rec.status},
                      {"expected", rec.expected},
                      {"actual", rec.actual},
                      {"provenance", rec.provenance}});
  j["checks"] = std::move(checks);
  return j;
}

std::string report_to_csv(const Report& report) {
  std::ostringstream os;
  os << "module,name,status,expected,actual,provenance\n";
  for (const auto& rec : report.records)
    os << csv_quote(rec.module) << ',' << csv_quote(rec.name) << ',' << csv_quote(rec.status)
       << ',' << csv_quote(rec.expected) << ',' << csv_quote(rec.actual) << ','
       << csv_quote(rec.provenance) << '\n';
  return os.str();
}

std::string svg_interval_plot(const IntervalPlot& plot) {
  const double span_lo = std::min(plot.lo, plot.analytic_lo);
  const double span_hi = std::max(plot.hi, plot.analytic_hi);
  const double pad = std::max(1e-12, (span_hi - span_lo) * 0.1);
  const double a = span_lo - pad, b = span_hi + pad;
  auto x = [&](double t) { return 40.0 + (t - a) / (b - a) * 400.0; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"480\" height=\"120\" "
        "viewBox=\"0 0 480 120\">\n";
  os << "  <text x=\"40\" y=\"20\" font-family=\"monospace\" font-size=\"12\">" << plot.name
     << "</text>\n";
  os << "  <line x1=\"40\" y1=\"70\" x2=\"440\" y2=\"70\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  // analytic endpoints as ticks
  for (double t : {plot.analytic_lo, plot.analytic_hi})
    os << "  <line x1=\"" << num(x(t)) << "\" y1=\"55\" x2=\"" << num(x(t))
       << "\" y2=\"85\" stroke=\"#d33\" stroke-width=\"2\"/>\n";
  // measured interval as a bar
  os << "  <rect x=\"" << num(x(plot.lo)) << "\" y=\"64\" width=\""
     << num(std::max(0.5, x(plot.hi) - x(plot.lo)))
     << "\" height=\"12\" fill=\"#36c\" fill-opacity=\"0.7\"/>\n";
  os << "  <text x=\"40\" y=\"105\" font-family=\"monospace\" font-size=\"11\">measured ["
     << num(plot.lo) << ", " << num(plot.hi) << "]  analytic [" << num(plot.analytic_lo) << ", "
     << num(plot.analytic_hi) << "]</text>\n";
  os << "</svg>\n";
  return os.str();
}

void report_emit(const Report& report, ReportFormat format, const std::string& path,
                 bool deterministic) {
  switch (format) {
    case ReportFormat::json:
      write_file(path, report_to_json(report, deterministic).dump(2) + "\n");
      return;
    case ReportFormat::csv:
      write_file(path, report_to_csv(report));
      return;
    case ReportFormat::svg_dir: {
      std::error_code ec;
      std::filesystem::create_directories(path, ec);
      if (ec) throw IOFailure("cannot create directory " + path + ": " + ec.message());
      for (const auto& plot : report.plots)
        write_file((std::filesystem::path(path) / (slug(plot.name) + ".svg")).string(),
                   svg_interval_plot(plot));
      return;
    }
  }
  throw IOFailure("unknown report format");
}

}  // namespace hamedge
