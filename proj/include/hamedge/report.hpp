#pragma once

#include "hamedge/catalog.hpp"
#include "hamedge/json_io.hpp"

#include <string>

namespace hamedge {

// Report schema: {version, seed, checks: [{module, name, status, expected,
// actual, provenance}]}. A timestamp field is added unless deterministic
// output is requested; everything else is byte-stable for identical inputs.
json report_to_json(const Report& report, bool deterministic);

std::string report_to_csv(const Report& report);

// Static SVG: analytic endpoints drawn as ticks, the measured interval as
// a bar. Deterministic for identical inputs.
std::string svg_interval_plot(const IntervalPlot& plot);

enum class ReportFormat { json, csv, svg_dir };

// Writes the report to a file (json/csv) or one SVG per interval plot into
// a directory. Throws IOFailure on filesystem errors.
void report_emit(const Report& report, ReportFormat format, const std::string& path,
                 bool deterministic);

}  // namespace hamedge
