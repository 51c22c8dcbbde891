#pragma once

#include "hamedge/polygon.hpp"
#include "hamedge/triple.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hamedge {

// A polygon-space catalog case: the length vector, its expected chamber
// data, and the moment pairing whose image interval is checked.
struct PolygonCase {
  explicit PolygonCase(LengthVector a) : alpha(std::move(a)) {}

  LengthVector alpha;
  ChamberKind expected_kind = ChamberKind::Unclassified;
  Rat expected_ell;
  Rat expected_slice;  // cut chamber only
  int pair_i = 0, pair_j = 0;
  RatInterval expected_interval;
};

// One verifiable entry. Expected values are produced by the named model
// generators (projective polynomials, Pascal identities, product and cut
// formulas), never hand-typed numbers.
struct CatalogEntry {
  std::string name;
  std::string family;  // cp | grassmann | quadric | sphere | product | polygon-cp | polygon-cut
  std::string notes;
  int dim = 0;  // real dimension of the space
  std::variant<SimpleTriple, PolygonCase> expected;
};

struct CheckRecord {
  std::string module;
  std::string name;
  std::string status;  // pass | warn | fail
  std::string expected;
  std::string actual;
  std::string provenance;
};

// Interval data attached to a report for plotting.
struct IntervalPlot {
  std::string name;
  double lo = 0, hi = 0;
  double analytic_lo = 0, analytic_hi = 0;
};

struct Report {
  std::string version;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;
  std::vector<IntervalPlot> plots;

  bool all_passed() const;
  int failures() const;
};

struct CatalogFilter {
  std::optional<std::string> family;
  std::optional<int> max_dim;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
};

// The generated example catalog: projective triples for 2 <= n <= 10,
// Grassmannians for 2 <= r <= 8, quadrics for 2 <= m <= 8, the sphere,
// five products, and the section-of-examples polygon cases.
std::vector<CatalogEntry> build_catalog();

// Runs every filtered entry (solve re-derivation + consistency suite for
// polynomial entries, chamber and moment-interval checks for polygon
// entries) in a small work pool. Records are ordered by entry name so
// identical runs produce identical reports.
Report run_catalog(const CatalogFilter& filter = {});

// Checks for a single entry; exposed for the CLI and tests.
std::vector<CheckRecord> run_entry(const CatalogEntry& entry, std::vector<IntervalPlot>* plots);

}  // namespace hamedge
