#include "hamedge/catalog.hpp"

#include "hamedge/errors.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace hamedge {

namespace {

constexpr char kVersion[] = "0.1.0";

std::string polys_summary(const SimpleTriple& t) {
  return "P0 = " + t.p0.str() + "; P1 = " + t.p1.str() + "; P = " + t.p.str() +
         "; r0 = " + std::to_string(t.r0) + "; r1 = " + std::to_string(t.r1);
}

std::string interval_summary(const RatInterval& iv) {
  if (iv.empty) return "empty";
  return "[" + format_rational(iv.lo) + ", " + format_rational(iv.hi) + "]";
}

CheckRecord make_record(const CatalogEntry& entry, std::string check, bool ok,
                        std::string expected, std::string actual, bool warn_only = false) {
  CheckRecord rec;
  rec.module = std::holds_alternative<PolygonCase>(entry.expected) ? "polygon" : "simpleham";
  rec.name = entry.name + "/" + check;
  rec.status = ok ? "pass" : (warn_only ? "warn" : "fail");
  rec.expected = std::move(expected);
  rec.actual = std::move(actual);
  rec.provenance = entry.notes;
  return rec;
}

std::vector<CheckRecord> run_triple_entry(const CatalogEntry& entry, const SimpleTriple& want) {
  std::vector<CheckRecord> records;

  try {
    const SimpleTriple got = solve_triple(want.p0, want.r0, want.r1, want.label);
    const bool ok = got.p1 == want.p1 && got.p == want.p;
    records.push_back(make_record(entry, "solve", ok, polys_summary(want), polys_summary(got)));
  } catch (const Error& e) {
    records.push_back(make_record(entry, "solve", false, polys_summary(want), e.what()));
  }

  const CheckReport suite = suite_check(want);
  int warns = 0;
  std::string failed;
  for (const auto& c : suite.entries) {
    if (c.status == CheckStatus::fail) failed += (failed.empty() ? "" : ", ") + c.name;
    if (c.status == CheckStatus::warn) ++warns;
  }
  std::ostringstream actual;
  actual << (suite.entries.size() - static_cast<size_t>(suite.failures())) << "/"
         << suite.entries.size() << " checks pass";
  if (warns) actual << " (" << warns << " warn)";
  if (!failed.empty()) actual << "; failed: " << failed;
  records.push_back(
      make_record(entry, "suite", suite.all_passed() && warns == 0, "all checks pass",
                  actual.str(), suite.all_passed() && warns > 0));
  return records;
}

std::vector<CheckRecord> run_polygon_entry(const CatalogEntry& entry, const PolygonCase& pc,
                                           std::vector<IntervalPlot>* plots) {
  std::vector<CheckRecord> records;

  {
    ChamberResult got;
    try {
      got = pc.alpha.index_origin() == 0 ? chamber_cut(pc.alpha) : chamber_cpn(pc.alpha);
    } catch (const Error& e) {
      got.kind = ChamberKind::NonGeneric;
      got.detail = e.what();
    }
    bool ok = got.kind == pc.expected_kind;
    std::string expected = to_string(pc.expected_kind);
    std::string actual = to_string(got.kind);
    if (ok && got.kind != ChamberKind::Unclassified && got.kind != ChamberKind::NonGeneric) {
      ok = got.ell == pc.expected_ell;
      expected += ", ell = " + format_rational(pc.expected_ell);
      actual += ", ell = " + format_rational(got.ell);
      if (got.kind == ChamberKind::CutOfCPn2) {
        ok = ok && got.slice_size == pc.expected_slice;
        expected += ", slice = " + format_rational(pc.expected_slice);
        actual += ", slice = " + format_rational(got.slice_size);
      }
    }
    records.push_back(make_record(entry, "chamber", ok, std::move(expected), std::move(actual)));
  }

  {
    const RatInterval got = phi_image_analytic(pc.alpha, pc.pair_i, pc.pair_j);
    const bool ok = !got.empty && got.lo == pc.expected_interval.lo &&
                    got.hi == pc.expected_interval.hi;
    records.push_back(make_record(entry, "interval", ok, interval_summary(pc.expected_interval),
                                  interval_summary(got)));
    if (plots) {
      IntervalPlot plot;
      plot.name = entry.name;
      plot.lo = to_double(got.lo);
      plot.hi = to_double(got.hi);
      plot.analytic_lo = to_double(pc.expected_interval.lo);
      plot.analytic_hi = to_double(pc.expected_interval.hi);
      plots->push_back(std::move(plot));
    }
  }

  return records;
}

SimpleTriple cp_triple(int n, int k) {
  SimpleTriple t;
  t.p0 = cp_poincare(k);
  t.p1 = cp_poincare(n - k - 1);
  t.p = cp_poincare(n);
  t.r0 = n - k;
  t.r1 = k + 1;
  std::ostringstream os;
  os << "cp(" << n << "," << k << ")";
  t.label = os.str();
  return t;
}

SimpleTriple quadric_triple(int m) {
  SimpleTriple t;
  t.p0 = cp_poincare(m / 2);
  t.p1 = t.p0;
  t.p = quadric_poincare(m);
  t.r0 = m - m / 2;
  t.r1 = t.r0;
  t.label = "quadric(" + std::to_string(m) + ")";
  return t;
}

SimpleTriple sphere_triple() {
  SimpleTriple t;
  t.p0 = PoincarePoly{1};
  t.p1 = PoincarePoly{1};
  t.p = PoincarePoly{1, 0, 1};
  t.r0 = 1;
  t.r1 = 1;
  t.label = "sphere";
  return t;
}

CatalogEntry triple_entry(SimpleTriple t, std::string family, std::string notes) {
  CatalogEntry entry;
  entry.name = t.label;
  entry.family = std::move(family);
  entry.notes = std::move(notes);
  entry.dim = t.dim();
  entry.expected = std::move(t);
  return entry;
}

CatalogEntry polygon_entry(PolygonCase pc, std::string name, std::string family,
                           std::string notes) {
  CatalogEntry entry;
  entry.name = std::move(name);
  entry.family = std::move(family);
  entry.notes = std::move(notes);
  entry.dim = 2 * (pc.alpha.size() - 3);
  entry.expected = std::move(pc);
  return entry;
}

std::vector<Rat> rats(std::initializer_list<const char*> tokens) {
  std::vector<Rat> out;
  for (const char* t : tokens) out.push_back(parse_rational(t));
  return out;
}

}  // namespace

bool Report::all_passed() const { return failures() == 0; }

int Report::failures() const {
  int n = 0;
  for (const auto& r : records)
    if (r.status == "fail") ++n;
  return n;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> catalog;

  for (int n = 2; n <= 10; ++n)
    for (int k = 0; k <= n - 1; ++k)
      catalog.push_back(triple_entry(
          cp_triple(n, k), "cp",
          "projective space, rotation on the first k+1 coordinates; fixed sets are "
          "complementary projective subspaces"));

  for (int r = 2; r <= 8; ++r)
    for (int k = 1; k <= r - 1; ++k)
      catalog.push_back(triple_entry(
          grassmann_triple(r, k), "grassmann",
          "complex k-planes with the last-coordinate circle; fixed-set polynomials are the "
          "Pascal summands of the Gaussian binomial"));

  for (int m = 2; m <= 8; ++m)
    catalog.push_back(triple_entry(
        quadric_triple(m), "quadric",
        "oriented two-planes in R^{m+2}; both fixed sets are projective spaces of half "
        "dimension"));

  catalog.push_back(triple_entry(sphere_triple(), "sphere",
                                 "discrete fixed set: height function on the two-sphere"));

  {
    const PoincarePoly torus{1, 2, 1};
    catalog.push_back(triple_entry(
        product_with(sphere_triple(), cp_poincare(1), "product: sphere x cp(1)"), "product",
        "trivial action on the second factor"));
    catalog.push_back(triple_entry(product_with(sphere_triple(), torus, "product: sphere x torus"),
                                   "product",
                                   "trivial action on the torus factor; odd Betti numbers"));
    catalog.push_back(triple_entry(
        product_with(cp_triple(2, 0), cp_poincare(1), "product: cp(2,0) x cp(1)"), "product",
        "trivial action on the second factor"));
    catalog.push_back(triple_entry(
        product_with(grassmann_triple(4, 2), cp_poincare(2), "product: grassmann(4,2) x cp(2)"),
        "product", "trivial action on the second factor"));
    catalog.push_back(triple_entry(
        product_with(quadric_triple(3), cp_poincare(1), "product: quadric(3) x cp(1)"), "product",
        "trivial action on the second factor"));
  }

  {
    PolygonCase pc(LengthVector(rats({"1", "1", "1", "2"})));
    pc.expected_kind = ChamberKind::CPn3;
    pc.expected_ell = Rat(1);
    pc.pair_i = 4;
    pc.pair_j = 3;
    pc.expected_interval = {Rat(1), Rat(2), false};
    catalog.push_back(polygon_entry(std::move(pc), "polygon(1,1,1,2)", "polygon-cp",
                                    "quadrilateral in the projective chamber"));
  }
  {
    PolygonCase pc(LengthVector(rats({"2", "4", "6", "9"})));
    pc.expected_kind = ChamberKind::CPn3;
    pc.expected_ell = Rat(3);
    pc.pair_i = 4;
    pc.pair_j = 3;
    pc.expected_interval = {Rat(3), Rat(6), false};
    catalog.push_back(polygon_entry(std::move(pc), "polygon(2,4,6,9)", "polygon-cp",
                                    "quadrilateral in the projective chamber"));
  }
  {
    PolygonCase pc(LengthVector(rats({"1", "1", "1", "1", "3"})));
    pc.expected_kind = ChamberKind::CPn3;
    pc.expected_ell = Rat(1);
    pc.pair_i = 5;
    pc.pair_j = 4;
    pc.expected_interval = {Rat(2), Rat(3), false};
    catalog.push_back(polygon_entry(std::move(pc), "polygon(1,1,1,1,3)", "polygon-cp",
                                    "pentagon in the projective chamber"));
  }
  {
    PolygonCase pc(add_tiny_edge(LengthVector(rats({"1", "1", "1", "2"})), Rat(1, 4)));
    pc.expected_kind = ChamberKind::CutOfCPn2;
    pc.expected_ell = Rat(5, 4);
    pc.expected_slice = Rat(3, 4);
    pc.pair_i = 2;
    pc.pair_j = 0;
    pc.expected_interval = {Rat(3, 4), Rat(5, 4), false};
    catalog.push_back(polygon_entry(std::move(pc), "polygon(1/4,1,1,1,2)", "polygon-cut",
                                    "tiny edge added to a projective-chamber quadrilateral; "
                                    "moment interval has length twice the tiny edge"));
  }

  return catalog;
}

std::vector<CheckRecord> run_entry(const CatalogEntry& entry, std::vector<IntervalPlot>* plots) {
  if (const auto* pc = std::get_if<PolygonCase>(&entry.expected))
    return run_polygon_entry(entry, *pc, plots);
  return run_triple_entry(entry, std::get<SimpleTriple>(entry.expected));
}

Report run_catalog(const CatalogFilter& filter) {
  std::vector<CatalogEntry> entries = build_catalog();

  std::erase_if(entries, [&filter](const CatalogEntry& e) {
    if (filter.family && e.family != *filter.family) return true;
    if (filter.max_dim && e.dim > *filter.max_dim) return true;
    return false;
  });
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });

  std::vector<std::vector<CheckRecord>> per_entry(entries.size());
  std::vector<std::vector<IntervalPlot>> per_entry_plots(entries.size());

  unsigned hw = std::thread::hardware_concurrency();
  int threads = filter.threads > 0 ? filter.threads : static_cast<int>(hw ? hw : 1);
  threads = std::min<int>(threads, static_cast<int>(entries.size()));

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t idx; (idx = next.fetch_add(1)) < entries.size();)
      per_entry[idx] = run_entry(entries[idx], &per_entry_plots[idx]);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Report report;
  report.version = kVersion;
  report.seed = filter.seed;
  for (size_t idx = 0; idx < entries.size(); ++idx) {
    for (auto& rec : per_entry[idx]) report.records.push_back(std::move(rec));
    for (auto& plot : per_entry_plots[idx]) report.plots.push_back(std::move(plot));
  }
  return report;
}

}  // namespace hamedge
