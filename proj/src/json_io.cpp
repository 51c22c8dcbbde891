#include "hamedge/json_io.hpp"

#include "hamedge/errors.hpp"

namespace hamedge {

namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kInt64Min = std::numeric_limits<std::int64_t>::min();

json int_to_json(const Int& v) {
  if (v <= kInt64Max && v >= kInt64Min) return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw DomainError("expected an integer or integer string");
}

}  // namespace

json poly_to_json(const Poly& p) {
  json arr = json::array();
  for (const Int& c : p.coeffs()) arr.push_back(int_to_json(c));
  return arr;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
  std::vector<Int> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(int_from_json(c));
  return Poly(std::move(coeffs));
}

json triple_to_json(const SimpleTriple& t) {
  json j;
  j["label"] = t.label;
  j["p0"] = poly_to_json(t.p0.poly());
  j["p1"] = poly_to_json(t.p1.poly());
  j["p"] = poly_to_json(t.p.poly());
  j["r0"] = t.r0;
  j["r1"] = t.r1;
  return j;
}

SimpleTriple triple_from_json(const json& j) {
  SimpleTriple t;
  t.label = j.value("label", std::string{});
  t.p0 = PoincarePoly(poly_from_json(j.at("p0")));
  t.p1 = PoincarePoly(poly_from_json(j.at("p1")));
  t.p = PoincarePoly(poly_from_json(j.at("p")));
  t.r0 = j.at("r0").get<int>();
  t.r1 = j.at("r1").get<int>();
  if (t.r0 < 1 || t.r1 < 1) throw DomainError("triple JSON: codimensions must be positive");
  return t;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::warn: return "warn";
    case CheckStatus::fail: return "fail";
  }
  return "unknown";
}

json report_to_json(const CheckReport& r) {
  json arr = json::array();
  for (const auto& e : r.entries)
    arr.push_back({{"name", e.name}, {"status", to_string(e.status)}, {"detail", e.detail}});
  return arr;
}

json h2_to_json(const H2Class& c) {
  json coords = json::array();
  for (Eigen::Index k = 0; k < c.coords.size(); ++k)
    coords.push_back(format_rational(c.coords(k)));
  return {{"basis", c.basis}, {"coords", coords}};
}

H2Class h2_from_json(const json& j) {
  std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
  const auto& coords = j.at("coords");
  if (!coords.is_array()) throw DomainError("H2Class JSON: coords must be an array");
  RatVec v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index k = 0;
  for (const auto& c : coords) v(k++) = parse_rational(c.get<std::string>());
  return H2Class(std::move(basis), std::move(v));
}

}  // namespace hamedge
