#pragma once

#include "hamedge/dh.hpp"
#include "hamedge/poly.hpp"
#include "hamedge/triple.hpp"

#include <json.hpp>

namespace hamedge {

using json = nlohmann::ordered_json;

// Polynomials serialize to an array of integers indexed by degree,
// e.g. [1,0,1] = 1 + t^2. Coefficients outside the int64 range are
// emitted as decimal strings; parsing accepts both forms.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

// {label, p0, p1, p, r0, r1}
json triple_to_json(const SimpleTriple& t);
SimpleTriple triple_from_json(const json& j);

std::string to_string(CheckStatus s);

// Array of {name, status, detail}.
json report_to_json(const CheckReport& r);

// {basis: [labels], coords: ["p/q", ...]}; rationals as strings to keep
// exactness.
json h2_to_json(const H2Class& c);
H2Class h2_from_json(const json& j);

}  // namespace hamedge
