#include "hamedge/numeric.hpp"

#include "hamedge/errors.hpp"

#include <cctype>
#include <sstream>

namespace hamedge {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& token) {
  std::string s = token;
  // trim whitespace
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw DomainError("empty rational token");
  s = s.substr(b, e - b + 1);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  if (s.empty()) throw DomainError("malformed rational: '" + token + "'");

  Rat value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw DomainError("malformed rational: '" + token + "'");
    Int d(den);
    if (d == 0) throw DomainError("zero denominator: '" + token + "'");
    value = Rat(Int(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw DomainError("malformed rational: '" + token + "'");
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int num = (whole.empty() ? Int(0) : Int(whole)) * scale +
              (frac.empty() ? Int(0) : Int(frac));
    value = Rat(num, scale);
  } else {
    if (!all_digits(s)) throw DomainError("malformed rational: '" + token + "'");
    value = Rat(Int(s));
  }
  return negative ? Rat(-value) : value;
}

std::vector<Rat> parse_rational_list(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw DomainError("empty rational list");
  return out;
}

std::string format_rational(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace hamedge
