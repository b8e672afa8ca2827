#include "knotpoly/format.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "knotpoly/errors.hpp"

namespace knotpoly {

namespace {

std::string strip_blanks(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// Parses a sum of terms c*v1^e1*v2^e2... over the given variable names.
template <std::size_t N>
std::vector<std::pair<std::array<long, N>, Integer>> parse_terms(std::string_view text,
                                                                 const std::array<char, N>& vars) {
  const std::string s = strip_blanks(text);
  if (s.empty()) throw InputError("empty polynomial");
  std::vector<std::pair<std::array<long, N>, Integer>> out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw InputError("cannot parse polynomial at offset " + std::to_string(pos) + ": " + what);
  };
  auto read_digits = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!out.empty()) {
      fail("expected + or -");
    }
    Integer coeff = 1;
    bool any = false;
    std::string digits = read_digits();
    if (!digits.empty()) {
      coeff = Integer(digits);
      any = true;
    }
    std::array<long, N> exps{};
    while (pos < s.size()) {
      if (any) {
        if (s[pos] != '*') break;
        ++pos;
      }
      if (pos >= s.size()) fail("expected a variable");
      std::size_t v = 0;
      while (v < N && vars[v] != s[pos]) ++v;
      if (v == N) fail("expected a variable");
      ++pos;
      long e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string ed = read_digits();
        if (ed.empty()) fail("expected an exponent");
        e = std::stol(ed);
      }
      exps[v] += e;
      any = true;
    }
    if (!any) fail("empty term");
    out.emplace_back(exps, sign * coeff);
  }
  return out;
}

std::string term_text(const Integer& c, bool first, const std::string& mono) {
  std::ostringstream os;
  const Integer a = abs(c);
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (mono.empty()) {
    os << a.get_str();
  } else {
    if (a != 1) os << a.get_str() << '*';
    os << mono;
  }
  return os.str();
}

std::string power(char v, long e) {
  if (e == 0) return {};
  std::string s(1, v);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

Integer coeff_from_json(const nlohmann::json& c) {
  if (c.is_string()) {
    Integer v;
    if (v.set_str(c.get<std::string>(), 10) != 0) throw InputError("bad coefficient string in JSON");
    return v;
  }
  if (c.is_number_integer()) return Integer(c.get<long>());
  throw InputError("coefficient must be a decimal string");
}

long exponent_from_json(const nlohmann::json& e) {
  if (!e.is_number_integer() || e.get<long>() < 0) throw InputError("exponent must be a nonnegative integer");
  return e.get<long>();
}

bool looks_like_json(std::string_view content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '[' || c == '{';
  }
  return false;
}

}  // namespace

std::string to_text(const IntPoly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string mono = power('x', m.i);
    std::string ym = power('y', m.j);
    if (!mono.empty() && !ym.empty()) mono += "*";
    mono += ym;
    out += term_text(c, first, mono);
    first = false;
  }
  return out;
}

IntPoly2 parse_poly2(std::string_view text) {
  IntPoly2 r;
  for (const auto& [e, c] : parse_terms<2>(text, {'x', 'y'})) r = r + IntPoly2::monomial(c, e[0], e[1]);
  return r;
}

std::string to_text(const UPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    out += term_text(c, first, power(var, e));
    first = false;
  }
  return out;
}

UPoly parse_upoly(std::string_view text, char var) {
  UPoly r;
  for (const auto& [e, c] : parse_terms<1>(text, {var})) r = r + UPoly::monomial(c, e[0]);
  return r;
}

nlohmann::json to_json(const IntPoly2& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) j.push_back({m.i, m.j, c.get_str()});
  return j;
}

IntPoly2 poly2_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("polynomial JSON must be an array of [i, j, coeff]");
  IntPoly2 r;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw InputError("polynomial JSON term must be [i, j, coeff]");
    r = r + IntPoly2::monomial(coeff_from_json(t[2]), exponent_from_json(t[0]), exponent_from_json(t[1]));
  }
  return r;
}

nlohmann::json to_json(const UPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) j.push_back({e, c.get_str()});
  return j;
}

UPoly upoly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("polynomial JSON must be an array of [e, coeff]");
  UPoly r;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw InputError("polynomial JSON term must be [e, coeff]");
    r = r + UPoly::monomial(coeff_from_json(t[1]), exponent_from_json(t[0]));
  }
  return r;
}

IntPoly2 read_poly2(std::string_view content) {
  if (!looks_like_json(content)) return parse_poly2(content);
  try {
    return poly2_from_json(nlohmann::json::parse(content));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
}

UPoly read_upoly(std::string_view content) {
  if (!looks_like_json(content)) return parse_upoly(content);
  try {
    return upoly_from_json(nlohmann::json::parse(content));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
}

}  // namespace knotpoly
