#include "knotpoly/detect.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "knotpoly/errors.hpp"
#include "knotpoly/newton.hpp"

namespace knotpoly {

InvariantPair InvariantPair::make(const IntPoly2& apoly, const IntPoly1& alex) {
  const IntPoly2 a = normalize(apoly);
  if (!is_balanced(a)) throw PreconditionError("balanced A-polynomial", "A-polynomial is not balanced");
  if (squarefree(a) != a) throw PreconditionError("squarefree A-polynomial", "A-polynomial has repeated factors");
  return {a, alex};
}

InvariantPair torus_invariants(const TorusParams& t) {
  return {torus_apoly(t).poly, torus_alexander(t.p, t.q)};
}

std::vector<TorusParams> torus_pairs(long bound) {
  std::vector<TorusParams> out;
  for (long q = 2; q * (q + 1) <= bound; ++q)
    for (long a = q + 1; a * q <= bound; ++a) {
      if (std::gcd(a, q) != 1) continue;
      out.push_back({-a, q});
      out.push_back({a, q});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TorusParams> torus_matches(const InvariantPair& inv) {
  std::vector<TorusParams> out;
  const long xdeg = inv.apoly.degree_x();
  for (const auto& t : torus_pairs(xdeg)) {
    if (F_poly(t.p, t.q).degree_x() != xdeg) continue;
    if (torus_apoly(t).poly == inv.apoly && torus_alexander(t.p, t.q) == inv.alex) out.push_back(t);
  }
  return out;
}

std::optional<TorusParams> identify_torus(const InvariantPair& inv) {
  const auto m = torus_matches(inv);
  if (m.empty()) return std::nullopt;
  if (m.size() > 1) throw InvariantError("torus invariants match more than one torus knot");
  return m.front();
}

bool torus_pair_divisibility(long r, long s, long p, long q) {
  const TorusParams inner = TorusParams::make(r, s);
  const TorusParams outer = TorusParams::make(p, q);
  return divides(torus_apoly(inner).poly, torus_apoly(outer).poly).has_value() && cyclotomic_divides(r, s, p, q);
}

std::vector<std::pair<TorusParams, TorusParams>> apoly_coincidences(long bound) {
  if (bound < 4) throw PreconditionError("bound >= 4", "coincidence search bound too small");
  std::map<IntPoly2::Terms, std::vector<TorusParams>> groups;
  for (const auto& t : torus_pairs(bound)) groups[torus_apoly(t).poly.terms()].push_back(t);
  std::vector<std::pair<TorusParams, TorusParams>> out;
  for (const auto& [key, ts] : groups)
    for (std::size_t a = 0; a < ts.size(); ++a)
      for (std::size_t b = a + 1; b < ts.size(); ++b) out.emplace_back(ts[a], ts[b]);
  std::sort(out.begin(), out.end());
  return out;
}

Verdict hyperbolicity_screen(const std::vector<IntPoly2>& factors) {
  if (factors.empty()) throw PreconditionError("factors nonempty", "screen needs at least one factor");
  return all_factors_binomial(factors) ? Verdict::not_hyperbolic : Verdict::inconclusive;
}

}  // namespace knotpoly
