#include "knotpoly/apoly.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <string>

#include "knotpoly/errors.hpp"

namespace knotpoly {

namespace {

void check_pair(long p, long q) {
  if (q < 2) throw PreconditionError("q >= 2", "got q = " + std::to_string(q));
  if (p == 0) throw PreconditionError("p != 0", "p must be nonzero");
  if (std::gcd(p, q) != 1)
    throw PreconditionError("gcd(|p|,q) = 1", "(" + std::to_string(p) + "," + std::to_string(q) + ") is not coprime");
}

long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw PreconditionError("exponent range", "exponent overflows 64 bits");
  return r;
}

IntPoly2 binomial(const Integer& c0, long i0, long j0, const Integer& c1, long i1, long j1) {
  return IntPoly2::monomial(c0, i0, j0) + IntPoly2::monomial(c1, i1, j1);
}

// Adds squarefree f to a pairwise coprime base, splitting shared factors.
void refine_into(std::vector<IntPoly2>& base, IntPoly2 f) {
  for (std::size_t k = 0; k < base.size() && !f.is_constant(); ++k) {
    IntPoly2 g = gcd(base[k], f);
    if (g.is_constant()) continue;
    IntPoly2 rest = *IntPoly2::divide_exact(base[k], g);
    f = normalize(*IntPoly2::divide_exact(f, g));
    base[k] = g;
    if (!rest.is_constant()) base.push_back(normalize(rest));
  }
  if (!f.is_constant()) base.push_back(f);
}

}  // namespace

TorusParams TorusParams::make(long p, long q) {
  check_pair(p, q);
  if (std::abs(p) <= q)
    throw PreconditionError("|p| > q", "T(" + std::to_string(p) + "," + std::to_string(q) + ") is not in normal form");
  return {p, q};
}

CableParams CableParams::make(long p, long q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  check_pair(p, q);
  return {p, q};
}

IteratedTorusDesc IteratedTorusDesc::make(const std::vector<std::pair<long, long>>& stages) {
  if (stages.empty()) throw PreconditionError("nonempty descriptor", "no stages given");
  IteratedTorusDesc d;
  for (const auto& [p, q] : stages) d.stages.push_back(CableParams::make(p, q));
  TorusParams::make(d.stages.back().p, d.stages.back().q);
  return d;
}

IteratedTorusDesc IteratedTorusDesc::parse(std::string_view text) {
  static const std::regex pair_re(R"(\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\))");
  static const std::regex full_re(R"(\s*\(\s*[+-]?\d+\s*,\s*[+-]?\d+\s*\)(\s*,\s*\(\s*[+-]?\d+\s*,\s*[+-]?\d+\s*\))*\s*)");
  const std::string s(text);
  if (!std::regex_match(s, full_re)) throw InputError("descriptor must look like (p1,q1),(p2,q2),...");
  std::vector<std::pair<long, long>> stages;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), pair_re); it != std::sregex_iterator(); ++it)
    stages.emplace_back(std::stol((*it)[1]), std::stol((*it)[2]));
  return make(stages);
}

APoly APoly::from_factors(const std::vector<IntPoly2>& pieces) {
  std::vector<IntPoly2> base;
  for (const auto& f : pieces) {
    if (f.is_zero()) throw PreconditionError("nonzero factor", "zero factor in A-polynomial");
    if (f.is_constant()) continue;
    refine_into(base, squarefree(f));
  }
  std::sort(base.begin(), base.end(), [](const IntPoly2& a, const IntPoly2& b) { return a.terms() < b.terms(); });
  APoly out;
  for (const auto& f : base) out.poly = out.poly * f;
  out.poly = normalize(out.poly);
  out.factors = std::move(base);
  return out;
}

APoly APoly::from_poly(const IntPoly2& p) { return from_factors({p}); }

IntPoly2 F_poly(long p, long q) {
  check_pair(p, q);
  if (q == 2) return p > 0 ? binomial(1, 0, 0, 1, 2 * p, 1) : binomial(1, -2 * p, 0, 1, 0, 1);
  const long e = checked_mul(2 * p, q);
  return p > 0 ? binomial(-1, 0, 0, 1, e, 2) : binomial(-1, -e, 0, 1, 0, 2);
}

IntPoly2 G_poly(long p, long q) {
  check_pair(p, q);
  const long e = checked_mul(p, q);
  return p > 0 ? binomial(-1, 0, 0, 1, e, 1) : binomial(-1, -e, 0, 1, 0, 1);
}

std::vector<IntPoly2> F_factors(long p, long q) {
  if (q == 2) return {normalize(F_poly(p, q))};
  const long e = checked_mul(std::abs(p), q);
  if (p > 0) return {binomial(-1, 0, 0, 1, e, 1), binomial(1, 0, 0, 1, e, 1)};
  return {normalize(binomial(1, e, 0, -1, 0, 1)), binomial(1, e, 0, 1, 0, 1)};
}

APoly torus_apoly(const TorusParams& t) {
  TorusParams::make(t.p, t.q);
  return APoly::from_factors(F_factors(t.p, t.q));
}

IntPoly2 ext_w(const IntPoly2& f, long w) {
  if (f.is_zero()) throw PreconditionError("nonzero input", "Ext of the zero polynomial");
  if (w < 1) throw PreconditionError("w >= 1", "winding number must be positive");
  if (f.degree_y() <= 0) return normalize(substitute_x_power(f, w));
  std::vector<IntPoly2> g(static_cast<std::size_t>(w + 1));
  g[0] = -IntPoly2::y();
  g[static_cast<std::size_t>(w)] = IntPoly2::constant(1);
  const IntPoly2 r = resultant_elim(as_elim_in_y(substitute_x_power(f, w)), ElimPoly(std::move(g)));
  return squarefree(r);
}

APoly ext_w(const APoly& f, long w) {
  std::vector<IntPoly2> pieces;
  for (const auto& g : f.factors) pieces.push_back(ext_w(g, w));
  return APoly::from_factors(pieces);
}

IntPoly2 cable_apoly(const IntPoly2& a_c, const CableParams& c) {
  const CableParams cp = CableParams::make(c.p, c.q);
  if (a_c.is_zero() || normalize(a_c) == IntPoly2::constant(1))
    throw PreconditionError("nontrivial companion", "companion A-polynomial is 1 (unknot)");
  return squarefree(F_poly(cp.p, cp.q) * ext_w(a_c, cp.q));
}

APoly cable_apoly(const APoly& a_c, const CableParams& c) {
  const CableParams cp = CableParams::make(c.p, c.q);
  if (a_c.is_unknot()) throw PreconditionError("nontrivial companion", "companion A-polynomial is 1 (unknot)");
  std::vector<IntPoly2> pieces = F_factors(cp.p, cp.q);
  for (const auto& g : a_c.factors) pieces.push_back(ext_w(g, cp.q));
  return APoly::from_factors(pieces);
}

APoly iterated_torus_apoly(const IteratedTorusDesc& d) {
  const auto checked = [&] {
    std::vector<std::pair<long, long>> s;
    for (const auto& c : d.stages) s.emplace_back(c.p, c.q);
    return IteratedTorusDesc::make(s);
  }();
  const auto& st = checked.stages;
  const std::size_t n = st.size();
  std::size_t m = n;  // 1-based index of the first even q before the core
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (st[i].q % 2 == 0) {
      m = i + 1;
      break;
    }
  std::vector<IntPoly2> pieces;
  long mult = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 <= m) {
      for (const auto& f : F_factors(st[i].p, st[i].q)) pieces.push_back(substitute_x_power(f, mult));
    } else {
      pieces.push_back(substitute_x_power(normalize(G_poly(st[i].p, st[i].q)), mult));
    }
    mult = checked_mul(mult, checked_mul(st[i].q, st[i].q));
  }
  return APoly::from_factors(pieces);
}

APoly iterated_by_recursion(const IteratedTorusDesc& d) {
  const auto& st = d.stages;
  APoly a = torus_apoly(TorusParams::make(st.back().p, st.back().q));
  for (std::size_t k = st.size() - 1; k-- > 0;) a = cable_apoly(a, st[k]);
  return a;
}

bool pattern_factor_check(const IntPoly2& a_p, const IntPoly2& a_k) { return divides(a_p, a_k).has_value(); }

}  // namespace knotpoly
