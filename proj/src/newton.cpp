#include "knotpoly/newton.hpp"

#include <algorithm>
#include <numeric>

#include "knotpoly/errors.hpp"

namespace knotpoly {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.i - o.i) * (b.j - o.j) - (a.j - o.j) * (b.i - o.i);
}

}  // namespace

SlopeValue SlopeValue::make(long num, long den) {
  if (den == 0) {
    if (num == 0) throw InputError("0/0 is not a slope");
    return infinity();
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string SlopeValue::str() const {
  if (is_infinite()) return "inf";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

SlopeValue SlopeValue::parse(const std::string& s) {
  if (s == "inf" || s == "1/0") return infinity();
  try {
    std::size_t used = 0;
    const long num = std::stol(s, &used);
    if (used == s.size()) return make(num, 1);
    if (s[used] != '/') throw InputError("slope must look like P/Q");
    std::size_t used2 = 0;
    const std::string rest = s.substr(used + 1);
    const long den = std::stol(rest, &used2);
    if (used2 != rest.size()) throw InputError("slope must look like P/Q");
    return make(num, den);
  } catch (const std::logic_error&) {
    throw InputError("slope must look like P/Q, got '" + s + "'");
  }
}

NewtonPolygon convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return {pts};
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t t = pts.size() - 1, lower = k + 1; t-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[t]) <= 0) --k;
    h[k++] = pts[t];
  }
  h.resize(k - 1);
  return {h};
}

NewtonPolygon newton_polygon(const IntPoly2& p) {
  if (p.is_zero()) throw PreconditionError("nonzero input", "Newton polygon of the zero polynomial");
  std::vector<LatticePoint> pts;
  for (const auto& [m, c] : p.terms()) pts.push_back({m.i, m.j});
  return convex_hull(std::move(pts));
}

NewtonPolygon minkowski_sum(const NewtonPolygon& a, const NewtonPolygon& b) {
  std::vector<LatticePoint> pts;
  for (const auto& u : a.vertices)
    for (const auto& v : b.vertices) pts.push_back({u.i + v.i, u.j + v.j});
  return convex_hull(std::move(pts));
}

BoundarySlopes boundary_slopes(const NewtonPolygon& pg) {
  const auto& v = pg.vertices;
  if (v.size() < 2) throw PreconditionError("polygon not a point", "no edges to read slopes from");
  BoundarySlopes out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& a = v[k];
    const auto& b = v[(k + 1) % v.size()];
    const long di = b.i - a.i, dj = b.j - a.j;
    if (dj == 0) out.infinity = true;
    else out.finite.insert(SlopeValue::make(di, dj));
  }
  return out;
}

BoundarySlopes boundary_slopes(const IntPoly2& p) { return boundary_slopes(newton_polygon(p)); }

long width(const NewtonPolygon& pg, long p, long q) {
  if (p == 0 && q == 0) throw PreconditionError("primitive class", "(0,0) is not a slope class");
  if (std::gcd(p, q) != 1) throw PreconditionError("primitive class", "class must be primitive");
  if (pg.vertices.empty()) throw PreconditionError("polygon nonempty", "empty polygon");
  long lo = 0, hi = 0;
  bool first = true;
  for (const auto& v : pg.vertices) {
    const long h = q * v.i - p * v.j;
    if (first || h < lo) lo = h;
    if (first || h > hi) hi = h;
    first = false;
  }
  return hi - lo;
}

long width(const NewtonPolygon& pg, const SlopeValue& s) { return width(pg, s.num, s.den); }

bool all_factors_binomial(const std::vector<IntPoly2>& factors) {
  if (factors.empty()) throw PreconditionError("factors nonempty", "no factors supplied");
  return std::all_of(factors.begin(), factors.end(), [](const IntPoly2& f) {
    if (f.is_zero()) throw PreconditionError("nonzero factor", "zero factor supplied");
    return f.size() == 2;
  });
}

std::string ascii_sketch(const IntPoly2& p, long max_cols) {
  const NewtonPolygon pg = newton_polygon(p);
  const long dx = p.degree_x(), dy = p.degree_y();
  const long step = std::max<long>(1, (dx + max_cols) / max_cols);
  const long cols = dx / step + 1;
  std::vector<std::string> rows(static_cast<std::size_t>(dy + 1), std::string(static_cast<std::size_t>(cols), '.'));
  for (const auto& [m, c] : p.terms()) rows[static_cast<std::size_t>(m.j)][static_cast<std::size_t>(m.i / step)] = '*';
  for (const auto& v : pg.vertices) rows[static_cast<std::size_t>(v.j)][static_cast<std::size_t>(v.i / step)] = 'o';
  std::string out;
  for (long j = dy; j >= 0; --j) out += "j=" + std::to_string(j) + " " + rows[static_cast<std::size_t>(j)] + "\n";
  if (step > 1) out += "(one column per " + std::to_string(step) + " x-exponents)\n";
  return out;
}

}  // namespace knotpoly
