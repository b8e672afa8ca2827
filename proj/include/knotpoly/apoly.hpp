#pragma once

#include <string_view>
#include <vector>

#include "knotpoly/polyalg.hpp"

namespace knotpoly {

// Nontrivial torus knot T(p,q): gcd(|p|,q) = 1, q >= 2, |p| > q.
struct TorusParams {
  long p = 0;
  long q = 0;
  static TorusParams make(long p, long q);
  friend bool operator==(const TorusParams&, const TorusParams&) = default;
  friend auto operator<=>(const TorusParams&, const TorusParams&) = default;
};

// (p,q)-cable pattern. A (-p,-q) cable is the same knot, so q < 0 is flipped to q >= 2.
struct CableParams {
  long p = 0;
  long q = 0;
  static CableParams make(long p, long q);
  friend bool operator==(const CableParams&, const CableParams&) = default;
};

// Stages from the outermost cable inward; the last stage is the torus knot at the core.
struct IteratedTorusDesc {
  std::vector<CableParams> stages;
  static IteratedTorusDesc make(const std::vector<std::pair<long, long>>& stages);
  static IteratedTorusDesc parse(std::string_view text);  // "(p1,q1),(p2,q2),..."
};

// A-polynomial together with a factorization into pairwise coprime squarefree pieces.
struct APoly {
  IntPoly2 poly = IntPoly2::constant(1);
  std::vector<IntPoly2> factors;

  static APoly unknot() { return {}; }
  static APoly from_factors(const std::vector<IntPoly2>& pieces);
  static APoly from_poly(const IntPoly2& p);  // single squarefree piece
  bool is_unknot() const { return factors.empty(); }
};

IntPoly2 F_poly(long p, long q);
IntPoly2 G_poly(long p, long q);
// F_poly split into irreducible binomials.
std::vector<IntPoly2> F_factors(long p, long q);

APoly torus_apoly(const TorusParams& t);

IntPoly2 ext_w(const IntPoly2& f, long w);
APoly ext_w(const APoly& f, long w);

IntPoly2 cable_apoly(const IntPoly2& a_c, const CableParams& c);
APoly cable_apoly(const APoly& a_c, const CableParams& c);

APoly iterated_torus_apoly(const IteratedTorusDesc& d);
// Same knot, built by cabling outward from the core torus knot.
APoly iterated_by_recursion(const IteratedTorusDesc& d);

bool pattern_factor_check(const IntPoly2& a_p, const IntPoly2& a_k);

}  // namespace knotpoly
