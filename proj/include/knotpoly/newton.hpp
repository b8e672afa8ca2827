#pragma once

#include <set>
#include <string>
#include <vector>

#include "knotpoly/polyalg.hpp"

namespace knotpoly {

struct LatticePoint {
  long i = 0;
  long j = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

// Convex hull vertices, counterclockwise, starting at the lex-smallest point.
struct NewtonPolygon {
  std::vector<LatticePoint> vertices;
  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

// num/den reduced, den >= 0; den == 0 is infinity (num == 1).
struct SlopeValue {
  long num = 0;
  long den = 1;
  static SlopeValue make(long num, long den);
  static SlopeValue infinity() { return {1, 0}; }
  bool is_infinite() const { return den == 0; }
  std::string str() const;
  static SlopeValue parse(const std::string& s);
  auto operator<=>(const SlopeValue&) const = default;
};

struct BoundarySlopes {
  std::set<SlopeValue> finite;
  bool infinity = false;  // a horizontal edge is present
};

NewtonPolygon newton_polygon(const IntPoly2& p);
NewtonPolygon convex_hull(std::vector<LatticePoint> pts);
NewtonPolygon minkowski_sum(const NewtonPolygon& a, const NewtonPolygon& b);
BoundarySlopes boundary_slopes(const IntPoly2& p);
BoundarySlopes boundary_slopes(const NewtonPolygon& pg);

// Lattice lines of class (p,q), i.e. q*i - p*j = const, meeting the polygon, minus one.
long width(const NewtonPolygon& pg, const SlopeValue& s);
long width(const NewtonPolygon& pg, long p, long q);

bool all_factors_binomial(const std::vector<IntPoly2>& factors);

// Support points as '*' (vertices 'o') on a small character grid, j increasing upward.
std::string ascii_sketch(const IntPoly2& p, long max_cols = 72);

}  // namespace knotpoly
