#pragma once

#include "knotpoly/polyalg.hpp"

namespace knotpoly {

// Alexander polynomial representative: t does not divide it, leading coefficient positive.
class IntPoly1 {
 public:
  IntPoly1() : p_(UPoly::constant(1)) {}
  // Shifts out powers of t and fixes the sign.
  explicit IntPoly1(const UPoly& p);

  const UPoly& poly() const { return p_; }
  long degree() const { return p_.degree(); }
  friend bool operator==(const IntPoly1&, const IntPoly1&) = default;

 private:
  UPoly p_;
};

IntPoly1 torus_alexander(long p, long q);
IntPoly1 satellite_alexander(const IntPoly1& d_c, long w, const IntPoly1& d_p);
long fibered_genus(const IntPoly1& d);
// (t^|p|-1)(t^|q|-1) divides (t^|r|-1)(t^|s|-1).
bool cyclotomic_divides(long p, long q, long r, long s);
// Divisibility up to units +-t^k.
bool alex_divides(const IntPoly1& a, const IntPoly1& b);

}  // namespace knotpoly
