#include "knotpoly/alex.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "knotpoly/errors.hpp"

namespace knotpoly {

namespace {

UPoly t_minus_one(long n) { return UPoly::monomial(1, n) - UPoly::constant(1); }

}  // namespace

IntPoly1::IntPoly1(const UPoly& p) {
  if (p.is_zero()) throw PreconditionError("nonzero input", "Alexander polynomial cannot be zero");
  p_ = p.shift(-p.low_degree());
  if (p_.lc() < 0) p_ = -p_;
}

IntPoly1 torus_alexander(long p, long q) {
  const long ap = std::abs(p);
  if (q < 2) throw PreconditionError("q >= 2", "got q = " + std::to_string(q));
  if (ap < 2) throw PreconditionError("|p| >= 2", "got p = " + std::to_string(p));
  if (std::gcd(ap, q) != 1) throw PreconditionError("gcd(|p|,q) = 1", "pair is not coprime");
  const UPoly num = t_minus_one(ap * q) * t_minus_one(1);
  const UPoly den = t_minus_one(ap) * t_minus_one(q);
  auto quo = UPoly::divide_exact(num, den);
  if (!quo) throw InvariantError("torus Alexander quotient is not exact");
  return IntPoly1(*quo);
}

IntPoly1 satellite_alexander(const IntPoly1& d_c, long w, const IntPoly1& d_p) {
  if (w < 1) throw PreconditionError("w >= 1", "winding number must be positive");
  return IntPoly1(d_c.poly().scale_exponents(w) * d_p.poly());
}

long fibered_genus(const IntPoly1& d) {
  if (d.degree() % 2 != 0) throw PreconditionError("even degree", "odd-degree polynomial is not an Alexander polynomial");
  return d.degree() / 2;
}

bool cyclotomic_divides(long p, long q, long r, long s) {
  if (p == 0 || q == 0 || r == 0 || s == 0) throw PreconditionError("nonzero arguments", "exponents must be nonzero");
  const UPoly a = t_minus_one(std::abs(p)) * t_minus_one(std::abs(q));
  const UPoly b = t_minus_one(std::abs(r)) * t_minus_one(std::abs(s));
  return UPoly::divide_exact(b, a).has_value();
}

bool alex_divides(const IntPoly1& a, const IntPoly1& b) {
  return UPoly::divide_exact(b.poly(), a.poly()).has_value();
}

}  // namespace knotpoly
