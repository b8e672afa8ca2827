#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace knotpoly {

using Integer = mpz_class;
using Rational = mpq_class;

// Sparse univariate polynomial over Z, exponent -> coefficient.
class UPoly {
 public:
  using Terms = std::map<long, Integer>;

  UPoly() = default;
  explicit UPoly(Terms terms);
  static UPoly constant(const Integer& c);
  static UPoly monomial(const Integer& c, long e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  long degree() const;  // -1 for zero
  long low_degree() const;
  Integer lc() const;
  Integer coeff(long e) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Integer& c, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  Integer content() const;
  UPoly primitive() const;  // content removed, lc > 0
  UPoly scale_exponents(long w) const;
  UPoly shift(long k) const;  // multiply by t^k, k may be negative if no underflow
  UPoly derivative() const;
  Integer evaluate(const Integer& t) const;

  // Exact quotient a/b if b divides a over Z, else nullopt.
  static std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b);
  // lc(b)^(deg a - deg b + 1) * a mod b.
  static UPoly pseudo_remainder(const UPoly& a, const UPoly& b);
  // Primitive gcd over Z[t] times gcd of contents; lc > 0. gcd(0,0) = 0.
  static UPoly gcd(const UPoly& a, const UPoly& b);

 private:
  Terms terms_;
};

struct Monomial {
  long i = 0;  // x exponent
  long j = 0;  // y exponent
  auto operator<=>(const Monomial&) const = default;
};

// Sparse bivariate polynomial over Z in x, y.
class IntPoly2 {
 public:
  using Terms = std::map<Monomial, Integer>;

  IntPoly2() = default;
  explicit IntPoly2(Terms terms);
  static IntPoly2 constant(const Integer& c);
  static IntPoly2 monomial(const Integer& c, long i, long j);
  static IntPoly2 x() { return monomial(1, 1, 0); }
  static IntPoly2 y() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  long degree_x() const;  // -1 for zero
  long degree_y() const;
  Integer coeff(long i, long j) const;
  Integer content() const;

  IntPoly2 operator-() const;
  friend IntPoly2 operator+(const IntPoly2& a, const IntPoly2& b);
  friend IntPoly2 operator-(const IntPoly2& a, const IntPoly2& b);
  friend IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b);
  friend IntPoly2 operator*(const Integer& c, const IntPoly2& a);
  friend bool operator==(const IntPoly2& a, const IntPoly2& b) = default;

  IntPoly2 derivative_x() const;
  IntPoly2 derivative_y() const;

  // Coefficient of y^j as a polynomial in x.
  UPoly y_coeff(long j) const;
  // Inverse of y_coeff: sum_j c[j](x) y^j.
  static IntPoly2 from_y_coeffs(const std::vector<UPoly>& c);

  // a / b when b divides a in Z[x,y].
  static std::optional<IntPoly2> divide_exact(const IntPoly2& a, const IntPoly2& b);

 private:
  Terms terms_;
};

// Polynomial in the elimination variable ybar with IntPoly2 coefficients.
class ElimPoly {
 public:
  explicit ElimPoly(std::vector<IntPoly2> coeffs);
  const std::vector<IntPoly2>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const IntPoly2& operator[](std::size_t k) const { return coeffs_[k]; }

 private:
  std::vector<IntPoly2> coeffs_;
};

IntPoly2 add(const IntPoly2& a, const IntPoly2& b);
IntPoly2 mul(const IntPoly2& a, const IntPoly2& b);
IntPoly2 normalize(const IntPoly2& p);

// Witness q with pp(b) = pp(a) * q, i.e. a | b over Q[x,y].
std::optional<IntPoly2> divides(const IntPoly2& a, const IntPoly2& b);

// Sylvester determinant of f and g in ybar.
IntPoly2 resultant_elim(const ElimPoly& f, const ElimPoly& g);
// Same determinant with explicit Sylvester layout, exposed for tests.
std::vector<std::vector<IntPoly2>> sylvester_matrix(const ElimPoly& f, const ElimPoly& g);
IntPoly2 bareiss_determinant(std::vector<std::vector<IntPoly2>> m);

IntPoly2 gcd(const IntPoly2& a, const IntPoly2& b);
IntPoly2 squarefree(const IntPoly2& p);
IntPoly2 substitute_x_power(const IntPoly2& p, long w);
bool is_balanced(const IntPoly2& p);
Rational evaluate(const IntPoly2& p, const Rational& x0, const Rational& y0);

// f(x, ybar) with y renamed to ybar.
ElimPoly as_elim_in_y(const IntPoly2& f);

}  // namespace knotpoly
