#include "knotpoly/polyalg.hpp"

#include <algorithm>
#include <utility>

#include "knotpoly/errors.hpp"

namespace knotpoly {

namespace {

template <class Map>
void drop_zeros(Map& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
}

// r += c * x^s * b for univariate maps.
void axpy(UPoly::Terms& r, const Integer& c, long s, const UPoly::Terms& b) {
  for (const auto& [e, v] : b) {
    auto [it, fresh] = r.try_emplace(e + s, 0);
    it->second += c * v;
    if (it->second == 0) r.erase(it);
  }
}

void axpy(IntPoly2::Terms& r, const Integer& c, Monomial s, const IntPoly2::Terms& b) {
  for (const auto& [m, v] : b) {
    auto [it, fresh] = r.try_emplace(Monomial{m.i + s.i, m.j + s.j}, 0);
    it->second += c * v;
    if (it->second == 0) r.erase(it);
  }
}

Rational rpow(const Rational& base, long e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

Integer ipow(const Integer& base, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(Terms terms) : terms_(std::move(terms)) { drop_zeros(terms_); }

UPoly UPoly::constant(const Integer& c) { return monomial(c, 0); }

UPoly UPoly::monomial(const Integer& c, long e) {
  UPoly r;
  if (c != 0) r.terms_.emplace(e, c);
  return r;
}

bool UPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

long UPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

long UPoly::low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }

Integer UPoly::lc() const { return terms_.empty() ? Integer(0) : terms_.rbegin()->second; }

Integer UPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  axpy(r.terms_, 1, 0, b.terms_);
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  axpy(r.terms_, -1, 0, b.terms_);
  return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  for (const auto& [e, c] : a.terms_) axpy(r.terms_, c, e, b.terms_);
  return r;
}

UPoly operator*(const Integer& c, const UPoly& a) {
  if (c == 0) return {};
  UPoly r = a;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Integer UPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Integer g = content();
  if (lc() < 0) g = -g;
  UPoly r = *this;
  for (auto& [e, c] : r.terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

UPoly UPoly::scale_exponents(long w) const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e * w, c);
  return UPoly(std::move(t));
}

UPoly UPoly::shift(long k) const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e + k, c);
  return UPoly(std::move(t));
}

UPoly UPoly::derivative() const {
  Terms t;
  for (const auto& [e, c] : terms_)
    if (e != 0) t.emplace(e - 1, c * e);
  return UPoly(std::move(t));
}

Integer UPoly::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (const auto& [e, c] : terms_) acc += c * ipow(t, e);
  return acc;
}

std::optional<UPoly> UPoly::divide_exact(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw PreconditionError("nonzero divisor", "division by the zero polynomial");
  Terms r = a.terms_;
  Terms q;
  const long db = b.degree();
  const Integer lb = b.lc();
  while (!r.empty()) {
    auto [e, c] = *r.rbegin();
    if (e < db || !mpz_divisible_p(c.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), c.get_mpz_t(), lb.get_mpz_t());
    q.emplace(e - db, t);
    axpy(r, -t, e - db, b.terms_);
  }
  return UPoly(std::move(q));
}

UPoly UPoly::pseudo_remainder(const UPoly& a, const UPoly& b) {
  const long db = b.degree();
  if (db < 0) throw PreconditionError("nonzero divisor", "pseudo-remainder by zero");
  long steps = std::max<long>(a.degree() - db + 1, 0);
  const Integer lb = b.lc();
  Terms r = a.terms_;
  while (!r.empty() && r.rbegin()->first >= db) {
    auto [e, c] = *r.rbegin();
    for (auto& [k, v] : r) v *= lb;
    axpy(r, -c, e - db, b.terms_);
    --steps;
  }
  UPoly out(std::move(r));
  return steps > 0 ? ipow(lb, steps) * out : out;
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.content() * b.primitive();
  if (b.is_zero()) return a.content() * a.primitive();
  Integer c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  UPoly u = a.primitive(), v = b.primitive();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.degree() == 0) return UPoly::constant(c);
    UPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive();
  }
  return c * u.primitive();
}

// ---------------------------------------------------------------- IntPoly2

IntPoly2::IntPoly2(Terms terms) : terms_(std::move(terms)) {
  drop_zeros(terms_);
  for (const auto& [m, c] : terms_)
    if (m.i < 0 || m.j < 0) throw InputError("negative exponent in polynomial");
}

IntPoly2 IntPoly2::constant(const Integer& c) { return monomial(c, 0, 0); }

IntPoly2 IntPoly2::monomial(const Integer& c, long i, long j) {
  Terms t;
  t.emplace(Monomial{i, j}, c);
  return IntPoly2(std::move(t));
}

bool IntPoly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

long IntPoly2::degree_x() const { return terms_.empty() ? -1 : terms_.rbegin()->first.i; }

long IntPoly2::degree_y() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.j);
  return d;
}

Integer IntPoly2::coeff(long i, long j) const {
  auto it = terms_.find(Monomial{i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer IntPoly2::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly2 IntPoly2::operator-() const {
  IntPoly2 r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

IntPoly2 operator+(const IntPoly2& a, const IntPoly2& b) {
  IntPoly2 r = a;
  axpy(r.terms_, 1, Monomial{}, b.terms_);
  return r;
}

IntPoly2 operator-(const IntPoly2& a, const IntPoly2& b) {
  IntPoly2 r = a;
  axpy(r.terms_, -1, Monomial{}, b.terms_);
  return r;
}

IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b) {
  const IntPoly2& small = a.size() <= b.size() ? a : b;
  const IntPoly2& big = a.size() <= b.size() ? b : a;
  IntPoly2 r;
  for (const auto& [m, c] : small.terms_) axpy(r.terms_, c, m, big.terms_);
  return r;
}

IntPoly2 operator*(const Integer& c, const IntPoly2& a) {
  if (c == 0) return {};
  IntPoly2 r = a;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

IntPoly2 IntPoly2::derivative_x() const {
  Terms t;
  for (const auto& [m, c] : terms_)
    if (m.i != 0) t.emplace(Monomial{m.i - 1, m.j}, c * m.i);
  return IntPoly2(std::move(t));
}

IntPoly2 IntPoly2::derivative_y() const {
  Terms t;
  for (const auto& [m, c] : terms_)
    if (m.j != 0) t.emplace(Monomial{m.i, m.j - 1}, c * m.j);
  return IntPoly2(std::move(t));
}

UPoly IntPoly2::y_coeff(long j) const {
  UPoly::Terms t;
  for (const auto& [m, c] : terms_)
    if (m.j == j) t.emplace(m.i, c);
  return UPoly(std::move(t));
}

IntPoly2 IntPoly2::from_y_coeffs(const std::vector<UPoly>& c) {
  Terms t;
  for (std::size_t j = 0; j < c.size(); ++j)
    for (const auto& [e, v] : c[j].terms()) t.emplace(Monomial{e, static_cast<long>(j)}, v);
  return IntPoly2(std::move(t));
}

std::optional<IntPoly2> IntPoly2::divide_exact(const IntPoly2& a, const IntPoly2& b) {
  if (b.is_zero()) throw PreconditionError("nonzero divisor", "division by the zero polynomial");
  Terms r = a.terms_;
  Terms q;
  const auto [lm, lb] = *b.terms_.rbegin();
  while (!r.empty()) {
    auto [m, c] = *r.rbegin();
    if (m.i < lm.i || m.j < lm.j || !mpz_divisible_p(c.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), c.get_mpz_t(), lb.get_mpz_t());
    Monomial s{m.i - lm.i, m.j - lm.j};
    q.emplace(s, t);
    axpy(r, -t, s, b.terms_);
  }
  return IntPoly2(std::move(q));
}

// ---------------------------------------------------------------- ElimPoly

ElimPoly::ElimPoly(std::vector<IntPoly2> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) throw PreconditionError("nonzero ElimPoly", "all coefficients are zero");
}

ElimPoly as_elim_in_y(const IntPoly2& f) {
  std::vector<IntPoly2> c(static_cast<std::size_t>(std::max<long>(f.degree_y() + 1, 0)));
  for (const auto& [m, v] : f.terms()) c[static_cast<std::size_t>(m.j)] = c[static_cast<std::size_t>(m.j)] + IntPoly2::monomial(v, m.i, 0);
  return ElimPoly(std::move(c));
}

// ---------------------------------------------------------------- operations

IntPoly2 add(const IntPoly2& a, const IntPoly2& b) { return a + b; }
IntPoly2 mul(const IntPoly2& a, const IntPoly2& b) { return a * b; }

IntPoly2 normalize(const IntPoly2& p) {
  if (p.is_zero()) throw PreconditionError("nonzero input", "cannot normalize the zero polynomial");
  Integer g = p.content();
  if (p.terms().rbegin()->second < 0) g = -g;
  if (g == 1) return p;
  IntPoly2::Terms t;
  for (const auto& [m, c] : p.terms()) {
    Integer v;
    mpz_divexact(v.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    t.emplace(m, std::move(v));
  }
  return IntPoly2(std::move(t));
}

std::optional<IntPoly2> divides(const IntPoly2& a, const IntPoly2& b) {
  if (a.is_zero()) throw PreconditionError("nonzero divisor", "a must be nonzero");
  if (b.is_zero()) return IntPoly2{};
  return IntPoly2::divide_exact(normalize(b), normalize(a));
}

std::vector<std::vector<IntPoly2>> sylvester_matrix(const ElimPoly& f, const ElimPoly& g) {
  const long m = f.degree(), n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<IntPoly2>> s(size, std::vector<IntPoly2>(size));
  for (long r = 0; r < n; ++r)
    for (long k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f[static_cast<std::size_t>(m - k)];
  for (long r = 0; r < m; ++r)
    for (long k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g[static_cast<std::size_t>(n - k)];
  return s;
}

IntPoly2 bareiss_determinant(std::vector<std::vector<IntPoly2>> a) {
  const std::size_t n = a.size();
  if (n == 0) return IntPoly2::constant(1);
  bool negate = false;
  IntPoly2 prev = IntPoly2::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPoly2 num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = IntPoly2::divide_exact(num, prev);
        if (!q) throw InvariantError("Bareiss step produced an inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][k] = IntPoly2{};
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

IntPoly2 resultant_elim(const ElimPoly& f, const ElimPoly& g) {
  if (f.degree() < 1 || g.degree() < 1)
    throw PreconditionError("positive ybar degree", "both inputs need positive degree in the elimination variable");
  return bareiss_determinant(sylvester_matrix(f, g));
}

namespace {

// Bivariate polynomial viewed in y with coefficients in Z[x].
using YPoly = std::vector<UPoly>;

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long ydeg(const YPoly& p) { return static_cast<long>(p.size()) - 1; }

YPoly to_ypoly(const IntPoly2& p) {
  YPoly r(static_cast<std::size_t>(std::max<long>(p.degree_y() + 1, 0)));
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = p.y_coeff(static_cast<long>(j));
  return r;
}

UPoly ycontent(const YPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    g = UPoly::gcd(g, c);
    if (g.degree() == 0 && abs(g.lc()) == 1) break;
  }
  return g;
}

YPoly ydivide(const YPoly& p, const UPoly& c) {
  YPoly r;
  r.reserve(p.size());
  for (const auto& v : p) {
    auto q = UPoly::divide_exact(v, c);
    if (!q) throw InvariantError("inexact content division in remainder sequence");
    r.push_back(std::move(*q));
  }
  return r;
}

YPoly yprem(const YPoly& a, const YPoly& b) {
  const long db = ydeg(b);
  const UPoly& lb = b.back();
  YPoly r = a;
  long steps = std::max<long>(ydeg(a) - db + 1, 0);
  while (!r.empty() && ydeg(r) >= db) {
    const UPoly lr = r.back();
    const long s = ydeg(r) - db;
    for (auto& v : r) v = lb * v;
    for (long k = 0; k <= db; ++k) r[static_cast<std::size_t>(k + s)] = r[static_cast<std::size_t>(k + s)] - lr * b[static_cast<std::size_t>(k)];
    trim(r);
    --steps;
  }
  if (steps > 0) {
    UPoly f = UPoly::constant(1);
    for (long k = 0; k < steps; ++k) f = f * lb;
    for (auto& v : r) v = f * v;
  }
  return r;
}

}  // namespace

IntPoly2 gcd(const IntPoly2& a, const IntPoly2& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  YPoly A = to_ypoly(a), B = to_ypoly(b);
  if (ydeg(A) < ydeg(B)) std::swap(A, B);
  const UPoly ca = ycontent(A), cb = ycontent(B);
  const UPoly c = UPoly::gcd(ca, cb);
  A = ydivide(A, ca);
  B = ydivide(B, cb);
  YPoly G;
  while (true) {
    YPoly R = yprem(A, B);
    if (R.empty()) {
      G = B;
      break;
    }
    if (ydeg(R) == 0) {
      G = YPoly{UPoly::constant(1)};
      break;
    }
    A = std::move(B);
    B = ydivide(R, ycontent(R));
  }
  G = ydivide(G, ycontent(G));
  for (auto& v : G) v = c * v;
  return normalize(IntPoly2::from_y_coeffs(G));
}

IntPoly2 squarefree(const IntPoly2& p) {
  if (p.is_zero()) throw PreconditionError("nonzero input", "squarefree part of the zero polynomial");
  IntPoly2 g = gcd(gcd(p, p.derivative_x()), p.derivative_y());
  auto q = IntPoly2::divide_exact(normalize(p), g);
  if (!q) throw InvariantError("gcd with derivatives does not divide the input");
  return normalize(*q);
}

IntPoly2 substitute_x_power(const IntPoly2& p, long w) {
  if (w < 1) throw PreconditionError("w >= 1", "substitution exponent must be positive");
  IntPoly2::Terms t;
  for (const auto& [m, c] : p.terms()) t.emplace(Monomial{m.i * w, m.j}, c);
  return IntPoly2(std::move(t));
}

bool is_balanced(const IntPoly2& p) {
  if (p.is_zero()) throw PreconditionError("nonzero input", "balance of the zero polynomial");
  long imin = p.terms().begin()->first.i, imax = p.degree_x();
  long jmin = p.terms().begin()->first.j, jmax = jmin;
  for (const auto& [m, c] : p.terms()) {
    jmin = std::min(jmin, m.j);
    jmax = std::max(jmax, m.j);
  }
  const long si = imin + imax, sj = jmin + jmax;
  const auto& [m0, c0] = *p.terms().begin();
  const Integer partner0 = p.coeff(si - m0.i, sj - m0.j);
  int eps;
  if (partner0 == c0) eps = 1;
  else if (partner0 == -c0) eps = -1;
  else return false;
  for (const auto& [m, c] : p.terms())
    if (p.coeff(si - m.i, sj - m.j) != eps * c) return false;
  return true;
}

Rational evaluate(const IntPoly2& p, const Rational& x0, const Rational& y0) {
  Rational acc = 0;
  for (const auto& [m, c] : p.terms()) acc += Rational(c) * rpow(x0, m.i) * rpow(y0, m.j);
  return acc;
}

}  // namespace knotpoly
