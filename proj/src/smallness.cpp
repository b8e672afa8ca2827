#include "knotpoly/smallness.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "knotpoly/errors.hpp"

namespace knotpoly {

namespace {

using i64 = std::int64_t;

constexpr int kMaxLength = 32;

int sign(i64 v) { return (v > 0) - (v < 0); }

std::vector<std::uint64_t> non_consecutive_masks(int bits) {
  std::vector<std::uint64_t> out;
  const auto rec = [&](auto&& self, int pos, std::uint64_t mask) -> void {
    if (pos >= bits) {
      out.push_back(mask);
      return;
    }
    self(self, pos + 1, mask);
    self(self, pos + 2, mask | (std::uint64_t{1} << pos));
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<int> indices(std::uint64_t mask) {
  std::vector<int> v;
  for (int b = 0; b < 64; ++b)
    if (mask >> b & 1) v.push_back(b + 3);
  return v;
}

}  // namespace

std::string ContFrac::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(coefficients[k]);
  }
  return s + "]";
}

ContFrac cont_frac_expand(i64 a1, i64 a2) {
  if (a2 <= 0) throw PreconditionError("a2 > 0", "denominator must be positive");
  if (std::gcd(a1, a2) != 1) throw PreconditionError("gcd(|a1|,a2) = 1", "fraction is not reduced");
  ContFrac cf;
  i64 num = a1, den = a2;
  while (true) {
    const i64 b = num / den;  // truncates toward zero
    cf.coefficients.push_back(b);
    if (num == b * den) break;
    i64 nn = den, nd = b * den - num;
    if (nd < 0) {
      nn = -nn;
      nd = -nd;
    }
    num = nn;
    den = nd;
  }
  return cf;
}

std::pair<i64, i64> cont_frac_value(const ContFrac& cf) {
  if (cf.coefficients.empty()) throw PreconditionError("nonempty expansion", "no coefficients");
  i64 num = cf.coefficients.back(), den = 1;
  for (std::size_t k = cf.coefficients.size() - 1; k-- > 0;) {
    if (num == 0) throw PreconditionError("nonzero tail", "expansion divides by zero");
    // b - den/num
    const i64 nn = cf.coefficients[k] * num - den;
    const i64 nd = num;
    const i64 g = std::gcd(nn, nd);
    num = nn / g;
    den = nd / g;
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  return {num, den};
}

bool satisfies_sign_pattern(const ContFrac& cf) {
  const auto& b = cf.coefficients;
  for (std::size_t k = 1; k < b.size(); ++k)
    if (b[k] == 0) return false;
  for (std::size_t k = 0; k + 1 < b.size(); ++k)
    if (b[k] != 0 && sign(b[k]) == sign(b[k + 1])) return false;
  return b.size() < 2 || std::abs(b.back()) >= 2;
}

std::vector<EssSolution> ess_surface_solutions(const ContFrac& cf) {
  const auto& b = cf.coefficients;
  if (b.size() < 2 || b[0] != 0 || b[1] != -1)
    throw PreconditionError("b1 = 0, b2 = -1", "expansion " + cf.str() + " does not start with [0,-1,...]");
  if (static_cast<int>(b.size()) > kMaxLength)
    throw PreconditionError("k <= " + std::to_string(kMaxLength), "expansion too long for exhaustive search");
  const int bits = static_cast<int>(b.size()) - 2;  // bit t stands for index t + 3
  const auto masks = non_consecutive_masks(bits);
  const auto sum = [&](std::uint64_t mask) {
    i64 s = 0;
    for (int t = 0; t < bits; ++t)
      if (mask >> t & 1) s += b[static_cast<std::size_t>(t + 2)];
    return s;
  };
  std::unordered_map<i64, std::vector<std::uint64_t>> by_sum;
  for (auto m : masks) by_sum[sum(m)].push_back(m);
  std::vector<EssSolution> out;
  for (auto j : masks) {
    const bool three_in_j = bits > 0 && (j & 1);
    const i64 target = sum(j) + (three_in_j ? 0 : -1);
    auto it = by_sum.find(target);
    if (it == by_sum.end()) continue;
    for (auto i : it->second) {
      if (three_in_j && (i & 1)) continue;
      out.push_back({indices(i), indices(j)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_small_candidate(i64 a1, i64 a2) { return ess_surface_solutions(cont_frac_expand(a1, a2)).empty(); }

}  // namespace knotpoly
