#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace knotpoly {

// [b1, ..., bk] with value b1 - 1/(b2 - 1/(... - 1/bk)).
struct ContFrac {
  std::vector<std::int64_t> coefficients;
  std::string str() const;
  friend bool operator==(const ContFrac&, const ContFrac&) = default;
};

ContFrac cont_frac_expand(std::int64_t a1, std::int64_t a2);
// Reduced (num, den) with den > 0.
std::pair<std::int64_t, std::int64_t> cont_frac_value(const ContFrac& cf);
bool satisfies_sign_pattern(const ContFrac& cf);

// Index sets are 1-based positions into the coefficient list, each within {3..k}.
struct EssSolution {
  std::vector<int> I;
  std::vector<int> J;
  auto operator<=>(const EssSolution&) const = default;
};

std::vector<EssSolution> ess_surface_solutions(const ContFrac& cf);
bool is_small_candidate(std::int64_t a1, std::int64_t a2);

}  // namespace knotpoly
