#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotpoly {

using i64 = std::int64_t;

// Eudave-Munoz knot k(l,m,n,p). Parameters are limited to |.| <= kEMParamLimit so that
// every derived quantity fits in 64 bits.
inline constexpr i64 kEMParamLimit = 1000;

struct EMParams {
  i64 l = 0, m = 0, n = 0, p = 0;
  static EMParams validate(i64 l, i64 m, i64 n, i64 p);  // throws PreconditionError naming the clause
  auto operator<=>(const EMParams&) const = default;
  std::string str() const;
};

// Name of the first violated validity clause, if any.
std::optional<std::string> em_violation(i64 l, i64 m, i64 n, i64 p);
inline bool em_valid(i64 l, i64 m, i64 n, i64 p) { return !em_violation(l, m, n, p); }

// Value twice/2; toroidal slopes always have odd twice.
struct HalfInt {
  i64 twice = 0;
  auto operator<=>(const HalfInt&) const = default;
  std::string str() const;
};

struct SDPair {
  i64 s = 0;
  i64 d = 0;
  i64 g = 0;
  HalfInt r;
  int alpha = 0;  // 1 if l,m > 0; 2 if l,m < 0; 0 if lm < 0
};

HalfInt toroidal_slope(const EMParams& k);
i64 genus(const EMParams& k);

// Genus table for l > 0, covering both k(l,m,n,0) and k(l,m,0,p); n = p = 0 uses the p rows.
i64 genus_positive_l(i64 l, i64 m, i64 n, i64 p);
// Closed genus formula for k(l,m,0,p), p <= 0, any sign of l.
i64 genus_0p(i64 l, i64 m, i64 p);

struct DuplicateEntry {
  EMParams k;
  bool mirror = false;  // names the mirror image rather than the same knot
  auto operator<=>(const DuplicateEntry&) const = default;
};

// Same knot under the duplication clauses, plus mirror partners tagged as such.
std::vector<DuplicateEntry> duplicates(const EMParams& k);
std::vector<EMParams> same_knot(const EMParams& k);  // non-mirror entries only
std::vector<EMParams> mirror_partners(const EMParams& k);

SDPair sd_coordinates(const EMParams& k);
// d from the closed form, used as a cross-check on sd_coordinates.
i64 d_closed_form(i64 l, i64 m, i64 p);

struct LMPair {
  i64 l = 0, m = 0;
  auto operator<=>(const LMPair&) const = default;
};

// Candidates (l,m) of k(l,m,0,0) with the given (s,d); at most one per sign case.
std::vector<LMPair> invert_sd(i64 s, i64 d);

struct Collision {
  i64 l, m, l_star, m_star;
  auto operator<=>(const Collision&) const = default;
};

// Pairs k(l,m,0,0), k(l*,m*,0,0) with lm > 0, l*m* > 0, l > 0 > l* and equal (g,r).
// With negative_first the roles swap (l < 0 < l*).
std::vector<Collision> collision_search(i64 bound_l, i64 bound_m, bool negative_first = false,
                                        unsigned threads = 0);

struct LStarReport {
  bool unique = true;
  std::vector<EMParams> witnesses;   // same (g,r), not the target or its duplicates
  std::size_t candidates_checked = 0;
  std::size_t negative_p_candidates = 0;
  std::size_t shortcut_excluded = 0;  // p < 0 candidates excluded by the residue arguments
  bool shortcut_agrees = true;        // every p < 0 candidate excluded by a residue argument had no collision
};

// Targets k(l*,-1,0,0) against k(l,m,0,p), -bound_p <= p <= 0, (1-2p) | l.
// Without the divisibility filter, p ranges over [-bound_p, bound_p] and every l is tried.
LStarReport verify_l_star_uniqueness(i64 l_star, i64 bound_l, i64 bound_m, i64 bound_p, bool divisibility_filter = true,
                                     unsigned threads = 0);

// Residue/inequality argument ruling out a (g,r) match between k(l,m,0,p), p < 0,
// (1-2p) | l, and any k(l*,-1,0,0). Returns the argument name, or nullopt if none applies.
std::optional<std::string> p_negative_shortcut(i64 l, i64 m, i64 p);

}  // namespace knotpoly
