#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "knotpoly/alex.hpp"
#include "knotpoly/apoly.hpp"

namespace knotpoly {

struct InvariantPair {
  IntPoly2 apoly;
  IntPoly1 alex;
  static InvariantPair make(const IntPoly2& apoly, const IntPoly1& alex);  // normalizes and checks
};

InvariantPair torus_invariants(const TorusParams& t);

std::optional<TorusParams> identify_torus(const InvariantPair& inv);
// All (p,q) matching inv in the search space; identify_torus requires this to have at most one entry.
std::vector<TorusParams> torus_matches(const InvariantPair& inv);

// A(r,s) | A(p,q) and (t^|r|-1)(t^s-1) | (t^|p|-1)(t^q-1).
bool torus_pair_divisibility(long r, long s, long p, long q);

// Valid torus pairs with |p|q <= bound, ordered.
std::vector<TorusParams> torus_pairs(long bound);

std::vector<std::pair<TorusParams, TorusParams>> apoly_coincidences(long bound);

enum class Verdict { not_hyperbolic, inconclusive };
Verdict hyperbolicity_screen(const std::vector<IntPoly2>& factors);

}  // namespace knotpoly
