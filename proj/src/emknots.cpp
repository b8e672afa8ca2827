#include "knotpoly/emknots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <set>
#include <thread>
#include <unordered_map>

#include "knotpoly/errors.hpp"

namespace knotpoly {

namespace {

i64 isqrt_exact(i64 v) {
  if (v < 0) return -1;
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

i64 half(i64 v) {
  if (v % 2 != 0) throw InvariantError("odd value in a genus half-sum");
  return v / 2;
}

i64 mod(i64 a, i64 b) { return ((a % b) + b) % b; }

unsigned pick_threads(unsigned requested, std::size_t work) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

// Runs fn(shard, shards) on each shard and concatenates the outputs.
template <class T, class Fn>
std::vector<T> run_sharded(unsigned shards, Fn fn) {
  if (shards <= 1) return fn(0u, 1u);
  std::vector<std::future<std::vector<T>>> parts;
  for (unsigned s = 0; s < shards; ++s) parts.push_back(std::async(std::launch::async, fn, s, shards));
  std::vector<T> out;
  for (auto& f : parts) {
    auto v = f.get();
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

struct GRKey {
  i64 g, r2;
  bool operator==(const GRKey&) const = default;
};

struct GRHash {
  std::size_t operator()(const GRKey& k) const {
    return std::hash<i64>()(k.g) * 1000003u ^ std::hash<i64>()(k.r2);
  }
};

}  // namespace

std::string EMParams::str() const {
  return "k(" + std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + ")";
}

std::string HalfInt::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::optional<std::string> em_violation(i64 l, i64 m, i64 n, i64 p) {
  for (i64 v : {l, m, n, p})
    if (std::abs(v) > kEMParamLimit) return "parameter range |l|,|m|,|n|,|p| <= " + std::to_string(kEMParamLimit);
  if (n != 0 && p != 0) return "one of n, p is zero";
  if (p == 0) {
    if (l == 0 || l == 1 || l == -1) return "p=0: l != 0, +-1";
    if (m == 0) return "p=0: m != 0";
    if ((l == 2 && m == 1) || (l == -2 && m == -1)) return "p=0: (l,m) != (2,1), (-2,-1)";
    if ((m == 1 && n == 0) || (m == -1 && n == 1)) return "p=0: (m,n) != (1,0), (-1,1)";
  }
  if (n == 0) {
    if (l == 0 || l == 1 || l == -1) return "n=0: l != 0, +-1";
    if (m == 0 || m == 1) return "n=0: m != 0, 1";
    if ((l == -2 && m == -1 && p == 0) || (l == 2 && m == 2 && p == 1)) return "n=0: (l,m,p) != (-2,-1,0), (2,2,1)";
  }
  return std::nullopt;
}

EMParams EMParams::validate(i64 l, i64 m, i64 n, i64 p) {
  if (auto v = em_violation(l, m, n, p)) {
    EMParams k{l, m, n, p};
    throw PreconditionError(*v, k.str() + " is not a valid parameter tuple");
  }
  return {l, m, n, p};
}

HalfInt toroidal_slope(const EMParams& k) {
  const auto [l, m, n, p] = k;
  i64 base = l * (2 * m - 1) * (1 - l * m);
  if (p == 0) base += n * (2 * l * m - 1) * (2 * l * m - 1);
  else base += p * (2 * m * l - l - 1) * (2 * m * l - l - 1);
  return {2 * base - 1};
}

i64 genus_positive_l(i64 l, i64 m, i64 n, i64 p) {
  if (l <= 0) throw PreconditionError("l > 0", "genus table needs l > 0");
  if (p == 0 && n != 0) {
    const i64 N = m > 0 ? 2 * m * l - 1 : -2 * m * l + 1;
    i64 b;
    if (m > 0 && n <= 0) b = m * m * l * l - half(m * l * (l + 5)) + l + 1;
    else if (m > 0) b = -m * m * l * l + half(m * l * (l + 1)) - l + 1;
    else if (n <= 0) b = m * m * l * l - half(m * l * (l - 1));
    else b = -m * m * l * l + half(m * l * (l + 3));
    return std::abs(n) * half(N * (N - 1)) + b;
  }
  const i64 N = m > 0 ? 2 * m * l - l - 1 : -2 * m * l + l + 1;
  i64 b;
  if (m > 0 && p <= 0) b = m * m * l * l - half(m * l * (l + 5)) + l + 1;
  else if (m > 0) b = -m * m * l * l + half(m * l * (l + 1)) + 1;
  else if (p <= 0) b = m * m * l * l - half(m * l * (l - 1));
  else b = -m * m * l * l + half(m * l * (l + 3)) - l;
  return std::abs(p) * half(N * (N - 1)) + b;
}

i64 genus_0p(i64 l, i64 m, i64 p) {
  if (p > 0) throw PreconditionError("p <= 0", "closed genus formula covers p <= 0 only");
  const i64 a = 2 * m * l - l - 1;
  const i64 b = -2 * m * l + l + 1;
  if (l > 0 && m > 0) return -p * half(a * (a - 1)) + m * m * l * l - half(m * l * (l + 5)) + l + 1;
  if (l > 0 && m < 0) return -p * half(b * (b - 1)) + m * m * l * l - half(m * l * (l - 1));
  if (l < 0 && m > 0) return -p * half(b * (b - 1)) + m * m * l * l - half(m * l * (l - 1));
  return -p * half(a * (a - 1)) + m * m * l * l - half(m * l * (l + 5)) + l + 2;
}

i64 genus(const EMParams& k) {
  const auto [l, m, n, p] = k;
  if (l > 0) return genus_positive_l(l, m, n, p);
  if (n == 0 && p <= 0) return genus_0p(l, m, p);
  if (n == 0) return genus_positive_l(-l, 1 - m, 0, 1 - p);
  return genus_positive_l(-l, -m, 1 - n, 0);
}

std::vector<EMParams> same_knot(const EMParams& k) {
  std::set<EMParams> seen{k};
  std::vector<EMParams> todo{k};
  auto push = [&](i64 l, i64 m, i64 n, i64 p) {
    if (!em_valid(l, m, n, p)) return;
    EMParams e{l, m, n, p};
    if (seen.insert(e).second) todo.push_back(e);
  };
  while (!todo.empty()) {
    const auto [l, m, n, p] = todo.back();
    todo.pop_back();
    if (p == 0 && (m == 1 || m == -1)) push(-l + m, m, n, 0);
    if (p == 0 && ((l == 2 && m == -1) || (l == -3 && m == -1))) {
      push(2, -1, n, 0);
      push(-3, -1, n, 0);
      push(2, 2, 0, n);
    }
    if (n == 0 && l == 2 && m == 2) {
      push(2, -1, p, 0);
      push(-3, -1, p, 0);
    }
  }
  seen.erase(k);
  return {seen.begin(), seen.end()};
}

std::vector<EMParams> mirror_partners(const EMParams& k) {
  std::set<EMParams> out;
  if (k.p == 0) out.insert({-k.l, -k.m, 1 - k.n, 0});
  if (k.n == 0) out.insert({-k.l, 1 - k.m, 0, 1 - k.p});
  std::vector<EMParams> v;
  for (const auto& e : out)
    if (em_valid(e.l, e.m, e.n, e.p)) v.push_back(e);
  return v;
}

std::vector<DuplicateEntry> duplicates(const EMParams& k) {
  std::vector<DuplicateEntry> out;
  for (const auto& e : same_knot(k)) out.push_back({e, false});
  for (const auto& e : mirror_partners(k)) out.push_back({e, true});
  return out;
}

i64 d_closed_form(i64 l, i64 m, i64 p) {
  if (l * m > 0) {
    const i64 alpha = l > 0 ? 1 : 2;
    return -p * (2 * m * l - l - 1) + 3 * m * l - l - 2 * alpha;
  }
  return -p * (-2 * m * l + l + 1) - 3 * m * l + l;
}

SDPair sd_coordinates(const EMParams& k) {
  if (k.n != 0) throw PreconditionError("n = 0", "(s,d) coordinates are defined for k(l,m,0,p)");
  if (k.p > 0) throw PreconditionError("p <= 0", "(s,d) coordinates need p <= 0");
  EMParams::validate(k.l, k.m, k.n, k.p);
  SDPair out;
  out.r = toroidal_slope(k);
  out.s = (out.r.twice + 1) / 2;
  out.g = genus(k);
  out.d = -out.s - 2 * out.g;
  out.alpha = k.l * k.m > 0 ? (k.l > 0 ? 1 : 2) : 0;
  if (out.d != d_closed_form(k.l, k.m, k.p)) throw InvariantError("d disagrees with its closed form for " + k.str());
  return out;
}

std::vector<LMPair> invert_sd(i64 s, i64 d) {
  constexpr i64 kLimit = 1'000'000'000;
  if (std::abs(s) > kLimit || std::abs(d) > kLimit) throw PreconditionError("|s|,|d| <= 10^9", "coordinates out of range");
  std::set<LMPair> out;
  auto accept = [&](i64 l, i64 m) {
    if (!em_valid(l, m, 0, 0)) return;
    const SDPair f = sd_coordinates({l, m, 0, 0});
    if (f.s == s && f.d == d) out.insert({l, m});
  };
  for (int alpha : {1, 2}) {
    const i64 root = isqrt_exact((d + 2 * alpha - 1) * (d + 2 * alpha - 1) + 4 * s);
    if (root < 0) continue;
    for (i64 q : {root, -root}) {
      const i64 num = d + 2 * alpha + 3 - 3 * q;
      if (num % 2 != 0) continue;
      const i64 l = num / 2;
      if (l == 0 || (d + 2 * alpha) % l != 0) continue;
      const i64 t = (d + 2 * alpha) / l + 1;
      if (t % 3 != 0) continue;
      const i64 m = t / 3;
      const bool sign_ok = alpha == 1 ? (l > 0 && m > 0) : (l < 0 && m < 0);
      if (sign_ok) accept(l, m);
    }
  }
  const i64 root = isqrt_exact((d + 1) * (d + 1) + 4 * s);
  if (root >= 0) {
    for (i64 q : {root, -root}) {
      const i64 num = -d + 3 + 3 * q;
      if (num % 2 != 0) continue;
      const i64 l = num / 2;
      if (l == 0 || d % l != 0) continue;
      const i64 t = 1 - d / l;
      if (t % 3 != 0) continue;
      const i64 m = t / 3;
      if (l * m < 0) accept(l, m);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Collision> collision_search(i64 bound_l, i64 bound_m, bool negative_first, unsigned threads) {
  if (bound_l < 1 || bound_m < 1) throw PreconditionError("positive bounds", "bounds must be positive");
  if (bound_l > kEMParamLimit || bound_m > kEMParamLimit) throw PreconditionError("parameter range", "bounds too large");
  // Index the l < 0 side by (g, 2r).
  std::unordered_map<GRKey, std::vector<LMPair>, GRHash> negative;
  for (i64 l = -bound_l; l < 0; ++l)
    for (i64 m = -bound_m; m <= bound_m; ++m) {
      if (l * m <= 0 || !em_valid(l, m, 0, 0)) continue;
      const EMParams k{l, m, 0, 0};
      negative[{genus(k), toroidal_slope(k).twice}].push_back({l, m});
    }
  const auto shard = [&](unsigned s, unsigned shards) {
    std::vector<Collision> found;
    for (i64 l = 1 + static_cast<i64>(s); l <= bound_l; l += shards)
      for (i64 m = 1; m <= bound_m; ++m) {
        if (!em_valid(l, m, 0, 0)) continue;
        const EMParams k{l, m, 0, 0};
        auto it = negative.find({genus(k), toroidal_slope(k).twice});
        if (it == negative.end()) continue;
        for (const auto& o : it->second) {
          if (negative_first) found.push_back({o.l, o.m, l, m});
          else found.push_back({l, m, o.l, o.m});
        }
      }
    return found;
  };
  auto out = run_sharded<Collision>(pick_threads(threads, static_cast<std::size_t>(bound_l)), shard);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> p_negative_shortcut(i64 l, i64 m, i64 p) {
  if (p >= 0) return std::nullopt;
  if (p <= -5) return "inequality: -p <= 4";
  const i64 s = (toroidal_slope({l, m, 0, p}).twice + 1) / 2;
  if ((p == -1 || p == -4) && mod(s, 3) != 0) return "3 does not divide s";
  if (p == -3 && mod(-s, 7) == 3) return "5 is not a square mod 7";
  if (p == -2 && mod(-s, 5) == 2) return "2 is not a square mod 5";
  return std::nullopt;
}

LStarReport verify_l_star_uniqueness(i64 l_star, i64 bound_l, i64 bound_m, i64 bound_p, bool divisibility_filter,
                                     unsigned threads) {
  if (l_star < 2) throw PreconditionError("l* >= 2", "got l* = " + std::to_string(l_star));
  if (bound_p < 0) throw PreconditionError("bound_p >= 0", "negative p bound");
  const EMParams target = EMParams::validate(l_star, -1, 0, 0);
  const i64 tg = genus(target);
  const i64 tr = toroidal_slope(target).twice;
  std::set<EMParams> allowed{target};
  for (const auto& e : same_knot(target)) allowed.insert(e);
  const i64 p_hi = divisibility_filter ? 0 : bound_p;

  struct Part {
    std::vector<EMParams> witnesses;
    std::size_t checked = 0, negatives = 0, excluded = 0;
    bool agrees = true;
  };
  const auto shard = [&](unsigned s, unsigned shards) {
    Part part;
    i64 idx = 0;
    for (i64 p = -bound_p; p <= p_hi; ++p)
      for (i64 l = -bound_l; l <= bound_l; ++l) {
        if (divisibility_filter && (l % (1 - 2 * p)) != 0) continue;
        if (idx++ % shards != s) continue;
        for (i64 m = -bound_m; m <= bound_m; ++m) {
          if (!em_valid(l, m, 0, p)) continue;
          ++part.checked;
          const EMParams k{l, m, 0, p};
          const bool hit = genus(k) == tg && toroidal_slope(k).twice == tr;
          if (p < 0 && divisibility_filter) {
            ++part.negatives;
            if (p_negative_shortcut(l, m, p)) {
              ++part.excluded;
              if (hit) part.agrees = false;
            }
          }
          if (hit && !allowed.count(k)) part.witnesses.push_back(k);
        }
      }
    return std::vector<Part>{part};
  };
  const auto parts = run_sharded<Part>(pick_threads(threads, static_cast<std::size_t>(2 * bound_l + 1)), shard);
  LStarReport rep;
  for (const auto& part : parts) {
    rep.witnesses.insert(rep.witnesses.end(), part.witnesses.begin(), part.witnesses.end());
    rep.candidates_checked += part.checked;
    rep.negative_p_candidates += part.negatives;
    rep.shortcut_excluded += part.excluded;
    rep.shortcut_agrees = rep.shortcut_agrees && part.agrees;
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end());
  rep.unique = rep.witnesses.empty();
  return rep;
}

}  // namespace knotpoly
