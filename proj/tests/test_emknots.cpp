#include <gtest/gtest.h>

#include <map>
#include <set>

#include "knotpoly/emknots.hpp"
#include "knotpoly/errors.hpp"

using namespace knotpoly;

namespace {

template <class Fn>
void for_valid(i64 bound, Fn fn) {
  for (i64 l = -bound; l <= bound; ++l)
    for (i64 m = -bound; m <= bound; ++m)
      for (i64 t = -bound; t <= bound; ++t) {
        if (em_valid(l, m, t, 0)) fn(EMParams{l, m, t, 0});
        if (t != 0 && em_valid(l, m, 0, t)) fn(EMParams{l, m, 0, t});
      }
}

int sign_case(const LMPair& c) { return c.l > 0 && c.m > 0 ? 0 : (c.l < 0 && c.m < 0 ? 1 : 2); }

}  // namespace

TEST(EM, Validate) {
  EXPECT_NO_THROW(EMParams::validate(2, -1, 0, 0));
  EXPECT_NO_THROW(EMParams::validate(2, 2, 0, 0));
  std::set<std::string> clauses;
  const std::vector<std::array<i64, 4>> bad{{1, 5, 0, 0},  {0, 3, 2, 0},  {3, 0, 2, 0}, {2, 1, 3, 0},  {-2, -1, 3, 0},
                                            {3, 1, 0, 0},  {3, -1, 1, 0}, {3, 1, 0, -2}, {-2, -1, 0, 0}, {2, 2, 0, 1},
                                            {3, 2, 1, -1}, {1, 3, 0, -1}};
  for (const auto& [l, m, n, p] : bad) {
    EXPECT_FALSE(em_valid(l, m, n, p)) << l << m << n << p;
    try {
      EMParams::validate(l, m, n, p);
      ADD_FAILURE() << "accepted " << l << "," << m << "," << n << "," << p;
    } catch (const PreconditionError& e) {
      clauses.insert(e.clause());
    }
  }
  EXPECT_GE(clauses.size(), 8u);
  EXPECT_FALSE(em_valid(2, -1, 0, 2000));
}

TEST(EM, SlopeExamples) {
  EXPECT_EQ(toroidal_slope({2, -1, 0, 0}).twice, -37);
  EXPECT_EQ(toroidal_slope({2, -1, 0, 0}).str(), "-37/2");
  for (i64 ls = 2; ls <= 60; ++ls) EXPECT_EQ(toroidal_slope({ls, -1, 0, 0}).twice, 2 * (-3 * ls * (ls + 1)) - 1);
  EXPECT_EQ(toroidal_slope({3, 2, 1, 0}).twice, -toroidal_slope({-3, -2, 0, 0}).twice);
}

TEST(EM, SlopesAreHalfIntegral) {
  for_valid(8, [](const EMParams& k) { EXPECT_NE(toroidal_slope(k).twice % 2, 0) << k.str(); });
}

TEST(EM, GenusExamples) {
  EXPECT_EQ(genus({2, -1, 0, 0}), 5);
  for (i64 ls = 2; ls <= 60; ++ls) EXPECT_EQ(genus({ls, -1, 0, 0}), ls * ls + ls * (ls - 1) / 2);
  // both table rows at n = p = 0: m^2 l^2 - m l (l+5)/2 + l + 1
  EXPECT_EQ(genus({3, 2, 0, 0}), 16);
  EXPECT_EQ(genus_positive_l(3, 2, 0, 0), genus_0p(3, 2, 0));
}

TEST(EM, GenusRowsAgreeAtZero) {
  // n-rows of the k(l,m,n,0) table evaluated at n = 0 against the k(l,m,0,p) rows at p = 0
  for (i64 l = 2; l <= 20; ++l)
    for (i64 m = -20; m <= 20; ++m) {
      if (!em_valid(l, m, 0, 0)) continue;
      const i64 nrow = m > 0 ? m * m * l * l - m * l * (l + 5) / 2 + l + 1 : m * m * l * l - m * l * (l - 1) / 2;
      EXPECT_EQ(genus({l, m, 0, 0}), nrow) << l << "," << m;
    }
  // l < 0, p <= 0: direct closed form against both mirror reductions
  for (i64 l = -20; l <= -2; ++l)
    for (i64 m = -20; m <= 20; ++m)
      for (i64 p = -4; p <= 0; ++p) {
        if (!em_valid(l, m, 0, p)) continue;
        const i64 direct = genus_0p(l, m, p);
        if (em_valid(-l, 1 - m, 0, 1 - p)) EXPECT_EQ(direct, genus_positive_l(-l, 1 - m, 0, 1 - p));
        if (p == 0 && em_valid(-l, -m, 1, 0)) EXPECT_EQ(direct, genus_positive_l(-l, -m, 1, 0));
      }
}

TEST(EM, GenusNonnegative) {
  for_valid(10, [](const EMParams& k) { EXPECT_GE(genus(k), 0) << k.str(); });
}

TEST(EM, Duplicates) {
  for (i64 n : {0L, -2L, 3L}) {
    const auto s = same_knot({2, -1, n, 0});
    std::set<EMParams> want{{-3, -1, n, 0}};
    if (em_valid(2, 2, 0, n)) want.insert({2, 2, 0, n});
    EXPECT_EQ(std::set<EMParams>(s.begin(), s.end()), want) << n;
  }
  EXPECT_EQ(same_knot({5, 1, 2, 0}), (std::vector<EMParams>{{-4, 1, 2, 0}}));
  EXPECT_TRUE(same_knot({5, 3, 2, 0}).empty());
  const auto d = duplicates({5, 3, 2, 0});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_TRUE(d.front().mirror);
  EXPECT_EQ(d.front().k, (EMParams{-5, -3, -1, 0}));
}

TEST(EM, MirrorAntisymmetry) {
  std::size_t pairs = 0;
  for_valid(10, [&](const EMParams& k) {
    for (const auto& m : mirror_partners(k)) {
      ++pairs;
      EXPECT_EQ(toroidal_slope(k).twice, -toroidal_slope(m).twice) << k.str() << " " << m.str();
      EXPECT_EQ(genus(k), genus(m)) << k.str() << " " << m.str();
    }
  });
  EXPECT_GT(pairs, 1000u);
}

TEST(EM, DuplicatesShareInvariants) {
  for_valid(10, [](const EMParams& k) {
    for (const auto& e : same_knot(k)) {
      EXPECT_EQ(toroidal_slope(k), toroidal_slope(e)) << k.str() << " " << e.str();
      EXPECT_EQ(genus(k), genus(e)) << k.str() << " " << e.str();
    }
  });
}

TEST(EM, SDExamples) {
  for (i64 ls = 2; ls <= 50; ++ls) {
    const SDPair c = sd_coordinates({ls, -1, 0, 0});
    EXPECT_EQ(c.s, -3 * ls * (ls + 1));
    EXPECT_EQ(c.d, 4 * ls);
    // -4/3 s + 1 = (d/2 + 1)^2, scaled by 12
    EXPECT_EQ(-16 * c.s + 12, 3 * (c.d + 2) * (c.d + 2));
  }
  const SDPair k22 = sd_coordinates({2, 2, 0, 0});
  EXPECT_EQ(k22.s, -18);
  EXPECT_EQ(k22.g, 5);
  EXPECT_EQ(k22.alpha, 1);
  EXPECT_EQ(sd_coordinates({-3, -1, 0, 0}).alpha, 2);
  EXPECT_THROW(sd_coordinates({3, 2, 1, 0}), PreconditionError);
  EXPECT_THROW(sd_coordinates({3, 2, 0, 1}), PreconditionError);
}

TEST(EM, SDClosedFormEverywhere) {
  for (i64 l = -25; l <= 25; ++l)
    for (i64 m = -25; m <= 25; ++m)
      for (i64 p = -6; p <= 0; ++p) {
        if (!em_valid(l, m, 0, p)) continue;
        const SDPair c = sd_coordinates({l, m, 0, p});
        EXPECT_EQ(c.s * 2 - 1, c.r.twice);
        EXPECT_EQ(c.d, -c.s - 2 * c.g);
      }
}

TEST(EM, InvertExamples) {
  const SDPair a = sd_coordinates({3, -1, 0, 0});
  const auto ca = invert_sd(a.s, a.d);
  EXPECT_NE(std::find(ca.begin(), ca.end(), LMPair{3, -1}), ca.end());
  EXPECT_NE(std::find(ca.begin(), ca.end(), LMPair{-4, -1}), ca.end());
  const SDPair b = sd_coordinates({2, 2, 0, 0});
  EXPECT_EQ(invert_sd(b.s, b.d), (std::vector<LMPair>{{-3, -1}, {2, -1}, {2, 2}}));
  EXPECT_TRUE(invert_sd(0, 0).empty());
}

TEST(EM, InvertRoundTrip) {
  for (i64 l = -30; l <= 30; ++l)
    for (i64 m = -30; m <= 30; ++m) {
      if (!em_valid(l, m, 0, 0)) continue;
      const SDPair c = sd_coordinates({l, m, 0, 0});
      const auto got = invert_sd(c.s, c.d);
      std::set<LMPair> ok{{l, m}};
      for (const auto& e : same_knot({l, m, 0, 0}))
        if (e.n == 0 && e.p == 0) ok.insert({e.l, e.m});
      EXPECT_TRUE(std::any_of(got.begin(), got.end(), [&](const LMPair& x) { return ok.count(x) > 0; })) << l << "," << m;
      EXPECT_LE(got.size(), 3u);
      std::set<int> cases;
      for (const auto& x : got) {
        EXPECT_TRUE(cases.insert(sign_case(x)).second) << l << "," << m;
        const SDPair f = sd_coordinates({x.l, x.m, 0, 0});
        EXPECT_EQ(f.s, c.s);
        EXPECT_EQ(f.d, c.d);
      }
    }
}

TEST(EM, CollisionSearch) {
  std::vector<Collision> want{{2, 2, -3, -1}};
  for (i64 m = 2; m <= 13; ++m) want.push_back({6, m, -2, -3 * m + 1});
  std::sort(want.begin(), want.end());
  EXPECT_EQ(collision_search(40, 40), want);
  const auto small = collision_search(8, 8);
  for (const auto& c : small) EXPECT_NE(std::find(want.begin(), want.end(), c), want.end());
  EXPECT_EQ(collision_search(40, 40, false, 1), collision_search(40, 40, false, 7));
  // swapped roles: the same pairs, read from the other side
  auto swapped = collision_search(40, 40, true);
  for (auto& c : swapped) c = {c.l_star, c.m_star, c.l, c.m};
  std::sort(swapped.begin(), swapped.end());
  EXPECT_EQ(swapped, want);
}

TEST(EM, LStarUniqueness) {
  const auto r2 = verify_l_star_uniqueness(2, 40, 40, 6);
  EXPECT_TRUE(r2.unique);
  EXPECT_TRUE(r2.shortcut_agrees);
  EXPECT_EQ(r2.shortcut_excluded, r2.negative_p_candidates);
  EXPECT_GT(r2.negative_p_candidates, 0u);
  for (i64 ls = 3; ls <= 6; ++ls) EXPECT_TRUE(verify_l_star_uniqueness(ls, 30, 30, 6).unique) << ls;
  const auto one = verify_l_star_uniqueness(4, 30, 30, 6, true, 1);
  const auto many = verify_l_star_uniqueness(4, 30, 30, 6, true, 5);
  EXPECT_EQ(one.candidates_checked, many.candidates_checked);
  EXPECT_EQ(one.witnesses, many.witnesses);
  EXPECT_THROW(verify_l_star_uniqueness(1, 10, 10, 2), PreconditionError);
}

TEST(EM, NoPositivePWitnessesWithoutFilter) {
  const auto r = verify_l_star_uniqueness(3, 25, 25, 4, false);
  for (const auto& w : r.witnesses) EXPECT_LE(w.p, 0) << w.str();
  for (i64 l = -25; l <= 25; ++l)
    for (i64 m = -25; m <= 25; ++m)
      for (i64 p = 1; p <= 4; ++p)
        if (em_valid(l, m, 0, p)) EXPECT_GT((toroidal_slope({l, m, 0, p}).twice + 1) / 2, 0) << l << "," << m << "," << p;
}

TEST(EM, NegativePNoCollision) {
  std::map<std::pair<i64, i64>, i64> targets;
  for (i64 ls = 2; ls <= 40; ++ls) targets[{genus({ls, -1, 0, 0}), toroidal_slope({ls, -1, 0, 0}).twice}] = ls;
  for (i64 p = -4; p <= -1; ++p)
    for (i64 l = -40; l <= 40; ++l) {
      if (l % (1 - 2 * p) != 0) continue;
      for (i64 m = -40; m <= 40; ++m) {
        if (!em_valid(l, m, 0, p)) continue;
        const EMParams k{l, m, 0, p};
        EXPECT_EQ(targets.count({genus(k), toroidal_slope(k).twice}), 0u) << k.str();
        EXPECT_TRUE(p_negative_shortcut(l, m, p).has_value()) << k.str();
      }
    }
  EXPECT_EQ(p_negative_shortcut(3, 2, 0), std::nullopt);
  EXPECT_EQ(*p_negative_shortcut(7, 2, -7), "inequality: -p <= 4");
}
