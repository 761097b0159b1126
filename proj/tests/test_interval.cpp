#include <gtest/gtest.h>

#include "rcc11/golden_table.hpp"
#include "rcc11/interval1d.hpp"

using namespace rcc11;
using namespace rcc11::interval1d;
using B = BaseRel;

namespace {

IntervalRegion R(const char* s) { return parse_region(s); }

// Pointwise oracle on an eighth-grid over [-20, 20]. Random regions have
// integer endpoints in [-6, 6], so the grid sees every boundary point and
// every open gap.
bool member(const IntervalRegion& a, const Rational& x) {
  for (const auto& c : a.components())
    if ((!c.lo.finite() || c.lo.value <= x) && (!c.hi.finite() || x <= c.hi.value)) return true;
  return false;
}

std::vector<Rational> grid() {
  std::vector<Rational> g;
  for (int i = -160; i <= 160; ++i) g.emplace_back(i, 8);
  return g;
}

// x is interior to a when a small neighbourhood is inside
bool interior(const IntervalRegion& a, const Rational& x) {
  const Rational e(1, 16);
  return member(a, x - e) && member(a, x) && member(a, x + e);
}

struct GridModel {
  using Region = IntervalRegion;
  bool leq(const Region& a, const Region& b) const {
    for (const auto& x : grid())
      if (member(a, x) && !member(b, x)) return false;
    return true;
  }
  Region complement(const Region& a) const { return interval1d::complement(a); }
  bool contact(const Region& a, const Region& b) const {
    for (const auto& x : grid())
      if (member(a, x) && member(b, x)) return true;
    return false;
  }
};

}  // namespace

TEST(Regions, Regularize) {
  EXPECT_EQ(to_string(R("[0,1]+[1,2]")), "[0,2]");
  EXPECT_EQ(to_string(R("[3,4]+[0,1]")), "[0,1]+[3,4]");
  EXPECT_EQ(to_string(R("(-inf,0]+[-1,5]")), "(-inf,5]");
  EXPECT_EQ(to_string(R("[1/2,3/2]")), "[1/2,3/2]");
  EXPECT_THROW(R("[0,0]"), std::invalid_argument);
  EXPECT_THROW(R("(-inf,0]+[0,inf)"), std::invalid_argument);
  EXPECT_THROW(R("(0,1]"), std::invalid_argument);
  EXPECT_THROW(R("[0,1]+"), std::invalid_argument);
  EXPECT_THROW(R("[0,1"), std::invalid_argument);
  EXPECT_THROW(regularize({}), std::invalid_argument);
}

TEST(Regions, Complement) {
  EXPECT_EQ(complement(R("[0,1]")), R("(-inf,0]+[1,inf)"));
  EXPECT_EQ(complement(R("(-inf,0]")), R("[0,inf)"));
  Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_region(rng);
    const auto c = complement(a);
    EXPECT_EQ(complement(c), a);
    for (const auto& x : grid()) {
      const Rational m = x + Rational(1, 16);
      ASSERT_NE(interior(a, m), interior(c, m)) << to_string(a) << " at " << to_string(m);
    }
  }
}

TEST(Classify11, Examples) {
  EXPECT_EQ(classify11(R("[0,1]"), R("[1,2]")), B::ECN);
  EXPECT_EQ(classify11(R("(-inf,0]"), R("[0,inf)")), B::ECD);
  EXPECT_EQ(classify11(R("[1,2]"), R("[0,3]")), B::NTPP);
  EXPECT_EQ(classify11(R("[0,1]"), R("[0,3]")), B::TPP);
  EXPECT_EQ(classify11(R("[0,1]"), R("[2,3]")), B::DC);
  EXPECT_EQ(classify11(R("(-inf,1]"), R("[0,inf)")), B::PODZ);
  EXPECT_EQ(classify11(R("(-inf,0]+[1,inf)"), R("(-inf,1]+[2,inf)")), B::PODY);
  EXPECT_EQ(classify11(R("[0,2]"), R("[1,3]")), B::PON);
}

TEST(Classify11, AgreesWithGridOracle) {
  Rng rng(3);
  for (int i = 0; i < 3000; ++i) {
    const auto a = random_region(rng), b = random_region(rng);
    ASSERT_EQ(classify11(a, b), classify_in_lattice(GridModel{}, a, b)) << to_string(a) << " " << to_string(b);
  }
}

TEST(Classify11, LawsAndSoundness) {
  Rng rng(5);
  for (int i = 0; i < 5000; ++i) {
    const auto a = random_region(rng), b = random_region(rng), c = random_region(rng);
    const BaseRel ab = classify11(a, b);
    ASSERT_EQ(classify11(b, a), converse(ab));
    ASSERT_EQ(classify11(a, complement(b)), dual(ab, DualSide::Right));
    ASSERT_EQ(classify11(complement(a), b), dual(ab, DualSide::Left));
    ASSERT_TRUE(golden_table().entries(ab, classify11(b, c)).contains(classify11(a, c)));
  }
}

TEST(Hole, Examples) {
  EXPECT_TRUE(strict_hole(R("[1,2]"), R("[0,1]+[2,3]")));
  EXPECT_FALSE(strict_hole(R("[0,1]"), R("[1,2]")));
  EXPECT_EQ(hole(R("(-inf,0]"), R("[0,inf)")), HoleKind::None);
  EXPECT_FALSE(strict_hole(R("[0,2]"), R("[1,3]")));
  EXPECT_FALSE(strict_hole(R("[0,3]"), R("[5,6]")));
}

TEST(Hole, ChainsUpToThree) {
  for (int k = 1; k <= 3; ++k) {
    const auto c = build_hole_chain(k);
    ASSERT_EQ(c.size(), static_cast<std::size_t>(2 * k + 1));
    for (std::size_t i = 0; i + 1 < c.size(); ++i) EXPECT_TRUE(strict_hole(c[i], c[i + 1])) << k << " " << i;
    EXPECT_EQ(boundary_count(c[0]), 2);
    EXPECT_EQ(boundary_count(c[static_cast<std::size_t>(2 * k - 1)]), 2 * k + 1);
    for (int i = 1; i <= k; ++i) {
      const auto p = odd_power_path(k, i);
      ASSERT_EQ(p.size(), static_cast<std::size_t>(2 * i));
      for (std::size_t j = 0; j + 1 < p.size(); ++j)
        EXPECT_TRUE(strict_hole(c[static_cast<std::size_t>(p[j] - 1)], c[static_cast<std::size_t>(p[j + 1] - 1)]));
    }
    EXPECT_TRUE(power_refuted_by_endpoints(c[0], c[static_cast<std::size_t>(2 * k - 1)], 2 * k + 1));
  }
  EXPECT_EQ(build_hole_chain(1)[0], R("[0,1]"));
  EXPECT_EQ(build_hole_chain(1)[1], R("(-inf,0]+[1,2]"));
  EXPECT_THROW(build_hole_chain(0), std::invalid_argument);
  EXPECT_THROW(odd_power_path(2, 3), std::invalid_argument);
}

TEST(Hole, BoundaryCounts) {
  EXPECT_EQ(boundary_count(R("[0,1]")), 2);
  EXPECT_EQ(boundary_count(R("(-inf,0]")), 1);
  EXPECT_EQ(boundary_count(R("(-inf,0]+[1,2]")), 3);
}

TEST(Hole, EndpointInclusion) {
  Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    const auto [a, b] = random_hole_pair(rng);
    ASSERT_TRUE(strict_hole(a, b)) << to_string(a) << " " << to_string(b);
    EXPECT_EQ(classify11(a, b), B::ECN);
    const auto ea = endpoints(a), eb = endpoints(b);
    EXPECT_TRUE(std::includes(eb.begin(), eb.end(), ea.begin(), ea.end()));
    EXPECT_LT(ea.size(), eb.size());
  }
}
