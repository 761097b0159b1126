#include <set>
#include <string>

#include <gtest/gtest.h>

#include "rcc11/dyadic.hpp"
#include "rcc11/golden_table.hpp"
#include "rcc11/random.hpp"

using namespace rcc11;
using namespace rcc11::dyadic;
using B = BaseRel;

namespace {

// Regions as sets of depth-d names; contact by literal enumeration of the
// pair form s1 0 1^n / s1 1 1^n.
std::set<std::string> names(const BwRegion& a) {
  std::set<std::string> out;
  const int d = a.depth();
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
    std::string s;
    for (int i = d - 1; i >= 0; --i) s += (v >> i & 1) ? '1' : '0';
    if ((a.cells() & cell_mask(s, d)) != 0) out.insert(s);
  }
  return out;
}

bool covers(const std::set<std::string>& a, const std::string& prefix, int d) {
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << (d - static_cast<int>(prefix.size()))); ++v) {
    std::string s = prefix;
    for (int i = d - static_cast<int>(prefix.size()) - 1; i >= 0; --i) s += (v >> i & 1) ? '1' : '0';
    if (!a.count(s)) return false;
  }
  return true;
}

bool oracle_contact(const BwRegion& a, const BwRegion& b) {
  const auto na = names(a), nb = names(b);
  for (const auto& s : na)
    if (nb.count(s)) return true;
  const int d = a.depth();
  for (int len = 0; len < d; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::string s1;
      for (int i = len - 1; i >= 0; --i) s1 += (v >> i & 1) ? '1' : '0';
      for (int n = 0; len + 1 + n <= d; ++n) {
        const std::string s = s1 + "0" + std::string(static_cast<std::size_t>(n), '1');
        const std::string t = s1 + "1" + std::string(static_cast<std::size_t>(n), '1');
        if ((covers(na, s, d) && covers(nb, t, d)) || (covers(na, t, d) && covers(nb, s, d))) return true;
      }
    }
  return false;
}

BwRegion X(const char* s, int d = 3) { return cell(s, d); }

}  // namespace

TEST(Contact, Examples) {
  EXPECT_TRUE(contact(X("0"), X("1")));
  EXPECT_TRUE(contact(X("01"), X("01")));
  EXPECT_FALSE(contact(X("00"), X("11")));
  EXPECT_FALSE(contact(X("01"), X("10")));
  EXPECT_TRUE(contact(X("01"), X("11")));
  EXPECT_THROW(contact(X("0", 3), X("0", 4)), std::invalid_argument);
}

TEST(Contact, AgreesWithOracleExhaustively) {
  for (int d = 1; d <= 3; ++d) {
    const auto all = model(d).all_regions();
    for (const auto& a : all)
      for (const auto& b : all) ASSERT_EQ(contact(a, b), oracle_contact(a, b)) << to_string(a) << " " << to_string(b);
  }
}

TEST(Contact, AgreesWithOracleSampled) {
  Rng rng(2);
  for (int d : {4, 5}) {
    const Mask full = full_mask(d);
    for (int i = 0; i < 400; ++i) {
      Mask ma = 0, mb = 0;
      while (ma == 0 || ma == full) ma = static_cast<Mask>(rng.uniform(1, static_cast<std::int64_t>(full - 1)));
      while (mb == 0 || mb == full) mb = static_cast<Mask>(rng.uniform(1, static_cast<std::int64_t>(full - 1)));
      const BwRegion a(d, ma), b(d, mb);
      ASSERT_EQ(contact(a, b), oracle_contact(a, b));
    }
  }
}

TEST(Regions, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_region("x(00)+x(11)", 3)), "x(00)+x(11)");
  EXPECT_EQ(to_string(parse_region("x(000)+x(001)", 3)), "x(00)");
  EXPECT_EQ(parse_region("!x(01)", 3), BwRegion(3, full_mask(3) & ~cell_mask("01", 3)));
  EXPECT_THROW(parse_region("x()", 3), std::invalid_argument);
  EXPECT_THROW(parse_region("x(0)+x(1)", 3), std::invalid_argument);
  EXPECT_THROW(parse_region("x(0", 3), std::invalid_argument);
  EXPECT_THROW(parse_region("x(0101)", 3), std::invalid_argument);
  EXPECT_THROW(BwRegion(3, 0), std::invalid_argument);
  EXPECT_EQ(refine(X("1", 2), 3), X("1", 3));
}

TEST(Classify11, Examples) {
  EXPECT_EQ(classify11(X("00"), X("0")), B::NTPP);
  EXPECT_EQ(classify11(X("01"), X("0")), B::TPP);
  EXPECT_EQ(classify11(X("0"), X("1")), B::ECD);
}

TEST(Classify11, LawsExhaustiveAtDepthThree) {
  const BwModel& m = model(3);
  const auto all = m.all_regions();
  for (const auto& a : all)
    for (const auto& b : all) {
      const BaseRel r = classify11(a, b);
      ASSERT_EQ(classify11(b, a), converse(r));
      ASSERT_EQ(classify11(a, m.complement(b)), dual(r, DualSide::Right));
      ASSERT_EQ(classify11(m.complement(a), b), dual(r, DualSide::Left));
    }
}

TEST(Classify11, SoundSampledAtDepthFour) {
  Rng rng(8);
  const Mask full = full_mask(4);
  auto pick = [&] {
    Mask m = 0;
    while (m == 0 || m == full) m = static_cast<Mask>(rng.uniform(1, static_cast<std::int64_t>(full - 1)));
    return BwRegion(4, m);
  };
  for (int i = 0; i < 20000; ++i) {
    const BwRegion a = pick(), b = pick(), c = pick();
    ASSERT_TRUE(golden_table().entries(classify11(a, b), classify11(b, c)).contains(classify11(a, c)));
  }
}

TEST(Hole, Examples) {
  EXPECT_EQ(hole(X("00"), X("01")), HoleKind::StrictHole);
  EXPECT_EQ(hole(X("0"), X("1")), HoleKind::None);
  EXPECT_EQ(hole(X("00"), X("11")), HoleKind::None);
}

TEST(Hole, StrictHolesAreEcn) {
  const auto all = model(3).all_regions();
  long holes = 0;
  for (const auto& a : all)
    for (const auto& b : all)
      if (hole(a, b) == HoleKind::StrictHole) {
        ++holes;
        EXPECT_EQ(classify11(a, b), B::ECN);
      }
  EXPECT_GT(holes, 0);
}

TEST(Chains, StandardChain) {
  const auto c1 = standard_chain(1, 3);
  ASSERT_EQ(c1.size(), 2u);
  EXPECT_EQ(c1[0], X("00"));
  EXPECT_EQ(c1[1], X("0"));
  EXPECT_EQ(classify11(c1[0], c1[1]), B::NTPP);

  const auto c2 = standard_chain(2, 4);
  ASSERT_EQ(c2.size(), 3u);
  EXPECT_EQ(c2[0], X("000", 4));
  for (std::size_t i = 0; i + 1 < c2.size(); ++i) EXPECT_EQ(classify11(c2[i], c2[i + 1]), B::NTPP);

  EXPECT_EQ(standard_chain(0, 3), std::vector<BwRegion>{X("0")});
  EXPECT_THROW(standard_chain(3, 3), std::invalid_argument);
}

TEST(Chains, Exists) {
  EXPECT_TRUE(chain_exists(X("00", 3), X("0", 3), 1));
  EXPECT_TRUE(chain_exists(X("000", 4), X("0", 4), 2));
  EXPECT_FALSE(chain_exists(X("00", 4), X("0", 4), 2));
  EXPECT_FALSE(chain_exists(X("000", 4), X("0", 4), 3));
}

TEST(Chains, LambdaDescent) {
  Rng rng(4);
  const Mask left = cell_mask("0", 5);
  long applicable = 0;
  for (int i = 0; i < 1000; ++i) {
    Mask am = 0;
    while (am == 0) am = static_cast<Mask>(rng.uniform(0, INT64_MAX)) & left;
    const BwRegion a(5, am);
    std::string t = "0";
    for (auto j = rng.uniform(1, 4); j > 0; --j) t += rng.coin() ? '1' : '0';
    if (classify11(cell(t, 5), a) != B::NTPP) continue;
    ++applicable;
    EXPECT_TRUE(lambda_descent_holds(t, a)) << t << " " << to_string(a);
  }
  EXPECT_GT(applicable, 0);
  EXPECT_EQ(lambda("0100"), 3);
}

TEST(Axioms, DepthTwoPasses) {
  const auto rep = check_axioms(2);
  EXPECT_TRUE(rep.passed());
  for (const auto& a : rep.axioms) EXPECT_GT(a.checked, 0) << a.name;
  EXPECT_THROW(check_axioms(4), std::invalid_argument);
}

TEST(Axioms, Instances) {
  EXPECT_TRUE(contact(X("0"), model(3).complement(X("0"))));
  EXPECT_EQ(a5_witness(parse_region("!x(110)", 3), 5), "1100");
}

TEST(Pody, Counterexample) {
  const auto rep = pody_counterexample(3);
  EXPECT_EQ(rep.relation_ac, B::PODY);
  EXPECT_EQ(rep.witnesses_tpp, 0);
  EXPECT_EQ(rep.witnesses_ntpp, 0);
  EXPECT_EQ(rep.candidates, 254);
  EXPECT_EQ(rep.control_relation, B::PODZ);
  EXPECT_TRUE(rep.control_witness);
  EXPECT_THROW(pody_counterexample(2), std::invalid_argument);
}
