#include <gtest/gtest.h>

#include "rcc11/disk/classify.hpp"
#include "rcc11/disk/generate.hpp"
#include "rcc11/disk/witness.hpp"
#include "rcc11/netcsp.hpp"

using namespace rcc11;
using namespace rcc11::netcsp;
using B = BaseRel;

namespace {

// Path consistency written out as a plain loop to fixpoint, rebuilt from
// the composition cells with no shared code beyond the table.
std::optional<Network> naive_closure(Network net) {
  const int n = net.size();
  const CompTable& t = golden_table();
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          RelSet comp;
          for (B r : net.at(i, j))
            for (B s : net.at(j, k)) comp = comp | t.entries(r, s);
          const RelSet next = net.at(i, k) & comp;
          if (next.empty()) return std::nullopt;
          if (next != net.at(i, k)) {
            if (i == k) return std::nullopt;
            net.set(i, k, next);
            changed = true;
          }
        }
  }
  return net;
}

bool subset_cellwise(const Network& a, const Network& b) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (!(a.at(i, j) - b.at(i, j)).empty()) return false;
  return true;
}

}  // namespace

TEST(Closure, RefinesTppNtpp) {
  Network n(3);
  n.set(0, 1, RelSet(B::TPP));
  n.set(1, 2, RelSet(B::NTPP));
  const auto c = closure(n);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->at(0, 2), RelSet(B::NTPP));
  EXPECT_EQ(c->at(2, 0), RelSet(B::NTPPI));
}

TEST(Closure, EcdTriangleInconsistent) {
  Network n(3);
  n.set(0, 1, RelSet(B::ECD));
  n.set(1, 2, RelSet(B::ECD));
  n.set(0, 2, RelSet(B::ECD));
  EXPECT_FALSE(closure(n));
  EXPECT_FALSE(scenario_search(n));
}

TEST(Closure, UniversalUnchanged) {
  const Network n(4);
  const auto c = closure(n);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, n);
}

TEST(Closure, RandomNetworks) {
  Rng rng(11);
  int consistent = 0;
  for (int i = 0; i < 100; ++i) {
    const Network net = random_network(rng, 5);
    const auto c = closure(net);
    const auto o = naive_closure(net);
    ASSERT_EQ(c.has_value(), o.has_value());
    if (!c) continue;
    ++consistent;
    EXPECT_EQ(*c, *o);
    EXPECT_TRUE(subset_cellwise(*c, net));
    const auto again = closure(*c);
    ASSERT_TRUE(again);
    EXPECT_EQ(*again, *c);
    for (int a = 0; a < c->size(); ++a)
      for (int b = 0; b < c->size(); ++b) EXPECT_EQ(c->at(b, a), converse(c->at(a, b)));
  }
  EXPECT_GT(consistent, 0);
}

TEST(Scenario, TppTpp) {
  Network n(3);
  n.set(0, 1, RelSet(B::TPP));
  n.set(1, 2, RelSet(B::TPP));
  const auto s = scenario_search(n);
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->is_atomic());
  EXPECT_TRUE((RelSet{B::TPP, B::NTPP}).contains(*s->at(0, 2).begin()));
  const auto again = closure(*s);
  ASSERT_TRUE(again);
  EXPECT_EQ(*again, *s);
}

TEST(Scenario, SingleVariable) {
  const auto s = scenario_search(Network(1));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->at(0, 0), RelSet(B::EQ));
}

TEST(Scenario, ThreeVariableScenariosRealizeOnDisks) {
  Rng rng(12);
  int realized = 0;
  for (int i = 0; i < 60; ++i) {
    const auto s = scenario_search(random_network(rng, 3, 50));
    if (!s) continue;
    const B r = *s->at(0, 1).begin(), q = *s->at(1, 2).begin(), t = *s->at(0, 2).begin();
    const auto [a, c] = disk::generate_pair(t, static_cast<std::uint64_t>(i));
    const auto w = disk::find_witness(r, q, a, c, disk::kDefaultWitnessBudget, static_cast<std::uint64_t>(i));
    ASSERT_TRUE(w.z) << token(r) << "," << token(q) << "->" << token(t);
    EXPECT_EQ(disk::classify(a, *w.z), r);
    EXPECT_EQ(disk::classify(*w.z, c), q);
    EXPECT_EQ(disk::classify(a, c), t);
    ++realized;
  }
  EXPECT_GT(realized, 10);
}

TEST(Network, DiagonalAndParse) {
  Network n(2);
  EXPECT_THROW(n.set(0, 0, RelSet(B::TPP)), std::invalid_argument);
  n.set(0, 0, RelSet(B::EQ));

  const auto p = parse_network(
      R"({"vars":["x","y"],"constraints":[{"i":"x","j":"y","rels":["TPP","PON"]},{"i":"y","j":"x","rels":["TPPI"]}]})");
  EXPECT_EQ(p.at(0, 1), RelSet(B::TPP));
  EXPECT_EQ(to_json(p)["constraints"][0]["rels"], nlohmann::json::array({"TPP"}));

  EXPECT_THROW(parse_network("{"), NetworkParseError);
  EXPECT_THROW(parse_network(R"({"constraints":[]})"), NetworkParseError);
  EXPECT_THROW(parse_network(R"({"vars":["x","x"]})"), NetworkParseError);
  EXPECT_THROW(parse_network(R"({"vars":["x"],"constraints":[{"i":"x","j":"z","rels":["DC"]}]})"), NetworkParseError);
  EXPECT_THROW(parse_network(R"({"vars":["x","y"],"constraints":[{"i":"x","j":"y","rels":["PO"]}]})"),
               NetworkParseError);
  EXPECT_THROW(parse_network(R"({"vars":["x"],"constraints":[{"i":"x","j":"x","rels":["DC"]}]})"),
               NetworkParseError);
}
