#include <gtest/gtest.h>

#include "rcc11/disk/classify.hpp"
#include "rcc11/disk/generate.hpp"
#include "rcc11/disk/region.hpp"
#include "rcc11/disk/witness.hpp"
#include "rcc11/golden_table.hpp"
#include "rcc11/lattice_classify.hpp"

using namespace rcc11;
using namespace rcc11::disk;
using B = BaseRel;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

// Parthood and contact straight from center distance and radii, fed through
// the generic lattice clauses. Shares nothing with the sign-table route.
struct OracleDisks {
  using Region = DiskRegion;

  static Rational dist2(const DiskRegion& x, const DiskRegion& y) {
    const Rational dx = x.center().x - y.center().x, dy = x.center().y - y.center().y;
    return dx * dx + dy * dy;
  }
  // closed disk of x inside closed disk of y
  static bool disk_in_disk(const DiskRegion& x, const DiskRegion& y) {
    const Rational gap = y.radius() - x.radius();
    return gap >= 0 && dist2(x, y) <= gap * gap;
  }
  bool leq(const DiskRegion& x, const DiskRegion& y) const {
    const Rational sum = x.radius() + y.radius();
    if (x.is_disk() && y.is_disk()) return disk_in_disk(x, y);
    if (x.is_disk()) return dist2(x, y) >= sum * sum;
    if (y.is_disk()) return false;  // unbounded inside bounded
    return disk_in_disk(y, x);
  }
  DiskRegion complement(const DiskRegion& x) const { return disk::complement(x); }
  bool contact(const DiskRegion& x, const DiskRegion& y) const {
    const Rational sum = x.radius() + y.radius();
    if (x.is_disk() && y.is_disk()) return dist2(x, y) <= sum * sum;
    if (!x.is_disk() && !y.is_disk()) return true;
    const DiskRegion& d = x.is_disk() ? x : y;
    const DiskRegion& h = x.is_disk() ? y : x;
    // the closed disk d misses the codisk only inside the open hole of h
    const Rational gap = h.radius() - d.radius();
    return !(gap > 0 && dist2(d, h) < gap * gap);
  }
};

BaseRel oracle(const DiskRegion& a, const DiskRegion& b) { return classify_in_lattice(OracleDisks{}, a, b); }

NineMatrix mat(std::initializer_list<int> v) {
  NineMatrix n;
  int i = 0;
  for (int x : v) {
    n.m[static_cast<std::size_t>(i / 3)][static_cast<std::size_t>(i % 3)] = x != 0;
    ++i;
  }
  return n;
}

// The eleven 9-intersection matrices, row-major, transcribed.
const std::pair<B, NineMatrix> kMatrices[] = {
    {B::EQ, mat({1, 0, 0, 0, 1, 0, 0, 0, 1})},    {B::TPP, mat({1, 0, 0, 1, 1, 0, 1, 1, 1})},
    {B::TPPI, mat({1, 1, 1, 0, 1, 1, 0, 0, 1})},  {B::NTPP, mat({1, 0, 0, 1, 0, 0, 1, 1, 1})},
    {B::NTPPI, mat({1, 1, 1, 0, 0, 1, 0, 0, 1})}, {B::PON, mat({1, 1, 1, 1, 1, 1, 1, 1, 1})},
    {B::PODY, mat({1, 1, 1, 1, 1, 0, 1, 0, 0})},  {B::PODZ, mat({1, 1, 1, 1, 0, 0, 1, 0, 0})},
    {B::ECN, mat({0, 0, 1, 0, 1, 1, 1, 1, 1})},   {B::ECD, mat({0, 0, 1, 0, 1, 0, 1, 0, 0})},
    {B::DC, mat({0, 0, 1, 0, 0, 1, 1, 1, 1})},
};

}  // namespace

TEST(DiskRegion, Construction) {
  EXPECT_THROW(make_disk(0, 0, 0), std::invalid_argument);
  EXPECT_THROW(make_codisk(0, 0, q(-1)), std::invalid_argument);
  EXPECT_EQ(to_string(make_disk(q(1, 2), 0, 3)), "disk(1/2,0,3)");
  EXPECT_EQ(to_string(make_codisk(0, q(-2), q(1, 3))), "codisk(0,-2,1/3)");
}

TEST(Complement, Examples) {
  const auto a = make_disk(0, 0, 1);
  EXPECT_EQ(complement(a), make_codisk(0, 0, 1));
  EXPECT_EQ(complement(complement(a)), a);
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_region(rng);
    EXPECT_EQ(classify(x, complement(x)), B::ECD);
    EXPECT_EQ(oracle(x, complement(x)), B::ECD);
  }
}

TEST(NineMatrix, Examples) {
  EXPECT_EQ(nine_matrix(make_disk(0, 0, 1), make_disk(3, 0, 1)), mat({0, 0, 1, 0, 0, 1, 1, 1, 1}));
  EXPECT_EQ(nine_matrix(make_disk(0, 0, 1), make_codisk(0, 0, 1)), mat({0, 0, 1, 0, 1, 0, 1, 0, 0}));
  EXPECT_EQ(nine_matrix(make_disk(2, 5, 3), make_disk(2, 5, 3)), mat({1, 0, 0, 0, 1, 0, 0, 0, 1}));
  EXPECT_EQ(mat({0, 0, 1, 0, 1, 0, 1, 0, 0}).to_csv(), "0,0,1,0,1,0,1,0,0");
}

TEST(NineMatrix, GeneratedPairsGiveTheTranscribedMatrices) {
  for (const auto& [r, m] : kMatrices) {
    EXPECT_EQ(kRelationMatrices[static_cast<std::size_t>(index_of(r))], m) << token(r);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto [a, b] = generate_pair(r, seed);
      EXPECT_EQ(nine_matrix(a, b), m) << token(r) << " seed " << seed;
    }
  }
}

TEST(NineMatrix, ExteriorsMissOnlyWhenTheUnionIsThePlane) {
  Rng rng(11);
  for (int i = 0; i < 3000; ++i) {
    auto [a, b] = generate_pair(rng.pick(kAllBaseRels), static_cast<std::uint64_t>(i));
    const BaseRel r = classify(a, b);
    const bool covers = r == B::PODY || r == B::PODZ || r == B::ECD;
    EXPECT_EQ(nine_matrix(a, b).m[2][2], !covers) << to_string(a) << " " << to_string(b);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(make_disk(0, 0, 1), make_disk(3, 0, 1)), B::DC);
  EXPECT_EQ(classify(make_disk(0, 0, 1), make_disk(1, 0, 2)), B::TPP);
  EXPECT_EQ(oracle(make_disk(0, 0, 1), make_disk(1, 0, 2)), B::TPP);
  EXPECT_EQ(classify(make_disk(0, 0, 2), make_codisk(1, 0, 1)), B::PODY);
  EXPECT_EQ(oracle(make_disk(0, 0, 2), make_codisk(1, 0, 1)), B::PODY);
}

TEST(Classify, SignTableIsExhaustive) {
  int feasible = 0;
  for (int sp : {-1, 0, 1})
    for (int sm : {-1, 0, 1})
      for (int order : {-1, 0, 1}) {
        const auto k = config_from_signs({sp, sm, order});
        if (!k) continue;
        ++feasible;
        for (Polarity pa : {Polarity::Disk, Polarity::Codisk}) {
          for (Polarity pb : {Polarity::Disk, Polarity::Codisk}) {
            const BaseRel r = relation_for(pa, pb, *k);
            EXPECT_EQ(relation_of_matrix(nine_matrix(pa, pb, *k)), r);
            if (pa == Polarity::Codisk && pb == Polarity::Disk) {
              EXPECT_TRUE(r != B::TPP && r != B::NTPP && r != B::EQ);
            }
          }
        }
      }
  // the radius order is free for the first three configurations
  EXPECT_EQ(feasible, 14);
}

TEST(Classify, AgreesWithOracleAndClauses) {
  Rng rng(5);
  for (int i = 0; i < 20000; ++i) {
    DiskRegion a = random_region(rng), b = random_region(rng);
    if (i % 2) std::tie(a, b) = generate_pair(rng.pick(kAllBaseRels), static_cast<std::uint64_t>(i));
    const BaseRel r = classify(a, b);
    ASSERT_EQ(oracle(a, b), r) << to_string(a) << " " << to_string(b);
    ASSERT_EQ(classify_by_clauses(a, b), r);
    ASSERT_EQ(classify(b, a), converse(r));
    ASSERT_EQ(classify(a, complement(b)), dual(r, DualSide::Right));
    ASSERT_EQ(classify(complement(a), b), dual(r, DualSide::Left));
    ASSERT_EQ(classify(complement(a), complement(b)), dual(dual(r, DualSide::Right), DualSide::Left));
  }
}

TEST(GeneratePair, DeterministicAndCorrect) {
  for (B r : kAllBaseRels)
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      auto p1 = generate_pair(r, seed);
      auto p2 = generate_pair(r, seed);
      EXPECT_EQ(p1, p2);
      EXPECT_EQ(classify(p1.first, p1.second), r);
      EXPECT_EQ(oracle(p1.first, p1.second), r);
    }
  auto [a, b] = generate_pair(B::ECD, 9);
  EXPECT_EQ(a, complement(b));
}

TEST(ObserveCell, Examples) {
  EXPECT_EQ(observe_cell(B::NTPP, B::NTPP, 500, 1).observed, RelSet{B::NTPP});
  EXPECT_EQ(observe_cell(B::TPP, B::TPP, 2000, 1).observed, (RelSet{B::TPP, B::NTPP}));
  const RelSet small = observe_cell(B::PON, B::PON, 200, 1).observed;
  const RelSet large = observe_cell(B::PON, B::PON, 20000, 1).observed;
  EXPECT_TRUE(small.subset_of(large));
  EXPECT_GE(large.size(), small.size());
  EXPECT_TRUE(large.subset_of(golden_table().entries(B::PON, B::PON)));
  EXPECT_THROW(observe_cell(B::PON, B::PON, 0, 1), std::invalid_argument);
}

TEST(ObserveCell, AlwaysInsideTheTable) {
  for (B r : kAllBaseRels)
    for (B s : kAllBaseRels) {
      const auto obs = observe_cell(r, s, 60, static_cast<std::uint64_t>(index_of(r) * 11 + index_of(s)));
      EXPECT_TRUE(obs.observed.subset_of(golden_table().entries(r, s))) << token(r) << "," << token(s);
    }
}

TEST(FindWitness, Examples) {
  const auto a = make_disk(0, 0, 2);
  const auto c = make_codisk(1, 0, 1);
  ASSERT_EQ(classify(a, c), B::PODY);
  const auto w = find_witness(B::TPPI, B::TPP, a, c);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w.z, make_disk(-1, 0, 1));
  EXPECT_EQ(classify(a, *w.z), B::TPPI);
  EXPECT_EQ(classify(*w.z, c), B::TPP);

  const auto e = find_witness(B::ECD, B::NTPPI, make_disk(0, 0, 1), make_disk(3, 0, 1));
  ASSERT_TRUE(e);
  EXPECT_EQ(*e.z, make_codisk(0, 0, 1));

  const auto n = find_witness(B::NTPP, B::NTPP, make_disk(0, 0, 1), make_disk(1, 1, 6));
  ASSERT_TRUE(n);
  EXPECT_EQ(classify(make_disk(0, 0, 1), *n.z), B::NTPP);
  EXPECT_EQ(classify(*n.z, make_disk(1, 1, 6)), B::NTPP);
}

TEST(FindWitness, RejectsImpossibleRequests) {
  EXPECT_THROW(find_witness(B::NTPP, B::NTPP, make_disk(0, 0, 1), make_disk(5, 0, 1)), std::invalid_argument);
}

TEST(FindWitness, EveryTriadOnSomeInstances) {
  for (B r : kAllBaseRels)
    for (B s : kAllBaseRels)
      for (B t : golden_table().entries(r, s))
        for (std::uint64_t seed = 100; seed < 103; ++seed) {
          auto [a, c] = generate_pair(t, seed);
          const auto w = find_witness(r, s, a, c, kDefaultWitnessBudget, seed);
          ASSERT_TRUE(w) << token(r) << "," << token(s) << "->" << token(t) << " " << to_string(a) << " "
                         << to_string(c);
          EXPECT_EQ(oracle(a, *w.z), r);
          EXPECT_EQ(oracle(*w.z, c), s);
        }
}

TEST(Interpolate, Examples) {
  const auto a = make_disk(0, 0, 1), c = make_disk(0, 0, 4);
  const auto b1 = interpolate(a, c, SplitMode::NtppNtpp);
  EXPECT_EQ(b1, make_disk(0, 0, q(5, 2)));
  const auto b2 = interpolate(a, c, SplitMode::TppNtpp);
  EXPECT_EQ(oracle(a, b2), B::TPP);
  EXPECT_EQ(oracle(b2, c), B::NTPP);
  const auto b3 = interpolate(a, c, SplitMode::NtppTpp);
  EXPECT_EQ(oracle(a, b3), B::NTPP);
  EXPECT_EQ(oracle(b3, c), B::TPP);

  const auto cc = make_codisk(5, 0, 1);
  const auto b4 = interpolate(a, cc, SplitMode::NtppNtpp);
  EXPECT_EQ(b4, make_disk(0, 0, 2));
  EXPECT_EQ(oracle(a, b4), B::NTPP);
  EXPECT_EQ(oracle(b4, cc), B::NTPP);

  EXPECT_THROW(interpolate(c, a, SplitMode::NtppNtpp), std::invalid_argument);
  EXPECT_EQ(parse_split_mode("tpp-ntpp"), SplitMode::TppNtpp);
  EXPECT_FALSE(parse_split_mode("tpp").has_value());
}

TEST(Interpolate, AllPolarityCasesAndModes) {
  const std::pair<SplitMode, std::pair<B, B>> modes[] = {{SplitMode::NtppNtpp, {B::NTPP, B::NTPP}},
                                                         {SplitMode::TppNtpp, {B::TPP, B::NTPP}},
                                                         {SplitMode::NtppTpp, {B::NTPP, B::TPP}}};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto [a, c] = generate_pair(B::NTPP, seed);
    for (const auto& [mode, want] : modes) {
      const auto b = interpolate(a, c, mode);
      EXPECT_EQ(oracle(a, b), want.first) << to_string(a) << " " << to_string(c);
      EXPECT_EQ(oracle(b, c), want.second) << to_string(a) << " " << to_string(c);
    }
  }
}
