#pragma once

// Coarser JEPD calculi as partitions of the RCC11 base relations, and the
// work-reduction counts for calculi with a dual generating set.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rcc11/relation.hpp"

namespace rcc11 {

enum class CalculusName { RCC11, RCC8, RCC7, RCC5 };

struct Block {
  std::string label;
  RelSet members;
};

struct Calculus {
  CalculusName name;
  std::vector<Block> blocks;
  /// Labels of a dual generating set closed under converse, if declared.
  std::vector<std::string> dual_generators;

  std::string_view display_name() const {
    switch (name) {
      case CalculusName::RCC11: return "RCC11";
      case CalculusName::RCC8: return "RCC8";
      case CalculusName::RCC7: return "RCC7";
      case CalculusName::RCC5: return "RCC5";
    }
    return "?";
  }
};

inline std::optional<CalculusName> parse_calculus_name(std::string_view s) {
  if (s == "rcc11" || s == "RCC11") return CalculusName::RCC11;
  if (s == "rcc8" || s == "RCC8") return CalculusName::RCC8;
  if (s == "rcc7" || s == "RCC7") return CalculusName::RCC7;
  if (s == "rcc5" || s == "RCC5") return CalculusName::RCC5;
  return std::nullopt;
}

inline const Calculus& calculus(CalculusName name) {
  using B = BaseRel;
  static const Calculus rcc11 = [] {
    Calculus c{CalculusName::RCC11, {}, {"EQ", "TPP", "TPPI", "NTPP", "NTPPI", "PON"}};
    for (BaseRel r : kAllBaseRels) c.blocks.push_back({std::string(token(r)), RelSet(r)});
    return c;
  }();
  static const Calculus rcc8{CalculusName::RCC8,
                             {{"EQ", {B::EQ}},
                              {"TPP", {B::TPP}},
                              {"TPPI", {B::TPPI}},
                              {"NTPP", {B::NTPP}},
                              {"NTPPI", {B::NTPPI}},
                              {"PO", {B::PON, B::PODY, B::PODZ}},
                              {"EC", {B::ECN, B::ECD}},
                              {"DC", {B::DC}}},
                             {}};
  static const Calculus rcc7{CalculusName::RCC7,
                             {{"EQ", {B::EQ}},
                              {"PP", {B::TPP, B::NTPP}},
                              {"PPI", {B::TPPI, B::NTPPI}},
                              {"PON", {B::PON}},
                              {"POD", {B::PODY, B::PODZ}},
                              {"ECD", {B::ECD}},
                              {"DN", {B::ECN, B::DC}}},
                             {"EQ", "PP", "PPI", "PON"}};
  static const Calculus rcc5{CalculusName::RCC5,
                             {{"EQ", {B::EQ}},
                              {"PP", {B::TPP, B::NTPP}},
                              {"PPI", {B::TPPI, B::NTPPI}},
                              {"PO", {B::PON, B::PODY, B::PODZ}},
                              {"DR", {B::ECN, B::ECD, B::DC}}},
                             {}};
  switch (name) {
    case CalculusName::RCC11: return rcc11;
    case CalculusName::RCC8: return rcc8;
    case CalculusName::RCC7: return rcc7;
    case CalculusName::RCC5: return rcc5;
  }
  throw std::invalid_argument("unknown calculus");
}

/// Label of the block containing r.
inline const std::string& coarsen(BaseRel r, const Calculus& c) {
  for (const auto& b : c.blocks)
    if (b.members.contains(r)) return b.label;
  throw std::logic_error("calculus is not a partition");
}

/// Members of the block with this label. Throws std::invalid_argument.
inline RelSet expand(std::string_view label, const Calculus& c) {
  for (const auto& b : c.blocks)
    if (b.label == label) return b.members;
  throw std::invalid_argument("unknown label '" + std::string(label) + "' in " +
                              std::string(c.display_name()));
}

/// Labels of all blocks meeting s.
inline std::vector<std::string> coarsen_set(RelSet s, const Calculus& c) {
  std::vector<std::string> out;
  for (const auto& b : c.blocks)
    if (!(b.members & s).empty()) out.push_back(b.label);
  return out;
}

/// Blocks pairwise disjoint and jointly covering all 11 base relations.
inline bool is_partition(const Calculus& c) {
  RelSet seen;
  for (const auto& b : c.blocks) {
    if (b.members.empty() || !(b.members & seen).empty()) return false;
    seen |= b.members;
  }
  return seen.is_universal();
}

/// Image of a coarse label under an element-wise base map, as coarse labels.
/// A single label means the map is well defined on the coarse calculus.
template <typename F>
std::vector<std::string> map_label(std::string_view label, const Calculus& c, F&& f) {
  return coarsen_set(map_set(expand(label, c), f), c);
}

inline std::vector<std::string> coarse_converse(std::string_view label, const Calculus& c) {
  return map_label(label, c, [](BaseRel r) { return converse(r); });
}
inline std::vector<std::string> coarse_dual(std::string_view label, DualSide side, const Calculus& c) {
  return map_label(label, c, [side](BaseRel r) { return dual(r, side); });
}

struct ReductionStats {
  int r = 0;  // relations in the calculus
  int s = 0;  // size of the dual generating set
  int m = 0;  // self-converse generators other than EQ
  int n = 0;  // generators that are not self-converse
  int total = 0;  // compositions that must be computed: (m+n)(m+n+1)/2
  long ratio_num = 0;
  long ratio_den = 1;  // total / r^2, reduced

  double ratio() const { return static_cast<double>(ratio_num) / static_cast<double>(ratio_den); }
};

/// Throws std::invalid_argument for a calculus without a dual generating set.
inline ReductionStats reduction_stats(const Calculus& c) {
  if (c.dual_generators.empty())
    throw std::invalid_argument(std::string(c.display_name()) + " has no declared dual generating set");
  ReductionStats st;
  st.r = static_cast<int>(c.blocks.size());
  st.s = static_cast<int>(c.dual_generators.size());
  for (const auto& g : c.dual_generators) {
    if (g == "EQ") continue;
    auto conv = coarse_converse(g, c);
    if (conv.size() == 1 && conv.front() == g)
      ++st.m;
    else
      ++st.n;
  }
  st.total = (st.m + st.n) * (st.m + st.n + 1) / 2;
  long num = st.total, den = static_cast<long>(st.r) * st.r;
  long g = std::gcd(num, den);
  st.ratio_num = num / g;
  st.ratio_den = den / g;
  return st;
}

}  // namespace rcc11
