#pragma once

// Rebuilding the full 11x11 table from 15 generator cells, and checking a
// table against the algebraic laws every RCC11 weak composition table obeys.
//
// Every base relation is either in the dual generating set
// S = {EQ, TPP, TPPI, NTPP, NTPPI, PON} or is the right dual N^d (and the
// left dual ^dM) of a member of S. With
//
//   cell(M, N^d)    = cell(M, N)^d
//   cell(^dM, N)    = ^d cell(M, N)
//   cell(^dM, N^d)  = ^d cell(M, N)^d
//   cell(M, N)      = cell(N~, M~)~
//
// the 15 cells below determine the remaining 106.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rcc11/comp_table.hpp"
#include "rcc11/relation.hpp"

namespace rcc11 {

inline constexpr std::array<BaseRel, 6> kDualGeneratingSet = {
    BaseRel::EQ, BaseRel::TPP, BaseRel::TPPI, BaseRel::NTPP, BaseRel::NTPPI, BaseRel::PON};

constexpr bool in_generating_set(BaseRel r) {
  for (BaseRel g : kDualGeneratingSet)
    if (g == r) return true;
  return false;
}

using RelPair = std::pair<BaseRel, BaseRel>;

/// The 15 ordered pairs whose compositions have to be supplied.
inline constexpr std::array<RelPair, 15> kGeneratorPairs = {{
    {BaseRel::TPP, BaseRel::TPP},     {BaseRel::TPP, BaseRel::TPPI},   {BaseRel::TPP, BaseRel::NTPP},
    {BaseRel::TPP, BaseRel::NTPPI},   {BaseRel::TPP, BaseRel::PON},    {BaseRel::TPPI, BaseRel::TPP},
    {BaseRel::TPPI, BaseRel::NTPP},   {BaseRel::TPPI, BaseRel::PON},   {BaseRel::NTPP, BaseRel::TPP},
    {BaseRel::NTPP, BaseRel::NTPP},   {BaseRel::NTPP, BaseRel::NTPPI}, {BaseRel::NTPP, BaseRel::PON},
    {BaseRel::NTPPI, BaseRel::NTPP},  {BaseRel::NTPPI, BaseRel::PON},  {BaseRel::PON, BaseRel::PON},
}};

inline bool is_generator_pair(BaseRel r, BaseRel s) {
  for (const auto& p : kGeneratorPairs)
    if (p.first == r && p.second == s) return true;
  return false;
}

class GeneratorSet {
 public:
  /// Throws std::invalid_argument for a pair outside the generator domain.
  void set(BaseRel r, BaseRel s, Cell c) {
    if (!is_generator_pair(r, s))
      throw std::invalid_argument("not a generator pair: " + std::string(token(r)) + "," +
                                  std::string(token(s)));
    cells_[{r, s}] = c;
  }
  void set(BaseRel r, BaseRel s, RelSet entries, RelSet marked = {}) { set(r, s, Cell{entries, marked}); }

  std::optional<Cell> get(BaseRel r, BaseRel s) const {
    auto it = cells_.find({r, s});
    if (it == cells_.end()) return std::nullopt;
    return it->second;
  }

  bool complete() const { return cells_.size() == kGeneratorPairs.size(); }
  std::size_t size() const { return cells_.size(); }

  std::vector<RelPair> missing() const {
    std::vector<RelPair> out;
    for (const auto& p : kGeneratorPairs)
      if (!cells_.count(p)) out.push_back(p);
    return out;
  }

 private:
  std::map<RelPair, Cell> cells_;
};

/// The generator compositions realized in the complemented closed disk
/// domain (three NTPP/TPP interpolation identities plus twelve circle
/// cases), with the general-model extensionality marks.
inline GeneratorSet standard_generators() {
  using B = BaseRel;
  GeneratorSet g;
  // interpolation identities
  g.set(B::NTPP, B::NTPP, {B::NTPP});
  g.set(B::TPP, B::NTPP, {B::NTPP});
  g.set(B::NTPP, B::TPP, {B::NTPP});
  // circle cases
  g.set(B::TPP, B::TPP, {B::TPP, B::NTPP});
  g.set(B::TPP, B::TPPI, {B::EQ, B::TPP, B::TPPI, B::PON, B::ECN, B::DC}, {B::PON, B::ECN});
  g.set(B::TPP, B::NTPPI, {B::TPPI, B::NTPPI, B::PON, B::ECN, B::DC}, {B::TPPI, B::PON, B::ECN});
  g.set(B::TPP, B::PON, {B::TPP, B::NTPP, B::PON, B::ECN, B::DC});
  g.set(B::TPPI, B::TPP, {B::EQ, B::TPP, B::TPPI, B::PON, B::PODY, B::PODZ}, {B::PON, B::PODY});
  g.set(B::TPPI, B::NTPP, {B::TPP, B::NTPP, B::PON, B::PODY, B::PODZ}, {B::TPP, B::PON, B::PODY});
  g.set(B::TPPI, B::PON, {B::TPPI, B::NTPPI, B::PON, B::PODY, B::PODZ});
  g.set(B::NTPP, B::NTPPI, {B::EQ, B::TPP, B::TPPI, B::NTPP, B::NTPPI, B::PON, B::ECN, B::DC});
  g.set(B::NTPP, B::PON, {B::TPP, B::NTPP, B::PON, B::ECN, B::DC});
  g.set(B::NTPPI, B::NTPP, {B::EQ, B::TPP, B::TPPI, B::NTPP, B::NTPPI, B::PON, B::PODY, B::PODZ});
  g.set(B::NTPPI, B::PON, {B::TPPI, B::NTPPI, B::PON, B::PODY, B::PODZ});
  g.set(B::PON, B::PON, RelSet::universal());
  return g;
}

struct DerivationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Cell converse_cell(const Cell& c) {
  return map_cell(c, [](BaseRel r) { return converse(r); });
}
inline Cell dual_cell(const Cell& c, DualSide side) {
  return map_cell(c, [side](BaseRel r) { return dual(r, side); });
}

/// Fills all 121 cells from a complete generator set. Deterministic.
/// Throws DerivationError on an incomplete set.
inline CompTable derive_table(const GeneratorSet& g) {
  if (!g.complete()) {
    std::string msg = "incomplete generator set, missing:";
    for (const auto& [r, s] : g.missing()) msg += " " + std::string(token(r)) + "," + std::string(token(s));
    throw DerivationError(msg);
  }

  // Cells over the generating set first.
  std::array<std::array<std::optional<Cell>, kNumBaseRels>, kNumBaseRels> core{};
  for (BaseRel r : kDualGeneratingSet) {
    core[index_of(BaseRel::EQ)][index_of(r)] = Cell{RelSet(r), {}};
    core[index_of(r)][index_of(BaseRel::EQ)] = Cell{RelSet(r), {}};
  }
  for (const auto& [r, s] : kGeneratorPairs) core[index_of(r)][index_of(s)] = *g.get(r, s);
  for (BaseRel m : kDualGeneratingSet) {
    for (BaseRel n : kDualGeneratingSet) {
      auto& slot = core[index_of(m)][index_of(n)];
      if (slot) continue;
      const auto& mirror = core[index_of(converse(n))][index_of(converse(m))];
      if (!mirror || !(is_generator_pair(converse(n), converse(m))))
        throw DerivationError("pair " + std::string(token(m)) + "," + std::string(token(n)) +
                              " is neither a generator nor converse-reachable");
      slot = converse_cell(*mirror);
    }
  }

  CompTable t;
  for (BaseRel a : kAllBaseRels) {
    for (BaseRel b : kAllBaseRels) {
      // a = ^dM with M in S (or a itself), b = N^d with N in S (or b itself).
      bool left = !in_generating_set(a);
      bool right = !in_generating_set(b);
      BaseRel m = left ? dual(a, DualSide::Left) : a;
      BaseRel n = right ? dual(b, DualSide::Right) : b;
      Cell c = *core[index_of(m)][index_of(n)];
      if (right) c = dual_cell(c, DualSide::Right);
      if (left) c = dual_cell(c, DualSide::Left);
      t.cell(a, b) = c;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Validation

enum class Law { NonEmpty, IdentityLeft, IdentityRight, Converse, RightDual, LeftDual };

inline std::string_view law_name(Law l) {
  switch (l) {
    case Law::NonEmpty: return "non-empty";
    case Law::IdentityLeft: return "identity-left";
    case Law::IdentityRight: return "identity-right";
    case Law::Converse: return "converse";
    case Law::RightDual: return "right-dual";
    case Law::LeftDual: return "left-dual";
  }
  return "?";
}

struct Violation {
  Law law;
  BaseRel row;
  BaseRel col;
  Cell expected;  // what the law demands for cell(row, col)
  Cell actual;
};

struct ValidationReport {
  int identities_checked = 0;
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool has(Law law, BaseRel row, BaseRel col) const {
    for (const auto& v : violations)
      if (v.law == law && v.row == row && v.col == col) return true;
    return false;
  }
};

/// Checks non-emptiness, identity, converse and both dual laws on every cell.
/// Marks are compared along with entries.
inline ValidationReport validate_table(const CompTable& t) {
  ValidationReport rep;
  auto check = [&](Law law, BaseRel r, BaseRel s, const Cell& expected) {
    ++rep.identities_checked;
    const Cell& actual = t.cell(r, s);
    if (!(actual == expected)) rep.violations.push_back({law, r, s, expected, actual});
  };

  for (BaseRel r : kAllBaseRels) {
    for (BaseRel s : kAllBaseRels) {
      ++rep.identities_checked;
      if (t.cell(r, s).entries.empty()) rep.violations.push_back({Law::NonEmpty, r, s, {}, t.cell(r, s)});
    }
  }
  for (BaseRel r : kAllBaseRels) {
    check(Law::IdentityLeft, BaseRel::EQ, r, Cell{RelSet(r), {}});
    check(Law::IdentityRight, r, BaseRel::EQ, Cell{RelSet(r), {}});
  }
  for (BaseRel r : kAllBaseRels) {
    for (BaseRel s : kAllBaseRels) {
      check(Law::Converse, r, s, converse_cell(t.cell(converse(s), converse(r))));
      check(Law::RightDual, r, dual(s, DualSide::Right), dual_cell(t.cell(r, s), DualSide::Right));
      check(Law::LeftDual, dual(r, DualSide::Left), s, dual_cell(t.cell(r, s), DualSide::Left));
    }
  }
  return rep;
}

}  // namespace rcc11
