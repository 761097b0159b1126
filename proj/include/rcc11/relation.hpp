#pragma once

// RCC11 base relations and relation sets.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rcc11 {

/// The eleven RCC11 base relations. The numeric values are the canonical
/// serialization order and must never change.
enum class BaseRel : std::uint8_t {
  EQ = 0,
  TPP,
  TPPI,
  NTPP,
  NTPPI,
  PON,
  PODY,
  PODZ,
  ECN,
  ECD,
  DC,
};

inline constexpr int kNumBaseRels = 11;

inline constexpr std::array<BaseRel, kNumBaseRels> kAllBaseRels = {
    BaseRel::EQ,   BaseRel::TPP,  BaseRel::TPPI, BaseRel::NTPP,
    BaseRel::NTPPI, BaseRel::PON, BaseRel::PODY, BaseRel::PODZ,
    BaseRel::ECN,  BaseRel::ECD,  BaseRel::DC};

inline constexpr std::array<std::string_view, kNumBaseRels> kBaseRelTokens = {
    "EQ", "TPP", "TPPI", "NTPP", "NTPPI", "PON", "PODY", "PODZ", "ECN", "ECD", "DC"};

constexpr int index_of(BaseRel r) { return static_cast<int>(r); }

constexpr BaseRel base_rel_at(int i) {
  if (i < 0 || i >= kNumBaseRels) throw std::out_of_range("base relation index");
  return static_cast<BaseRel>(i);
}

constexpr std::string_view token(BaseRel r) { return kBaseRelTokens[index_of(r)]; }

inline std::optional<BaseRel> parse_base_rel(std::string_view s) {
  for (int i = 0; i < kNumBaseRels; ++i)
    if (kBaseRelTokens[i] == s) return static_cast<BaseRel>(i);
  return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, BaseRel r) { return os << token(r); }

/// Converse: TPP<->TPPI, NTPP<->NTPPI, everything else is symmetric.
constexpr BaseRel converse(BaseRel r) {
  switch (r) {
    case BaseRel::TPP: return BaseRel::TPPI;
    case BaseRel::TPPI: return BaseRel::TPP;
    case BaseRel::NTPP: return BaseRel::NTPPI;
    case BaseRel::NTPPI: return BaseRel::NTPP;
    default: return r;
  }
}

enum class DualSide { Right, Left };

// Rows of the RCC11 dual table, indexed by BaseRel.
//   right: x R^d y  iff  x R y'
//   left:  x ^dR y  iff  x' R y
inline constexpr std::array<BaseRel, kNumBaseRels> kRightDual = {
    BaseRel::ECD,  BaseRel::ECN,  BaseRel::PODY, BaseRel::DC,   BaseRel::PODZ, BaseRel::PON,
    BaseRel::TPPI, BaseRel::NTPPI, BaseRel::TPP, BaseRel::EQ,   BaseRel::NTPP};
inline constexpr std::array<BaseRel, kNumBaseRels> kLeftDual = {
    BaseRel::ECD,  BaseRel::PODY, BaseRel::ECN,  BaseRel::PODZ, BaseRel::DC,   BaseRel::PON,
    BaseRel::TPP,  BaseRel::NTPP, BaseRel::TPPI, BaseRel::EQ,   BaseRel::NTPPI};

constexpr BaseRel dual(BaseRel r, DualSide side) {
  return side == DualSide::Right ? kRightDual[index_of(r)] : kLeftDual[index_of(r)];
}

/// A set of base relations. Stored as an 11-bit mask; the public surface is
/// plain set semantics.
class RelSet {
 public:
  static constexpr std::uint16_t kFullMask = (1u << kNumBaseRels) - 1;

  constexpr RelSet() = default;
  constexpr RelSet(std::initializer_list<BaseRel> rels) {
    for (BaseRel r : rels) insert(r);
  }
  constexpr explicit RelSet(BaseRel r) { insert(r); }

  static constexpr RelSet from_mask(std::uint16_t mask) {
    RelSet s;
    s.mask_ = mask & kFullMask;
    return s;
  }
  static constexpr RelSet universal() { return from_mask(kFullMask); }
  static constexpr RelSet empty_set() { return {}; }

  constexpr std::uint16_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool is_universal() const { return mask_ == kFullMask; }
  constexpr int size() const {
    int n = 0;
    for (std::uint16_t m = mask_; m; m &= m - 1) ++n;
    return n;
  }
  constexpr bool contains(BaseRel r) const { return (mask_ >> index_of(r)) & 1u; }
  constexpr bool subset_of(RelSet o) const { return (mask_ & ~o.mask_) == 0; }

  /// The single member, if the set is atomic.
  constexpr std::optional<BaseRel> single() const {
    if (size() != 1) return std::nullopt;
    for (BaseRel r : kAllBaseRels)
      if (contains(r)) return r;
    return std::nullopt;
  }

  constexpr void insert(BaseRel r) { mask_ |= static_cast<std::uint16_t>(1u << index_of(r)); }
  constexpr void erase(BaseRel r) { mask_ &= static_cast<std::uint16_t>(~(1u << index_of(r))); }

  constexpr RelSet operator|(RelSet o) const { return from_mask(mask_ | o.mask_); }
  constexpr RelSet operator&(RelSet o) const { return from_mask(mask_ & o.mask_); }
  constexpr RelSet operator-(RelSet o) const { return from_mask(mask_ & ~o.mask_); }
  constexpr RelSet complement() const { return from_mask(~mask_); }
  constexpr RelSet& operator|=(RelSet o) { mask_ |= o.mask_; return *this; }
  constexpr RelSet& operator&=(RelSet o) { mask_ &= o.mask_; return *this; }

  constexpr bool operator==(const RelSet&) const = default;

  class iterator {
   public:
    using value_type = BaseRel;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    constexpr iterator() = default;
    constexpr iterator(std::uint16_t rest) : rest_(rest) {}
    constexpr BaseRel operator*() const { return static_cast<BaseRel>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= static_cast<std::uint16_t>(rest_ - 1); return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint16_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint16_t mask_ = 0;
};

/// Element-wise image of a relation set under a base-relation map.
template <typename F>
constexpr RelSet map_set(RelSet s, F&& f) {
  RelSet out;
  for (BaseRel r : s) out.insert(f(r));
  return out;
}

constexpr RelSet converse(RelSet s) {
  return map_set(s, [](BaseRel r) { return converse(r); });
}

constexpr RelSet dual(RelSet s, DualSide side) {
  return map_set(s, [side](BaseRel r) { return dual(r, side); });
}

/// `EQ|TPP|PON` style rendering in canonical order; empty set renders as "{}".
inline std::string to_string(RelSet s) {
  if (s.empty()) return "{}";
  std::string out;
  for (BaseRel r : s) {
    if (!out.empty()) out += '|';
    out += token(r);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, RelSet s) { return os << to_string(s); }

/// Parses `A|B|C`. Throws std::invalid_argument on an unknown token.
inline RelSet parse_rel_set(std::string_view text) {
  RelSet out;
  if (text == "{}") return out;
  while (!text.empty()) {
    auto bar = text.find('|');
    auto tok = text.substr(0, bar);
    auto r = parse_base_rel(tok);
    if (!r) throw std::invalid_argument("unknown relation token '" + std::string(tok) + "'");
    out.insert(*r);
    if (bar == std::string_view::npos) break;
    text.remove_prefix(bar + 1);
  }
  return out;
}

}  // namespace rcc11
