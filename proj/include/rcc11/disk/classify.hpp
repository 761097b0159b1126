#pragma once

// RCC11 relations between regions of the complemented closed disk domain.
//
// Everything is decided from exact signs of
//   s_plus  = sign(d² − (ra + rb)²)
//   s_minus = sign(d² − (ra − rb)²)
//   order   = sign(ra − rb)
// with d the distance between the centers. These fix the configuration of
// the two boundary circles; together with the two polarities that fixes the
// 9-intersection matrix and hence the relation.

#include <array>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rcc11/disk/region.hpp"
#include "rcc11/relation.hpp"

namespace rcc11::disk {

struct SignTriple {
  int s_plus;
  int s_minus;
  int order;

  bool operator==(const SignTriple&) const = default;
};

inline SignTriple sign_triple(const DiskRegion& a, const DiskRegion& b) {
  Rational d2 = norm2(a.center() - b.center());
  Rational sum = a.radius() + b.radius();
  Rational diff = a.radius() - b.radius();
  return {sign(d2 - sum * sum), sign(d2 - diff * diff), sign(diff)};
}

/// Relative position of two circles A and B.
enum class CircleConfig {
  Separate,         // disks disjoint
  ExternalTangent,  // disks touch from outside
  Crossing,         // circles cross at two points
  TangentAInB,      // disk A inside disk B, circles touch
  TangentBInA,
  NestedAInB,       // disk A inside the open disk B
  NestedBInA,
  Coincident,
};

inline constexpr std::array<CircleConfig, 8> kAllConfigs = {
    CircleConfig::Separate,    CircleConfig::ExternalTangent, CircleConfig::Crossing,
    CircleConfig::TangentAInB, CircleConfig::TangentBInA,     CircleConfig::NestedAInB,
    CircleConfig::NestedBInA,  CircleConfig::Coincident};

inline const char* config_name(CircleConfig c) {
  switch (c) {
    case CircleConfig::Separate: return "separate";
    case CircleConfig::ExternalTangent: return "external-tangent";
    case CircleConfig::Crossing: return "crossing";
    case CircleConfig::TangentAInB: return "tangent-a-in-b";
    case CircleConfig::TangentBInA: return "tangent-b-in-a";
    case CircleConfig::NestedAInB: return "nested-a-in-b";
    case CircleConfig::NestedBInA: return "nested-b-in-a";
    case CircleConfig::Coincident: return "coincident";
  }
  return "?";
}

/// The configuration for a sign triple; nullopt for combinations no pair of
/// positive radii can produce.
constexpr std::optional<CircleConfig> config_from_signs(SignTriple t) {
  if (t.s_plus > 0) {
    if (t.s_minus > 0) return CircleConfig::Separate;
    return std::nullopt;
  }
  if (t.s_plus == 0) {
    if (t.s_minus > 0) return CircleConfig::ExternalTangent;
    return std::nullopt;
  }
  if (t.s_minus > 0) return CircleConfig::Crossing;
  if (t.s_minus == 0) {
    if (t.order < 0) return CircleConfig::TangentAInB;
    if (t.order > 0) return CircleConfig::TangentBInA;
    return CircleConfig::Coincident;
  }
  if (t.order < 0) return CircleConfig::NestedAInB;
  if (t.order > 0) return CircleConfig::NestedBInA;
  return std::nullopt;
}

inline CircleConfig circle_config(const DiskRegion& a, const DiskRegion& b) {
  auto c = config_from_signs(sign_triple(a, b));
  if (!c) throw std::logic_error("infeasible sign triple from concrete circles");
  return *c;
}

/// Configuration with the roles of A and B exchanged.
constexpr CircleConfig swap_roles(CircleConfig c) {
  switch (c) {
    case CircleConfig::TangentAInB: return CircleConfig::TangentBInA;
    case CircleConfig::TangentBInA: return CircleConfig::TangentAInB;
    case CircleConfig::NestedAInB: return CircleConfig::NestedBInA;
    case CircleConfig::NestedBInA: return CircleConfig::NestedAInB;
    default: return c;
  }
}

// ---------------------------------------------------------------------------
// 9-intersection

/// Rows/columns in the order interior, boundary, exterior.
struct NineMatrix {
  std::array<std::array<bool, 3>, 3> m{};

  bool operator==(const NineMatrix&) const = default;

  /// Nine 0/1 digits, row-major, comma separated.
  std::string to_csv() const {
    std::string out;
    for (const auto& row : m)
      for (bool v : row) {
        if (!out.empty()) out += ',';
        out += v ? '1' : '0';
      }
    return out;
  }
};

inline std::ostream& operator<<(std::ostream& os, const NineMatrix& n) { return os << n.to_csv(); }

constexpr NineMatrix make_matrix(int r0c0, int r0c1, int r0c2, int r1c0, int r1c1, int r1c2, int r2c0,
                                 int r2c1, int r2c2) {
  NineMatrix n;
  n.m = {{{r0c0 != 0, r0c1 != 0, r0c2 != 0}, {r1c0 != 0, r1c1 != 0, r1c2 != 0}, {r2c0 != 0, r2c1 != 0, r2c2 != 0}}};
  return n;
}

/// The matrix of each RCC11 relation on the domain, indexed by BaseRel.
inline constexpr std::array<NineMatrix, kNumBaseRels> kRelationMatrices = {
    make_matrix(1, 0, 0, 0, 1, 0, 0, 0, 1),  // EQ
    make_matrix(1, 0, 0, 1, 1, 0, 1, 1, 1),  // TPP
    make_matrix(1, 1, 1, 0, 1, 1, 0, 0, 1),  // TPPI
    make_matrix(1, 0, 0, 1, 0, 0, 1, 1, 1),  // NTPP
    make_matrix(1, 1, 1, 0, 0, 1, 0, 0, 1),  // NTPPI
    make_matrix(1, 1, 1, 1, 1, 1, 1, 1, 1),  // PON
    make_matrix(1, 1, 1, 1, 1, 0, 1, 0, 0),  // PODY
    make_matrix(1, 1, 1, 1, 0, 0, 1, 0, 0),  // PODZ
    make_matrix(0, 0, 1, 0, 1, 1, 1, 1, 1),  // ECN
    make_matrix(0, 0, 1, 0, 1, 0, 1, 0, 0),  // ECD
    make_matrix(0, 0, 1, 0, 0, 1, 1, 1, 1),  // DC
};

/// The three point sets any region of the domain decomposes into.
enum class Part { OpenDisk, Circle, Outside };

/// Whether part `pa` of circle A meets part `pb` of circle B.
constexpr bool parts_meet(Part pa, Part pb, CircleConfig c) {
  using C = CircleConfig;
  const bool a_in_b = c == C::Coincident || c == C::TangentAInB || c == C::NestedAInB;  // disk A ⊆ disk B
  const bool b_in_a = c == C::Coincident || c == C::TangentBInA || c == C::NestedBInA;
  const bool circles_meet = c != C::Separate && c != C::NestedAInB && c != C::NestedBInA;
  if (pa == Part::Outside && pb == Part::Outside) return true;
  if (pa == Part::OpenDisk && pb == Part::OpenDisk) return c != C::Separate && c != C::ExternalTangent;
  if (pa == Part::OpenDisk && pb == Part::Outside) return !a_in_b;
  if (pa == Part::Outside && pb == Part::OpenDisk) return !b_in_a;
  if (pa == Part::Circle && pb == Part::Circle) return circles_meet;
  if (pa == Part::OpenDisk && pb == Part::Circle)
    return c == C::Crossing || c == C::TangentBInA || c == C::NestedBInA;
  if (pa == Part::Circle && pb == Part::OpenDisk)
    return c == C::Crossing || c == C::TangentAInB || c == C::NestedAInB;
  if (pa == Part::Circle && pb == Part::Outside) return !a_in_b;
  return !b_in_a;  // Outside, Circle
}

constexpr std::array<Part, 3> region_parts(Polarity p) {
  return p == Polarity::Disk ? std::array<Part, 3>{Part::OpenDisk, Part::Circle, Part::Outside}
                             : std::array<Part, 3>{Part::Outside, Part::Circle, Part::OpenDisk};
}

constexpr NineMatrix nine_matrix(Polarity pa, Polarity pb, CircleConfig c) {
  NineMatrix n;
  auto ra = region_parts(pa);
  auto rb = region_parts(pb);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) n.m[i][j] = parts_meet(ra[i], rb[j], c);
  return n;
}

inline NineMatrix nine_matrix(const DiskRegion& a, const DiskRegion& b) {
  return nine_matrix(a.polarity(), b.polarity(), circle_config(a, b));
}

inline std::optional<BaseRel> relation_of_matrix(const NineMatrix& n) {
  for (BaseRel r : kAllBaseRels)
    if (kRelationMatrices[index_of(r)] == n) return r;
  return std::nullopt;
}

/// Relation for a polarity pair and circle configuration.
inline BaseRel relation_for(Polarity pa, Polarity pb, CircleConfig c) {
  auto r = relation_of_matrix(nine_matrix(pa, pb, c));
  if (!r) throw std::logic_error("9-intersection matrix matches no RCC11 relation");
  return *r;
}

/// The configuration that yields `r` for this polarity pair, if any.
inline std::optional<CircleConfig> config_for(Polarity pa, Polarity pb, BaseRel r) {
  for (CircleConfig c : kAllConfigs)
    if (relation_for(pa, pb, c) == r) return c;
  return std::nullopt;
}

/// Classification through the 9-intersection matrix.
inline BaseRel classify(const DiskRegion& a, const DiskRegion& b) {
  return relation_for(a.polarity(), b.polarity(), circle_config(a, b));
}

// ---------------------------------------------------------------------------
// Set-theoretic predicates, computed directly from the radii and center
// distance without going through the circle configuration.

struct Predicates {
  bool equal;
  bool subset;          // x ⊆ y
  bool superset;        // y ⊆ x
  bool boundaries_meet;
  bool interiors_meet;
  bool meet;            // x ∩ y ≠ ∅
  bool union_is_plane;
};

inline Predicates predicates(const DiskRegion& x, const DiskRegion& y) {
  const Rational d2 = norm2(x.center() - y.center());
  const Rational& rx = x.radius();
  const Rational& ry = y.radius();
  const Rational sum2 = (rx + ry) * (rx + ry);
  const Rational diff2 = (rx - ry) * (rx - ry);
  // closed disk of the first circle inside the closed disk of the second
  const bool dx_in_dy = rx <= ry && d2 <= diff2;
  const bool dy_in_dx = ry <= rx && d2 <= diff2;
  // closed disk strictly inside the other open disk
  const bool dx_in_open_dy = rx < ry && d2 < diff2;
  const bool dy_in_open_dx = ry < rx && d2 < diff2;

  Predicates p{};
  p.equal = x == y;
  p.boundaries_meet = diff2 <= d2 && d2 <= sum2;
  const bool xd = x.is_disk(), yd = y.is_disk();
  if (xd && yd) {
    p.subset = dx_in_dy;
    p.superset = dy_in_dx;
    p.interiors_meet = d2 < sum2;
    p.meet = d2 <= sum2;
    p.union_is_plane = false;
  } else if (xd && !yd) {
    p.subset = d2 >= sum2;
    p.superset = false;
    p.interiors_meet = !dx_in_dy;
    p.meet = !dx_in_open_dy;
    p.union_is_plane = dy_in_dx;
  } else if (!xd && yd) {
    p.subset = false;
    p.superset = d2 >= sum2;
    p.interiors_meet = !dy_in_dx;
    p.meet = !dy_in_open_dx;
    p.union_is_plane = dx_in_dy;
  } else {
    p.subset = dy_in_dx;
    p.superset = dx_in_dy;
    p.interiors_meet = true;
    p.meet = true;
    p.union_is_plane = d2 >= sum2;
  }
  return p;
}

/// Truth of each topological characterization clause, indexed by BaseRel.
inline std::array<bool, kNumBaseRels> clause_values(const DiskRegion& x, const DiskRegion& y) {
  const Predicates p = predicates(x, y);
  std::array<bool, kNumBaseRels> h{};
  auto set = [&](BaseRel r, bool v) { h[index_of(r)] = v; };
  set(BaseRel::EQ, p.equal);
  set(BaseRel::TPP, p.subset && !p.equal && p.boundaries_meet);
  set(BaseRel::TPPI, p.superset && !p.equal && p.boundaries_meet);
  set(BaseRel::NTPP, p.subset && !p.equal && !p.boundaries_meet);
  set(BaseRel::NTPPI, p.superset && !p.equal && !p.boundaries_meet);
  set(BaseRel::PON, p.interiors_meet && !p.subset && !p.superset && !p.union_is_plane);
  set(BaseRel::PODY, p.interiors_meet && p.boundaries_meet && p.union_is_plane);
  set(BaseRel::PODZ, p.interiors_meet && !p.boundaries_meet && p.union_is_plane);
  set(BaseRel::ECN, !p.interiors_meet && p.meet && !p.union_is_plane);
  set(BaseRel::ECD, !p.interiors_meet && p.meet && p.union_is_plane);
  set(BaseRel::DC, !p.meet);
  return h;
}

/// Classification through the topological clauses. Throws std::logic_error
/// unless exactly one clause holds.
inline BaseRel classify_by_clauses(const DiskRegion& x, const DiskRegion& y) {
  auto h = clause_values(x, y);
  int count = 0;
  BaseRel found = BaseRel::EQ;
  for (BaseRel r : kAllBaseRels)
    if (h[index_of(r)]) {
      ++count;
      found = r;
    }
  if (count != 1) throw std::logic_error(std::to_string(count) + " disk clauses hold for one pair");
  return found;
}

}  // namespace rcc11::disk
