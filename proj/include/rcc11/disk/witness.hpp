#pragma once

// Intermediate regions: given a and c, find z with a r z and z s c.
//
// Candidates come from three sources, all checked exactly:
//   1. circles whose centers lie on the line through the centers of a and c,
//      spanning pairs of notable points on that line;
//   2. circles tangent to a (or c, or both) along a rational direction, the
//      radius solved from the tangency equation when both are required;
//   3. random rational circles.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcc11/disk/generate.hpp"
#include "rcc11/golden_table.hpp"

namespace rcc11::disk {

struct WitnessResult {
  std::optional<DiskRegion> z;
  int candidates = 0;

  explicit operator bool() const { return z.has_value(); }
};

inline constexpr int kDefaultWitnessBudget = 10000;

namespace detail {

struct WitnessSearch {
  BaseRel r, s;
  const DiskRegion& a;
  const DiskRegion& c;
  int budget;
  WitnessResult result;

  bool exhausted() const { return result.z.has_value() || result.candidates >= budget; }

  bool attempt(Polarity p, const Point& center, const Rational& radius) {
    if (exhausted() || radius <= 0) return result.z.has_value();
    ++result.candidates;
    DiskRegion z(p, center, radius);
    if (classify(a, z) == r && classify(z, c) == s) result.z = z;
    return result.z.has_value();
  }
  bool attempt(const DiskRegion& z) { return attempt(z.polarity(), z.center(), z.radius()); }
};

inline bool is_tangent(CircleConfig k) {
  return k == CircleConfig::ExternalTangent || k == CircleConfig::TangentAInB || k == CircleConfig::TangentBInA;
}

// +1 when the tangency is external, −1 when internal
inline int tangency_sign(CircleConfig k) { return k == CircleConfig::ExternalTangent ? 1 : -1; }

inline Rational random_scale(Rng& rng, const Rational& unit) {
  Rational v = unit * Rational(rng.uniform(1, 40), rng.uniform(1, 20));
  if (rng.coin()) v /= Rational(BigInt(1) << static_cast<unsigned>(rng.uniform(1, 8)));
  return v;
}

// ((1−t²)/(1+t²), 2t/(1+t²)), the unit vector at angle 2·atan(t)
inline Point unit_from_half_angle(const Rational& t) {
  const Rational den = 1 + t * t;
  return {(1 - t * t) / den, 2 * t / den};
}

// √q to within 2^-32 relative to the denominator
inline Rational approx_sqrt(const Rational& q) {
  const BigInt scale = BigInt(1) << 64;
  const BigInt n = boost::multiprecision::numerator(q) * scale * scale;
  const BigInt d = boost::multiprecision::denominator(q);
  const BigInt nd = n * d;
  return Rational(BigInt(boost::multiprecision::sqrt(nd)), BigInt(d * scale));
}

}  // namespace detail

/// Throws std::invalid_argument when classify(a, c) is not in the golden
/// cell for (r, s); no witness can exist then.
inline WitnessResult find_witness(BaseRel r, BaseRel s, const DiskRegion& a, const DiskRegion& c,
                                  int budget = kDefaultWitnessBudget, std::uint64_t seed = 0) {
  if (!golden_table().entries(r, s).contains(classify(a, c)))
    throw std::invalid_argument("relation of the endpoints is not in the composition cell");
  detail::WitnessSearch st{r, s, a, c, budget, {}};

  // relations that determine z outright
  if (r == BaseRel::EQ) return st.attempt(a), st.result;
  if (s == BaseRel::EQ) return st.attempt(c), st.result;
  if (r == BaseRel::ECD) return st.attempt(complement(a)), st.result;
  if (s == BaseRel::ECD) return st.attempt(complement(c)), st.result;

  struct Option {
    Polarity pz;
    CircleConfig k1;  // circle of a against circle of z
    CircleConfig k2;  // circle of z against circle of c
  };
  std::vector<Option> options;
  for (Polarity pz : {Polarity::Disk, Polarity::Codisk}) {
    auto k1 = config_for(a.polarity(), pz, r);
    auto k2 = config_for(pz, c.polarity(), s);
    if (k1 && k2) options.push_back({pz, *k1, *k2});
  }
  if (options.empty()) return st.result;

  for (const auto& o : options) {
    if (o.k1 == CircleConfig::Coincident && st.attempt(o.pz, a.center(), a.radius())) return st.result;
    if (o.k2 == CircleConfig::Coincident && st.attempt(o.pz, c.center(), c.radius())) return st.result;
  }

  const Point ac = c.center() - a.center();
  const Rational unit = a.radius() + c.radius() + abs(ac.x) + abs(ac.y);

  // 1. centers on the line through both centers
  std::optional<Point> axis;
  Rational dist;
  if (ac.x == 0 && ac.y == 0) {
    axis = Point{Rational(1), Rational(0)};
    dist = 0;
  } else if (rational_sqrt(norm2(ac), dist)) {
    axis = (1 / dist) * ac;
  } else {
    // Irrational distance: an exact unit vector close to the true axis. Only
    // the open (non-tangent) configurations can use it, which is enough.
    dist = detail::approx_sqrt(norm2(ac));
    if (ac.x + dist == 0)
      axis = Point{Rational(-1), Rational(0)};
    else
      axis = detail::unit_from_half_angle(ac.y / (ac.x + dist));
  }
  if (axis) {
    std::vector<Rational> pts = {-a.radius(), a.radius(), dist - c.radius(), dist + c.radius(), Rational(0), dist};
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    pts.push_back(pts.front() - unit);
    pts.push_back(pts.back() + unit);
    std::sort(pts.begin(), pts.end());
    // two rounds of midpoints give three interior points in every gap
    std::vector<Rational> all = pts;
    for (int round = 0; round < 2; ++round) {
      std::vector<Rational> next = all;
      for (std::size_t i = 0; i + 1 < all.size(); ++i) next.push_back((all[i] + all[i + 1]) / 2);
      std::sort(next.begin(), next.end());
      all = std::move(next);
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        for (const auto& o : options)
          if (st.attempt(o.pz, a.center() + ((all[i] + all[j]) / 2) * *axis, (all[j] - all[i]) / 2))
            return st.result;
  }

  // 2 and 3. tangency constructions along random directions, then free circles
  Rng rng(seed);
  std::vector<Point> fixed_dirs;
  if (axis) {
    const Point& u = *axis;
    fixed_dirs = {u, Rational(-1) * u, {-u.y, u.x}, {u.y, -u.x}};
  }
  std::size_t round = 0;
  while (!st.exhausted()) {
    const Option& o = options[round % options.size()];
    const Point w = round / options.size() < fixed_dirs.size() ? fixed_dirs[round / options.size()]
                                                               : rational_direction(rng, 40);
    ++round;
    const bool t1 = detail::is_tangent(o.k1), t2 = detail::is_tangent(o.k2);
    if (t1 && t2) {
      // z = a + (ra + σ rz) w with |z − c| = rz + τ rc; linear in rz
      const int sg = detail::tangency_sign(o.k1), tau = detail::tangency_sign(o.k2);
      const Point v = a.center() - c.center() + a.radius() * w;
      const Rational den = 2 * (sg * dot(v, w) - tau * c.radius());
      if (den != 0) {
        const Rational rz = (c.radius() * c.radius() - norm2(v)) / den;
        st.attempt(o.pz, a.center() + (a.radius() + sg * rz) * w, rz);
      }
      // the same with the roles of the two tangencies swapped
      if (!st.exhausted()) {
        const Point v2 = c.center() - a.center() + c.radius() * w;
        const Rational den2 = 2 * (tau * dot(v2, w) - sg * a.radius());
        if (den2 != 0) {
          const Rational rz = (a.radius() * a.radius() - norm2(v2)) / den2;
          st.attempt(o.pz, c.center() + (c.radius() + tau * rz) * w, rz);
        }
      }
    } else if (t1) {
      const Rational rz = detail::random_scale(rng, unit);
      st.attempt(o.pz, a.center() + (a.radius() + detail::tangency_sign(o.k1) * rz) * w, rz);
    } else if (t2) {
      const Rational rz = detail::random_scale(rng, unit);
      st.attempt(o.pz, c.center() + (c.radius() + detail::tangency_sign(o.k2) * rz) * w, rz);
    } else {
      const Point mid = Rational(1, 2) * (a.center() + c.center());
      const Point base = rng.pick(std::vector<Point>{a.center(), c.center(), mid});
      st.attempt(o.pz, base + detail::random_scale(rng, unit) * w, detail::random_scale(rng, unit));
    }
  }
  return st.result;
}

enum class SplitMode { NtppNtpp, TppNtpp, NtppTpp };

inline std::optional<SplitMode> parse_split_mode(std::string_view s) {
  if (s == "ntpp-ntpp") return SplitMode::NtppNtpp;
  if (s == "tpp-ntpp") return SplitMode::TppNtpp;
  if (s == "ntpp-tpp") return SplitMode::NtppTpp;
  return std::nullopt;
}

/// A region b between a and c for a NTPP c, with (a,b) and (b,c) related as
/// the mode names. Throws std::invalid_argument if a NTPP c fails.
inline DiskRegion interpolate(const DiskRegion& a, const DiskRegion& c, SplitMode mode) {
  if (classify(a, c) != BaseRel::NTPP) throw std::invalid_argument("interpolate needs a NTPP c");
  const BaseRel want_ab = mode == SplitMode::TppNtpp ? BaseRel::TPP : BaseRel::NTPP;
  const BaseRel want_bc = mode == SplitMode::NtppTpp ? BaseRel::TPP : BaseRel::NTPP;
  const Point e{Rational(1), Rational(0)};
  const Rational& ra = a.radius();
  const Rational& rc = c.radius();

  // Shrinks a free parameter until the construction fits; every family
  // below converges to a valid region as the parameter goes to 0.
  auto shrink = [&](Rational delta, auto make) -> DiskRegion {
    for (int i = 0; i < 256; ++i, delta /= 2) {
      DiskRegion b = make(delta);
      if (classify(a, b) == want_ab && classify(b, c) == want_bc) return b;
    }
    throw std::logic_error("interpolation did not converge");
  };

  if (a.is_disk() && c.is_disk()) {
    switch (mode) {
      case SplitMode::NtppNtpp:
        return {Polarity::Disk, Rational(1, 2) * (a.center() + c.center()), (ra + rc) / 2};
      case SplitMode::TppNtpp:
        return shrink((rc - ra) / 6, [&](const Rational& d) {
          return DiskRegion(Polarity::Disk, a.center() + d * e, ra + d);
        });
      case SplitMode::NtppTpp:
        return shrink((rc - ra) / 6, [&](const Rational& d) {
          return DiskRegion(Polarity::Disk, c.center() + d * e, rc - d);
        });
    }
  }
  if (!a.is_disk() && !c.is_disk()) {
    switch (mode) {
      case SplitMode::NtppNtpp:
        return {Polarity::Codisk, Rational(1, 2) * (a.center() + c.center()), (ra + rc) / 2};
      case SplitMode::TppNtpp:
        return shrink((ra - rc) / 6, [&](const Rational& d) {
          return DiskRegion(Polarity::Codisk, a.center() + d * e, ra - d);
        });
      case SplitMode::NtppTpp:
        return shrink((ra - rc) / 6, [&](const Rational& d) {
          return DiskRegion(Polarity::Codisk, c.center() + d * e, rc + d);
        });
    }
  }
  // a a disk, c a complement disk, the two disks apart
  Rational d0 = ra;
  Rational dist;
  if (rational_sqrt(norm2(c.center() - a.center()), dist)) d0 = (dist - ra - rc) / 3;
  switch (mode) {
    case SplitMode::NtppNtpp:
      return shrink(d0, [&](const Rational& d) { return DiskRegion(Polarity::Disk, a.center(), ra + d); });
    case SplitMode::TppNtpp:
      return shrink(d0, [&](const Rational& d) {
        return DiskRegion(Polarity::Disk, a.center() + d * e, ra + d);
      });
    case SplitMode::NtppTpp:
      return shrink(d0, [&](const Rational& d) {
        return DiskRegion(Polarity::Codisk, c.center() + d * e, rc + d);
      });
  }
  throw std::logic_error("unreachable");
}

}  // namespace rcc11::disk
