#pragma once

// Random exact regions with a prescribed relation, and the brute-force
// composition observer built on them.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rcc11/disk/classify.hpp"
#include "rcc11/random.hpp"
#include "rcc11/relation.hpp"

namespace rcc11::disk {

/// A rational point on the unit circle, ((1−t²)/(1+t²), 2t/(1+t²)) for
/// rational t, or (−1, 0).
inline Point rational_direction(Rng& rng, int spread = 12) {
  if (rng.uniform(0, 4 * spread) == 0) return {Rational(-1), Rational(0)};
  Rational t(rng.uniform(-spread, spread), rng.uniform(1, spread));
  Rational den = 1 + t * t;
  return {(1 - t * t) / den, 2 * t / den};
}

/// Strictly between lo and hi.
inline Rational random_between(Rng& rng, const Rational& lo, const Rational& hi) {
  auto n = rng.uniform(2, 12);
  auto k = rng.uniform(1, n - 1);
  return lo + (hi - lo) * Rational(k, n);
}

inline Rational random_radius(Rng& rng) { return Rational(rng.uniform(1, 12), rng.uniform(1, 4)); }

inline DiskRegion random_region(Rng& rng) {
  Point c{Rational(rng.uniform(-20, 20), 2), Rational(rng.uniform(-20, 20), 2)};
  return {rng.coin() ? Polarity::Disk : Polarity::Codisk, c, random_radius(rng)};
}

/// A region x of polarity px whose circle stands in configuration k to the
/// circle of b, with x in the A role.
inline DiskRegion place_in_config(Rng& rng, const DiskRegion& b, Polarity px, CircleConfig k) {
  const Rational& rb = b.radius();
  Rational rx, dist;
  switch (k) {
    case CircleConfig::Separate:
      rx = random_radius(rng);
      dist = rx + rb + random_between(rng, Rational(0), rx + rb);
      break;
    case CircleConfig::ExternalTangent:
      rx = random_radius(rng);
      dist = rx + rb;
      break;
    case CircleConfig::Crossing: {
      rx = random_radius(rng);
      Rational lo = rx > rb ? rx - rb : rb - rx;
      dist = random_between(rng, lo, rx + rb);
      break;
    }
    case CircleConfig::TangentAInB:
      rx = random_between(rng, Rational(0), rb);
      dist = rb - rx;
      break;
    case CircleConfig::TangentBInA:
      rx = rb + random_radius(rng);
      dist = rx - rb;
      break;
    case CircleConfig::NestedAInB:
      rx = random_between(rng, Rational(0), rb);
      dist = rng.uniform(0, 3) == 0 ? Rational(0) : random_between(rng, Rational(0), rb - rx);
      break;
    case CircleConfig::NestedBInA:
      rx = rb + random_radius(rng);
      dist = rng.uniform(0, 3) == 0 ? Rational(0) : random_between(rng, Rational(0), rx - rb);
      break;
    case CircleConfig::Coincident:
      rx = rb;
      dist = 0;
      break;
  }
  return {px, b.center() + dist * rational_direction(rng), rx};
}

/// A region x with classify(x, b) = r. The polarity of x is drawn among
/// those that admit r against b.
inline DiskRegion generate_related(Rng& rng, const DiskRegion& b, BaseRel r) {
  std::vector<std::pair<Polarity, CircleConfig>> options;
  for (Polarity px : {Polarity::Disk, Polarity::Codisk})
    if (auto k = config_for(px, b.polarity(), r)) options.emplace_back(px, *k);
  if (options.empty()) throw std::logic_error("relation not realizable against this region");
  const auto& [px, k] = rng.pick(options);
  DiskRegion x = place_in_config(rng, b, px, k);
  if (classify(x, b) != r) throw std::logic_error("generated region has the wrong relation");
  return x;
}

/// A pair (a, b) with classify(a, b) = r, deterministic in the seed.
inline std::pair<DiskRegion, DiskRegion> generate_pair(BaseRel r, std::uint64_t seed) {
  Rng rng(seed);
  DiskRegion b = random_region(rng);
  DiskRegion a = generate_related(rng, b, r);
  return {a, b};
}

struct Observation {
  RelSet observed;
  int draws = 0;
  int failures = 0;  // draws where generation failed and were skipped
};

/// Relations seen between a and c over random triples a r b, b s c.
inline Observation observe_cell(BaseRel r, BaseRel s, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  Rng rng(seed);
  Observation out;
  for (int i = 0; i < trials; ++i) {
    ++out.draws;
    try {
      DiskRegion b = random_region(rng);
      DiskRegion a = generate_related(rng, b, r);
      DiskRegion c = generate_related(rng, b, converse(s));
      out.observed.insert(classify(a, c));
    } catch (const std::logic_error&) {
      ++out.failures;
    }
  }
  if (out.failures == out.draws) throw std::runtime_error("every observation draw failed");
  return out;
}

}  // namespace rcc11::disk
