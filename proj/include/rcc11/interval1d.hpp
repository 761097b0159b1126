#pragma once

// Regular closed subsets of the real line with finitely many components:
// closed intervals and rays with exact rational endpoints. Contact is
// nonempty intersection.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rcc11/hole_kind.hpp"
#include "rcc11/lattice_classify.hpp"
#include "rcc11/random.hpp"
#include "rcc11/rational.hpp"

namespace rcc11::interval1d {

/// A rational or ±∞.
struct Endpoint {
  int inf = 0;  // −1, 0 or +1
  Rational value;

  static Endpoint neg_inf() { return {-1, Rational(0)}; }
  static Endpoint pos_inf() { return {1, Rational(0)}; }
  static Endpoint at(Rational v) { return {0, std::move(v)}; }

  bool finite() const { return inf == 0; }

  friend bool operator==(const Endpoint& a, const Endpoint& b) {
    return a.inf == b.inf && (a.inf != 0 || a.value == b.value);
  }
  friend bool operator<(const Endpoint& a, const Endpoint& b) {
    if (a.inf != b.inf) return a.inf < b.inf;
    return a.inf == 0 && a.value < b.value;
  }
  friend bool operator<=(const Endpoint& a, const Endpoint& b) { return !(b < a); }
};

inline std::string to_string(const Endpoint& e) {
  if (e.inf < 0) return "-inf";
  if (e.inf > 0) return "inf";
  return rcc11::to_string(e.value);
}

struct Component {
  Endpoint lo;
  Endpoint hi;
};

class IntervalRegion {
 public:
  const std::vector<Component>& components() const { return parts_; }

  friend bool operator==(const IntervalRegion& a, const IntervalRegion& b) {
    if (a.parts_.size() != b.parts_.size()) return false;
    for (std::size_t i = 0; i < a.parts_.size(); ++i)
      if (!(a.parts_[i].lo == b.parts_[i].lo) || !(a.parts_[i].hi == b.parts_[i].hi)) return false;
    return true;
  }

 private:
  friend IntervalRegion regularize(std::vector<Component> raw);
  std::vector<Component> parts_;
};

/// Sorted, merged form. Degenerate pieces have empty interior and vanish.
/// Throws std::invalid_argument when the result is empty or the whole line.
inline IntervalRegion regularize(std::vector<Component> raw) {
  for (const auto& c : raw)
    if (c.lo.inf > 0 || c.hi.inf < 0) throw std::invalid_argument("interval endpoints out of order");
  std::erase_if(raw, [](const Component& c) { return !(c.lo < c.hi); });
  if (raw.empty()) throw std::invalid_argument("empty region");
  std::sort(raw.begin(), raw.end(), [](const Component& a, const Component& b) { return a.lo < b.lo; });
  IntervalRegion out;
  for (auto& c : raw) {
    if (!out.parts_.empty() && c.lo <= out.parts_.back().hi) {
      if (out.parts_.back().hi < c.hi) out.parts_.back().hi = c.hi;
    } else {
      out.parts_.push_back(std::move(c));
    }
  }
  if (out.parts_.size() == 1 && out.parts_[0].lo.inf < 0 && out.parts_[0].hi.inf > 0)
    throw std::invalid_argument("the whole line is not a region");
  return out;
}

inline IntervalRegion interval(Endpoint lo, Endpoint hi) { return regularize({{std::move(lo), std::move(hi)}}); }
inline IntervalRegion interval(long long lo, long long hi) {
  return interval(Endpoint::at(Rational(lo)), Endpoint::at(Rational(hi)));
}

/// Closure of the set complement.
inline IntervalRegion complement(const IntervalRegion& a) {
  std::vector<Component> out;
  Endpoint prev = Endpoint::neg_inf();
  for (const auto& c : a.components()) {
    if (prev < c.lo) out.push_back({prev, c.lo});
    prev = c.hi;
  }
  if (prev.inf <= 0) out.push_back({prev, Endpoint::pos_inf()});
  return regularize(std::move(out));
}

inline bool leq(const IntervalRegion& a, const IntervalRegion& b) {
  for (const auto& ca : a.components()) {
    bool inside = false;
    for (const auto& cb : b.components())
      if (cb.lo <= ca.lo && ca.hi <= cb.hi) inside = true;
    if (!inside) return false;
  }
  return true;
}

inline bool contact(const IntervalRegion& a, const IntervalRegion& b) {
  for (const auto& ca : a.components())
    for (const auto& cb : b.components())
      if (ca.lo <= cb.hi && cb.lo <= ca.hi) return true;
  return false;
}

inline bool interiors_meet(const IntervalRegion& a, const IntervalRegion& b) {
  for (const auto& ca : a.components())
    for (const auto& cb : b.components())
      if (ca.lo < cb.hi && cb.lo < ca.hi) return true;
  return false;
}

/// Throws std::invalid_argument when the union is the whole line.
inline IntervalRegion join(const IntervalRegion& a, const IntervalRegion& b) {
  std::vector<Component> all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  return regularize(std::move(all));
}

inline bool join_is_line(const IntervalRegion& a, const IntervalRegion& b) {
  std::vector<Component> all = a.components();
  all.insert(all.end(), b.components().begin(), b.components().end());
  try {
    regularize(std::move(all));
    return false;
  } catch (const std::invalid_argument&) {
    return true;
  }
}

struct IntervalModel {
  using Region = IntervalRegion;
  bool leq(const Region& a, const Region& b) const { return interval1d::leq(a, b); }
  Region complement(const Region& a) const { return interval1d::complement(a); }
  bool contact(const Region& a, const Region& b) const { return interval1d::contact(a, b); }
};

inline BaseRel classify11(const IntervalRegion& a, const IntervalRegion& b) {
  return classify_in_lattice(IntervalModel{}, a, b);
}

/// Same convention as the dyadic model: a against its complement reports
/// None.
inline HoleKind hole(const IntervalRegion& a, const IntervalRegion& b) {
  if (!contact(a, b) || interiors_meet(a, b)) return HoleKind::None;
  if (join_is_line(a, b)) return HoleKind::None;  // b = a'
  const IntervalRegion outside = complement(join(a, b));
  return contact(a, outside) ? HoleKind::None : HoleKind::StrictHole;
}

inline bool strict_hole(const IntervalRegion& a, const IntervalRegion& b) {
  return hole(a, b) == HoleKind::StrictHole;
}

/// Finite endpoints, ascending.
inline std::vector<Rational> endpoints(const IntervalRegion& a) {
  std::vector<Rational> out;
  for (const auto& c : a.components()) {
    if (c.lo.finite()) out.push_back(c.lo.value);
    if (c.hi.finite()) out.push_back(c.hi.value);
  }
  return out;
}

inline int boundary_count(const IntervalRegion& a) { return static_cast<int>(endpoints(a).size()); }

/// c_1 … c_{2k+1} from the pieces b_0 = (−∞,0], b_i = [i−1,i]: odd c's
/// collect the odd pieces, even c's the even pieces including b_0.
inline std::vector<IntervalRegion> build_hole_chain(int k) {
  if (k < 1) throw std::invalid_argument("hole chain needs k ≥ 1");
  auto piece = [](int i) {
    return i == 0 ? Component{Endpoint::neg_inf(), Endpoint::at(Rational(0))}
                  : Component{Endpoint::at(Rational(i - 1)), Endpoint::at(Rational(i))};
  };
  std::vector<IntervalRegion> out;
  for (int n = 1; n <= 2 * k + 1; ++n) {
    std::vector<Component> parts;
    for (int i = n % 2; i <= n; i += 2) parts.push_back(piece(i));
    out.push_back(regularize(std::move(parts)));
  }
  return out;
}

/// Indices (1-based) of a chain c_1 H' … H' c_{2k} with 2i−1 steps, for
/// 1 ≤ i ≤ k: jump from c_1 to c_{2k−2i+2}, then walk up one at a time.
inline std::vector<int> odd_power_path(int k, int i) {
  if (i < 1 || i > k) throw std::invalid_argument("power index out of range");
  std::vector<int> path = {1};
  for (int j = 2 * k - 2 * i + 2; j <= 2 * k; ++j) path.push_back(j);
  return path;
}

/// Each strict-hole step adds at least one endpoint, so (a, b) cannot be
/// joined by `steps` steps when b has fewer than `steps` extra endpoints.
inline bool power_refuted_by_endpoints(const IntervalRegion& a, const IntervalRegion& b, int steps) {
  return boundary_count(b) - boundary_count(a) < steps;
}

/// `[0,1]+(-inf,-2]`-style literal. Throws std::invalid_argument.
inline IntervalRegion parse_region(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  auto bound = [&](std::string_view t) {
    if (t == "-inf") return Endpoint::neg_inf();
    if (t == "inf" || t == "+inf") return Endpoint::pos_inf();
    return Endpoint::at(parse_rational(t));
  };
  std::vector<Component> parts;
  std::string_view rest = s;
  while (!rest.empty()) {
    const char open = rest.front();
    auto close_at = rest.find_first_of("])");
    auto comma = rest.find(',');
    if ((open != '[' && open != '(') || close_at == std::string_view::npos || comma == std::string_view::npos ||
        comma > close_at)
      throw std::invalid_argument("malformed interval in '" + std::string(text) + "'");
    const char close = rest[close_at];
    Endpoint lo = bound(rest.substr(1, comma - 1));
    Endpoint hi = bound(rest.substr(comma + 1, close_at - comma - 1));
    if ((open == '(') != (lo.inf < 0) || (close == ')') != (hi.inf > 0))
      throw std::invalid_argument("open ends only at infinity in '" + std::string(text) + "'");
    if (!(lo < hi)) throw std::invalid_argument("interval of zero length in '" + std::string(text) + "'");
    parts.push_back({lo, hi});
    rest.remove_prefix(close_at + 1);
    if (!rest.empty()) {
      if (rest.front() != '+') throw std::invalid_argument("expected '+' in '" + std::string(text) + "'");
      rest.remove_prefix(1);
      if (rest.empty()) throw std::invalid_argument("trailing '+' in '" + std::string(text) + "'");
    }
  }
  return regularize(std::move(parts));
}

inline std::string to_string(const IntervalRegion& a) {
  std::string out;
  for (const auto& c : a.components()) {
    if (!out.empty()) out += '+';
    out += c.lo.finite() ? "[" : "(";
    out += to_string(c.lo) + "," + to_string(c.hi);
    out += c.hi.finite() ? "]" : ")";
  }
  return out;
}

/// Random region with integer endpoints in [lo, hi], possibly with rays.
inline IntervalRegion random_region(Rng& rng, int lo = -6, int hi = 6) {
  while (true) {
    std::vector<Component> parts;
    const int n = static_cast<int>(rng.uniform(1, 3));
    for (int i = 0; i < n; ++i) {
      auto x = rng.uniform(lo, hi), y = rng.uniform(lo, hi);
      if (x == y) continue;
      Endpoint l = Endpoint::at(Rational(std::min(x, y))), r = Endpoint::at(Rational(std::max(x, y)));
      if (rng.uniform(0, 5) == 0) l = Endpoint::neg_inf();
      if (rng.uniform(0, 5) == 0) r = Endpoint::pos_inf();
      parts.push_back({l, r});
    }
    try {
      return regularize(std::move(parts));
    } catch (const std::invalid_argument&) {
    }
  }
}

/// A strict hole pair (a, z∧a') with a NTPP z, both random.
inline std::pair<IntervalRegion, IntervalRegion> random_hole_pair(Rng& rng) {
  while (true) {
    const IntervalRegion z = random_region(rng);
    // a: a piece strictly inside one bounded stretch of z
    const auto& c = rng.pick(z.components());
    Rational l = c.lo.finite() ? c.lo.value : (c.hi.finite() ? c.hi.value - 8 : Rational(-8));
    Rational r = c.hi.finite() ? c.hi.value : l + 8;
    if (!c.lo.finite() && !c.hi.finite()) continue;
    const Rational w = r - l;
    const Rational a_lo = l + w * Rational(rng.uniform(1, 3), 8);
    const Rational a_hi = r - w * Rational(rng.uniform(1, 3), 8);
    if (!(a_lo < a_hi)) continue;
    const IntervalRegion a = interval(Endpoint::at(a_lo), Endpoint::at(a_hi));
    std::vector<Component> rest;
    for (const auto& p : z.components()) {
      if (&p == &c) {
        rest.push_back({p.lo, Endpoint::at(a_lo)});
        rest.push_back({Endpoint::at(a_hi), p.hi});
      } else {
        rest.push_back(p);
      }
    }
    return {a, regularize(std::move(rest))};
  }
}

}  // namespace rcc11::interval1d
