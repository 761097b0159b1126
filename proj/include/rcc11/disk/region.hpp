#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "rcc11/rational.hpp"

namespace rcc11::disk {

enum class Polarity { Disk, Codisk };

constexpr Polarity flip(Polarity p) { return p == Polarity::Disk ? Polarity::Codisk : Polarity::Disk; }

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point&) const = default;
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& k, const Point& p) { return {k * p.x, k * p.y}; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Rational norm2(const Point& a) { return dot(a, a); }

/// A closed disk, or the closure of the complement of an open disk. In
/// either case the boundary is the circle (center, radius).
class DiskRegion {
 public:
  DiskRegion(Polarity polarity, Point center, Rational radius)
      : polarity_(polarity), center_(std::move(center)), radius_(std::move(radius)) {
    if (radius_ <= 0) throw std::invalid_argument("disk radius must be positive");
  }

  Polarity polarity() const { return polarity_; }
  const Point& center() const { return center_; }
  const Rational& radius() const { return radius_; }
  bool is_disk() const { return polarity_ == Polarity::Disk; }

  /// Distinct parameter triples never denote the same point set.
  bool operator==(const DiskRegion&) const = default;

 private:
  Polarity polarity_;
  Point center_;
  Rational radius_;
};

inline DiskRegion make_disk(Rational cx, Rational cy, Rational r) {
  return {Polarity::Disk, {std::move(cx), std::move(cy)}, std::move(r)};
}
inline DiskRegion make_codisk(Rational cx, Rational cy, Rational r) {
  return {Polarity::Codisk, {std::move(cx), std::move(cy)}, std::move(r)};
}

inline DiskRegion complement(const DiskRegion& a) { return {flip(a.polarity()), a.center(), a.radius()}; }

inline std::string to_string(const DiskRegion& a) {
  return std::string(a.is_disk() ? "disk" : "codisk") + "(" + rcc11::to_string(a.center().x) + "," +
         rcc11::to_string(a.center().y) + "," + rcc11::to_string(a.radius()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const DiskRegion& a) { return os << to_string(a); }

}  // namespace rcc11::disk
