#pragma once

namespace rcc11 {

/// Outcome of the hole test. A region against its own complement reports
/// None (their join is 1, which is not a region), so in both finite models
/// every hole found is strict and Hole never comes back.
enum class HoleKind { None, Hole, StrictHole };

inline const char* hole_kind_name(HoleKind h) {
  switch (h) {
    case HoleKind::None: return "none";
    case HoleKind::Hole: return "hole";
    case HoleKind::StrictHole: return "strict_hole";
  }
  return "?";
}

}  // namespace rcc11
