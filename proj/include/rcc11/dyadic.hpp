#pragma once

// The least RCC model built on dyadic half-open intervals, truncated at a
// fixed depth d ≤ 6. A region is a set of depth-d cells stored as a 64-bit
// mask; bit i is the cell whose d-digit binary name has value i.
//
// Contact: a and b overlap, or for some string s and n ≥ 0 the cells
// x_{s0 1^n} ⊆ a and x_{s1 1^n} ⊆ b (or the other way round). Strings
// longer than d reduce to a pair with |s|+1+n = d or to an overlap, so
// enumerating |s|+1+n ≤ d is complete.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rcc11/hole_kind.hpp"
#include "rcc11/lattice_classify.hpp"
#include "rcc11/relation.hpp"

namespace rcc11::dyadic {

using Mask = std::uint64_t;

inline constexpr int kMaxDepth = 6;

inline void check_depth(int depth) {
  if (depth < 1 || depth > kMaxDepth)
    throw std::invalid_argument("depth must be in 1.." + std::to_string(kMaxDepth));
}

inline Mask full_mask(int depth) {
  check_depth(depth);
  return depth == 6 ? ~Mask{0} : (Mask{1} << (1u << depth)) - 1;
}

/// Depth-d cells covered by x_s, for 0 ≤ |s| ≤ depth.
inline Mask cell_mask(std::string_view s, int depth) {
  check_depth(depth);
  if (static_cast<int>(s.size()) > depth)
    throw std::invalid_argument("cell '" + std::string(s) + "' is deeper than " + std::to_string(depth));
  std::uint64_t v = 0;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("cell names are binary strings");
    v = v * 2 + static_cast<std::uint64_t>(ch - '0');
  }
  const unsigned shift = static_cast<unsigned>(depth - static_cast<int>(s.size()));
  const std::uint64_t width = std::uint64_t{1} << shift;
  const Mask block = width == 64 ? ~Mask{0} : (Mask{1} << width) - 1;
  return block << (v << shift);
}

class BwRegion {
 public:
  /// Throws std::invalid_argument for the empty set or all cells.
  BwRegion(int depth, Mask cells) : depth_(depth), cells_(cells) {
    const Mask full = full_mask(depth);
    if ((cells & ~full) != 0) throw std::invalid_argument("cells outside the depth");
    if (cells == 0) throw std::invalid_argument("the empty set is not a region");
    if (cells == full) throw std::invalid_argument("the whole interval is not a region");
  }

  int depth() const { return depth_; }
  Mask cells() const { return cells_; }
  int cell_count() const { return std::popcount(cells_); }

  bool operator==(const BwRegion&) const = default;

 private:
  int depth_;
  Mask cells_;
};

inline BwRegion cell(std::string_view s, int depth) {
  if (s.empty()) throw std::invalid_argument("x_ε is not a region");
  return {depth, cell_mask(s, depth)};
}

/// The same point set at a finer depth.
inline BwRegion refine(const BwRegion& a, int depth) {
  check_depth(depth);
  if (depth < a.depth()) throw std::invalid_argument("cannot refine to a coarser depth");
  const unsigned width = 1u << (depth - a.depth());
  const Mask block = width == 64 ? ~Mask{0} : (Mask{1} << width) - 1;
  Mask out = 0;
  for (unsigned i = 0; i < (1u << a.depth()); ++i)
    if (a.cells() >> i & 1) out |= block << (i * width);
  return {depth, out};
}

/// Fewest aligned cells, e.g. "x(0)+x(11)".
inline std::string to_string(const BwRegion& a) {
  std::string out;
  auto emit = [&](auto&& self, std::string name) -> void {
    const Mask m = cell_mask(name, a.depth());
    if ((a.cells() & m) == m) {
      if (!out.empty()) out += '+';
      out += "x(" + name + ")";
    } else if ((a.cells() & m) != 0) {
      self(self, name + "0");
      self(self, name + "1");
    }
  };
  emit(emit, "0");
  emit(emit, "1");
  return out;
}

/// Parses `x(01)+x(11)` or `!x(01)`; a leading `!` complements the whole
/// union. Throws std::invalid_argument.
inline BwRegion parse_region(std::string_view text, int depth) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  bool negate = false;
  std::string_view rest = s;
  if (!rest.empty() && rest.front() == '!') {
    negate = true;
    rest.remove_prefix(1);
  }
  if (rest.empty()) throw std::invalid_argument("empty region literal");
  Mask m = 0;
  while (true) {
    if (rest.size() < 4 || rest.substr(0, 2) != "x(")
      throw std::invalid_argument("expected x(<binary>) in '" + std::string(text) + "'");
    auto close = rest.find(')');
    if (close == std::string_view::npos) throw std::invalid_argument("unclosed x( in '" + std::string(text) + "'");
    std::string_view name = rest.substr(2, close - 2);
    if (name.empty()) throw std::invalid_argument("x_ε is not a region");
    m |= cell_mask(name, depth);
    rest.remove_prefix(close + 1);
    if (rest.empty()) break;
    if (rest.front() != '+') throw std::invalid_argument("expected '+' in '" + std::string(text) + "'");
    rest.remove_prefix(1);
  }
  if (negate) m = full_mask(depth) & ~m;
  return {depth, m};
}

/// Contact, parthood and complement at one depth. Contact is defined on all
/// nonempty cell sets, the whole interval included.
class BwModel {
 public:
  using Region = BwRegion;

  explicit BwModel(int depth) : depth_(depth), full_(full_mask(depth)) {
    for (int len = 0; len < depth; ++len)
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
        std::string s1;
        for (int i = len - 1; i >= 0; --i) s1 += (v >> i & 1) ? '1' : '0';
        for (int n = 0; len + 1 + n <= depth; ++n) {
          const std::string ones(static_cast<std::size_t>(n), '1');
          pairs_.emplace_back(cell_mask(s1 + "0" + ones, depth), cell_mask(s1 + "1" + ones, depth));
        }
      }
    if (depth <= 3) {
      const std::size_t n = std::size_t{1} << (1u << depth);
      table_.assign(n * n, 0);
      for (Mask a = 1; a < n; ++a)
        for (Mask b = 1; b < n; ++b) table_[a * n + b] = compute_contact(a, b);
    }
  }

  int depth() const { return depth_; }
  Mask full() const { return full_; }
  const std::vector<std::pair<Mask, Mask>>& contact_pairs() const { return pairs_; }

  bool contact_masks(Mask a, Mask b) const {
    if (a == 0 || b == 0) throw std::invalid_argument("contact is undefined on the empty region");
    if (!table_.empty()) return table_[a * (full_ + 1) + b] != 0;
    return compute_contact(a, b);
  }

  bool contact(const BwRegion& a, const BwRegion& b) const {
    same_depth(a, b);
    return contact_masks(a.cells(), b.cells());
  }
  bool leq(const BwRegion& a, const BwRegion& b) const {
    same_depth(a, b);
    return (a.cells() & ~b.cells()) == 0;
  }
  BwRegion complement(const BwRegion& a) const {
    same_depth(a, a);
    return {depth_, full_ & ~a.cells()};
  }

  void same_depth(const BwRegion& a, const BwRegion& b) const {
    if (a.depth() != depth_ || b.depth() != depth_) throw std::invalid_argument("depth mismatch");
  }

  /// Every region at this depth, in mask order. Only for depth ≤ 4.
  std::vector<BwRegion> all_regions() const {
    if (depth_ > 4) throw std::invalid_argument("too many regions to enumerate");
    std::vector<BwRegion> out;
    for (Mask m = 1; m < full_; ++m) out.emplace_back(depth_, m);
    return out;
  }

 private:
  bool compute_contact(Mask a, Mask b) const {
    if (a & b) return true;
    for (const auto& [s, t] : pairs_) {
      if ((a & s) == s && (b & t) == t) return true;
      if ((a & t) == t && (b & s) == s) return true;
    }
    return false;
  }

  int depth_;
  Mask full_;
  std::vector<std::pair<Mask, Mask>> pairs_;
  std::vector<char> table_;
};

/// Shared model for a depth.
inline const BwModel& model(int depth) {
  check_depth(depth);
  static std::vector<std::optional<BwModel>> cache(kMaxDepth + 1);
  auto& m = cache[static_cast<std::size_t>(depth)];
  if (!m) m.emplace(depth);
  return *m;
}

inline bool contact(const BwRegion& a, const BwRegion& b) { return model(a.depth()).contact(a, b); }

inline BaseRel classify11(const BwRegion& a, const BwRegion& b) {
  if (a.depth() != b.depth()) throw std::invalid_argument("depth mismatch");
  return classify_in_lattice(model(a.depth()), a, b);
}

/// a is a hole of b: externally connected, and a is a non-tangential part
/// of a∨b. Every region is a hole of its complement (then a∨b = 1); that
/// trivial case is a hole but not a strict one.
inline HoleKind hole(const BwRegion& a, const BwRegion& b) {
  const BwModel& m = model(a.depth());
  m.same_depth(a, b);
  if ((a.cells() & b.cells()) != 0 || !m.contact(a, b)) return HoleKind::None;
  const Mask join = a.cells() | b.cells();
  if (join == m.full()) return HoleKind::None;  // b = a'; 1 is not a region
  if (m.contact_masks(a.cells(), m.full() & ~join)) return HoleKind::None;
  return HoleKind::StrictHole;
}

/// [x_{0^{k+1}}, x_{0^k}, …, x_0]
inline std::vector<BwRegion> standard_chain(int k, int depth) {
  if (k < 0) throw std::invalid_argument("negative chain length");
  if (k + 1 > depth) throw std::invalid_argument("depth too small for the chain");
  std::vector<BwRegion> out;
  for (int i = k; i >= 0; --i) out.push_back(cell(std::string(static_cast<std::size_t>(i + 1), '0'), depth));
  return out;
}

/// Whether a = r0 NTPP r1 … NTPP r_len = b for depth-d regions r_i.
/// Every r_i lies between a and b, so only those sets are searched.
inline bool chain_exists(const BwRegion& a, const BwRegion& b, int len) {
  const BwModel& m = model(a.depth());
  m.same_depth(a, b);
  if (len < 0) throw std::invalid_argument("negative chain length");
  if (len == 0) return a == b;
  if (!m.leq(a, b)) return false;
  const Mask free = b.cells() & ~a.cells();
  if (std::popcount(free) > 24) throw std::invalid_argument("chain search space too large");

  auto ntpp = [&](Mask x, Mask y) {
    return x != y && (x & ~y) == 0 && !m.contact_masks(x, m.full() & ~y);
  };
  std::vector<Mask> between;
  for (Mask sub = free;; sub = (sub - 1) & free) {
    between.push_back(a.cells() | sub);
    if (sub == 0) break;
  }
  std::unordered_set<Mask> layer = {a.cells()};
  for (int step = 1; step <= len && !layer.empty(); ++step) {
    std::unordered_set<Mask> next;
    for (Mask y : between) {
      if (step == len && y != b.cells()) continue;
      for (Mask x : layer)
        if (ntpp(x, y)) {
          next.insert(y);
          break;
        }
    }
    layer = std::move(next);
  }
  return layer.count(b.cells()) > 0;
}

struct AxiomResult {
  std::string name;
  long checked = 0;
  long failures = 0;
  bool passed() const { return failures == 0; }
};

struct AxiomReport {
  int depth = 0;
  int witness_depth = 0;
  std::vector<AxiomResult> axioms;
  bool passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.passed(); });
  }
};

/// A base cell of depth ≤ max_depth not in contact with x, searched by depth
/// and then in lexicographic order.
inline std::optional<std::string> a5_witness(const BwRegion& x, int max_depth) {
  const BwRegion fine = refine(x, max_depth);
  const BwModel& m = model(max_depth);
  for (int len = 1; len <= max_depth; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::string s;
      for (int i = len - 1; i >= 0; --i) s += (v >> i & 1) ? '1' : '0';
      if (!m.contact_masks(fine.cells(), cell_mask(s, max_depth))) return s;
    }
  return std::nullopt;
}

/// A2–A4 over every nonempty cell set at `depth` (≤ 3), A5 for every region
/// with witnesses searched down to depth + 2.
inline AxiomReport check_axioms(int depth) {
  if (depth < 1 || depth > 3) throw std::invalid_argument("exhaustive axiom check needs depth 1..3");
  const BwModel& m = model(depth);
  const Mask full = m.full();
  AxiomReport rep;
  rep.depth = depth;
  rep.witness_depth = std::min(depth + 2, kMaxDepth);

  AxiomResult a1{"A1"};  // complement laws of the cell-set algebra
  AxiomResult a2{"A2"}, a3{"A3"}, a4{"A4"}, a5{"A5"};
  for (Mask x = 1; x <= full; ++x) {
    ++a1.checked;
    const Mask xc = full & ~x;
    if ((x & xc) != 0 || (x | xc) != full) ++a1.failures;
    ++a2.checked;
    if (!m.contact_masks(x, x)) ++a2.failures;
    for (Mask y = 1; y <= full; ++y) {
      ++a2.checked;
      if (m.contact_masks(x, y) != m.contact_masks(y, x)) ++a2.failures;
    }
    if (x != full) {
      ++a3.checked;
      if (!m.contact_masks(x, xc)) ++a3.failures;
      ++a5.checked;
      if (!a5_witness(BwRegion(depth, x), rep.witness_depth)) ++a5.failures;
    }
    for (Mask y = 1; y <= full; ++y)
      for (Mask z = 1; z <= full; ++z) {
        ++a4.checked;
        if (m.contact_masks(x, y | z) != (m.contact_masks(x, y) || m.contact_masks(x, z))) ++a4.failures;
      }
  }
  rep.axioms = {a1, a2, a3, a4, a5};
  return rep;
}

struct PodyReport {
  int depth = 0;
  BaseRel relation_ac = BaseRel::EQ;  // expected PODY
  long candidates = 0;
  long witnesses_tpp = 0;   // a TPPI b and b TPP c
  long witnesses_ntpp = 0;  // a TPPI b and b NTPP c
  BaseRel control_relation = BaseRel::EQ;  // expected PODZ
  bool control_witness = false;            // b = a∧c for ⟨TPPI,PODZ,TPP⟩
};

/// a = x_0, c = (x_01)': every b below a touching a' stays clear of c' only
/// by overlapping it, so no b sits between a and c as TPPI then TPP/NTPP.
inline PodyReport pody_counterexample(int depth) {
  if (depth < 3 || depth > 4) throw std::invalid_argument("counterexample search needs depth 3 or 4");
  const BwModel& m = model(depth);
  const BwRegion a = cell("0", depth);
  const BwRegion c = m.complement(cell("01", depth));
  PodyReport rep;
  rep.depth = depth;
  rep.relation_ac = classify11(a, c);
  for (const BwRegion& b : m.all_regions()) {
    ++rep.candidates;
    if (classify11(a, b) != BaseRel::TPPI) continue;
    const BaseRel bc = classify11(b, c);
    if (bc == BaseRel::TPP) ++rep.witnesses_tpp;
    if (bc == BaseRel::NTPP) ++rep.witnesses_ntpp;
  }
  const BwRegion c2 = m.complement(cell("00", depth));
  rep.control_relation = classify11(a, c2);
  const BwRegion meet(depth, a.cells() & c2.cells());
  rep.control_witness = classify11(a, meet) == BaseRel::TPPI && classify11(meet, c2) == BaseRel::TPP;
  return rep;
}

/// Number of 0s in a cell name.
inline int lambda(std::string_view t) { return static_cast<int>(std::count(t.begin(), t.end(), '0')); }

/// For x_t NTPP a with t = 0…, a ⊆ x_0: some x_{t'} ⊆ a with one fewer 0.
inline bool lambda_descent_holds(std::string_view t, const BwRegion& a) {
  const int d = a.depth();
  for (int len = 1; len <= d; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::string s;
      for (int i = len - 1; i >= 0; --i) s += (v >> i & 1) ? '1' : '0';
      if (lambda(s) != lambda(t) - 1) continue;
      const Mask cm = cell_mask(s, d);
      if ((a.cells() & cm) == cm) return true;
    }
  return false;
}

}  // namespace rcc11::dyadic
