#pragma once

// RCC11 classification from an orthocomplemented lattice with a contact
// relation. A model supplies four operations on its region type:
//
//   bool leq(x, y)        parthood (lattice order)
//   R complement(x)       orthocomplement
//   bool contact(x, y)    the contact relation C
//   x == y
//
// Each relation is a separate clause over these; exactly one clause holds
// for any pair of regions other than 0 and 1.

#include <array>
#include <concepts>
#include <stdexcept>
#include <string>

#include "rcc11/relation.hpp"

namespace rcc11 {

template <typename M>
concept ContactLattice = requires(const M& m, const typename M::Region& x) {
  { m.leq(x, x) } -> std::convertible_to<bool>;
  { m.complement(x) } -> std::convertible_to<typename M::Region>;
  { m.contact(x, x) } -> std::convertible_to<bool>;
  { x == x } -> std::convertible_to<bool>;
};

/// Truth value of every relation clause for (x, y), indexed by BaseRel.
template <ContactLattice M>
std::array<bool, kNumBaseRels> evaluate_clauses(const M& m, const typename M::Region& x,
                                               const typename M::Region& y) {
  const auto xc = m.complement(x);
  const auto yc = m.complement(y);
  auto lt = [&](const auto& a, const auto& b) { return m.leq(a, b) && !(a == b); };

  std::array<bool, kNumBaseRels> h{};
  auto set = [&](BaseRel r, bool v) { h[index_of(r)] = v; };

  set(BaseRel::EQ, x == y);
  set(BaseRel::ECD, x == yc);
  set(BaseRel::TPP, lt(x, y) && m.contact(x, yc));
  set(BaseRel::NTPP, lt(x, y) && !m.contact(x, yc));
  set(BaseRel::TPPI, lt(y, x) && m.contact(y, xc));
  set(BaseRel::NTPPI, lt(y, x) && !m.contact(y, xc));
  set(BaseRel::ECN, lt(x, yc) && m.contact(x, y));
  set(BaseRel::DC, !m.contact(x, y));
  set(BaseRel::PODY, lt(yc, x) && m.contact(xc, yc));
  set(BaseRel::PODZ, lt(yc, x) && !m.contact(xc, yc));
  // x∧y > 0, x∨y < 1, x∧y' > 0, x'∧y > 0
  set(BaseRel::PON, !m.leq(x, yc) && !m.leq(yc, x) && !m.leq(x, y) && !m.leq(y, x));
  return h;
}

struct JepdViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// The unique relation whose clause holds. Throws JepdViolation otherwise.
template <ContactLattice M>
BaseRel classify_in_lattice(const M& m, const typename M::Region& x, const typename M::Region& y) {
  auto h = evaluate_clauses(m, x, y);
  int count = 0;
  BaseRel found = BaseRel::EQ;
  for (BaseRel r : kAllBaseRels) {
    if (h[index_of(r)]) {
      ++count;
      found = r;
    }
  }
  if (count != 1)
    throw JepdViolation(std::to_string(count) + " relation clauses hold for one pair");
  return found;
}

}  // namespace rcc11
