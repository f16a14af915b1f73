#include "tri/lattice.hpp"

#include <cmath>

namespace tri {

std::vector<LatticeCoord> vertices(const PlacedTriangle& p) {
  if (p.size == 0) return {p.anchor};
  return {p.anchor, p.anchor + LatticeCoord{p.size, 0}, p.anchor + LatticeCoord{0, p.size}};
}

std::pair<double, double> cartesian(const LatticeCoord& c) {
  const double i = static_cast<double>(c.i), j = static_cast<double>(c.j);
  return {i + 0.5 * j, j * std::sqrt(3.0) / 2.0};
}

const PlacedTriangle& Eq8Layout::at(Slot s) const {
  for (std::size_t idx = 0; idx < kEq8Slots.size(); ++idx) {
    if (kEq8Slots[idx] == s) return terms[idx];
  }
  return terms.back();
}

Eq8Layout eq8_layout(const PlacedTriangle& base, Int n, Int k, Int l) {
  auto place = [&](SlotMask m) {
    Int size = base.size;
    LatticeCoord anchor = base.anchor;
    if (m & kSlotN) size = checked_add(size, n);
    if (m & kSlotK) {
      size = checked_add(size, k);
      anchor.i = checked_sub(anchor.i, k);
    }
    if (m & kSlotL) {
      size = checked_add(size, l);
      anchor.j = checked_sub(anchor.j, l);
    }
    return PlacedTriangle{anchor, size};
  };
  Eq8Layout out;
  out.big = place(kSlotsAll);
  for (std::size_t idx = 0; idx < kEq8Slots.size(); ++idx) out.terms[idx] = place(slot_mask(kEq8Slots[idx]));
  return out;
}

RationalTriangle to_rational(const PlacedTriangle& p) {
  return {{Rational(p.anchor.i), Rational(p.anchor.j)}, Rational(p.size)};
}

std::string to_string(const LatticeCoord& c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

std::string to_string(const PlacedTriangle& p) {
  return "T(" + to_string(p.anchor) + "," + std::to_string(p.size) + ")";
}

}  // namespace tri
