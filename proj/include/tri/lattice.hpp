#pragma once

// Placement of triangles on the oblique triangular lattice.
//
// A point (i, j) sits at Cartesian (i + j/2, j*sqrt(3)/2). The up cell U(i,j) has
// corners (i,j),(i+1,j),(i,j+1); the down cell D(i,j) has corners
// (i+1,j),(i,j+1),(i+1,j+1). A triangle of signed size s anchored at a has
// corners a, a+(s,0), a+(0,s): upward for s>0, downward for s<0, a point for s=0.

#include <array>
#include <boost/rational.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tri/checked.hpp"
#include "tri/slots.hpp"

namespace tri {

using Rational = boost::rational<Int>;

namespace detail {
inline Int add(Int a, Int b) { return checked_add(a, b); }
inline Int sub(Int a, Int b) { return checked_sub(a, b); }
inline Rational add(const Rational& a, const Rational& b) { return a + b; }
inline Rational sub(const Rational& a, const Rational& b) { return a - b; }
}  // namespace detail

template <class Scalar>
struct BasicCoord {
  Scalar i{};
  Scalar j{};

  friend BasicCoord operator+(const BasicCoord& a, const BasicCoord& b) {
    return {detail::add(a.i, b.i), detail::add(a.j, b.j)};
  }
  friend BasicCoord operator-(const BasicCoord& a, const BasicCoord& b) {
    return {detail::sub(a.i, b.i), detail::sub(a.j, b.j)};
  }
  friend bool operator==(const BasicCoord&, const BasicCoord&) = default;
};

template <class Scalar>
struct BasicTriangle {
  BasicCoord<Scalar> anchor;
  Scalar size{};
  friend bool operator==(const BasicTriangle&, const BasicTriangle&) = default;
};

using LatticeCoord = BasicCoord<Int>;
using PlacedTriangle = BasicTriangle<Int>;
using RationalCoord = BasicCoord<Rational>;
using RationalTriangle = BasicTriangle<Rational>;

inline bool operator<(const LatticeCoord& a, const LatticeCoord& b) {
  return a.i != b.i ? a.i < b.i : a.j < b.j;
}

inline PlacedTriangle placed(Int i, Int j, Int size) { return {{i, j}, size}; }

/// Three corners, or the single anchor for a point.
std::vector<LatticeCoord> vertices(const PlacedTriangle& p);

/// Screen embedding of a lattice point (unit edge length).
std::pair<double, double> cartesian(const LatticeCoord& c);

/// Eight triangles of the construction: the big triangle plus the seven terms
/// of the identity, stored in kEq8Slots order.
struct Eq8Layout {
  PlacedTriangle big;
  std::array<PlacedTriangle, 7> terms;

  const PlacedTriangle& at(Slot s) const;
  const PlacedTriangle& base() const { return at(Slot::T); }
};

/// Extends (or shortens) the base <t> by n, k, l: the term for slot subset S has
/// size t + sum_{c in S} c and anchor base + (-k [k in S], -l [l in S]).
Eq8Layout eq8_layout(const PlacedTriangle& base, Int n, Int k, Int l);

template <class Scalar>
struct Increments {
  Scalar n{};
  Scalar k{};
  Scalar l{};
  friend bool operator==(const Increments&, const Increments&) = default;
};

/// Inverse of the layout's big-triangle rule: the (n, k, l) carrying `base` to `target`.
template <class Scalar>
Increments<Scalar> solve_params(const BasicTriangle<Scalar>& base, const BasicTriangle<Scalar>& target) {
  using detail::sub;
  const Scalar k = sub(base.anchor.i, target.anchor.i);
  const Scalar l = sub(base.anchor.j, target.anchor.j);
  const Scalar n = sub(sub(sub(target.size, base.size), k), l);
  return {n, k, l};
}

/// The translation taking `a` onto `b` when both have the same signed size.
template <class Scalar>
std::optional<BasicCoord<Scalar>> congruent_translate(const BasicTriangle<Scalar>& a,
                                                      const BasicTriangle<Scalar>& b) {
  if (a.size != b.size) return std::nullopt;
  return b.anchor - a.anchor;
}

RationalTriangle to_rational(const PlacedTriangle& p);

std::string to_string(const LatticeCoord& c);
std::string to_string(const PlacedTriangle& p);

}  // namespace tri
