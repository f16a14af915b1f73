#pragma once
// Brute-force references for the tests. Simplex membership is decided by
// orientation tests on barycentres, without the index ranges used in the library.
#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tri/chain.hpp"

namespace oracle {

// Lattice coordinates scaled by 6 so every barycentre is integral.
struct Pt {
  std::int64_t x;
  std::int64_t y;
};

inline std::int64_t cross(Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline bool in_triangle(Pt q, Pt a, Pt b, Pt c, bool strict) {
  const std::int64_t orient = cross(a, b, c) > 0 ? 1 : -1;
  const std::int64_t d[3] = {orient * cross(a, b, q), orient * cross(b, c, q), orient * cross(c, a, q)};
  for (std::int64_t v : d) {
    if (strict ? v <= 0 : v < 0) return false;
  }
  return true;
}

inline Pt barycentre(const tri::SimplexId& s) {
  const std::int64_t x = 6 * s.at.i, y = 6 * s.at.j;
  switch (s.kind) {
    case tri::SimplexKind::Vertex: return {x, y};
    case tri::SimplexKind::EdgeH: return {x + 3, y};
    case tri::SimplexKind::EdgeV: return {x, y + 3};
    case tri::SimplexKind::EdgeD: return {x + 3, y + 3};
    case tri::SimplexKind::FaceUp: return {x + 2, y + 2};
    case tri::SimplexKind::FaceDown: return {x + 4, y + 4};
  }
  return {x, y};
}

inline const std::vector<tri::SimplexKind>& kinds(tri::Mode mode) {
  static const std::vector<tri::SimplexKind> faces{tri::SimplexKind::FaceUp, tri::SimplexKind::FaceDown};
  static const std::vector<tri::SimplexKind> all{tri::SimplexKind::FaceUp, tri::SimplexKind::FaceDown,
                                                 tri::SimplexKind::EdgeH,  tri::SimplexKind::EdgeV,
                                                 tri::SimplexKind::EdgeD,  tri::SimplexKind::Vertex};
  return mode == tri::Mode::N2 ? faces : all;
}

// Simplices of the closed triangle (size > 0), the open triangle (size < 0) or
// the single point (size 0); faces only in N2.
inline std::vector<tri::SimplexId> simplices(const tri::PlacedTriangle& p, tri::Mode mode) {
  std::vector<tri::SimplexId> out;
  const std::int64_t ax = p.anchor.i, ay = p.anchor.j, s = p.size;
  if (s == 0) {
    if (mode == tri::Mode::N20) out.push_back({tri::SimplexKind::Vertex, p.anchor});
    return out;
  }
  const Pt a{6 * ax, 6 * ay}, b{6 * (ax + s), 6 * ay}, c{6 * ax, 6 * (ay + s)};
  const std::int64_t lo_i = std::min(ax, ax + s) - 1, hi_i = std::max(ax, ax + s) + 1;
  const std::int64_t lo_j = std::min(ay, ay + s) - 1, hi_j = std::max(ay, ay + s) + 1;
  for (std::int64_t i = lo_i; i <= hi_i; ++i) {
    for (std::int64_t j = lo_j; j <= hi_j; ++j) {
      for (tri::SimplexKind k : kinds(mode)) {
        const tri::SimplexId id{k, {i, j}};
        if (in_triangle(barycentre(id), a, b, c, s < 0)) out.push_back(id);
      }
    }
  }
  return out;
}

inline tri::Chain chain(const tri::PlacedTriangle& p, std::int64_t sign, tri::Mode mode) {
  tri::Chain c(mode);
  for (const auto& id : simplices(p, mode)) c.add(id, sign);
  return c;
}

// V - E + F of the simplex set.
inline std::int64_t euler(const std::vector<tri::SimplexId>& ids) {
  std::int64_t chi = 0;
  for (const auto& id : ids) {
    if (id.kind == tri::SimplexKind::Vertex) {
      ++chi;
    } else if (id.is_edge()) {
      --chi;
    } else {
      ++chi;
    }
  }
  return chi;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261015);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace oracle
