#pragma once

// Signed integer chains over the simplices of the triangular lattice. A signed
// sum of placed triangles holds "geometrically" when its chain cancels exactly
// against the target's chain.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tri/identity.hpp"
#include "tri/lattice.hpp"
#include "tri/ring.hpp"

namespace tri {

/// edge_h spans (i,j)-(i+1,j), edge_v spans (i,j)-(i,j+1), edge_d spans (i+1,j)-(i,j+1).
enum class SimplexKind : std::uint8_t { FaceUp, FaceDown, EdgeH, EdgeV, EdgeD, Vertex };

std::string_view to_string(SimplexKind k);

struct SimplexId {
  SimplexKind kind = SimplexKind::Vertex;
  LatticeCoord at;

  bool is_face() const { return kind == SimplexKind::FaceUp || kind == SimplexKind::FaceDown; }
  bool is_edge() const { return !is_face() && kind != SimplexKind::Vertex; }

  friend bool operator==(const SimplexId&, const SimplexId&) = default;
  friend bool operator<(const SimplexId& a, const SimplexId& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.at < b.at;
  }
};

struct SimplexHash {
  std::size_t operator()(const SimplexId& s) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(s.at.i) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(s.at.j) + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(s.kind) * 0xC2B2AE3D27D4EB4Full;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Finitely supported multiplicity map. Zero entries are never stored, so equality
/// of chains is equality of maps. N2 chains hold faces only.
class Chain {
 public:
  using Map = std::unordered_map<SimplexId, Int, SimplexHash>;

  explicit Chain(Mode mode = Mode::N2) : mode_(mode) {}

  Mode mode() const { return mode_; }
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  Int at(const SimplexId& s) const;

  /// Throws std::invalid_argument for a non-face simplex in an N2 chain.
  void add(const SimplexId& s, Int multiplicity);

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(Int k, const Chain& c);
  friend bool operator==(const Chain& a, const Chain& b) { return a.mode_ == b.mode_ && a.cells_ == b.cells_; }

  Map::const_iterator begin() const { return cells_.begin(); }
  Map::const_iterator end() const { return cells_.end(); }

  /// Entries ordered by (kind, i, j), for deterministic output.
  std::vector<std::pair<SimplexId, Int>> sorted_entries() const;

 private:
  void check_mode(const Chain& other) const;

  Mode mode_;
  Map cells_;
};

/// Calls `emit(simplex)` once per simplex of the triangle: faces only in N2;
/// in N20 every simplex of the closed triangle for size > 0, the interior
/// simplices (open triangle) for size < 0, the anchor vertex for size 0.
template <class Emit>
void for_each_simplex(const PlacedTriangle& p, Mode mode, Emit&& emit) {
  const Int x = p.anchor.i, y = p.anchor.j;
  const bool all = mode == Mode::N20;
  auto sweep = [&](Int max_sum, SimplexKind kind, Int dx, Int dy, Int dir) {
    // cells at (x + dir*i + dx, y + dir*j + dy) for i, j >= 0, i + j <= max_sum
    for (Int i = 0; i <= max_sum; ++i) {
      for (Int j = 0; i + j <= max_sum; ++j) {
        emit(SimplexId{kind, {x + dir * i + dx, y + dir * j + dy}});
      }
    }
  };
  if (p.size > 0) {
    const Int s = p.size;
    sweep(s - 1, SimplexKind::FaceUp, 0, 0, 1);
    sweep(s - 2, SimplexKind::FaceDown, 0, 0, 1);
    if (all) {
      sweep(s - 1, SimplexKind::EdgeH, 0, 0, 1);
      sweep(s - 1, SimplexKind::EdgeV, 0, 0, 1);
      sweep(s - 1, SimplexKind::EdgeD, 0, 0, 1);
      sweep(s, SimplexKind::Vertex, 0, 0, 1);
    }
  } else if (p.size < 0) {
    const Int m = -p.size;
    sweep(m - 1, SimplexKind::FaceDown, -1, -1, -1);
    sweep(m - 2, SimplexKind::FaceUp, -1, -1, -1);
    if (all) {
      sweep(m - 2, SimplexKind::EdgeH, -1, -1, -1);
      sweep(m - 2, SimplexKind::EdgeV, -1, -1, -1);
      sweep(m - 2, SimplexKind::EdgeD, -1, -1, -1);
      sweep(m - 3, SimplexKind::Vertex, -1, -1, -1);
    }
  } else if (all) {
    emit(SimplexId{SimplexKind::Vertex, p.anchor});
  }
}

/// Adds sign * chain(p) into `acc` in the accumulator's mode.
void accumulate(Chain& acc, const PlacedTriangle& p, Int sign);

Chain face_chain(const PlacedTriangle& p);
Chain n20_chain(const PlacedTriangle& p, Int sign);
Chain triangle_chain(const PlacedTriangle& p, Int sign, Mode mode);

/// N2: (total face multiplicity, up minus down).
OrthoPair project_n2(const Chain& c);
/// N20: additionally the signed Euler characteristic V - E + F as the i=0 component.
TriVec3 project_n20(const Chain& c);
/// Mode-dependent projection into (i=2, i=1, i=0); the i=0 slot is 0 for N2 chains.
TriVec3 project(const Chain& c);

struct SignedPlacement {
  Int sign = 1;
  PlacedTriangle tri;
  friend bool operator==(const SignedPlacement&, const SignedPlacement&) = default;
};

/// sum sign_i chain(p_i) - sign_target chain(target). Empty means the placed equation holds.
Chain geom_check(std::span<const SignedPlacement> terms, const SignedPlacement& target, Mode mode);

/// The eight placements of the construction as (sign, triangle), big triangle excluded.
std::vector<SignedPlacement> eq8_terms(const Eq8Layout& layout);

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct SearchTerm {
  Int sign = 1;
  Int size = 0;
};

struct SearchOptions {
  Int window_radius = 4;
  Mode mode = Mode::N2;
  /// Upper bound on (2r+1)^(2*#terms), the unpruned configuration count.
  double budget = 1e12;
};

/// Looks for anchors within `window_radius` of the target anchor (per coordinate)
/// making the signed terms cancel to the target. std::nullopt is only conclusive
/// for that window.
std::optional<std::vector<SignedPlacement>> placement_search(std::span<const SearchTerm> terms,
                                                             const PlacedTriangle& target,
                                                             const SearchOptions& options);

/// Canonical witness for <n> = n(n+1)/2<1> - (n-1)(n+1)<0> + n(n-1)/2<-1> in N20:
/// closed <1> on each up cell, open <-1> on each down cell, and -<0> once at each
/// boundary non-corner point and twice at each interior point. Requires n >= 1.
std::vector<SignedPlacement> eq26_witness(const LatticeCoord& anchor, Int n);

/// Witness for the b_{1,0} form: closed <1> on up cells; on each down cell the
/// open <-1> minus its three corner points; +<0> at each interior point. n >= 1.
std::vector<SignedPlacement> eq30_witness(const LatticeCoord& anchor, Int n);

}  // namespace tri
