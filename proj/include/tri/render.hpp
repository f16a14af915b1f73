#pragma once

// Deterministic SVG output for placed triangles and chains.
//
// Colour roles: positive pieces dark grey (#404040), negative-orientation or
// negative-sign pieces red (#d62728), cancelled regions green (#2ca02c),
// point corrections yellow (#f2c200), outlines black. 20 px per lattice unit,
// one unit of margin, labels in sans-serif.

#include <string>
#include <variant>
#include <vector>

#include "tri/chain.hpp"
#include "tri/dissection.hpp"
#include "tri/lattice.hpp"

namespace tri {

enum class Role { Positive, Negative, Cancelled, Correction, Outline };

std::string_view to_string(Role r);

struct PointMark {
  LatticeCoord at;
};

struct SceneItem {
  std::variant<PlacedTriangle, Chain, PointMark> shape;
  Role role = Role::Positive;
  std::string label;
  /// Open triangles are drawn with a dashed outline.
  bool open = false;
};

struct Scene {
  std::string title;
  std::vector<SceneItem> items;

  void add(const PlacedTriangle& t, Role role, std::string label = {}, bool open = false) {
    items.push_back({t, role, std::move(label), open});
  }
  void add(Chain c, Role role) { items.push_back({std::move(c), role, {}, false}); }
  void add(const PointMark& p, Role role, std::string label = {}) { items.push_back({p, role, std::move(label), false}); }
};

std::string to_svg(const Scene& scene);

/// Outline of the root plus one labelled triangle per piece; cancelled pairs optionally in green.
Scene dissection_scene(const DissectionResult& r, bool show_cancelled = false);

/// Outline of the big triangle with the seven terms, coloured by sign.
Scene eq8_scene(const Eq8Layout& layout);

/// A witness: closed triangles dark, open ones red, point corrections yellow and
/// labelled with how many closed triangles overlap there.
Scene witness_scene(const PlacedTriangle& target, const std::vector<SignedPlacement>& terms, Mode mode);

}  // namespace tri
