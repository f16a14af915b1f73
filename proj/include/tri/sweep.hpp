#pragma once

// Exhaustive checks of the construction over parameter boxes.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "tri/identity.hpp"
#include "tri/lattice.hpp"

namespace tri {

struct SweepBox {
  Int increment_radius = 6;  // n, k, l in [-r, r]
  Int base_radius = 12;      // t in [-r, r]
};

struct SweepResult {
  std::size_t configurations = 0;
  std::size_t nonzero_residuals = 0;
  std::optional<SumLabel> first_failure;
  /// Index 1..10: configurations per case after normalising signs with rewrite_neg.
  std::array<std::size_t, 11> case_counts{};

  bool all_cases_seen() const;
  bool pass() const { return nonzero_residuals == 0 && all_cases_seen(); }
};

/// geom_check of the layout against its big triangle for every point in the box,
/// with the base anchored at the origin.
SweepResult sweep_eq8(Mode mode, const SweepBox& box);

/// The case of (n, k, l, t) after negative increments are flipped by rewrite_neg.
CaseId normalized_case(Int n, Int k, Int l, Int t);

}  // namespace tri
