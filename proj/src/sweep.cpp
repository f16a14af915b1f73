#include "tri/sweep.hpp"

#include <algorithm>

#include "tri/chain.hpp"

namespace tri {

bool SweepResult::all_cases_seen() const {
  return std::all_of(case_counts.begin() + 1, case_counts.end(), [](std::size_t c) { return c > 0; });
}

CaseId normalized_case(Int n, Int k, Int l, Int t) {
  SlotMask negative = 0;
  if (n < 0) negative |= kSlotN;
  if (k < 0) negative |= kSlotK;
  if (l < 0) negative |= kSlotL;
  const IdentityInstance flipped = rewrite_neg(make_eq8(n, k, l, t), negative);
  const SumLabel p = negate_slots(flipped.eq8->params, flipped.eq8->negated);
  return case_classify(p.n, p.k, p.l, p.t);
}

SweepResult sweep_eq8(Mode mode, const SweepBox& box) {
  SweepResult out;
  const Int r = box.increment_radius, tr = box.base_radius;
  for (Int n = -r; n <= r; ++n) {
    for (Int k = -r; k <= r; ++k) {
      for (Int l = -r; l <= r; ++l) {
        for (Int t = -tr; t <= tr; ++t) {
          ++out.configurations;
          const Eq8Layout layout = eq8_layout(placed(0, 0, t), n, k, l);
          const auto terms = eq8_terms(layout);
          if (!geom_check(terms, {1, layout.big}, mode).empty()) {
            if (!out.first_failure) out.first_failure = SumLabel{n, k, l, t};
            ++out.nonzero_residuals;
          }
          ++out.case_counts[static_cast<std::size_t>(normalized_case(n, k, l, t).case_number)];
        }
      }
    }
  }
  return out;
}

}  // namespace tri
