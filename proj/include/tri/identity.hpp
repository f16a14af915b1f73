#pragma once

// Symbolic identities between triangle labels and their checking in the
// arithmetic sense (componentwise equality after embedding).

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tri/ring.hpp"
#include "tri/slots.hpp"

namespace tri {

enum class Mode { N2, N20 };

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view s);

/// <n + k + l + t> with ordered slots; zero slots are kept ("<n+0+0+t>").
struct SumLabel {
  Int n = 0;
  Int k = 0;
  Int l = 0;
  Int t = 0;

  Int value() const { return checked_add(checked_add(n, k), checked_add(l, t)); }
  /// The label that keeps only the increments in `mask` (plus t).
  SumLabel restrict(SlotMask mask) const;
  friend bool operator==(const SumLabel&, const SumLabel&) = default;
};

/// <b_{a,t}> = <2a+t> - 3<a+t>; not in N20 but used as a building block.
struct BLabel {
  Int a = 0;
  Int t = 0;
  friend bool operator==(const BLabel&, const BLabel&) = default;
};

using TermValue = std::variant<TriangleLabel, BLabel, TriVec3>;

struct Term {
  Int coeff = 1;
  TermValue value;
  std::optional<SumLabel> slots;
};

/// Parameters of an instance built by make_eq8, plus the slots negated so far by rewrite_neg.
struct Eq8Form {
  SumLabel params;
  SlotMask negated = 0;
};

struct IdentityInstance {
  std::string family;
  TriangleLabel lhs;
  std::optional<SumLabel> lhs_slots;
  std::vector<Term> terms;
  std::optional<Eq8Form> eq8;
};

struct ArithVerdict {
  Mode mode = Mode::N2;
  bool holds = false;
  /// lhs - sum of terms, per component (i=2, i=1, i=0). The i=0 slot is 0 in N2 mode.
  TriVec3 residual;
};

TriVec3 term_embedding(const TermValue& v);
ArithVerdict arith_check(const IdentityInstance& inst, Mode mode);

IdentityInstance make_eq3(Int n, Int k, Int l);
IdentityInstance make_eq8(Int n, Int k, Int l, Int t);

class InvalidSlotSet : public std::invalid_argument {
 public:
  explicit InvalidSlotSet(const std::string& what) : std::invalid_argument(what) {}
};

/// Parses a subset of {n,k,l} written as letters, e.g. "", "l", "kl", "nkl".
SlotMask parse_slot_set(std::string_view letters);

/// Parameters after negating the slots in `mask`: c -> -c and t -> t + sum of the negated c.
SumLabel negate_slots(const SumLabel& params, SlotMask mask);

/// Re-roots an eq8 instance so that the chosen increments change sign. The
/// terms keep their values and order; only their slot decomposition changes.
IdentityInstance rewrite_neg(const IdentityInstance& inst, SlotMask negated);

struct CaseId {
  int case_number = 1;
  int canonical_case = 1;
  friend bool operator==(const CaseId&, const CaseId&) = default;
};

int canonical_case(int case_number);

/// Case 1..10 of the configuration list for n, k, l >= 0. Throws
/// std::invalid_argument on a negative increment.
CaseId case_classify(Int n, Int k, Int l, Int t);

/// Which of the listed strict case conditions hold, in the given slot order.
/// Used by the classifier and exposed so tests can check the partition.
std::vector<int> strict_cases(Int n, Int k, Int l, Int t);

IdentityInstance make_eq26(Int n);
IdentityInstance make_eq27(Int a, Int k, Int n, Int t);
IdentityInstance make_eq28(Int a, Int n, Int t);
IdentityInstance make_eq29(Int a, Int n, Int t);
IdentityInstance make_eq30(Int n);
IdentityInstance make_eq31(Int n);
IdentityInstance make_eq32(Int n);

std::string to_string(const SumLabel& s);
std::string to_string(const Term& t);
std::string to_string(const IdentityInstance& inst);

}  // namespace tri
