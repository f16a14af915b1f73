#include "tri/identity.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace tri {

std::string_view to_string(Mode m) { return m == Mode::N2 ? "n2" : "n20"; }

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "n2" || s == "N2") return Mode::N2;
  if (s == "n20" || s == "N20") return Mode::N20;
  return std::nullopt;
}

SumLabel SumLabel::restrict(SlotMask mask) const {
  return {(mask & kSlotN) ? n : 0, (mask & kSlotK) ? k : 0, (mask & kSlotL) ? l : 0, t};
}

TriVec3 term_embedding(const TermValue& v) {
  return std::visit(
      [](const auto& x) -> TriVec3 {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TriangleLabel>) {
          return embed3(x);
        } else if constexpr (std::is_same_v<T, BLabel>) {
          return b_vec(x.a, x.t);
        } else {
          return x;
        }
      },
      v);
}

ArithVerdict arith_check(const IdentityInstance& inst, Mode mode) {
  TriVec3 sum;
  for (const Term& term : inst.terms) sum = sum + term.coeff * term_embedding(term.value);
  TriVec3 residual = embed3(inst.lhs) - sum;
  if (mode == Mode::N2) residual.c = 0;
  return {mode, residual == TriVec3{}, residual};
}

namespace {

Term label_term(Int coeff, Int n, std::optional<SumLabel> slots = std::nullopt) {
  return {coeff, TriangleLabel{1, n}, slots};
}

void push_nonzero(IdentityInstance& inst, Term term) {
  if (term.coeff != 0) inst.terms.push_back(std::move(term));
}

}  // namespace

IdentityInstance make_eq3(Int n, Int k, Int l) {
  IdentityInstance inst;
  inst.family = "eq3";
  const SumLabel params{n, k, l, 0};
  inst.lhs = {1, params.value()};
  inst.lhs_slots = params;
  for (Slot s : kEq8Slots) {
    if (s == Slot::T) continue;
    const SumLabel part = params.restrict(slot_mask(s));
    inst.terms.push_back(label_term(slot_sign(s), part.value(), part));
  }
  return inst;
}

IdentityInstance make_eq8(Int n, Int k, Int l, Int t) {
  IdentityInstance inst;
  inst.family = "eq8";
  const SumLabel params{n, k, l, t};
  inst.lhs = {1, params.value()};
  inst.lhs_slots = params;
  for (Slot s : kEq8Slots) {
    const SumLabel part = params.restrict(slot_mask(s));
    inst.terms.push_back(label_term(slot_sign(s), part.value(), part));
  }
  inst.eq8 = Eq8Form{params, 0};
  return inst;
}

SlotMask parse_slot_set(std::string_view letters) {
  SlotMask mask = 0;
  for (char c : letters) {
    SlotMask bit = 0;
    switch (c) {
      case 'n': bit = kSlotN; break;
      case 'k': bit = kSlotK; break;
      case 'l': bit = kSlotL; break;
      case ',': case ' ': continue;
      default: throw InvalidSlotSet(std::string("unknown slot '") + c + "' (expected n, k or l)");
    }
    if (mask & bit) throw InvalidSlotSet(std::string("slot '") + c + "' repeated");
    mask |= bit;
  }
  return mask;
}

SumLabel negate_slots(const SumLabel& p, SlotMask mask) {
  SumLabel r = p;
  if (mask & kSlotN) { r.n = checked_neg(p.n); r.t = checked_add(r.t, p.n); }
  if (mask & kSlotK) { r.k = checked_neg(p.k); r.t = checked_add(r.t, p.k); }
  if (mask & kSlotL) { r.l = checked_neg(p.l); r.t = checked_add(r.t, p.l); }
  return r;
}

IdentityInstance rewrite_neg(const IdentityInstance& inst, SlotMask negated) {
  if (!inst.eq8) throw InvalidSlotSet("rewrite_neg needs an instance built by make_eq8");
  if (negated & ~kSlotsAll) throw InvalidSlotSet("slot mask outside {n,k,l}");
  if (negated == 0) return inst;

  const SlotMask total = inst.eq8->negated ^ negated;
  const SumLabel params = negate_slots(inst.eq8->params, total);

  IdentityInstance out = inst;
  out.eq8->negated = total;
  // Old subset S becomes S xor total in the re-rooted parameters; the value is unchanged.
  out.lhs_slots = params.restrict(kSlotsAll ^ total);
  for (std::size_t i = 0; i < kEq8Slots.size(); ++i) {
    out.terms[i].slots = params.restrict(slot_mask(kEq8Slots[i]) ^ total);
  }
  return out;
}

int canonical_case(int case_number) {
  switch (case_number) {
    case 7: return 4;
    case 8: return 3;
    case 9: return 2;
    case 10: return 1;
    default: return case_number;
  }
}

namespace {

/// Case conditions in listed order. With `relaxed`, every > reads >= and every < reads <=.
std::vector<int> matching_cases(Int n, Int k, Int l, Int t, bool relaxed) {
  auto pos = [relaxed](Int x) { return relaxed ? x >= 0 : x > 0; };
  auto neg = [relaxed](Int x) { return relaxed ? x <= 0 : x < 0; };
  const Int a = checked_add(n, t), b = checked_add(k, t), c = checked_add(l, t);
  const Int nk = checked_add(a, k), nl = checked_add(a, l), kl = checked_add(b, l);
  const Int all = checked_add(nk, l);

  std::vector<int> out;
  if (pos(t)) out.push_back(1);
  if (neg(t)) {
    if (pos(a) && pos(b) && pos(c)) out.push_back(2);
    if (pos(a) && pos(b) && neg(c)) out.push_back(3);
    if (pos(a) && neg(b) && neg(c) && pos(kl)) out.push_back(4);
    if (pos(a) && neg(kl)) out.push_back(5);
    if (neg(a) && neg(b) && neg(c) && pos(nk) && pos(kl) && pos(nl)) out.push_back(6);
    if (neg(a) && pos(nk) && neg(kl) && pos(nl)) out.push_back(7);
    if (pos(nk) && neg(kl) && neg(nl)) out.push_back(8);
    if (neg(nk) && neg(kl) && neg(nl) && pos(all)) out.push_back(9);
    if (neg(all)) out.push_back(10);
  }
  return out;
}

}  // namespace

std::vector<int> strict_cases(Int n, Int k, Int l, Int t) { return matching_cases(n, k, l, t, false); }

CaseId case_classify(Int n, Int k, Int l, Int t) {
  if (n < 0 || k < 0 || l < 0) {
    throw std::invalid_argument("case_classify: n, k, l must be non-negative (apply rewrite_neg first)");
  }
  std::array<Int, 3> sorted{n, k, l};
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (bool relaxed : {false, true}) {
    for (const auto& [x, y, z] : {std::array<Int, 3>{n, k, l}, sorted}) {
      const auto cases = matching_cases(x, y, z, t, relaxed);
      if (!cases.empty()) return {cases.front(), canonical_case(cases.front())};
    }
  }
  // Unreachable: the closed conditions on the sorted triple cover the whole domain.
  throw std::logic_error("case_classify: no case matched");
}

IdentityInstance make_eq27(Int a, Int k, Int n, Int t) {
  IdentityInstance inst;
  inst.family = "eq27";
  auto at = [&](Int mult) { return checked_add(checked_mul(mult, a), t); };
  inst.lhs = {1, at(n)};
  const Int d = checked_sub(n, k);
  push_nonzero(inst, label_term(triangular(d), at(checked_add(k, 1))));
  push_nonzero(inst, label_term(checked_neg(checked_mul(checked_sub(d, 1), checked_add(d, 1))), at(k)));
  push_nonzero(inst, label_term(triangular(checked_sub(d, 1)), at(checked_sub(k, 1))));
  return inst;
}

IdentityInstance make_eq26(Int n) {
  IdentityInstance inst = make_eq27(1, 0, n, 0);
  inst.family = "eq26";
  return inst;
}

IdentityInstance make_eq28(Int a, Int n, Int t) {
  IdentityInstance inst = make_eq27(a, 1, n, t);
  inst.family = "eq28";
  return inst;
}

IdentityInstance make_eq29(Int a, Int n, Int t) {
  IdentityInstance inst;
  inst.family = "eq29";
  inst.lhs = {1, checked_add(checked_mul(n, a), t)};
  push_nonzero(inst, label_term(triangular(n), checked_add(a, t)));
  push_nonzero(inst, Term{triangular(checked_sub(n, 1)), BLabel{a, t}, std::nullopt});
  push_nonzero(inst, label_term(triangular(checked_sub(n, 2)), t));
  return inst;
}

IdentityInstance make_eq30(Int n) {
  IdentityInstance inst = make_eq29(1, n, 0);
  inst.family = "eq30";
  return inst;
}

IdentityInstance make_eq31(Int n) {
  IdentityInstance inst = make_eq29(3, n, -1);
  inst.family = "eq31";
  return inst;
}

IdentityInstance make_eq32(Int n) {
  IdentityInstance inst = make_eq29(2, n, 1);
  inst.family = "eq32";
  return inst;
}

std::string to_string(const SumLabel& s) {
  std::ostringstream os;
  os << "<" << s.n << "+" << s.k << "+" << s.l << "+" << s.t << ">";
  std::string out = os.str();
  // "+-3" reads better as "-3".
  for (std::size_t pos; (pos = out.find("+-")) != std::string::npos;) out.replace(pos, 2, "-");
  return out;
}

namespace {

std::string value_string(const TermValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TriangleLabel>) {
          return to_string(x);
        } else if constexpr (std::is_same_v<T, BLabel>) {
          return "<b_{" + std::to_string(x.a) + "," + std::to_string(x.t) + "}>";
        } else {
          std::ostringstream os;
          os << x;
          return os.str();
        }
      },
      v);
}

}  // namespace

std::string to_string(const Term& t) {
  const Int mag = t.coeff < 0 ? -t.coeff : t.coeff;
  std::string s = mag == 1 ? "" : std::to_string(mag);
  return s + value_string(t.value);
}

std::string to_string(const IdentityInstance& inst) {
  std::string out = to_string(inst.lhs) + " =";
  bool first = true;
  for (const Term& t : inst.terms) {
    if (first) {
      out += t.coeff < 0 ? " -" : " ";
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    out += to_string(t);
    first = false;
  }
  if (first) out += " 0";
  return out;
}

}  // namespace tri
