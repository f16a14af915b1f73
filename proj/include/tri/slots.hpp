#pragma once

// The seven terms of the generalized triangle-sum identity, indexed by which of
// the increments n, k, l they absorb on top of the base <t>.

#include <array>
#include <optional>
#include <string_view>

namespace tri {

/// Bit 0 = n, bit 1 = k, bit 2 = l.
using SlotMask = unsigned;

inline constexpr SlotMask kSlotN = 1u;
inline constexpr SlotMask kSlotK = 2u;
inline constexpr SlotMask kSlotL = 4u;
inline constexpr SlotMask kSlotsAll = 7u;

enum class Slot { NK, NL, KL, N, K, L, T };

/// Term order used everywhere: <n+k+t>, <n+l+t>, <k+l+t>, -<n+t>, -<k+t>, -<l+t>, +<t>.
inline constexpr std::array<Slot, 7> kEq8Slots{Slot::NK, Slot::NL, Slot::KL, Slot::N, Slot::K, Slot::L, Slot::T};

constexpr SlotMask slot_mask(Slot s) {
  switch (s) {
    case Slot::NK: return kSlotN | kSlotK;
    case Slot::NL: return kSlotN | kSlotL;
    case Slot::KL: return kSlotK | kSlotL;
    case Slot::N: return kSlotN;
    case Slot::K: return kSlotK;
    case Slot::L: return kSlotL;
    case Slot::T: return 0;
  }
  return 0;
}

/// +1 for the pair terms and <t>, -1 for the single-increment terms.
constexpr int slot_sign(Slot s) {
  const SlotMask m = slot_mask(s);
  const int bits = ((m & 1u) != 0) + ((m & 2u) != 0) + ((m & 4u) != 0);
  return bits == 1 ? -1 : 1;
}

constexpr std::string_view slot_name(Slot s) {
  switch (s) {
    case Slot::NK: return "nk";
    case Slot::NL: return "nl";
    case Slot::KL: return "kl";
    case Slot::N: return "n";
    case Slot::K: return "k";
    case Slot::L: return "l";
    case Slot::T: return "t";
  }
  return "?";
}

constexpr std::optional<Slot> parse_slot(std::string_view name) {
  for (Slot s : kEq8Slots) {
    if (slot_name(s) == name) return s;
  }
  return std::nullopt;
}

}  // namespace tri
