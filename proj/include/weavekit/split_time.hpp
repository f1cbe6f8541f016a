#pragma once

#include "weavekit/rational.hpp"

#include <compare>
#include <string>

namespace weavekit {

// The split real line: every time t carries a side tag, (t,-) just before t
// and (t,+) just after. Lexicographic order, minus before plus.
enum class Side : int { Minus = 0, Plus = 1 };

struct SplitTime {
  Rat t;
  Side side = Side::Plus;

  friend bool operator==(const SplitTime& a, const SplitTime& b) {
    return a.t == b.t && a.side == b.side;
  }
  friend bool operator!=(const SplitTime& a, const SplitTime& b) { return !(a == b); }
  friend bool operator<(const SplitTime& a, const SplitTime& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.side == Side::Minus && b.side == Side::Plus;
  }
  friend bool operator>(const SplitTime& a, const SplitTime& b) { return b < a; }
  friend bool operator<=(const SplitTime& a, const SplitTime& b) { return !(b < a); }
  friend bool operator>=(const SplitTime& a, const SplitTime& b) { return !(a < b); }

  std::string to_string() const {
    return "(" + t.to_string() + (side == Side::Minus ? ",-)" : ",+)");
  }
};

inline SplitTime minus_of(const Rat& t) { return SplitTime{t, Side::Minus}; }
inline SplitTime plus_of(const Rat& t) { return SplitTime{t, Side::Plus}; }

enum class Ordering : int { Less = -1, Equal = 0, Greater = 1 };

inline Ordering cmp(const SplitTime& a, const SplitTime& b) {
  if (a < b) return Ordering::Less;
  if (b < a) return Ordering::Greater;
  return Ordering::Equal;
}

// Closed interval [lo, hi] in the split line. The open/closed redundancy of
// the split-line notation ((s-,t+) = [s+,t-]) is resolved by storing the
// closed form only.
struct SplitInterval {
  SplitTime lo;
  SplitTime hi;

  SplitInterval(SplitTime l, SplitTime h) : lo(l), hi(h) {
    if (h < l) throw std::invalid_argument("SplitInterval: hi < lo");
  }
};

inline bool interval_contains(const SplitInterval& iv, const SplitTime& a) {
  return iv.lo <= a && a <= iv.hi;
}

}  // namespace weavekit
