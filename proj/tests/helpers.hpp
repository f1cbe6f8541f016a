#pragma once

#include "weavekit/path.hpp"

#include <vector>

namespace wkt {

using namespace weavekit;

// Unit step at time 0 on [-1, 1]: value 0 before, 1 from 0+ onwards.
inline CadlagPath unit_step(bool extends_above = true) {
  std::vector<Breakpoint> bps{
      Breakpoint{Rat(-1), interior(Rat(0)), interior(Rat(0))},
      Breakpoint{Rat(0), interior(Rat(0)), interior(Rat(1))},
      Breakpoint{Rat(1), interior(Rat(1)), interior(Rat(1))},
  };
  return CadlagPath(std::move(bps), false, extends_above);
}

// Ramp 0 v nt ^ 1 on [-1, 1].
inline CadlagPath ramp(int n, bool extends_above = true) {
  std::vector<Breakpoint> bps{
      Breakpoint{Rat(-1), interior(Rat(0)), interior(Rat(0))},
      Breakpoint{Rat(0), interior(Rat(0)), interior(Rat(0))},
      Breakpoint{Rat(1, n), interior(Rat(1)), interior(Rat(1))},
      Breakpoint{Rat(1), interior(Rat(1)), interior(Rat(1))},
  };
  return CadlagPath(std::move(bps), false, extends_above);
}

// Piecewise-constant forward path on integer grid times; values[i] holds on
// [times[i], times[i+1]), the last value from the last time onwards.
inline CadlagPath step_path(const Rat& sigma, const Rat& initial_left,
                            const std::vector<std::pair<Rat, Rat>>& jumps, const Rat& t_end,
                            bool extends_above = true) {
  std::vector<Breakpoint> bps;
  Rat cur = jumps.empty() ? initial_left : jumps.front().second;
  // first breakpoint: independent left value, then the value after sigma
  Rat first_right = jumps.empty() || jumps.front().first != sigma ? initial_left : jumps.front().second;
  bps.push_back(Breakpoint{sigma, interior(initial_left), interior(first_right)});
  Rat running = first_right;
  for (const auto& [t, v] : jumps) {
    if (t == sigma) continue;
    bps.push_back(Breakpoint{t, interior(running), interior(v)});
    running = v;
  }
  if (t_end > bps.back().t) {
    bps.push_back(Breakpoint{t_end, interior(running), interior(running)});
  }
  return CadlagPath(std::move(bps), false, extends_above);
}

inline GraphPoint pt(const Rat& x, const Rat& t) { return GraphPoint{interior(x), t}; }

}  // namespace wkt
