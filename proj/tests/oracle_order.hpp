#pragma once

// Constructive left-of oracle: searches for witnessing bi-infinite extensions
// f', g' with f' <= g' pointwise, trying the three explicit constructions
// from the proof of the L/R characterisation. Independent of the L/R
// implementation path.

#include "weavekit/path.hpp"

#include <functional>
#include <vector>

namespace wkt_oracle {

using namespace weavekit;

using Ext = std::function<Rat(const SplitTime&)>;

inline bool dominated(const CadlagPath& f, const CadlagPath& g, const Ext& fe, const Ext& ge) {
  std::vector<Rat> times;
  for (const Breakpoint& bp : f.breakpoints()) times.push_back(bp.t);
  for (const Breakpoint& bp : g.breakpoints()) times.push_back(bp.t);
  Rat lo = min(f.sigma(), g.sigma()) - Rat(1);
  Rat hi = max(f.tau(), g.tau()) + Rat(1);
  times.push_back(lo);
  times.push_back(hi);
  for (const Rat& t : times) {
    for (Side s : {Side::Minus, Side::Plus}) {
      if (ge(SplitTime{t, s}) < fe(SplitTime{t, s})) return false;
    }
  }
  return true;
}

inline bool left_of_oracle(const CadlagPath& f, const CadlagPath& g) {
  const Rat kBig(1000000);

  auto raw = [](const CadlagPath& p) {
    return [&p](const SplitTime& s) { return p.eval(s).x; };
  };
  // extend below sigma by a constant, keeping the path's own left value at
  // (sigma,-)
  auto const_ext = [](const CadlagPath& p, const Rat& c) {
    return [&p, c](const SplitTime& s) {
      if (s < minus_of(p.sigma())) return c;
      return p.eval(s).x;
    };
  };

  // Case 1: f dives to the window bottom, g freezes at its own left value.
  {
    Ext fe = const_ext(f, -kBig);
    Ext ge = const_ext(g, g.initial_left().x);
    if (dominated(f, g, fe, ge)) return true;
  }
  // Case 2: f freezes, g escapes to the window top.
  {
    Ext fe = const_ext(f, f.initial_left().x);
    Ext ge = const_ext(g, kBig);
    if (dominated(f, g, fe, ge)) return true;
  }
  // Case 3: the later path copies the other's increments backwards in time.
  if (f.sigma() >= g.sigma()) {
    Rat base = f.initial_left().x;
    Rat anchor = g.eval(minus_of(f.sigma())).x;
    const CadlagPath& gg = g;
    Rat sigma_f = f.sigma(), sigma_g = g.sigma();
    Ext fe = [&f, &gg, base, anchor, sigma_f, sigma_g](const SplitTime& s) {
      if (s >= minus_of(sigma_f)) return f.eval(s).x;
      if (s >= plus_of(sigma_g)) return base + gg.eval(s).x - anchor;
      return base + gg.initial_left().x - anchor;
    };
    Ext ge = const_ext(g, g.initial_left().x);
    if (dominated(f, g, fe, ge)) return true;
  }
  if (g.sigma() >= f.sigma()) {
    Rat base = g.initial_left().x;
    Rat anchor = f.eval(minus_of(g.sigma())).x;
    const CadlagPath& ff = f;
    Rat sigma_g = g.sigma(), sigma_f = f.sigma();
    Ext ge = [&g, &ff, base, anchor, sigma_g, sigma_f](const SplitTime& s) {
      if (s >= minus_of(sigma_g)) return g.eval(s).x;
      if (s >= plus_of(sigma_f)) return base + ff.eval(s).x - anchor;
      return base + ff.initial_left().x - anchor;
    };
    Ext fe = const_ext(f, f.initial_left().x);
    if (dominated(f, g, fe, ge)) return true;
  }
  return false;
}

}  // namespace wkt_oracle
