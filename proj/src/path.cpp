#include "weavekit/path.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace weavekit {

namespace {

// Value on the segment from a at ta to b at tb, evaluated at t in [ta, tb].
ExtVal interp(const ExtVal& a, const Rat& ta, const ExtVal& b, const Rat& tb, const Rat& t) {
  if (t == ta) return a;
  if (t == tb) return b;
  Rat x = a.x + (b.x - a.x) * (t - ta) / (tb - ta);
  BoundaryTag tag = (a.x == b.x && a.tag == b.tag) ? a.tag : BoundaryTag::Interior;
  return ExtVal{x, tag};
}

bool within_fill(const Rat& x, const Rat& l, const Rat& r) {
  return (l <= r) ? (l <= x && x <= r) : (r <= x && x <= l);
}

}  // namespace

CadlagPath::CadlagPath(std::vector<Breakpoint> bps, bool extends_below, bool extends_above)
    : bps_(std::move(bps)), extends_below_(extends_below), extends_above_(extends_above) {
  if (bps_.empty()) throw std::invalid_argument("CadlagPath: no breakpoints");
  for (std::size_t i = 1; i < bps_.size(); ++i) {
    if (!(bps_[i - 1].t < bps_[i].t)) {
      throw std::invalid_argument("CadlagPath: breakpoint times not strictly increasing");
    }
  }
  // Drop interior breakpoints that are jump-free and collinear with their
  // neighbours so that equal path values have equal representations.
  if (bps_.size() > 2) {
    std::vector<Breakpoint> kept;
    kept.reserve(bps_.size());
    kept.push_back(bps_.front());
    for (std::size_t i = 1; i + 1 < bps_.size(); ++i) {
      const Breakpoint& prev = kept.back();
      const Breakpoint& cur = bps_[i];
      const Breakpoint& next = bps_[i + 1];
      if (cur.left == cur.right) {
        ExtVal recon = interp(prev.right, prev.t, next.left, next.t, cur.t);
        if (recon == cur.left) continue;
      }
      kept.push_back(cur);
    }
    kept.push_back(bps_.back());
    bps_ = std::move(kept);
  }
}

CadlagPath make_constant(const Rat& level, const Rat& t_lo, const Rat& t_hi,
                         bool extends_below, bool extends_above, BoundaryTag tag) {
  ExtVal v{level, tag};
  std::vector<Breakpoint> bps;
  bps.push_back(Breakpoint{t_lo, v, v});
  if (t_hi > t_lo) bps.push_back(Breakpoint{t_hi, v, v});
  return CadlagPath(std::move(bps), extends_below, extends_above);
}

std::size_t CadlagPath::locate(const Rat& t) const {
  assert(!(t < sigma()));
  std::size_t lo = 0, hi = bps_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (bps_[mid].t <= t) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

bool CadlagPath::in_domain(const SplitTime& a) const {
  if (a.t < sigma()) return extends_below_;
  if (a.t == sigma() && a.side == Side::Minus) return true;
  if (a.t > tau()) return extends_above_;
  if (a.t == tau() && a.side == Side::Plus) return true;
  return true;
}

ExtVal CadlagPath::eval(const SplitTime& a) const {
  if (a.t < sigma()) {
    if (!extends_below_) throw DomainError("eval: split time before initial time");
    return bps_.front().left;
  }
  if (a.t > tau()) {
    if (!extends_above_) throw DomainError("eval: split time after final time");
    return bps_.back().right;
  }
  std::size_t i = locate(a.t);
  if (bps_[i].t == a.t) {
    return a.side == Side::Minus ? bps_[i].left : bps_[i].right;
  }
  return interp(bps_[i].right, bps_[i].t, bps_[i + 1].left, bps_[i + 1].t, a.t);
}

bool CadlagPath::passes_through(const GraphPoint& z) const {
  if (z.t < sigma()) return extends_below_ && z.x.x == bps_.front().left.x;
  if (z.t > tau()) return extends_above_ && z.x.x == bps_.back().right.x;
  std::size_t i = locate(z.t);
  if (bps_[i].t == z.t) {
    return within_fill(z.x.x, bps_[i].left.x, bps_[i].right.x);
  }
  ExtVal v = interp(bps_[i].right, bps_[i].t, bps_[i + 1].left, bps_[i + 1].t, z.t);
  return v.x == z.x.x;
}

Ordering CadlagPath::graph_order(const GraphPoint& w, const GraphPoint& z) const {
  if (!passes_through(w) || !passes_through(z)) throw NotOnPath("graph_order: point not on path");
  if (w.t < z.t) return Ordering::Less;
  if (z.t < w.t) return Ordering::Greater;
  Rat l = value_minus(w.t).x;
  Rat r = value_plus(w.t).x;
  if (w.x.x == z.x.x) return Ordering::Equal;
  bool ascending = l <= r;
  if (ascending ? (w.x.x < z.x.x) : (z.x.x < w.x.x)) return Ordering::Less;
  return Ordering::Greater;
}

bool CadlagPath::has_any_jump() const {
  for (const Breakpoint& bp : bps_) {
    if (bp.left.x != bp.right.x) return true;
  }
  return false;
}

std::size_t CadlagPath::value_hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  mix(extends_below_ ? 1 : 0);
  mix(extends_above_ ? 2 : 0);
  for (const Breakpoint& bp : bps_) {
    mix(bp.t.hash());
    mix(bp.left.x.hash());
    mix(static_cast<std::uint64_t>(bp.left.tag));
    mix(bp.right.x.hash());
    mix(static_cast<std::uint64_t>(bp.right.tag));
  }
  return static_cast<std::size_t>(h);
}

bool operator==(const CadlagPath& a, const CadlagPath& b) {
  if (a.extends_below_ != b.extends_below_ || a.extends_above_ != b.extends_above_) return false;
  if (a.bps_.size() != b.bps_.size()) return false;
  for (std::size_t i = 0; i < a.bps_.size(); ++i) {
    if (a.bps_[i].t != b.bps_[i].t || a.bps_[i].left != b.bps_[i].left ||
        a.bps_[i].right != b.bps_[i].right) {
      return false;
    }
  }
  return true;
}

bool CadlagPath::canonical_less(const CadlagPath& a, const CadlagPath& b) {
  if (a.extends_below_ != b.extends_below_) return a.extends_below_ && !b.extends_below_;
  if (a.sigma() != b.sigma()) return a.sigma() < b.sigma();
  if (a.initial_left().x != b.initial_left().x) return a.initial_left().x < b.initial_left().x;
  std::size_t n = std::min(a.bps_.size(), b.bps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Breakpoint& x = a.bps_[i];
    const Breakpoint& y = b.bps_[i];
    if (x.t != y.t) return x.t < y.t;
    if (x.left.x != y.left.x) return x.left.x < y.left.x;
    if (x.right.x != y.right.x) return x.right.x < y.right.x;
    if (x.left.tag != y.left.tag) return x.left.tag < y.left.tag;
    if (x.right.tag != y.right.tag) return x.right.tag < y.right.tag;
  }
  if (a.bps_.size() != b.bps_.size()) return a.bps_.size() < b.bps_.size();
  if (a.extends_above_ != b.extends_above_) return !a.extends_above_ && b.extends_above_;
  return false;
}

Polyline interpolated_graph(const CadlagPath& f) {
  Polyline p;
  const auto& bps = f.breakpoints();
  p.vertices.push_back(GraphPoint{bps.front().left, bps.front().t});
  if (bps.front().right != bps.front().left) {
    p.vertices.push_back(GraphPoint{bps.front().right, bps.front().t});
  }
  for (std::size_t i = 1; i < bps.size(); ++i) {
    p.vertices.push_back(GraphPoint{bps[i].left, bps[i].t});
    if (bps[i].right != bps[i].left) {
      p.vertices.push_back(GraphPoint{bps[i].right, bps[i].t});
    }
  }
  return p;
}

std::vector<Polyline> closed_graph(const CadlagPath& f) {
  std::vector<Polyline> pieces;
  const auto& bps = f.breakpoints();
  Polyline cur;
  cur.vertices.push_back(GraphPoint{bps.front().left, bps.front().t});
  if (bps.front().right.x != bps.front().left.x) {
    pieces.push_back(cur);
    cur = Polyline{};
    cur.vertices.push_back(GraphPoint{bps.front().right, bps.front().t});
  }
  for (std::size_t i = 1; i < bps.size(); ++i) {
    cur.vertices.push_back(GraphPoint{bps[i].left, bps[i].t});
    if (bps[i].right.x != bps[i].left.x) {
      pieces.push_back(cur);
      cur = Polyline{};
      cur.vertices.push_back(GraphPoint{bps[i].right, bps[i].t});
    }
  }
  pieces.push_back(cur);
  return pieces;
}

CadlagPath restrict_path(const CadlagPath& f, const GraphPoint& z) {
  if (!f.passes_through(z)) throw NotOnPath("restrict: point not on interpolated graph");
  const auto& bps = f.bps_;
  std::vector<Breakpoint> out;

  auto tagged = [&](const Rat& x, const ExtVal& like_a, const ExtVal& like_b) {
    if (x == like_a.x) return ExtVal{x, like_a.tag};
    if (x == like_b.x) return ExtVal{x, like_b.tag};
    return interior(x);
  };

  if (z.t > f.tau()) {
    ExtVal v = bps.back().right;
    out.push_back(Breakpoint{z.t, v, v});
    return CadlagPath(std::move(out), false, f.extends_above_);
  }
  if (z.t < f.sigma()) {
    ExtVal v = bps.front().left;
    out.push_back(Breakpoint{z.t, v, v});
    out.insert(out.end(), bps.begin(), bps.end());
    return CadlagPath(std::move(out), false, f.extends_above_);
  }
  std::size_t i = f.locate(z.t);
  if (bps[i].t == z.t) {
    ExtVal zv = tagged(z.x.x, bps[i].left, bps[i].right);
    out.push_back(Breakpoint{z.t, zv, bps[i].right});
    out.insert(out.end(), bps.begin() + static_cast<std::ptrdiff_t>(i) + 1, bps.end());
  } else {
    ExtVal zv = interp(bps[i].right, bps[i].t, bps[i + 1].left, bps[i + 1].t, z.t);
    out.push_back(Breakpoint{z.t, zv, zv});
    out.insert(out.end(), bps.begin() + static_cast<std::ptrdiff_t>(i) + 1, bps.end());
  }
  return CadlagPath(std::move(out), false, f.extends_above_);
}

CadlagPath restrict_span(const CadlagPath& f, const GraphPoint& w, const GraphPoint& z) {
  if (!f.passes_through(w) || !f.passes_through(z)) {
    throw NotOnPath("restrict_span: endpoint not on interpolated graph");
  }
  if (f.graph_order(w, z) == Ordering::Greater) {
    throw OrderViolation("restrict_span: endpoints out of graph order");
  }
  if (w.t == z.t) {
    ExtVal lv{w.x.x, BoundaryTag::Interior};
    ExtVal rv{z.x.x, BoundaryTag::Interior};
    std::vector<Breakpoint> out{Breakpoint{w.t, lv, rv}};
    return CadlagPath(std::move(out), false, false);
  }
  CadlagPath head = restrict_path(f, w);
  const auto& bps = head.bps_;
  std::vector<Breakpoint> out;
  std::size_t i = head.locate(z.t);
  out.insert(out.end(), bps.begin(), bps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  if (bps[i].t == z.t) {
    out.back().right = ExtVal{z.x.x, BoundaryTag::Interior};
    if (out.back().left.x == z.x.x) out.back().right.tag = out.back().left.tag;
  } else {
    ExtVal zv = interp(bps[i].right, bps[i].t, bps[i + 1].left, bps[i + 1].t, z.t);
    out.push_back(Breakpoint{z.t, zv, zv});
  }
  return CadlagPath(std::move(out), false, false);
}

bool extends(const CadlagPath& f, const CadlagPath& g) {
  // Degenerate single-point path: containment of its vertical fill, with the
  // fill direction matching the jump direction of g at that time.
  bool f_degenerate = f.sigma() == f.tau() && !f.extends_below() && !f.extends_above();
  if (f_degenerate) {
    GraphPoint a{f.initial_left(), f.sigma()};
    GraphPoint b{f.final_right(), f.sigma()};
    if (!g.passes_through(a) || !g.passes_through(b)) return false;
    return g.graph_order(a, b) != Ordering::Greater;
  }

  if (f.extends_below() && !g.extends_below()) return false;
  if (f.extends_above() && !g.extends_above()) return false;

  if (!f.extends_below()) {
    GraphPoint start{f.initial_left(), f.sigma()};
    if (!g.passes_through(start)) return false;
    SplitTime sp = plus_of(f.sigma());
    if (!g.in_domain(sp)) return false;
    if (g.eval(sp).x != f.initial_right().x) return false;
    // The initial fill of f must sit on g's jump on the f(sigma-) side.
    GraphPoint rp{f.initial_right(), f.sigma()};
    if (g.graph_order(start, rp) == Ordering::Greater) return false;
  }

  // Merge breakpoint times of both paths over the overlap and compare side
  // values; linear pieces agree everywhere iff they agree at merged sides.
  Rat lo = f.extends_below() ? min(f.sigma(), g.sigma()) : f.sigma();
  Rat hi;
  if (f.extends_above()) {
    hi = max(f.tau(), g.tau());
  } else {
    hi = f.tau();
  }
  std::vector<Rat> times;
  for (const Breakpoint& bp : f.breakpoints()) {
    if (bp.t >= lo && bp.t <= hi) times.push_back(bp.t);
  }
  for (const Breakpoint& bp : g.breakpoints()) {
    if (bp.t >= lo && bp.t <= hi) times.push_back(bp.t);
  }
  times.push_back(lo);
  times.push_back(hi);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  for (const Rat& t : times) {
    for (Side side : {Side::Minus, Side::Plus}) {
      SplitTime s{t, side};
      bool skip_low = !f.extends_below() && s <= minus_of(f.sigma());
      bool skip_high = !f.extends_above() && s >= plus_of(f.tau());
      if (skip_low || skip_high) continue;
      if (!f.in_domain(s) || !g.in_domain(s)) return false;
      if (f.eval(s).x != g.eval(s).x) return false;
    }
  }

  if (!f.extends_above()) {
    // Final jump of f must sit inside g's fill at tau, leaving from g(tau-).
    GraphPoint lp{ExtVal{f.value_minus(f.tau()).x, BoundaryTag::Interior}, f.tau()};
    GraphPoint rp{f.final_right(), f.tau()};
    if (!g.passes_through(rp)) return false;
    if (!g.passes_through(lp)) return false;
    if (g.graph_order(lp, rp) == Ordering::Greater) return false;
  } else {
    if (f.final_right().x != g.final_right().x) return false;
  }
  return true;
}

CadlagPath rotate(const CadlagPath& f) {
  const auto& bps = f.breakpoints();
  std::vector<Breakpoint> out;
  out.reserve(bps.size());
  for (auto it = bps.rbegin(); it != bps.rend(); ++it) {
    out.push_back(Breakpoint{-it->t, negate(it->right), negate(it->left)});
  }
  return CadlagPath(std::move(out), f.extends_above(), f.extends_below());
}

namespace {

struct Cand {
  SplitTime s;
  Rat value;
};

}  // namespace

Rat modulus(const CadlagPath& f, const Rat& T, const Rat& delta) {
  if (!(T > Rat(0)) || !(delta > Rat(0))) {
    throw ParamError("modulus: T and delta must be positive");
  }
  Rat lo = f.extends_below() ? -T : f.sigma();
  Rat hi = f.extends_above() ? T : f.tau();
  if (lo < -T) lo = -T;
  if (hi > T) hi = T;
  if (!(lo < hi) && !(lo == hi)) return Rat(0);

  std::vector<Cand> cands;
  auto add = [&](const SplitTime& s) {
    if (s.t < lo || s.t > hi) return;
    if (s.t == -T && s.side == Side::Minus) return;  // times strictly above -T
    if (s.t == T && s.side == Side::Plus) return;    // and strictly below T
    if (!f.in_domain(s)) return;
    cands.push_back(Cand{s, f.eval(s).x});
  };
  for (const Breakpoint& bp : f.breakpoints()) {
    add(minus_of(bp.t));
    add(plus_of(bp.t));
  }
  add(plus_of(lo));
  add(minus_of(hi));
  // Optimal windows may pin one endpoint exactly delta away from a
  // breakpoint, approached from inside the open constraint.
  {
    std::vector<Rat> base;
    base.reserve(cands.size());
    for (const Cand& c : cands) base.push_back(c.s.t);
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (const Rat& t : base) {
      add(minus_of(t + delta));
      add(plus_of(t - delta));
    }
    // Width-delta windows balanced with f(t1) = f(t3), both endpoints inside
    // segments: solve the linear balance equation per segment pair.
    std::size_t m = base.size();
    for (std::size_t i = 0; i + 1 < m; ++i) {
      Rat a1 = base[i], b1 = base[i + 1];
      Rat v1 = f.eval(plus_of(a1)).x, w1 = f.eval(minus_of(b1)).x;
      Rat s1 = (w1 - v1) / (b1 - a1);
      for (std::size_t j = i; j + 1 < m; ++j) {
        Rat a3 = base[j], b3 = base[j + 1];
        if (b3 <= a1 + delta) continue;
        if (a3 >= b1 + delta) break;
        Rat v3 = f.eval(plus_of(a3)).x, w3 = f.eval(minus_of(b3)).x;
        Rat s3 = (w3 - v3) / (b3 - a3);
        if (s1 == s3) continue;
        // v1 + s1 (t - a1) = v3 + s3 (t + delta - a3)
        Rat t_star = (v3 - v1 + s1 * a1 - s3 * a3 + s3 * delta) / (s1 - s3);
        if (t_star < a1 || t_star > b1) continue;
        Rat t3 = t_star + delta;
        if (t3 < a3 || t3 > b3) continue;
        add(minus_of(t_star));
        add(plus_of(t_star));
        add(minus_of(t3));
        add(plus_of(t3));
      }
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.s < b.s; });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const Cand& a, const Cand& b) { return a.s == b.s; }),
              cands.end());
  if (cands.size() < 2) return Rat(0);

  // The time window (t1, t3) is open and its width is strictly below delta;
  // width-exactly-delta pairs are admitted only through one-sided limits.
  auto admissible = [&](const Cand& a, const Cand& c) {
    if (!(a.s.t < c.s.t)) return false;
    Rat width = c.s.t - a.s.t;
    if (width < delta) return true;
    if (width == delta && (a.s.side == Side::Plus || c.s.side == Side::Minus)) return true;
    return false;
  };

  Rat best(0);
  const std::size_t n = cands.size();
  for (std::size_t i = 0; i < n; ++i) {
    // Scan t3 groups of equal real time rightwards, keeping running extrema
    // of the strictly-interior candidate values.
    bool have_inner = false;
    Rat inner_min(0), inner_max(0);
    Rat lim_lo = f.eval(plus_of(cands[i].s.t)).x;
    std::size_t j = i + 1;
    while (j < n) {
      std::size_t k = j;
      while (k < n && cands[k].s.t == cands[j].s.t) ++k;
      if (cands[j].s.t - cands[i].s.t > delta) break;
      if (cands[j].s.t > cands[i].s.t) {
        Rat lim_hi = f.eval(minus_of(cands[j].s.t)).x;
        for (std::size_t m = j; m < k; ++m) {
          if (!admissible(cands[i], cands[m])) continue;
          Rat m_min = min(lim_lo, lim_hi);
          Rat m_max = max(lim_lo, lim_hi);
          if (have_inner) {
            m_min = min(m_min, inner_min);
            m_max = max(m_max, inner_max);
          }
          Rat b_lo = min(cands[i].value, cands[m].value);
          Rat b_hi = max(cands[i].value, cands[m].value);
          if (m_max - b_hi > best) best = m_max - b_hi;
          if (b_lo - m_min > best) best = b_lo - m_min;
        }
        for (std::size_t m = j; m < k; ++m) {
          if (!have_inner) {
            inner_min = inner_max = cands[m].value;
            have_inner = true;
          } else {
            inner_min = min(inner_min, cands[m].value);
            inner_max = max(inner_max, cands[m].value);
          }
        }
      }
      j = k;
    }
  }
  return best;
}

}  // namespace weavekit
