#include "weavekit/order.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace weavekit {

namespace {

// Split times at which the witness predicate can change for the pair (f, g):
// both sides of every breakpoint time of either path, plus one time strictly
// below and strictly above the union of their windows. Linearity inside the
// merged slabs makes these sufficient.
std::vector<SplitTime> scan_points(const CadlagPath& f, const CadlagPath& g) {
  std::vector<Rat> times;
  times.reserve(f.breakpoints().size() + g.breakpoints().size() + 2);
  for (const Breakpoint& bp : f.breakpoints()) times.push_back(bp.t);
  for (const Breakpoint& bp : g.breakpoints()) times.push_back(bp.t);
  times.push_back(min(f.sigma(), g.sigma()) - Rat(1));
  times.push_back(max(f.tau(), g.tau()) + Rat(1));
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::vector<SplitTime> pts;
  pts.reserve(2 * times.size());
  for (const Rat& t : times) {
    pts.push_back(minus_of(t));
    pts.push_back(plus_of(t));
  }
  return pts;
}

// x in L(f) and x in R(g) for some x, at split time s: requires both sets
// present and g(s) < f(s).
bool lr_witness(const CadlagPath& f, const CadlagPath& g, const SplitTime& s) {
  if (!l_present(f, s) || !r_present(g, s)) return false;
  return g.eval(s).x < f.eval(s).x;
}

struct Bound {
  SplitTime at;
  bool any = false;
};

}  // namespace

bool l_present(const CadlagPath& f, const SplitTime& s) {
  if (!f.extends_below()) {
    SplitTime start = minus_of(f.sigma());
    if (s < start) return false;
    if (s == start) return f.initial_right().x < f.initial_left().x;
  }
  if (!f.extends_above()) {
    SplitTime end = plus_of(f.tau());
    if (s > end) return false;
    if (s == end) return f.value_minus(f.tau()).x < f.final_right().x;
  }
  return true;
}

bool r_present(const CadlagPath& f, const SplitTime& s) {
  if (!f.extends_below()) {
    SplitTime start = minus_of(f.sigma());
    if (s < start) return false;
    if (s == start) return f.initial_left().x < f.initial_right().x;
  }
  if (!f.extends_above()) {
    SplitTime end = plus_of(f.tau());
    if (s > end) return false;
    if (s == end) return f.final_right().x < f.value_minus(f.tau()).x;
  }
  return true;
}

SideProfile side_profile(const CadlagPath& f) {
  SideProfile out;
  for (const Breakpoint& bp : f.breakpoints()) {
    for (Side side : {Side::Minus, Side::Plus}) {
      SplitTime s{bp.t, side};
      SideRecord rec;
      rec.at = s;
      if (l_present(f, s)) rec.l_bound = f.eval(s).x;
      if (r_present(f, s)) rec.r_bound = f.eval(s).x;
      out.records.push_back(rec);
    }
  }
  return out;
}

bool left_of(const CadlagPath& f, const CadlagPath& g) {
  for (const SplitTime& s : scan_points(f, g)) {
    if (lr_witness(f, g, s)) return false;
  }
  return true;
}

bool pair_noncrossing(const CadlagPath& f, const CadlagPath& g) {
  return left_of(f, g) || left_of(g, f);
}

CrossKind classify_crossing(const CadlagPath& f, const CadlagPath& g) {
  // Witness times where f sits strictly right of g, and strictly left of g.
  Bound right_min, right_max, left_min, left_max;
  for (const SplitTime& s : scan_points(f, g)) {
    if (lr_witness(f, g, s)) {
      if (!right_min.any || s < right_min.at) { right_min.at = s; right_min.any = true; }
      if (!right_max.any || right_max.at < s) { right_max.at = s; right_max.any = true; }
    }
    if (lr_witness(g, f, s)) {
      if (!left_min.any || s < left_min.at) { left_min.at = s; left_min.any = true; }
      if (!left_max.any || left_max.at < s) { left_max.at = s; left_max.any = true; }
    }
  }
  if (!right_min.any || !left_min.any) return CrossKind::None;
  bool l2r = left_min.at < right_max.at;   // left of g first, right of g later
  bool r2l = right_min.at < left_max.at;   // right of g first, left of g later
  if (l2r && r2l) return CrossKind::Both;
  if (l2r) return CrossKind::LeftToRight;
  return CrossKind::RightToLeft;
}

bool eps_cross(const CadlagPath& f, const CadlagPath& g, double eps) {
  if (!(eps > 0)) throw ParamError("eps_cross: eps must be positive");
  if (f.extends_below() && g.extends_below()) return false;  // sigma not finite
  Rat e = Rat::from_double(eps);
  Rat sigma;
  if (f.extends_below()) sigma = g.sigma();
  else if (g.extends_below()) sigma = f.sigma();
  else sigma = max(f.sigma(), g.sigma());

  SplitTime sm = minus_of(sigma), sp = plus_of(sigma);
  if (!f.in_domain(sm) || !g.in_domain(sm)) return false;
  Rat fm = f.eval(sm).x, fp = f.eval(sp).x;
  Rat gm = g.eval(sm).x, gp = g.eval(sp).x;
  if (!(gm + e <= fm)) return false;
  if (!(fp + e <= gp)) return false;
  if (!(gm + e <= gp)) return false;
  if (!(fp + e <= fm)) return false;
  for (const SplitTime& s : scan_points(f, g)) {
    if (s < sp) continue;
    if (lr_witness(f, g, s)) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> paths_through_points(
    const std::vector<CadlagPath>& paths, const std::vector<GraphPoint>& points) {
  std::vector<std::vector<std::size_t>> hits(points.size());
  // Order query points by time so each path segment scans only the points in
  // its own time range.
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].t < points[b].t;
  });
  std::vector<Rat> times;
  times.reserve(order.size());
  for (std::size_t idx : order) times.push_back(points[idx].t);

  auto first_at_or_after = [&](const Rat& t) {
    std::size_t lo = 0, hi = times.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (times[mid] < t) lo = mid + 1;
      else hi = mid;
    }
    return lo;
  };

  for (std::size_t pi = 0; pi < paths.size(); ++pi) {
    const CadlagPath& f = paths[pi];
    Rat lo = f.extends_below() ? min(f.sigma(), times.empty() ? f.sigma() : times.front())
                               : f.sigma();
    Rat hi = f.extends_above() ? max(f.tau(), times.empty() ? f.tau() : times.back()) : f.tau();
    std::size_t k = first_at_or_after(lo);
    for (; k < times.size() && times[k] <= hi; ++k) {
      const GraphPoint& z = points[order[k]];
      if (f.passes_through(z)) hits[order[k]].push_back(pi);
    }
  }
  return hits;
}

namespace {

bool strictly_extends(const CadlagPath& f, const CadlagPath& g) {
  return !(f == g) && extends(f, g);
}

}  // namespace

std::vector<CadlagPath> maximal_elements(const std::vector<CadlagPath>& paths) {
  std::vector<CadlagPath> out;
  if (paths.empty()) return out;

  std::vector<bool> maximal(paths.size(), true);
  if (paths.size() <= 256) {
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = 0; j < paths.size(); ++j) {
        if (i == j) continue;
        if (strictly_extends(paths[i], paths[j])) { maximal[i] = false; break; }
      }
    }
  } else {
    std::vector<GraphPoint> starts;
    starts.reserve(paths.size());
    for (const CadlagPath& f : paths) starts.push_back(f.initial_point());
    auto hits = paths_through_points(paths, starts);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j : hits[i]) {
        if (j == i) continue;
        if (strictly_extends(paths[i], paths[j])) { maximal[i] = false; break; }
      }
    }
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (maximal[i]) out.push_back(paths[i]);
  }
  // Drop value-duplicates, then order by the left-of relation.
  std::sort(out.begin(), out.end(), CadlagPath::canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::sort(out.begin(), out.end(),
            [](const CadlagPath& a, const CadlagPath& b) { return !left_of(b, a); });
  return out;
}

bool coverage_order(const std::vector<CadlagPath>& A, const std::vector<CadlagPath>& B) {
  std::unordered_set<std::size_t> a_hashes;
  a_hashes.reserve(A.size() * 2);
  for (const CadlagPath& a : A) a_hashes.insert(a.value_hash());
  auto value_member = [](const std::vector<CadlagPath>& set, const CadlagPath& p) {
    for (const CadlagPath& q : set) {
      if (q == p) return true;
    }
    return false;
  };

  // A subset of B_up: every a extends into some b.
  {
    std::vector<GraphPoint> starts;
    starts.reserve(A.size());
    for (const CadlagPath& a : A) starts.push_back(a.initial_point());
    auto hits = paths_through_points(B, starts);
    for (std::size_t i = 0; i < A.size(); ++i) {
      bool found = false;
      for (std::size_t j : hits[i]) {
        if (extends(A[i], B[j])) { found = true; break; }
      }
      if (!found) return false;
    }
  }
  // A_up intersect B subset A: any b extendable into A must be a member of A.
  {
    std::vector<GraphPoint> starts;
    starts.reserve(B.size());
    for (const CadlagPath& b : B) starts.push_back(b.initial_point());
    auto hits = paths_through_points(A, starts);
    for (std::size_t i = 0; i < B.size(); ++i) {
      bool in_up = false;
      for (std::size_t j : hits[i]) {
        if (extends(B[i], A[j])) { in_up = true; break; }
      }
      if (in_up) {
        if (a_hashes.count(B[i].value_hash()) == 0 || !value_member(A, B[i])) return false;
      }
    }
  }
  return true;
}

bool is_ramified(const std::vector<CadlagPath>& paths, const GraphPoint& z) {
  std::vector<const CadlagPath*> through;
  for (const CadlagPath& f : paths) {
    if (f.passes_through(z)) through.push_back(&f);
  }
  if (through.size() < 2) return false;

  bool all_up = true, all_down = true;
  for (const CadlagPath* f : through) {
    all_up = all_up && f->extends_above();
    all_down = all_down && f->extends_below();
  }
  if (all_up) {
    // Forward paths through z are suffix-like; run a chain check against the
    // running extension-maximum.
    std::sort(through.begin(), through.end(), [](const CadlagPath* a, const CadlagPath* b) {
      return b->sigma() < a->sigma();
    });
    const CadlagPath* top = through.front();
    for (std::size_t i = 1; i < through.size(); ++i) {
      if (extends(*top, *through[i])) top = through[i];
      else if (!extends(*through[i], *top)) return true;
    }
    return false;
  }
  if (all_down) {
    std::sort(through.begin(), through.end(), [](const CadlagPath* a, const CadlagPath* b) {
      return a->tau() < b->tau();
    });
    const CadlagPath* top = through.front();
    for (std::size_t i = 1; i < through.size(); ++i) {
      if (extends(*top, *through[i])) top = through[i];
      else if (!extends(*through[i], *top)) return true;
    }
    return false;
  }
  for (std::size_t i = 0; i < through.size(); ++i) {
    for (std::size_t j = i + 1; j < through.size(); ++j) {
      if (!extends(*through[i], *through[j]) && !extends(*through[j], *through[i])) return true;
    }
  }
  return false;
}

CadlagPath concat(const CadlagPath& backward, const CadlagPath& forward) {
  if (backward.tau() != forward.sigma()) {
    throw GlueMismatch("concat: final and initial times differ");
  }
  if (backward.final_right().x != forward.initial_left().x) {
    throw GlueMismatch("concat: endpoint values differ");
  }
  if (!pair_noncrossing(backward, forward)) {
    throw CrossingAtSeam("concat: pieces cross");
  }
  std::vector<Breakpoint> out(backward.breakpoints());
  const auto& fb = forward.breakpoints();
  out.back().right = fb.front().right;
  out.insert(out.end(), fb.begin() + 1, fb.end());
  return CadlagPath(std::move(out), backward.extends_below(), forward.extends_above());
}

}  // namespace weavekit
