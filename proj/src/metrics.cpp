#include "weavekit/metrics.hpp"

#include "weavekit/errors.hpp"

#include <algorithm>
#include <cmath>

namespace weavekit {

CompactPlanePoint compactify(const ExtVal& x, double t) {
  double tx = 0.0;
  switch (x.tag) {
    case BoundaryTag::NegInf: tx = -1.0; break;
    case BoundaryTag::PosInf: tx = 1.0; break;
    case BoundaryTag::Interior: tx = std::tanh(x.x.to_double()); break;
  }
  return CompactPlanePoint{tx / (1.0 + std::fabs(t)), std::tanh(t)};
}

CompactPlanePoint compactify_time_infinity(bool positive) {
  return CompactPlanePoint{0.0, positive ? 1.0 : -1.0};
}

double dist_plane(const CompactPlanePoint& p, const CompactPlanePoint& q) {
  return std::max(std::fabs(p.u - q.u), std::fabs(p.v - q.v));
}

namespace {

// Distance from a point to a segment under the box metric: minimize
// max(|A1 + B1 l|, |A2 + B2 l|) over l in [0, 1]; convex, so candidate
// parameters are the interval ends, the zero of each branch and the two
// branch crossings.
double point_segment_dist(const CompactPlanePoint& p, const CompactPlanePoint& a,
                          const CompactPlanePoint& b) {
  double A1 = a.u - p.u, B1 = b.u - a.u;
  double A2 = a.v - p.v, B2 = b.v - a.v;
  double cand[6];
  int n = 0;
  cand[n++] = 0.0;
  cand[n++] = 1.0;
  if (B1 != 0.0) cand[n++] = -A1 / B1;
  if (B2 != 0.0) cand[n++] = -A2 / B2;
  if (B1 != B2) cand[n++] = -(A1 - A2) / (B1 - B2);
  if (B1 != -B2) cand[n++] = -(A1 + A2) / (B1 + B2);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    double l = std::clamp(cand[i], 0.0, 1.0);
    double val = std::max(std::fabs(A1 + B1 * l), std::fabs(A2 + B2 * l));
    best = std::min(best, val);
  }
  return best;
}

double point_set_dist(const CompactPlanePoint& p, const std::vector<CompactPiece>& B) {
  double best = std::numeric_limits<double>::infinity();
  for (const CompactPiece& piece : B) {
    if (piece.size() == 1) {
      best = std::min(best, dist_plane(p, piece[0]));
      continue;
    }
    for (std::size_t i = 0; i + 1 < piece.size(); ++i) {
      best = std::min(best, point_segment_dist(p, piece[i], piece[i + 1]));
    }
  }
  return best;
}

CompactPlanePoint lerp(const CompactPlanePoint& a, const CompactPlanePoint& b, double l) {
  return CompactPlanePoint{a.u + (b.u - a.u) * l, a.v + (b.v - a.v) * l};
}

// sup over the segment [a,b] of the distance to B; the distance function is
// 1-Lipschitz along the segment (box metric), giving the midpoint bound.
void segment_sup_dist(const CompactPlanePoint& a, const CompactPlanePoint& b,
                      const std::vector<CompactPiece>& B, double& best) {
  struct Frame {
    double l0, l1, f0, f1;
  };
  double seg_len = dist_plane(a, b);
  double f0 = point_set_dist(a, B);
  double f1 = point_set_dist(b, B);
  std::vector<Frame> stack{Frame{0.0, 1.0, f0, f1}};
  constexpr double kTol = 1e-13;
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    best = std::max(best, std::max(fr.f0, fr.f1));
    double bound = 0.5 * (fr.f0 + fr.f1 + seg_len * (fr.l1 - fr.l0));
    if (bound <= best + kTol) continue;
    double lm = 0.5 * (fr.l0 + fr.l1);
    double fm = point_set_dist(lerp(a, b, lm), B);
    stack.push_back(Frame{fr.l0, lm, fr.f0, fm});
    stack.push_back(Frame{lm, fr.l1, fm, fr.f1});
  }
}

double directed_hausdorff(const std::vector<CompactPiece>& A, const std::vector<CompactPiece>& B) {
  double best = 0.0;
  for (const CompactPiece& piece : A) {
    if (piece.size() == 1) {
      best = std::max(best, point_set_dist(piece[0], B));
      continue;
    }
    for (std::size_t i = 0; i + 1 < piece.size(); ++i) {
      segment_sup_dist(piece[i], piece[i + 1], B, best);
    }
  }
  return best;
}

}  // namespace

double hausdorff(const std::vector<CompactPiece>& A, const std::vector<CompactPiece>& B) {
  if (A.empty() || B.empty()) throw EmptySet("hausdorff: empty set");
  return std::max(directed_hausdorff(A, B), directed_hausdorff(B, A));
}

namespace {

// Refine the compactified image of the straight segment between two window
// points until every chord is short. Subdivision happens in the original
// coordinates; the image curve is smooth, so chord length controls error.
void refine_window_segment(const GraphPoint& a, const GraphPoint& b, double eps,
                           CompactPiece& out) {
  struct Frame {
    GraphPoint a, b;
    CompactPlanePoint ca, cb;
    int depth;
  };
  CompactPlanePoint ca = compactify(a.x, a.t.to_double());
  CompactPlanePoint cb = compactify(b.x, b.t.to_double());
  std::vector<Frame> stack{Frame{a, b, ca, cb, 0}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (dist_plane(fr.ca, fr.cb) <= eps || fr.depth >= 40) {
      out.push_back(fr.cb);
      continue;
    }
    Rat tm = (fr.a.t + fr.b.t) / Rat(2);
    Rat xm = (fr.a.x.x + fr.b.x.x) / Rat(2);
    BoundaryTag tag = (fr.a.x.tag == fr.b.x.tag) ? fr.a.x.tag : BoundaryTag::Interior;
    GraphPoint mid{ExtVal{xm, tag}, tm};
    CompactPlanePoint cm = compactify(mid.x, tm.to_double());
    // Stack order: emit the first half before the second.
    stack.push_back(Frame{mid, fr.b, cm, fr.cb, fr.depth + 1});
    stack.push_back(Frame{fr.a, mid, fr.ca, cm, fr.depth + 1});
  }
}

// Tail along constant spatial value from the window edge to (*, +-inf),
// parametrised by v = tanh(t).
void refine_tail(const ExtVal& level, double t_edge, bool upward, double eps, CompactPiece& out) {
  double x_c = 0.0;
  switch (level.tag) {
    case BoundaryTag::NegInf: x_c = -1.0; break;
    case BoundaryTag::PosInf: x_c = 1.0; break;
    case BoundaryTag::Interior: x_c = std::tanh(level.x.to_double()); break;
  }
  auto at_v = [&](double v) {
    if (std::fabs(v) >= 1.0) return compactify_time_infinity(upward);
    double t = std::atanh(v);
    return CompactPlanePoint{x_c / (1.0 + std::fabs(t)), v};
  };
  double v0 = std::tanh(t_edge);
  double v1 = upward ? 1.0 : -1.0;
  struct Frame {
    double v0, v1;
    CompactPlanePoint c0, c1;
    int depth;
  };
  std::vector<Frame> stack{Frame{v0, v1, at_v(v0), at_v(v1), 0}};
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    if (dist_plane(fr.c0, fr.c1) <= eps || fr.depth >= 40) {
      out.push_back(fr.c1);
      continue;
    }
    double vm = 0.5 * (fr.v0 + fr.v1);
    CompactPlanePoint cm = at_v(vm);
    stack.push_back(Frame{vm, fr.v1, cm, fr.c1, fr.depth + 1});
    stack.push_back(Frame{fr.v0, vm, fr.c0, cm, fr.depth + 1});
  }
}

CompactPiece refine_polyline(const Polyline& poly, double eps) {
  CompactPiece out;
  out.push_back(compactify(poly.vertices.front().x, poly.vertices.front().t.to_double()));
  for (std::size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
    refine_window_segment(poly.vertices[i], poly.vertices[i + 1], eps, out);
  }
  return out;
}

}  // namespace

std::vector<CompactPiece> compact_graph(const CadlagPath& f, bool interpolated, double eps_ref) {
  std::vector<Polyline> pieces;
  if (interpolated) {
    pieces.push_back(interpolated_graph(f));
  } else {
    pieces = closed_graph(f);
  }
  std::vector<CompactPiece> out;
  out.reserve(pieces.size());
  for (const Polyline& p : pieces) out.push_back(refine_polyline(p, eps_ref));

  if (f.extends_below()) {
    CompactPiece head;
    head.push_back(compactify_time_infinity(false));
    refine_tail(f.initial_left(), f.sigma().to_double(), false, eps_ref, head);
    // The tail was generated outward; flip so the piece runs upward in time.
    std::reverse(head.begin(), head.end());
    head.insert(head.end(), out.front().begin() + 1, out.front().end());
    out.front() = std::move(head);
  }
  if (f.extends_above()) {
    refine_tail(f.final_right(), f.tau().to_double(), true, eps_ref, out.back());
  }
  return out;
}

namespace {

std::vector<CompactPlanePoint> flatten(const std::vector<CompactPiece>& pieces) {
  std::vector<CompactPlanePoint> seq;
  for (const CompactPiece& p : pieces) seq.insert(seq.end(), p.begin(), p.end());
  return seq;
}

// Discrete Frechet distance between vertex sequences; rolling-row DP.
double discrete_frechet(const std::vector<CompactPlanePoint>& P,
                        const std::vector<CompactPlanePoint>& Q) {
  const std::size_t n = P.size(), m = Q.size();
  std::vector<double> prev(m), cur(m);
  for (std::size_t j = 0; j < m; ++j) {
    double d = dist_plane(P[0], Q[j]);
    prev[j] = (j == 0) ? d : std::max(prev[j - 1], d);
  }
  for (std::size_t i = 1; i < n; ++i) {
    cur[0] = std::max(prev[0], dist_plane(P[i], Q[0]));
    for (std::size_t j = 1; j < m; ++j) {
      double reach = std::min(prev[j], std::min(prev[j - 1], cur[j - 1]));
      cur[j] = std::max(reach, dist_plane(P[i], Q[j]));
    }
    std::swap(prev, cur);
  }
  return prev[m - 1];
}

}  // namespace

double dist_path(const CadlagPath& f, const CadlagPath& g, MetricChoice which, double eps_ref) {
  bool interpolated = which == MetricChoice::M1 || which == MetricChoice::M2;
  auto A = compact_graph(f, interpolated, eps_ref);
  auto B = compact_graph(g, interpolated, eps_ref);
  if (which == MetricChoice::M2 || which == MetricChoice::J2) {
    return hausdorff(A, B);
  }
  return discrete_frechet(flatten(A), flatten(B));
}

double dist_path_sets(const std::vector<CadlagPath>& A, const std::vector<CadlagPath>& B,
                      MetricChoice which, double eps_ref) {
  if (A.empty() || B.empty()) throw EmptySet("dist_path_sets: empty set");
  std::vector<std::vector<double>> d(A.size(), std::vector<double>(B.size()));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < B.size(); ++j) {
      d[i][j] = dist_path(A[i], B[j], which, eps_ref);
    }
  }
  double h = 0.0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    double m = *std::min_element(d[i].begin(), d[i].end());
    h = std::max(h, m);
  }
  for (std::size_t j = 0; j < B.size(); ++j) {
    double m = d[0][j];
    for (std::size_t i = 1; i < A.size(); ++i) m = std::min(m, d[i][j]);
    h = std::max(h, m);
  }
  return h;
}

std::vector<double> tightness_profile(const std::vector<CadlagPath>& A, double T,
                                      const std::vector<double>& deltas) {
  if (!(T > 0)) throw ParamError("tightness_profile: T must be positive");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0)) throw ParamError("tightness_profile: deltas must be positive");
    if (i > 0 && !(deltas[i] < deltas[i - 1])) {
      throw ParamError("tightness_profile: deltas must be decreasing");
    }
  }
  Rat Tr = Rat::from_double(T);
  std::vector<double> out;
  out.reserve(deltas.size());
  for (double d : deltas) {
    Rat dr = Rat::from_double(d);
    Rat sup(0);
    for (const CadlagPath& f : A) {
      Rat w = modulus(f, Tr, dr);
      if (w > sup) sup = w;
    }
    out.push_back(sup.to_double());
  }
  return out;
}

}  // namespace weavekit
