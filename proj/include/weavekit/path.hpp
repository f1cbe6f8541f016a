#pragma once

#include "weavekit/errors.hpp"
#include "weavekit/rational.hpp"
#include "weavekit/split_time.hpp"

#include <optional>
#include <vector>

namespace weavekit {

// Spatial value clipped to the window [-X_max, X_max]. A boundary tag records
// that the clipped value stands for -inf/+inf; tagged values equal the clip
// bound exactly.
enum class BoundaryTag : int { Interior = 0, NegInf = 1, PosInf = 2 };

struct ExtVal {
  Rat x;
  BoundaryTag tag = BoundaryTag::Interior;

  friend bool operator==(const ExtVal& a, const ExtVal& b) { return a.x == b.x && a.tag == b.tag; }
  friend bool operator!=(const ExtVal& a, const ExtVal& b) { return !(a == b); }
};

inline ExtVal interior(const Rat& x) { return ExtVal{x, BoundaryTag::Interior}; }
inline ExtVal neg_inf(const Rat& x_max) { return ExtVal{-x_max, BoundaryTag::NegInf}; }
inline ExtVal pos_inf(const Rat& x_max) { return ExtVal{x_max, BoundaryTag::PosInf}; }
inline ExtVal negate(const ExtVal& v) {
  BoundaryTag t = v.tag == BoundaryTag::NegInf   ? BoundaryTag::PosInf
                  : v.tag == BoundaryTag::PosInf ? BoundaryTag::NegInf
                                                 : BoundaryTag::Interior;
  return ExtVal{-v.x, t};
}

struct GraphPoint {
  ExtVal x;
  Rat t;

  friend bool operator==(const GraphPoint& a, const GraphPoint& b) { return a.x == b.x && a.t == b.t; }
  friend bool operator!=(const GraphPoint& a, const GraphPoint& b) { return !(a == b); }
};

// One vertex list; consecutive vertices are connected segments. Vertices are
// ordered by the graph order: time nondecreasing, vertical runs ordered from
// the left value towards the right value of the jump.
struct Polyline {
  std::vector<GraphPoint> vertices;
};

struct Breakpoint {
  Rat t;
  ExtVal left;
  ExtVal right;
};

// Finite piecewise-linear cadlag path on a window. The first breakpoint's
// left value is the independent f(sigma-), so a jump at the initial time is
// representable. extends_below/extends_above mark conceptually infinite ends:
// the value continues constant from the first left / last right value.
class CadlagPath {
 public:
  CadlagPath(std::vector<Breakpoint> bps, bool extends_below, bool extends_above);

  const std::vector<Breakpoint>& breakpoints() const { return bps_; }
  const Rat& sigma() const { return bps_.front().t; }
  const Rat& tau() const { return bps_.back().t; }
  bool extends_below() const { return extends_below_; }
  bool extends_above() const { return extends_above_; }

  ExtVal initial_left() const { return bps_.front().left; }
  ExtVal initial_right() const { return bps_.front().right; }
  ExtVal final_right() const { return bps_.back().right; }
  GraphPoint initial_point() const { return GraphPoint{bps_.front().left, bps_.front().t}; }

  bool in_domain(const SplitTime& a) const;
  ExtVal eval(const SplitTime& a) const;  // throws DomainError
  ExtVal value_minus(const Rat& t) const { return eval(SplitTime{t, Side::Minus}); }
  ExtVal value_plus(const Rat& t) const { return eval(SplitTime{t, Side::Plus}); }

  bool passes_through(const GraphPoint& z) const;  // z in H(f), exact

  // Graph order on H(f); both points must lie on the path.
  Ordering graph_order(const GraphPoint& w, const GraphPoint& z) const;

  bool has_initial_jump() const { return bps_.front().left != bps_.front().right; }
  bool has_any_jump() const;

  std::size_t value_hash() const;

  friend bool operator==(const CadlagPath& a, const CadlagPath& b);
  friend bool operator!=(const CadlagPath& a, const CadlagPath& b) { return !(a == b); }

  // Deterministic ordering for canonical set output: initial time, initial
  // left value, then lexicographic on the remaining representation.
  static bool canonical_less(const CadlagPath& a, const CadlagPath& b);

 private:
  // index of last breakpoint with time <= t
  std::size_t locate(const Rat& t) const;

  std::vector<Breakpoint> bps_;
  bool extends_below_ = false;
  bool extends_above_ = false;

  friend CadlagPath restrict_path(const CadlagPath&, const GraphPoint&);
  friend CadlagPath restrict_span(const CadlagPath&, const GraphPoint&, const GraphPoint&);
};

CadlagPath make_constant(const Rat& level, const Rat& t_lo, const Rat& t_hi,
                         bool extends_below = true, bool extends_above = true,
                         BoundaryTag tag = BoundaryTag::Interior);

Polyline interpolated_graph(const CadlagPath& f);
std::vector<Polyline> closed_graph(const CadlagPath& f);

CadlagPath restrict_path(const CadlagPath& f, const GraphPoint& z);  // f|_z
CadlagPath restrict_span(const CadlagPath& f, const GraphPoint& w, const GraphPoint& z);

// true iff g extends f, i.e. H(f) is an order-compatible subset of H(g).
bool extends(const CadlagPath& f, const CadlagPath& g);

CadlagPath concat(const CadlagPath& backward, const CadlagPath& forward);
CadlagPath rotate(const CadlagPath& f);

// Exact Skorohod M1 modulus w_{T,delta}; supremum over split-time triples
// with real times strictly inside (-T, T), attained on a finite candidate set
// for piecewise-linear paths.
Rat modulus(const CadlagPath& f, const Rat& T, const Rat& delta);
inline double modulus(const CadlagPath& f, double T, double delta) {
  if (!(T > 0) || !(delta > 0)) throw ParamError("modulus: T and delta must be positive");
  return modulus(f, Rat::from_double(T), Rat::from_double(delta)).to_double();
}

}  // namespace weavekit
