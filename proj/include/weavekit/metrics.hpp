#pragma once

#include "weavekit/path.hpp"

#include <vector>

namespace weavekit {

// Point of the compactified plane. v = +-1 are the two added points at
// t = +-infinity, where u is pinned to 0.
struct CompactPlanePoint {
  double u = 0.0;
  double v = 0.0;
};

enum class MetricChoice : int { J1 = 0, J2 = 1, M1 = 2, M2 = 3 };

CompactPlanePoint compactify(const ExtVal& x, double t);
CompactPlanePoint compactify_time_infinity(bool positive);

double dist_plane(const CompactPlanePoint& p, const CompactPlanePoint& q);

// A connected piece of a compactified graph; single-vertex pieces are points.
using CompactPiece = std::vector<CompactPlanePoint>;

// Exact Hausdorff distance between finite unions of segments and points
// under the box metric (to ~1e-13; branch-and-bound on the segment suprema).
double hausdorff(const std::vector<CompactPiece>& A, const std::vector<CompactPiece>& B);

// Compactified graph pieces of a path, refined so no chord exceeds eps_ref,
// with tails running to the added points when the path extends beyond the
// window. interpolated=true gives H(f); false gives G(f).
std::vector<CompactPiece> compact_graph(const CadlagPath& f, bool interpolated, double eps_ref);

double dist_path(const CadlagPath& f, const CadlagPath& g, MetricChoice which,
                 double eps_ref = 1e-3);

double dist_path_sets(const std::vector<CadlagPath>& A, const std::vector<CadlagPath>& B,
                      MetricChoice which, double eps_ref = 1e-3);

// sup_f w_{T,delta}(f) for each delta; deltas must be positive and decreasing.
std::vector<double> tightness_profile(const std::vector<CadlagPath>& A, double T,
                                      const std::vector<double>& deltas);

}  // namespace weavekit
