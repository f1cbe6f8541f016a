#pragma once

#include "weavekit/path.hpp"

#include <optional>
#include <vector>

namespace weavekit {

enum class CrossKind : int { None = 0, LeftToRight = 1, RightToLeft = 2, Both = 3 };

// Boundary description of L(f) and R(f) at one breakpoint side: L present
// means L_a(f) = [-inf, l_bound), R present means R_a(f) = (r_bound, +inf].
struct SideRecord {
  SplitTime at;
  std::optional<Rat> l_bound;
  std::optional<Rat> r_bound;
};

struct SideProfile {
  std::vector<SideRecord> records;
};

SideProfile side_profile(const CadlagPath& f);

// L_s(f) nonempty at split time s, under the initial/final jump rules.
bool l_present(const CadlagPath& f, const SplitTime& s);
bool r_present(const CadlagPath& f, const SplitTime& s);

// f lies weakly to the left of g: L(f) and R(g) are disjoint.
bool left_of(const CadlagPath& f, const CadlagPath& g);

bool pair_noncrossing(const CadlagPath& f, const CadlagPath& g);

// Crossing direction of f relative to g.
CrossKind classify_crossing(const CadlagPath& f, const CadlagPath& g);

// f and g cross by at least eps at their common latest initial time.
bool eps_cross(const CadlagPath& f, const CadlagPath& g, double eps);

// Maximal elements of the extension order, sorted by the left-of order when
// the input is non-crossing.
std::vector<CadlagPath> maximal_elements(const std::vector<CadlagPath>& paths);

// The coverage order: A <= B iff (A_up intersect B) subset A and A subset B_up.
bool coverage_order(const std::vector<CadlagPath>& A, const std::vector<CadlagPath>& B);

bool is_ramified(const std::vector<CadlagPath>& paths, const GraphPoint& z);

// Batched lookup: for every query point, the indices of paths whose
// interpolated graph passes through it.
std::vector<std::vector<std::size_t>> paths_through_points(
    const std::vector<CadlagPath>& paths, const std::vector<GraphPoint>& points);

}  // namespace weavekit
