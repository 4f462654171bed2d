#pragma once

#include "afkit/parallel.hpp"
#include "afkit/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace afkit {

using Point = std::vector<Rat>;

inline constexpr std::size_t kMaxBodyDim = 4;
/// Default cap on the number of pairwise vertex sums formed by one
/// Minkowski sum.
inline constexpr std::size_t kDefaultVertexBudget = 50000;

/// Nonempty convex polytope in Q^d, stored as its extreme points in
/// lexicographic order. Every constructor canonicalizes, so the vertex list
/// is exactly the extreme-point set of its own hull.
class Polytope {
public:
  /// Hull of the given points (see convex_hull).
  static Polytope hull_of(const std::vector<Point>& points);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Point>& vertices() const { return vertices_; }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

private:
  Polytope(std::size_t dim, std::vector<Point> vertices)
      : dim_(dim), vertices_(std::move(vertices)) {}

  std::size_t dim_ = 0;
  std::vector<Point> vertices_;
};

/// Extreme points of conv(points). Flat (lower-dimensional) point sets are
/// allowed. Requires 1 <= d <= 4 and at least one point.
Polytope convex_hull(const std::vector<Point>& points);

/// Exact d-dimensional volume; 0 for bodies without interior.
Rat volume(const Polytope& p);

/// Hull of all pairwise vertex sums. BudgetExceeded when the number of sums
/// exceeds `budget`.
Polytope minkowski_sum(const Polytope& p, const Polytope& q,
                       std::size_t budget = kDefaultVertexBudget);

/// lambda * P for lambda >= 0; lambda = 0 gives the origin.
Polytope dilate(const Polytope& p, const Rat& lambda);

Polytope translate(const Polytope& p, const Point& t);

/// lambda > 0 with L = lambda K + t for some translation t, if one exists.
/// Two single points are homothetic with lambda = 1.
std::optional<Rat> homothety_ratio(const Polytope& k, const Polytope& l);

/// V(K_1, ..., K_d) = (1/d!) sum_{eps} (-1)^{d+|eps|} vol(sum eps_i K_i).
/// The 2^d - 1 hull-and-volume evaluations are split across threads under
/// Exec::parallel.
Rat mixed_volume(const std::vector<Polytope>& bodies, Exec exec = Exec::parallel,
                 std::size_t budget = kDefaultVertexBudget);

/// Exact check of vol(sum lambda_i K_i) against the multinomial expansion in
/// mixed volumes V(K_1[i_1], ..., K_m[i_m]).
bool minkowski_expansion_check(const std::vector<Polytope>& bodies,
                               const std::vector<Rat>& lambdas,
                               std::size_t budget = kDefaultVertexBudget);

/// Named generators.
Polytope make_box(const std::vector<Rat>& edges);
Polytope make_simplex(std::size_t d);
Polytope make_segment(const Point& v);
/// Minkowski sum of the segments [0, v_i].
Polytope make_zonotope(const std::vector<Point>& generators,
                       std::size_t budget = kDefaultVertexBudget);

namespace detail {

/// Triangulated boundary of a full-dimensional hull, exposed for tests:
/// each facet lists `dim` indices into `points`, and `interior` is a point
/// strictly inside.
struct Triangulation {
  std::size_t dim = 0;
  std::vector<Point> points;
  std::vector<std::vector<std::size_t>> facets;
  Point interior;
};

struct HullData {
  std::vector<Point> extreme;
  std::size_t affine_dim = 0;
  Rat volume;
};

/// Hull plus volume in one pass; the basis of convex_hull and volume.
HullData compute_hull(const std::vector<Point>& points, std::size_t dim);

/// Triangulated boundary for full-dimensional inputs (throws DomainError if
/// the points are flat).
Triangulation triangulate_boundary(const std::vector<Point>& points, std::size_t dim);

} // namespace detail

} // namespace afkit
