#include "afkit/convexvol.hpp"

#include "afkit/errors.hpp"
#include "afkit/mixdisc.hpp"
#include "parallel_sum.hpp"

#include <bit>
#include <functional>
#include <string>

namespace afkit {

namespace {

std::vector<Point> pair_sums(const Polytope& p, const Polytope& q, std::size_t budget) {
  if (p.dim() != q.dim()) throw DimensionError("minkowski_sum: dimension mismatch");
  const std::size_t count = p.vertices().size() * q.vertices().size();
  if (count > budget) {
    throw BudgetExceeded("minkowski_sum: " + std::to_string(count) +
                         " pairwise sums exceed the vertex budget of " + std::to_string(budget));
  }
  std::vector<Point> sums;
  sums.reserve(count);
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      Point s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  }
  return sums;
}

std::size_t check_bodies(const std::vector<Polytope>& bodies, const char* what) {
  const std::size_t d = bodies.size();
  if (d == 0) throw DimensionError(std::string(what) + ": empty body tuple");
  if (d > kMaxBodyDim) {
    throw DomainError(std::string(what) + ": dimension " + std::to_string(d) +
                      " exceeds ceiling " + std::to_string(kMaxBodyDim));
  }
  for (const auto& b : bodies) {
    if (b.dim() != d) {
      throw DimensionError(std::string(what) + ": tuple of " + std::to_string(d) +
                           " bodies must live in dimension " + std::to_string(d));
    }
  }
  return d;
}

// vol(sum_{i in mask} K_i), forming the hull once per partial sum.
Rat subset_volume(const std::vector<Polytope>& bodies, std::uint64_t mask, std::size_t budget) {
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    if (mask >> i & 1U) chosen.push_back(i);
  }
  if (chosen.size() == 1) return volume(bodies[chosen[0]]);
  Polytope acc = bodies[chosen[0]];
  for (std::size_t c = 1; c + 1 < chosen.size(); ++c) {
    acc = minkowski_sum(acc, bodies[chosen[c]], budget);
  }
  return detail::compute_hull(pair_sums(acc, bodies[chosen.back()], budget), acc.dim()).volume;
}

} // namespace

Polytope Polytope::hull_of(const std::vector<Point>& points) {
  if (points.empty()) throw DomainError("convex hull: empty point set");
  auto data = detail::compute_hull(points, points.front().size());
  return Polytope(points.front().size(), std::move(data.extreme));
}

Polytope convex_hull(const std::vector<Point>& points) { return Polytope::hull_of(points); }

Rat volume(const Polytope& p) { return detail::compute_hull(p.vertices(), p.dim()).volume; }

Polytope minkowski_sum(const Polytope& p, const Polytope& q, std::size_t budget) {
  return Polytope::hull_of(pair_sums(p, q, budget));
}

Polytope dilate(const Polytope& p, const Rat& lambda) {
  if (sgn(lambda) < 0) throw DomainError("dilate: negative factor");
  std::vector<Point> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    Point s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] * lambda;
    pts.push_back(std::move(s));
  }
  return Polytope::hull_of(pts);
}

Polytope translate(const Polytope& p, const Point& t) {
  if (t.size() != p.dim()) throw DimensionError("translate: dimension mismatch");
  std::vector<Point> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    Point s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] + t[i];
    pts.push_back(std::move(s));
  }
  return Polytope::hull_of(pts);
}

std::optional<Rat> homothety_ratio(const Polytope& k, const Polytope& l) {
  if (k.dim() != l.dim()) throw DimensionError("homothety_ratio: dimension mismatch");
  const auto& kv = k.vertices();
  const auto& lv = l.vertices();
  if (kv.size() != lv.size()) return std::nullopt;
  if (kv.size() == 1) return Rat(1);
  // A positive dilation plus translation preserves lexicographic order, so
  // the canonical vertex lists correspond index by index.
  std::optional<Rat> lambda;
  for (std::size_t i = 1; i < kv.size(); ++i) {
    for (std::size_t c = 0; c < k.dim(); ++c) {
      const Rat dk = kv[i][c] - kv[0][c];
      const Rat dl = lv[i][c] - lv[0][c];
      if (sgn(dk) == 0) {
        if (sgn(dl) != 0) return std::nullopt;
        continue;
      }
      const Rat ratio = dl / dk;
      if (!lambda) {
        if (sgn(ratio) <= 0) return std::nullopt;
        lambda = ratio;
      } else if (*lambda != ratio) {
        return std::nullopt;
      }
    }
  }
  return lambda;
}

Rat mixed_volume(const std::vector<Polytope>& bodies, Exec exec, std::size_t budget) {
  const std::size_t d = check_bodies(bodies, "mixed_volume");
  const std::uint64_t masks = std::uint64_t{1} << d;
  Rat total = detail::indexed_sum<Rat>(masks - 1, exec, [&](std::uint64_t k) {
    const std::uint64_t mask = k + 1;
    Rat v = subset_volume(bodies, mask, budget);
    if ((d + static_cast<std::size_t>(std::popcount(mask))) % 2 == 1) v = -v;
    return v;
  });
  return total / factorial(d);
}

bool minkowski_expansion_check(const std::vector<Polytope>& bodies,
                               const std::vector<Rat>& lambdas, std::size_t budget) {
  if (bodies.empty()) throw DimensionError("minkowski_expansion_check: no bodies");
  if (bodies.size() != lambdas.size()) {
    throw DimensionError("minkowski_expansion_check: one coefficient per body required");
  }
  const std::size_t d = bodies.front().dim();
  for (const auto& b : bodies) {
    if (b.dim() != d) throw DimensionError("minkowski_expansion_check: dimension mismatch");
  }
  const std::size_t m = bodies.size();

  Polytope combo = dilate(bodies[0], lambdas[0]);
  for (std::size_t i = 1; i < m; ++i) combo = minkowski_sum(combo, dilate(bodies[i], lambdas[i]), budget);
  const Rat lhs = volume(combo);

  const Rat dfact = factorial(d);
  Rat rhs(0);
  std::vector<std::size_t> parts(m, 0);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t slot, std::size_t left) {
    if (slot + 1 == m) {
      parts[slot] = left;
      std::vector<Polytope> tuple;
      Rat weight = dfact;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t c = 0; c < parts[i]; ++c) tuple.push_back(bodies[i]);
        weight /= factorial(parts[i]);
        weight *= rat_pow(lambdas[i], static_cast<unsigned>(parts[i]));
      }
      if (sgn(weight) != 0) rhs += weight * mixed_volume(tuple, Exec::serial, budget);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      parts[slot] = k;
      walk(slot + 1, left - k);
    }
  };
  walk(0, d);
  return lhs == rhs;
}

Polytope make_box(const std::vector<Rat>& edges) {
  const std::size_t d = edges.size();
  if (d == 0 || d > kMaxBodyDim) throw DomainError("make_box: unsupported dimension");
  std::vector<Point> corners;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    Point c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = (mask >> i & 1U) ? edges[i] : Rat(0);
    corners.push_back(std::move(c));
  }
  return Polytope::hull_of(corners);
}

Polytope make_simplex(std::size_t d) {
  std::vector<Point> pts(d + 1, Point(d, Rat(0)));
  for (std::size_t i = 0; i < d; ++i) pts[i + 1][i] = 1;
  return Polytope::hull_of(pts);
}

Polytope make_segment(const Point& v) {
  return Polytope::hull_of({Point(v.size(), Rat(0)), v});
}

Polytope make_zonotope(const std::vector<Point>& generators, std::size_t budget) {
  if (generators.empty()) throw DomainError("make_zonotope: no generators");
  Polytope z = make_segment(generators[0]);
  for (std::size_t i = 1; i < generators.size(); ++i) {
    z = minkowski_sum(z, make_segment(generators[i]), budget);
  }
  return z;
}

} // namespace afkit
