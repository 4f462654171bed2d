// Exact convex hulls in dimension <= 4.
//
// Points are first reduced to their affine hull: a row-echelon basis of the
// direction space picks k coordinates on which projection is injective, so
// the hull can be built full-dimensionally in Q^k. The boundary is then
// grown by beneath-beyond insertion with strictly-visible facets, which
// yields a simplicial triangulation of the boundary even when many points
// are coplanar. Inside the insertion loop coordinates are scaled to
// integers by the common denominator, so predicates avoid gcd work. A triangulation vertex is an extreme point iff the normals
// of its incident facets span Q^k.

#include "afkit/convexvol.hpp"
#include "afkit/errors.hpp"
#include "afkit/matrix.hpp"
#include "afkit/mixdisc.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

namespace afkit::detail {

namespace {

Point minus(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

// Incrementally maintained reduced row-echelon basis.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  // Reduces v against the basis; adds the residual if it is nonzero.
  bool insert(Point v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t pc = pivots_[r];
      if (sgn(v[pc]) == 0) continue;
      const Rat f = v[pc];
      for (std::size_t c = 0; c < cols_; ++c) v[c] -= f * rows_[r][c];
    }
    std::size_t pc = 0;
    while (pc < cols_ && sgn(v[pc]) == 0) ++pc;
    if (pc == cols_) return false;
    const Rat inv = Rat(1) / v[pc];
    for (auto& x : v) x *= inv;
    for (auto& row : rows_) {
      if (sgn(row[pc]) == 0) continue;
      const Rat f = row[pc];
      for (std::size_t c = 0; c < cols_; ++c) row[c] -= f * v[c];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    return true;
  }

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::vector<std::size_t> pivot_columns() const {
    auto p = pivots_;
    std::sort(p.begin(), p.end());
    return p;
  }

private:
  std::size_t cols_;
  std::vector<Point> rows_;
  std::vector<std::size_t> pivots_;
};

using IPoint = std::vector<mpz_class>;

mpz_class idot(const IPoint& a, const IPoint& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Fraction-free (Bareiss) determinant of a small integer matrix.
mpz_class int_det(std::vector<IPoint> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      for (std::size_t k = c + 1; k < n; ++k) {
        m[r][k] = (m[r][k] * m[c][c] - m[r][c] * m[c][k]) / prev;
      }
    }
    prev = m[c][c];
  }
  return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

// Normal of the hyperplane through k affinely independent integer points of
// Z^k (generalized cross product of the k-1 edge vectors).
IPoint hyperplane_normal(const std::vector<IPoint>& pts, const std::vector<std::size_t>& idx) {
  const std::size_t k = idx.size();
  IPoint normal(k);
  if (k == 1) {
    normal[0] = 1;
    return normal;
  }
  std::vector<IPoint> edges(k - 1, IPoint(k));
  for (std::size_t i = 1; i < k; ++i) {
    for (std::size_t c = 0; c < k; ++c) edges[i - 1][c] = pts[idx[i]][c] - pts[idx[0]][c];
  }
  std::vector<IPoint> minor(k - 1, IPoint(k - 1));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t r = 0; r < k - 1; ++r) {
      for (std::size_t c = 0, cc = 0; c < k; ++c) {
        if (c == j) continue;
        minor[r][cc++] = edges[r][c];
      }
    }
    normal[j] = int_det(minor);
    if (j % 2 == 1) normal[j] = -normal[j];
  }
  return normal;
}

struct Facet {
  std::vector<std::size_t> v;
  IPoint normal;
  mpz_class offset;
  bool alive = true;
};

// All coordinates are integers; `center` is (k+1) times the centroid of the
// starting simplex, so "beneath" compares against (k+1) * offset.
struct Boundary {
  std::vector<Facet> facets;
  IPoint center;
};

// Beneath-beyond on integer points q (full-dimensional in Z^k, k >= 2),
// starting from the simplex with vertex indices `simplex`. The remaining
// points are inserted in a fixed pseudo-random order, which keeps the
// number of short-lived facets small on sorted input.
Boundary grow_boundary(const std::vector<IPoint>& q, std::size_t k,
                       const std::vector<std::size_t>& simplex) {
  Boundary b;
  b.center.assign(k, mpz_class(0));
  for (auto i : simplex) {
    for (std::size_t c = 0; c < k; ++c) b.center[c] += q[i][c];
  }
  const mpz_class scale = static_cast<unsigned long>(simplex.size());

  auto make_facet = [&](std::vector<std::size_t> verts) {
    std::sort(verts.begin(), verts.end());
    Facet f;
    f.normal = hyperplane_normal(q, verts);
    f.offset = idot(f.normal, q[verts[0]]);
    if (idot(f.normal, b.center) > scale * f.offset) {
      for (auto& x : f.normal) x = -x;
      f.offset = -f.offset;
    }
    f.v = std::move(verts);
    return f;
  };

  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i != skip) verts.push_back(simplex[i]);
    }
    b.facets.push_back(make_facet(std::move(verts)));
  }

  std::vector<bool> in_simplex(q.size(), false);
  for (auto i : simplex) in_simplex[i] = true;
  std::vector<std::size_t> order;
  for (std::size_t p = 0; p < q.size(); ++p) {
    if (!in_simplex[p]) order.push_back(p);
  }
  // Deterministic shuffle (64-bit LCG, Knuth's constants).
  std::uint64_t state = 0x2545f4914f6cdd1dULL ^ q.size();
  for (std::size_t i = order.size(); i > 1; --i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    std::swap(order[i - 1], order[(state >> 33) % i]);
  }

  for (auto p : order) {
    std::map<std::vector<std::size_t>, int> ridges;
    bool any = false;
    for (auto& f : b.facets) {
      if (!f.alive || idot(f.normal, q[p]) <= f.offset) continue;
      any = true;
      f.alive = false;
      for (std::size_t skip = 0; skip < f.v.size(); ++skip) {
        std::vector<std::size_t> ridge;
        ridge.reserve(f.v.size() - 1);
        for (std::size_t i = 0; i < f.v.size(); ++i) {
          if (i != skip) ridge.push_back(f.v[i]);
        }
        ++ridges[ridge];
      }
    }
    if (!any) continue;
    std::erase_if(b.facets, [](const Facet& f) { return !f.alive; });
    for (auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      auto verts = ridge;
      verts.push_back(p);
      b.facets.push_back(make_facet(std::move(verts)));
    }
  }
  return b;
}

// Scales rational points by the lcm of all denominators.
std::vector<IPoint> integral(const std::vector<Point>& pts, mpz_class& lcm) {
  lcm = 1;
  for (const auto& p : pts) {
    for (const auto& x : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<IPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    IPoint ip(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) ip[c] = p[c].get_num() * (lcm / p[c].get_den());
    out.push_back(std::move(ip));
  }
  return out;
}

void check_input(const std::vector<Point>& points, std::size_t dim) {
  if (dim < 1 || dim > kMaxBodyDim) {
    throw DomainError("convex hull: unsupported dimension " + std::to_string(dim));
  }
  if (points.empty()) throw DomainError("convex hull: empty point set");
  for (const auto& p : points) {
    if (p.size() != dim) throw DimensionError("convex hull: point of wrong dimension");
  }
}

struct Reduced {
  std::vector<Point> pts;              // deduplicated, sorted
  std::vector<std::size_t> basis;      // affinely independent indices into pts
  std::vector<std::size_t> coords;     // projection coordinates
};

Reduced reduce(const std::vector<Point>& points, std::size_t dim) {
  Reduced r;
  r.pts = points;
  std::sort(r.pts.begin(), r.pts.end());
  r.pts.erase(std::unique(r.pts.begin(), r.pts.end()), r.pts.end());
  EchelonBasis eb(dim);
  r.basis.push_back(0);
  for (std::size_t i = 1; i < r.pts.size() && eb.rank() < dim; ++i) {
    if (eb.insert(minus(r.pts[i], r.pts[0]))) r.basis.push_back(i);
  }
  r.coords = eb.pivot_columns();
  return r;
}

std::vector<Point> project(const std::vector<Point>& pts, const std::vector<std::size_t>& coords) {
  std::vector<Point> q;
  q.reserve(pts.size());
  for (const auto& p : pts) {
    Point x;
    x.reserve(coords.size());
    for (auto c : coords) x.push_back(p[c]);
    q.push_back(std::move(x));
  }
  return q;
}

} // namespace

HullData compute_hull(const std::vector<Point>& points, std::size_t dim) {
  check_input(points, dim);
  const Reduced r = reduce(points, dim);
  const std::size_t k = r.coords.size();
  HullData out;
  out.affine_dim = k;
  out.volume = 0;
  if (k == 0) {
    out.extreme = {r.pts[0]};
    return out;
  }
  const auto q = project(r.pts, r.coords);
  if (k == 1) {
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t i = 1; i < q.size(); ++i) {
      if (q[i][0] < q[lo][0]) lo = i;
      if (q[i][0] > q[hi][0]) hi = i;
    }
    out.extreme = {r.pts[lo], r.pts[hi]};
    std::sort(out.extreme.begin(), out.extreme.end());
    if (dim == 1) out.volume = q[hi][0] - q[lo][0];
    return out;
  }

  mpz_class lcm;
  const auto iq = integral(q, lcm);
  const Boundary b = grow_boundary(iq, k, r.basis);

  std::map<std::size_t, std::vector<const IPoint*>> incident;
  for (const auto& f : b.facets) {
    for (auto v : f.v) incident[v].push_back(&f.normal);
  }
  for (const auto& [v, normals] : incident) {
    EchelonBasis eb(k);
    for (const IPoint* n : normals) {
      Point rn(n->begin(), n->end());
      eb.insert(std::move(rn));
      if (eb.rank() == k) break;
    }
    if (eb.rank() == k) out.extreme.push_back(r.pts[v]);
  }
  std::sort(out.extreme.begin(), out.extreme.end());

  if (k == dim) {
    // Cone over each boundary simplex from the centroid, in coordinates
    // scaled by (k+1) * lcm.
    const mpz_class scale = static_cast<unsigned long>(k + 1);
    mpz_class total = 0;
    std::vector<IPoint> m(k, IPoint(k));
    for (const auto& f : b.facets) {
      for (std::size_t row = 0; row < k; ++row) {
        for (std::size_t c = 0; c < k; ++c) m[row][c] = scale * iq[f.v[row]][c] - b.center[c];
      }
      total += abs(int_det(m));
    }
    mpz_class denom = 1;
    for (std::size_t i = 0; i < k; ++i) denom *= scale * lcm;
    out.volume = Rat(total) / Rat(denom) / factorial(k);
  }
  return out;
}

Triangulation triangulate_boundary(const std::vector<Point>& points, std::size_t dim) {
  check_input(points, dim);
  const Reduced r = reduce(points, dim);
  if (r.coords.size() != dim || dim < 2) {
    throw DomainError("triangulate_boundary: point set is not full-dimensional (or d < 2)");
  }
  mpz_class lcm;
  const Boundary b = grow_boundary(integral(r.pts, lcm), dim, r.basis);
  Triangulation t;
  t.dim = dim;
  t.points = r.pts;
  t.interior.resize(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    t.interior[c] = Rat(b.center[c]) / Rat(lcm * static_cast<unsigned long>(dim + 1));
  }
  for (const auto& f : b.facets) t.facets.push_back(f.v);
  return t;
}

} // namespace afkit::detail
