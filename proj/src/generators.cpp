#include "afkit/generators.hpp"

#include "afkit/errors.hpp"

#include <bit>

namespace afkit::gen {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("Rng::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == 0) return lo;
  const std::uint64_t mask =
      span >= (1ULL << 63) ? ~0ULL : (std::bit_ceil(span + 1) - 1);
  for (;;) {
    const std::uint64_t v = engine_() & mask;
    if (v <= span) return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + v);
  }
}

Rat Rng::rational(std::int64_t bound, std::int64_t max_den) {
  const std::int64_t q = uniform(1, max_den);
  const std::int64_t p = uniform(-bound * q, bound * q);
  Rat x(static_cast<long>(p), static_cast<unsigned long>(q));
  x.canonicalize();
  return x;
}

Rat Rng::positive_rational(std::int64_t bound) {
  const std::int64_t p = uniform(1, bound);
  const std::int64_t q = uniform(1, bound);
  Rat x(static_cast<long>(p), static_cast<unsigned long>(q));
  x.canonicalize();
  return x;
}

GaussRat Rng::gaussian_integer(std::int64_t bound) {
  const std::int64_t re = uniform(-bound, bound);
  const std::int64_t im = uniform(-bound, bound);
  return {Rat(static_cast<long>(re)), Rat(static_cast<long>(im))};
}

namespace {

GenMat gaussian_matrix(Rng& rng, std::size_t n, std::int64_t bound) {
  GenMat g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) g(i, k) = rng.gaussian_integer(bound);
  }
  return g;
}

} // namespace

HermMat pd_hermitian(Rng& rng, std::size_t n, std::int64_t entry_bound) {
  if (n == 0) throw DomainError("pd_hermitian: n must be positive");
  return HermMat::gram(gaussian_matrix(rng, n, entry_bound)) + HermMat::identity(n);
}

HermMat gen_pd_hermitian(std::uint64_t seed, std::size_t n, std::int64_t entry_bound) {
  Rng rng(seed);
  return pd_hermitian(rng, n, entry_bound);
}

HermMat psd_singular(Rng& rng, std::size_t n, std::int64_t entry_bound) {
  if (n < 2) throw DomainError("psd_singular: n must be at least 2");
  GenMat g = gaussian_matrix(rng, n, entry_bound);
  for (std::size_t i = 0; i < n; ++i) g(i, n - 1) = GaussRat{};
  return HermMat::gram(g);
}

HermMat gen_psd_singular(std::uint64_t seed, std::size_t n, std::int64_t entry_bound) {
  Rng rng(seed);
  return psd_singular(rng, n, entry_bound);
}

HermMat pd_gauss_rational(Rng& rng, std::size_t n, std::int64_t entry_bound) {
  HermMat a = pd_hermitian(rng, n, entry_bound);
  return a * rng.positive_rational(entry_bound + 1);
}

HermMat hermitian(Rng& rng, std::size_t n, std::int64_t entry_bound) {
  GenMat m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = GaussRat{rng.rational(entry_bound), Rat(0)};
    for (std::size_t k = i + 1; k < n; ++k) {
      m(i, k) = GaussRat{rng.rational(entry_bound), rng.rational(entry_bound)};
      m(k, i) = m(i, k).conj();
    }
  }
  return HermMat(std::move(m));
}

GramTable symmetric_table(Rng& rng, std::size_t r, std::int64_t entry_bound) {
  RatMat d(r + 1);
  for (std::size_t i = 0; i <= r; ++i) {
    for (std::size_t k = i; k <= r; ++k) {
      d(i, k) = rng.rational(entry_bound);
      d(k, i) = d(i, k);
    }
  }
  return GramTable(std::move(d));
}

Polytope polytope(Rng& rng, std::size_t d, std::size_t points, std::int64_t coord_bound) {
  if (d == 0 || d > kMaxBodyDim) throw DimensionError("polytope: dimension out of range");
  if (points == 0) throw DomainError("polytope: need at least one point");
  std::vector<Point> pts(points, Point(d));
  for (auto& p : pts) {
    for (auto& x : p) x = rng.rational(coord_bound);
  }
  return Polytope::hull_of(pts);
}

Polytope gen_polytope(std::uint64_t seed, std::size_t d, std::size_t points,
                      std::int64_t coord_bound) {
  Rng rng(seed);
  return polytope(rng, d, points, coord_bound);
}

Polytope full_polytope(Rng& rng, std::size_t d, std::size_t points, std::int64_t coord_bound) {
  if (points < d + 1) throw DomainError("full_polytope: need at least d + 1 points");
  for (;;) {
    Polytope p = polytope(rng, d, points, coord_bound);
    if (sgn(volume(p)) > 0) return p;
  }
}

Polytope random_box(Rng& rng, std::size_t d, std::int64_t bound) {
  std::vector<Rat> edges;
  for (std::size_t i = 0; i < d; ++i) edges.emplace_back(static_cast<long>(rng.uniform(1, bound)));
  return make_box(edges);
}

Point random_vector(Rng& rng, std::size_t d, std::int64_t bound) {
  for (;;) {
    Point v(d);
    bool nonzero = false;
    for (auto& x : v) {
      x = Rat(static_cast<long>(rng.uniform(-bound, bound)));
      nonzero = nonzero || sgn(x) != 0;
    }
    if (nonzero) return v;
  }
}

} // namespace afkit::gen
