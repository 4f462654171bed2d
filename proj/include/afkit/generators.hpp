#pragma once

// Seeded instance generators.
//
// PRNG contract (stable across releases):
//   * the engine is std::mt19937_64, whose output sequence is fixed by the
//     C++ standard;
//   * a bounded integer in [lo, hi] is drawn by rejection: take the low bits
//     of successive engine outputs under the smallest all-ones mask covering
//     hi - lo and keep the first value not exceeding it;
//   * std::*_distribution is never used, since its algorithm is left to the
//     standard library implementation;
//   * harness instance i of a mode draws from an engine seeded with
//     splitmix64(splitmix64(seed ^ mode_tag) ^ i).

#include "afkit/convexvol.hpp"
#include "afkit/matrix.hpp"
#include "afkit/shephard.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace afkit::gen {

std::uint64_t splitmix64(std::uint64_t x);

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi]; lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// p/q with |p| <= bound * q and q drawn from [1, max_den].
  Rat rational(std::int64_t bound, std::int64_t max_den = 2);
  /// p/q with p in [1, bound], q in [1, bound].
  Rat positive_rational(std::int64_t bound);
  GaussRat gaussian_integer(std::int64_t bound);

private:
  std::mt19937_64 engine_;
};

/// G G* + I with Gaussian-integer G, |Re|, |Im| <= entry_bound. Always PD.
HermMat pd_hermitian(Rng& rng, std::size_t n, std::int64_t entry_bound);
HermMat gen_pd_hermitian(std::uint64_t seed, std::size_t n, std::int64_t entry_bound);

/// G G* with the last column of G zeroed: PSD, det = 0. n >= 2.
HermMat psd_singular(Rng& rng, std::size_t n, std::int64_t entry_bound);
HermMat gen_psd_singular(std::uint64_t seed, std::size_t n, std::int64_t entry_bound);

/// PD matrix with Gaussian-rational entries: a PD draw times a random
/// positive rational.
HermMat pd_gauss_rational(Rng& rng, std::size_t n, std::int64_t entry_bound);

/// Hermitian matrix with no positivity constraint.
HermMat hermitian(Rng& rng, std::size_t n, std::int64_t entry_bound);

/// Symmetric (r+1) x (r+1) table with signed rational entries.
GramTable symmetric_table(Rng& rng, std::size_t r, std::int64_t entry_bound);

/// Hull of `points` random points of Q^d with coordinates p/q, |p/q| <=
/// coord_bound, q in {1, 2}.
Polytope polytope(Rng& rng, std::size_t d, std::size_t points, std::int64_t coord_bound);
Polytope gen_polytope(std::uint64_t seed, std::size_t d, std::size_t points,
                      std::int64_t coord_bound);

/// Like polytope(), but redraws until the hull is full-dimensional.
Polytope full_polytope(Rng& rng, std::size_t d, std::size_t points, std::int64_t coord_bound);

/// Box with integer edge lengths in [1, bound].
Polytope random_box(Rng& rng, std::size_t d, std::int64_t bound);

/// Nonzero random integer vector with entries in [-bound, bound].
Point random_vector(Rng& rng, std::size_t d, std::int64_t bound);

} // namespace afkit::gen
