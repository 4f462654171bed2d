#pragma once

#include "afkit/generators.hpp"
#include "afkit/matrix.hpp"

#include <initializer_list>
#include <vector>

namespace support {

using afkit::GenMat;
using afkit::HermMat;
using afkit::Rat;

inline HermMat diag(std::initializer_list<long> d) {
  std::vector<Rat> v;
  for (long x : d) v.emplace_back(x);
  return HermMat::diagonal(v);
}

inline GenMat real_gen(std::initializer_list<std::initializer_list<long>> rows) {
  GenMat m(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = afkit::GaussRat(Rat(x));
    ++i;
  }
  return m;
}

inline HermMat real_herm(std::initializer_list<std::initializer_list<long>> rows) {
  return HermMat(real_gen(rows));
}

inline GenMat random_gen(afkit::gen::Rng& rng, std::size_t n, std::int64_t bound) {
  GenMat m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {rng.rational(bound), rng.rational(bound)};
  }
  return m;
}

inline std::vector<HermMat> pd_tuple(afkit::gen::Rng& rng, std::size_t count, std::size_t n,
                                     std::int64_t bound = 3) {
  std::vector<HermMat> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(afkit::gen::pd_gauss_rational(rng, n, bound));
  return out;
}

} // namespace support
