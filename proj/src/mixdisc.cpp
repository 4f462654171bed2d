#include "afkit/mixdisc.hpp"

#include "parallel_sum.hpp"

#include <bit>
#include <functional>
#include <numeric>
#include <string>

namespace afkit {

namespace {

std::size_t check_tuple(const std::vector<GenMat>& tuple, std::size_t limit, const char* what) {
  const std::size_t n = tuple.size();
  if (n == 0) throw DimensionError(std::string(what) + ": empty tuple");
  for (const auto& m : tuple) {
    if (m.size() != n) {
      throw DimensionError(std::string(what) + ": tuple of " + std::to_string(n) +
                           " matrices needs " + std::to_string(n) + "x" + std::to_string(n) +
                           " entries, got size " + std::to_string(m.size()));
    }
  }
  if (n > limit) {
    throw DomainError(std::string(what) + ": n = " + std::to_string(n) + " exceeds limit " +
                      std::to_string(limit));
  }
  return n;
}

// The index-th permutation of {0..n-1} in lexicographic order.
std::vector<std::size_t> nth_permutation(std::uint64_t index, std::size_t n) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<std::size_t> perm;
  perm.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    const std::uint64_t q = index / fact[i - 1];
    index %= fact[i - 1];
    perm.push_back(pool[q]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
  }
  return perm;
}

Rat real_part_checked(const GaussRat& z, const char* what) {
  if (!z.is_real()) {
    throw TheoremViolation(std::string(what) + ": Hermitian tuple gave a non-real value");
  }
  return z.re;
}

GenMat subset_sum(const std::vector<GenMat>& mats, std::uint64_t mask) {
  GenMat s(mats.front().size());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    if (mask >> i & 1U) s += mats[i];
  }
  return s;
}

} // namespace

Rat factorial(std::size_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

GaussRat mixed_discriminant(const std::vector<GenMat>& tuple, Exec exec) {
  const std::size_t n = check_tuple(tuple, kPermutationRouteLimit, "mixed_discriminant");
  const Rat nfact = factorial(n);
  const auto count = static_cast<std::uint64_t>(nfact.get_num().get_ui());
  GaussRat total = detail::indexed_sum<GaussRat>(count, exec, [&](std::uint64_t k) {
    const auto sigma = nth_permutation(k, n);
    GenMat mixed(n);
    for (std::size_t j = 0; j < n; ++j) {
      const GenMat& src = tuple[sigma[j]];
      for (std::size_t i = 0; i < n; ++i) mixed(i, j) = src(i, j);
    }
    return det(std::move(mixed));
  });
  total *= Rat(1) / nfact;
  return total;
}

Rat mixed_discriminant(const std::vector<HermMat>& tuple, Exec exec) {
  return real_part_checked(mixed_discriminant(to_gen(tuple), exec), "mixed_discriminant");
}

GaussRat mixed_discriminant_polarized(const std::vector<GenMat>& tuple, Exec exec) {
  const std::size_t n =
      check_tuple(tuple, kPolarizationRouteLimit, "mixed_discriminant_polarized");
  const std::uint64_t masks = std::uint64_t{1} << n;
  // mask 0 is the empty sum with det(0) = 0
  GaussRat total = detail::indexed_sum<GaussRat>(masks - 1, exec, [&](std::uint64_t k) {
    const std::uint64_t mask = k + 1;
    GaussRat d = det(subset_sum(tuple, mask));
    if ((n + static_cast<std::size_t>(std::popcount(mask))) % 2 == 1) d = -d;
    return d;
  });
  total *= Rat(1) / factorial(n);
  return total;
}

Rat mixed_discriminant_polarized(const std::vector<HermMat>& tuple, Exec exec) {
  return real_part_checked(mixed_discriminant_polarized(to_gen(tuple), exec),
                           "mixed_discriminant_polarized");
}

GaussRat mixed_discriminant_pair(const GenMat& a, std::size_t k, const GenMat& b) {
  const std::size_t n = a.size();
  if (b.size() != n || n == 0) throw DimensionError("mixed_discriminant_pair: size mismatch");
  if (k > n) throw DomainError("mixed_discriminant_pair: repetition count exceeds n");
  // Newton divided differences of p(s) = det(sA + B) on s = 0..n.
  std::vector<GaussRat> coef(n + 1);
  for (std::size_t s = 0; s <= n; ++s) {
    coef[s] = det(a * Rat(static_cast<long>(s)) + b);
  }
  for (std::size_t level = 1; level <= n; ++level) {
    const Rat inv = Rat(1) / Rat(static_cast<long>(level));
    for (std::size_t i = n; i >= level; --i) coef[i] = (coef[i] - coef[i - 1]) * inv;
  }
  // Convert the Newton form to monomial coefficients.
  std::vector<GaussRat> poly{coef[n]};
  for (std::size_t idx = n; idx-- > 0;) {
    const Rat node(static_cast<long>(idx));
    std::vector<GaussRat> next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * node;
    }
    next[0] += coef[idx];
    poly = std::move(next);
  }
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), n, k);
  GaussRat out = poly[k];
  out *= Rat(1) / Rat(binom);
  return out;
}

Rat mixed_discriminant_pair(const HermMat& a, std::size_t k, const HermMat& b) {
  return real_part_checked(mixed_discriminant_pair(a.mat(), k, b.mat()),
                           "mixed_discriminant_pair");
}

bool det_expansion_check(const std::vector<GenMat>& mats, const std::vector<Rat>& lambdas) {
  if (mats.empty()) throw DimensionError("det_expansion_check: need at least one matrix");
  if (mats.size() != lambdas.size()) {
    throw DimensionError("det_expansion_check: one coefficient per matrix required");
  }
  const std::size_t n = mats.front().size();
  for (const auto& m : mats) {
    if (m.size() != n) throw DimensionError("det_expansion_check: matrix size mismatch");
  }
  const std::size_t m = mats.size();

  GenMat combo(n);
  for (std::size_t r = 0; r < m; ++r) combo += mats[r] * lambdas[r];
  const GaussRat lhs = det(combo);

  const Rat nfact = factorial(n);
  GaussRat rhs;
  std::vector<std::size_t> parts(m, 0);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t slot, std::size_t left) {
    if (slot + 1 == m) {
      parts[slot] = left;
      std::vector<GenMat> tuple;
      Rat weight = nfact;
      for (std::size_t r = 0; r < m; ++r) {
        append_copies(tuple, mats[r], parts[r]);
        weight /= factorial(parts[r]);
        weight *= rat_pow(lambdas[r], static_cast<unsigned>(parts[r]));
      }
      if (sgn(weight) != 0) rhs += mixed_discriminant_polarized(tuple, Exec::serial) * weight;
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      parts[slot] = k;
      walk(slot + 1, left - k);
    }
  };
  walk(0, n);
  return lhs == rhs;
}

GenMat mixed_adjugate(const std::vector<GenMat>& partial, Exec exec) {
  if (partial.empty()) throw DimensionError("mixed_adjugate: need n-1 >= 1 matrices");
  const std::size_t n = partial.size() + 1;
  for (const auto& m : partial) {
    if (m.size() != n) {
      throw DimensionError("mixed_adjugate: expected " + std::to_string(n - 1) +
                           " matrices of size " + std::to_string(n));
    }
  }
  if (n - 1 > kPolarizationRouteLimit) throw DomainError("mixed_adjugate: n too large");
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  // W^T accumulated as a sum of signed adjugates; mask 0 gives adj(0) = 0.
  struct Acc {
    GenMat m;
    explicit Acc(int) {}
    Acc& operator+=(const Acc& o) {
      if (o.m.size() == 0) return *this;
      if (m.size() == 0) {
        m = o.m;
      } else {
        m += o.m;
      }
      return *this;
    }
  };
  Acc total = detail::indexed_sum<Acc>(masks - 1, exec, [&](std::uint64_t k) {
    const std::uint64_t mask = k + 1;
    Acc a(0);
    a.m = adjugate(subset_sum(partial, mask));
    if ((n - 1 - static_cast<std::size_t>(std::popcount(mask))) % 2 == 1) a.m *= Rat(-1);
    return a;
  });
  const Rat scale = Rat(1) / factorial(n);
  GenMat w(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) w(j, k) = total.m(k, j) * scale;
  }
  return w;
}

HermMat mixed_adjugate(const std::vector<HermMat>& partial, Exec exec) {
  try {
    return HermMat(mixed_adjugate(to_gen(partial), exec));
  } catch (const DomainError&) {
    throw TheoremViolation("mixed_adjugate: Hermitian inputs produced a non-Hermitian W");
  }
}

GenMat mixed_adjugate_by_basis(const std::vector<GenMat>& partial) {
  const std::size_t n = partial.size() + 1;
  for (const auto& m : partial) {
    if (m.size() != n) throw DimensionError("mixed_adjugate_by_basis: size mismatch");
  }
  GenMat w(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<GenMat> tuple;
      tuple.reserve(n);
      GenMat e(n);
      e(j, k) = GaussRat(1);
      tuple.push_back(std::move(e));
      tuple.insert(tuple.end(), partial.begin(), partial.end());
      w(j, k) = n <= kPermutationRouteLimit ? mixed_discriminant(tuple, Exec::serial)
                                            : mixed_discriminant_polarized(tuple, Exec::serial);
    }
  }
  return w;
}

GaussRat pair_with_adjugate(const GenMat& b, const GenMat& w) {
  if (b.size() != w.size()) throw DimensionError("pair_with_adjugate: size mismatch");
  GaussRat s;
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t k = 0; k < b.size(); ++k) s += b(j, k) * w(j, k);
  }
  return s;
}

} // namespace afkit
