#include "afkit/ineqcheck.hpp"

#include "afkit/errors.hpp"
#include "afkit/mixdisc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace afkit {

namespace {

Rat disc(const std::vector<HermMat>& tuple) {
  return tuple.size() <= kPermutationRouteLimit ? mixed_discriminant(tuple)
                                                : mixed_discriminant_polarized(tuple);
}

void require_psd(const HermMat& m, const char* what) {
  if (!is_psd(m)) throw DomainError(std::string(what) + ": input matrix is not positive semi-definite");
}

void require_negative_free(const GapReport& r, const char* what) {
  if (sgn(r.gap) < 0) {
    throw TheoremViolation(std::string(what) + ": negative gap " + format_rat(r.gap) +
                           " (lhs " + format_rat(r.lhs) + ", rhs " + format_rat(r.rhs) + ")");
  }
}

std::vector<HermMat> tuple_of(const HermMat& x, const HermMat& y, const std::vector<HermMat>& rest) {
  std::vector<HermMat> t{x, y};
  t.insert(t.end(), rest.begin(), rest.end());
  return t;
}

std::vector<Polytope> tuple_of(const Polytope& x, const Polytope& y, const std::vector<Polytope>& rest) {
  std::vector<Polytope> t{x, y};
  t.insert(t.end(), rest.begin(), rest.end());
  return t;
}

void check_m(std::size_t m, std::size_t n, const char* what) {
  if (m < 2 || m > n) {
    throw DomainError(std::string(what) + ": m = " + std::to_string(m) + " outside [2, " +
                      std::to_string(n) + "]");
  }
}

// Fills the float part of a concavity report from exact values D(...)
// sampled on the grid.
ConcavityReport concavity_from_values(std::vector<Rat> grid, const std::vector<Rat>& exact,
                                      std::size_t m, const char* what) {
  ConcavityReport rep;
  rep.grid = std::move(grid);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (const auto& v : exact) {
    if (sgn(v) < 0) throw TheoremViolation(std::string(what) + ": negative mixed value on grid");
    rep.values.push_back(std::pow(v.get_d(), inv_m));
  }
  const std::size_t g = rep.values.size();
  const double g0 = rep.values.front();
  const double g1 = rep.values.back();
  for (std::size_t k = 0; k < g; ++k) {
    const double l = rep.grid[k].get_d();
    const double chord = (1.0 - l) * g0 + l * g1;
    const double cg = rep.values[k] - chord;
    rep.chord_gaps.push_back(cg);
    rep.max_chord_violation = std::max(rep.max_chord_violation, -cg);
    rep.max_chord_deviation = std::max(rep.max_chord_deviation, std::abs(cg));
  }
  for (std::size_t k = 1; k + 1 < g; ++k) {
    const double mid = 0.5 * (rep.values[k - 1] + rep.values[k + 1]) - rep.values[k];
    rep.max_midpoint_violation = std::max(rep.max_midpoint_violation, mid);
  }
  rep.max_violation = std::max(rep.max_midpoint_violation, rep.max_chord_violation);
  return rep;
}

} // namespace

GapReport GapReport::make(Rat lhs, Rat rhs) {
  GapReport r;
  r.gap = lhs - rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.equality = sgn(r.gap) == 0;
  return r;
}

std::vector<Rat> uniform_grid(std::size_t size) {
  if (size < 3) throw DomainError("grid size must be at least 3");
  std::vector<Rat> g;
  g.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    g.emplace_back(Rat(static_cast<long>(k)) / Rat(static_cast<long>(size - 1)));
  }
  return g;
}

Rat equality_lambda(const Rat& d00, const Rat& d01) {
  if (sgn(d00) == 0) {
    throw DegenerateError("equality_lambda: d00 = 0, configuration is not big");
  }
  return d01 / d00;
}

GapReport af_gap_discriminant(const HermMat& a, const HermMat& b, const std::vector<HermMat>& rest) {
  const std::size_t n = a.size();
  if (n < 2) throw DimensionError("af_gap_discriminant: n must be at least 2");
  if (b.size() != n || rest.size() != n - 2) {
    throw DimensionError("af_gap_discriminant: expected A, B and n-2 further n x n matrices");
  }
  for (const auto& m : rest) {
    if (m.size() != n) throw DimensionError("af_gap_discriminant: size mismatch in rest");
  }
  require_psd(a, "af_gap_discriminant");
  for (const auto& m : rest) require_psd(m, "af_gap_discriminant");

  const Rat d_ab = disc(tuple_of(a, b, rest));
  const Rat d_aa = disc(tuple_of(a, a, rest));
  const Rat d_bb = disc(tuple_of(b, b, rest));
  GapReport r = GapReport::make(d_ab * d_ab, d_aa * d_bb);
  require_negative_free(r, "af_gap_discriminant");

  const auto lambda = proportional(a, b);
  r.equality_characterized = is_pd(a) && std::all_of(rest.begin(), rest.end(), [](const HermMat& m) { return is_pd(m); });
  if (r.equality_characterized) {
    if (r.equality != lambda.has_value()) {
      throw TheoremViolation(std::string("af_gap_discriminant: equality ") +
                             (r.equality ? "holds" : "fails") + " but B is " +
                             (lambda ? "" : "not ") + "proportional to A");
    }
    if (lambda && equality_lambda(d_aa, d_ab) != *lambda) {
      throw TheoremViolation("af_gap_discriminant: d01/d00 disagrees with the proportionality constant");
    }
  }
  if (r.equality && lambda) r.lambda = lambda;
  return r;
}

GapReport af_gap_volume(const Polytope& k, const Polytope& l, const std::vector<Polytope>& rest,
                        std::size_t budget) {
  const std::size_t d = k.dim();
  if (d < 2) throw DimensionError("af_gap_volume: dimension must be at least 2");
  if (l.dim() != d || rest.size() != d - 2) {
    throw DimensionError("af_gap_volume: expected K, L and d-2 further bodies in R^d");
  }
  const Rat v_kl = mixed_volume(tuple_of(k, l, rest), Exec::parallel, budget);
  const Rat v_kk = mixed_volume(tuple_of(k, k, rest), Exec::parallel, budget);
  const Rat v_ll = mixed_volume(tuple_of(l, l, rest), Exec::parallel, budget);
  GapReport r = GapReport::make(v_kl * v_kl, v_kk * v_ll);
  require_negative_free(r, "af_gap_volume");
  // Homothety is sufficient for equality; nothing is claimed in the other direction.
  if (const auto h = homothety_ratio(k, l)) {
    if (!r.equality) throw TheoremViolation("af_gap_volume: homothetic bodies with positive gap");
    r.lambda = h;
  }
  return r;
}

GapReport af_m_fold_discriminant(const std::vector<HermMat>& tuple, std::size_t m) {
  const std::size_t n = tuple.size();
  if (n < 2) throw DimensionError("af_m_fold_discriminant: n must be at least 2");
  for (const auto& a : tuple) {
    if (a.size() != n) throw DimensionError("af_m_fold_discriminant: need n matrices of size n");
  }
  check_m(m, n, "af_m_fold_discriminant");
  for (const auto& a : tuple) require_psd(a, "af_m_fold_discriminant");

  const std::vector<HermMat> tail(tuple.begin() + static_cast<std::ptrdiff_t>(m), tuple.end());
  const Rat lhs = rat_pow(disc(tuple), static_cast<unsigned>(m));
  Rat rhs(1);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<HermMat> t;
    append_copies(t, tuple[i], m);
    t.insert(t.end(), tail.begin(), tail.end());
    rhs *= disc(t);
  }
  GapReport r = GapReport::make(lhs, rhs);
  require_negative_free(r, "af_m_fold_discriminant");

  bool all_proportional = true;
  for (std::size_t i = 1; i < m && all_proportional; ++i) {
    all_proportional = proportional(tuple[0], tuple[i]).has_value();
  }
  r.equality_characterized =
      std::all_of(tuple.begin(), tuple.end(), [](const HermMat& a) { return is_pd(a); });
  if (r.equality_characterized && r.equality != all_proportional) {
    throw TheoremViolation(std::string("af_m_fold_discriminant: equality ") +
                           (r.equality ? "holds" : "fails") + " but A_1..A_m are " +
                           (all_proportional ? "" : "not ") + "all proportional");
  }
  if (m == 2 && r.equality) r.lambda = proportional(tuple[0], tuple[1]);
  return r;
}

GapReport af_m_fold_volume(const std::vector<Polytope>& tuple, std::size_t m, std::size_t budget) {
  const std::size_t d = tuple.size();
  if (d < 2) throw DimensionError("af_m_fold_volume: dimension must be at least 2");
  check_m(m, d, "af_m_fold_volume");
  const std::vector<Polytope> tail(tuple.begin() + static_cast<std::ptrdiff_t>(m), tuple.end());
  const Rat lhs = rat_pow(mixed_volume(tuple, Exec::parallel, budget), static_cast<unsigned>(m));
  Rat rhs(1);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Polytope> t(m, tuple[i]);
    t.insert(t.end(), tail.begin(), tail.end());
    rhs *= mixed_volume(t, Exec::parallel, budget);
  }
  GapReport r = GapReport::make(lhs, rhs);
  require_negative_free(r, "af_m_fold_volume");
  if (m == 2 && r.equality) r.lambda = homothety_ratio(tuple[0], tuple[1]);
  return r;
}

ConcavityReport bm_concavity_discriminant(const HermMat& a0, const HermMat& a1,
                                          const std::vector<HermMat>& rest, std::size_t m,
                                          std::size_t grid_size) {
  const std::size_t n = a0.size();
  check_m(m, n, "bm_concavity_discriminant");
  if (a1.size() != n || rest.size() != n - m) {
    throw DimensionError("bm_concavity_discriminant: expected A0, A1 and n-m further matrices");
  }
  require_psd(a0, "bm_concavity_discriminant");
  require_psd(a1, "bm_concavity_discriminant");
  for (const auto& r : rest) require_psd(r, "bm_concavity_discriminant");

  auto grid = uniform_grid(grid_size);
  std::vector<Rat> exact;
  exact.reserve(grid.size());
  for (const auto& l : grid) {
    const HermMat c = a0 * Rat(1 - l) + a1 * l;
    std::vector<HermMat> t;
    append_copies(t, c, m);
    t.insert(t.end(), rest.begin(), rest.end());
    exact.push_back(disc(t));
  }
  return concavity_from_values(std::move(grid), exact, m, "bm_concavity_discriminant");
}

ConcavityReport bm_concavity_volume(const Polytope& k0, const Polytope& k1,
                                    const std::vector<Polytope>& rest, std::size_t m,
                                    std::size_t grid_size, std::size_t budget) {
  const std::size_t d = k0.dim();
  check_m(m, d, "bm_concavity_volume");
  if (k1.dim() != d || rest.size() != d - m) {
    throw DimensionError("bm_concavity_volume: expected K0, K1 and d-m further bodies");
  }
  auto grid = uniform_grid(grid_size);
  std::vector<Rat> exact;
  exact.reserve(grid.size());
  for (const auto& l : grid) {
    const Polytope c = minkowski_sum(dilate(k0, Rat(1 - l)), dilate(k1, l), budget);
    if (rest.empty()) {
      exact.push_back(volume(c));
    } else {
      std::vector<Polytope> t(m, c);
      t.insert(t.end(), rest.begin(), rest.end());
      exact.push_back(mixed_volume(t, Exec::parallel, budget));
    }
  }
  return concavity_from_values(std::move(grid), exact, m, "bm_concavity_volume");
}

} // namespace afkit
