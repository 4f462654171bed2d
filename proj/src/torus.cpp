#include "afkit/torus.hpp"

#include "afkit/errors.hpp"
#include "afkit/mixdisc.hpp"

#include <functional>
#include <string>

namespace afkit {

namespace {

Rat intersect(const std::vector<HermMat>& mats) {
  const std::size_t n = mats.size();
  const Rat d = n <= kPermutationRouteLimit ? mixed_discriminant(mats)
                                            : mixed_discriminant_polarized(mats);
  return torus_volume_factor(n) * d;
}

std::vector<HermMat> mats_of(const std::vector<TorusClass>& classes) {
  std::vector<HermMat> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.mat());
  return out;
}

void check_square_family(const std::vector<TorusClass>& classes, std::size_t n, const char* what) {
  for (const auto& c : classes) {
    if (c.size() != n) throw DimensionError(std::string(what) + ": class of wrong dimension");
  }
}

void require_nef_and_big(const TorusClass& c, const char* what) {
  if (!c.nef()) throw DomainError(std::string(what) + ": class is not nef");
  if (!c.big()) {
    throw NotBigError(std::string(what) + ": nef class with zero self-intersection is not big");
  }
}

std::optional<Rat> ratio(const HermMat& base, const HermMat& other) {
  return proportional(base, other);
}

} // namespace

Rat torus_volume_factor(std::size_t n) {
  Rat f = factorial(n);
  mpz_mul_2exp(f.get_num_mpz_t(), f.get_num_mpz_t(), n);
  return f;
}

TorusClass TorusClass::from(HermMat m) {
  TorusClass c(std::move(m));
  c.nef_ = is_psd(c.mat_);
  c.kahler_ = is_pd(c.mat_);
  c.big_ = c.nef_ && sgn(det(c.mat_)) > 0;
  if (c.nef_ && c.big_ && !c.kahler_) {
    throw TheoremViolation("TorusClass: PSD class with positive determinant is not PD");
  }
  if (c.kahler_ && !(c.nef_ && c.big_)) {
    throw TheoremViolation("TorusClass: PD class is not nef and big");
  }
  return c;
}

std::vector<TorusClass> torus_classes(const std::vector<HermMat>& mats) {
  std::vector<TorusClass> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(TorusClass::from(m));
  return out;
}

Rat intersection_number(const std::vector<TorusClass>& classes) {
  const std::size_t n = classes.size();
  if (n == 0) throw DimensionError("intersection_number: no classes");
  check_square_family(classes, n, "intersection_number");
  return intersect(mats_of(classes));
}

GapReport af_gap_torus(const TorusClass& alpha, const TorusClass& c,
                       const std::vector<TorusClass>& rest) {
  const std::size_t n = c.size();
  if (n < 2 || alpha.size() != n || rest.size() != n - 2) {
    throw DimensionError("af_gap_torus: expected alpha, c and n-2 further classes");
  }
  check_square_family(rest, n, "af_gap_torus");
  if (!c.kahler()) throw DomainError("af_gap_torus: c is not Kaehler");
  for (const auto& k : rest) {
    if (!k.kahler()) throw DomainError("af_gap_torus: rest class is not Kaehler");
  }
  const auto rest_mats = mats_of(rest);
  auto with = [&](const HermMat& x, const HermMat& y) {
    std::vector<HermMat> t{x, y};
    t.insert(t.end(), rest_mats.begin(), rest_mats.end());
    return intersect(t);
  };
  const Rat ac = with(alpha.mat(), c.mat());
  GapReport r = GapReport::make(ac * ac, with(alpha.mat(), alpha.mat()) * with(c.mat(), c.mat()));
  r.equality_characterized = true;
  if (sgn(r.gap) < 0) throw TheoremViolation("af_gap_torus: negative gap " + format_rat(r.gap));
  const auto lambda = ratio(c.mat(), alpha.mat());
  if (r.equality != lambda.has_value()) {
    throw TheoremViolation("af_gap_torus: equality disagrees with proportionality of alpha and c");
  }
  r.lambda = lambda;
  return r;
}

std::vector<Rat> kt_sequence(const TorusClass& g1, const TorusClass& g2) {
  const std::size_t n = g1.size();
  if (g2.size() != n) throw DimensionError("kt_sequence: dimension mismatch");
  if (!g1.nef() || !g2.nef()) throw DomainError("kt_sequence: classes must be nef");
  const Rat factor = torus_volume_factor(n);
  std::vector<Rat> s;
  s.reserve(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    s.push_back(factor * mixed_discriminant_pair(g1.mat(), m, g2.mat()));
  }
  for (std::size_t m = 1; m < n; ++m) {
    if (s[m] * s[m] < s[m - 1] * s[m + 1]) {
      throw TheoremViolation("kt_sequence: log-concavity fails at m = " + std::to_string(m));
    }
  }
  return s;
}

PairEqualityVerdict equality_theorem_pair(const TorusClass& g1, const TorusClass& g2,
                                          const std::vector<TorusClass>& rest) {
  const std::size_t n = g1.size();
  if (n < 2 || g2.size() != n || rest.size() != n - 2) {
    throw DimensionError("equality_theorem_pair: expected two classes and n-2 further classes");
  }
  check_square_family(rest, n, "equality_theorem_pair");
  require_nef_and_big(g1, "equality_theorem_pair");
  require_nef_and_big(g2, "equality_theorem_pair");
  for (const auto& c : rest) require_nef_and_big(c, "equality_theorem_pair");

  const auto rest_mats = mats_of(rest);
  auto with = [&](const HermMat& x, const HermMat& y) {
    std::vector<HermMat> t{x, y};
    t.insert(t.end(), rest_mats.begin(), rest_mats.end());
    return intersect(t);
  };
  const Rat d12 = with(g1.mat(), g2.mat());
  GapReport gap = GapReport::make(d12 * d12, with(g1.mat(), g1.mat()) * with(g2.mat(), g2.mat()));
  gap.equality_characterized = true;
  if (sgn(gap.gap) < 0) throw TheoremViolation("equality_theorem_pair: negative gap");

  std::vector<HermMat> p1{g1.mat()};
  p1.insert(p1.end(), rest_mats.begin(), rest_mats.end());
  std::vector<HermMat> p2{g2.mat()};
  p2.insert(p2.end(), rest_mats.begin(), rest_mats.end());
  PairEqualityVerdict v{gap, mixed_adjugate(p1), mixed_adjugate(p2), std::nullopt, std::nullopt};
  v.adjugate_ratio = ratio(v.w1, v.w2);
  v.class_ratio = ratio(g1.mat(), g2.mat());
  if (gap.equality != v.adjugate_ratio.has_value()) {
    throw TheoremViolation(std::string("equality_theorem_pair: equality ") +
                           (gap.equality ? "holds" : "fails") + " but the mixed adjugates are " +
                           (v.adjugate_ratio ? "" : "not ") + "proportional");
  }
  if (gap.equality != v.class_ratio.has_value()) {
    throw TheoremViolation("equality_theorem_pair: equality disagrees with class proportionality");
  }
  if (gap.equality) {
    v.gap.lambda = v.class_ratio;
    if (equality_lambda(with(g1.mat(), g1.mat()), d12) != *v.class_ratio) {
      throw TheoremViolation("equality_theorem_pair: d01/d00 disagrees with the class ratio");
    }
  }
  return v;
}

MultiEqualityVerdict equality_theorem_m(const std::vector<TorusClass>& classes, std::size_t m) {
  const std::size_t n = classes.size();
  if (n < 2) throw DimensionError("equality_theorem_m: need n >= 2 classes");
  check_square_family(classes, n, "equality_theorem_m");
  if (m < 2 || m > n) {
    throw DomainError("equality_theorem_m: m = " + std::to_string(m) + " outside [2, " +
                      std::to_string(n) + "]");
  }
  for (const auto& c : classes) require_nef_and_big(c, "equality_theorem_m");

  const auto mats = mats_of(classes);
  const std::vector<HermMat> tail(mats.begin() + static_cast<std::ptrdiff_t>(m), mats.end());
  Rat rhs(1);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<HermMat> t;
    append_copies(t, mats[i], m);
    t.insert(t.end(), tail.begin(), tail.end());
    rhs *= intersect(t);
  }
  MultiEqualityVerdict v;
  v.gap = GapReport::make(rat_pow(intersect(mats), static_cast<unsigned>(m)), rhs);
  v.gap.equality_characterized = true;
  if (sgn(v.gap.gap) < 0) throw TheoremViolation("equality_theorem_m: negative gap");

  // Index multisets i_1 <= ... <= i_{m-1} drawn from {0, ..., m-1}.
  std::vector<HermMat> adjugates;
  std::vector<std::size_t> idx(m - 1, 0);
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t pos, std::size_t lo) {
    if (pos == m - 1) {
      std::vector<HermMat> partial;
      for (auto i : idx) partial.push_back(mats[i]);
      partial.insert(partial.end(), tail.begin(), tail.end());
      adjugates.push_back(mixed_adjugate(partial));
      return;
    }
    for (std::size_t i = lo; i < m; ++i) {
      idx[pos] = i;
      walk(pos + 1, i);
    }
  };
  walk(0, 0);
  v.adjugate_count = adjugates.size();
  v.adjugates_proportional = true;
  for (std::size_t k = 1; k < adjugates.size() && v.adjugates_proportional; ++k) {
    v.adjugates_proportional = ratio(adjugates[0], adjugates[k]).has_value();
  }
  v.classes_proportional = true;
  for (std::size_t i = 1; i < m && v.classes_proportional; ++i) {
    v.classes_proportional = ratio(mats[0], mats[i]).has_value();
  }
  if (v.gap.equality != v.adjugates_proportional) {
    throw TheoremViolation(std::string("equality_theorem_m: equality ") +
                           (v.gap.equality ? "holds" : "fails") + " but the mixed adjugates are " +
                           (v.adjugates_proportional ? "" : "not ") + "all proportional");
  }
  if (v.gap.equality != v.classes_proportional) {
    throw TheoremViolation("equality_theorem_m: equality disagrees with class proportionality");
  }
  return v;
}

FullEqualityVerdict equality_corollary_full(const std::vector<TorusClass>& classes) {
  const std::size_t n = classes.size();
  if (n < 2) throw DimensionError("equality_corollary_full: need n >= 2 classes");
  check_square_family(classes, n, "equality_corollary_full");
  for (const auto& c : classes) require_nef_and_big(c, "equality_corollary_full");
  const auto mats = mats_of(classes);
  Rat rhs(1);
  for (const auto& a : mats) rhs *= torus_volume_factor(n) * det(a);
  FullEqualityVerdict v;
  v.gap = GapReport::make(rat_pow(intersect(mats), static_cast<unsigned>(n)), rhs);
  v.gap.equality_characterized = true;
  if (sgn(v.gap.gap) < 0) throw TheoremViolation("equality_corollary_full: negative gap");
  v.classes_proportional = true;
  for (std::size_t i = 1; i < n && v.classes_proportional; ++i) {
    v.classes_proportional = ratio(mats[0], mats[i]).has_value();
  }
  if (v.gap.equality != v.classes_proportional) {
    throw TheoremViolation("equality_corollary_full: equality disagrees with class proportionality");
  }
  return v;
}

} // namespace afkit
