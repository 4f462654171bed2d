#include "afkit/shephard.hpp"

#include "afkit/errors.hpp"
#include "afkit/mixdisc.hpp"
#include "afkit/torus.hpp"

#include <string>

namespace afkit {

GramTable::GramTable(RatMat d) : d_(std::move(d)) {
  if (d_.size() < 2) throw DomainError("GramTable: need r >= 1 (at least a 2 x 2 table)");
  for (std::size_t i = 0; i < d_.size(); ++i) {
    for (std::size_t j = i + 1; j < d_.size(); ++j) {
      if (d_(i, j) != d_(j, i)) {
        throw DomainError("GramTable: asymmetric entries at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      }
    }
  }
}

RatMat shephard_matrix(const GramTable& g) {
  const std::size_t r = g.r();
  RatMat s(r);
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j <= r; ++j) s(i - 1, j - 1) = g(0, i) * g(0, j) - g(0, 0) * g(i, j);
  }
  return s;
}

ShephardPsd check_psd_shephard(const GramTable& g) {
  ShephardPsd out;
  out.witness = psd_witness(shephard_matrix(g));
  out.psd = !out.witness.has_value();
  out.boundary = sgn(g(0, 0)) == 0;
  return out;
}

bool det_identity_check(const GramTable& g) {
  const std::size_t r = g.r();
  const Rat lhs = det(shephard_matrix(g));
  Rat rhs = rat_pow(g(0, 0), static_cast<unsigned>(r - 1)) * det(g.table());
  if (r % 2 == 1) rhs = -rhs;
  return lhs == rhs;
}

GapReport r2_inequality(const GramTable& g) {
  if (g.r() != 2) throw DomainError("r2_inequality: table must have r = 2");
  const Rat s11 = g(0, 1) * g(0, 1) - g(0, 0) * g(1, 1);
  const Rat s22 = g(0, 2) * g(0, 2) - g(0, 0) * g(2, 2);
  const Rat s12 = g(0, 1) * g(0, 2) - g(0, 0) * g(1, 2);
  GapReport rep = GapReport::make(s11 * s22, s12 * s12);
  if (sgn(rep.gap) < 0) {
    throw TheoremViolation("r2_inequality: negative gap " + format_rat(rep.gap));
  }
  return rep;
}

std::optional<bool> r2_equality_propagation(const GramTable& g) {
  if (g.r() < 2) throw DomainError("r2_equality_propagation: table must have r >= 2");
  if (g(0, 1) * g(0, 1) != g(0, 0) * g(1, 1)) return std::nullopt;
  return g(0, 1) * g(0, 2) == g(0, 0) * g(1, 2);
}

GramTable gram_from_discriminants(const std::vector<HermMat>& classes,
                                  const std::vector<HermMat>& rest) {
  if (classes.size() < 2) throw DimensionError("gram_from_discriminants: need r + 1 >= 2 classes");
  const std::size_t n = classes.front().size();
  if (n < 2 || rest.size() != n - 2) {
    throw DimensionError("gram_from_discriminants: need n - 2 further matrices of size n");
  }
  for (const auto* group : {&classes, &rest}) {
    for (const auto& m : *group) {
      if (m.size() != n) throw DimensionError("gram_from_discriminants: size mismatch");
      if (!is_psd(m)) throw DomainError("gram_from_discriminants: input is not positive semi-definite");
    }
  }
  const std::size_t k = classes.size();
  RatMat d(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      std::vector<HermMat> t{classes[i], classes[j]};
      t.insert(t.end(), rest.begin(), rest.end());
      Rat v = n <= kPermutationRouteLimit ? mixed_discriminant(t) : mixed_discriminant_polarized(t);
      if (sgn(v) < 0) {
        throw TheoremViolation("gram_from_discriminants: negative mixed discriminant of PSD tuple");
      }
      d(j, i) = v;
      d(i, j) = std::move(v);
    }
  }
  return GramTable(std::move(d));
}

GramTable gram_from_torus(const std::vector<HermMat>& classes, const std::vector<HermMat>& rest) {
  if (classes.size() < 2) throw DimensionError("gram_from_torus: need r + 1 >= 2 classes");
  const std::size_t n = classes.front().size();
  if (n < 2 || rest.size() != n - 2) {
    throw DimensionError("gram_from_torus: need n - 2 further classes");
  }
  std::vector<TorusClass> rest_classes;
  for (const auto& m : rest) rest_classes.push_back(TorusClass::from(m));
  std::vector<TorusClass> betas;
  for (const auto& m : classes) betas.push_back(TorusClass::from(m));
  for (const auto* group : {&betas, &rest_classes}) {
    for (const auto& c : *group) {
      if (!c.nef()) throw DomainError("gram_from_torus: class is not nef");
    }
  }
  const std::size_t k = classes.size();
  RatMat d(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      std::vector<TorusClass> t{betas[i], betas[j]};
      t.insert(t.end(), rest_classes.begin(), rest_classes.end());
      Rat v = intersection_number(t);
      d(j, i) = v;
      d(i, j) = std::move(v);
    }
  }
  GramTable g(std::move(d));
  if (!(g == scaled(gram_from_discriminants(classes, rest), torus_volume_factor(n)))) {
    throw TheoremViolation("gram_from_torus: table is not n! 2^n times the discriminant table");
  }
  return g;
}

GramTable scaled(const GramTable& g, const Rat& s) { return GramTable(g.table() * s); }

} // namespace afkit
