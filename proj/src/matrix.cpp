#include "afkit/matrix.hpp"

namespace afkit {

std::optional<PsdWitness> psd_witness(const RatMat& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m(i, j) != m(j, i)) throw DomainError("psd_witness: matrix is not symmetric");
    }
  }
  const auto e = principal_minor_sums(m);
  for (std::size_t k = 1; k < e.size(); ++k) {
    if (sgn(e[k]) < 0) return PsdWitness{k, e[k]};
  }
  return std::nullopt;
}

HermMat::HermMat(GenMat m) : m_(std::move(m)) {
  const std::size_t n = m_.size();
  if (n == 0) throw DomainError("HermMat: dimension must be at least 1");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!(m_(j, i) == m_(i, j).conj())) {
        throw DomainError("HermMat: entry (" + std::to_string(j) + "," + std::to_string(i) +
                          ") is not the conjugate of (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      }
    }
  }
}

HermMat HermMat::diagonal(const std::vector<Rat>& diag) {
  if (diag.empty()) throw DomainError("HermMat: dimension must be at least 1");
  GenMat m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = GaussRat(diag[i]);
  return HermMat(std::move(m), Trusted{});
}

HermMat HermMat::from_real(const RatMat& r) {
  GenMat m(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) m(i, j) = GaussRat(r(i, j));
  }
  return HermMat(std::move(m));
}

HermMat HermMat::gram(const GenMat& g) {
  const std::size_t n = g.size();
  GenMat m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      GaussRat s;
      for (std::size_t k = 0; k < n; ++k) s += g(i, k) * g(j, k).conj();
      if (i == j) {
        m(i, i) = GaussRat(s.re);
      } else {
        m(j, i) = s.conj();
        m(i, j) = std::move(s);
      }
    }
  }
  return HermMat(std::move(m), Trusted{});
}

std::vector<Rat> principal_minor_sums(const HermMat& a) {
  const auto e = principal_minor_sums(a.mat());
  std::vector<Rat> out;
  out.reserve(e.size());
  for (const auto& c : e) {
    if (!c.is_real()) throw TheoremViolation("Hermitian matrix with non-real minor sum");
    out.push_back(c.re);
  }
  return out;
}

bool is_psd(const HermMat& a) {
  const auto e = principal_minor_sums(a);
  for (std::size_t k = 1; k < e.size(); ++k) {
    if (sgn(e[k]) < 0) return false;
  }
  return true;
}

bool is_pd(const HermMat& a) {
  // Elimination without pivoting: the k-th pivot is D_k / D_{k-1}, so all
  // leading minors are positive iff every pivot is a positive real.
  GenMat m = a.mat();
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    const GaussRat p = m(col, col);
    if (!p.is_real() || sgn(p.re) <= 0) return false;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const GaussRat factor = m(i, col) / p;
      for (std::size_t j = col + 1; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return true;
}

Rat det(const HermMat& a) {
  const GaussRat d = det(a.mat());
  if (!d.is_real()) throw TheoremViolation("Hermitian determinant with nonzero imaginary part");
  return d.re;
}

std::optional<Rat> proportional(const GenMat& a, const GenMat& b) {
  if (a.size() != b.size()) throw DimensionError("proportional: matrix size mismatch");
  const std::size_t n = a.size();
  std::optional<GaussRat> ratio;
  for (std::size_t i = 0; i < n && !ratio; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(i, j).is_zero()) {
        ratio = b(i, j) / a(i, j);
        break;
      }
    }
  }
  if (!ratio) {
    if (b.is_zero()) return Rat(0);
    return std::nullopt;
  }
  if (!ratio->is_real()) return std::nullopt;
  const Rat lambda = ratio->re;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(b(i, j) == a(i, j) * lambda)) return std::nullopt;
    }
  }
  return lambda;
}

std::optional<Rat> proportional(const HermMat& a, const HermMat& b) {
  return proportional(a.mat(), b.mat());
}

std::vector<GenMat> to_gen(const std::vector<HermMat>& mats) {
  std::vector<GenMat> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(m.mat());
  return out;
}

} // namespace afkit
