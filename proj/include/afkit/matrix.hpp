#pragma once

#include "afkit/errors.hpp"
#include "afkit/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace afkit {

/// Dense n x n matrix over an exact field (Rat or GaussRat), row-major.
template <class T>
class SquareMatrix {
public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t size() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_) {
      if (!afkit::is_zero(x)) return false;
    }
    return true;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(const Rat& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const Rat& s) { return a *= s; }
  friend SquareMatrix operator*(const Rat& s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same(b);
    SquareMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (afkit::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

private:
  void check_same(const SquareMatrix& o) const {
    if (o.n_ != n_) {
      throw DimensionError("matrix size mismatch: " + std::to_string(n_) + " vs " +
                           std::to_string(o.n_));
    }
  }

  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RatMat = SquareMatrix<Rat>;
using GenMat = SquareMatrix<GaussRat>;

/// Exact determinant by fraction-based Gaussian elimination. det of the
/// 0 x 0 matrix is 1.
template <class T>
T det(SquareMatrix<T> m) {
  const std::size_t n = m.size();
  T result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      result = -result;
    }
    const T p = m(col, col);
    result *= p;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const T factor = m(i, col) / p;
      for (std::size_t j = col + 1; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return result;
}

/// Classical adjugate: adj(M)[j][i] = (-1)^{i+j} * minor(i, j). adj of a
/// 1 x 1 matrix is [1].
template <class T>
SquareMatrix<T> adjugate(const SquareMatrix<T>& m) {
  const std::size_t n = m.size();
  SquareMatrix<T> adj(n);
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  SquareMatrix<T> minor(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      T cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = std::move(cof);
    }
  }
  return adj;
}

/// Sums of principal minors E_0 = 1, E_1 = tr, ..., E_n = det, so that
/// det(tI - M) = sum_k (-1)^k E_k t^{n-k}. Computed by Faddeev-LeVerrier.
template <class T>
std::vector<T> principal_minor_sums(const SquareMatrix<T>& m) {
  const std::size_t n = m.size();
  // a[k] is the coefficient of t^k in det(tI - M).
  std::vector<T> a(n + 1, T(0));
  a[n] = T(1);
  SquareMatrix<T> mk(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += a[n - k + 1];
    const SquareMatrix<T> amk = m * mk;
    T tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    const Rat inv_k = Rat(1) / Rat(static_cast<long>(k));
    a[n - k] = -(tr * inv_k);
  }
  std::vector<T> e(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (k % 2 == 0) {
      e[k] = a[n - k];
    } else {
      e[k] = -a[n - k];
    }
  }
  return e;
}

/// First negative principal-minor sum of a real symmetric matrix.
struct PsdWitness {
  std::size_t k;
  Rat value;
};

/// Empty when the symmetric rational matrix is PSD; otherwise the index k
/// and value of the first negative coefficient E_k.
std::optional<PsdWitness> psd_witness(const RatMat& m);

/// Complex Hermitian matrix with Gaussian-rational entries. The
/// conjugate-symmetry invariant is checked on construction and preserved by
/// every operation that returns a HermMat.
class HermMat {
public:
  /// Throws DomainError unless m(j, i) == conj(m(i, j)) and n >= 1.
  explicit HermMat(GenMat m);

  static HermMat identity(std::size_t n) { return HermMat(GenMat::identity(n), Trusted{}); }
  static HermMat zero(std::size_t n) { return HermMat(GenMat(n), Trusted{}); }
  static HermMat diagonal(const std::vector<Rat>& diag);
  static HermMat from_real(const RatMat& m);

  [[nodiscard]] std::size_t size() const { return m_.size(); }
  const GaussRat& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  [[nodiscard]] const GenMat& mat() const { return m_; }
  [[nodiscard]] bool is_zero() const { return m_.is_zero(); }

  HermMat& operator+=(const HermMat& o) {
    m_ += o.m_;
    return *this;
  }
  HermMat& operator-=(const HermMat& o) {
    m_ -= o.m_;
    return *this;
  }
  HermMat& operator*=(const Rat& s) {
    m_ *= s;
    return *this;
  }
  friend HermMat operator+(HermMat a, const HermMat& b) { return a += b; }
  friend HermMat operator-(HermMat a, const HermMat& b) { return a -= b; }
  friend HermMat operator*(HermMat a, const Rat& s) { return a *= s; }
  friend HermMat operator*(const Rat& s, HermMat a) { return a *= s; }
  friend bool operator==(const HermMat& a, const HermMat& b) { return a.m_ == b.m_; }

  /// G * G^* for any square G, which is Hermitian by construction.
  static HermMat gram(const GenMat& g);

private:
  struct Trusted {};
  HermMat(GenMat m, Trusted) : m_(std::move(m)) {}

  GenMat m_;
};

/// Principal-minor sums of a Hermitian matrix; every coefficient is real.
std::vector<Rat> principal_minor_sums(const HermMat& a);

bool is_psd(const HermMat& a);
/// Sylvester's criterion: all leading principal minors > 0.
bool is_pd(const HermMat& a);
Rat det(const HermMat& a);

/// lambda with b == lambda * a for a single real lambda. proportional(0, 0)
/// is 0; a zero a with nonzero b, or a complex ratio, yields nothing.
std::optional<Rat> proportional(const GenMat& a, const GenMat& b);
std::optional<Rat> proportional(const HermMat& a, const HermMat& b);

std::vector<GenMat> to_gen(const std::vector<HermMat>& mats);

} // namespace afkit
