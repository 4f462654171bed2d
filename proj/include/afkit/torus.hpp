#pragma once

// Flat-torus model. A Hermitian matrix A stands for the constant real
// (1,1)-form i * sum a_jk dz^j ^ dz^k-bar on C^n / (Z + iZ)^n, whose volume is
// normalized to 1. Under that normalization the intersection number of n
// such classes is n! 2^n D(A_1, ..., A_n), nef means PSD, Kaehler means PD,
// and a nef class is big iff its self-intersection (a multiple of det) is
// positive.

#include "afkit/ineqcheck.hpp"
#include "afkit/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace afkit {

/// n! 2^n.
Rat torus_volume_factor(std::size_t n);

class TorusClass {
public:
  /// Computes the positivity flags. Raises TheoremViolation if
  /// (nef and big) disagrees with kahler.
  static TorusClass from(HermMat m);

  [[nodiscard]] const HermMat& mat() const { return mat_; }
  [[nodiscard]] std::size_t size() const { return mat_.size(); }
  [[nodiscard]] bool nef() const { return nef_; }
  /// Meaningful for nef classes: gamma^n > 0.
  [[nodiscard]] bool big() const { return big_; }
  [[nodiscard]] bool kahler() const { return kahler_; }

private:
  explicit TorusClass(HermMat m) : mat_(std::move(m)) {}

  HermMat mat_;
  bool nef_ = false;
  bool big_ = false;
  bool kahler_ = false;
};

std::vector<TorusClass> torus_classes(const std::vector<HermMat>& mats);

/// gamma_1 . gamma_2 ... gamma_n = n! 2^n D(A_1, ..., A_n).
Rat intersection_number(const std::vector<TorusClass>& classes);

/// (alpha.c.c_3...c_n)^2 >= (alpha^2.c_3...c_n)(c^2.c_3...c_n) for c and rest
/// Kaehler, alpha arbitrary; equality iff alpha = lambda c (lambda reported).
GapReport af_gap_torus(const TorusClass& alpha, const TorusClass& c,
                       const std::vector<TorusClass>& rest);

/// s_m = gamma1^m . gamma2^{n-m} for m = 0..n. Both classes nef. Log-concavity
/// s_m^2 >= s_{m-1} s_{m+1} is asserted.
std::vector<Rat> kt_sequence(const TorusClass& g1, const TorusClass& g2);

struct PairEqualityVerdict {
  GapReport gap;            // of (g1.g2.rest)^2 vs (g1^2.rest)(g2^2.rest)
  HermMat w1;               // mixed adjugate of (g1, rest)
  HermMat w2;               // mixed adjugate of (g2, rest)
  std::optional<Rat> adjugate_ratio; // W2 = ratio * W1
  std::optional<Rat> class_ratio;    // g2 = ratio * g1
};

/// Equality in the pairwise inequality iff the (n-1,n-1) products
/// g1 ^ rest and g2 ^ rest are proportional, represented by mixed adjugates.
/// On the torus with PD classes this also agrees with g1 proportional to g2.
/// Both biconditionals are asserted. NotBigError for a nef class with det 0.
PairEqualityVerdict equality_theorem_pair(const TorusClass& g1, const TorusClass& g2,
                                          const std::vector<TorusClass>& rest);

struct MultiEqualityVerdict {
  GapReport gap;
  std::size_t adjugate_count = 0;     // distinct index multisets checked
  bool adjugates_proportional = false;
  bool classes_proportional = false;  // g_1, ..., g_m pairwise proportional
};

/// (g_1...g_n)^m = prod_{i<=m} g_i^m . g_{m+1}...g_n iff all mixed adjugates
/// W(g_{i_1}, ..., g_{i_{m-1}}, g_{m+1}, ..., g_n), 1 <= i_k <= m, are
/// proportional. Asserted, together with agreement with class
/// proportionality.
MultiEqualityVerdict equality_theorem_m(const std::vector<TorusClass>& classes, std::size_t m);

struct FullEqualityVerdict {
  GapReport gap;
  bool classes_proportional = false;
};

/// (g_1...g_n)^n = prod g_i^n iff all classes are pairwise proportional.
FullEqualityVerdict equality_corollary_full(const std::vector<TorusClass>& classes);

} // namespace afkit
