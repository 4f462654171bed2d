#pragma once

#include "afkit/ineqcheck.hpp"
#include "afkit/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace afkit {

/// Symmetric (r+1) x (r+1) table of pairings d_ij = f(u_i, u_j).
class GramTable {
public:
  /// Throws DomainError unless d is symmetric with size r + 1 >= 2.
  explicit GramTable(RatMat d);

  [[nodiscard]] std::size_t r() const { return d_.size() - 1; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return d_(i, j); }
  [[nodiscard]] const RatMat& table() const { return d_; }

  friend bool operator==(const GramTable& a, const GramTable& b) { return a.d_ == b.d_; }

private:
  RatMat d_;
};

/// r x r matrix with entries d_0i d_0j - d_00 d_ij (i, j = 1..r).
RatMat shephard_matrix(const GramTable& g);

struct ShephardPsd {
  bool psd = false;
  /// First negative principal-minor sum when psd is false.
  std::optional<PsdWitness> witness;
  /// d00 == 0: the closed-cone boundary case. A failure there is recorded
  /// as a flagged instance rather than a theorem violation.
  bool boundary = false;
};

ShephardPsd check_psd_shephard(const GramTable& g);

/// det(shephard_matrix) == (-1)^r d00^{r-1} det((d_ij)_{i,j=0..r}). Holds for
/// every symmetric table.
bool det_identity_check(const GramTable& g);

/// (d01^2 - d00 d11)(d02^2 - d00 d22) >= (d01 d02 - d00 d12)^2 for r = 2.
/// A negative gap raises TheoremViolation.
GapReport r2_inequality(const GramTable& g);

/// For r >= 2: empty unless d01^2 == d00 d11; otherwise whether
/// d01 d02 == d00 d12 follows.
std::optional<bool> r2_equality_propagation(const GramTable& g);

/// d_ij = D(A_i, A_j, B_3, ..., B_n) for r+1 classes and n-2 further PSD
/// matrices. Entries are asserted nonnegative.
GramTable gram_from_discriminants(const std::vector<HermMat>& classes,
                                  const std::vector<HermMat>& rest);

/// d_ij = beta_i . beta_j . gamma_3 ... gamma_n on the flat torus; asserted to
/// equal n! 2^n times the discriminant table.
GramTable gram_from_torus(const std::vector<HermMat>& classes, const std::vector<HermMat>& rest);

/// Table with every entry multiplied by s.
GramTable scaled(const GramTable& g, const Rat& s);

} // namespace afkit
