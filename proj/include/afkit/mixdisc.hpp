#pragma once

#include "afkit/matrix.hpp"
#include "afkit/parallel.hpp"

#include <cstddef>
#include <vector>

namespace afkit {

/// Largest n accepted by the permutation route (n! determinants).
inline constexpr std::size_t kPermutationRouteLimit = 6;
/// Largest n accepted by the subset route (2^n determinants).
inline constexpr std::size_t kPolarizationRouteLimit = 20;

Rat factorial(std::size_t n);

/// D(A_1, ..., A_n) as (1/n!) * sum over sigma in S_n of the determinant of
/// the matrix whose j-th column is column j of A_{sigma(j)}.
/// Requires n matrices of size n, n <= kPermutationRouteLimit.
GaussRat mixed_discriminant(const std::vector<GenMat>& tuple, Exec exec = Exec::parallel);

/// Hermitian tuples have a real mixed discriminant; a nonzero imaginary part
/// raises TheoremViolation.
Rat mixed_discriminant(const std::vector<HermMat>& tuple, Exec exec = Exec::parallel);

/// Same quantity by inclusion-exclusion over subsets:
/// (1/n!) * sum_{eps in {0,1}^n} (-1)^{n + |eps|} det(sum_i eps_i A_i).
GaussRat mixed_discriminant_polarized(const std::vector<GenMat>& tuple,
                                      Exec exec = Exec::parallel);
Rat mixed_discriminant_polarized(const std::vector<HermMat>& tuple, Exec exec = Exec::parallel);

/// D(A[k], B[n-k]) from the n+1 values det(sA + B), s = 0..n, by exact
/// interpolation: det(sA + B) = sum_k C(n,k) D(A[k], B[n-k]) s^k.
GaussRat mixed_discriminant_pair(const GenMat& a, std::size_t k, const GenMat& b);
Rat mixed_discriminant_pair(const HermMat& a, std::size_t k, const HermMat& b);

/// Checks det(sum_r lambda_r A_r) against the multinomial expansion in mixed
/// discriminants D(A_1[r_1], ..., A_m[r_m]), exactly.
bool det_expansion_check(const std::vector<GenMat>& mats, const std::vector<Rat>& lambdas);

/// W with W(j,k) = D(E_jk, A_1, ..., A_{n-1}), i.e. the matrix representing
/// B -> D(B, A_1, ..., A_{n-1}) = sum_{j,k} B(j,k) W(j,k). Evaluated from
/// adjugates: W(j,k) = (1/n!) sum_eps (-1)^{n-1-|eps|} adj(sum eps_i A_i)(k,j).
GenMat mixed_adjugate(const std::vector<GenMat>& partial, Exec exec = Exec::parallel);
HermMat mixed_adjugate(const std::vector<HermMat>& partial, Exec exec = Exec::parallel);

/// Definitional route for the mixed adjugate: n^2 mixed discriminants with
/// single-entry basis matrices. Slow; kept as the reference.
GenMat mixed_adjugate_by_basis(const std::vector<GenMat>& partial);

/// sum_{j,k} B(j,k) W(j,k).
GaussRat pair_with_adjugate(const GenMat& b, const GenMat& w);

/// Appends `count` copies of m, for building tuples like (A[2], B, C).
template <class M>
void append_copies(std::vector<M>& out, const M& m, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) out.push_back(m);
}

} // namespace afkit
