#pragma once

#include "afkit/convexvol.hpp"
#include "afkit/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace afkit {

/// Exact verdict for one inequality instance lhs >= rhs.
struct GapReport {
  Rat lhs;
  Rat rhs;
  Rat gap;       // lhs - rhs
  bool equality; // gap == 0
  /// Proportionality constant when the instance is a detected equality case.
  std::optional<Rat> lambda;
  /// False when the inputs only meet the inequality's hypotheses (e.g. PSD
  /// but not PD), so the equality clause is not claimed.
  bool equality_characterized = false;

  static GapReport make(Rat lhs, Rat rhs);
};

/// Grid samples of lambda -> value(lambda)^{1/m}. The inner values are
/// exact; only the m-th root is taken in floating point.
struct ConcavityReport {
  std::vector<Rat> grid;            // 0 = grid.front() < ... < grid.back() = 1
  std::vector<double> values;       // root values on the grid
  std::vector<double> chord_gaps;   // values[k] - chord(grid[k])
  double max_midpoint_violation = 0;
  double max_chord_violation = 0;
  double max_violation = 0;         // max of the two above, >= 0
  /// max |chord_gaps[k]|; 0 (within rounding) means chord equality everywhere.
  double max_chord_deviation = 0;
};

/// D(A,B,rest)^2 >= D(A,A,rest) D(B,B,rest) for A, rest PSD and B Hermitian.
/// When A and every rest matrix are PD the equality clause is enforced:
/// gap == 0 iff B = lambda A, with lambda reported.
GapReport af_gap_discriminant(const HermMat& a, const HermMat& b, const std::vector<HermMat>& rest);

/// V(K,L,rest)^2 >= V(K,K,rest) V(L,L,rest). No equality characterization.
GapReport af_gap_volume(const Polytope& k, const Polytope& l, const std::vector<Polytope>& rest,
                        std::size_t budget = kDefaultVertexBudget);

/// D(A_1..A_n)^m >= prod_{i<=m} D(A_i[m], A_{m+1}, ..., A_n) for PSD inputs;
/// for PD inputs, equality iff A_1..A_m are pairwise proportional.
GapReport af_m_fold_discriminant(const std::vector<HermMat>& tuple, std::size_t m);

/// V(K_1..K_d)^m >= prod_{i<=m} V(K_i[m], K_{m+1}, ..., K_d).
GapReport af_m_fold_volume(const std::vector<Polytope>& tuple, std::size_t m,
                           std::size_t budget = kDefaultVertexBudget);

/// g(l) = D(((1-l)A0 + l A1)[m], rest)^{1/m} on a uniform grid of grid_size
/// points; reports midpoint-concavity and chord-inequality violations.
ConcavityReport bm_concavity_discriminant(const HermMat& a0, const HermMat& a1,
                                          const std::vector<HermMat>& rest, std::size_t m,
                                          std::size_t grid_size = 11);

/// f(l) = V(((1-l)K0 + l K1)[m], rest)^{1/m}, same contract.
ConcavityReport bm_concavity_volume(const Polytope& k0, const Polytope& k1,
                                    const std::vector<Polytope>& rest, std::size_t m,
                                    std::size_t grid_size = 11,
                                    std::size_t budget = kDefaultVertexBudget);

/// d01 / d00, the candidate proportionality constant. DegenerateError if d00 == 0.
Rat equality_lambda(const Rat& d00, const Rat& d01);

/// Uniform grid {0, 1/(size-1), ..., 1}.
std::vector<Rat> uniform_grid(std::size_t size);

} // namespace afkit
