// pointer.hpp — the commutative pointer algebra: diagonal conditional
// expectation, configuration-space measure, long-time limit diagnostics, and
// projections with prescribed normalized trace.

#pragma once

#include <cstdint>
#include <vector>

#include "spinbath/evolve.hpp"
#include "spinbath/model.hpp"
#include "spinbath/types.hpp"

namespace spinbath {

// A diagonal observable, i.e. a function on spin configurations.
struct DiagonalObservable {
  Eigen::VectorXcd values;
};

// Conditional expectation P onto the diagonal algebra: discard off-diagonal
// entries. Idempotent, unital, positive, trace-preserving.
DiagonalObservable diagonal_projection(const Observable& x);

Observable to_matrix(const DiagonalObservable& diag);

// Integral against the fair product measure on configurations,
// 2^{-n} sum_eta X(eta); equals the normalized matrix trace exactly.
Complex measure_trace(const DiagonalObservable& diag);

struct PointerProjection {
  std::vector<std::uint32_t> subset;  // configuration indices, ascending
  int n_sites = 0;

  std::size_t dim() const { return std::size_t{1} << n_sites; }
  double normalized_trace() const;
  DiagonalObservable to_diagonal() const;
  Observable to_matrix() const;
};

// Projection onto the first round(s * 2^n) configurations (round half up);
// the achieved normalized trace is within 2^{-n-1} of s.
PointerProjection projection_with_trace(double s, const SpinChainModel& model);

// sigma^axis at the given site (1-based, axis in {1,2,3}) tensored with the
// identity elsewhere.
Observable site_observable(int site, int axis, const SpinChainModel& model);

struct LimitTheoremResult {
  double t_tol = 0.0;                  // first sampled time within tolerance
  double envelope_coefficient = 0.0;   // sum_{i != j} |Lambda_{ji}| |x_{ij}|
  double slowest_rate = 0.0;           // gamma / 4^{n-1}
  std::vector<double> times;
  std::vector<double> distances;       // |<T_t X> - <P X>|
  std::vector<double> envelope;        // coefficient * exp(-slowest_rate * t)
};

// Tracks |<T_t(X)>_Lambda - <P(X)>_Lambda| over the sampled times and returns
// the first time it falls below tol. Every sample is checked against the
// exponential envelope. Throws HorizonError when tolerance is never reached.
LimitTheoremResult verify_limit_theorem(const DensityMatrix& lambda, const Observable& x,
                                        const SpinChainModel& model,
                                        const GeneratorCoefficients& coeffs, double tol,
                                        const std::vector<double>& times);

// Exact invariance of a diagonal observable under T_t, checked column by
// column through the same kernels as the dense propagator (no dense matrix
// is materialized, so this works up to the full site limit).
bool diagonal_invariant_under_evolution(const DiagonalObservable& diag, double t,
                                        const SpinChainModel& model,
                                        const GeneratorCoefficients& coeffs);

}  // namespace spinbath
