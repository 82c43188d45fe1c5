// evolve.hpp — the reduced dynamics T_t: exact entrywise closed form,
// an independent fixed-step RK4 integrator, and dephasing diagnostics.
//
// Closed form, entry (i, j):
//   (T_t X)_{ij} = x_{ij} exp(-gamma t (j-i)^2 / 4^{n-1})
//                         exp( i b t (q_i^2 - q_j^2)).
// Diagonal entries are invariant, exactly: the phase factor tables introduce
// rounding at theta = 0, so the diagonal is pinned to the input.

#pragma once

#include <cstddef>
#include <vector>

#include "spinbath/generator.hpp"
#include "spinbath/model.hpp"
#include "spinbath/types.hpp"

namespace spinbath {

// Factor tables for a single evolution time; applies one column at a time so
// large diagonal observables can be checked without materializing matrices.
class ColumnEvolver {
 public:
  ColumnEvolver(const SpinChainModel& model, const GeneratorCoefficients& coeffs,
                double t, bool dual = false);

  // out[i] = x[i] * factor(i, j) for one column j; out == x when j is the
  // only nonzero row (diagonal input).
  void apply(const Complex* x, Complex* out, std::size_t j) const;
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  bool with_phases_;
  std::vector<double> decay_;    // per-gap damping, index (i - j) + dim - 1
  std::vector<double> cos_phi_;  // cos(b t q_i^2)
  std::vector<double> sin_phi_;
};

class DephasingPropagator {
 public:
  // dual = true evolves states instead of observables (conjugated phases).
  DephasingPropagator(const SpinChainModel& model, const GeneratorCoefficients& coeffs,
                      bool dual = false);

  void evolve(const Observable& x, double t, Observable& out) const;
  Observable evolve(const Observable& x, double t) const;

 private:
  SpinChainModel model_;
  GeneratorCoefficients coeffs_;
  bool dual_;
};

Observable evolve_closed_form(const Observable& x, double t, const SpinChainModel& model,
                              const GeneratorCoefficients& coeffs);

// Classical fixed-step 4th-order integration of dX/dt = L(X) through the
// generator only; requires step * max_rate <= 0.05.
Observable evolve_ode(const Observable& x, double t, const SpinChainModel& model,
                      const GeneratorCoefficients& coeffs, double step);

// Time at which |x_{ij}(t)| has shrunk to epsilon of its start:
// t* = ln(1/epsilon) 4^{n-1} / (gamma (j-i)^2). Indices are 0-based.
double decoherence_time(std::size_t i, std::size_t j, double epsilon,
                        const SpinChainModel& model, const GeneratorCoefficients& coeffs);

// tr(Lambda T_t(X)) for each requested time.
std::vector<Complex> expectation_trajectory(const DensityMatrix& lambda,
                                            const Observable& x,
                                            const std::vector<double>& times,
                                            const SpinChainModel& model,
                                            const GeneratorCoefficients& coeffs);

}  // namespace spinbath
