// generator.hpp — GKSL generator of the reduced dynamics.
//
// In the sigma^3 product basis the generator acts entrywise:
//   L(X)_{ij} = [ i b (q_i^2 - q_j^2) - gamma (j - i)^2 / 4^{n-1} ] x_{ij},
// which is the entrywise form of i b [Q^2, X] conjugation plus the dissipator
// 2 gamma (Q X Q - {Q^2, X}/2). Both evaluation routes are provided and must
// agree; the dense route exists as an independent check on the entrywise one.

#pragma once

#include "spinbath/model.hpp"
#include "spinbath/spectral.hpp"
#include "spinbath/types.hpp"

namespace spinbath {

enum class CoefficientSource { kClosedForm, kBathNumerical };

const char* source_name(CoefficientSource source);

struct GeneratorCoefficients {
  double gamma = 0.0;  // dephasing rate pi*lambda/beta
  double b = 0.0;      // Hamiltonian coefficient, H' = b Q^2
  CoefficientSource source = CoefficientSource::kClosedForm;

  // gamma from the model; b supplied directly (phases only, 0 is valid).
  static GeneratorCoefficients closed_form(const SpinChainModel& model, double b = 0.0);
  // gamma from the model; b from direct quadrature of the cutoff.
  static GeneratorCoefficients from_bath(const SpinChainModel& model,
                                         const SpectralFunctions& spec);
};

class DephasingGenerator {
 public:
  DephasingGenerator(const SpinChainModel& model, const GeneratorCoefficients& coeffs);

  void apply(const Observable& x, Observable& out) const;
  Observable apply(const Observable& x) const;

  // gamma (N-1)^2 / 4^{n-1} + |b| max|q_i^2 - q_j^2|; bounds the stiffness
  // seen by explicit integrators.
  double max_rate() const { return max_rate_; }
  const Observable& entry_rates() const { return rates_; }

 private:
  Observable rates_;
  double max_rate_;
};

Observable apply_generator(const Observable& x, const SpinChainModel& model,
                           const GeneratorCoefficients& coeffs);

// Same map through dense products with Q and Q^2.
Observable apply_generator_dense(const Observable& x, const SpinChainModel& model,
                                 const GeneratorCoefficients& coeffs);

}  // namespace spinbath
