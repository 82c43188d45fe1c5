// quadrature.hpp — adaptive Gauss–Kronrod integration for real- and
// complex-valued integrands on finite intervals.
//
// Strategy: 15-point Kronrod rule with the embedded 7-point Gauss estimate
// per panel, global refinement of the worst panel first. Oscillatory
// integrands are handled by seeding the partition with uniform panels narrow
// enough for the rule (callers pass initial_panels). The final sum runs over
// panels in position order with compensated summation, so results are
// deterministic regardless of refinement history.

#pragma once

#include <cstddef>
#include <functional>

#include "spinbath/types.hpp"

namespace spinbath {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  std::size_t initial_panels = 1;   // uniform pre-split of [a, b]
  std::size_t max_panels = 200000;  // refinement budget
};

struct QuadratureResult {
  Complex value;
  double error = 0.0;       // accumulated error estimate
  std::size_t panels = 0;   // panels in the final partition
};

// Throws QuadratureError when the estimate cannot be brought under tolerance
// within the panel budget.
QuadratureResult integrate(const std::function<Complex(double)>& f, double a,
                           double b, const QuadratureOptions& opts = {});

QuadratureResult integrate_real(const std::function<double(double)>& f,
                                double a, double b,
                                const QuadratureOptions& opts = {});

}  // namespace spinbath
