#include "spinbath/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace spinbath {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0, b = 0.0;
  Complex value;
  double error = 0.0;
};

// Worst error first; ties broken by the left endpoint so the refinement
// order, and with it every intermediate sum, is reproducible.
struct PanelPriority {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.a > rhs.a;
  }
};

Panel eval_panel(const std::function<Complex(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex k15 = kWgk[7] * fc;
  Complex g7 = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const Complex pair = f(c - dx) + f(c + dx);
    k15 += kWgk[j] * pair;
    if (j % 2 == 1) g7 += kWg[(j - 1) / 2] * pair;
  }
  k15 *= h;
  g7 *= h;
  Panel panel;
  panel.a = a;
  panel.b = b;
  panel.value = k15;
  panel.error = std::abs(k15.real() - g7.real()) + std::abs(k15.imag() - g7.imag());
  return panel;
}

Complex kahan_sum_values(std::vector<Panel>& panels, double* error_out) {
  std::sort(panels.begin(), panels.end(),
            [](const Panel& lhs, const Panel& rhs) { return lhs.a < rhs.a; });
  Complex sum = 0.0, comp = 0.0;
  double err = 0.0;
  for (const Panel& p : panels) {
    const Complex y = p.value - comp;
    const Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err += p.error;
  }
  *error_out = err;
  return sum;
}

}  // namespace

QuadratureResult integrate(const std::function<Complex(double)>& f, double a,
                           double b, const QuadratureOptions& opts) {
  if (a == b) return {Complex{0.0, 0.0}, 0.0, 0};
  if (a > b) {
    QuadratureResult r = integrate(f, b, a, opts);
    r.value = -r.value;
    return r;
  }

  const std::size_t n0 = std::clamp<std::size_t>(opts.initial_panels, 1, opts.max_panels);
  std::vector<Panel> heap;
  heap.reserve(n0 + 64);
  double total_error = 0.0;
  Complex total_value = 0.0;
  for (std::size_t i = 0; i < n0; ++i) {
    const double pa = a + (b - a) * (static_cast<double>(i) / static_cast<double>(n0));
    const double pb = (i + 1 == n0)
                          ? b
                          : a + (b - a) * (static_cast<double>(i + 1) / static_cast<double>(n0));
    heap.push_back(eval_panel(f, pa, pb));
    total_error += heap.back().error;
    total_value += heap.back().value;
  }
  std::make_heap(heap.begin(), heap.end(), PanelPriority{});

  // Panels narrower than this cannot be meaningfully refined in double
  // precision; their error estimate is kept but they leave the heap.
  const double min_width = 8.0 * 1e-16 * (std::abs(a) + std::abs(b) + 1.0);
  std::vector<Panel> frozen;
  std::size_t panel_count = heap.size();

  while (true) {
    const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(total_value));
    if (total_error <= tol) break;
    if (heap.empty() || panel_count >= opts.max_panels)
      throw QuadratureError(
          "adaptive quadrature failed to converge: error estimate " +
              std::to_string(total_error) + " exceeds tolerance " + std::to_string(tol),
          total_error);

    std::pop_heap(heap.begin(), heap.end(), PanelPriority{});
    const Panel worst = heap.back();
    heap.pop_back();
    if (worst.b - worst.a < min_width) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = eval_panel(f, worst.a, mid);
    const Panel right = eval_panel(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), PanelPriority{});
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), PanelPriority{});
    ++panel_count;
  }

  heap.insert(heap.end(), frozen.begin(), frozen.end());
  QuadratureResult result;
  result.value = kahan_sum_values(heap, &result.error);
  result.panels = heap.size();
  return result;
}

QuadratureResult integrate_real(const std::function<double(double)>& f, double a,
                                double b, const QuadratureOptions& opts) {
  return integrate([&f](double x) { return Complex(f(x), 0.0); }, a, b, opts);
}

}  // namespace spinbath
