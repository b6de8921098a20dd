#include "starkcp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "starkcp/error.hpp"

namespace starkcp::quad {

namespace {

// Kronrod 15-point abscissae; odd entries (1,3,5) are the embedded Gauss 7 nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  double noise;  // roundoff floor, 50 eps * int |f|
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double resabs = std::abs(fc) * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fl = f(center - dx), fr = f(center + dx);
    const double sum = fl + fr;
    kronrod += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(fl) + std::abs(fr));
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  const double noise = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(half) * resabs;
  return {a, b, kronrod, std::abs(kronrod - gauss), noise};
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, const Options& opt) {
  if (a == b) return {0.0, 0.0, 0, true};

  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  heap.push(first);
  double total = first.value;
  double total_err = first.error;
  double total_noise = first.noise;
  int intervals = 1;

  auto done = [&] {
    const double target = std::max({opt.abs_tol, opt.rel_tol * std::abs(total), total_noise});
    return total_err <= target;
  };

  while (!done() && intervals < opt.max_intervals) {
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Cannot bisect further in floating point.
      heap.push(worst);
      break;
    }
    Segment left = gk15(f, worst.a, mid);
    Segment right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_noise += left.noise + right.noise - worst.noise;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }

  // Re-sum to shed accumulated cancellation from the running updates.
  double value = 0.0, error = 0.0, noise = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    noise += heap.top().noise;
    heap.pop();
  }
  const double target = std::max({opt.abs_tol, opt.rel_tol * std::abs(value), noise});
  return {value, error, intervals, error <= target};
}

Result integrate_to_infinity(const Integrand& f, double a, const Options& opt) {
  auto mapped = [&f, a](double t) {
    const double s = 1.0 - t;
    const double x = a + t / s;
    const double fx = f(x);
    if (fx == 0.0) return 0.0;
    return fx / (s * s);
  };
  return integrate(mapped, 0.0, 1.0, opt);
}

Result integrate_pieces(const Integrand& f, std::span<const double> breakpoints,
                        const Options& opt) {
  Result total{0.0, 0.0, 0, true};
  if (breakpoints.size() < 2) return total;
  Options piece = opt;
  piece.abs_tol = opt.abs_tol / static_cast<double>(breakpoints.size() - 1);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const Result p = integrate(f, breakpoints[i], breakpoints[i + 1], piece);
    total.value += p.value;
    total.error += p.error;
    total.intervals += p.intervals;
    total.converged = total.converged && p.converged;
  }
  return total;
}

double integrate_checked(const Integrand& f, double a, double b, const Options& opt) {
  const Result r = integrate(f, a, b, opt);
  if (!r.converged)
    throw NumericError("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                           "] did not converge",
                       r.value, r.error);
  return r.value;
}

double integrate_to_infinity_checked(const Integrand& f, double a, const Options& opt) {
  const Result r = integrate_to_infinity(f, a, opt);
  if (!r.converged)
    throw NumericError("quadrature on [" + std::to_string(a) + ", inf) did not converge", r.value,
                       r.error);
  return r.value;
}

Extrapolation extrapolate_to_zero(std::span<const double> h, std::span<const double> y) {
  const std::size_t n = std::min(h.size(), y.size());
  Extrapolation out;
  if (n == 0) return out;
  // Neville tableau evaluated at x = 0; p[i] holds P_{i..i+k}(0).
  std::vector<double> p(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
  out.diagonal.push_back(p[n - 1]);
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) {
      p[i] = (h[i + k] * p[i] - h[i] * p[i + 1]) / (h[i + k] - h[i]);
    }
    out.diagonal.push_back(p[n - 1 - k]);
  }
  out.value = p[0];
  out.residual = n > 1 ? std::abs(out.diagonal[n - 1] - out.diagonal[n - 2])
                       : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace starkcp::quad
