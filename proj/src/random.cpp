#include "dsurv/random.hpp"

#include <cmath>
#include <stdexcept>

namespace dsurv {

double RandomStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

double RandomStream::exponential() { return -std::log(uniform()); }

double RandomStream::gamma(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0))
    throw std::domain_error("gamma: shape and rate must be positive");
  // Marsaglia-Tsang squeeze; shape < 1 boosted through G(a) = G(a+1) U^{1/a}.
  double boost = 0.0;  // additive on the log scale
  double a = shape;
  if (a < 1.0) {
    boost = std::log(uniform()) / a;
    a += 1.0;
  }
  const double d = a - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x ||
        std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return std::exp(std::log(d * v) + boost) / rate;
    }
  }
}

double RandomStream::beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("beta: shapes must be positive");
  // log-space gamma ratio; stable for small shapes
  const double lx = std::log(gamma(a, 1.0));
  const double ly = std::log(gamma(b, 1.0));
  if (!std::isfinite(lx) && !std::isfinite(ly)) return 0.5;
  return 1.0 / (1.0 + std::exp(ly - lx));
}

int RandomStream::categorical(const double* weights, int n) {
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += weights[i];
  double u = uniform() * total;
  for (int i = 0; i < n; ++i) {
    u -= weights[i];
    if (u <= 0.0) return i;
  }
  return n - 1;
}

}  // namespace dsurv
