#include "dsurv/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dsurv {

namespace {

constexpr double kPi = 3.14159265358979323846;

MixtureTable make_table(const double (&w)[10], const double (&m)[10],
                        const double (&v)[10]) {
  MixtureTable t;
  double total = 0.0;
  for (int r = 0; r < 10; ++r) total += w[r];
  for (int r = 0; r < 10; ++r) t.components[r] = {w[r] / total, m[r], v[r]};
  return t;
}

}  // namespace

const MixtureTable& gumbel_mixture_table() {
  // Ten-component fit to exp(-e - exp(-e)), ordered by decreasing mean.
  static const double w[10] = {0.00397, 0.03962, 0.16778, 0.14704, 0.12531,
                               0.10149, 0.10400, 0.11548, 0.10676, 0.08854};
  static const double m[10] = {5.09,  3.29,   1.82,   1.24,   0.764,
                               0.391, 0.0431, -0.306, -0.673, -1.06};
  static const double v[10] = {4.50,  2.02,   1.10,   0.422,  0.198,
                               0.107, 0.0778, 0.0766, 0.0947, 0.146};
  static const MixtureTable table = make_table(w, m, v);
  return table;
}

const MixtureTable& log_chisq1_mixture_table() {
  static const double w[10] = {0.00609, 0.04775, 0.13057, 0.20674, 0.22715,
                               0.18842, 0.12047, 0.05591, 0.01575, 0.00115};
  static const double m[10] = {1.92677,  1.34744,  0.73504,  0.02266, -0.85173,
                               -1.97278, -3.46788, -5.55246, -8.68384, -14.65};
  static const double v[10] = {0.11265, 0.17788, 0.26768, 0.40611, 0.62699,
                               0.98583, 1.57469, 2.54498, 4.16591, 7.33342};
  static const MixtureTable table = make_table(w, m, v);
  return table;
}

bool gig_params_valid(const GigParams& g) {
  if (g.p > 0.0) return g.a > 0.0 && g.b >= 0.0;
  if (g.p < 0.0) return g.a >= 0.0 && g.b > 0.0;
  return g.a > 0.0 && g.b > 0.0;
}

double gig_log_kernel(double x, const GigParams& g) {
  return (g.p - 1.0) * std::log(x) - 0.5 * (g.a * x + g.b / x);
}

namespace {

// Two-parameter form: density proportional to x^(lam-1) exp(-omega(x+1/x)/2)
// with lam >= 0, omega > 0. Negative index is handled by inversion, general
// (a, b) by rescaling with sqrt(b/a).

double log_g2(double x, double lam, double omega) {
  return (lam - 1.0) * std::log(x) - 0.5 * omega * (x + 1.0 / x);
}

double gig_mode(double lam, double omega) {
  // stable for small omega
  if (lam >= 1.0)
    return ((lam - 1.0) + std::sqrt((lam - 1.0) * (lam - 1.0) + omega * omega)) /
           omega;
  return omega /
         ((1.0 - lam) + std::sqrt((1.0 - lam) * (1.0 - lam) + omega * omega));
}

// Ratio-of-uniforms with mode shift. The u-extrema solve a cubic with one
// root on each side of the mode.
double rou_shift(double lam, double omega, RandomStream& rng) {
  const double m = gig_mode(lam, omega);
  const double lgm = log_g2(m, lam, omega);

  const auto cubic = [&](double x) {
    return omega * x * x * x - x * x * (omega * m + 2.0 * lam + 2.0) +
           x * (2.0 * (lam - 1.0) * m - omega) + omega * m;
  };
  const auto bisect = [&](double lo, double hi) {
    // cubic(lo) and cubic(hi) have opposite signs
    double flo = cubic(lo);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = cubic(mid);
      if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  double hi = 2.0 * m + 1.0;
  while (cubic(hi) <= 0.0) hi *= 2.0;
  const double xlo = bisect(std::numeric_limits<double>::min(), m);
  const double xhi = bisect(m, hi);

  const double ulo = (xlo - m) * std::exp(0.5 * (log_g2(xlo, lam, omega) - lgm));
  const double uhi = (xhi - m) * std::exp(0.5 * (log_g2(xhi, lam, omega) - lgm));

  for (;;) {
    const double u = rng.uniform(ulo, uhi);
    const double v = rng.uniform();
    const double x = u / v + m;
    if (!(x > 0.0) || !std::isfinite(x)) continue;
    if (2.0 * std::log(v) <= log_g2(x, lam, omega) - lgm) return x;
  }
}

// Plain ratio-of-uniforms; the u-bound is attained at the mode of the
// (lam+2, omega) kernel.
double rou_noshift(double lam, double omega, RandomStream& rng) {
  const double m = gig_mode(lam, omega);
  const double lgm = log_g2(m, lam, omega);
  const double m2 = gig_mode(lam + 2.0, omega);
  const double umax =
      std::exp(0.5 * (log_g2(m2, lam, omega) - lgm) + std::log(m2));

  for (;;) {
    const double u = rng.uniform() * umax;
    const double v = rng.uniform();
    const double x = u / v;
    if (!(x > 0.0) || !std::isfinite(x)) continue;
    if (2.0 * std::log(v) <= log_g2(x, lam, omega) - lgm) return x;
  }
}

// Composition-rejection hat for lam in [0,1) and small omega: constant piece
// below x0 = omega/(1-lam), power piece up to 2/omega, exponential tail.
double hat3(double lam, double omega, RandomStream& rng) {
  const double xm = gig_mode(lam, omega);
  const double x0 = omega / (1.0 - lam);
  const double k0 = std::exp(log_g2(xm, lam, omega));
  const double a0 = k0 * x0;

  double k1 = 0.0, a1 = 0.0, k2, a2, tail_start;
  if (x0 >= 2.0 / omega) {
    k2 = std::pow(x0, lam - 1.0);
    a2 = k2 * (2.0 / omega) * std::exp(-0.5 * omega * x0);
    tail_start = x0;
  } else {
    k1 = std::exp(-omega);
    a1 = (lam == 0.0)
             ? k1 * std::log(2.0 / (omega * x0))
             : k1 / lam * (std::pow(2.0 / omega, lam) - std::pow(x0, lam));
    k2 = std::pow(2.0 / omega, lam - 1.0);
    a2 = k2 * (2.0 / omega) * std::exp(-1.0);
    tail_start = 2.0 / omega;
  }
  const double total = a0 + a1 + a2;

  for (;;) {
    double v = rng.uniform() * total;
    double x, hx;
    if (v <= a0) {
      x = x0 * v / a0;
      hx = k0;
    } else if (v <= a0 + a1) {
      v -= a0;
      if (lam == 0.0) {
        x = x0 * std::exp(v / k1);
      } else {
        x = std::pow(std::pow(x0, lam) + v * lam / k1, 1.0 / lam);
      }
      hx = k1 * std::pow(x, lam - 1.0);
    } else {
      v -= a0 + a1;
      x = -(2.0 / omega) *
          std::log(std::exp(-0.5 * omega * tail_start) - v * omega / (2.0 * k2));
      hx = k2 * std::exp(-0.5 * omega * x);
    }
    if (!(x > 0.0) || !std::isfinite(x)) continue;
    const double u = rng.uniform() * hx;
    if (std::log(u) <= log_g2(x, lam, omega)) return x;
  }
}

double sample_gig2(double lam, double omega, RandomStream& rng) {
  if (lam > 2.0 || omega > 3.0) return rou_shift(lam, omega, rng);
  if (lam >= 1.0 - 2.25 * omega * omega || omega > 0.2)
    return rou_noshift(lam, omega, rng);
  return hat3(lam, omega, rng);
}

}  // namespace

double sample_gig(const GigParams& params, RandomStream& rng) {
  if (!gig_params_valid(params))
    throw std::domain_error("sample_gig: parameters outside the normalizable region");

  constexpr double kDegenerate = 1e-12;
  if (params.p > 0.0 && params.b < kDegenerate)
    return rng.gamma(params.p, 0.5 * params.a);
  if (params.p < 0.0 && params.a < kDegenerate)
    return 1.0 / rng.gamma(-params.p, 0.5 * params.b);

  const double lam = std::abs(params.p);
  const double omega = std::sqrt(params.a * params.b);
  const double scale = std::sqrt(params.b / params.a);
  double z = sample_gig2(lam, omega, rng);
  if (params.p < 0.0) z = 1.0 / z;
  return scale * z;
}

double sample_f_scaled(double a, double c, RandomStream& rng) {
  if (!(a > 0.0) || !(c > 0.0))
    throw std::domain_error("sample_f_scaled: parameters must be positive");
  // kappa/2 = (c/a) G(a,1) / G(c,1) ~ F(2a, 2c), in log space
  const double lx = std::log(rng.gamma(a, 1.0));
  const double ly = std::log(rng.gamma(c, 1.0));
  return 2.0 * (c / a) * std::exp(lx - ly);
}

double sample_scaled_beta(double alpha, double beta, RandomStream& rng) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::domain_error("sample_scaled_beta: shapes must be positive");
  return 0.5 * rng.beta(alpha, beta);
}

double log_normal_density(double x, double mean, double variance) {
  const double d = x - mean;
  return -0.5 * (std::log(2.0 * kPi * variance) + d * d / variance);
}

double log_gamma_density(double x, double shape, double rate) {
  return shape * std::log(rate) - std::lgamma(shape) +
         (shape - 1.0) * std::log(x) - rate * x;
}

double log_beta_density(double x, double a, double b) {
  return std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
         (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x);
}

double log_f_density(double x, double d1, double d2) {
  const double h1 = 0.5 * d1, h2 = 0.5 * d2;
  return std::lgamma(h1 + h2) - std::lgamma(h1) - std::lgamma(h2) +
         h1 * std::log(d1 / d2) + (h1 - 1.0) * std::log(x) -
         (h1 + h2) * std::log1p(d1 / d2 * x);
}

}  // namespace dsurv
