#ifndef DSURV_RANDOM_HPP
#define DSURV_RANDOM_HPP

#include <cstdint>
#include <random>

namespace dsurv {

/// Single-owner stream of random variates. All samplers in the project draw
/// from one of these; a fixed seed fixes the full draw sequence. Callers that
/// need parallelism create independent streams with distinct seeds.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  /// Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal (Marsaglia polar, spare cached).
  double normal();

  double normal(double mean, double sd) { return mean + sd * normal(); }

  /// Exponential with unit rate.
  double exponential();

  /// Gamma(shape, rate). Shapes below 1 use the power boost, so draws can
  /// underflow to 0 for extreme shapes; callers floor where required.
  double gamma(double shape, double rate);

  /// Beta(a, b) via the gamma ratio, computed in log space.
  double beta(double a, double b);

  bool coin() { return (gen_() & 1u) != 0; }

  /// Index in [0, n) proportional to the given nonnegative weights.
  int categorical(const double* weights, int n);

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace dsurv

#endif
