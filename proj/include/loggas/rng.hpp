#pragma once

// Counter-based random number generator with explicit jump-ahead.
//
// The generator is a stateless bijective mix of (key, counter): output i of
// stream k is mix64(key_k + i * GOLDEN). Jump-ahead is integer addition on
// the counter, and worker streams are derived from a master seed by
// stream_key = mix64(master + (index+1) * GOLDEN), so decomposing a job
// across workers never changes the numbers a given task sees.

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace loggas {

namespace detail {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}
}  // namespace detail

class Rng {
 public:
  explicit Rng(std::uint64_t key, std::uint64_t counter = 0)
      : key_(key), counter_(counter) {}

  // Derived stream for worker/task `index`; independent of calls made on *this.
  Rng stream(std::uint64_t index) const {
    return Rng(detail::mix64(key_ + (index + 1) * detail::kGolden));
  }

  void jump_ahead(std::uint64_t n) { counter_ += n; }
  std::uint64_t counter() const { return counter_; }
  std::uint64_t key() const { return key_; }

  std::uint64_t next_u64() {
    return detail::mix64(key_ + (++counter_) * detail::kGolden);
  }

  // Uniform on [0,1) with 53 random bits.
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1]; safe as a log() argument.
  double uniform_pos() { return 1.0 - uniform(); }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Box-Muller; the spare value is cached, so draws stay sequential.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // Marsaglia-Tsang; valid for any shape > 0, unit scale.
  double gamma(double shape) {
    if (!(shape > 0.0)) throw std::domain_error("gamma: shape must be > 0");
    if (shape < 1.0) {
      const double u = uniform_pos();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_pos();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // chi distribution with k degrees of freedom (k need not be an integer).
  double chi(double k) { return std::sqrt(2.0 * gamma(0.5 * k)); }

  int uniform_int(int n) {  // 0..n-1
    return int(next_u64() % std::uint64_t(n));
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace loggas
