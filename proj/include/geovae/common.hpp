#pragma once

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace geovae {

// Input/contract violations (bad files, bad shapes, bad parameters). CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failures carry the offending line number.
class ParseError : public ValidationError {
public:
  ParseError(const std::string& msg, int line)
      : ValidationError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Numerical failures (non-convergence, NaN divergence). CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Counter-based 64-bit generator (SplitMix64, Steele et al. 2014). The state
// advances by a fixed odd constant and each output is a bijective mix of the
// counter, so streams can be split deterministically by seeding with any
// 64-bit value. Every stochastic operation in the library takes an explicit
// seed and derives its draws from one of these.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; consumes two uniforms per call, no cached state.
  double normal(double mean = 0.0, double stddev = 1.0) {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * M_PI * u2);
  }

  // Integer in [0, n).
  uint64_t below(uint64_t n) { return next_u64() % n; }

  // Derive an independent substream seed; mixing the label keeps streams for
  // different purposes (augmentation, init, noise) decoupled from call order.
  static uint64_t derive(uint64_t seed, uint64_t label) {
    Rng r(seed ^ (0x632be59bd9b4e019ull * (label + 1)));
    return r.next_u64();
  }

private:
  uint64_t state_;
};

// Fisher-Yates shuffle, deterministic under the rng.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
}

// Shortest round-trip decimal formatting for deterministic text output.
std::string format_double(double v);

}  // namespace geovae
