#ifndef TAUBETHE_CORE_SAMPLING_HPP
#define TAUBETHE_CORE_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "taubethe/core/types.hpp"

namespace taubethe {

struct SampleConfig {
  std::uint64_t seed = 42;
  double modulus_lo = 0.5;
  double modulus_hi = 2.0;
  double min_separation = 0.05;

  void validate() const {
    if (!(0.0 < modulus_lo && modulus_lo < modulus_hi))
      throw std::invalid_argument("SampleConfig: need 0 < lower < upper modulus");
    if (!(min_separation > 0.0))
      throw std::invalid_argument("SampleConfig: min_separation must be positive");
  }
};

// mt19937_64 with an explicit 53-bit mapping so streams are identical across
// standard libraries (std distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t next_u64() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

 private:
  std::mt19937_64 eng_;
};

// n points with moduli in [lo,hi], pairwise and forbidden-set separation of at
// least cfg.min_separation. Throws SamplingError after bounded retries.
std::vector<Complex> sample_points(const SampleConfig& cfg, std::size_t n,
                                   std::span<const Complex> forbidden, Rng& rng);

// Convenience form owning its generator; deterministic in cfg.seed.
std::vector<Complex> sample_points(const SampleConfig& cfg, std::size_t n,
                                   std::span<const Complex> forbidden = {});

}  // namespace taubethe

#endif
