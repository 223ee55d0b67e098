#include "taubethe/core/sampling.hpp"

#include <cmath>
#include <numbers>

namespace taubethe {

std::vector<Complex> sample_points(const SampleConfig& cfg, std::size_t n,
                                   std::span<const Complex> forbidden, Rng& rng) {
  cfg.validate();
  if (n == 0) throw std::invalid_argument("sample_points: n must be >= 1");
  std::vector<Complex> out;
  out.reserve(n);
  const std::size_t budget = 500 * n + 500;
  std::size_t attempts = 0;
  while (out.size() < n) {
    if (++attempts > budget)
      throw SamplingError("sample_points: could not place " + std::to_string(n) +
                          " points after " + std::to_string(budget) + " attempts");
    const double r = rng.uniform(cfg.modulus_lo, cfg.modulus_hi);
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Complex z = std::polar(r, phi);
    bool ok = true;
    for (Complex w : out)
      if (std::abs(z - w) < cfg.min_separation) { ok = false; break; }
    if (ok)
      for (Complex w : forbidden)
        if (std::abs(z - w) < cfg.min_separation) { ok = false; break; }
    if (ok) out.push_back(z);
  }
  return out;
}

std::vector<Complex> sample_points(const SampleConfig& cfg, std::size_t n,
                                   std::span<const Complex> forbidden) {
  Rng rng(cfg.seed);
  return sample_points(cfg, n, forbidden, rng);
}

}  // namespace taubethe
