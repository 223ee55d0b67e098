#ifndef TAUBETHE_SYMFUN_MULTISET_HPP
#define TAUBETHE_SYMFUN_MULTISET_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "taubethe/core/types.hpp"

namespace taubethe::symfun {

struct MiwaEntry {
  Complex value;
  int multiplicity = 1;
};

// Variables with integer multiplicities: the argument of every symmetric
// function and tau-function here. Multiplicity 0 entries are legal (they
// contribute nothing until shifted up).
class MiwaMultiset {
 public:
  MiwaMultiset() = default;
  explicit MiwaMultiset(std::vector<MiwaEntry> entries);

  static MiwaMultiset distinct(std::span<const Complex> values);

  std::size_t size() const { return entries_.size(); }
  const MiwaEntry& entry(std::size_t i) const { return entries_[i]; }
  const std::vector<MiwaEntry>& entries() const { return entries_; }

  // Sum of multiplicities.
  int total() const;

  // Smallest pairwise distance between entry values (inf for size < 2).
  double min_pairwise_distance() const;
  bool separated(double min_separation) const;

  MiwaMultiset with_shift(std::span<const std::size_t> indices) const;
  MiwaMultiset with_one_added(std::size_t index) const;
  // Throws MissingVariableError if the entry has multiplicity 0.
  MiwaMultiset with_one_removed(std::size_t index) const;

  // p_j = sum_i m_i v_i^j for j = 1..maxdeg.
  std::vector<Complex> power_sums(int maxdeg) const;

 private:
  std::vector<MiwaEntry> entries_;
};

}  // namespace taubethe::symfun

#endif
