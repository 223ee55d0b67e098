#ifndef TAUBETHE_SYMFUN_PARTITION_HPP
#define TAUBETHE_SYMFUN_PARTITION_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "taubethe/core/types.hpp"

namespace taubethe::symfun {

// Weakly decreasing positive rows; trailing zeros are normalized away so the
// representation is canonical.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> rows);
  Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

  std::size_t length() const { return rows_.size(); }
  // |lambda|, the number of cells.
  int size() const;
  // 1-based row length, 0 beyond length().
  int row(std::size_t i) const {
    return (i >= 1 && i <= rows_.size()) ? rows_[i - 1] : 0;
  }
  const std::vector<int>& rows() const { return rows_; }

  bool operator==(const Partition& o) const { return rows_ == o.rows_; }

 private:
  std::vector<int> rows_;
};

// All partitions fitting in a max_rows x max_part box (includes the empty one).
std::vector<Partition> partitions_in_box(int max_rows, int max_part);

}  // namespace taubethe::symfun

#endif
