#pragma once

#include <map>
#include <vector>

#include "tazrp/ints.hpp"

namespace tazrp {

// Minimal sparse matrix with exact integer entries, row-major.
class SparseIntMat {
 public:
  SparseIntMat() = default;
  SparseIntMat(long rows, long cols) : rows_(rows), cols_(cols), data_(rows) {}

  long rows() const { return rows_; }
  long cols() const { return cols_; }

  void add(long r, long c, const Int& v);
  Int get(long r, long c) const;
  const std::map<long, Int>& row(long r) const { return data_[r]; }

  SparseIntMat multiply(const SparseIntMat& other) const;
  Int trace() const;
  std::vector<Int> column_sums() const;
  std::vector<std::vector<Int>> to_dense() const;
  long nonzeros() const;

  bool operator==(const SparseIntMat& other) const;

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<std::map<long, Int>> data_;
};

}  // namespace tazrp
