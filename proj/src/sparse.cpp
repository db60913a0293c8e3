#include "tazrp/sparse.hpp"

#include <stdexcept>

namespace tazrp {

void SparseIntMat::add(long r, long c, const Int& v) {
  if (v == 0) return;
  auto& row = data_[r];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, v);
  } else {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

Int SparseIntMat::get(long r, long c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Int(0) : it->second;
}

SparseIntMat SparseIntMat::multiply(const SparseIntMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("sparse: shape mismatch");
  SparseIntMat out(rows_, other.cols_);
  for (long r = 0; r < rows_; ++r) {
    for (const auto& [k, v] : data_[r]) {
      for (const auto& [c, w] : other.data_[k]) out.add(r, c, v * w);
    }
  }
  return out;
}

Int SparseIntMat::trace() const {
  Int t = 0;
  long d = rows_ < cols_ ? rows_ : cols_;
  for (long r = 0; r < d; ++r) t += get(r, r);
  return t;
}

std::vector<Int> SparseIntMat::column_sums() const {
  std::vector<Int> sums(cols_, Int(0));
  for (long r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) sums[c] += v;
  return sums;
}

std::vector<std::vector<Int>> SparseIntMat::to_dense() const {
  std::vector<std::vector<Int>> d(rows_, std::vector<Int>(cols_, Int(0)));
  for (long r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) d[r][c] = v;
  return d;
}

long SparseIntMat::nonzeros() const {
  long n = 0;
  for (const auto& row : data_) n += static_cast<long>(row.size());
  return n;
}

bool SparseIntMat::operator==(const SparseIntMat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

}  // namespace tazrp
