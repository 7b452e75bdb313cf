#include "ggs/gfmat.hpp"

#include <algorithm>

namespace ggs {

size_t rref(GfMatrix& M, const Field& F, std::vector<size_t>* pivots) {
  size_t r = 0;
  for (size_t c = 0; c < M.cols && r < M.rows; ++c) {
    size_t pr = r;
    while (pr < M.rows && M.at(pr, c) == 0) ++pr;
    if (pr == M.rows) continue;
    if (pr != r)
      std::swap_ranges(M.row(pr), M.row(pr) + M.cols, M.row(r));
    uint32_t inv = F.inv(M.at(r, c));
    if (inv != 1) {
      uint32_t* row = M.row(r);
      for (size_t j = c; j < M.cols; ++j) row[j] = F.mul(row[j], inv);
    }
    for (size_t i = 0; i < M.rows; ++i) {
      if (i == r) continue;
      uint32_t f = M.at(i, c);
      if (f == 0) continue;
      uint32_t* src = M.row(r);
      uint32_t* dst = M.row(i);
      for (size_t j = c; j < M.cols; ++j)
        dst[j] = F.sub(dst[j], F.mul(f, src[j]));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

bool in_row_space(const GfMatrix& R, size_t rank, const std::vector<size_t>& pivots,
                  const Field& F, std::vector<uint32_t> v) {
  for (size_t i = 0; i < rank; ++i) {
    uint32_t f = v[pivots[i]];
    if (f == 0) continue;
    const uint32_t* src = R.row(i);
    for (size_t j = pivots[i]; j < R.cols; ++j)
      v[j] = F.sub(v[j], F.mul(f, src[j]));
  }
  return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

bool RankTracker::add_row(std::vector<uint32_t> row) {
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t f = row[pivot_cols_[i]];
    if (f == 0) continue;
    const auto& src = rows_[i];
    for (size_t j = pivot_cols_[i]; j < cols_; ++j)
      row[j] = F_.sub(row[j], F_.mul(f, src[j]));
  }
  size_t p = 0;
  while (p < cols_ && row[p] == 0) ++p;
  if (p == cols_) return false;
  uint32_t inv = F_.inv(row[p]);
  if (inv != 1)
    for (size_t j = p; j < cols_; ++j) row[j] = F_.mul(row[j], inv);
  auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), p);
  size_t idx = size_t(it - pivot_cols_.begin());
  pivot_cols_.insert(it, p);
  rows_.insert(rows_.begin() + ptrdiff_t(idx), std::move(row));
  return true;
}

}  // namespace ggs
