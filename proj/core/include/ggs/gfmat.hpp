#pragma once

#include <cstdint>
#include <vector>

#include "ggs/gf.hpp"

namespace ggs {

struct GfMatrix {
  size_t rows = 0, cols = 0;
  std::vector<uint32_t> a;

  GfMatrix() = default;
  GfMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

  uint32_t& at(size_t r, size_t c) { return a[r * cols + c]; }
  uint32_t at(size_t r, size_t c) const { return a[r * cols + c]; }
  const uint32_t* row(size_t r) const { return a.data() + r * cols; }
  uint32_t* row(size_t r) { return a.data() + r * cols; }
};

// In-place reduced row echelon form. Returns the rank; pivot columns are
// appended to *pivots when given.
size_t rref(GfMatrix& M, const Field& F, std::vector<size_t>* pivots = nullptr);

// Reduce a row vector against an RREF matrix; true iff it reduces to zero,
// i.e. the vector lies in the row space.
bool in_row_space(const GfMatrix& R, size_t rank, const std::vector<size_t>& pivots,
                  const Field& F, std::vector<uint32_t> v);

// Incremental row-independence tracker (forward elimination only).
class RankTracker {
public:
  RankTracker(size_t cols, const Field& F) : cols_(cols), F_(F) {}
  // True iff the row was independent of everything added so far.
  bool add_row(std::vector<uint32_t> row);
  size_t rank() const { return rows_.size(); }

private:
  size_t cols_;
  const Field& F_;
  std::vector<size_t> pivot_cols_;              // sorted
  std::vector<std::vector<uint32_t>> rows_;     // rows_[i] has pivot pivot_cols_[i] scaled to 1
};

}  // namespace ggs
