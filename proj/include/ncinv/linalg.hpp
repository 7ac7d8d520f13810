#pragma once
#include <vector>

#include "ncinv/field.hpp"

namespace ncinv {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over a NumberField.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(int r, int c, const NumberField& f)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, f.zero()) {}
  Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }
};

struct RrefResult {
  int rank = 0;
  std::vector<int> pivot_cols;     // ascending, one per pivot row
  std::vector<int> col_pivot_row;  // cols entries; -1 when col is free
};

// Reduced row echelon form, pivots chosen leftmost, full back-substitution.
// The serial kernel is the reference implementation; the parallel kernel
// eliminates rows concurrently with OpenMP and produces identical output
// (exact arithmetic, same pivot sequence).
RrefResult rref_serial(Mat& m, const NumberField& f);
RrefResult rref_parallel(Mat& m, const NumberField& f);
RrefResult rref(Mat& m, const NumberField& f);  // dispatches on size

// Deterministic nullspace basis: one vector per free column (ascending),
// with unit entry at the free column.
std::vector<Vec> nullspace(const Mat& m, const NumberField& f);

bool vec_is_zero(const Vec& v, const NumberField& f);
Vec vec_zero(int n, const NumberField& f);
void vec_add_scaled(Vec& target, const Scalar& c, const Vec& src,
                    const NumberField& f);

// Incrementally maintained row space in reduced echelon form. Row order is
// canonical (sorted by pivot), so the basis depends only on the span.
class Span {
 public:
  Span(int cols, const NumberField& f) : cols_(cols), f_(&f) {}

  // Reduces v against the current rows; inserts the normalized residual if
  // nonzero. Returns true when the rank grew.
  bool add(Vec v);
  // Residual of v after eliminating all pivot coordinates (not normalized).
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  // Coordinates of v over the canonical rows; throws if v is outside.
  std::vector<Scalar> coordinates(const Vec& v) const;

 private:
  int cols_;
  const NumberField* f_;
  std::vector<Vec> rows_;    // sorted by pivot column
  std::vector<int> pivots_;  // ascending
};

// Greedy deterministic complement: walks candidates in order, keeps those
// whose residual against `inside` (grown as it goes) is nonzero. Returns the
// normalized residuals (leading coefficient 1).
std::vector<Vec> grow_complement(Span& inside, const std::vector<Vec>& candidates,
                                 const NumberField& f);

}  // namespace ncinv
