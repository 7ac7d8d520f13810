#include "ncinv/linalg.hpp"

#include <algorithm>

#include "ncinv/error.hpp"

namespace ncinv {

namespace {

template <bool Parallel>
RrefResult rref_impl(Mat& m, const NumberField& f) {
  RrefResult res;
  res.col_pivot_row.assign(m.cols, -1);
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pr = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (!f.is_zero(m.at(r, col))) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != rank) {
      for (int c = col; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(pr, c));
    }
    // Normalize pivot row.
    {
      Scalar inv = f.inv(m.at(rank, col));
      for (int c = col; c < m.cols; ++c)
        m.at(rank, c) = f.mul(m.at(rank, c), inv);
    }
    // Eliminate the pivot column from every other row. Rows are independent.
    if constexpr (Parallel) {
#ifdef NCINV_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (int r = 0; r < m.rows; ++r) {
        if (r == rank) continue;
        const Scalar& factor = m.at(r, col);
        if (f.is_zero(factor)) continue;
        Scalar coef = factor;
        for (int c = col; c < m.cols; ++c)
          f.sub_mul_in_place(m.at(r, c), coef, m.at(rank, c));
      }
    } else {
      for (int r = 0; r < m.rows; ++r) {
        if (r == rank) continue;
        const Scalar& factor = m.at(r, col);
        if (f.is_zero(factor)) continue;
        Scalar coef = factor;
        for (int c = col; c < m.cols; ++c)
          f.sub_mul_in_place(m.at(r, c), coef, m.at(rank, c));
      }
    }
    res.pivot_cols.push_back(col);
    res.col_pivot_row[col] = rank;
    ++rank;
  }
  res.rank = rank;
  return res;
}

}  // namespace

RrefResult rref_serial(Mat& m, const NumberField& f) {
  return rref_impl<false>(m, f);
}

RrefResult rref_parallel(Mat& m, const NumberField& f) {
  return rref_impl<true>(m, f);
}

RrefResult rref(Mat& m, const NumberField& f) {
#ifdef NCINV_HAVE_OPENMP
  if (m.rows >= 48) return rref_parallel(m, f);
#endif
  return rref_serial(m, f);
}

std::vector<Vec> nullspace(const Mat& m_in, const NumberField& f) {
  Mat m = m_in;
  RrefResult r = rref(m, f);
  std::vector<Vec> basis;
  for (int col = 0; col < m.cols; ++col) {
    if (r.col_pivot_row[col] >= 0) continue;
    Vec v(m.cols, f.zero());
    v[col] = f.one();
    for (int p = 0; p < static_cast<int>(r.pivot_cols.size()); ++p) {
      int pc = r.pivot_cols[p];
      if (pc > col) break;
      v[pc] = f.neg(m.at(p, col));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool vec_is_zero(const Vec& v, const NumberField& f) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

Vec vec_zero(int n, const NumberField& f) { return Vec(n, f.zero()); }

void vec_add_scaled(Vec& target, const Scalar& c, const Vec& src,
                    const NumberField& f) {
  for (size_t i = 0; i < target.size(); ++i) {
    Scalar t = f.mul(c, src[i]);
    f.add_in_place(target[i], t);
  }
}

bool Span::add(Vec v) {
  check(static_cast<int>(v.size()) == cols_, ErrorKind::Internal,
        "Span::add dimension mismatch");
  v = reduce(std::move(v));
  int pivot = -1;
  for (int i = 0; i < cols_; ++i) {
    if (!f_->is_zero(v[i])) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) return false;
  Scalar inv = f_->inv(v[pivot]);
  for (int i = pivot; i < cols_; ++i) v[i] = f_->mul(v[i], inv);
  // Back-eliminate the new pivot from existing rows to keep full RREF.
  for (auto& row : rows_) {
    if (f_->is_zero(row[pivot])) continue;
    Scalar coef = row[pivot];
    for (int i = pivot; i < cols_; ++i)
      f_->sub_mul_in_place(row[i], coef, v[i]);
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  size_t pos = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Vec Span::reduce(Vec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& coef = v[pivots_[k]];
    if (f_->is_zero(coef)) continue;
    Scalar c = coef;
    for (int i = pivots_[k]; i < cols_; ++i)
      f_->sub_mul_in_place(v[i], c, rows_[k][i]);
  }
  return v;
}

bool Span::contains(const Vec& v) const {
  return vec_is_zero(reduce(v), *f_);
}

std::vector<Scalar> Span::coordinates(const Vec& v) const {
  std::vector<Scalar> coords(rows_.size(), f_->zero());
  Vec w = v;
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar coef = w[pivots_[k]];
    if (f_->is_zero(coef)) continue;
    coords[k] = coef;
    for (int i = pivots_[k]; i < cols_; ++i)
      f_->sub_mul_in_place(w[i], coef, rows_[k][i]);
  }
  check(vec_is_zero(w, *f_), ErrorKind::Internal,
        "coordinates: vector not inside span");
  return coords;
}

std::vector<Vec> grow_complement(Span& inside,
                                 const std::vector<Vec>& candidates,
                                 const NumberField& f) {
  std::vector<Vec> chosen;
  for (const auto& cand : candidates) {
    Vec r = inside.reduce(cand);
    int pivot = -1;
    for (int i = 0; i < static_cast<int>(r.size()); ++i) {
      if (!f.is_zero(r[i])) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    Scalar inv = f.inv(r[pivot]);
    for (auto& x : r) x = f.mul(x, inv);
    chosen.push_back(r);
    inside.add(std::move(r));
  }
  return chosen;
}

}  // namespace ncinv
