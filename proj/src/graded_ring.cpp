#include "ncinv/graded_ring.hpp"

#include "ncinv/error.hpp"

namespace ncinv {

bool GradedRing::generated_in_degree_one_within(int upto) const {
  // dim(d) == dim of (degree-1 part)^d products for all d <= upto.
  const NumberField& f = field();
  std::vector<Span> spans;
  spans.emplace_back(dim(0), f);
  spans[0].add(unit_vec(0, 0));
  for (int d = 1; d <= upto; ++d) {
    Span s(dim(d), f);
    if (d == 1) {
      for (int i = 0; i < dim(1); ++i) s.add(unit_vec(1, i));
    } else {
      for (int i = 0; i < dim(1); ++i)
        for (const auto& row : spans[d - 1].rows())
          s.add(mul(1, unit_vec(1, i), d - 1, row));
    }
    if (s.dim() != dim(d)) return false;
    spans.push_back(std::move(s));
  }
  return true;
}

SubRing::SubRing(const BasisTable& ambient,
                 std::vector<std::vector<Vec>> deg_basis)
    : ambient_(&ambient), basis_(std::move(deg_basis)) {
  const NumberField& f = ambient_->field();
  check(!basis_.empty() && basis_[0].size() == 1, ErrorKind::Internal,
        "subring must contain the unit in degree 0");
  pivots_.resize(basis_.size());
  for (size_t d = 0; d < basis_.size(); ++d) {
    Span s(ambient_->dim(static_cast<int>(d)), f);
    for (const auto& v : basis_[d]) s.add(v);
    check(s.dim() == static_cast<int>(basis_[d].size()), ErrorKind::Internal,
          "subring basis not independent");
    // Canonicalize to the span's RREF rows so coordinates are deterministic.
    basis_[d] = s.rows();
    pivots_[d] = s.pivots();
  }
}

int SubRing::dim(int d) const {
  check(d >= 0 && d <= max_degree(), ErrorKind::Math,
        "degree exceeds subring truncation");
  return static_cast<int>(basis_[d].size());
}

std::string SubRing::describe_basis(int d, int i) const {
  return "r" + std::to_string(d) + "_" + std::to_string(i);
}

Vec SubRing::to_ambient(int d, const Vec& sub) const {
  const NumberField& f = ambient_->field();
  Vec out = vec_zero(ambient_->dim(d), f);
  for (size_t i = 0; i < sub.size(); ++i)
    vec_add_scaled(out, sub[i], basis_[d][i], f);
  return out;
}

Vec SubRing::from_ambient(int d, const Vec& av) const {
  const NumberField& f = ambient_->field();
  Vec w = av;
  Vec coords = vec_zero(dim(d), f);
  for (int i = 0; i < dim(d); ++i) {
    const Scalar c = w[pivots_[d][i]];
    if (f.is_zero(c)) continue;
    coords[i] = c;
    for (size_t k = 0; k < w.size(); ++k)
      f.sub_mul_in_place(w[k], c, basis_[d][i][k]);
  }
  check(vec_is_zero(w, f), ErrorKind::Internal,
        "vector not inside the subring slice");
  return coords;
}

Vec SubRing::mul(int d1, const Vec& v1, int d2, const Vec& v2) const {
  Vec p = ambient_->mul(d1, to_ambient(d1, v1), d2, to_ambient(d2, v2));
  return from_ambient(d1 + d2, p);
}

}  // namespace ncinv
