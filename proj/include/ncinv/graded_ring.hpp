#pragma once
#include <memory>
#include <string>
#include <vector>

#include "ncinv/basis_table.hpp"

namespace ncinv {

// Degreewise coordinatized connected graded ring: dims per degree up to a
// truncation bound and bilinear multiplication on coordinate vectors.
// dim(0) must be 1 with basis the unit. Implementations are immutable.
class GradedRing {
 public:
  virtual ~GradedRing() = default;
  virtual const NumberField& field() const = 0;
  virtual int max_degree() const = 0;
  virtual int dim(int d) const = 0;
  virtual Vec mul(int d1, const Vec& v1, int d2, const Vec& v2) const = 0;
  virtual std::string describe_basis(int d, int i) const = 0;

  Vec unit_vec(int d, int i) const {
    Vec v(dim(d), field().zero());
    v[i] = field().one();
    return v;
  }
  bool generated_in_degree_one_within(int upto) const;
};

class PresentedRing final : public GradedRing {
 public:
  explicit PresentedRing(const BasisTable& t) : t_(&t) {}
  const NumberField& field() const override { return t_->field(); }
  int max_degree() const override { return t_->max_degree(); }
  int dim(int d) const override { return t_->dim(d); }
  Vec mul(int d1, const Vec& v1, int d2, const Vec& v2) const override {
    return t_->mul(d1, v1, d2, v2);
  }
  std::string describe_basis(int d, int i) const override {
    return t_->basis_word_str(d, i);
  }
  const BasisTable& table() const { return *t_; }

 private:
  const BasisTable* t_;
};

// Graded subring of the ambient algebra, given per degree by a canonical
// (reduced echelon) basis of vectors in ambient coordinates. Products are
// computed in the ambient table and re-expressed in subring coordinates;
// closure under multiplication is the caller's responsibility and is checked
// on every product.
class SubRing final : public GradedRing {
 public:
  SubRing(const BasisTable& ambient, std::vector<std::vector<Vec>> deg_basis);
  const NumberField& field() const override { return ambient_->field(); }
  int max_degree() const override {
    return static_cast<int>(basis_.size()) - 1;
  }
  int dim(int d) const override;
  Vec mul(int d1, const Vec& v1, int d2, const Vec& v2) const override;
  std::string describe_basis(int d, int i) const override;

  const BasisTable& ambient() const { return *ambient_; }
  const std::vector<Vec>& ambient_basis(int d) const { return basis_[d]; }
  Vec to_ambient(int d, const Vec& sub_coords) const;
  // Expression of an ambient vector in subring coordinates; throws when the
  // vector lies outside the subring slice.
  Vec from_ambient(int d, const Vec& ambient_vec) const;

 private:
  const BasisTable* ambient_;
  std::vector<std::vector<Vec>> basis_;  // per degree, RREF rows
  std::vector<std::vector<int>> pivots_;
};

class OppositeRing final : public GradedRing {
 public:
  explicit OppositeRing(const GradedRing& base) : base_(&base) {}
  const NumberField& field() const override { return base_->field(); }
  int max_degree() const override { return base_->max_degree(); }
  int dim(int d) const override { return base_->dim(d); }
  Vec mul(int d1, const Vec& v1, int d2, const Vec& v2) const override {
    return base_->mul(d2, v2, d1, v1);
  }
  std::string describe_basis(int d, int i) const override {
    return base_->describe_basis(d, i);
  }

 private:
  const GradedRing* base_;
};

}  // namespace ncinv
