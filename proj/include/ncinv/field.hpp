#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

#include "ncinv/qpoly.hpp"

namespace ncinv {

// Element of Q or of Q[a]/(p(a)): coordinates over the power basis
// 1, a, ..., a^(deg-1). The coordinate vector length always equals the
// field degree; arithmetic reduces modulo the minimal polynomial.
struct Scalar {
  std::vector<Rat> c;
};

// Q or a simple extension Q[a]/(p(a)) with p monic with integer
// coefficients, asserted irreducible by the caller. A trial-factorization
// check (rational roots plus Kronecker factors up to degree 3) rejects
// provably reducible inputs through degree 6. Immutable; safe to share
// across threads.
class NumberField {
 public:
  static NumberField rationals();
  // minpoly: integer coefficients, low degree first, degree >= 1, monic.
  static NumberField make(std::vector<Int> minpoly, std::string label);

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  bool is_rational() const { return degree() == 1; }
  const std::vector<Int>& minpoly() const { return minpoly_; }
  const std::string& label() const { return label_; }
  bool same_as(const NumberField& o) const { return minpoly_ == o.minpoly_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_rat(const Rat& r) const;
  Scalar generator() const;  // the class of a (degree >= 2)

  bool is_zero(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar mul_rat(const Scalar& a, const Rat& r) const;
  Scalar inv(const Scalar& a) const;  // throws on zero
  void add_in_place(Scalar& a, const Scalar& b) const;
  void sub_mul_in_place(Scalar& a, const Scalar& coef, const Scalar& b) const;

  // Reduce a coordinate vector of length up to 2*deg-1 modulo the minpoly.
  Scalar reduce(std::vector<Rat> coords) const;

  std::string to_string(const Scalar& a) const;

 private:
  std::vector<Int> minpoly_;
  std::string label_;
  std::vector<std::vector<Rat>> alpha_pow_;  // a^deg .. a^(2deg-2)
  void precompute();
};

}  // namespace ncinv
