#pragma once
#include <string>
#include <vector>

#include "ncinv/linalg.hpp"

namespace ncinv {

// Finite-dimensional Hopf algebra by raw structure constants over the
// coefficient field, plus a normalized two-sided integral. Group algebras are
// produced from matrix generators by closure.
struct HopfData {
  NumberField field = NumberField::rationals();
  int dim = 0;
  std::vector<std::string> labels;
  // mult[i][j] = coordinates of h_i * h_j
  std::vector<std::vector<Vec>> mult;
  struct CoTerm {
    Scalar c;
    int left = 0, right = 0;
  };
  // coprod[i]: Delta(h_i) = sum c * h_left (x) h_right
  std::vector<std::vector<CoTerm>> coprod;
  Vec counit;                 // eps(h_i)
  std::vector<Vec> antipode;  // antipode[i] = coords of S(h_i)
  Vec unit;                   // coords of 1
  Vec integral;               // Lambda with eps(Lambda) = 1

  bool is_group_algebra = false;  // set by the group-closure constructor

  Scalar counit_of(const Vec& v) const;
  Vec mul_elems(const Vec& a, const Vec& b) const;
};

struct AxiomFailure {
  std::string axiom;
  std::string witness;
};

struct HopfReport {
  bool ok = true;
  std::vector<AxiomFailure> failures;
};

// Validates every axiom as a structure-constant identity: associativity,
// unit, coassociativity, counit law, Delta and eps multiplicative, antipode
// law on both sides, two-sided integral with eps(Lambda) = 1.
HopfReport validate_hopf(const HopfData& h);

// Closes matrix generators under multiplication (throws ErrorKind::Caps when
// the closure exceeds `cap`) and packages kG with Lambda = (1/|G|) sum g.
// element_matrices receives one matrix per group element, aligned with the
// Hopf basis order; matrices must be invertible and degree-block compatible
// with `gen_degrees`.
HopfData group_to_hopf(const std::vector<Mat>& generators,
                       const std::vector<int>& gen_degrees,
                       const NumberField& f, std::size_t cap,
                       std::vector<Mat>& element_matrices);

}  // namespace ncinv
