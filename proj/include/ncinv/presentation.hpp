#pragma once
#include <optional>
#include <string>
#include <vector>

#include "ncinv/field.hpp"
#include "ncinv/words.hpp"

namespace ncinv {

struct NcTerm {
  Scalar coeff;
  Word word;
};

// Noncommutative polynomial in the free algebra over the presentation's
// generators. Homogeneity is a property of the ideal generators, checked on
// load, not an invariant of the type.
struct NcPoly {
  std::vector<NcTerm> terms;
};

// User assertions carried with a presentation. These are inputs the tool
// cannot decide (noetherianity, AS regularity, primality of the smash
// product, ...); bound-check rows echo which ones they rely on.
struct AlgebraAssertions {
  std::optional<int> gldim;
  bool as_regular = false;
  bool is_domain = false;
  bool noetherian = false;
  bool smash_product_prime = false;
  bool koszul = false;
  bool invariants_finite_gldim = false;
  bool invariants_commutative = false;
  std::optional<int> cm_s;           // M = A over R is s-Cohen-Macaulay
  std::optional<int> minus_one_skew; // algebra is k_{-1}[x_1..x_n], value n
};

struct AlgebraPresentation {
  NumberField field = NumberField::rationals();
  std::vector<GenInfo> gens;
  std::vector<NcPoly> relations;
  AlgebraAssertions asserts;

  int gen_index(const std::string& name) const;  // -1 when absent
  int poly_degree(const NcPoly& p) const;        // throws if not homogeneous
  bool generated_in_degree_one() const;
  // Homogeneity of every relation, generator degrees >= 1, name uniqueness.
  void validate() const;
};

NcPoly poly_scale(const NcPoly& p, const Scalar& c, const NumberField& f);
NcPoly poly_mul_words(const Word& u, const NcPoly& p, const Word& v);

// A/A_{>=d}: adds every word of degree d as a relation.
AlgebraPresentation quotient_truncation(const AlgebraPresentation& p, int d,
                                        std::size_t word_cap);

// Presentation with only the relations of degree <= n kept.
AlgebraPresentation relations_up_to(const AlgebraPresentation& p, int n);

}  // namespace ncinv
