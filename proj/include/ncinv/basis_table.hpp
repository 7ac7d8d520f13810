#pragma once
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ncinv/linalg.hpp"
#include "ncinv/presentation.hpp"

namespace ncinv {

// Degreewise realization of a connected graded algebra up to a truncation
// degree N: per degree the normal monomials (ascending deglex) and a normal
// form map for every word. Built by exact row reduction of the relation-ideal
// slices; everything above N is unknown. Immutable after build; concurrent
// readers are safe.
class BasisTable {
 public:
  static BasisTable build(AlgebraPresentation pres, int max_degree,
                          std::size_t word_cap = (1u << 20));

  const AlgebraPresentation& pres() const { return pres_; }
  const NumberField& field() const { return pres_.field; }
  int max_degree() const { return max_degree_; }
  int dim(int d) const;
  std::vector<int> dims() const;
  const std::vector<Word>& basis_words(int d) const;
  std::string basis_word_str(int d, int i) const;
  // Index of w among basis_words(d), or -1 when w is not a normal word.
  int basis_index(int d, const Word& w) const;

  // Coordinates over basis_words(deg w); the zero vector iff the word lies in
  // the relation ideal slice.
  Vec normal_form_word(const Word& w) const;
  // Homogeneous element; throws when a term's degree differs or exceeds N.
  Vec normal_form(const NcPoly& e, int degree) const;

  // x * y for coordinate vectors in degrees d1, d2 (d1 + d2 <= N).
  Vec mul(int d1, const Vec& v1, int d2, const Vec& v2) const;
  // Left multiplication by a single generator.
  Vec mul_gen_left(int gen, int d, const Vec& v) const;
  Vec unit_vec(int d, int i) const;

 private:
  AlgebraPresentation pres_;
  int max_degree_ = 0;
  struct DegreeData {
    std::vector<Word> basis;                // ascending deglex
    std::map<Word, int> basis_index;
    std::map<Word, Vec> reduction;          // reducible candidates -> coords
  };
  std::vector<DegreeData> deg_;
  std::unique_ptr<std::mutex> nf_mutex_ = std::make_unique<std::mutex>();
  mutable std::map<Word, Vec> nf_cache_;

  Vec candidate_vec(int gen, int tail_degree, int tail_index) const;
};

struct PhiResult {
  AlgebraPresentation presentation;  // relations of degree <= N only
  std::vector<int> dims;             // of Phi_N up to the check degree
  std::vector<bool> equal;           // per degree, dims agree with reference
  bool all_equal = true;
};

// Phi_N construction: keep relations of degree <= N on the (verified minimal)
// generating space and compare growth against reference dims.
PhiResult phi_N(const AlgebraPresentation& pres, int N,
                const std::vector<int>& reference_dims,
                std::size_t word_cap = (1u << 20));

// Verifies that the declared generators form a minimal generating space:
// per degree, #generators equals dim A_e minus the span of products of
// lower-degree elements (m/m^2 count). Throws on failure.
void verify_minimal_generators(const BasisTable& t);

}  // namespace ncinv
