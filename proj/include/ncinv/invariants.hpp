#pragma once
#include <optional>
#include <string>
#include <vector>

#include "ncinv/action.hpp"
#include "ncinv/graded_ring.hpp"

namespace ncinv {

enum class Side { Left, Right };

// Certification discipline: a quantity is Certified only when a named lemma
// pins it down within the truncation; otherwise it is Observed to N.
struct Certainty {
  bool certified = false;
  std::string by;  // lemma name when certified
};

// Per-degree invariant bases of (A_d)^H, canonical RREF rows in ambient
// coordinates; degree 0 is the span of the unit.
std::vector<std::vector<Vec>> invariant_bases(const HopfAction& act, int N);

SubRing invariant_subring(const HopfAction& act, int N);

struct MinimalGenerators {
  struct Gen {
    int degree;
    Vec ambient;  // normalized, leading (earliest deglex) coefficient 1
  };
  std::vector<Gen> gens;
  std::vector<int> new_count;  // per degree 0..N
};

// Degree-by-degree: close the subalgebra generated by the lower-degree
// generators, then adjoin a deterministic complement inside (A_d)^H.
MinimalGenerators minimal_generators(const std::vector<std::vector<Vec>>& inv,
                                     const BasisTable& t);

struct BetaResult {
  std::optional<int> value;  // nullopt when no generators were found
  bool may_grow = true;      // generators above N cannot be excluded
  Certainty cert;
};

// `certified_upper_bounds` are (bound, lemma) pairs whose hypotheses are
// certified; the smallest bound <= N freezes beta.
BetaResult beta(const MinimalGenerators& g, int N,
                const std::vector<std::pair<int, std::string>>& certified_upper_bounds);

struct HilbertIdealData {
  Side side = Side::Left;
  std::vector<int> dims;    // dim J_d for d = 0..N
  std::vector<int> codims;  // dim (A/J)_d
  std::vector<std::vector<Vec>> bases;  // per degree, canonical rows
};

// Left: J_d = sum A_{d-e} R_e; right: mirrored.
HilbertIdealData hilbert_ideal(Side side,
                               const std::vector<std::vector<Vec>>& inv,
                               const BasisTable& t, int N);

struct TauResult {
  bool finite_observed = false;  // a zero codim degree was seen
  int value = -1;                // 1 + deg(A/J) when finite_observed
  int observed_floor = 0;        // value > N implies tau > N (all codims nonzero)
  Certainty cert;
};

TauResult tau(const HilbertIdealData& j, bool generated_in_degree_one, int N);

struct ModuleGenerators {
  Side module_side = Side::Right;
  std::vector<std::vector<Vec>> gens;  // per degree, ambient coordinates
  int t0 = -1;                         // max degree with generators
  bool exhausted = false;              // some degree had full ideal slice
};

// Minimal generators of A as a one-sided R-module: deterministic complement
// of the matching Hilbert ideal slice. Cross-checks codims; a mismatch is an
// internal error.
ModuleGenerators module_generators_over_R(Side module_side,
                                          const HilbertIdealData& j,
                                          const BasisTable& t, int N);

}  // namespace ncinv
