#pragma once
#include <optional>
#include <string>
#include <vector>

#include "ncinv/qpoly.hpp"
#include "ncinv/resolution.hpp"

namespace ncinv {

// A value with its certification status (Certified by a named lemma within
// the truncation, or Observed to N).
struct CertInt {
  int v = 0;
  bool certified = false;
};

// Everything check_bounds can consume. Absent optionals make the dependent
// rows not-applicable. t-value arrays are indexed by homological degree with
// kMinusInf marking vanishing Tor; entries past the computed range are
// simply absent.
struct BoundsContext {
  std::string fixture;
  int N = 8;

  // Hypothesis flags (user-asserted unless noted).
  bool hyp_T_as_regular = false;
  bool hyp_T_domain = false;
  bool hyp_T_noetherian = false;
  bool hyp_smash_prime = false;
  bool hyp_T_koszul = false;
  bool hyp_invariants_finite_gldim = false;
  bool hyp_R_commutative = false;
  bool hyp_group_action = false;        // derived
  bool T_generated_deg1 = false;        // derived
  bool hyp_S_as_regular = false;
  bool S_surjective_onto_R = false;     // verified to N
  bool S_R_same_gen_counts = false;     // verified
  bool tor1_condition = false;          // Tor^S_1(k,R) (x)_R k iso; asserted
  std::optional<int> minus_one_skew_n;  // structurally verified
  bool central_verified = false;        // centrality/stability verified
  std::optional<int> central_d, central_m;
  std::optional<int> s_CM;              // user-asserted s for Thm 4.7

  std::optional<int> dimH;
  std::optional<int> group_order;
  std::optional<CertInt> beta1, beta2, tau, tau_op;
  std::optional<CertInt> beta_S, beta2_S;
  std::optional<int> cmreg_T, cmreg_S;
  std::optional<int> gldim_T, gldim_S;

  std::vector<int> tR_k, tS_k, tT_k;  // t_i(k) over R, S, T
  std::vector<int> tR_T;              // t^R_i(T_R)
  std::vector<int> tS_R;              // t^S_i(R_S)
  std::vector<int> tS_T;              // t^S_i(T_S)
  std::vector<int> gen_deg_tor_S_T;   // deg(k (x)_T Tor^S_i(T,k)) per i

  // ann(Tor^R_i(A,k)) quotient degrees, per Definition of the H-action ideals.
  std::vector<int> deg_A_over_JHi;
  std::optional<int> deg_A_over_JHinf;
  // ann_T(Tor^S_i(T,k)) quotient degrees for the syzygy-bound rows.
  std::vector<int> deg_T_over_Ji;     // observed, per homological i
  std::optional<int> deg_T_over_Jinf; // observed intersection

  std::optional<Rat> ratio_at_1;      // h_T / h_R at t = 1
  std::optional<std::vector<int>> shape_T, shape_R;  // 1/prod(1-t^b) shapes

  std::optional<int> a_T, a_R;        // a-invariants (echo data)
};

struct BoundRow {
  std::string id;
  std::string statement;  // rendered with values
  std::string lhs, rhs;
  std::string status;     // holds | violated | not-applicable
  bool hypotheses_satisfied = false;
  bool inputs_certified = false;
  std::vector<std::string> hypotheses;
  std::string note;
};

struct BoundReport {
  std::vector<BoundRow> rows;
  // Raw per-fixture invariants for open-question experimentation
  // (dim H, gldim T, CMreg T, D_i, U^i_j, ...).
  std::vector<std::pair<std::string, std::string>> data;

  bool has_hard_violation() const;  // violated + hypotheses + certified inputs
};

BoundReport check_bounds(const BoundsContext& ctx);

// D_i of the syzygy-bound machinery: max of deg B/J_{<=i} + t^B_2(k), the
// normalized t-jumps of B, and the per-step slopes of A and B. Exposed for
// tests (monotonicity) and for the report.
Rat bound_D(int i, int deg_B_over_J, const std::vector<int>& tB,
            const std::vector<int>& tA);

// U^i_j via the composition maximum; requires t^B_{k+1} entries for k <= j.
Rat bound_U(int i, int j, const Rat& D, const std::vector<int>& tB);

}  // namespace ncinv
