#pragma once
#include <memory>
#include <optional>

#include "ncinv/bounds.hpp"
#include "ncinv/io.hpp"
#include "ncinv/tor.hpp"

namespace ncinv {

struct PipelineOptions {
  bool homology = true;
  bool annihilators = true;
  bool series = true;
  bool bounds = true;
  bool validate_only = false;
};

// One fixture's full computation state; sections are filled according to the
// options and reused by every CLI command and by the acceptance suite.
struct FixtureComputation {
  InputDocument doc;
  int N = 8;
  int p_max = 4;

  std::unique_ptr<BasisTable> T;
  std::unique_ptr<PresentedRing> T_ring;
  HopfData hopf;
  std::optional<int> group_order;
  HopfReport hopf_report;
  std::unique_ptr<HopfAction> action;
  ActionReport action_report;

  std::vector<std::vector<Vec>> inv;
  std::unique_ptr<SubRing> R;
  MinimalGenerators mingens;
  BetaResult beta_res;
  HilbertIdealData JL, JR;
  TauResult tau_left, tau_right;
  ModuleGenerators mg_right, mg_left;

  std::optional<Resolution> res_k_T, res_T_R;
  std::optional<BettiTable> betti_k_T, betti_k_R, betti_T_R;
  std::unique_ptr<TorComplex> torc_R;
  std::vector<AnnihilatorProfile> annR;
  std::optional<AnnihilatorProfile> annR_inf;

  std::unique_ptr<BasisTable> S_table;
  std::unique_ptr<PresentedRing> S_ring;
  std::unique_ptr<AlgebraMap> S_map;
  bool S_surjective = false;
  bool S_same_gen_counts = false;
  std::optional<Resolution> res_k_S, res_R_S, res_T_S;
  std::optional<BettiTable> betti_k_S, betti_R_S, betti_T_S;
  std::unique_ptr<TorComplex> torc_S;
  std::vector<AnnihilatorProfile> annS;
  std::optional<AnnihilatorProfile> annS_inf;

  std::optional<HilbertSeries> h_T, h_R, h_S;
  std::optional<int> cmreg_T, cmreg_S;
  std::optional<Rat> ratio1;
  std::string ratio1_error;

  std::optional<int> central_d, central_m;
  bool central_ok = false;

  BoundsContext bctx;
  std::optional<BoundReport> bounds;
};

FixtureComputation run_pipeline(const InputDocument& doc,
                                const PipelineOptions& opt);

// Rendered element of A_d over the basis words.
std::string element_str(const BasisTable& t, int d, const Vec& v);

// Full structured report; `sections` filters which parts appear ("all" for
// everything).
Json fixture_report(const FixtureComputation& fc,
                    const std::vector<std::string>& sections);

}  // namespace ncinv
