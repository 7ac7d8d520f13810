#pragma once
#include <memory>
#include <vector>

#include "ncinv/resolution.hpp"

namespace ncinv {

// Tor^R_i(A_R, k) computed as the homology of A (x)_R P, where P is a minimal
// resolution of k by free left R-modules and R maps into the ambient algebra
// A. The complex consists of shifted copies of A with left A-action, which is
// what the annihilator ideals need. Graded dims cross-check against the
// shifts of the minimal resolution of A over R (the other Tor route).
class TorComplex {
 public:
  // embed: R coordinates -> ambient coordinates of A.
  using Embed = std::function<Vec(int, const Vec&)>;
  TorComplex(const BasisTable& ambient, const GradedRing& ring, Embed embed,
             int p_max, int N);

  int p_max() const { return p_max_; }
  int N() const { return N_; }
  int ambient_dim(int e) const;
  int computed_indices() const { return static_cast<int>(homology_.size()); }
  const Resolution& k_resolution() const { return kres_; }

  struct Homology {
    std::vector<std::vector<Vec>> reps;  // [d][class], C_i coordinates
    std::vector<Span> boundaries;        // [d]
    std::vector<int> dims;               // [d]
    int top_nonzero = -1;
    int bottom_nonzero = -1;
  };

  const Homology& homology(int i) const;

  // Left action of an ambient element a (degree e) on a representative.
  Vec act_left(int i, int e, const Vec& a, int d, const Vec& rep) const;

  // Minimal generator degrees of the homology at index i as a left A-module
  // (deg of k (x)_A Tor); kMinusInf when the homology vanishes.
  int min_gen_top_degree(int i) const;

  // J_{H,i} slice at degree e: all a in A_e annihilating every homology class
  // visible in the truncation window (d + e <= N).
  std::vector<Vec> annihilator_slice(int i, int e) const;
  // Intersection over i = 0..upto.
  std::vector<Vec> annihilator_slice_upto(int upto, int e) const;

 private:
  const BasisTable* ambient_;
  const GradedRing* ring_;
  Embed embed_;
  int p_max_, N_;
  std::unique_ptr<PresentedRing> aring_;
  Resolution kres_;            // k over the small ring, left modules
  std::vector<FreeModule> c_;  // C_i = A tensor P_i
  std::vector<Homology> homology_;

  Vec push_differential(int i, int d, const Vec& v) const;
  std::vector<Vec> annihilator_range(int lo, int hi, int e) const;
};

struct AnnihilatorProfile {
  int index = 0;           // homological i, or -1 for the intersection
  std::vector<int> dims;   // dim J_e for e = 0..examined_to
  std::vector<int> codims;
  int examined_to = 0;
  int deg_quotient = -1;   // max e with codim != 0 within the window
  bool full_slice_seen = false;
};

// Both profiles are observed-to-truncation quantities by construction.
AnnihilatorProfile annihilator_profile(const TorComplex& tc, int i);
AnnihilatorProfile annihilator_intersection(const TorComplex& tc, int upto);

}  // namespace ncinv
