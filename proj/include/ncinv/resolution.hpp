#pragma once
#include <climits>
#include <functional>
#include <map>
#include <vector>

#include "ncinv/graded_ring.hpp"
#include "ncinv/invariants.hpp"

namespace ncinv {

constexpr int kMinusInf = INT_MIN;

// Graded one-sided module over a GradedRing, coordinatized per degree.
// act() multiplies a module element by a ring element on the module's side.
class GradedModule {
 public:
  virtual ~GradedModule() = default;
  virtual int max_degree() const = 0;
  virtual int dim(int d) const = 0;
  virtual Vec act(int d, const Vec& m, int e, const Vec& r) const = 0;
};

class TrivialModule final : public GradedModule {
 public:
  explicit TrivialModule(const GradedRing& ring) : ring_(&ring) {}
  int max_degree() const override { return ring_->max_degree(); }
  int dim(int d) const override { return d == 0 ? 1 : 0; }
  Vec act(int d, const Vec& m, int e, const Vec& r) const override;

 private:
  const GradedRing* ring_;
};

class RingModule final : public GradedModule {
 public:
  RingModule(const GradedRing& ring, Side side) : ring_(&ring), side_(side) {}
  int max_degree() const override { return ring_->max_degree(); }
  int dim(int d) const override { return ring_->dim(d); }
  Vec act(int d, const Vec& m, int e, const Vec& r) const override {
    return side_ == Side::Right ? ring_->mul(d, m, e, r)
                                : ring_->mul(e, r, d, m);
  }

 private:
  const GradedRing* ring_;
  Side side_;
};

// Graded algebra map from a presented source into a target table, given by
// generator images. Degreewise image matrices are precomputed; construction
// validates that every source relation maps to zero.
class AlgebraMap {
 public:
  AlgebraMap(const BasisTable& source, const BasisTable& target,
             std::vector<Vec> gen_images);
  const BasisTable& source() const { return *src_; }
  const BasisTable& target() const { return *tgt_; }
  Vec image(int d, const Vec& src_coords) const;
  const Vec& image_of_basis(int d, int i) const { return img_[d][i]; }

 private:
  const BasisTable* src_;
  const BasisTable* tgt_;
  std::vector<std::vector<Vec>> img_;  // [d][source basis index]
};

// The target algebra T as a module over the mapped ring (e.g. T over S, or
// T over R = A^H via the subring embedding).
class MappedAlgebraModule final : public GradedModule {
 public:
  // embed(e, ring coords) -> ambient coords of the target table.
  using Embed = std::function<Vec(int, const Vec&)>;
  MappedAlgebraModule(const BasisTable& ambient, Embed embed, Side side)
      : ambient_(&ambient), embed_(std::move(embed)), side_(side) {}
  int max_degree() const override { return ambient_->max_degree(); }
  int dim(int d) const override { return ambient_->dim(d); }
  Vec act(int d, const Vec& m, int e, const Vec& r) const override {
    Vec a = embed_(e, r);
    return side_ == Side::Right ? ambient_->mul(d, m, e, a)
                                : ambient_->mul(e, a, d, m);
  }

 private:
  const BasisTable* ambient_;
  Embed embed_;
  Side side_;
};

// The invariant subring R as a right module over a ring mapping into it.
class SubringOverMapModule final : public GradedModule {
 public:
  using Embed = std::function<Vec(int, const Vec&)>;  // into ambient coords
  SubringOverMapModule(const SubRing& sub, Embed embed, Side side)
      : sub_(&sub), embed_(std::move(embed)), side_(side) {}
  int max_degree() const override { return sub_->max_degree(); }
  int dim(int d) const override { return sub_->dim(d); }
  Vec act(int d, const Vec& m, int e, const Vec& r) const override;

 private:
  const SubRing* sub_;
  Embed embed_;
  Side side_;
};

// Cokernel of a map into a shifted free module: F0 modulo the one-sided
// submodule generated by explicit relation elements. Coordinates are the
// deterministic complement (earliest free units) of the relation span per
// degree; the action lifts, acts in F0 and projects back.
class CokernelModule final : public GradedModule {
 public:
  // relations: (degree, element of F0 at that degree).
  CokernelModule(const GradedRing& ring, std::vector<int> shifts,
                 std::vector<std::pair<int, Vec>> relations, Side side,
                 int N);
  int max_degree() const override { return N_; }
  int dim(int d) const override;
  Vec act(int d, const Vec& m, int e, const Vec& r) const override;
  Vec project(int d, const Vec& free_elem) const;
  Vec lift(int d, const Vec& module_coords) const;

 private:
  const GradedRing* ring_;
  Side side_;
  int N_;
  std::vector<int> shifts_;
  std::vector<Span> rel_span_;            // per degree, in F0 coordinates
  std::vector<std::vector<int>> comp_;    // complement unit indices
  int f0_dim(int d) const;
  Vec f0_act(int d, const Vec& v, int e, const Vec& r) const;
};

// Free module over a ring with generator shifts; homogeneous elements are
// concatenated coordinate vectors over the summands.
struct FreeModule {
  const GradedRing* ring = nullptr;
  std::vector<int> shifts;

  int dim(int d) const;
  int offset(int d, int summand) const;
  Vec zero(int d) const;
  // v (degree d) times ring element r (degree e) on the given side,
  // componentwise.
  Vec act(int d, const Vec& v, int e, const Vec& r, Side side) const;
  bool unit_entry_at_own_degree(int gen_degree, const Vec& v) const;
};

struct ResolutionStep {
  std::vector<int> shifts;
  // images[j]: d(e_j) as coordinates in the previous free module at degree
  // shifts[j] (for step 0: generator vectors in the module's coordinates).
  std::vector<Vec> images;
};

struct Resolution {
  Side side = Side::Right;
  int N = 0;
  std::vector<ResolutionStep> steps;
  std::vector<FreeModule> frees;
  bool exhausted = false;   // a kernel was identically zero within N
  bool minimal = true;      // no differential entry of degree 0
  const GradedRing* ring = nullptr;
};

// Iterated degreewise kernel computation with deterministic minimal
// generator choice; stops at p_max steps or when a kernel vanishes below N.
Resolution minimal_resolution(const GradedRing& ring, const GradedModule& M,
                              Side side, int p_max, int N);

struct BettiTable {
  std::vector<std::map<int, int>> tor;  // per step: degree -> dim
  std::vector<int> t;                   // kMinusInf when Tor_i = 0
  bool exhausted = false;
};

BettiTable betti_table(const Resolution& r);
int torreg(const BettiTable& b);  // kMinusInf when every step is empty

// Graded dims of the i-th kernel/differential data needed by tests:
// Hilbert-series slice of F_i at a degree.
int free_dim_at(const Resolution& r, size_t step, int degree);

}  // namespace ncinv
