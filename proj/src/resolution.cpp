#include "ncinv/resolution.hpp"

#include <algorithm>
#include <functional>

#include "ncinv/error.hpp"

namespace ncinv {

Vec TrivialModule::act(int d, const Vec& m, int e, const Vec& r) const {
  const NumberField& f = ring_->field();
  if (d != 0 || e != 0) return Vec(dim(d + e), f.zero());
  return Vec{f.mul(m[0], r[0])};
}

Vec SubringOverMapModule::act(int d, const Vec& m, int e, const Vec& r) const {
  Vec a = embed_(e, r);
  const BasisTable& amb = sub_->ambient();
  Vec ma = sub_->to_ambient(d, m);
  Vec prod = side_ == Side::Right ? amb.mul(d, ma, e, a) : amb.mul(e, a, d, ma);
  return sub_->from_ambient(d + e, prod);
}

AlgebraMap::AlgebraMap(const BasisTable& source, const BasisTable& target,
                       std::vector<Vec> gen_images)
    : src_(&source), tgt_(&target) {
  const auto& gens = source.pres().gens;
  check(gen_images.size() == gens.size(), ErrorKind::Schema,
        "algebra map needs one image per source generator");
  for (size_t g = 0; g < gens.size(); ++g)
    check(static_cast<int>(gen_images[g].size()) ==
              target.dim(gens[g].degree),
          ErrorKind::Schema, "generator image has wrong degree/dimension");

  int N = std::min(source.max_degree(), target.max_degree());
  img_.resize(N + 1);
  img_[0] = {Vec{target.field().one()}};
  for (int d = 1; d <= N; ++d) {
    const auto& words = source.basis_words(d);
    img_[d].resize(words.size());
    for (size_t i = 0; i < words.size(); ++i) {
      const Word& w = words[i];
      int g = w[0];
      int gd = gens[g].degree;
      Word tail(w.begin() + 1, w.end());
      int ti = source.basis_index(d - gd, tail);
      check(ti >= 0, ErrorKind::Internal, "normal word tail not normal");
      img_[d][i] = target.mul(gd, gen_images[g], d - gd, img_[d - gd][ti]);
    }
  }

  // Relations must die in the target.
  const NumberField& f = target.field();
  for (size_t r = 0; r < source.pres().relations.size(); ++r) {
    const auto& rel = source.pres().relations[r];
    int deg = source.pres().poly_degree(rel);
    if (deg > N) continue;
    Vec acc = vec_zero(target.dim(deg), f);
    for (const auto& t : rel.terms) {
      Vec cur{f.one()};
      int cd = 0;
      for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
        cur = target.mul(gens[*it].degree, gen_images[*it], cd, cur);
        cd += gens[*it].degree;
      }
      vec_add_scaled(acc, t.coeff, cur, f);
    }
    check(vec_is_zero(acc, f), ErrorKind::Schema,
          "algebra map does not kill source relation " + std::to_string(r));
  }
}

Vec AlgebraMap::image(int d, const Vec& src_coords) const {
  const NumberField& f = tgt_->field();
  Vec out = vec_zero(tgt_->dim(d), f);
  for (size_t i = 0; i < src_coords.size(); ++i)
    vec_add_scaled(out, src_coords[i], img_[d][i], f);
  return out;
}

CokernelModule::CokernelModule(const GradedRing& ring, std::vector<int> shifts,
                               std::vector<std::pair<int, Vec>> relations,
                               Side side, int N)
    : ring_(&ring), side_(side), N_(N), shifts_(std::move(shifts)) {
  const NumberField& f = ring.field();
  FreeModule f0{&ring, shifts_};
  for (int d = 0; d <= N_; ++d) {
    Span s(f0.dim(d), f);
    for (const auto& [rd, rv] : relations) {
      int e = d - rd;
      if (e < 0) continue;
      for (int t = 0; t < ring.dim(e); ++t)
        s.add(f0.act(rd, rv, e, ring.unit_vec(e, t), side_));
    }
    // Complement units: exactly the non-pivot free coordinates.
    std::vector<int> comp;
    for (int i = 0; i < f0.dim(d); ++i) {
      bool pivot = false;
      for (int p : s.pivots())
        if (p == i) pivot = true;
      if (!pivot) comp.push_back(i);
    }
    rel_span_.push_back(std::move(s));
    comp_.push_back(std::move(comp));
  }
}

int CokernelModule::f0_dim(int d) const {
  FreeModule f0{ring_, shifts_};
  return f0.dim(d);
}

Vec CokernelModule::f0_act(int d, const Vec& v, int e, const Vec& r) const {
  FreeModule f0{ring_, shifts_};
  return f0.act(d, v, e, r, side_);
}

int CokernelModule::dim(int d) const {
  check(d >= 0 && d <= N_, ErrorKind::Math,
        "degree exceeds cokernel truncation");
  return static_cast<int>(comp_[d].size());
}

Vec CokernelModule::project(int d, const Vec& free_elem) const {
  const NumberField& f = ring_->field();
  Vec resid = rel_span_[d].reduce(free_elem);
  Vec out(dim(d), f.zero());
  for (size_t i = 0; i < comp_[d].size(); ++i) out[i] = resid[comp_[d][i]];
  return out;
}

Vec CokernelModule::lift(int d, const Vec& m) const {
  const NumberField& f = ring_->field();
  Vec out = Vec(f0_dim(d), f.zero());
  for (size_t i = 0; i < comp_[d].size(); ++i) out[comp_[d][i]] = m[i];
  return out;
}

Vec CokernelModule::act(int d, const Vec& m, int e, const Vec& r) const {
  return project(d + e, f0_act(d, lift(d, m), e, r));
}

int FreeModule::dim(int d) const {
  int n = 0;
  for (int s : shifts) {
    int e = d - s;
    if (e >= 0) n += ring->dim(e);
  }
  return n;
}

int FreeModule::offset(int d, int summand) const {
  int n = 0;
  for (int k = 0; k < summand; ++k) {
    int e = d - shifts[k];
    if (e >= 0) n += ring->dim(e);
  }
  return n;
}

Vec FreeModule::zero(int d) const {
  return Vec(dim(d), ring->field().zero());
}

Vec FreeModule::act(int d, const Vec& v, int e, const Vec& r,
                    Side side) const {
  const NumberField& f = ring->field();
  Vec out = zero(d + e);
  for (size_t k = 0; k < shifts.size(); ++k) {
    int cd = d - shifts[k];
    if (cd < 0) continue;
    int in_off = offset(d, static_cast<int>(k));
    int out_off = offset(d + e, static_cast<int>(k));
    Vec comp(v.begin() + in_off, v.begin() + in_off + ring->dim(cd));
    if (vec_is_zero(comp, f)) continue;
    Vec res = side == Side::Right ? ring->mul(cd, comp, e, r)
                                  : ring->mul(e, r, cd, comp);
    for (size_t t = 0; t < res.size(); ++t)
      f.add_in_place(out[out_off + static_cast<int>(t)], res[t]);
  }
  return out;
}

bool FreeModule::unit_entry_at_own_degree(int gen_degree, const Vec& v) const {
  const NumberField& f = ring->field();
  for (size_t k = 0; k < shifts.size(); ++k) {
    if (shifts[k] != gen_degree) continue;
    int off = offset(gen_degree, static_cast<int>(k));
    if (!f.is_zero(v[off])) return true;
  }
  return false;
}

namespace {

// Deterministic minimal generators of a graded gadget presented by
// per-degree candidate bases, quotienting by ring-multiples of earlier picks.
struct GenPicker {
  const GradedRing& ring;
  Side side;
  std::function<Vec(int gen_degree, const Vec& gen, int e, const Vec& unit)>
      multiply;
  std::function<int(int)> space_dim;

  std::vector<std::pair<int, Vec>> gens;

  // candidates(d) must be vectors inside the target subspace at degree d.
  void run(int N, const std::function<std::vector<Vec>(int)>& candidates) {
    const NumberField& f = ring.field();
    for (int d = 0; d <= N; ++d) {
      Span span(space_dim(d), f);
      for (const auto& [dg, g] : gens) {
        int e = d - dg;
        if (e < 1) continue;
        for (int t = 0; t < ring.dim(e); ++t)
          span.add(multiply(dg, g, e, ring.unit_vec(e, t)));
      }
      for (auto& v : grow_complement(span, candidates(d), f))
        gens.emplace_back(d, std::move(v));
    }
  }
};

}  // namespace

Resolution minimal_resolution(const GradedRing& ring, const GradedModule& M,
                              Side side, int p_max, int N) {
  const NumberField& f = ring.field();
  check(N <= ring.max_degree() && N <= M.max_degree(), ErrorKind::Math,
        "resolution degree bound exceeds ring/module truncation");
  Resolution res;
  res.side = side;
  res.N = N;
  res.ring = &ring;

  // Step 0: minimal generators of M.
  GenPicker pick0{ring, side,
                  [&](int dg, const Vec& g, int e, const Vec& u) {
                    return M.act(dg, g, e, u);
                  },
                  [&](int d) { return M.dim(d); },
                  {}};
  pick0.run(N, [&](int d) {
    std::vector<Vec> units;
    for (int i = 0; i < M.dim(d); ++i) {
      Vec v(M.dim(d), f.zero());
      v[i] = f.one();
      units.push_back(std::move(v));
    }
    return units;
  });
  ResolutionStep step0;
  for (auto& [d, v] : pick0.gens) {
    step0.shifts.push_back(d);
    step0.images.push_back(v);
  }
  res.steps.push_back(std::move(step0));
  res.frees.push_back(FreeModule{&ring, res.steps[0].shifts});

  for (int i = 1; i <= p_max; ++i) {
    const FreeModule& dom = res.frees[i - 1];
    const ResolutionStep& prev = res.steps[i - 1];
    // Differential applied to the domain unit (summand j, ring basis t).
    auto apply = [&](int j, int e, int t_idx) -> Vec {
      const Vec unit = ring.unit_vec(e, t_idx);
      if (i == 1) return M.act(prev.shifts[j], prev.images[j], e, unit);
      return res.frees[i - 2].act(prev.shifts[j], prev.images[j], e, unit,
                                  side);
    };

    std::vector<std::vector<Vec>> kernels(N + 1);
    bool any_kernel = false;
    for (int d = 0; d <= N; ++d) {
      int dom_dim = dom.dim(d);
      if (dom_dim == 0) continue;
      int tgt_dim = i == 1 ? M.dim(d) : res.frees[i - 2].dim(d);
      Mat m(tgt_dim, dom_dim, f);
      int col = 0;
      for (size_t j = 0; j < dom.shifts.size(); ++j) {
        int e = d - dom.shifts[j];
        if (e < 0) continue;
        for (int t = 0; t < ring.dim(e); ++t, ++col) {
          Vec image = apply(static_cast<int>(j), e, t);
          for (int row = 0; row < tgt_dim; ++row) m.at(row, col) = image[row];
        }
      }
      kernels[d] = nullspace(m, f);
      if (!kernels[d].empty()) any_kernel = true;
    }
    if (!any_kernel) {
      res.exhausted = true;
      break;
    }

    GenPicker pick{ring, side,
                   [&](int dg, const Vec& g, int e, const Vec& u) {
                     return dom.act(dg, g, e, u, side);
                   },
                   [&](int d) { return dom.dim(d); },
                   {}};
    pick.run(N, [&](int d) { return kernels[d]; });

    ResolutionStep step;
    for (auto& [d, v] : pick.gens) {
      if (dom.unit_entry_at_own_degree(d, v)) res.minimal = false;
      step.shifts.push_back(d);
      step.images.push_back(v);
    }
    res.steps.push_back(std::move(step));
    res.frees.push_back(FreeModule{&ring, res.steps.back().shifts});
  }
  return res;
}

BettiTable betti_table(const Resolution& r) {
  BettiTable b;
  b.exhausted = r.exhausted;
  for (const auto& step : r.steps) {
    std::map<int, int> row;
    int t = kMinusInf;
    for (int s : step.shifts) {
      ++row[s];
      t = std::max(t, s);
    }
    b.tor.push_back(std::move(row));
    b.t.push_back(t);
  }
  return b;
}

int torreg(const BettiTable& b) {
  int reg = kMinusInf;
  for (size_t i = 0; i < b.t.size(); ++i)
    if (b.t[i] != kMinusInf)
      reg = std::max(reg, b.t[i] - static_cast<int>(i));
  return reg;
}

int free_dim_at(const Resolution& r, size_t step, int degree) {
  if (step >= r.frees.size()) return 0;
  return r.frees[step].dim(degree);
}

}  // namespace ncinv
