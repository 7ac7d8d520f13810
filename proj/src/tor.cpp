#include "ncinv/tor.hpp"

#include "ncinv/error.hpp"

namespace ncinv {

TorComplex::TorComplex(const BasisTable& ambient, const GradedRing& ring,
                       Embed embed, int p_max, int N)
    : ambient_(&ambient),
      ring_(&ring),
      embed_(std::move(embed)),
      p_max_(p_max),
      N_(N),
      aring_(std::make_unique<PresentedRing>(ambient)),
      kres_(minimal_resolution(ring, TrivialModule(ring), Side::Left,
                               p_max + 1, N)) {
  const NumberField& f = ambient_->field();
  int steps = static_cast<int>(kres_.steps.size());
  c_.resize(steps);
  for (int i = 0; i < steps; ++i)
    c_[i] = FreeModule{aring_.get(), kres_.steps[i].shifts};

  homology_.resize(std::min(p_max_, steps - 1) + 1);
  for (int i = 0; i < static_cast<int>(homology_.size()); ++i) {
    Homology& h = homology_[i];
    h.dims.assign(N_ + 1, 0);
    h.reps.resize(N_ + 1);
    for (int d = 0; d <= N_; ++d) {
      int cd = c_[i].dim(d);
      Span bound(cd, f);
      if (i + 1 < steps) {
        const FreeModule& up = c_[i + 1];
        for (size_t j = 0; j < up.shifts.size(); ++j) {
          int e = d - up.shifts[j];
          if (e < 0) continue;
          for (int t = 0; t < ambient_->dim(e); ++t) {
            Vec unit = vec_zero(up.dim(d), f);
            unit[up.offset(d, static_cast<int>(j)) + t] = f.one();
            bound.add(push_differential(i + 1, d, unit));
          }
        }
      }
      std::vector<Vec> cycles;
      if (i == 0) {
        for (int t = 0; t < cd; ++t) {
          Vec v = vec_zero(cd, f);
          v[t] = f.one();
          cycles.push_back(std::move(v));
        }
      } else {
        int tgt = c_[i - 1].dim(d);
        Mat m(tgt, cd, f);
        for (int t = 0; t < cd; ++t) {
          Vec unit = vec_zero(cd, f);
          unit[t] = f.one();
          Vec img = push_differential(i, d, unit);
          for (int row = 0; row < tgt; ++row) m.at(row, t) = img[row];
        }
        cycles = nullspace(m, f);
      }
      Span grow = bound;
      h.reps[d] = grow_complement(grow, cycles, f);
      h.dims[d] = static_cast<int>(h.reps[d].size());
      if (h.dims[d] > 0) {
        h.top_nonzero = d;
        if (h.bottom_nonzero < 0) h.bottom_nonzero = d;
      }
      h.boundaries.push_back(std::move(bound));
    }
  }
}

int TorComplex::ambient_dim(int e) const { return ambient_->dim(e); }

const TorComplex::Homology& TorComplex::homology(int i) const {
  check(i >= 0 && i < static_cast<int>(homology_.size()), ErrorKind::Math,
        "homological index beyond computed range");
  return homology_[i];
}

Vec TorComplex::push_differential(int i, int d, const Vec& v) const {
  const NumberField& f = ambient_->field();
  const FreeModule& dom = c_[i];
  const FreeModule& tgt = c_[i - 1];
  Vec out = vec_zero(tgt.dim(d), f);
  const ResolutionStep& step = kres_.steps[i];
  const FreeModule& fprev = kres_.frees[i - 1];
  for (size_t j = 0; j < dom.shifts.size(); ++j) {
    int vd = d - dom.shifts[j];
    if (vd < 0) continue;
    int off = dom.offset(d, static_cast<int>(j));
    Vec a(v.begin() + off, v.begin() + off + ambient_->dim(vd));
    if (vec_is_zero(a, f)) continue;
    const Vec& img = step.images[j];
    for (size_t k = 0; k < fprev.shifts.size(); ++k) {
      int ed = dom.shifts[j] - fprev.shifts[k];
      if (ed < 0) continue;
      int in_off = fprev.offset(dom.shifts[j], static_cast<int>(k));
      Vec comp(img.begin() + in_off, img.begin() + in_off + ring_->dim(ed));
      if (vec_is_zero(comp, f)) continue;
      Vec amb = embed_(ed, comp);
      Vec prod = ambient_->mul(vd, a, ed, amb);
      int out_off = tgt.offset(d, static_cast<int>(k));
      for (size_t t = 0; t < prod.size(); ++t)
        f.add_in_place(out[out_off + static_cast<int>(t)], prod[t]);
    }
  }
  return out;
}

Vec TorComplex::act_left(int i, int e, const Vec& a, int d,
                         const Vec& rep) const {
  return c_[i].act(d, rep, e, a, Side::Left);
}

int TorComplex::min_gen_top_degree(int i) const {
  const NumberField& f = ambient_->field();
  const Homology& h = homology(i);
  if (h.top_nonzero < 0) return kMinusInf;
  // New generators at degree d: classes outside A_{>=1} * H_{<d}.
  int top = kMinusInf;
  std::vector<std::pair<int, Vec>> chosen;  // (degree, class rep)
  for (int d = 0; d <= h.top_nonzero; ++d) {
    Span span(c_[i].dim(d), f);
    for (const auto& row : h.boundaries[d].rows()) span.add(row);
    for (const auto& [dg, rep] : chosen) {
      int e = d - dg;
      if (e < 1 || e > N_ - dg) continue;
      for (int t = 0; t < ambient_->dim(e); ++t) {
        Vec unit = vec_zero(ambient_->dim(e), f);
        unit[t] = f.one();
        span.add(act_left(i, e, unit, dg, rep));
      }
    }
    auto fresh = grow_complement(span, h.reps[d], f);
    for (auto& v : fresh) {
      chosen.emplace_back(d, std::move(v));
      top = d;
    }
  }
  return top;
}

std::vector<Vec> TorComplex::annihilator_range(int lo, int hi, int e) const {
  const NumberField& f = ambient_->field();
  int ae = ambient_->dim(e);
  std::vector<std::vector<Scalar>> cols(ae);
  for (int i = lo; i <= hi && i < static_cast<int>(homology_.size()); ++i) {
    const Homology& h = homology_[i];
    for (int d = 0; d + e <= N_; ++d) {
      for (const auto& z : h.reps[d]) {
        for (int w = 0; w < ae; ++w) {
          Vec aw = vec_zero(ae, f);
          aw[w] = f.one();
          Vec moved = act_left(i, e, aw, d, z);
          Vec resid = h.boundaries[d + e].reduce(std::move(moved));
          for (auto& s : resid) cols[w].push_back(std::move(s));
        }
      }
    }
  }
  size_t nrows = ae ? cols[0].size() : 0;
  Mat m(static_cast<int>(nrows), ae, f);
  for (int w = 0; w < ae; ++w)
    for (size_t r = 0; r < nrows; ++r)
      m.at(static_cast<int>(r), w) = cols[w][r];
  return nullspace(m, f);
}

std::vector<Vec> TorComplex::annihilator_slice(int i, int e) const {
  return annihilator_range(i, i, e);
}

std::vector<Vec> TorComplex::annihilator_slice_upto(int upto, int e) const {
  return annihilator_range(0, upto, e);
}

namespace {
AnnihilatorProfile profile_impl(const TorComplex& tc, int index, int lo,
                                int hi) {
  AnnihilatorProfile out;
  out.index = index;
  int E = tc.N();
  for (int i = lo; i <= hi && i < tc.computed_indices(); ++i) {
    const auto& h = tc.homology(i);
    if (h.top_nonzero >= 0) E = std::min(E, tc.N() - h.top_nonzero);
  }
  out.examined_to = E;
  for (int e = 0; e <= E; ++e) {
    std::vector<Vec> basis = index < 0 ? tc.annihilator_slice_upto(hi, e)
                                       : tc.annihilator_slice(index, e);
    int dim = static_cast<int>(basis.size());
    out.dims.push_back(dim);
    int codim = tc.ambient_dim(e) - dim;
    out.codims.push_back(codim);
    if (codim != 0) out.deg_quotient = e;
    if (codim == 0 && e >= 1) out.full_slice_seen = true;
  }
  return out;
}
}  // namespace

AnnihilatorProfile annihilator_profile(const TorComplex& tc, int i) {
  return profile_impl(tc, i, i, i);
}

AnnihilatorProfile annihilator_intersection(const TorComplex& tc, int upto) {
  return profile_impl(tc, -1, 0, upto);
}

}  // namespace ncinv
