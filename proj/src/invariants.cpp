#include "ncinv/invariants.hpp"

#include <algorithm>

#include "ncinv/error.hpp"

namespace ncinv {

std::vector<std::vector<Vec>> invariant_bases(const HopfAction& act, int N) {
  std::vector<std::vector<Vec>> inv(N + 1);
  for (int d = 0; d <= N; ++d) inv[d] = act.invariant_basis(d);
  return inv;
}

SubRing invariant_subring(const HopfAction& act, int N) {
  return SubRing(act.table(), invariant_bases(act, N));
}

MinimalGenerators minimal_generators(const std::vector<std::vector<Vec>>& inv,
                                     const BasisTable& t) {
  const NumberField& f = t.field();
  int N = static_cast<int>(inv.size()) - 1;
  MinimalGenerators out;
  out.new_count.assign(N + 1, 0);

  // Per-degree spans of the subalgebra generated by the chosen generators.
  std::vector<Span> sub;
  sub.reserve(N + 1);
  sub.emplace_back(t.dim(0), f);
  sub[0].add(t.unit_vec(0, 0));

  for (int d = 1; d <= N; ++d) {
    Span s(t.dim(d), f);
    // Products of every lower-degree generator with every closed degree.
    for (const auto& g : out.gens) {
      if (g.degree >= d) continue;
      for (const auto& row : sub[d - g.degree].rows())
        s.add(t.mul(g.degree, g.ambient, d - g.degree, row));
    }
    std::vector<Vec> fresh = grow_complement(s, inv[d], f);
    for (auto& v : fresh) {
      out.gens.push_back({d, std::move(v)});
      ++out.new_count[d];
    }
    sub.push_back(std::move(s));
  }
  return out;
}

BetaResult beta(const MinimalGenerators& g, int N,
                const std::vector<std::pair<int, std::string>>&
                    certified_upper_bounds) {
  BetaResult out;
  int top = -1;
  for (const auto& gen : g.gens) top = std::max(top, gen.degree);
  if (top >= 0) out.value = top;
  out.may_grow = true;
  for (const auto& [bound, lemma] : certified_upper_bounds) {
    if (bound > N) continue;  // the truncation does not reach the bound
    check(top <= bound, ErrorKind::Internal,
          "generator above a certified bound (" + lemma + ")");
    out.may_grow = false;
    out.cert.certified = true;
    out.cert.by = lemma;
    break;
  }
  return out;
}

HilbertIdealData hilbert_ideal(Side side,
                               const std::vector<std::vector<Vec>>& inv,
                               const BasisTable& t, int N) {
  const NumberField& f = t.field();
  HilbertIdealData out;
  out.side = side;
  out.dims.assign(N + 1, 0);
  out.codims.assign(N + 1, 0);
  out.bases.resize(N + 1);
  out.codims[0] = t.dim(0);
  for (int d = 1; d <= N; ++d) {
    Span s(t.dim(d), f);
    for (int e = 1; e <= d; ++e) {
      int a = d - e;
      for (const auto& r : inv[e]) {
        for (int i = 0; i < t.dim(a); ++i) {
          Vec w = t.unit_vec(a, i);
          Vec prod = side == Side::Left ? t.mul(a, w, e, r) : t.mul(e, r, a, w);
          s.add(std::move(prod));
        }
      }
    }
    out.dims[d] = s.dim();
    out.codims[d] = t.dim(d) - s.dim();
    out.bases[d] = s.rows();
  }
  return out;
}

TauResult tau(const HilbertIdealData& j, bool generated_in_degree_one, int N) {
  TauResult out;
  int last_nonzero = -1;
  int first_zero = -1;
  for (int d = 0; d <= N; ++d) {
    if (j.codims[d] != 0)
      last_nonzero = d;
    else if (first_zero < 0 && d >= 1)
      first_zero = d;
  }
  if (first_zero >= 0) {
    out.finite_observed = true;
    out.value = 1 + last_nonzero;
    out.observed_floor = out.value;
    if (generated_in_degree_one) {
      // A_{d+1} = A_1 A_d lands in the ideal once a slice fills up, so the
      // profile cannot revive above the first zero.
      check(last_nonzero < first_zero, ErrorKind::Internal,
            "Hilbert ideal profile revived above a full slice");
      out.cert.certified = true;
      out.cert.by = "tau-stabilization (A generated in degree 1)";
    }
  } else {
    out.finite_observed = false;
    out.observed_floor = N + 2;  // tau = 1 + deg(A/J) >= N + 2
  }
  return out;
}

ModuleGenerators module_generators_over_R(Side module_side,
                                          const HilbertIdealData& j,
                                          const BasisTable& t, int N) {
  // Right-module generators pair with the left Hilbert ideal and vice versa.
  Side expect = module_side == Side::Right ? Side::Left : Side::Right;
  check(j.side == expect, ErrorKind::Internal,
        "module_generators_over_R: Hilbert ideal side mismatch");
  const NumberField& f = t.field();
  ModuleGenerators out;
  out.module_side = module_side;
  out.gens.resize(N + 1);
  for (int d = 0; d <= N; ++d) {
    Span s(t.dim(d), f);
    for (const auto& row : j.bases.size() > static_cast<size_t>(d)
                               ? j.bases[d]
                               : std::vector<Vec>{})
      s.add(row);
    std::vector<Vec> units;
    for (int i = 0; i < t.dim(d); ++i) units.push_back(t.unit_vec(d, i));
    out.gens[d] = grow_complement(s, units, f);
    check(static_cast<int>(out.gens[d].size()) == j.codims[d],
          ErrorKind::Internal,
          "module generator count disagrees with Hilbert ideal codimension");
    if (!out.gens[d].empty()) out.t0 = d;
    if (j.codims[d] == 0 && d >= 1) out.exhausted = true;
  }
  return out;
}

}  // namespace ncinv
