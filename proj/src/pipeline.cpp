#include "ncinv/pipeline.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "ncinv/error.hpp"

namespace ncinv {

namespace {

// Observed t_i values. A step that was never reached stays absent: the
// kernel may continue above the truncation, so its vanishing is not a fact.
// Only a user-asserted global dimension certifies Tor_i = 0 beyond it.
std::vector<int> t_values(const BettiTable& b, std::optional<int> gldim,
                          int upto) {
  std::vector<int> out;
  for (size_t i = 0; i < b.t.size(); ++i) out.push_back(b.t[i]);
  if (gldim) {
    check(static_cast<int>(out.size()) - 1 <= *gldim, ErrorKind::Schema,
          "resolution is longer than the asserted global dimension");
    while (static_cast<int>(out.size()) <= upto) {
      if (static_cast<int>(out.size()) > *gldim)
        out.push_back(kMinusInf);
      else
        break;
    }
  }
  return out;
}

// Degreewise spans of the subalgebra generated by given homogeneous elements
// (with 1). spans[d] lives in ambient coordinates.
std::vector<Span> subalgebra_spans(const BasisTable& t,
                                   const std::vector<std::pair<int, Vec>>& gens,
                                   int N) {
  const NumberField& f = t.field();
  std::vector<Span> spans;
  spans.emplace_back(t.dim(0), f);
  spans[0].add(t.unit_vec(0, 0));
  for (int d = 1; d <= N; ++d) {
    Span s(t.dim(d), f);
    for (const auto& [e, v] : gens) {
      if (e > d) continue;
      for (const auto& row : spans[d - e].rows())
        s.add(t.mul(e, v, d - e, row));
    }
    spans.push_back(std::move(s));
  }
  return spans;
}

}  // namespace

std::string element_str(const BasisTable& t, int d, const Vec& v) {
  const NumberField& f = t.field();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (f.is_zero(v[i])) continue;
    std::string c = f.to_string(v[i]);
    if (!first) os << " + ";
    if (c == "1")
      os << t.basis_word_str(d, static_cast<int>(i));
    else if (c == "-1")
      os << "-" << t.basis_word_str(d, static_cast<int>(i));
    else
      os << "(" << c << ")*" << t.basis_word_str(d, static_cast<int>(i));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

FixtureComputation run_pipeline(const InputDocument& doc,
                                const PipelineOptions& opt) {
  FixtureComputation fc;
  fc.doc = doc;
  fc.N = doc.run.max_degree;
  fc.p_max = doc.run.max_homological;
  const NumberField& f = doc.algebra.field;

  fc.T = std::make_unique<BasisTable>(
      BasisTable::build(doc.algebra, fc.N, doc.run.word_cap));
  fc.T_ring = std::make_unique<PresentedRing>(*fc.T);

  // Action: group closure or raw Hopf data; validate both layers.
  std::vector<Mat> action_mats;
  if (doc.group) {
    std::vector<int> degs;
    for (const auto& g : doc.algebra.gens) degs.push_back(g.degree);
    std::vector<Mat> elements;
    fc.hopf = group_to_hopf(doc.group->generators, degs, f, doc.run.group_cap,
                            elements);
    action_mats = std::move(elements);
    fc.group_order = fc.hopf.dim;
  } else {
    check(doc.hopf.has_value(), ErrorKind::Schema, "no action specified");
    fc.hopf = doc.hopf->hopf;
    action_mats = doc.hopf->action;
  }
  fc.hopf_report = validate_hopf(fc.hopf);
  if (!fc.hopf_report.ok && !opt.validate_only) {
    std::string what = "Hopf axioms failed:";
    for (const auto& fl : fc.hopf_report.failures)
      what += " [" + fl.axiom + " at " + fl.witness + "]";
    throw Error(ErrorKind::Schema, what);
  }
  fc.action = std::make_unique<HopfAction>(fc.hopf, action_mats, *fc.T);
  fc.action_report = fc.action->validate();
  if (!fc.action_report.ok && !opt.validate_only) {
    std::string what = "action validation failed:";
    for (const auto& s : fc.action_report.failures) what += " [" + s + "]";
    throw Error(ErrorKind::Schema, what);
  }
  if (opt.validate_only) return fc;

  // Invariants and the generator/ideal pipeline.
  fc.inv = invariant_bases(*fc.action, fc.N);
  fc.R = std::make_unique<SubRing>(*fc.T, fc.inv);
  fc.mingens = minimal_generators(fc.inv, *fc.T);
  fc.JL = hilbert_ideal(Side::Left, fc.inv, *fc.T, fc.N);
  fc.JR = hilbert_ideal(Side::Right, fc.inv, *fc.T, fc.N);
  bool gen1 = doc.algebra.generated_in_degree_one();
  fc.tau_left = tau(fc.JL, gen1, fc.N);
  fc.tau_right = tau(fc.JR, gen1, fc.N);
  fc.mg_right = module_generators_over_R(Side::Right, fc.JL, *fc.T, fc.N);
  fc.mg_left = module_generators_over_R(Side::Left, fc.JR, *fc.T, fc.N);

  // Structural verification of the (-1)-skew shape when asserted.
  std::optional<int> skew_n;
  if (doc.algebra.asserts.minus_one_skew) {
    int n = *doc.algebra.asserts.minus_one_skew;
    bool ok = static_cast<int>(doc.algebra.gens.size()) == n && gen1 &&
              fc.N >= 2 && fc.T->dim(2) == n * (n + 1) / 2;
    if (ok) {
      for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j) {
          NcPoly p;
          p.terms.push_back({f.one(), {i, j}});
          p.terms.push_back({f.one(), {j, i}});
          ok = vec_is_zero(fc.T->normal_form(p, 2), f);
        }
    }
    check(ok, ErrorKind::Schema,
          "minus_one_skew asserted but the presentation is not k_{-1}[x_1..x_n]");
    skew_n = n;
  }

  // Central subalgebra data for the Fogarty-style bound.
  if (!doc.central_generators.empty()) {
    std::vector<std::pair<int, Vec>> zgens;
    int dmax = 0;
    bool ok = true;
    for (const auto& z : doc.central_generators) {
      int zd = doc.algebra.poly_degree(z);
      Vec zv = fc.T->normal_form(z, zd);
      check(!vec_is_zero(zv, f), ErrorKind::Schema,
            "central generator is zero in the algebra");
      // Centrality: z g = g z for every algebra generator.
      for (size_t g = 0; g < doc.algebra.gens.size() && ok; ++g) {
        int gd = doc.algebra.gens[g].degree;
        if (zd + gd > fc.N) continue;
        Vec gv = fc.T->normal_form_word({static_cast<int>(g)});
        Vec zg = fc.T->mul(zd, zv, gd, gv);
        Vec gz = fc.T->mul(gd, gv, zd, zv);
        for (size_t i = 0; i < zg.size(); ++i) zg[i] = f.sub(zg[i], gz[i]);
        ok = vec_is_zero(zg, f);
      }
      zgens.emplace_back(zd, zv);
      dmax = std::max(dmax, zd);
    }
    check(ok, ErrorKind::Schema, "central generator fails to be central");
    auto zspans = subalgebra_spans(*fc.T, zgens, fc.N);
    // H-stability: every Hopf basis element maps each z into the subalgebra.
    for (int h = 0; h < fc.hopf.dim && ok; ++h)
      for (const auto& [zd, zv] : zgens) {
        const Mat& m = fc.action->action_matrix(h, zd);
        Vec img = vec_zero(fc.T->dim(zd), f);
        for (int r = 0; r < m.rows; ++r)
          for (int c = 0; c < m.cols; ++c) {
            Scalar t = f.mul(m.at(r, c), zv[c]);
            f.add_in_place(img[r], t);
          }
        ok = ok && zspans[zd].contains(img);
      }
    check(ok, ErrorKind::Schema,
          "central subalgebra is not stable under the action");
    // Module generators of A over Z: complement of Z_{>=1} * A.
    int m_top = 0;
    for (int d = 0; d <= fc.N; ++d) {
      Span s(fc.T->dim(d), f);
      for (int e = 1; e <= d; ++e)
        for (const auto& zrow : zspans[e].rows())
          for (int i = 0; i < fc.T->dim(d - e); ++i)
            s.add(fc.T->mul(e, zrow, d - e, fc.T->unit_vec(d - e, i)));
      if (s.dim() < fc.T->dim(d)) m_top = d;
    }
    fc.central_d = dmax;
    fc.central_m = m_top;
    fc.central_ok = true;
  }

  // Certified upper bounds for beta.
  std::vector<std::pair<int, std::string>> cert_bounds;
  if (fc.tau_left.cert.certified && fc.tau_left.finite_observed)
    cert_bounds.push_back({fc.tau_left.value, "Cor. 3.3 with certified tau"});
  const auto& as = doc.algebra.asserts;
  if (as.as_regular && as.is_domain && as.noetherian &&
      as.smash_product_prime && as.invariants_finite_gldim && gen1)
    cert_bounds.push_back({fc.hopf.dim, "Thm. 3.5(1) (asserted hypotheses)"});
  if (skew_n && fc.group_order)
    cert_bounds.push_back(
        {2 * *fc.group_order + *skew_n, "Cor. 3.12 (verified shape)"});
  std::sort(cert_bounds.begin(), cert_bounds.end());
  fc.beta_res = beta(fc.mingens, fc.N, cert_bounds);

  // Homology.
  if (opt.homology) {
    fc.res_k_T = minimal_resolution(*fc.T_ring, TrivialModule(*fc.T_ring),
                                    Side::Right, fc.p_max, fc.N);
    fc.betti_k_T = betti_table(*fc.res_k_T);
    auto embedR = [Rp = fc.R.get()](int e, const Vec& v) {
      return Rp->to_ambient(e, v);
    };
    fc.torc_R = std::make_unique<TorComplex>(*fc.T, *fc.R, embedR, fc.p_max,
                                             fc.N);
    fc.betti_k_R = betti_table(fc.torc_R->k_resolution());
    MappedAlgebraModule T_over_R(*fc.T, embedR, Side::Right);
    fc.res_T_R =
        minimal_resolution(*fc.R, T_over_R, Side::Right, fc.p_max, fc.N);
    fc.betti_T_R = betti_table(*fc.res_T_R);
    if (opt.annihilators) {
      for (int i = 0; i <= fc.p_max && i < fc.torc_R->computed_indices(); ++i)
        fc.annR.push_back(annihilator_profile(*fc.torc_R, i));
      fc.annR_inf = annihilator_intersection(
          *fc.torc_R, std::min(fc.p_max, fc.torc_R->computed_indices() - 1));
    }
  }

  // Second algebra S with a map onto R.
  if (doc.second) {
    fc.S_table = std::make_unique<BasisTable>(
        BasisTable::build(doc.second->pres, fc.N, doc.run.word_cap));
    verify_minimal_generators(*fc.S_table);
    fc.S_ring = std::make_unique<PresentedRing>(*fc.S_table);
    std::vector<Vec> images;
    std::vector<std::pair<int, Vec>> img_gens;
    for (size_t g = 0; g < doc.second->pres.gens.size(); ++g) {
      int gd = doc.second->pres.gens[g].degree;
      Vec iv = fc.T->normal_form(doc.second->images[g], gd);
      check(static_cast<size_t>(gd) < fc.inv.size(), ErrorKind::Schema,
            "S generator image beyond truncation");
      Span s(fc.T->dim(gd), f);
      for (const auto& row : fc.inv[gd]) s.add(row);
      check(s.contains(iv), ErrorKind::Schema,
            "S generator image is not an invariant");
      images.push_back(iv);
      img_gens.emplace_back(gd, iv);
    }
    fc.S_map = std::make_unique<AlgebraMap>(*fc.S_table, *fc.T, images);
    // Surjectivity onto R, verified degreewise to N.
    auto img_spans = subalgebra_spans(*fc.T, img_gens, fc.N);
    fc.S_surjective = true;
    for (int d = 0; d <= fc.N; ++d)
      if (img_spans[d].dim() != static_cast<int>(fc.inv[d].size()))
        fc.S_surjective = false;
    check(fc.S_surjective || !doc.second->surjective, ErrorKind::Schema,
          "S claimed surjective onto T^H but misses invariants within N");
    // Same generator-space dimensions per degree?
    std::map<int, int> s_gens, r_gens;
    for (const auto& g : doc.second->pres.gens) ++s_gens[g.degree];
    for (int d = 0; d <= fc.N; ++d)
      if (fc.mingens.new_count[d]) r_gens[d] = fc.mingens.new_count[d];
    fc.S_same_gen_counts = s_gens == r_gens;

    if (opt.homology) {
      auto embedS = [Sm = fc.S_map.get()](int e, const Vec& v) {
        return Sm->image(e, v);
      };
      fc.torc_S = std::make_unique<TorComplex>(*fc.T, *fc.S_ring, embedS,
                                               fc.p_max, fc.N);
      fc.betti_k_S = betti_table(fc.torc_S->k_resolution());
      fc.res_k_S = fc.torc_S->k_resolution();
      SubringOverMapModule R_over_S(*fc.R, embedS, Side::Right);
      fc.res_R_S =
          minimal_resolution(*fc.S_ring, R_over_S, Side::Right, fc.p_max, fc.N);
      fc.betti_R_S = betti_table(*fc.res_R_S);
      MappedAlgebraModule T_over_S(*fc.T, embedS, Side::Right);
      fc.res_T_S =
          minimal_resolution(*fc.S_ring, T_over_S, Side::Right, fc.p_max, fc.N);
      fc.betti_T_S = betti_table(*fc.res_T_S);
      if (opt.annihilators) {
        for (int i = 0; i <= fc.p_max && i < fc.torc_S->computed_indices();
             ++i)
          fc.annS.push_back(annihilator_profile(*fc.torc_S, i));
        fc.annS_inf = annihilator_intersection(
            *fc.torc_S, std::min(fc.p_max, fc.torc_S->computed_indices() - 1));
      }
    }
  }

  // Series fits.
  if (opt.series) {
    if (!doc.hints_T.empty())
      fc.h_T = fit_series_any(fc.T->dims(), doc.hints_T);
    if (!doc.hints_R.empty()) {
      std::vector<int> rdims;
      for (int d = 0; d <= fc.N; ++d)
        rdims.push_back(static_cast<int>(fc.inv[d].size()));
      fc.h_R = fit_series_any(rdims, doc.hints_R);
    }
    if (doc.second && !doc.second->series_hints.empty() && fc.S_table)
      fc.h_S = fit_series_any(fc.S_table->dims(), doc.second->series_hints);
    if (fc.h_T && as.as_regular && as.gldim)
      fc.cmreg_T = cmreg_asregular(*as.gldim, *fc.h_T);
    if (fc.h_S && doc.second->pres.asserts.as_regular &&
        doc.second->pres.asserts.gldim)
      fc.cmreg_S = cmreg_asregular(*doc.second->pres.asserts.gldim, *fc.h_S);
    if (fc.h_T && fc.h_R) {
      try {
        fc.ratio1 = ratio_at_one(*fc.h_T, *fc.h_R);
      } catch (const Error& e) {
        fc.ratio1_error = e.what();
      }
    }
  }

  // Bound-checker context.
  BoundsContext& c = fc.bctx;
  c.fixture = "input";
  c.N = fc.N;
  c.hyp_T_as_regular = as.as_regular;
  c.hyp_T_domain = as.is_domain;
  c.hyp_T_noetherian = as.noetherian;
  c.hyp_smash_prime = as.smash_product_prime;
  c.hyp_T_koszul = as.koszul;
  c.hyp_invariants_finite_gldim = as.invariants_finite_gldim;
  c.hyp_R_commutative = as.invariants_commutative;
  c.hyp_group_action = fc.group_order.has_value();
  c.T_generated_deg1 = gen1;
  c.minus_one_skew_n = skew_n;
  c.central_verified = fc.central_ok;
  c.central_d = fc.central_d;
  c.central_m = fc.central_m;
  c.s_CM = as.cm_s;
  c.dimH = fc.hopf.dim;
  c.group_order = fc.group_order;
  if (fc.beta_res.value)
    c.beta1 = CertInt{*fc.beta_res.value, fc.beta_res.cert.certified};
  if (fc.tau_left.finite_observed)
    c.tau = CertInt{fc.tau_left.value, fc.tau_left.cert.certified};
  if (fc.tau_right.finite_observed)
    c.tau_op = CertInt{fc.tau_right.value, fc.tau_right.cert.certified};
  c.cmreg_T = fc.cmreg_T;
  c.cmreg_S = fc.cmreg_S;
  c.gldim_T = as.gldim;
  if (doc.second) {
    c.hyp_S_as_regular = doc.second->pres.asserts.as_regular;
    c.gldim_S = doc.second->pres.asserts.gldim;
    c.S_surjective_onto_R = fc.S_surjective;
    c.S_R_same_gen_counts = fc.S_same_gen_counts;
    int top = 0;
    for (const auto& g : doc.second->pres.gens) top = std::max(top, g.degree);
    c.beta_S = CertInt{top, true};  // presentation verified minimal
    c.tor1_condition = false;
  }
  std::optional<int> gldim_S =
      fc.doc.second ? fc.doc.second->pres.asserts.gldim : std::nullopt;
  if (fc.betti_k_T) c.tT_k = t_values(*fc.betti_k_T, as.gldim, fc.p_max + 4);
  if (fc.betti_k_R) {
    c.tR_k = t_values(*fc.betti_k_R, std::nullopt, fc.p_max + 4);
    if (c.tR_k.size() > 2 && c.tR_k[2] != kMinusInf)
      c.beta2 = CertInt{c.tR_k[2], false};
  }
  if (fc.betti_T_R) c.tR_T = t_values(*fc.betti_T_R, std::nullopt, fc.p_max + 4);
  if (fc.betti_k_S) {
    c.tS_k = t_values(*fc.betti_k_S, gldim_S, fc.p_max + 4);
    if (c.tS_k.size() > 2 && c.tS_k[2] != kMinusInf)
      c.beta2_S = CertInt{c.tS_k[2], false};
  }
  if (fc.betti_R_S) c.tS_R = t_values(*fc.betti_R_S, gldim_S, fc.p_max + 4);
  if (fc.betti_T_S) c.tS_T = t_values(*fc.betti_T_S, gldim_S, fc.p_max + 4);
  if (fc.torc_S) {
    for (int i = 0; i < fc.torc_S->computed_indices(); ++i)
      c.gen_deg_tor_S_T.push_back(fc.torc_S->min_gen_top_degree(i));
  }
  auto quot_deg = [](const AnnihilatorProfile& a) {
    return a.deg_quotient < 0 ? kMinusInf : a.deg_quotient;
  };
  for (const auto& a : fc.annR) c.deg_A_over_JHi.push_back(quot_deg(a));
  if (fc.annR_inf) c.deg_A_over_JHinf = quot_deg(*fc.annR_inf);
  for (const auto& a : fc.annS) c.deg_T_over_Ji.push_back(quot_deg(a));
  if (fc.annS_inf) c.deg_T_over_Jinf = quot_deg(*fc.annS_inf);
  c.ratio_at_1 = fc.ratio1;
  if (fc.h_T) {
    c.a_T = fc.h_T->deg_t();
    c.shape_T = inverse_product_shape(*fc.h_T);
  }
  if (fc.h_R) {
    c.a_R = fc.h_R->deg_t();
    c.shape_R = inverse_product_shape(*fc.h_R);
  }

  if (opt.bounds) fc.bounds = check_bounds(c);
  return fc;
}

namespace {

Json certainty_json(const Certainty& c) {
  Json j;
  j["status"] = c.certified ? "certified" : "observed";
  if (c.certified) j["by"] = c.by;
  return j;
}

Json betti_json(const BasisTable&, const BettiTable& b) {
  Json j;
  Json t = Json::array();
  for (int v : b.t) t.push_back(v == kMinusInf ? Json(nullptr) : Json(v));
  j["t"] = std::move(t);
  Json tor = Json::array();
  for (const auto& row : b.tor) {
    Json r = Json::object();
    for (const auto& [deg, dim] : row) r[std::to_string(deg)] = dim;
    tor.push_back(std::move(r));
  }
  j["tor_dims"] = std::move(tor);
  j["exhausted"] = b.exhausted;
  j["torreg"] =
      torreg(b) == kMinusInf ? Json(nullptr) : Json(torreg(b));
  return j;
}

Json betti_text(const BettiTable& b) {
  // Plain-text grid: homological index x internal degree -> dim.
  std::ostringstream os;
  int lo = 0, hi = 0;
  for (const auto& row : b.tor)
    for (const auto& [deg, dim] : row) hi = std::max(hi, deg);
  os << "i\\deg";
  for (int d = lo; d <= hi; ++d) os << "\t" << d;
  for (size_t i = 0; i < b.tor.size(); ++i) {
    os << "\n" << i;
    for (int d = lo; d <= hi; ++d) {
      auto it = b.tor[i].find(d);
      os << "\t" << (it == b.tor[i].end() ? 0 : it->second);
    }
  }
  return Json(os.str());
}

Json profile_json(const AnnihilatorProfile& p) {
  Json j;
  j["index"] = p.index < 0 ? Json("inf") : Json(p.index);
  j["dims"] = p.dims;
  j["codims"] = p.codims;
  j["examined_to"] = p.examined_to;
  j["deg_quotient"] = p.deg_quotient;
  j["status"] = "observed";
  return j;
}

Json tau_json(const TauResult& t, int N) {
  Json j;
  if (t.finite_observed) {
    j["finite"] = true;
    j["value"] = t.value;
  } else {
    j["finite"] = false;
    j["at_least"] = N + 2;
    j["note"] = "no full Hilbert-ideal slice within the truncation";
  }
  Json c = certainty_json(t.cert);
  for (auto& [k, v] : c.items()) j[k] = v;
  return j;
}

Json series_json(const NumberField&, const HilbertSeries& s) {
  Json j;
  j["numerator"] = qpoly_to_json(s.num);
  j["denominator"] = qpoly_to_json(s.den);
  j["verified_to"] = s.verified_to;
  j["hint"] = s.hint_desc;
  j["deg_t"] = s.deg_t();
  j["pole_order_at_1"] = s.pole_order_at_1();
  j["status"] = "conjectural fit, expansion verified to verified_to";
  return j;
}

}  // namespace

Json fixture_report(const FixtureComputation& fc,
                    const std::vector<std::string>& sections) {
  std::set<std::string> want(sections.begin(), sections.end());
  bool all = want.count("all") > 0;
  auto wanted = [&](const std::string& s) { return all || want.count(s); };
  const NumberField& f = fc.doc.algebra.field;
  Json j;

  if (wanted("validate")) {
    Json v;
    v["hopf_ok"] = fc.hopf_report.ok;
    Json hf = Json::array();
    for (const auto& fl : fc.hopf_report.failures)
      hf.push_back(Json{{"axiom", fl.axiom}, {"witness", fl.witness}});
    v["hopf_failures"] = std::move(hf);
    v["action_ok"] = fc.action_report.ok;
    v["action_failures"] = fc.action_report.failures;
    v["dim_H"] = fc.hopf.dim;
    if (fc.group_order) v["group_order"] = *fc.group_order;
    j["validate"] = std::move(v);
  }
  if (!fc.R) return j;  // validate-only run

  if (wanted("basis")) {
    Json b;
    b["dims"] = fc.T->dims();
    Json words = Json::array();
    for (int d = 0; d <= fc.N; ++d) {
      Json w = Json::array();
      for (int i = 0; i < fc.T->dim(d); ++i)
        w.push_back(fc.T->basis_word_str(d, i));
      words.push_back(std::move(w));
    }
    b["basis_words"] = std::move(words);
    j["basis"] = std::move(b);
  }

  if (wanted("invariants")) {
    Json v;
    Json dims = Json::array(), bases = Json::array();
    for (int d = 0; d <= fc.N; ++d) {
      dims.push_back(static_cast<int>(fc.inv[d].size()));
      Json bd = Json::array();
      for (const auto& row : fc.inv[d])
        bd.push_back(element_str(*fc.T, d, row));
      bases.push_back(std::move(bd));
    }
    v["dims"] = std::move(dims);
    v["bases"] = std::move(bases);
    j["invariants"] = std::move(v);
  }

  if (wanted("beta")) {
    Json g;
    g["new_per_degree"] = fc.mingens.new_count;
    Json list = Json::array();
    for (const auto& gen : fc.mingens.gens) {
      Json e;
      e["degree"] = gen.degree;
      e["element"] = element_str(*fc.T, gen.degree, gen.ambient);
      e["coords"] = vec_to_json(f, gen.ambient);
      list.push_back(std::move(e));
    }
    g["generators"] = std::move(list);
    j["minimal_generators"] = std::move(g);
    Json b;
    if (fc.beta_res.value) {
      b["value"] = *fc.beta_res.value;
      if (!fc.beta_res.cert.certified && fc.beta_res.may_grow)
        b["note"] = "lower bound; generators above the truncation not excluded";
    } else {
      b["value"] = Json(nullptr);
      b["note"] = "no generators found (invariants trivial within N)";
    }
    Json c = certainty_json(fc.beta_res.cert);
    for (auto& [k, v] : c.items()) b[k] = v;
    j["beta"] = std::move(b);
  }

  if (wanted("tau")) {
    Json t;
    t["left"] = tau_json(fc.tau_left, fc.N);
    t["right"] = tau_json(fc.tau_right, fc.N);
    if (fc.tau_left.finite_observed && fc.tau_right.finite_observed &&
        fc.tau_left.value != fc.tau_right.value)
      t["finding"] = "tau != tau^op (Question 6.1 data)";
    j["tau"] = std::move(t);
  }

  if (wanted("hilbert-ideal")) {
    Json h;
    h["left"] = Json{{"dims", fc.JL.dims}, {"codims", fc.JL.codims}};
    h["right"] = Json{{"dims", fc.JR.dims}, {"codims", fc.JR.codims}};
    j["hilbert_ideal"] = std::move(h);
    Json mg;
    auto mg_json = [&](const ModuleGenerators& m) {
      Json out;
      out["t0"] = m.t0;
      Json per = Json::array();
      for (int d = 0; d <= fc.N; ++d) {
        Json dd = Json::array();
        for (const auto& v : m.gens[d])
          dd.push_back(element_str(*fc.T, d, v));
        per.push_back(std::move(dd));
      }
      out["per_degree"] = std::move(per);
      return out;
    };
    mg["right_module"] = mg_json(fc.mg_right);
    mg["left_module"] = mg_json(fc.mg_left);
    j["module_generators"] = std::move(mg);
  }

  if (wanted("annihilators") && !fc.annR.empty()) {
    Json a;
    Json list = Json::array();
    for (const auto& p : fc.annR) list.push_back(profile_json(p));
    a["J_Hi"] = std::move(list);
    if (fc.annR_inf) a["J_inf"] = profile_json(*fc.annR_inf);
    j["annihilators"] = std::move(a);
  }

  if (wanted("resolve") || wanted("betti") || wanted("torreg")) {
    Json r;
    if (fc.betti_k_T) {
      r["k_over_T"] = betti_json(*fc.T, *fc.betti_k_T);
      r["k_over_T"]["grid"] = betti_text(*fc.betti_k_T);
    }
    if (fc.betti_k_R) {
      r["k_over_R"] = betti_json(*fc.T, *fc.betti_k_R);
      r["k_over_R"]["grid"] = betti_text(*fc.betti_k_R);
    }
    if (fc.betti_T_R) r["T_over_R"] = betti_json(*fc.T, *fc.betti_T_R);
    if (fc.betti_k_S) r["k_over_S"] = betti_json(*fc.T, *fc.betti_k_S);
    if (fc.betti_R_S) r["R_over_S"] = betti_json(*fc.T, *fc.betti_R_S);
    if (fc.betti_T_S) r["T_over_S"] = betti_json(*fc.T, *fc.betti_T_S);
    j["resolutions"] = std::move(r);
  }

  if (wanted("cmreg")) {
    Json c;
    c["T"] = fc.cmreg_T ? Json(*fc.cmreg_T) : Json(nullptr);
    if (fc.doc.second)
      c["S"] = fc.cmreg_S ? Json(*fc.cmreg_S) : Json(nullptr);
    c["method"] = "gldim + deg_t h (AS regular formula)";
    if (!fc.cmreg_T) {
      if (!fc.doc.algebra.asserts.as_regular)
        c["error"] = "algebra not asserted AS regular";
      else if (!fc.doc.algebra.asserts.gldim)
        c["error"] = "gldim not asserted";
      else
        c["error"] = "no verified series fit";
    }
    j["cmreg"] = std::move(c);
  }

  if (wanted("series")) {
    Json s;
    if (fc.h_T) s["T"] = series_json(f, *fc.h_T);
    if (fc.h_R) s["R"] = series_json(f, *fc.h_R);
    if (fc.h_S) s["S"] = series_json(f, *fc.h_S);
    if (fc.ratio1) s["ratio_at_one"] = fc.ratio1->get_str();
    if (!fc.ratio1_error.empty()) s["ratio_at_one_error"] = fc.ratio1_error;
    j["series"] = std::move(s);
  }

  if (wanted("check-bounds") && fc.bounds) {
    Json b;
    Json rows = Json::array();
    for (const auto& row : fc.bounds->rows) {
      Json r;
      r["id"] = row.id;
      r["statement"] = row.statement;
      r["lhs"] = row.lhs;
      r["rhs"] = row.rhs;
      r["status"] = row.status;
      r["hypotheses_satisfied"] = row.hypotheses_satisfied;
      r["inputs_certified"] = row.inputs_certified;
      r["hypotheses"] = row.hypotheses;
      if (!row.note.empty()) r["note"] = row.note;
      rows.push_back(std::move(r));
    }
    b["rows"] = std::move(rows);
    Json data = Json::object();
    for (const auto& [k, v] : fc.bounds->data) data[k] = v;
    b["data"] = std::move(data);
    b["hard_violation"] = fc.bounds->has_hard_violation();
    j["bounds"] = std::move(b);
  }

  return j;
}

}  // namespace ncinv
