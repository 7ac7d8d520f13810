#include "ncinv/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "ncinv/error.hpp"

namespace ncinv {

namespace {

Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string ext_str(int v) {
  return v == kMinusInf ? std::string("-inf") : std::to_string(v);
}

bool ext_le(int a, int b) {
  if (a == kMinusInf) return true;
  if (b == kMinusInf) return false;
  return a <= b;
}

bool ext_le_rat(int a, const Rat& b) {
  if (a == kMinusInf) return true;
  return Rat(a) <= b;
}

int ext_add(int a, int b) {
  if (a == kMinusInf || b == kMinusInf) return kMinusInf;
  return a + b;
}

struct RowBuilder {
  BoundReport* rep;
  std::string id;
  std::vector<std::string> hyps;
  bool hyps_ok = true;
  bool inputs_cert = true;

  RowBuilder& hyp(const std::string& name, bool satisfied,
                  bool asserted_only = false) {
    hyps.push_back(name + ": " +
                   (satisfied ? (asserted_only ? "asserted" : "yes") : "no"));
    hyps_ok = hyps_ok && satisfied;
    return *this;
  }
  RowBuilder& certified_input(bool c) {
    inputs_cert = inputs_cert && c;
    return *this;
  }
  void leq(const std::string& statement, int lhs, int rhs,
           const std::string& note = "") {
    BoundRow row;
    row.id = id;
    row.statement = statement;
    row.lhs = ext_str(lhs);
    row.rhs = ext_str(rhs);
    row.status = ext_le(lhs, rhs) ? "holds" : "violated";
    if (lhs == rhs && lhs != kMinusInf && row.status == "holds")
      row.note = note.empty() ? "equality" : note + "; equality";
    else
      row.note = note;
    row.hypotheses = hyps;
    row.hypotheses_satisfied = hyps_ok;
    row.inputs_certified = inputs_cert;
    rep->rows.push_back(std::move(row));
  }
  void leq_rat(const std::string& statement, int lhs, const Rat& rhs,
               const std::string& note = "") {
    BoundRow row;
    row.id = id;
    row.statement = statement;
    row.lhs = ext_str(lhs);
    row.rhs = rhs.get_str();
    row.status = ext_le_rat(lhs, rhs) ? "holds" : "violated";
    row.note = note;
    row.hypotheses = hyps;
    row.hypotheses_satisfied = hyps_ok;
    row.inputs_certified = inputs_cert;
    rep->rows.push_back(std::move(row));
  }
  void equality(const std::string& statement, const Rat& lhs, const Rat& rhs,
                const std::string& note = "") {
    BoundRow row;
    row.id = id;
    row.statement = statement;
    row.lhs = lhs.get_str();
    row.rhs = rhs.get_str();
    row.status = lhs == rhs ? "holds" : "violated";
    row.note = note;
    row.hypotheses = hyps;
    row.hypotheses_satisfied = hyps_ok;
    row.inputs_certified = inputs_cert;
    rep->rows.push_back(std::move(row));
  }
  void not_applicable(const std::string& why) {
    BoundRow row;
    row.id = id;
    row.statement = why;
    row.status = "not-applicable";
    row.hypotheses = hyps;
    row.hypotheses_satisfied = false;
    row.inputs_certified = false;
    rep->rows.push_back(std::move(row));
  }
};

int at(const std::vector<int>& v, int i) {
  return (i >= 0 && i < static_cast<int>(v.size())) ? v[i] : kMinusInf;
}
bool has(const std::vector<int>& v, int i) {
  return i >= 0 && i < static_cast<int>(v.size());
}

}  // namespace

bool BoundReport::has_hard_violation() const {
  for (const auto& r : rows)
    if (r.status == "violated" && r.hypotheses_satisfied && r.inputs_certified)
      return true;
  return false;
}

Rat bound_D(int i, int deg_B_over_J, const std::vector<int>& tB,
            const std::vector<int>& tA) {
  check(has(tB, 2) && tB[2] != kMinusInf, ErrorKind::Math,
        "bound_D needs t^B_2(k)");
  Rat best = Rat(deg_B_over_J + tB[2]);
  for (int j = 1; j <= i - 1; ++j) {
    if (!has(tB, j + 2) || tB[j + 2] == kMinusInf) continue;
    best = std::max(best, frac(tB[j + 2] - tB[2], j));
  }
  for (int j = 1; j <= i; ++j) {
    if (has(tA, j) && tA[j] != kMinusInf) best = std::max(best, frac(tA[j], j));
    if (has(tB, j) && tB[j] != kMinusInf) best = std::max(best, frac(tB[j], j));
  }
  return best;
}

Rat bound_U(int i, int j, const Rat& D, const std::vector<int>& tB) {
  check(has(tB, 2) && tB[2] != kMinusInf, ErrorKind::Math,
        "bound_U needs t^B_2(k)");
  if (j <= 0) return Rat(0);  // callers treat j <= 0 as -inf; unused here
  // DP over compositions of j into positive parts p: term(p) = t^B_{p+1} + D
  // - t^B_2.
  std::vector<Rat> best(j + 1, Rat(0));
  std::vector<bool> defined(j + 1, false);
  defined[0] = true;
  for (int m = 1; m <= j; ++m) {
    for (int p = 1; p <= m; ++p) {
      if (!defined[m - p]) continue;
      if (!has(tB, p + 1) || tB[p + 1] == kMinusInf) continue;
      Rat term = Rat(tB[p + 1]) + D - Rat(tB[2]);
      Rat cand = best[m - p] + term;
      if (!defined[m] || cand > best[m]) {
        best[m] = cand;
        defined[m] = true;
      }
    }
  }
  check(defined[j], ErrorKind::Math, "bound_U: missing t-values");
  (void)i;
  return best[j];
}

BoundReport check_bounds(const BoundsContext& ctx) {
  BoundReport rep;
  auto row = [&](const std::string& id) {
    RowBuilder b;
    b.rep = &rep;
    b.id = id;
    return b;
  };
  std::ostringstream os;

  // --- cor3.3: beta(A^H) <= tau_H(A) ---
  {
    auto b = row("cor3.3");
    b.hyp("H semisimple (normalized integral validated)", true);
    if (ctx.beta1 && ctx.tau) {
      b.certified_input(ctx.beta1->certified && ctx.tau->certified);
      b.leq("beta(A^H) <= tau_H(A)", ctx.beta1->v, ctx.tau->v);
    } else {
      b.not_applicable("needs beta and tau");
    }
  }
  if (ctx.beta1 && ctx.tau_op) {
    auto b = row("cor3.3-op");
    b.hyp("H semisimple (normalized integral validated)", true);
    b.certified_input(ctx.beta1->certified && ctx.tau_op->certified);
    b.leq("beta(A^H) <= tau^op_H(A)", ctx.beta1->v, ctx.tau_op->v);
  }

  // --- thm3.5(1): beta(T^H) <= dim H (and ex1.6: tau <= dim H) ---
  {
    auto b = row("thm3.5.1");
    b.hyp("T AS regular", ctx.hyp_T_as_regular, true)
        .hyp("T domain", ctx.hyp_T_domain, true)
        .hyp("T noetherian", ctx.hyp_T_noetherian, true)
        .hyp("T generated in degree 1", ctx.T_generated_deg1)
        .hyp("T#H prime", ctx.hyp_smash_prime, true)
        .hyp("T^H finite global dimension", ctx.hyp_invariants_finite_gldim,
             true);
    if (ctx.beta1 && ctx.dimH) {
      b.certified_input(ctx.beta1->certified);
      b.leq("beta(T^H) <= dim H", ctx.beta1->v, *ctx.dimH);
    } else {
      b.not_applicable("needs beta and dim H");
    }
  }
  if (ctx.tau && ctx.dimH) {
    auto b = row("ex1.6");
    b.hyp("T AS regular", ctx.hyp_T_as_regular, true)
        .hyp("T domain", ctx.hyp_T_domain, true)
        .hyp("T noetherian", ctx.hyp_T_noetherian, true)
        .hyp("T generated in degree 1", ctx.T_generated_deg1)
        .hyp("T#H prime", ctx.hyp_smash_prime, true)
        .hyp("T^H finite global dimension", ctx.hyp_invariants_finite_gldim,
             true);
    b.certified_input(ctx.tau->certified);
    b.leq("tau_H(T) <= dim H", ctx.tau->v, *ctx.dimH);
  }

  // --- pro3.11(1): beta <= tau <= d dim H + m ---
  {
    auto b = row("pro3.11.1");
    b.hyp("central subalgebra data verified", ctx.central_verified)
        .hyp("A domain", ctx.hyp_T_domain, true)
        .hyp("group action or algebraically closed char 0",
             ctx.hyp_group_action, !ctx.hyp_group_action);
    if (ctx.central_d && ctx.central_m && ctx.dimH && ctx.tau && ctx.beta1) {
      int bound = *ctx.central_d * *ctx.dimH + *ctx.central_m;
      b.certified_input(ctx.tau->certified && ctx.beta1->certified);
      os.str("");
      os << "beta(A^H) <= tau_H(A) <= d*dimH + m = " << bound;
      b.leq(os.str(), std::max(ctx.beta1->v, ctx.tau->v), bound);
    } else {
      b.not_applicable("needs central subalgebra data, tau and beta");
    }
  }
  // --- pro3.11(2): deg A/J_{H,i} <= d dim H + m - 1 (observed inputs) ---
  if (ctx.central_d && ctx.central_m && ctx.dimH &&
      (!ctx.deg_A_over_JHi.empty() || ctx.deg_A_over_JHinf)) {
    int bound = *ctx.central_d * *ctx.dimH + *ctx.central_m - 1;
    for (size_t i = 0; i < ctx.deg_A_over_JHi.size(); ++i) {
      auto b = row("pro3.11.2");
      b.hyp("central subalgebra data verified", ctx.central_verified);
      b.certified_input(false);  // annihilator degrees are observed
      os.str("");
      os << "deg A/J_{H," << i << "} <= d*dimH + m - 1";
      b.leq(os.str(), ctx.deg_A_over_JHi[i], bound, "observed LHS");
    }
    if (ctx.deg_A_over_JHinf) {
      auto b = row("pro3.11.2-inf");
      b.hyp("central subalgebra data verified", ctx.central_verified);
      b.certified_input(false);
      b.leq("deg A/J_inf <= d*dimH + m - 1", *ctx.deg_A_over_JHinf, bound,
            "observed LHS");
    }
  }

  // --- cor3.12: beta(k_{-1}[x_1..x_n]^G) <= 2|G| + n ---
  {
    auto b = row("cor3.12");
    b.hyp("T = k_{-1}[x_1..x_n] (verified)", ctx.minus_one_skew_n.has_value())
        .hyp("group action", ctx.hyp_group_action)
        .hyp("|G| invertible (char 0)", true);
    if (ctx.minus_one_skew_n && ctx.group_order && ctx.beta1) {
      int bound = 2 * *ctx.group_order + *ctx.minus_one_skew_n;
      b.certified_input(ctx.beta1->certified);
      os.str("");
      os << "beta <= 2|G| + n = " << bound;
      b.leq(os.str(), ctx.beta1->v, bound);
    } else {
      b.not_applicable("needs (-1)-skew shape, group order and beta");
    }
  }

  const bool have_S = ctx.S_surjective_onto_R || !ctx.tS_R.empty();
  // --- lem4.2 / pro4.5 with (A,B) = (S,R) ---
  if (have_S && ctx.beta1 && ctx.beta_S && has(ctx.tS_R, 0)) {
    auto b = row("lem4.2");
    b.hyp("R finitely generated over S (observed)", true);
    b.certified_input(ctx.beta1->certified && ctx.beta_S->certified);
    int rhs = std::max(ctx.beta_S->v, at(ctx.tS_R, 0));
    b.leq("beta(R) <= max{beta(S), t^S_0(R)}", ctx.beta1->v, rhs);
  }
  if (have_S && ctx.beta2 && ctx.beta_S && ctx.beta2_S && has(ctx.tS_R, 1)) {
    auto b = row("pro4.5");
    b.hyp("R finitely generated over S (observed)", true);
    b.certified_input(false);
    int t0 = at(ctx.tS_R, 0);
    int rhs = std::max(std::max(ext_add(t0, t0), ext_add(t0, ctx.beta_S->v)),
                       std::max(ctx.beta2_S->v, at(ctx.tS_R, 1)));
    b.leq("beta_2(R) <= max{2 t^S_0(R), t^S_0(R)+beta(S), beta_2(S), t^S_1(R)}",
          ctx.beta2->v, rhs);
  }

  // --- cor4.6 and lem2.16 need delta(T/S) ---
  if (ctx.cmreg_T && ctx.cmreg_S) {
    int delta = *ctx.cmreg_T - *ctx.cmreg_S;
    rep.data.push_back({"delta(T/S)", std::to_string(delta)});
    if (ctx.beta1 && ctx.beta_S) {
      auto b = row("cor4.6.1");
      b.hyp("S noetherian AS regular", ctx.hyp_S_as_regular, true)
          .hyp("T^H finitely generated over S both sides (observed)", true);
      b.certified_input(ctx.beta1->certified && ctx.beta_S->certified);
      b.leq("beta(T^H) <= max{beta(S), delta(T/S)}", ctx.beta1->v,
            std::max(ctx.beta_S->v, delta));
    }
    if (ctx.beta2 && ctx.beta_S && ctx.beta2_S) {
      auto b = row("cor4.6.2");
      b.hyp("S noetherian AS regular", ctx.hyp_S_as_regular, true)
          .hyp("T^H finitely generated over S both sides (observed)", true);
      b.certified_input(false);
      int rhs = std::max(2 * delta,
                         std::max(delta + ctx.beta_S->v, ctx.beta2_S->v));
      b.leq("beta_2(T^H) <= max{2 delta, delta + beta(S), beta_2(S)}",
            ctx.beta2->v, rhs);
    }
    for (int i = 0; i < static_cast<int>(ctx.tS_T.size()); ++i) {
      auto b = row("lem2.16.1");
      b.hyp("S, T noetherian AS regular", ctx.hyp_S_as_regular && ctx.hyp_T_as_regular, true)
          .hyp("T finitely generated over S both sides (observed)", true);
      b.certified_input(false);
      os.str("");
      os << "t^S_" << i << "(T_S) <= delta(T/S) + " << i;
      b.leq(os.str(), ctx.tS_T[i], delta + i);
    }
    if (ctx.tau) {
      auto b = row("lem2.16.3");
      b.hyp("image of S -> T is T^H", ctx.S_surjective_onto_R);
      b.certified_input(ctx.tau->certified);
      b.leq("tau_H(T) <= delta(T/S) + 1", ctx.tau->v, delta + 1);
    }
    if (ctx.tau_op) {
      auto b = row("lem2.16.3-op");
      b.hyp("image of S -> T is T^H", ctx.S_surjective_onto_R);
      b.certified_input(ctx.tau_op->certified);
      b.leq("tau^op_H(T) <= delta(T/S) + 1", ctx.tau_op->v, delta + 1);
    }
  }

  // --- thm4.7(1): t^R_i(M) <= CMreg(M) - s + t^R_{i+s}(k), M = T over R ---
  if (ctx.s_CM && ctx.cmreg_T) {
    int s = *ctx.s_CM;
    for (int i = 0; i < static_cast<int>(ctx.tR_T.size()); ++i) {
      if (!has(ctx.tR_k, i + s)) continue;
      auto b = row("thm4.7.1");
      b.hyp("R has balanced dualizing complex (asserted via Hyp 0.3)", true,
            true)
          .hyp("M = T is s-Cohen-Macaulay over R, s user-asserted", true, true);
      b.certified_input(false);
      os.str("");
      os << "t^R_" << i << "(T_R) <= CMreg(T) - " << s << " + t^R_" << (i + s)
         << "(k)";
      b.leq(os.str(), at(ctx.tR_T, i),
            ext_add(*ctx.cmreg_T - s, at(ctx.tR_k, i + s)));
    }
  }

  // --- cor4.8: t^S_i(R) <= CMreg(T) - n + t^S_{i+n}(k), n = gldim T ---
  if (ctx.gldim_T && ctx.cmreg_T) {
    int n = *ctx.gldim_T;
    for (int i = 0; i < static_cast<int>(ctx.tS_R.size()); ++i) {
      if (!has(ctx.tS_k, i + n)) continue;
      auto b = row("cor4.8");
      b.hyp("S noetherian AS regular", ctx.hyp_S_as_regular, true)
          .hyp("R finitely generated over S both sides (observed)", true);
      b.certified_input(false);
      os.str("");
      os << "t^S_" << i << "(R) <= CMreg(T) - " << n << " + t^S_" << (i + n)
         << "(k)";
      b.leq(os.str(), at(ctx.tS_R, i),
            ext_add(*ctx.cmreg_T - n, at(ctx.tS_k, i + n)));
    }
  }

  // --- E5.1.3 with (A,B) = (S,R): beta_i(R) bounds ---
  if (have_S) {
    for (int i = 1; i < static_cast<int>(ctx.tR_k.size()); ++i) {
      if (!has(ctx.tS_k, i)) continue;
      bool have_all = true;
      int rhs = at(ctx.tS_k, i);
      for (int j = 0; j <= i - 2; ++j) {
        if (!has(ctx.tR_k, j) || !has(ctx.tS_R, i - j - 1)) {
          have_all = false;
          break;
        }
        rhs = std::max(rhs, ext_add(at(ctx.tR_k, j), at(ctx.tS_R, i - j - 1)));
      }
      if (!have_all) continue;
      auto b = row("e5.1.3");
      b.hyp("S -> R surjective (verified to N)", ctx.S_surjective_onto_R);
      b.certified_input(false);
      os.str("");
      os << "t^R_" << i
         << "(k) <= max{t^R_j(k) + t^S_{i-j-1}(R), t^S_" << i << "(k)}";
      b.leq(os.str(), at(ctx.tR_k, i), rhs);
    }
  }

  // --- E5.1.4 with (A,B) = (S,T) ---
  for (int i = 0; i < static_cast<int>(ctx.gen_deg_tor_S_T.size()); ++i) {
    if (!has(ctx.tS_k, i)) continue;
    bool have_all = true;
    int rhs = at(ctx.tS_k, i);
    for (int j = 0; j <= i - 1; ++j) {
      if (!has(ctx.tS_T, j) || !has(ctx.tT_k, i - j + 1)) {
        have_all = false;
        break;
      }
      rhs = std::max(rhs, ext_add(at(ctx.tS_T, j), at(ctx.tT_k, i - j + 1)));
    }
    if (!have_all) continue;
    auto b = row("e5.1.4");
    b.hyp("T finitely generated over S (observed)", true);
    b.certified_input(false);
    os.str("");
    os << "deg(k (x)_T Tor^S_" << i
       << "(T,k)) <= max{t^S_j(T) + t^T_{i-j+1}(k), t^S_" << i << "(k)}";
    b.leq(os.str(), ctx.gen_deg_tor_S_T[i], rhs);
  }

  // --- cor5.5 with (A,B) = (S,T): t^S_j(T) <= (j+1) D_i - t^T_2(k) ---
  if (!ctx.tS_T.empty() && has(ctx.tT_k, 2) && ctx.tT_k[2] != kMinusInf &&
      !ctx.deg_T_over_Ji.empty()) {
    // Largest homological window the D_i inputs support (capped at 4).
    int i = 0;
    while (i + 1 <= 4 && has(ctx.tS_k, i + 1) && has(ctx.tT_k, i + 1)) ++i;
    int deg_BJ = 0;
    for (int k = 0; k < static_cast<int>(ctx.deg_T_over_Ji.size()) && k <= i;
         ++k)
      deg_BJ = std::max(deg_BJ, ctx.deg_T_over_Ji[k]);
    bool feasible = i >= 1;
    if (feasible) {
      Rat D = bound_D(i, deg_BJ, ctx.tT_k, ctx.tS_k);
      os.str("");
      os << "D_" << i;
      rep.data.push_back({os.str(), D.get_str()});
      for (int j = 1; j <= i; ++j) {
        Rat U = bound_U(i, j, D, ctx.tT_k);
        os.str("");
        os << "U^" << i << "_" << j;
        rep.data.push_back({os.str(), U.get_str()});
      }
      for (int j = 1; j <= i; ++j) {
        auto b = row("cor5.5");
        b.hyp("A right noetherian, B_A finitely generated (observed)", true);
        b.certified_input(false);
        os.str("");
        os << "t^S_" << j << "(T_S) <= (" << j << "+1) D_i - t^T_2(k)";
        std::string note = has(ctx.tS_T, j)
                               ? std::string("D_i computed")
                               : "D_i computed; LHS not observed within "
                                 "truncation";
        b.leq_rat(os.str(), at(ctx.tS_T, j),
                  Rat(j + 1) * D - Rat(ctx.tT_k[2]), note);
      }
      // pro5.8 with C = R = im(S -> T): bounds on t^R_j(k).
      bool hyp_d = true;
      for (int j = 2; j <= i; ++j)
        if (has(ctx.tS_k, j) && ctx.tS_k[j] != kMinusInf &&
            D < frac(ctx.tS_k[j] + ctx.tT_k[2], j))
          hyp_d = false;
      for (int j = 1; j <= i && has(ctx.tR_k, j); ++j) {
        auto b = row("pro5.8");
        b.hyp("B = T generated in degree 1", ctx.T_generated_deg1)
            .hyp("C = T^H a direct summand of T as a right S-module "
                 "(semisimple action)",
                 true)
            .hyp("D_i >= (t^S_j(k) + t^T_2(k))/j for 2 <= j <= i", hyp_d);
        b.certified_input(false);
        os.str("");
        if (j == 1) {
          os << "t^R_1(k) <= D_i - t^T_2(k) + 1";
          b.leq_rat(os.str(), at(ctx.tR_k, 1),
                    D - Rat(ctx.tT_k[2]) + Rat(1), "D_i computed");
        } else {
          os << "t^R_" << j << "(k) <= " << j << " D_i - t^T_2(k)";
          b.leq_rat(os.str(), at(ctx.tR_k, j), Rat(j) * D - Rat(ctx.tT_k[2]),
                    "D_i computed");
        }
      }
    }
  }

  // --- thm5.6 / thm5.9: Koszul T with deg T/J_inf ---
  if (ctx.deg_T_over_Jinf && have_S) {
    int D = *ctx.deg_T_over_Jinf + 2;
    bool hyp_ts = true;
    for (int j = 1; j < static_cast<int>(ctx.tS_k.size()); ++j)
      if (ctx.tS_k[j] != kMinusInf && ctx.tS_k[j] > j * D) hyp_ts = false;
    for (int i = 0; i < static_cast<int>(ctx.tS_R.size()); ++i) {
      auto b = row("thm5.6");
      b.hyp("T Koszul", ctx.hyp_T_koszul, true)
          .hyp("S -> R surjective (verified to N)", ctx.S_surjective_onto_R)
          .hyp("t^S_j(k) <= j (deg T/J_inf + 2) for computed j", hyp_ts);
      b.certified_input(false);
      os.str("");
      os << "t^S_" << i << "(R_S) <= " << i << "*(deg T/J_inf + 2) + deg T/J_inf";
      b.leq(os.str(), at(ctx.tS_R, i), i * D + *ctx.deg_T_over_Jinf,
            "deg T/J_inf observed");
    }
    // thm5.9 on t^R_j(k).
    bool hyp59 = true;
    if (has(ctx.tT_k, 2) && ctx.tT_k[2] != kMinusInf) {
      for (int j = 2; j < static_cast<int>(ctx.tS_k.size()); ++j) {
        if (ctx.tS_k[j] == kMinusInf) continue;
        if (Rat(*ctx.deg_T_over_Jinf) <
            frac(ctx.tS_k[j] + ctx.tT_k[2], j) - Rat(2))
          hyp59 = false;
      }
    } else {
      hyp59 = false;
    }
    for (int j = 1; j < static_cast<int>(ctx.tR_k.size()); ++j) {
      auto b = row("thm5.9");
      b.hyp("T Koszul", ctx.hyp_T_koszul, true)
          .hyp("S -> R surjective (verified to N)", ctx.S_surjective_onto_R)
          .hyp("deg T/J_inf >= max{(t^S_j + t^T_2)/j} - 2", hyp59);
      b.certified_input(false);
      os.str("");
      if (j == 1) {
        os << "t^R_1(k) <= deg T/J_inf + 1";
        b.leq(os.str(), at(ctx.tR_k, 1), *ctx.deg_T_over_Jinf + 1,
              "deg T/J_inf observed");
      } else {
        os << "t^R_" << j << "(k) <= " << j << "*(deg T/J_inf + 2) - 2";
        b.leq(os.str(), at(ctx.tR_k, j), j * D - 2, "deg T/J_inf observed");
      }
    }
  }

  // --- cor5.10: commutative invariants of k_{-1}[x_1..x_n] ---
  if (ctx.minus_one_skew_n && ctx.group_order) {
    for (int i = 2; i < static_cast<int>(ctx.tR_k.size()); ++i) {
      auto b = row("cor5.10");
      b.hyp("T = k_{-1}[x_1..x_n] (verified)", true)
          .hyp("R commutative", ctx.hyp_R_commutative, true)
          .hyp("group action, kG semisimple", ctx.hyp_group_action);
      b.certified_input(false);
      int bound = i * (2 * *ctx.group_order + *ctx.minus_one_skew_n + 1) - 2;
      os.str("");
      os << "t^R_" << i << "(k) <= " << i << "*(2|G|+n+1) - 2";
      b.leq(os.str(), at(ctx.tR_k, i), bound);
    }
  }

  // --- thm5.11: beta_2(R) and t^S_1(R) against tau + tau_op - CMreg(T) ---
  if (ctx.tau && ctx.tau_op && ctx.cmreg_T) {
    int rhs1 = ctx.tau->v + ctx.tau_op->v - *ctx.cmreg_T;
    if (ctx.beta2) {
      auto b = row("thm5.11.1");
      b.hyp("T AS regular", ctx.hyp_T_as_regular, true)
          .hyp("T generated in degree 1", ctx.T_generated_deg1)
          .hyp("S -> R surjective with matching generator space",
               ctx.S_surjective_onto_R && ctx.S_R_same_gen_counts);
      b.certified_input(ctx.tau->certified && ctx.tau_op->certified);
      b.leq("beta_2(R) <= tau + tau_op - CMreg(T)", ctx.beta2->v, rhs1);
      if (ctx.cmreg_S) {
        auto b2 = row("thm5.11.1b");
        b2.hyp("T AS regular", ctx.hyp_T_as_regular, true)
            .hyp("S noetherian AS regular", ctx.hyp_S_as_regular, true)
            .hyp("S -> R surjective with matching generator space",
                 ctx.S_surjective_onto_R && ctx.S_R_same_gen_counts);
        b2.certified_input(false);
        b2.leq("beta_2(R) <= 2 - 2 CMreg(S) + CMreg(T)", ctx.beta2->v,
               2 - 2 * *ctx.cmreg_S + *ctx.cmreg_T);
      }
    }
    if (has(ctx.tS_R, 1)) {
      auto b = row("thm5.11.2");
      b.hyp("T AS regular", ctx.hyp_T_as_regular, true)
          .hyp("T generated in degree 1", ctx.T_generated_deg1)
          .hyp("S -> R surjective with matching generator space",
               ctx.S_surjective_onto_R && ctx.S_R_same_gen_counts)
          .hyp("Tor^S_1(k,R) (x)_R k iso (normal kernel or asserted)",
               ctx.tor1_condition, true);
      b.certified_input(false);
      b.leq("t^S_1(R) <= tau + tau_op - CMreg(T)", at(ctx.tS_R, 1), rhs1);
    }
  }

  // --- pro1.8(1): (h_T/h_R)|_{t=1} = dim H ---
  if (ctx.ratio_at_1 && ctx.dimH) {
    auto b = row("pro1.8.1");
    b.hyp("A noetherian domain", ctx.hyp_T_domain && ctx.hyp_T_noetherian,
          true)
        .hyp("A#H prime", ctx.hyp_smash_prime, true)
        .hyp("series rational (verified to N only)", true, true);
    b.certified_input(false);
    b.equality("(h_A / h_{A^H})|_{t=1} = dim H", *ctx.ratio_at_1,
               Rat(*ctx.dimH));
  }
  // --- pro1.8(3): product of generator degrees = dim H ---
  if (ctx.shape_T && ctx.shape_R && ctx.dimH) {
    bool all_ones = true;
    for (int b_ : *ctx.shape_T)
      if (b_ != 1) all_ones = false;
    if (all_ones && ctx.shape_R->size() == ctx.shape_T->size()) {
      Rat prod(1);
      for (int b_ : *ctx.shape_R) prod *= b_;
      auto b = row("pro1.8.3");
      b.hyp("h_A = 1/(1-t)^n and h_{A^H} = 1/prod(1-t^{b_i})", true)
          .hyp("A#H prime, A noetherian domain",
               ctx.hyp_smash_prime && ctx.hyp_T_domain && ctx.hyp_T_noetherian,
               true);
      b.certified_input(false);
      b.equality("prod b_i = dim H", prod, Rat(*ctx.dimH));
    }
  }

  // Question 0.4 raw data.
  if (ctx.dimH) rep.data.push_back({"dim H", std::to_string(*ctx.dimH)});
  if (ctx.gldim_T)
    rep.data.push_back({"gldim T", std::to_string(*ctx.gldim_T)});
  if (ctx.cmreg_T)
    rep.data.push_back({"CMreg T", std::to_string(*ctx.cmreg_T)});
  if (ctx.a_T) rep.data.push_back({"a(T)", std::to_string(*ctx.a_T)});
  if (ctx.a_R) rep.data.push_back({"a(A^H)", std::to_string(*ctx.a_R)});
  if (ctx.tau && ctx.tau_op && ctx.tau->v != ctx.tau_op->v)
    rep.data.push_back(
        {"finding", "tau != tau^op on this fixture (Question 6.1 data)"});

  return rep;
}

}  // namespace ncinv
