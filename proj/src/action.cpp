#include "ncinv/action.hpp"

#include "ncinv/error.hpp"

namespace ncinv {

HopfAction::HopfAction(HopfData hopf, std::vector<Mat> generator_action,
                       const BasisTable& table)
    : hopf_(std::move(hopf)),
      gen_action_(std::move(generator_action)),
      table_(&table) {
  int n = static_cast<int>(table.pres().gens.size());
  check(static_cast<int>(gen_action_.size()) == hopf_.dim, ErrorKind::Schema,
        "need one generator-action matrix per Hopf basis element");
  for (const auto& m : gen_action_) {
    check(m.rows == n && m.cols == n, ErrorKind::Schema,
          "generator-action matrix size mismatch");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (table.pres().gens[i].degree != table.pres().gens[j].degree)
          check(hopf_.field.is_zero(m.at(i, j)), ErrorKind::Schema,
                "generator-action matrix must preserve generator degrees");
  }
  cache_.resize(table.max_degree() + 1);
  for (auto& row : cache_) row.resize(hopf_.dim);
}

NcPoly HopfAction::act_free(int h, const Word& w) const {
  const NumberField& f = hopf_.field;
  NcPoly out;
  if (w.empty()) {
    if (!f.is_zero(hopf_.counit[h]))
      out.terms.push_back({hopf_.counit[h], Word{}});
    return out;
  }
  int g = w[0];
  Word tail(w.begin() + 1, w.end());
  int n = static_cast<int>(table_->pres().gens.size());
  for (const auto& ct : hopf_.coprod[h]) {
    NcPoly tail_act = act_free(ct.right, tail);
    if (tail_act.terms.empty()) continue;
    for (int i = 0; i < n; ++i) {
      const Scalar& mi = gen_action_[ct.left].at(i, g);
      if (f.is_zero(mi)) continue;
      Scalar c0 = f.mul(ct.c, mi);
      for (const auto& t : tail_act.terms) {
        Word nw;
        nw.reserve(t.word.size() + 1);
        nw.push_back(i);
        nw.insert(nw.end(), t.word.begin(), t.word.end());
        out.terms.push_back({f.mul(c0, t.coeff), std::move(nw)});
      }
    }
  }
  return out;
}

ActionReport HopfAction::validate() const {
  ActionReport rep;
  const NumberField& f = hopf_.field;
  const auto& pres = table_->pres();
  int n = static_cast<int>(pres.gens.size());
  // Module structure on the generator space: act(h_i) act(h_j) must match
  // the multiplication table, and the unit must act as the identity.
  auto madd = [&](Mat& acc, const Scalar& c, const Mat& m) {
    for (int r = 0; r < n; ++r)
      for (int cc = 0; cc < n; ++cc) {
        Scalar t = f.mul(c, m.at(r, cc));
        f.add_in_place(acc.at(r, cc), t);
      }
  };
  {
    Mat u(n, n, f);
    for (int i = 0; i < hopf_.dim; ++i)
      if (!f.is_zero(hopf_.unit[i])) madd(u, hopf_.unit[i], gen_action_[i]);
    bool ok = true;
    for (int r = 0; r < n && ok; ++r)
      for (int c = 0; c < n && ok; ++c)
        ok = f.eq(u.at(r, c), r == c ? f.one() : f.zero());
    if (!ok) {
      rep.ok = false;
      rep.failures.push_back("unit of H does not act as the identity");
    }
  }
  for (int i = 0; i < hopf_.dim; ++i)
    for (int j = 0; j < hopf_.dim; ++j) {
      Mat lhs(n, n, f);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          Scalar acc = f.zero();
          for (int k = 0; k < n; ++k) {
            Scalar t = f.mul(gen_action_[i].at(r, k), gen_action_[j].at(k, c));
            f.add_in_place(acc, t);
          }
          lhs.at(r, c) = acc;
        }
      Mat rhs(n, n, f);
      for (int k = 0; k < hopf_.dim; ++k)
        if (!f.is_zero(hopf_.mult[i][j][k]))
          madd(rhs, hopf_.mult[i][j][k], gen_action_[k]);
      bool ok = true;
      for (int r = 0; r < n && ok; ++r)
        for (int c = 0; c < n && ok; ++c) ok = f.eq(lhs.at(r, c), rhs.at(r, c));
      if (!ok) {
        rep.ok = false;
        rep.failures.push_back("module axiom fails on (" + hopf_.labels[i] +
                               ", " + hopf_.labels[j] + ")");
      }
    }
  for (int h = 0; h < hopf_.dim; ++h) {
    for (size_t r = 0; r < pres.relations.size(); ++r) {
      int d = pres.poly_degree(pres.relations[r]);
      if (d > table_->max_degree()) continue;
      NcPoly acted;
      for (const auto& t : pres.relations[r].terms) {
        NcPoly part = act_free(h, t.word);
        for (auto& pt : part.terms)
          acted.terms.push_back({f.mul(t.coeff, pt.coeff), pt.word});
      }
      Vec nf = table_->normal_form(acted, d);
      if (!vec_is_zero(nf, f)) {
        rep.ok = false;
        rep.failures.push_back("action of " + hopf_.labels[h] +
                               " does not preserve relation " +
                               std::to_string(r));
      }
    }
  }
  return rep;
}

Vec HopfAction::act_on_basis_word(int h, int d, int idx) const {
  const NumberField& f = hopf_.field;
  if (d == 0) {
    return Vec{hopf_.counit[h]};
  }
  const Word& b = table_->basis_words(d)[idx];
  int g = b[0];
  int gd = table_->pres().gens[g].degree;
  Word tail(b.begin() + 1, b.end());
  int td = d - gd;
  // The tail of a normal word is normal, by the candidate construction.
  const auto& tail_words = table_->basis_words(td);
  auto it = std::lower_bound(
      tail_words.begin(), tail_words.end(), tail,
      [&](const Word& a, const Word& bb) {
        return deglex_less(a, bb, table_->pres().gens);
      });
  check(it != tail_words.end() && *it == tail, ErrorKind::Internal,
        "basis word tail is not a basis word");
  int tail_idx = static_cast<int>(it - tail_words.begin());

  int n = static_cast<int>(table_->pres().gens.size());
  Vec out = vec_zero(table_->dim(d), f);
  for (const auto& ct : hopf_.coprod[h]) {
    const Mat& tail_mat = *cache_[td][ct.right];
    Vec tv(table_->dim(td), f.zero());
    for (int row = 0; row < tail_mat.rows; ++row) tv[row] = tail_mat.at(row, tail_idx);
    if (vec_is_zero(tv, f)) continue;
    for (int i = 0; i < n; ++i) {
      const Scalar& mi = gen_action_[ct.left].at(i, g);
      if (f.is_zero(mi)) continue;
      Vec prod = table_->mul_gen_left(i, td, tv);
      Scalar c = f.mul(ct.c, mi);
      vec_add_scaled(out, c, prod, f);
    }
  }
  return out;
}

const Mat& HopfAction::action_matrix(int h, int d) const {
  check(d >= 0 && d <= table_->max_degree(), ErrorKind::Math,
        "degree exceeds table truncation");
  std::lock_guard<std::mutex> lock(*mutex_);
  for (int dd = 0; dd <= d; ++dd) {
    for (int hh = 0; hh < hopf_.dim; ++hh) {
      if (cache_[dd][hh]) continue;
      int dim = table_->dim(dd);
      auto m = std::make_unique<Mat>(dim, dim, hopf_.field);
#ifdef NCINV_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (int col = 0; col < dim; ++col) {
        Vec image = act_on_basis_word(hh, dd, col);
        for (int row = 0; row < dim; ++row) m->at(row, col) = image[row];
      }
      cache_[dd][hh] = std::move(m);
    }
  }
  return *cache_[d][h];
}

Mat HopfAction::reynolds(int d) const {
  const NumberField& f = hopf_.field;
  int dim = table_->dim(d);
  Mat out(dim, dim, f);
  for (int h = 0; h < hopf_.dim; ++h) {
    if (f.is_zero(hopf_.integral[h])) continue;
    const Mat& m = action_matrix(h, d);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        Scalar t = f.mul(hopf_.integral[h], m.at(r, c));
        f.add_in_place(out.at(r, c), t);
      }
  }
  return out;
}

std::vector<Vec> HopfAction::invariant_basis(int d) const {
  const NumberField& f = hopf_.field;
  Mat p = reynolds(d);
  Span span(p.cols, f);
  for (int c = 0; c < p.cols; ++c) {
    Vec col(p.rows, f.zero());
    for (int r = 0; r < p.rows; ++r) col[r] = p.at(r, c);
    span.add(std::move(col));
  }
  return span.rows();
}

}  // namespace ncinv
