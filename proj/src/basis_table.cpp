#include "ncinv/basis_table.hpp"

#include <algorithm>

#include "ncinv/error.hpp"

namespace ncinv {

BasisTable BasisTable::build(AlgebraPresentation pres, int max_degree,
                             std::size_t word_cap) {
  pres.validate();
  check(max_degree >= 0, ErrorKind::Schema, "max degree must be >= 0");
  BasisTable t;
  t.pres_ = std::move(pres);
  t.max_degree_ = max_degree;
  const auto& gens = t.pres_.gens;
  const NumberField& f = t.field();

  t.deg_.resize(max_degree + 1);
  t.deg_[0].basis = {Word{}};
  t.deg_[0].basis_index[Word{}] = 0;

  struct Rel {
    int degree;
    NcPoly poly;
  };
  std::vector<Rel> rels;
  for (const auto& r : t.pres_.relations)
    rels.push_back({t.pres_.poly_degree(r), r});

  for (int d = 1; d <= max_degree; ++d) {
    auto& dd = t.deg_[d];
    // Candidate words g * b with b normal of degree d - deg(g). Every word is
    // congruent to a combination of candidates by rewriting its tail, so the
    // degree-d slice is candidate-span modulo rewritten left-aligned relation
    // multiples.
    std::vector<Word> cand;
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      int rest = d - gens[g].degree;
      if (rest < 0) continue;
      for (const auto& b : t.deg_[rest].basis) {
        Word w;
        w.reserve(b.size() + 1);
        w.push_back(g);
        w.insert(w.end(), b.begin(), b.end());
        cand.push_back(std::move(w));
      }
    }
    check(cand.size() <= word_cap, ErrorKind::Caps,
          "words-per-degree cap exceeded at degree " + std::to_string(d));
    // Descending deglex: the leftmost pivot of a row is its largest word.
    std::sort(cand.begin(), cand.end(), [&](const Word& a, const Word& b) {
      return deglex_less(b, a, gens);
    });
    std::map<Word, int> cand_index;
    for (size_t i = 0; i < cand.size(); ++i) cand_index[cand[i]] = static_cast<int>(i);

    // Rows: phi(r * v) for relations r and normal words v.
    std::vector<Vec> rows;
    for (const auto& rel : rels) {
      if (rel.degree > d) continue;
      int vd = d - rel.degree;
      for (const auto& v : t.deg_[vd].basis) {
        Vec row = vec_zero(static_cast<int>(cand.size()), f);
        for (const auto& term : rel.poly.terms) {
          if (f.is_zero(term.coeff)) continue;
          Word u = word_concat(term.word, v);
          int g0 = u[0];
          Word tail(u.begin() + 1, u.end());
          int td = d - gens[g0].degree;
          Vec tv = t.normal_form_word(tail);
          for (int j = 0; j < static_cast<int>(tv.size()); ++j) {
            if (f.is_zero(tv[j])) continue;
            Word cw;
            cw.reserve(t.deg_[td].basis[j].size() + 1);
            cw.push_back(g0);
            const Word& bj = t.deg_[td].basis[j];
            cw.insert(cw.end(), bj.begin(), bj.end());
            auto it = cand_index.find(cw);
            check(it != cand_index.end(), ErrorKind::Internal,
                  "candidate lookup failed");
            Scalar add = f.mul(term.coeff, tv[j]);
            f.add_in_place(row[it->second], add);
          }
        }
        if (!vec_is_zero(row, f)) rows.push_back(std::move(row));
      }
    }

    if (rows.empty()) {
      dd.basis = cand;
      std::sort(dd.basis.begin(), dd.basis.end(),
                [&](const Word& a, const Word& b) { return deglex_less(a, b, gens); });
      for (size_t i = 0; i < dd.basis.size(); ++i)
        dd.basis_index[dd.basis[i]] = static_cast<int>(i);
      continue;
    }

    Mat m(static_cast<int>(rows.size()), static_cast<int>(cand.size()), f);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    RrefResult rr = rref(m, f);

    // Non-pivot candidates are the normal monomials.
    std::vector<int> basis_cols;
    for (int c = 0; c < m.cols; ++c)
      if (rr.col_pivot_row[c] < 0) basis_cols.push_back(c);
    dd.basis.reserve(basis_cols.size());
    for (int c : basis_cols) dd.basis.push_back(cand[c]);
    std::sort(dd.basis.begin(), dd.basis.end(),
              [&](const Word& a, const Word& b) { return deglex_less(a, b, gens); });
    for (size_t i = 0; i < dd.basis.size(); ++i)
      dd.basis_index[dd.basis[i]] = static_cast<int>(i);

    for (int p = 0; p < rr.rank; ++p) {
      int pc = rr.pivot_cols[p];
      Vec red = vec_zero(static_cast<int>(dd.basis.size()), f);
      for (int c : basis_cols) {
        if (f.is_zero(m.at(p, c))) continue;
        int idx = dd.basis_index.at(cand[c]);
        red[idx] = f.neg(m.at(p, c));
      }
      dd.reduction[cand[pc]] = std::move(red);
    }
  }
  return t;
}

int BasisTable::dim(int d) const {
  if (d < 0) return 0;
  check(d <= max_degree_, ErrorKind::Math,
        "degree exceeds table truncation (" + std::to_string(d) + " > " +
            std::to_string(max_degree_) + ")");
  return static_cast<int>(deg_[d].basis.size());
}

std::vector<int> BasisTable::dims() const {
  std::vector<int> out;
  for (int d = 0; d <= max_degree_; ++d) out.push_back(dim(d));
  return out;
}

const std::vector<Word>& BasisTable::basis_words(int d) const {
  check(d >= 0 && d <= max_degree_, ErrorKind::Math,
        "degree exceeds table truncation");
  return deg_[d].basis;
}

std::string BasisTable::basis_word_str(int d, int i) const {
  return word_str(deg_[d].basis[i], pres_.gens);
}

int BasisTable::basis_index(int d, const Word& w) const {
  check(d >= 0 && d <= max_degree_, ErrorKind::Math,
        "degree exceeds table truncation");
  auto it = deg_[d].basis_index.find(w);
  return it == deg_[d].basis_index.end() ? -1 : it->second;
}

Vec BasisTable::unit_vec(int d, int i) const {
  Vec v = vec_zero(dim(d), field());
  v[i] = field().one();
  return v;
}

Vec BasisTable::candidate_vec(int gen, int tail_degree, int tail_index) const {
  const NumberField& f = field();
  int d = tail_degree + pres_.gens[gen].degree;
  Word w;
  const Word& b = deg_[tail_degree].basis[tail_index];
  w.reserve(b.size() + 1);
  w.push_back(gen);
  w.insert(w.end(), b.begin(), b.end());
  const auto& dd = deg_[d];
  auto bi = dd.basis_index.find(w);
  if (bi != dd.basis_index.end()) {
    Vec v = vec_zero(static_cast<int>(dd.basis.size()), f);
    v[bi->second] = f.one();
    return v;
  }
  auto ri = dd.reduction.find(w);
  check(ri != dd.reduction.end(), ErrorKind::Internal,
        "candidate word missing from reduction table");
  return ri->second;
}

Vec BasisTable::mul_gen_left(int gen, int d, const Vec& v) const {
  const NumberField& f = field();
  int out_d = d + pres_.gens[gen].degree;
  check(out_d <= max_degree_, ErrorKind::Math, "truncation exceeded in product");
  Vec out = vec_zero(dim(out_d), f);
  for (int j = 0; j < static_cast<int>(v.size()); ++j) {
    if (f.is_zero(v[j])) continue;
    Vec cv = candidate_vec(gen, d, j);
    vec_add_scaled(out, v[j], cv, f);
  }
  return out;
}

Vec BasisTable::normal_form_word(const Word& w) const {
  const NumberField& f = field();
  int d = word_degree(w, pres_.gens);
  check(d <= max_degree_, ErrorKind::Math, "degree exceeds table truncation");
  if (w.empty()) return Vec{f.one()};
  {
    std::lock_guard<std::mutex> lock(*nf_mutex_);
    auto it = nf_cache_.find(w);
    if (it != nf_cache_.end()) return it->second;
  }
  Word tail(w.begin() + 1, w.end());
  Vec tv = normal_form_word(tail);
  Vec out = mul_gen_left(w[0], d - pres_.gens[w[0]].degree, tv);
  {
    std::lock_guard<std::mutex> lock(*nf_mutex_);
    nf_cache_.emplace(w, out);
  }
  return out;
}

Vec BasisTable::normal_form(const NcPoly& e, int degree) const {
  const NumberField& f = field();
  Vec out = vec_zero(dim(degree), f);
  for (const auto& t : e.terms) {
    if (f.is_zero(t.coeff)) continue;
    check(word_degree(t.word, pres_.gens) == degree, ErrorKind::Math,
          "normal_form: element not homogeneous of the stated degree");
    Vec nf = normal_form_word(t.word);
    vec_add_scaled(out, t.coeff, nf, f);
  }
  return out;
}

Vec BasisTable::mul(int d1, const Vec& v1, int d2, const Vec& v2) const {
  const NumberField& f = field();
  check(d1 + d2 <= max_degree_, ErrorKind::Math, "truncation exceeded in product");
  Vec out = vec_zero(dim(d1 + d2), f);
  for (int i = 0; i < static_cast<int>(v1.size()); ++i) {
    if (f.is_zero(v1[i])) continue;
    // Fold the letters of the left word onto v2, right to left.
    const Word& bw = deg_[d1].basis[i];
    Vec cur = v2;
    int cur_d = d2;
    for (auto it = bw.rbegin(); it != bw.rend(); ++it) {
      cur = mul_gen_left(*it, cur_d, cur);
      cur_d += pres_.gens[*it].degree;
    }
    vec_add_scaled(out, v1[i], cur, f);
  }
  return out;
}

void verify_minimal_generators(const BasisTable& t) {
  const NumberField& f = t.field();
  int top = 0;
  for (const auto& g : t.pres().gens) top = std::max(top, g.degree);
  check(top <= t.max_degree(), ErrorKind::Math,
        "table too short to verify generator minimality");
  for (int e = 1; e <= top; ++e) {
    Span products(t.dim(e), f);
    for (int a = 1; a < e; ++a) {
      int b = e - a;
      if (b < 1) continue;
      for (int i = 0; i < t.dim(a); ++i)
        for (int j = 0; j < t.dim(b); ++j)
          products.add(t.mul(a, t.unit_vec(a, i), b, t.unit_vec(b, j)));
    }
    int declared = 0;
    for (const auto& g : t.pres().gens)
      if (g.degree == e) ++declared;
    int needed = t.dim(e) - products.dim();
    check(declared == needed, ErrorKind::Schema,
          "presentation generators not minimal at degree " + std::to_string(e));
  }
}

PhiResult phi_N(const AlgebraPresentation& pres, int N,
                const std::vector<int>& reference_dims, std::size_t word_cap) {
  int check_deg = static_cast<int>(reference_dims.size()) - 1;
  check(check_deg >= 0, ErrorKind::Schema, "phi_N: empty reference dims");
  {
    BasisTable full = BasisTable::build(pres, std::max(N, 1), word_cap);
    verify_minimal_generators(full);
  }
  PhiResult out;
  out.presentation = relations_up_to(pres, N);
  BasisTable t = BasisTable::build(out.presentation, check_deg, word_cap);
  out.dims = t.dims();
  out.equal.resize(check_deg + 1);
  for (int d = 0; d <= check_deg; ++d) {
    out.equal[d] = (out.dims[d] == reference_dims[d]);
    if (!out.equal[d]) out.all_equal = false;
  }
  return out;
}

}  // namespace ncinv
