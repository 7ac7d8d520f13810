#pragma once
#include <random>

#include "ncinv/action.hpp"
#include "ncinv/basis_table.hpp"
#include "ncinv/hopf.hpp"

namespace ncinv::testing {

inline NcPoly poly(const NumberField& f,
                   std::initializer_list<std::pair<int, Word>> terms) {
  NcPoly p;
  for (const auto& [c, w] : terms) p.terms.push_back({f.from_rat(Rat(c)), w});
  return p;
}

// k<x,y>, deg 1.
inline AlgebraPresentation free2() {
  AlgebraPresentation p;
  p.field = NumberField::rationals();
  p.gens = {{"x", 1}, {"y", 1}};
  return p;
}

// k_{-1}[x,y]: xy + yx = 0.
inline AlgebraPresentation skew_minus1() {
  AlgebraPresentation p = free2();
  p.relations = {poly(p.field, {{1, {0, 1}}, {1, {1, 0}}})};
  p.asserts.as_regular = true;
  p.asserts.gldim = 2;
  p.asserts.is_domain = true;
  p.asserts.noetherian = true;
  p.asserts.minus_one_skew = 2;
  return p;
}

// Quantum plane k_q[x,y]: yx = q xy, i.e. relation yx - q xy.
inline AlgebraPresentation quantum_plane(const Rat& q) {
  AlgebraPresentation p = free2();
  NcPoly r;
  r.terms.push_back({p.field.one(), {1, 0}});
  r.terms.push_back({p.field.from_rat(-q), {0, 1}});
  p.relations = {r};
  p.asserts.as_regular = true;
  p.asserts.gldim = 2;
  p.asserts.is_domain = true;
  p.asserts.noetherian = true;
  return p;
}

// Down-up A(0,1): x^2 y = y x^2, x y^2 = y^2 x.
inline AlgebraPresentation down_up_01() {
  AlgebraPresentation p = free2();
  p.relations = {poly(p.field, {{1, {0, 0, 1}}, {-1, {1, 0, 0}}}),
                 poly(p.field, {{1, {0, 1, 1}}, {-1, {1, 1, 0}}})};
  p.asserts.as_regular = true;
  p.asserts.gldim = 3;
  p.asserts.is_domain = true;
  p.asserts.noetherian = true;
  return p;
}

// k[x].
inline AlgebraPresentation kx() {
  AlgebraPresentation p;
  p.field = NumberField::rationals();
  p.gens = {{"x", 1}};
  return p;
}

// k[x,y] commutative.
inline AlgebraPresentation kxy() {
  AlgebraPresentation p = free2();
  p.relations = {poly(p.field, {{1, {0, 1}}, {-1, {1, 0}}})};
  return p;
}

// diag/sign matrices on the generator space.
inline Mat diag_matrix(const NumberField& f, std::vector<Scalar> diag) {
  int n = static_cast<int>(diag.size());
  Mat m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = diag[i];
  return m;
}

inline Mat sign_x_matrix(const NumberField& f) {
  return diag_matrix(f, {f.neg(f.one()), f.one()});
}

inline Mat swap_matrix(const NumberField& f) {
  Mat m(2, 2, f);
  m.at(0, 1) = f.one();
  m.at(1, 0) = f.one();
  return m;
}

// Kac-Palyutkin 8-dimensional Hopf algebra, basis
// {1, x, y, w=xy, z, xz, yz, wz}; sigma swaps x and y on the group part.
inline HopfData kac_palyutkin8() {
  NumberField f = NumberField::rationals();
  HopfData h;
  h.field = f;
  h.dim = 8;
  h.labels = {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"};
  // Klein group part: indices 0..3 with multiplication table of (Z/2)^2.
  auto gmul = [](int a, int b) { return a ^ b; };
  auto sigma = [](int g) {  // swap x <-> y, fix 1 and xy
    if (g == 1) return 2;
    if (g == 2) return 1;
    return g;
  };
  auto unit_vec = [&](int i) {
    Vec v(8, f.zero());
    v[i] = f.one();
    return v;
  };
  // z^2 = (1 + x + y - xy)/2, so (g z)(g' z) = g sigma(g') z^2.
  auto zsq_times = [&](int g) {
    Vec v(8, f.zero());
    Rat half(1, 2);
    v[gmul(g, 0)] = f.add(v[gmul(g, 0)], f.from_rat(half));
    v[gmul(g, 1)] = f.add(v[gmul(g, 1)], f.from_rat(half));
    v[gmul(g, 2)] = f.add(v[gmul(g, 2)], f.from_rat(half));
    v[gmul(g, 3)] = f.add(v[gmul(g, 3)], f.from_rat(-half));
    return v;
  };
  h.mult.assign(8, std::vector<Vec>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      bool iz = i >= 4, jz = j >= 4;
      int gi = i % 4, gj = j % 4;
      if (!iz && !jz)
        h.mult[i][j] = unit_vec(gmul(gi, gj));
      else if (!iz && jz)
        h.mult[i][j] = unit_vec(4 + gmul(gi, gj));
      else if (iz && !jz)
        h.mult[i][j] = unit_vec(4 + gmul(gi, sigma(gj)));
      else
        h.mult[i][j] = zsq_times(gmul(gi, sigma(gj)));
    }
  h.coprod.resize(8);
  for (int g = 0; g < 4; ++g) h.coprod[g] = {{f.one(), g, g}};
  // Delta(gz) = 1/2 (gz (x) gz + gz (x) gxz + gyz (x) gz - gyz (x) gxz).
  for (int g = 0; g < 4; ++g) {
    Scalar half = f.from_rat(Rat(1, 2));
    Scalar mhalf = f.from_rat(Rat(-1, 2));
    int gz = 4 + g, gxz = 4 + gmul(g, 1), gyz = 4 + gmul(g, 2);
    h.coprod[gz] = {{half, gz, gz},
                    {half, gz, gxz},
                    {half, gyz, gz},
                    {mhalf, gyz, gxz}};
  }
  h.counit = Vec(8, f.one());
  h.antipode.resize(8);
  for (int g = 0; g < 4; ++g) h.antipode[g] = unit_vec(g);
  for (int g = 0; g < 4; ++g) h.antipode[4 + g] = unit_vec(4 + sigma(g));
  h.unit = unit_vec(0);
  h.integral = Vec(8, f.from_rat(Rat(1, 8)));
  return h;
}

// T = k<u,v>/(u^2 - v^2) with the standard H8 action: x = diag(-1,1),
// y = diag(1,-1), z swaps u and v; group part acts through these.
inline AlgebraPresentation h8_carrier() {
  AlgebraPresentation p;
  p.field = NumberField::rationals();
  p.gens = {{"u", 1}, {"v", 1}};
  p.relations = {poly(p.field, {{1, {0, 0}}, {-1, {1, 1}}})};
  p.asserts.as_regular = true;
  p.asserts.gldim = 2;
  p.asserts.is_domain = true;
  p.asserts.noetherian = true;
  return p;
}

inline std::vector<Mat> h8_action_matrices() {
  NumberField f = NumberField::rationals();
  Mat mx = diag_matrix(f, {f.neg(f.one()), f.one()});
  Mat my = diag_matrix(f, {f.one(), f.neg(f.one())});
  Mat mz = swap_matrix(f);
  Mat id = diag_matrix(f, {f.one(), f.one()});
  auto mul = [&](const Mat& a, const Mat& b) {
    Mat out(2, 2, f);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Scalar acc = f.zero();
        for (int k = 0; k < 2; ++k) {
          Scalar t = f.mul(a.at(i, k), b.at(k, j));
          f.add_in_place(acc, t);
        }
        out.at(i, j) = acc;
      }
    return out;
  };
  Mat mw = mul(mx, my);
  return {id, mx, my, mw, mz, mul(mx, mz), mul(my, mz), mul(mw, mz)};
}

// Independent oracle: dim A_d = #words - rank of the padded-relation span,
// computed in the full word space without the candidate compression.
inline std::vector<int> brute_force_dims(const AlgebraPresentation& p, int N,
                                         std::size_t cap = 1u << 18) {
  const NumberField& f = p.field;
  std::vector<int> dims;
  for (int d = 0; d <= N; ++d) {
    auto words = words_of_degree(d, p.gens, cap);
    std::map<Word, int> index;
    for (size_t i = 0; i < words.size(); ++i) index[words[i]] = (int)i;
    std::vector<Vec> rows;
    for (const auto& rel : p.relations) {
      int e = p.poly_degree(rel);
      if (e > d) continue;
      for (int i = 0; i + e <= d; ++i) {
        for (const auto& u : words_of_degree(i, p.gens, cap)) {
          for (const auto& v : words_of_degree(d - e - i, p.gens, cap)) {
            Vec row(words.size(), f.zero());
            for (const auto& t : rel.terms) {
              Word w = word_concat(word_concat(u, t.word), v);
              f.add_in_place(row[index.at(w)], t.coeff);
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
    if (rows.empty()) {
      dims.push_back(static_cast<int>(words.size()));
      continue;
    }
    Mat m(static_cast<int>(rows.size()), static_cast<int>(words.size()), f);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    RrefResult rr = rref_serial(m, f);
    dims.push_back(static_cast<int>(words.size()) - rr.rank);
  }
  return dims;
}

inline Word random_word(std::mt19937_64& rng, int len, int ngens) {
  Word w(len);
  for (auto& g : w) g = static_cast<int>(rng() % ngens);
  return w;
}

}  // namespace ncinv::testing
