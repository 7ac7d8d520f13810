#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ncinv/error.hpp"

using namespace ncinv;
using namespace ncinv::testing;

TEST_CASE("dims: skew polynomial ring counts x^i y^j") {
  BasisTable t = BasisTable::build(skew_minus1(), 3);
  CHECK(t.dims() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("dims: down-up A(0,1) matches the brute-force oracle and series") {
  auto p = down_up_01();
  BasisTable t = BasisTable::build(p, 4);
  std::vector<int> expect = brute_force_dims(p, 4);
  CHECK(t.dims() == expect);
  CHECK(t.dims() == std::vector<int>{1, 2, 4, 6, 9});
}

TEST_CASE("dims: free algebra is 2^d") {
  BasisTable t = BasisTable::build(free2(), 3);
  CHECK(t.dims() == std::vector<int>{1, 2, 4, 8});
}

TEST_CASE("dims: oracle agreement on assorted presentations") {
  for (const auto& p : {skew_minus1(), kxy(), quantum_plane(Rat(2)),
                        h8_carrier()}) {
    BasisTable t = BasisTable::build(p, 6);
    CHECK(t.dims() == brute_force_dims(p, 6));
  }
}

TEST_CASE("normal forms in k_{-1}[x,y]") {
  auto p = skew_minus1();
  BasisTable t = BasisTable::build(p, 4);
  // xy + yx is a relation.
  CHECK(vec_is_zero(t.normal_form(poly(p.field, {{1, {0, 1}}, {1, {1, 0}}}), 2),
                    p.field));
  // yx reduces to -(xy); xy is the chosen basis word.
  Vec nf = t.normal_form_word({1, 0});
  int xy = t.basis_index(2, {0, 1});
  REQUIRE(xy >= 0);
  CHECK(t.basis_index(2, {1, 0}) == -1);
  CHECK(p.field.eq(nf[xy], p.field.from_rat(Rat(-1))));
}

TEST_CASE("normal forms in down-up: x^2 y - y x^2 = 0") {
  auto p = down_up_01();
  BasisTable t = BasisTable::build(p, 4);
  CHECK(vec_is_zero(
      t.normal_form(poly(p.field, {{1, {0, 0, 1}}, {-1, {1, 0, 0}}}), 3),
      p.field));
}

TEST_CASE("multiply: defining relations and unit") {
  auto p = skew_minus1();
  BasisTable t = BasisTable::build(p, 4);
  Vec x = t.normal_form_word({0}), y = t.normal_form_word({1});
  Vec xy = t.mul(1, x, 1, y), yx = t.mul(1, y, 1, x);
  for (size_t i = 0; i < xy.size(); ++i)
    CHECK(p.field.eq(xy[i], p.field.neg(yx[i])));

  auto q = down_up_01();
  BasisTable tq = BasisTable::build(q, 4);
  Vec x2 = tq.normal_form_word({0, 0});
  Vec yq = tq.normal_form_word({1});
  Vec a = tq.mul(1, yq, 2, x2), b = tq.mul(2, x2, 1, yq);
  for (size_t i = 0; i < a.size(); ++i) CHECK(q.field.eq(a[i], b[i]));

  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 20; ++iter) {
    int d = 1 + static_cast<int>(rng() % 3);
    int i = static_cast<int>(rng() % tq.dim(d));
    Vec w = tq.unit_vec(d, i);
    Vec prod = tq.mul(0, tq.unit_vec(0, 0), d, w);
    for (size_t k = 0; k < w.size(); ++k) CHECK(q.field.eq(prod[k], w[k]));
  }
}

TEST_CASE("relation-ideal closure: u r v reduces to zero") {
  std::mt19937_64 rng(42);
  int cases = 0;
  for (const auto& p : {skew_minus1(), down_up_01(), h8_carrier()}) {
    BasisTable t = BasisTable::build(p, 7);
    for (const auto& rel : p.relations) {
      int e = p.poly_degree(rel);
      for (int iter = 0; iter < 40; ++iter) {
        int lu = static_cast<int>(rng() % 3);
        int lv = static_cast<int>(rng() % 3);
        if (e + lu + lv > 7) continue;
        Word u = random_word(rng, lu, 2), v = random_word(rng, lv, 2);
        NcPoly padded = poly_mul_words(u, rel, v);
        CHECK(vec_is_zero(t.normal_form(padded, e + lu + lv), p.field));
        ++cases;
      }
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("associativity on random basis-word triples") {
  auto p = down_up_01();
  BasisTable t = BasisTable::build(p, 8);
  std::mt19937_64 rng(11);
  int cases = 0;
  while (cases < 120) {
    int d1 = 1 + static_cast<int>(rng() % 3);
    int d2 = 1 + static_cast<int>(rng() % 3);
    int d3 = 1 + static_cast<int>(rng() % 3);
    if (d1 + d2 + d3 > 8) continue;
    Vec a = t.unit_vec(d1, static_cast<int>(rng() % t.dim(d1)));
    Vec b = t.unit_vec(d2, static_cast<int>(rng() % t.dim(d2)));
    Vec c = t.unit_vec(d3, static_cast<int>(rng() % t.dim(d3)));
    Vec ab_c = t.mul(d1 + d2, t.mul(d1, a, d2, b), d3, c);
    Vec a_bc = t.mul(d1, a, d2 + d3, t.mul(d2, b, d3, c));
    for (size_t i = 0; i < ab_c.size(); ++i)
      CHECK(p.field.eq(ab_c[i], a_bc[i]));
    ++cases;
  }
}

TEST_CASE("deglex determinism: two builds agree") {
  auto p = down_up_01();
  BasisTable t1 = BasisTable::build(p, 6);
  BasisTable t2 = BasisTable::build(p, 6);
  for (int d = 0; d <= 6; ++d) {
    REQUIRE(t1.dim(d) == t2.dim(d));
    CHECK(t1.basis_words(d) == t2.basis_words(d));
  }
}

TEST_CASE("quotient truncation dims") {
  BasisTable t = BasisTable::build(quotient_truncation(free2(), 3, 1u << 16), 5);
  CHECK(t.dims() == std::vector<int>{1, 2, 4, 0, 0, 0});
  BasisTable t2 = BasisTable::build(quotient_truncation(kx(), 2, 1u << 16), 4);
  CHECK(t2.dims() == std::vector<int>{1, 1, 0, 0, 0});
}

TEST_CASE("enveloping algebra of the truncated free Lie algebra agrees with "
          "the truncated free algebra below the truncation") {
  // Relations: all iterated commutators [a1,[a2,[a3,a4]]] of length 4.
  AlgebraPresentation p = free2();
  const NumberField& f = p.field;
  std::function<NcPoly(const Word&)> bracket = [&](const Word& w) -> NcPoly {
    NcPoly out;
    if (w.size() == 1) {
      out.terms.push_back({f.one(), {w[0]}});
      return out;
    }
    Word rest(w.begin() + 1, w.end());
    NcPoly inner = bracket(rest);
    for (const auto& t : inner.terms) {
      Word left = t.word;
      left.insert(left.begin(), w[0]);
      out.terms.push_back({t.coeff, left});
      Word right = t.word;
      right.push_back(w[0]);
      out.terms.push_back({f.neg(t.coeff), right});
    }
    return out;
  };
  for (int mask = 0; mask < 16; ++mask) {
    Word w = {(mask >> 3) & 1, (mask >> 2) & 1, (mask >> 1) & 1, mask & 1};
    p.relations.push_back(bracket(w));
  }
  BasisTable t = BasisTable::build(p, 5);
  CHECK(t.dim(0) == 1);
  CHECK(t.dim(1) == 2);
  CHECK(t.dim(2) == 4);
  CHECK(t.dim(3) == 8);
  // above the Lie truncation the enveloping algebra is smaller
  CHECK(t.dim(4) < 16);
}

TEST_CASE("phi_N certifies the relation degree bound") {
  auto kxy_pres = kxy();
  BasisTable t = BasisTable::build(kxy_pres, 5);
  auto phi2 = phi_N(kxy_pres, 2, t.dims());
  CHECK(phi2.all_equal);

  auto du = down_up_01();
  BasisTable tdu = BasisTable::build(du, 6);
  std::vector<int> du_dims = tdu.dims();
  auto phi2du = phi_N(du, 2,
                      std::vector<int>(du_dims.begin(), du_dims.begin() + 5));
  CHECK_FALSE(phi2du.all_equal);
  CHECK(phi2du.dims == std::vector<int>{1, 2, 4, 8, 16});
  CHECK(phi2du.equal == std::vector<bool>{true, true, true, false, false});
  auto phi3du = phi_N(du, 3, du_dims);
  CHECK(phi3du.all_equal);
}

TEST_CASE("phi_N rejects non-minimal generating spaces") {
  // z = xy is redundant: relation z - xy in degree 2.
  AlgebraPresentation p;
  p.field = NumberField::rationals();
  p.gens = {{"x", 1}, {"y", 1}, {"z", 2}};
  p.relations = {poly(p.field, {{1, {2}}, {-1, {0, 1}}})};
  CHECK_THROWS_AS(phi_N(p, 2, {1, 2, 4}), Error);
}

TEST_CASE("word cap trips") {
  CHECK_THROWS_AS(BasisTable::build(free2(), 12, 1000), Error);
}
