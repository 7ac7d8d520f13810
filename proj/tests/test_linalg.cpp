#include <doctest.h>

#include <random>

#include "ncinv/linalg.hpp"

using namespace ncinv;

namespace {
Mat random_matrix(int rows, int cols, const NumberField& f,
                  std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  Mat m(rows, cols, f);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = f.from_rat(Rat(num(rng)));
  return m;
}
}  // namespace

TEST_CASE("serial and parallel rref agree exactly") {
  NumberField f = NumberField::rationals();
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 12; ++iter) {
    Mat base = random_matrix(20 + iter, 25, f, rng);
    Mat a = base, b = base;
    RrefResult ra = rref_serial(a, f);
    RrefResult rb = rref_parallel(b, f);
    CHECK(ra.rank == rb.rank);
    CHECK(ra.pivot_cols == rb.pivot_cols);
    for (size_t i = 0; i < a.a.size(); ++i) CHECK(f.eq(a.a[i], b.a[i]));
  }
}

TEST_CASE("nullspace vectors are in the kernel and independent") {
  NumberField f = NumberField::rationals();
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 10; ++iter) {
    Mat m = random_matrix(8, 14, f, rng);
    auto ns = nullspace(m, f);
    CHECK(static_cast<int>(ns.size()) >= 14 - 8);
    Span span(14, f);
    for (const auto& v : ns) {
      for (int r = 0; r < m.rows; ++r) {
        Scalar acc = f.zero();
        for (int c = 0; c < m.cols; ++c) {
          Scalar t = f.mul(m.at(r, c), v[c]);
          f.add_in_place(acc, t);
        }
        CHECK(f.is_zero(acc));
      }
      CHECK(span.add(v));
    }
    // rank + nullity
    Mat copy = m;
    RrefResult rr = rref_serial(copy, f);
    CHECK(static_cast<int>(ns.size()) == 14 - rr.rank);
  }
}

TEST_CASE("span canonical form does not depend on insertion order") {
  NumberField f = NumberField::rationals();
  std::mt19937_64 rng(3);
  std::vector<Vec> vecs;
  for (int i = 0; i < 6; ++i) {
    Vec v(10, f.zero());
    for (int j = 0; j < 10; ++j)
      v[j] = f.from_rat(Rat(static_cast<long>(rng() % 11) - 5));
    vecs.push_back(v);
  }
  Span s1(10, f), s2(10, f);
  for (const auto& v : vecs) s1.add(v);
  for (auto it = vecs.rbegin(); it != vecs.rend(); ++it) s2.add(*it);
  REQUIRE(s1.dim() == s2.dim());
  for (int i = 0; i < s1.dim(); ++i)
    for (int j = 0; j < 10; ++j) CHECK(f.eq(s1.rows()[i][j], s2.rows()[i][j]));
}

TEST_CASE("grow_complement picks earliest-pivot normalized residuals") {
  NumberField f = NumberField::rationals();
  Span inside(3, f);
  Vec a{f.one(), f.one(), f.zero()};
  inside.add(a);
  std::vector<Vec> cands;
  cands.push_back({f.from_rat(Rat(2)), f.from_rat(Rat(2)), f.zero()});  // in
  cands.push_back({f.zero(), f.from_rat(Rat(3)), f.from_rat(Rat(6))});
  auto fresh = grow_complement(inside, cands, f);
  REQUIRE(fresh.size() == 1);
  CHECK(f.eq(fresh[0][1], f.one()));
  CHECK(f.eq(fresh[0][2], f.from_rat(Rat(2))));
}
