// Compares the serial reference row-reduction kernel against the
// OpenMP-parallel one on random exact-rational matrices, and times a
// basis-table build. Outputs are checked for equality as it goes.
#include <chrono>
#include <iostream>
#include <random>

#include "ncinv/basis_table.hpp"
#include "ncinv/linalg.hpp"

using namespace ncinv;

namespace {

Mat random_matrix(int rows, int cols, const NumberField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Mat m(rows, cols, f);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      Rat q(num(rng), den(rng));
      q.canonicalize();
      m.at(r, c) = f.from_rat(q);
    }
  return m;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

bool mats_equal(const Mat& a, const Mat& b, const NumberField& f) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (size_t i = 0; i < a.a.size(); ++i)
    if (!f.eq(a.a[i], b.a[i])) return false;
  return true;
}

AlgebraPresentation down_up() {
  AlgebraPresentation p;
  p.field = NumberField::rationals();
  p.gens = {{"x", 1}, {"y", 1}};
  const Scalar one = p.field.one(), neg = p.field.neg(one);
  p.relations.resize(2);
  p.relations[0].terms = {{one, {0, 0, 1}}, {neg, {1, 0, 0}}};
  p.relations[1].terms = {{one, {0, 1, 1}}, {neg, {1, 1, 0}}};
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  int size = argc > 1 ? std::atoi(argv[1]) : 72;
  int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  NumberField f = NumberField::rationals();
  std::mt19937_64 rng(12345);

  std::cout << "rref kernels on " << size << "x" << (size + size / 2)
            << " rational matrices, " << reps << " reps\n";
  double serial_total = 0, parallel_total = 0;
  for (int r = 0; r < reps; ++r) {
    Mat base = random_matrix(size, size + size / 2, f, rng);
    Mat a = base, b = base;
    auto t0 = std::chrono::steady_clock::now();
    auto ra = rref_serial(a, f);
    double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto rb = rref_parallel(b, f);
    double tp = ms_since(t0);
    serial_total += ts;
    parallel_total += tp;
    if (ra.rank != rb.rank || !mats_equal(a, b, f)) {
      std::cerr << "kernel outputs differ\n";
      return 1;
    }
    std::cout << "  rep " << r << ": serial " << ts << " ms, parallel " << tp
              << " ms\n";
  }
  std::cout << "serial total   " << serial_total << " ms\n"
            << "parallel total " << parallel_total << " ms\n"
            << "speedup        " << serial_total / parallel_total << "x\n";

  auto t0 = std::chrono::steady_clock::now();
  BasisTable t = BasisTable::build(down_up(), 10);
  std::cout << "basis table (down-up, N=10) " << ms_since(t0) << " ms, dims:";
  for (int d = 0; d <= 10; ++d) std::cout << " " << t.dim(d);
  std::cout << "\n";
  return 0;
}
