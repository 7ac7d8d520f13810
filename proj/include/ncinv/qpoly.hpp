#pragma once
#include <gmpxx.h>

#include <vector>

namespace ncinv {

using Rat = mpq_class;
using Int = mpz_class;

// Dense univariate polynomials over Q, coefficient of t^i at index i.
// The zero polynomial is the empty vector; all results are trimmed.
using QPoly = std::vector<Rat>;

int qp_deg(const QPoly& p);  // -1 for zero
void qp_trim(QPoly& p);
QPoly qp_const(const Rat& r);
QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_mul(const QPoly& a, const QPoly& b);
QPoly qp_scale(const QPoly& a, const Rat& r);
// Quotient and remainder; b must be nonzero.
void qp_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
bool qp_divides(const QPoly& b, const QPoly& a);  // b | a exactly
QPoly qp_gcd(QPoly a, QPoly b);                   // monic gcd
Rat qp_eval(const QPoly& p, const Rat& x);
bool qp_is_zero(const QPoly& p);
bool qp_eq(const QPoly& a, const QPoly& b);
// 1 - t^k
QPoly qp_one_minus_tk(int k);
// Truncated power series coefficients of num/den up to degree n (den[0] != 0).
std::vector<Rat> qp_series(const QPoly& num, const QPoly& den, int n);

}  // namespace ncinv
