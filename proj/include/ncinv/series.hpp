#pragma once
#include <optional>
#include <string>
#include <vector>

#include "ncinv/qpoly.hpp"

namespace ncinv {

// Rational-function fit of a dimension sequence. The fit is conjectural: the
// expansion is verified against the observed dims through verified_to and no
// further; callers must label it accordingly.
struct HilbertSeries {
  QPoly num, den;  // coprime, den(0) = 1
  int verified_to = -1;
  std::string hint_desc;

  int deg_t() const { return qp_deg(num) - qp_deg(den); }  // a-invariant
  int pole_order_at_1() const;
};

struct DenominatorHint {
  std::vector<int> product;  // prod (1 - t^a) when non-empty
  QPoly poly;                // explicit polynomial otherwise
  std::string desc;

  QPoly expand() const;
};

// Numerator by convolution against the hint denominator; the top `guard`
// coefficients must vanish or the fit is rejected.
std::optional<HilbertSeries> fit_series(const std::vector<int>& dims,
                                        const DenominatorHint& hint,
                                        int guard = 3);

// First hint that fits, in order.
std::optional<HilbertSeries> fit_series_any(
    const std::vector<int>& dims, const std::vector<DenominatorHint>& hints,
    int guard = 3);

// (p/q)|_{t=1} after cancelling common (1-t) powers; throws ErrorKind::Math
// on a residual pole.
Rat ratio_at_one(const HilbertSeries& p, const HilbertSeries& q);

// gldim + deg_t h, the CM regularity of an AS regular algebra.
int cmreg_asregular(int gldim, const HilbertSeries& s);

// The exponent multiset {b_i} when the series is exactly 1/prod (1-t^b_i).
std::optional<std::vector<int>> inverse_product_shape(const HilbertSeries& s);

}  // namespace ncinv
