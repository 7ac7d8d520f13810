#include "ncinv/series.hpp"

#include <sstream>

#include "ncinv/error.hpp"

namespace ncinv {

int HilbertSeries::pole_order_at_1() const {
  QPoly one_minus_t = qp_one_minus_tk(1);
  QPoly d = den;
  int order = 0;
  while (!d.empty() && qp_eval(d, Rat(1)) == 0) {
    QPoly q, r;
    qp_divmod(d, one_minus_t, q, r);
    check(r.empty(), ErrorKind::Internal, "pole order division");
    d = std::move(q);
    ++order;
  }
  return order;
}

QPoly DenominatorHint::expand() const {
  if (product.empty()) return poly;
  QPoly d = {Rat(1)};
  for (int a : product) d = qp_mul(d, qp_one_minus_tk(a));
  return d;
}

std::optional<HilbertSeries> fit_series(const std::vector<int>& dims,
                                        const DenominatorHint& hint,
                                        int guard) {
  int N = static_cast<int>(dims.size()) - 1;
  QPoly den = hint.expand();
  check(!den.empty() && den[0] == 1, ErrorKind::Schema,
        "denominator hint must have constant term 1");
  int K = N - guard;
  if (qp_deg(den) > K) return std::nullopt;  // hint too large to verify
  // Convolution dims * den, truncated to N.
  QPoly conv(N + 1, Rat(0));
  for (int d = 0; d <= N; ++d) {
    Rat acc(0);
    for (int j = 0; j <= d && j < static_cast<int>(den.size()); ++j)
      acc += den[j] * Rat(dims[d - j]);
    conv[d] = acc;
  }
  for (int d = K + 1; d <= N; ++d)
    if (conv[d] != 0) return std::nullopt;
  conv.resize(K + 1);
  qp_trim(conv);
  HilbertSeries s;
  s.num = std::move(conv);
  s.den = std::move(den);
  s.verified_to = N;
  s.hint_desc = hint.desc;
  // Normalize: coprime, den(0) = 1.
  QPoly g = qp_gcd(s.num, s.den);
  if (qp_deg(g) >= 1) {
    QPoly q, r;
    qp_divmod(s.num, g, q, r);
    s.num = q;
    qp_divmod(s.den, g, q, r);
    s.den = q;
  }
  if (!s.den.empty() && s.den[0] != 1) {
    Rat c = s.den[0];
    s.num = qp_scale(s.num, Rat(1) / c);
    s.den = qp_scale(s.den, Rat(1) / c);
  }
  return s;
}

std::optional<HilbertSeries> fit_series_any(
    const std::vector<int>& dims, const std::vector<DenominatorHint>& hints,
    int guard) {
  for (const auto& h : hints) {
    auto s = fit_series(dims, h, guard);
    if (s) return s;
  }
  return std::nullopt;
}

Rat ratio_at_one(const HilbertSeries& p, const HilbertSeries& q) {
  QPoly rnum = qp_mul(p.num, q.den);
  QPoly rden = qp_mul(p.den, q.num);
  check(!qp_is_zero(rden), ErrorKind::Math, "ratio against the zero series");
  QPoly one_minus_t = qp_one_minus_tk(1);
  while (qp_eval(rnum, Rat(1)) == 0 && qp_eval(rden, Rat(1)) == 0) {
    QPoly qq, rr;
    qp_divmod(rnum, one_minus_t, qq, rr);
    rnum = std::move(qq);
    qp_divmod(rden, one_minus_t, qq, rr);
    rden = std::move(qq);
  }
  Rat dv = qp_eval(rden, Rat(1));
  check(dv != 0, ErrorKind::Math,
        "residual pole at t = 1 (series ranks differ; hypotheses violated)");
  return qp_eval(rnum, Rat(1)) / dv;
}

int cmreg_asregular(int gldim, const HilbertSeries& s) {
  return gldim + s.deg_t();
}

std::optional<std::vector<int>> inverse_product_shape(const HilbertSeries& s) {
  if (qp_deg(s.num) != 0 || s.num.empty() || s.num[0] != 1)
    return std::nullopt;
  QPoly d = s.den;
  std::vector<int> out;
  while (qp_deg(d) >= 1) {
    bool found = false;
    for (int b = qp_deg(d); b >= 1; --b) {
      QPoly factor = qp_one_minus_tk(b);
      if (qp_divides(factor, d)) {
        QPoly q, r;
        qp_divmod(d, factor, q, r);
        d = std::move(q);
        out.push_back(b);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  if (qp_deg(d) != 0 || d.empty() || d[0] != 1) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncinv
