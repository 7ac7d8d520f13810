#include "ncinv/qpoly.hpp"

#include "ncinv/error.hpp"

namespace ncinv {

int qp_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_const(const Rat& r) {
  if (r == 0) return {};
  return {r};
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  qp_trim(r);
  return r;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  qp_trim(r);
  return r;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qp_trim(r);
  return r;
}

QPoly qp_scale(const QPoly& a, const Rat& r) {
  if (r == 0) return {};
  QPoly out(a);
  for (auto& c : out) c *= r;
  return out;
}

void qp_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  check(!b.empty(), ErrorKind::Math, "polynomial division by zero");
  r = a;
  qp_trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rat(0));
  const Rat lead = b.back();
  while (qp_deg(r) >= qp_deg(b)) {
    int k = qp_deg(r) - qp_deg(b);
    Rat c = r.back() / lead;
    q[k] = c;
    for (size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
    qp_trim(r);
  }
  qp_trim(q);
}

bool qp_divides(const QPoly& b, const QPoly& a) {
  if (a.empty()) return true;
  if (b.empty()) return false;
  QPoly q, r;
  qp_divmod(a, b, q, r);
  return r.empty();
}

QPoly qp_gcd(QPoly a, QPoly b) {
  qp_trim(a);
  qp_trim(b);
  while (!b.empty()) {
    QPoly q, r;
    qp_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Rat qp_eval(const QPoly& p, const Rat& x) {
  Rat v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

bool qp_is_zero(const QPoly& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

bool qp_eq(const QPoly& a, const QPoly& b) { return qp_is_zero(qp_sub(a, b)); }

QPoly qp_one_minus_tk(int k) {
  QPoly p(k + 1, Rat(0));
  p[0] = 1;
  p[k] = -1;
  return p;
}

std::vector<Rat> qp_series(const QPoly& num, const QPoly& den, int n) {
  check(!den.empty() && den[0] != 0, ErrorKind::Math,
        "series expansion needs den(0) != 0");
  std::vector<Rat> out(n + 1, Rat(0));
  for (int d = 0; d <= n; ++d) {
    Rat acc = d < static_cast<int>(num.size()) ? num[d] : Rat(0);
    for (int j = 1; j <= d && j < static_cast<int>(den.size()); ++j)
      acc -= den[j] * out[d - j];
    out[d] = acc / den[0];
  }
  return out;
}

}  // namespace ncinv
