#include "ncinv/field.hpp"

#include <algorithm>
#include <sstream>

#include "ncinv/error.hpp"

namespace ncinv {

namespace {

// Signed divisors of n, ascending by absolute value. Returns false when n has
// too many divisors to enumerate under the cap.
bool signed_divisors(const Int& n, std::vector<Int>& out, size_t cap) {
  out.clear();
  if (n == 0) return false;
  Int a = abs(n);
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
      if (out.size() > cap) return false;
    }
  }
  std::sort(out.begin(), out.end());
  size_t m = out.size();
  std::vector<Int> full;
  full.reserve(2 * m);
  for (const auto& d : out) {
    full.push_back(d);
    full.push_back(-d);
  }
  out = std::move(full);
  return true;
}

Int eval_int(const std::vector<Int>& p, const Int& x) {
  Int v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

// Trial factorization of a monic integer polynomial of degree <= 6. Finds a
// proper monic factor of degree <= 3 if one exists (Kronecker interpolation);
// rational roots of a monic polynomial are integers dividing the constant
// term. Returns a human-readable factor on success.
bool find_low_degree_factor(const std::vector<Int>& p, std::string& factor) {
  int n = static_cast<int>(p.size()) - 1;
  if (n <= 1) return false;
  // Integer roots.
  if (p[0] == 0) {
    factor = "t";
    return true;
  }
  std::vector<Int> roots;
  if (signed_divisors(p[0], roots, 4096)) {
    for (const auto& r : roots) {
      if (eval_int(p, r) == 0) {
        std::ostringstream os;
        os << "t - (" << r.get_str() << ")";
        factor = os.str();
        return true;
      }
    }
  }
  // Kronecker search for monic factors of degree 2..n/2 (n <= 6 => k <= 3).
  for (int k = 2; k <= n / 2; ++k) {
    std::vector<std::vector<Int>> divs(k);
    bool feasible = true;
    for (int j = 0; j < k; ++j) {
      Int pj = eval_int(p, Int(j));
      if (pj == 0) return true;  // integer root, caught above in principle
      if (!signed_divisors(pj, divs[j], 512)) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;  // values too large; treat as user-asserted
    size_t total = 1;
    for (auto& d : divs) {
      total *= d.size();
      if (total > 200000) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    // Candidate monic g with g(j) = d_j; solve for the k lower coefficients.
    std::vector<size_t> idx(k, 0);
    while (true) {
      // Build g by Lagrange interpolation of g(j) - j^k at points 0..k-1.
      QPoly low;  // degree <= k-1 part
      for (int j = 0; j < k; ++j) {
        Rat target(divs[j][idx[j]]);
        Int jk = 1;
        for (int t = 0; t < k; ++t) jk *= j;
        target -= Rat(jk);
        // Lagrange basis for node j over 0..k-1.
        QPoly basis = {Rat(1)};
        Rat denom(1);
        for (int t = 0; t < k; ++t) {
          if (t == j) continue;
          basis = qp_mul(basis, QPoly{Rat(-t), Rat(1)});
          denom *= Rat(j - t);
        }
        low = qp_add(low, qp_scale(basis, target / denom));
      }
      QPoly g(k + 1, Rat(0));
      g[k] = 1;
      for (int i = 0; i < static_cast<int>(low.size()); ++i) g[i] += low[i];
      bool integral = true;
      for (const auto& c : g)
        if (c.get_den() != 1) {
          integral = false;
          break;
        }
      if (integral) {
        QPoly pq(p.size());
        for (size_t i = 0; i < p.size(); ++i) pq[i] = Rat(p[i]);
        if (qp_divides(g, pq)) {
          std::ostringstream os;
          os << "degree-" << k << " factor";
          factor = os.str();
          return true;
        }
      }
      // Next tuple.
      int pos = 0;
      while (pos < k) {
        if (++idx[pos] < divs[pos].size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
  }
  return false;
}

}  // namespace

NumberField NumberField::rationals() {
  NumberField f;
  f.minpoly_ = {Int(0), Int(1)};
  f.label_ = "Q";
  f.precompute();
  return f;
}

NumberField NumberField::make(std::vector<Int> minpoly, std::string label) {
  check(minpoly.size() >= 2, ErrorKind::Schema,
        "field minpoly must have degree >= 1");
  check(minpoly.back() == 1, ErrorKind::Schema,
        "field minpoly must be monic with integer coefficients");
  if (minpoly.size() > 2 && minpoly.size() <= 7) {
    std::string factor;
    if (find_low_degree_factor(minpoly, factor))
      throw Error(ErrorKind::Schema, "field minpoly is reducible: " + factor);
  }
  NumberField f;
  f.minpoly_ = std::move(minpoly);
  f.label_ = label.empty() ? "Q(a)" : std::move(label);
  if (f.degree() == 1) f.label_ = "Q";
  f.precompute();
  return f;
}

void NumberField::precompute() {
  int d = degree();
  alpha_pow_.clear();
  if (d < 2) return;
  // a^d = -(c_0 + ... + c_{d-1} a^{d-1})
  std::vector<Rat> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = -Rat(minpoly_[i]);
  alpha_pow_.push_back(cur);
  for (int k = d + 1; k <= 2 * d - 2; ++k) {
    std::vector<Rat> next(d, Rat(0));
    // next = a * cur
    Rat top = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (int i = 0; i < d; ++i) next[i] += top * alpha_pow_[0][i];
    alpha_pow_.push_back(next);
    cur = std::move(next);
  }
}

Scalar NumberField::zero() const { return Scalar{std::vector<Rat>(degree(), Rat(0))}; }

Scalar NumberField::one() const {
  Scalar s = zero();
  s.c[0] = 1;
  return s;
}

Scalar NumberField::from_rat(const Rat& r) const {
  Scalar s = zero();
  s.c[0] = r;
  return s;
}

Scalar NumberField::generator() const {
  check(degree() >= 2, ErrorKind::Math, "Q has no extension generator");
  Scalar s = zero();
  s.c[1] = 1;
  return s;
}

bool NumberField::is_zero(const Scalar& a) const {
  for (const auto& x : a.c)
    if (x != 0) return false;
  return true;
}

bool NumberField::eq(const Scalar& a, const Scalar& b) const {
  for (int i = 0; i < degree(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

Scalar NumberField::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a;
  for (int i = 0; i < degree(); ++i) r.c[i] += b.c[i];
  return r;
}

Scalar NumberField::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a;
  for (int i = 0; i < degree(); ++i) r.c[i] -= b.c[i];
  return r;
}

Scalar NumberField::neg(const Scalar& a) const {
  Scalar r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

void NumberField::add_in_place(Scalar& a, const Scalar& b) const {
  for (int i = 0; i < degree(); ++i) a.c[i] += b.c[i];
}

void NumberField::sub_mul_in_place(Scalar& a, const Scalar& coef,
                                   const Scalar& b) const {
  if (degree() == 1) {
    a.c[0] -= coef.c[0] * b.c[0];
    return;
  }
  Scalar p = mul(coef, b);
  for (int i = 0; i < degree(); ++i) a.c[i] -= p.c[i];
}

Scalar NumberField::mul(const Scalar& a, const Scalar& b) const {
  int d = degree();
  if (d == 1) return Scalar{{a.c[0] * b.c[0]}};
  std::vector<Rat> conv(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.c[j] == 0) continue;
      conv[i + j] += a.c[i] * b.c[j];
    }
  }
  return reduce(std::move(conv));
}

Scalar NumberField::mul_rat(const Scalar& a, const Rat& r) const {
  Scalar out = a;
  for (auto& x : out.c) x *= r;
  return out;
}

Scalar NumberField::reduce(std::vector<Rat> coords) const {
  int d = degree();
  check(static_cast<int>(coords.size()) <= 2 * d - 1 || d == 1,
        ErrorKind::Internal, "reduce: coordinate vector too long");
  Scalar out = zero();
  for (int i = 0; i < d && i < static_cast<int>(coords.size()); ++i)
    out.c[i] = coords[i];
  for (int k = d; k < static_cast<int>(coords.size()); ++k) {
    if (coords[k] == 0) continue;
    const auto& rep = alpha_pow_[k - d];
    for (int i = 0; i < d; ++i) out.c[i] += coords[k] * rep[i];
  }
  return out;
}

Scalar NumberField::inv(const Scalar& a) const {
  check(!is_zero(a), ErrorKind::Math, "division by zero");
  if (degree() == 1) return Scalar{{Rat(1) / a.c[0]}};
  // Extended Euclid in Q[t] against the minpoly.
  QPoly r0(minpoly_.size());
  for (size_t i = 0; i < minpoly_.size(); ++i) r0[i] = Rat(minpoly_[i]);
  QPoly r1(a.c.begin(), a.c.end());
  qp_trim(r1);
  QPoly s0 = {}, s1 = {Rat(1)};  // coefficients of a-part
  while (qp_deg(r1) > 0) {
    QPoly q, rem;
    qp_divmod(r0, r1, q, rem);
    QPoly s2 = qp_sub(s0, qp_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  check(!r1.empty(), ErrorKind::Math,
        "minpoly not coprime with element (reducible minpoly?)");
  QPoly s = qp_scale(s1, Rat(1) / r1[0]);
  std::vector<Rat> coords(s.begin(), s.end());
  return reduce(std::move(coords));
}

std::string NumberField::to_string(const Scalar& a) const {
  if (degree() == 1) return a.c[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < degree(); ++i) {
    if (a.c[i] == 0) continue;
    if (!first) os << " + ";
    os << a.c[i].get_str();
    if (i >= 1) os << "*a";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ncinv
