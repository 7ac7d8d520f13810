#include "ncinv/hopf.hpp"

#include <map>
#include <sstream>

#include "ncinv/error.hpp"

namespace ncinv {

namespace {

std::string idx3(const HopfData& h, int i, int j, int k) {
  std::ostringstream os;
  os << "(" << h.labels[i] << ", " << h.labels[j] << ", " << h.labels[k] << ")";
  return os.str();
}

// Pure tensors over the Hopf basis with scalar coefficients, kept as a sorted
// map from (i, j) to coefficient.
using Tensor2 = std::map<std::pair<int, int>, Scalar>;

void t2_add(Tensor2& t, int i, int j, const Scalar& c, const NumberField& f) {
  auto key = std::make_pair(i, j);
  auto it = t.find(key);
  if (it == t.end())
    t.emplace(key, c);
  else
    f.add_in_place(it->second, c);
}

bool t2_equal(const Tensor2& a, const Tensor2& b, const NumberField& f) {
  Tensor2 d = a;
  for (const auto& [k, c] : b) t2_add(d, k.first, k.second, f.neg(c), f);
  for (const auto& [k, c] : d)
    if (!f.is_zero(c)) return false;
  return true;
}

Tensor2 coprod_of_vec(const HopfData& h, const Vec& v) {
  Tensor2 t;
  const NumberField& f = h.field;
  for (int i = 0; i < h.dim; ++i) {
    if (f.is_zero(v[i])) continue;
    for (const auto& ct : h.coprod[i])
      t2_add(t, ct.left, ct.right, f.mul(v[i], ct.c), f);
  }
  return t;
}

}  // namespace

Vec HopfData::mul_elems(const Vec& a, const Vec& b) const {
  const NumberField& f = field;
  Vec out = vec_zero(dim, f);
  for (int i = 0; i < dim; ++i) {
    if (f.is_zero(a[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (f.is_zero(b[j])) continue;
      Scalar c = f.mul(a[i], b[j]);
      vec_add_scaled(out, c, mult[i][j], f);
    }
  }
  return out;
}

Scalar HopfData::counit_of(const Vec& v) const {
  const NumberField& f = field;
  Scalar s = f.zero();
  for (int i = 0; i < dim; ++i) {
    Scalar t = f.mul(v[i], counit[i]);
    f.add_in_place(s, t);
  }
  return s;
}

HopfReport validate_hopf(const HopfData& h) {
  HopfReport rep;
  const NumberField& f = h.field;
  auto fail = [&](const std::string& axiom, const std::string& witness) {
    rep.ok = false;
    rep.failures.push_back({axiom, witness});
  };
  check(h.dim >= 1, ErrorKind::Schema, "hopf dim must be >= 1");

  // Unit: 1 * h_i = h_i * 1 = h_i.
  for (int i = 0; i < h.dim; ++i) {
    Vec e = vec_zero(h.dim, f);
    e[i] = f.one();
    if (!vec_is_zero(
            [&] {
              Vec d = h.mul_elems(h.unit, e);
              for (int k = 0; k < h.dim; ++k) d[k] = f.sub(d[k], e[k]);
              return d;
            }(),
            f) ||
        !vec_is_zero(
            [&] {
              Vec d = h.mul_elems(e, h.unit);
              for (int k = 0; k < h.dim; ++k) d[k] = f.sub(d[k], e[k]);
              return d;
            }(),
            f)) {
      fail("unit law", h.labels[i]);
    }
  }

  // Associativity: (h_i h_j) h_k = h_i (h_j h_k).
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j)
      for (int k = 0; k < h.dim; ++k) {
        Vec e_k = vec_zero(h.dim, f);
        e_k[k] = f.one();
        Vec e_i = vec_zero(h.dim, f);
        e_i[i] = f.one();
        Vec lhs = h.mul_elems(h.mult[i][j], e_k);
        Vec rhs = h.mul_elems(e_i, h.mult[j][k]);
        for (int t = 0; t < h.dim; ++t) lhs[t] = f.sub(lhs[t], rhs[t]);
        if (!vec_is_zero(lhs, f)) {
          fail("associativity", idx3(h, i, j, k));
          goto assoc_done;
        }
      }
assoc_done:;

  // Coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta, on basis.
  for (int i = 0; i < h.dim; ++i) {
    std::map<std::tuple<int, int, int>, Scalar> lhs, rhs;
    for (const auto& ct : h.coprod[i]) {
      for (const auto& ct2 : h.coprod[ct.left]) {
        auto key = std::make_tuple(ct2.left, ct2.right, ct.right);
        Scalar c = f.mul(ct.c, ct2.c);
        auto it = lhs.find(key);
        if (it == lhs.end())
          lhs.emplace(key, c);
        else
          f.add_in_place(it->second, c);
      }
      for (const auto& ct2 : h.coprod[ct.right]) {
        auto key = std::make_tuple(ct.left, ct2.left, ct2.right);
        Scalar c = f.mul(ct.c, ct2.c);
        auto it = rhs.find(key);
        if (it == rhs.end())
          rhs.emplace(key, c);
        else
          f.add_in_place(it->second, c);
      }
    }
    for (const auto& [k, c] : rhs) {
      auto it = lhs.find(k);
      if (it == lhs.end())
        lhs.emplace(k, f.neg(c));
      else
        f.sub_mul_in_place(it->second, f.one(), c);
    }
    bool zero = true;
    for (const auto& [k, c] : lhs)
      if (!f.is_zero(c)) zero = false;
    if (!zero) fail("coassociativity", h.labels[i]);
  }

  // Counit law: (eps (x) id) Delta = id = (id (x) eps) Delta.
  for (int i = 0; i < h.dim; ++i) {
    Vec left = vec_zero(h.dim, f), right = vec_zero(h.dim, f);
    for (const auto& ct : h.coprod[i]) {
      Scalar cl = f.mul(ct.c, h.counit[ct.left]);
      left[ct.right] = f.add(left[ct.right], cl);
      Scalar cr = f.mul(ct.c, h.counit[ct.right]);
      right[ct.left] = f.add(right[ct.left], cr);
    }
    left[i] = f.sub(left[i], f.one());
    right[i] = f.sub(right[i], f.one());
    if (!vec_is_zero(left, f) || !vec_is_zero(right, f))
      fail("counit law", h.labels[i]);
  }

  // Delta multiplicative: Delta(h_i h_j) = Delta(h_i) Delta(h_j).
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j) {
      Tensor2 lhs = coprod_of_vec(h, h.mult[i][j]);
      Tensor2 rhs;
      for (const auto& a : h.coprod[i])
        for (const auto& b : h.coprod[j]) {
          Scalar c = f.mul(a.c, b.c);
          const Vec& lv = h.mult[a.left][b.left];
          const Vec& rv = h.mult[a.right][b.right];
          for (int s = 0; s < h.dim; ++s) {
            if (f.is_zero(lv[s])) continue;
            for (int t = 0; t < h.dim; ++t) {
              if (f.is_zero(rv[t])) continue;
              t2_add(rhs, s, t, f.mul(c, f.mul(lv[s], rv[t])), f);
            }
          }
        }
      if (!t2_equal(lhs, rhs, f)) {
        fail("coproduct multiplicativity",
             "(" + h.labels[i] + ", " + h.labels[j] + ")");
        goto delta_done;
      }
    }
delta_done:;

  // eps multiplicative.
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j) {
      Scalar lhs = h.counit_of(h.mult[i][j]);
      Scalar rhs = f.mul(h.counit[i], h.counit[j]);
      if (!f.eq(lhs, rhs)) {
        fail("counit multiplicativity",
             "(" + h.labels[i] + ", " + h.labels[j] + ")");
        goto eps_done;
      }
    }
eps_done:;

  // Antipode: m(S (x) id)Delta(h) = eps(h) 1 = m(id (x) S)Delta(h).
  for (int i = 0; i < h.dim; ++i) {
    Vec lhs = vec_zero(h.dim, f), rhs = vec_zero(h.dim, f);
    for (const auto& ct : h.coprod[i]) {
      Vec er = vec_zero(h.dim, f);
      er[ct.right] = f.one();
      Vec part = h.mul_elems(h.antipode[ct.left], er);
      vec_add_scaled(lhs, ct.c, part, f);
      Vec el = vec_zero(h.dim, f);
      el[ct.left] = f.one();
      Vec part2 = h.mul_elems(el, h.antipode[ct.right]);
      vec_add_scaled(rhs, ct.c, part2, f);
    }
    Vec want = h.unit;
    for (int k = 0; k < h.dim; ++k) {
      Scalar w = f.mul(h.counit[i], want[k]);
      lhs[k] = f.sub(lhs[k], w);
      rhs[k] = f.sub(rhs[k], w);
    }
    if (!vec_is_zero(lhs, f)) fail("antipode law (left)", h.labels[i]);
    if (!vec_is_zero(rhs, f)) fail("antipode law (right)", h.labels[i]);
  }

  // Integral: Lambda h = h Lambda = eps(h) Lambda, eps(Lambda) = 1.
  for (int i = 0; i < h.dim; ++i) {
    Vec e = vec_zero(h.dim, f);
    e[i] = f.one();
    Vec l = h.mul_elems(h.integral, e);
    Vec r = h.mul_elems(e, h.integral);
    for (int k = 0; k < h.dim; ++k) {
      Scalar w = f.mul(h.counit[i], h.integral[k]);
      l[k] = f.sub(l[k], w);
      r[k] = f.sub(r[k], w);
    }
    if (!vec_is_zero(l, f)) fail("right integral identity", h.labels[i]);
    if (!vec_is_zero(r, f)) fail("left integral identity", h.labels[i]);
  }
  if (!f.eq(h.counit_of(h.integral), f.one()))
    fail("integral normalization eps(Lambda) = 1", "Lambda");

  return rep;
}

HopfData group_to_hopf(const std::vector<Mat>& generators,
                       const std::vector<int>& gen_degrees,
                       const NumberField& f, std::size_t cap,
                       std::vector<Mat>& element_matrices) {
  check(!generators.empty(), ErrorKind::Schema, "group needs >= 1 generator");
  int n = static_cast<int>(gen_degrees.size());
  for (const auto& g : generators) {
    check(g.rows == n && g.cols == n, ErrorKind::Schema,
          "group generator matrix size mismatch");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (gen_degrees[i] != gen_degrees[j])
          check(f.is_zero(g.at(i, j)), ErrorKind::Schema,
                "group generator matrix must preserve generator degrees");
    Mat copy = g;
    RrefResult rr = rref_serial(copy, f);
    check(rr.rank == n, ErrorKind::Schema,
          "group generator matrix not invertible");
  }

  auto mat_key = [&](const Mat& m) {
    std::ostringstream os;
    for (const auto& s : m.a)
      for (const auto& q : s.c) os << q.get_str() << ";";
    return os.str();
  };
  auto mat_mul = [&](const Mat& a, const Mat& b) {
    Mat out(n, n, f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Scalar acc = f.zero();
        for (int k = 0; k < n; ++k) {
          Scalar t = f.mul(a.at(i, k), b.at(k, j));
          f.add_in_place(acc, t);
        }
        out.at(i, j) = acc;
      }
    return out;
  };

  Mat id(n, n, f);
  for (int i = 0; i < n; ++i) id.at(i, i) = f.one();
  element_matrices.clear();
  element_matrices.push_back(id);
  std::map<std::string, int> seen;
  seen[mat_key(id)] = 0;
  for (size_t head = 0; head < element_matrices.size(); ++head) {
    for (const auto& g : generators) {
      Mat prod = mat_mul(element_matrices[head], g);
      std::string key = mat_key(prod);
      if (seen.count(key)) continue;
      check(element_matrices.size() < cap, ErrorKind::Caps,
            "group closure exceeded the cap");
      seen[key] = static_cast<int>(element_matrices.size());
      element_matrices.push_back(std::move(prod));
    }
  }

  int order = static_cast<int>(element_matrices.size());
  HopfData h;
  h.field = f;
  h.dim = order;
  h.is_group_algebra = true;
  h.labels.resize(order);
  for (int i = 0; i < order; ++i) h.labels[i] = "g" + std::to_string(i);
  h.labels[0] = "e";
  h.mult.assign(order, std::vector<Vec>(order));
  std::vector<int> inverse(order, -1);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      Mat prod = mat_mul(element_matrices[i], element_matrices[j]);
      int k = seen.at(mat_key(prod));
      Vec v = vec_zero(order, f);
      v[k] = f.one();
      h.mult[i][j] = std::move(v);
      if (k == 0) inverse[i] = j;
    }
  h.coprod.resize(order);
  for (int i = 0; i < order; ++i) h.coprod[i] = {{f.one(), i, i}};
  h.counit = Vec(order, f.one());
  h.antipode.resize(order);
  for (int i = 0; i < order; ++i) {
    Vec v = vec_zero(order, f);
    v[inverse[i]] = f.one();
    h.antipode[i] = std::move(v);
  }
  h.unit = vec_zero(order, f);
  h.unit[0] = f.one();
  // Reynolds element; |G| is invertible in characteristic zero, which is the
  // only case these fields support (the modular case is refused upstream).
  Rat inv_order(1, order);
  inv_order.canonicalize();
  h.integral = Vec(order, f.from_rat(inv_order));
  return h;
}

}  // namespace ncinv
