#include "ncinv/presentation.hpp"

#include <set>

#include "ncinv/error.hpp"

namespace ncinv {

int AlgebraPresentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

int AlgebraPresentation::poly_degree(const NcPoly& p) const {
  check(!p.terms.empty(), ErrorKind::Schema, "empty relation");
  int d = -1;
  for (const auto& t : p.terms) {
    if (field.is_zero(t.coeff)) continue;
    int td = word_degree(t.word, gens);
    if (d < 0) d = td;
    check(td == d, ErrorKind::Schema, "relation not homogeneous");
  }
  check(d >= 0, ErrorKind::Schema, "relation is identically zero");
  return d;
}

bool AlgebraPresentation::generated_in_degree_one() const {
  for (const auto& g : gens)
    if (g.degree != 1) return false;
  return true;
}

void AlgebraPresentation::validate() const {
  check(!gens.empty(), ErrorKind::Schema, "presentation has no generators");
  std::set<std::string> names;
  for (const auto& g : gens) {
    check(g.degree >= 1, ErrorKind::Schema,
          "generator degree must be >= 1 (connected graded)");
    check(names.insert(g.name).second, ErrorKind::Schema,
          "duplicate generator name: " + g.name);
  }
  for (size_t i = 0; i < relations.size(); ++i) {
    for (const auto& t : relations[i].terms)
      for (int g : t.word)
        check(g >= 0 && g < static_cast<int>(gens.size()), ErrorKind::Schema,
              "relation refers to unknown generator");
    try {
      (void)poly_degree(relations[i]);
    } catch (const Error& e) {
      throw Error(ErrorKind::Schema,
                  "relation " + std::to_string(i) + ": " + e.what());
    }
  }
}

NcPoly poly_scale(const NcPoly& p, const Scalar& c, const NumberField& f) {
  NcPoly out;
  out.terms.reserve(p.terms.size());
  for (const auto& t : p.terms) out.terms.push_back({f.mul(t.coeff, c), t.word});
  return out;
}

NcPoly poly_mul_words(const Word& u, const NcPoly& p, const Word& v) {
  NcPoly out;
  out.terms.reserve(p.terms.size());
  for (const auto& t : p.terms)
    out.terms.push_back({t.coeff, word_concat(word_concat(u, t.word), v)});
  return out;
}

AlgebraPresentation quotient_truncation(const AlgebraPresentation& p, int d,
                                        std::size_t word_cap) {
  check(d >= 1, ErrorKind::Schema, "truncation degree must be >= 1");
  AlgebraPresentation q = p;
  for (const auto& w : words_of_degree(d, p.gens, word_cap)) {
    NcPoly rel;
    rel.terms.push_back({p.field.one(), w});
    q.relations.push_back(std::move(rel));
  }
  return q;
}

AlgebraPresentation relations_up_to(const AlgebraPresentation& p, int n) {
  AlgebraPresentation q = p;
  q.relations.clear();
  for (const auto& r : p.relations)
    if (p.poly_degree(r) <= n) q.relations.push_back(r);
  return q;
}

}  // namespace ncinv
