#include "ncinv/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "ncinv/error.hpp"

namespace ncinv {

namespace {

[[noreturn]] void schema_error(const std::string& where,
                               const std::string& what) {
  throw Error(ErrorKind::Schema, where + ": " + what);
}

void expect_keys(const Json& j, const std::string& where,
                 const std::set<std::string>& allowed) {
  if (!j.is_object()) schema_error(where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      schema_error(where + "/" + it.key(), "unknown key");
}

Rat parse_rat(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) {
    try {
      Rat r(j.get<std::string>());
      r.canonicalize();
      return r;
    } catch (const std::exception&) {
      schema_error(where, "bad rational literal");
    }
  }
  schema_error(where, "expected integer or \"p/q\" string");
}

Scalar parse_scalar(const Json& j, const NumberField& f,
                    const std::string& where) {
  if (j.is_array()) {
    if (static_cast<int>(j.size()) > f.degree())
      schema_error(where, "scalar coordinate vector longer than field degree");
    Scalar s = f.zero();
    for (size_t i = 0; i < j.size(); ++i)
      s.c[i] = parse_rat(j[i], where + "/" + std::to_string(i));
    return s;
  }
  return f.from_rat(parse_rat(j, where));
}

NumberField parse_field(const Json& j, const std::string& where) {
  expect_keys(j, where, {"minpoly", "label"});
  if (!j.contains("minpoly")) schema_error(where, "missing minpoly");
  std::vector<Int> mp;
  for (size_t i = 0; i < j["minpoly"].size(); ++i) {
    const auto& c = j["minpoly"][i];
    if (!c.is_number_integer())
      schema_error(where + "/minpoly/" + std::to_string(i),
                   "minpoly coefficients must be integers");
    mp.emplace_back(static_cast<long>(c.get<int64_t>()));
  }
  std::string label = j.value("label", std::string());
  return NumberField::make(std::move(mp), label);
}

NcPoly parse_element(const Json& j, const AlgebraPresentation& p,
                     const std::string& where) {
  if (!j.is_array()) schema_error(where, "element must be a list of terms");
  NcPoly poly;
  for (size_t t = 0; t < j.size(); ++t) {
    const std::string tw = where + "/" + std::to_string(t);
    expect_keys(j[t], tw, {"coeff", "word"});
    if (!j[t].contains("coeff") || !j[t].contains("word"))
      schema_error(tw, "term needs coeff and word");
    NcTerm term;
    term.coeff = parse_scalar(j[t]["coeff"], p.field, tw + "/coeff");
    for (size_t w = 0; w < j[t]["word"].size(); ++w) {
      const auto& gname = j[t]["word"][w];
      if (!gname.is_string())
        schema_error(tw + "/word/" + std::to_string(w),
                     "word letters are generator names");
      int g = p.gen_index(gname.get<std::string>());
      if (g < 0)
        schema_error(tw + "/word/" + std::to_string(w),
                     "unknown generator " + gname.get<std::string>());
      term.word.push_back(g);
    }
    poly.terms.push_back(std::move(term));
  }
  return poly;
}

AlgebraPresentation parse_algebra(const Json& j, const NumberField& f,
                                  const std::string& where) {
  expect_keys(j, where, {"generators", "relations", "assert"});
  AlgebraPresentation p;
  p.field = f;
  if (!j.contains("generators")) schema_error(where, "missing generators");
  for (size_t i = 0; i < j["generators"].size(); ++i) {
    const std::string gw = where + "/generators/" + std::to_string(i);
    expect_keys(j["generators"][i], gw, {"name", "degree"});
    GenInfo g;
    if (!j["generators"][i].contains("name"))
      schema_error(gw, "generator needs a name");
    g.name = j["generators"][i]["name"].get<std::string>();
    g.degree = j["generators"][i].value("degree", 1);
    p.gens.push_back(std::move(g));
  }
  if (j.contains("relations"))
    for (size_t r = 0; r < j["relations"].size(); ++r)
      p.relations.push_back(parse_element(
          j["relations"][r], p, where + "/relations/" + std::to_string(r)));
  if (j.contains("assert")) {
    const auto& a = j["assert"];
    const std::string aw = where + "/assert";
    expect_keys(a, aw,
                {"gldim", "as_regular", "is_domain", "noetherian",
                 "smash_product_prime", "koszul", "invariants_finite_gldim",
                 "invariants_commutative", "cm_s", "minus_one_skew"});
    if (a.contains("gldim")) p.asserts.gldim = a["gldim"].get<int>();
    p.asserts.as_regular = a.value("as_regular", false);
    p.asserts.is_domain = a.value("is_domain", false);
    p.asserts.noetherian = a.value("noetherian", false);
    p.asserts.smash_product_prime = a.value("smash_product_prime", false);
    p.asserts.koszul = a.value("koszul", false);
    p.asserts.invariants_finite_gldim =
        a.value("invariants_finite_gldim", false);
    p.asserts.invariants_commutative =
        a.value("invariants_commutative", false);
    if (a.contains("cm_s")) p.asserts.cm_s = a["cm_s"].get<int>();
    if (a.contains("minus_one_skew"))
      p.asserts.minus_one_skew = a["minus_one_skew"].get<int>();
  }
  try {
    p.validate();
  } catch (const Error& e) {
    schema_error(where, e.what());
  }
  return p;
}

Mat parse_matrix(const Json& j, const NumberField& f, int n,
                 const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    schema_error(where, "expected a " + std::to_string(n) + "-row matrix");
  Mat m(n, n, f);
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != n)
      schema_error(where + "/" + std::to_string(r), "bad row length");
    for (int c = 0; c < n; ++c)
      m.at(r, c) = parse_scalar(j[r][c], f,
                                where + "/" + std::to_string(r) + "/" +
                                    std::to_string(c));
  }
  return m;
}

Vec parse_vec(const Json& j, const NumberField& f, int n,
              const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    schema_error(where, "expected a vector of length " + std::to_string(n));
  Vec v(n, f.zero());
  for (int i = 0; i < n; ++i)
    v[i] = parse_scalar(j[i], f, where + "/" + std::to_string(i));
  return v;
}

HopfData parse_hopf(const Json& j, const NumberField& f,
                    const std::string& where) {
  expect_keys(j, where,
              {"dim", "basis", "unit", "counit", "mult", "coproduct",
               "antipode", "integral", "action"});
  HopfData h;
  h.field = f;
  if (!j.contains("dim")) schema_error(where, "missing dim");
  h.dim = j["dim"].get<int>();
  if (h.dim < 1) schema_error(where + "/dim", "dim must be >= 1");
  h.labels.resize(h.dim);
  if (j.contains("basis")) {
    if (static_cast<int>(j["basis"].size()) != h.dim)
      schema_error(where + "/basis", "label count != dim");
    for (int i = 0; i < h.dim; ++i) h.labels[i] = j["basis"][i].get<std::string>();
  } else {
    for (int i = 0; i < h.dim; ++i) h.labels[i] = "h" + std::to_string(i);
  }
  for (const char* key : {"unit", "counit", "mult", "coproduct", "antipode",
                          "integral"})
    if (!j.contains(key)) schema_error(where, std::string("missing ") + key);
  h.unit = parse_vec(j["unit"], f, h.dim, where + "/unit");
  h.counit = parse_vec(j["counit"], f, h.dim, where + "/counit");
  h.integral = parse_vec(j["integral"], f, h.dim, where + "/integral");
  if (static_cast<int>(j["mult"].size()) != h.dim)
    schema_error(where + "/mult", "needs dim rows");
  h.mult.resize(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    if (static_cast<int>(j["mult"][i].size()) != h.dim)
      schema_error(where + "/mult/" + std::to_string(i), "needs dim entries");
    h.mult[i].resize(h.dim);
    for (int k = 0; k < h.dim; ++k)
      h.mult[i][k] = parse_vec(j["mult"][i][k], f, h.dim,
                               where + "/mult/" + std::to_string(i) + "/" +
                                   std::to_string(k));
  }
  if (static_cast<int>(j["coproduct"].size()) != h.dim)
    schema_error(where + "/coproduct", "needs dim entries");
  h.coprod.resize(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    for (size_t t = 0; t < j["coproduct"][i].size(); ++t) {
      const std::string tw =
          where + "/coproduct/" + std::to_string(i) + "/" + std::to_string(t);
      expect_keys(j["coproduct"][i][t], tw, {"coeff", "left", "right"});
      HopfData::CoTerm ct;
      ct.c = parse_scalar(j["coproduct"][i][t]["coeff"], f, tw + "/coeff");
      ct.left = j["coproduct"][i][t]["left"].get<int>();
      ct.right = j["coproduct"][i][t]["right"].get<int>();
      if (ct.left < 0 || ct.left >= h.dim || ct.right < 0 ||
          ct.right >= h.dim)
        schema_error(tw, "tensor index out of range");
      h.coprod[i].push_back(std::move(ct));
    }
  }
  if (static_cast<int>(j["antipode"].size()) != h.dim)
    schema_error(where + "/antipode", "needs dim entries");
  h.antipode.resize(h.dim);
  for (int i = 0; i < h.dim; ++i)
    h.antipode[i] = parse_vec(j["antipode"][i], f, h.dim,
                              where + "/antipode/" + std::to_string(i));
  return h;
}

DenominatorHint parse_hint(const Json& j, const std::string& where) {
  expect_keys(j, where, {"product", "poly", "label"});
  DenominatorHint h;
  h.desc = j.value("label", std::string());
  if (j.contains("product")) {
    for (size_t i = 0; i < j["product"].size(); ++i) {
      int a = j["product"][i].get<int>();
      if (a < 1)
        schema_error(where + "/product/" + std::to_string(i),
                     "exponents must be >= 1");
      h.product.push_back(a);
    }
    if (h.desc.empty()) {
      std::ostringstream os;
      os << "prod(1-t^a), a = ";
      for (size_t i = 0; i < h.product.size(); ++i)
        os << (i ? "," : "") << h.product[i];
      h.desc = os.str();
    }
  } else if (j.contains("poly")) {
    for (size_t i = 0; i < j["poly"].size(); ++i)
      h.poly.push_back(parse_rat(j["poly"][i],
                                 where + "/poly/" + std::to_string(i)));
    if (h.desc.empty()) h.desc = "explicit polynomial";
  } else {
    schema_error(where, "hint needs product or poly");
  }
  return h;
}

}  // namespace

InputDocument parse_input(const Json& j) {
  expect_keys(j, "", {"field", "algebra", "action", "central_subalgebra", "S",
                      "series_hints", "run"});
  InputDocument doc;
  NumberField f = j.contains("field") ? parse_field(j["field"], "/field")
                                      : NumberField::rationals();
  if (!j.contains("algebra")) schema_error("", "missing algebra");
  doc.algebra = parse_algebra(j["algebra"], f, "/algebra");
  int n = static_cast<int>(doc.algebra.gens.size());

  if (!j.contains("action")) schema_error("", "missing action");
  expect_keys(j["action"], "/action", {"group", "hopf"});
  if (j["action"].contains("group") == j["action"].contains("hopf"))
    schema_error("/action", "exactly one of group or hopf");
  if (j["action"].contains("group")) {
    expect_keys(j["action"]["group"], "/action/group", {"generators"});
    GroupActionSpec g;
    const auto& gens = j["action"]["group"]["generators"];
    if (!gens.is_array() || gens.empty())
      schema_error("/action/group/generators", "need >= 1 matrix");
    for (size_t i = 0; i < gens.size(); ++i)
      g.generators.push_back(parse_matrix(
          gens[i], f, n, "/action/group/generators/" + std::to_string(i)));
    doc.group = std::move(g);
  } else {
    HopfActionSpec hs;
    hs.hopf = parse_hopf(j["action"]["hopf"], f, "/action/hopf");
    if (!j["action"]["hopf"].contains("action"))
      schema_error("/action/hopf", "missing action matrices");
    const auto& act = j["action"]["hopf"]["action"];
    if (static_cast<int>(act.size()) != hs.hopf.dim)
      schema_error("/action/hopf/action", "one matrix per basis element");
    for (int i = 0; i < hs.hopf.dim; ++i)
      hs.action.push_back(parse_matrix(
          act[i], f, n, "/action/hopf/action/" + std::to_string(i)));
    doc.hopf = std::move(hs);
  }

  if (j.contains("central_subalgebra")) {
    expect_keys(j["central_subalgebra"], "/central_subalgebra", {"generators"});
    const auto& cg = j["central_subalgebra"]["generators"];
    for (size_t i = 0; i < cg.size(); ++i)
      doc.central_generators.push_back(
          parse_element(cg[i], doc.algebra,
                        "/central_subalgebra/generators/" + std::to_string(i)));
  }

  if (j.contains("S")) {
    expect_keys(j["S"], "/S", {"algebra", "images", "surjective",
                               "series_hints"});
    SecondAlgebraSpec s;
    if (!j["S"].contains("algebra")) schema_error("/S", "missing algebra");
    s.pres = parse_algebra(j["S"]["algebra"], f, "/S/algebra");
    if (!j["S"].contains("images")) schema_error("/S", "missing images");
    const auto& imgs = j["S"]["images"];
    if (imgs.size() != s.pres.gens.size())
      schema_error("/S/images", "one image per S generator");
    for (size_t i = 0; i < imgs.size(); ++i)
      s.images.push_back(parse_element(imgs[i], doc.algebra,
                                       "/S/images/" + std::to_string(i)));
    s.surjective = j["S"].value("surjective", false);
    if (j["S"].contains("series_hints"))
      for (size_t i = 0; i < j["S"]["series_hints"].size(); ++i)
        s.series_hints.push_back(
            parse_hint(j["S"]["series_hints"][i],
                       "/S/series_hints/" + std::to_string(i)));
    doc.second = std::move(s);
  }

  if (j.contains("series_hints")) {
    expect_keys(j["series_hints"], "/series_hints", {"T", "R"});
    if (j["series_hints"].contains("T"))
      for (size_t i = 0; i < j["series_hints"]["T"].size(); ++i)
        doc.hints_T.push_back(parse_hint(
            j["series_hints"]["T"][i], "/series_hints/T/" + std::to_string(i)));
    if (j["series_hints"].contains("R"))
      for (size_t i = 0; i < j["series_hints"]["R"].size(); ++i)
        doc.hints_R.push_back(parse_hint(
            j["series_hints"]["R"][i], "/series_hints/R/" + std::to_string(i)));
  }

  if (j.contains("run")) {
    expect_keys(j["run"], "/run",
                {"max_degree", "max_homological", "word_cap", "group_cap",
                 "seed"});
    doc.run.max_degree = j["run"].value("max_degree", doc.run.max_degree);
    doc.run.max_homological =
        j["run"].value("max_homological", doc.run.max_homological);
    doc.run.word_cap = j["run"].value("word_cap", doc.run.word_cap);
    doc.run.group_cap = j["run"].value("group_cap", doc.run.group_cap);
    doc.run.seed = j["run"].value("seed", doc.run.seed);
  }
  return doc;
}

InputDocument parse_input_file(const std::string& path, std::string* raw) {
  std::ifstream in(path);
  check(in.good(), ErrorKind::Schema, "cannot open input file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string bytes = ss.str();
  if (raw) *raw = bytes;
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Schema, std::string("JSON parse error: ") + e.what());
  }
  return parse_input(j);
}

std::string scalar_json_str(const NumberField& f, const Scalar& s) {
  return f.to_string(s);
}

Json scalar_to_json(const NumberField& f, const Scalar& s) {
  if (f.is_rational()) return Json(s.c[0].get_str());
  Json arr = Json::array();
  for (const auto& c : s.c) arr.push_back(c.get_str());
  return arr;
}

Json vec_to_json(const NumberField& f, const Vec& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(scalar_to_json(f, s));
  return arr;
}

Json qpoly_to_json(const QPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p) arr.push_back(c.get_str());
  return arr;
}

std::string fnv1a64_hex(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

void strip_timing(Json& j) {
  if (j.is_object()) {
    j.erase("timing_ms");
    for (auto& [k, v] : j.items()) strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timing(v);
  }
}

namespace {
Json element_to_json(const NumberField& f, const NcPoly& p,
                     const std::vector<GenInfo>& gens) {
  Json arr = Json::array();
  for (const auto& t : p.terms) {
    Json term;
    term["coeff"] = scalar_to_json(f, t.coeff);
    Json w = Json::array();
    for (int g : t.word) w.push_back(gens[g].name);
    term["word"] = std::move(w);
    arr.push_back(std::move(term));
  }
  return arr;
}

Json algebra_to_json(const AlgebraPresentation& p) {
  Json j;
  Json gens = Json::array();
  for (const auto& g : p.gens)
    gens.push_back(Json{{"name", g.name}, {"degree", g.degree}});
  j["generators"] = std::move(gens);
  Json rels = Json::array();
  for (const auto& r : p.relations)
    rels.push_back(element_to_json(p.field, r, p.gens));
  j["relations"] = std::move(rels);
  Json a = Json::object();
  if (p.asserts.gldim) a["gldim"] = *p.asserts.gldim;
  if (p.asserts.as_regular) a["as_regular"] = true;
  if (p.asserts.is_domain) a["is_domain"] = true;
  if (p.asserts.noetherian) a["noetherian"] = true;
  if (p.asserts.smash_product_prime) a["smash_product_prime"] = true;
  if (p.asserts.koszul) a["koszul"] = true;
  if (p.asserts.invariants_finite_gldim) a["invariants_finite_gldim"] = true;
  if (p.asserts.invariants_commutative) a["invariants_commutative"] = true;
  if (p.asserts.cm_s) a["cm_s"] = *p.asserts.cm_s;
  if (p.asserts.minus_one_skew) a["minus_one_skew"] = *p.asserts.minus_one_skew;
  if (!a.empty()) j["assert"] = std::move(a);
  return j;
}

Json matrix_to_json(const NumberField& f, const Mat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(scalar_to_json(f, m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json hint_to_json(const DenominatorHint& h) {
  Json j;
  if (!h.product.empty())
    j["product"] = h.product;
  else
    j["poly"] = qpoly_to_json(h.poly);
  if (!h.desc.empty()) j["label"] = h.desc;
  return j;
}
}  // namespace

Json serialize_input(const InputDocument& doc) {
  const NumberField& f = doc.algebra.field;
  Json j;
  if (!f.is_rational() || f.minpoly() != std::vector<Int>{Int(0), Int(1)}) {
    Json fj;
    Json mp = Json::array();
    for (const auto& c : f.minpoly()) mp.push_back(static_cast<long>(c.get_si()));
    fj["minpoly"] = std::move(mp);
    fj["label"] = f.label();
    j["field"] = std::move(fj);
  }
  j["algebra"] = algebra_to_json(doc.algebra);
  Json action;
  if (doc.group) {
    Json g;
    Json gens = Json::array();
    for (const auto& m : doc.group->generators)
      gens.push_back(matrix_to_json(f, m));
    g["generators"] = std::move(gens);
    action["group"] = std::move(g);
  } else if (doc.hopf) {
    const HopfData& h = doc.hopf->hopf;
    Json hj;
    hj["dim"] = h.dim;
    hj["basis"] = h.labels;
    hj["unit"] = vec_to_json(f, h.unit);
    hj["counit"] = vec_to_json(f, h.counit);
    Json mult = Json::array();
    for (int i = 0; i < h.dim; ++i) {
      Json row = Json::array();
      for (int k = 0; k < h.dim; ++k) row.push_back(vec_to_json(f, h.mult[i][k]));
      mult.push_back(std::move(row));
    }
    hj["mult"] = std::move(mult);
    Json cop = Json::array();
    for (int i = 0; i < h.dim; ++i) {
      Json terms = Json::array();
      for (const auto& ct : h.coprod[i])
        terms.push_back(Json{{"coeff", scalar_to_json(f, ct.c)},
                             {"left", ct.left},
                             {"right", ct.right}});
      cop.push_back(std::move(terms));
    }
    hj["coproduct"] = std::move(cop);
    Json anti = Json::array();
    for (int i = 0; i < h.dim; ++i) anti.push_back(vec_to_json(f, h.antipode[i]));
    hj["antipode"] = std::move(anti);
    hj["integral"] = vec_to_json(f, h.integral);
    Json act = Json::array();
    for (const auto& m : doc.hopf->action) act.push_back(matrix_to_json(f, m));
    hj["action"] = std::move(act);
    action["hopf"] = std::move(hj);
  }
  j["action"] = std::move(action);
  if (!doc.central_generators.empty()) {
    Json cg = Json::array();
    for (const auto& e : doc.central_generators)
      cg.push_back(element_to_json(f, e, doc.algebra.gens));
    j["central_subalgebra"] = Json{{"generators", std::move(cg)}};
  }
  if (doc.second) {
    Json s;
    s["algebra"] = algebra_to_json(doc.second->pres);
    Json imgs = Json::array();
    for (const auto& e : doc.second->images)
      imgs.push_back(element_to_json(f, e, doc.algebra.gens));
    s["images"] = std::move(imgs);
    s["surjective"] = doc.second->surjective;
    if (!doc.second->series_hints.empty()) {
      Json hints = Json::array();
      for (const auto& h : doc.second->series_hints)
        hints.push_back(hint_to_json(h));
      s["series_hints"] = std::move(hints);
    }
    j["S"] = std::move(s);
  }
  if (!doc.hints_T.empty() || !doc.hints_R.empty()) {
    Json sh;
    if (!doc.hints_T.empty()) {
      Json t = Json::array();
      for (const auto& h : doc.hints_T) t.push_back(hint_to_json(h));
      sh["T"] = std::move(t);
    }
    if (!doc.hints_R.empty()) {
      Json r = Json::array();
      for (const auto& h : doc.hints_R) r.push_back(hint_to_json(h));
      sh["R"] = std::move(r);
    }
    j["series_hints"] = std::move(sh);
  }
  Json run;
  run["max_degree"] = doc.run.max_degree;
  run["max_homological"] = doc.run.max_homological;
  run["word_cap"] = doc.run.word_cap;
  run["group_cap"] = doc.run.group_cap;
  run["seed"] = doc.run.seed;
  j["run"] = std::move(run);
  return j;
}

}  // namespace ncinv
