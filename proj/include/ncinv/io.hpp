#pragma once
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ncinv/hopf.hpp"
#include "ncinv/presentation.hpp"
#include "ncinv/series.hpp"

namespace ncinv {

using Json = nlohmann::ordered_json;

struct GroupActionSpec {
  std::vector<Mat> generators;  // on the ordered generator space
};

struct HopfActionSpec {
  HopfData hopf;
  std::vector<Mat> action;  // one matrix per Hopf basis element
};

struct SecondAlgebraSpec {
  AlgebraPresentation pres;
  std::vector<NcPoly> images;  // element of T per S-generator
  bool surjective = false;     // claim, re-verified to N
  std::vector<DenominatorHint> series_hints;
};

struct RunParams {
  int max_degree = 8;
  int max_homological = 4;
  std::size_t word_cap = 1u << 20;
  std::size_t group_cap = 4096;
  unsigned seed = 1;
};

struct InputDocument {
  AlgebraPresentation algebra;  // carries the field
  std::optional<GroupActionSpec> group;
  std::optional<HopfActionSpec> hopf;
  std::vector<NcPoly> central_generators;
  std::optional<SecondAlgebraSpec> second;
  std::vector<DenominatorHint> hints_T, hints_R;
  RunParams run;
};

// Strict parsing: unknown keys and inconsistent dimensions are schema errors
// carrying a JSON-pointer-ish location.
InputDocument parse_input(const Json& j);
InputDocument parse_input_file(const std::string& path,
                               std::string* raw = nullptr);
Json serialize_input(const InputDocument& doc);

std::string scalar_json_str(const NumberField& f, const Scalar& s);
Json scalar_to_json(const NumberField& f, const Scalar& s);
Json vec_to_json(const NumberField& f, const Vec& v);
Json qpoly_to_json(const QPoly& p);

std::string fnv1a64_hex(const std::string& bytes);

inline constexpr const char* kToolName = "ncinv";
inline constexpr const char* kToolVersion = "0.1.0";

// Strips volatile fields (timing) for the golden-file determinism contract.
void strip_timing(Json& j);

}  // namespace ncinv
