#pragma once
#include <optional>
#include <string>
#include <vector>

namespace ncinv {

struct FixtureId {
  std::string id;        // e.g. "ex3.4"
  std::optional<int> m;  // family parameter where applicable
};

std::vector<std::string> builtin_fixture_ids();

// File stem under the fixtures directory ("ex1.2.1_m3" etc); throws
// ErrorKind::Schema for unknown ids or unsupported parameters.
std::string fixture_stem(const FixtureId& fid);

// Locates the fixtures directory: $NCINV_FIXTURES, ./fixtures, or
// <exe-dir>/../fixtures, first hit wins.
std::string locate_fixture_dir(const std::string& argv0);

}  // namespace ncinv
