#include "ncinv/fixtures.hpp"

#include <cstdlib>
#include <filesystem>

#include "ncinv/error.hpp"

namespace ncinv {

std::vector<std::string> builtin_fixture_ids() {
  return {"ex1.2.1", "ex1.2.2", "ex1.2.3", "ex1.3",
          "ex1.8",   "ex3.4",   "ex3.6",   "ex3.7"};
}

std::string fixture_stem(const FixtureId& fid) {
  auto want_m = [&](int lo, int hi, int def) {
    int m = fid.m.value_or(def);
    check(m >= lo && m <= hi, ErrorKind::Schema,
          fid.id + ": parameter m must be in [" + std::to_string(lo) + ", " +
              std::to_string(hi) + "]");
    return m;
  };
  if (fid.id == "ex1.2.1") {
    int m = want_m(2, 5, 3);
    return "ex1.2.1_m" + std::to_string(m);
  }
  if (fid.id == "ex3.6") {
    int m = want_m(3, 5, 4);
    return "ex3.6_m" + std::to_string(m);
  }
  for (const auto& id : builtin_fixture_ids())
    if (id == fid.id) {
      check(!fid.m.has_value(), ErrorKind::Schema,
            fid.id + " takes no parameter");
      return fid.id;
    }
  throw Error(ErrorKind::Schema, "unknown fixture id " + fid.id);
}

std::string locate_fixture_dir(const std::string& argv0) {
  namespace fs = std::filesystem;
  if (const char* env = std::getenv("NCINV_FIXTURES")) {
    if (fs::is_directory(env)) return env;
  }
  if (fs::is_directory("fixtures")) return "fixtures";
  std::error_code ec;
  fs::path exe = fs::weakly_canonical(fs::path(argv0), ec);
  if (!ec) {
    fs::path guess = exe.parent_path() / ".." / "fixtures";
    if (fs::is_directory(guess)) return guess.string();
    guess = exe.parent_path() / ".." / ".." / "fixtures";
    if (fs::is_directory(guess)) return guess.string();
  }
  throw Error(ErrorKind::Schema,
              "cannot locate the fixtures directory (set NCINV_FIXTURES)");
}

}  // namespace ncinv
