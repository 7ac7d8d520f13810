#include <CLI11.hpp>
#include <chrono>
#include <future>
#include <set>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "ncinv/error.hpp"
#include "ncinv/fixtures.hpp"
#include "ncinv/pipeline.hpp"

namespace {

using namespace ncinv;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Schema:
      return 2;
    case ErrorKind::Caps:
      return 3;
    default:
      return 1;
  }
}

struct CliOptions {
  std::string command;
  std::vector<std::string> inputs;
  int jobs = 1;
  std::optional<int> max_degree, max_homological;
  std::optional<unsigned> seed;
  std::string output = "json";
  std::string out_path;
  std::string fixtures_dir;
  std::optional<int> m;
  bool update_golden = false;
};

std::vector<std::string> sections_for(const std::string& cmd) {
  if (cmd == "validate") return {"validate"};
  if (cmd == "basis") return {"basis"};
  if (cmd == "invariants") return {"invariants"};
  if (cmd == "beta") return {"beta"};
  if (cmd == "tau") return {"tau"};
  if (cmd == "hilbert-ideal") return {"hilbert-ideal"};
  if (cmd == "annihilators") return {"annihilators"};
  if (cmd == "resolve" || cmd == "betti") return {"resolve"};
  if (cmd == "torreg") return {"resolve", "torreg"};
  if (cmd == "cmreg") return {"series", "cmreg"};
  if (cmd == "series") return {"series"};
  if (cmd == "check-bounds") return {"check-bounds"};
  return {"all"};
}

PipelineOptions pipeline_options_for(const std::string& cmd) {
  PipelineOptions o;
  bool heavy = cmd == "annihilators" || cmd == "resolve" || cmd == "betti" ||
               cmd == "torreg" || cmd == "check-bounds" || cmd == "reproduce";
  o.homology = heavy;
  o.annihilators = cmd == "annihilators" || cmd == "check-bounds" ||
                   cmd == "reproduce";
  o.series = cmd == "series" || cmd == "cmreg" || cmd == "check-bounds" ||
             cmd == "reproduce";
  o.bounds = cmd == "check-bounds" || cmd == "reproduce";
  o.validate_only = cmd == "validate";
  return o;
}

void render_text(const Json& j, std::ostream& os, int indent = 0) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (k == "rows" && v.is_array()) {
        os << pad << "rows:\n";
        for (const auto& row : v) {
          os << pad << "  " << row.value("id", std::string()) << ": "
             << row.value("statement", std::string()) << "  ["
             << row.value("lhs", std::string()) << " vs "
             << row.value("rhs", std::string()) << "]  "
             << row.value("status", std::string())
             << (row.value("hypotheses_satisfied", false)
                     ? " (hypotheses ok)"
                     : " (hypotheses not all satisfied)")
             << "\n";
        }
        continue;
      }
      if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_object())) {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) render_text(v, os, indent);
  } else {
    os << pad << j.dump() << "\n";
  }
}

int run_one(const CliOptions& cli, const std::string& input_path,
            const std::string& argv0, std::string& report_out) {
  auto t0 = std::chrono::steady_clock::now();
  std::string raw;
  std::string path = input_path;
  bool is_reproduce = cli.command == "reproduce";
  std::string stem;
  std::string fixdir;
  if (is_reproduce) {
    fixdir = cli.fixtures_dir.empty() ? locate_fixture_dir(argv0)
                                      : cli.fixtures_dir;
    stem = fixture_stem(FixtureId{input_path, cli.m});
    path = fixdir + "/" + stem + ".json";
  }
  InputDocument doc = parse_input_file(path, &raw);
  if (cli.max_degree) doc.run.max_degree = *cli.max_degree;
  if (cli.max_homological) doc.run.max_homological = *cli.max_homological;
  if (cli.seed) doc.run.seed = *cli.seed;

  FixtureComputation fc =
      run_pipeline(doc, pipeline_options_for(cli.command));

  Json rep;
  rep["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  rep["input"] =
      Json{{"path", path}, {"fnv1a64", fnv1a64_hex(raw)}};
  rep["params"] = Json{{"max_degree", doc.run.max_degree},
                       {"max_homological", doc.run.max_homological},
                       {"seed", doc.run.seed}};
  Json body = fixture_report(fc, sections_for(cli.command));
  for (auto& [k, v] : body.items()) rep[k] = v;
  auto t1 = std::chrono::steady_clock::now();
  rep["timing_ms"] = Json{
      {"total",
       std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
           .count()}};

  int code = 0;
  if (cli.command == "validate" &&
      (!fc.hopf_report.ok || !fc.action_report.ok))
    code = 2;
  if (fc.bounds && fc.bounds->has_hard_violation()) code = 4;

  if (is_reproduce) {
    Json canon = rep;
    strip_timing(canon);
    canon["input"].erase("path");  // location-independent golden
    std::string golden_path = fixdir + "/golden/" + stem + ".json";
    if (cli.update_golden) {
      std::ofstream out(golden_path);
      check(out.good(), ErrorKind::Schema,
            "cannot write golden file " + golden_path);
      out << canon.dump(1) << "\n";
    } else {
      std::ifstream in(golden_path);
      check(in.good(), ErrorKind::Schema,
            "missing golden file " + golden_path);
      Json expected = Json::parse(in);
      if (expected != canon) {
        std::cerr << "golden mismatch for " << stem << "\n";
        const auto diff =
            nlohmann::json::diff(nlohmann::json::parse(expected.dump()),
                                 nlohmann::json::parse(canon.dump()));
        std::cerr << diff.dump(1) << "\n";
        return code == 0 ? 1 : code;
      }
      rep["golden"] = "match";
    }
  }

  std::ostringstream body_out;
  if (cli.output == "text")
    render_text(rep, body_out);
  else
    body_out << rep.dump(1) << "\n";
  if (cli.out_path.empty()) {
    report_out = body_out.str();
  } else {
    std::ofstream out(cli.out_path);
    check(out.good(), ErrorKind::Schema, "cannot open " + cli.out_path);
    out << body_out.str();
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncinv: invariant subrings of Hopf actions on connected "
               "graded algebras, degree by degree"};
  CliOptions cli;
  app.add_option("command", cli.command, "one of: validate basis invariants "
                                         "beta tau hilbert-ideal annihilators "
                                         "resolve betti torreg cmreg series "
                                         "check-bounds reproduce")
      ->required();
  app.add_option("inputs", cli.inputs,
                 "input documents (or a fixture id for reproduce)");
  int max_degree = -1, max_hom = -1, m_param = -1;
  long seed = -1;
  app.add_option("--max-degree", max_degree, "truncation degree N (default 8)");
  app.add_option("--max-homological", max_hom,
                 "homological bound p_max (default 4)");
  app.add_option("--seed", seed, "property-test sampling seed");
  app.add_option("--output", cli.output, "json|text")->check(
      CLI::IsMember({"json", "text"}));
  app.add_option("--out", cli.out_path, "write the report to a file");
  app.add_option("--fixtures", cli.fixtures_dir, "fixtures directory");
  app.add_option("--m", m_param, "family parameter for ex1.2.1 / ex3.6");
  app.add_flag("--update-golden", cli.update_golden,
               "rewrite the golden file instead of diffing (maintainers)");
  app.add_option("--jobs", cli.jobs, "worker pool size for input batches")
      ->check(CLI::Range(1, 64));
  CLI11_PARSE(app, argc, argv);
  if (max_degree >= 0) cli.max_degree = max_degree;
  if (max_hom >= 0) cli.max_homological = max_hom;
  if (seed >= 0) cli.seed = static_cast<unsigned>(seed);
  if (m_param >= 0) cli.m = m_param;

  const std::set<std::string> commands = {
      "validate",     "basis",    "invariants", "beta",
      "tau",          "hilbert-ideal", "annihilators", "resolve",
      "betti",        "torreg",   "cmreg",      "series",
      "check-bounds", "reproduce"};
  if (!commands.count(cli.command)) {
    std::cerr << "unknown command " << cli.command << "\n";
    return 2;
  }
  if (cli.inputs.empty()) {
    std::cerr << "no input given\n";
    return 2;
  }

  // Fixtures in a batch run on a worker pool; reports print in input order.
  std::string argv0 = argv[0];
  struct Outcome {
    int code = 0;
    std::string report, error;
  };
  auto work = [&](const std::string& input) {
    Outcome o;
    try {
      o.code = run_one(cli, input, argv0, o.report);
    } catch (const ncinv::Error& e) {
      o.error = e.what();
      o.code = exit_code_for(e.kind());
    } catch (const std::exception& e) {
      o.error = e.what();
      o.code = 1;
    }
    return o;
  };
  std::vector<Outcome> results(cli.inputs.size());
  if (cli.jobs <= 1 || cli.inputs.size() <= 1) {
    for (size_t i = 0; i < cli.inputs.size(); ++i)
      results[i] = work(cli.inputs[i]);
  } else {
    std::vector<std::future<Outcome>> futs(cli.inputs.size());
    size_t next = 0, done = 0;
    while (done < cli.inputs.size()) {
      size_t inflight = next - done;
      while (next < cli.inputs.size() &&
             inflight < static_cast<size_t>(cli.jobs)) {
        futs[next] = std::async(std::launch::async, work, cli.inputs[next]);
        ++next;
        ++inflight;
      }
      results[done] = futs[done].get();
      ++done;
    }
  }
  int worst = 0;
  for (const auto& o : results) {
    if (!o.report.empty()) std::cout << o.report;
    if (!o.error.empty()) std::cerr << "error: " << o.error << "\n";
    worst = std::max(worst, o.code);
  }
  return worst;
}
