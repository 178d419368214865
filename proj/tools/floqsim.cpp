// floqsim: build codes, run schedules, reproduce tables, self-test.
// Exit codes: 0 success, 2 config error, 3 engine error, 4 reproduction mismatch.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "floqsim/code.hpp"
#include "floqsim/errors.hpp"
#include "floqsim/report.hpp"
#include "floqsim/schedule.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitEngine = 3;
constexpr int kExitMismatch = 4;

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw floqsim::ConfigError("cannot write '" + path + "'");
  f << text << "\n";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace floqsim;
  CLI::App app{"Floquet code stabilizer simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string family, boundary = "torus", out;
  int size = 0;
  auto* build = app.add_subcommand("build", "Build a code and write it as JSON");
  build->add_option("--family", family, "Code family")->required();
  build->add_option("--size", size, "Linear size L")->required();
  build->add_option("--boundary", boundary, "torus or planar");
  build->add_option("--out", out, "Output path (default stdout)");

  RunConfig rc;
  std::string config_path, analyses = "k", init, csv;
  auto* runc = app.add_subcommand("run", "Simulate a schedule and write a report");
  runc->add_option("--config", config_path, "JSON config file; command-line flags are ignored when given");
  runc->add_option("--family", rc.family, "Code family");
  runc->add_option("--size", rc.L, "Linear size L");
  runc->add_option("--boundary", rc.boundary, "torus or planar");
  runc->add_option("--schedule", rc.schedule, "Declared schedule name or label sequence");
  runc->add_option("--init", init, "Init prefix override");
  runc->add_option("--periods", rc.periods, "Measured periods");
  runc->add_option("--warmup", rc.warmup, "Warm-up periods");
  runc->add_option("--analyses", analyses, "Comma list of k,automorphism,nonlocal,surviving,reversibility");
  runc->add_option("--diameter", rc.diameter, "Box diameter for nonlocal counting");
  runc->add_option("--seed", rc.seed, "Seed (recorded in the report)");
  runc->add_option("--out", rc.out, "Report path (default stdout summary only)");
  runc->add_option("--csv", csv, "Per-round CSV path");

  std::string table;
  int rsize = 0;
  std::string rout;
  auto* repro = app.add_subcommand("reproduce", "Run a pinned table and compare with expected values");
  repro->add_option("table", table, "table1, table2, colorcode, ftc3d, planar2d or planar3d")->required();
  repro->add_option("--size", rsize, "Override the table's default L");
  repro->add_option("--out", rout, "Report path");

  std::uint64_t seed = 1;
  auto* self = app.add_subcommand("selftest", "Run the oracle and invariant suites");
  self->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*build) {
      CodeInstance c = build_code(family_from_name(family), size, {{"boundary", boundary}});
      write_out(out, code_to_json(c));
      if (!out.empty()) std::cerr << "wrote " << c.n_qubits() << " qubits, " << c.checks.size() << " checks to " << out << "\n";
      return 0;
    }
    if (*runc) {
      if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw ConfigError("cannot read '" + config_path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        rc = parse_run_config(ss.str());
      } else {
        rc.analyses = split_list(analyses);
        if (!init.empty()) rc.init = init;
      }
      Json rep = cmd_run(rc);
      std::cout << report_summary(rep);
      if (!rc.out.empty()) write_out(rc.out, rep.dump(2));
      if (!csv.empty()) {
        std::ostringstream os;
        os << "round,label,rank,k" << (rep["rounds"].empty() || !rep["rounds"][0].contains("nonlocal_count") ? "" : ",nonlocal_count") << "\n";
        for (const auto& r : rep["rounds"]) {
          os << r["round"].get<std::size_t>() << ',' << r["label"].get<std::string>() << ',' << r["rank"].get<std::size_t>()
             << ',' << r["k"].get<std::size_t>();
          if (r.contains("nonlocal_count")) os << ',' << r["nonlocal_count"].get<std::size_t>();
          os << "\n";
        }
        std::ofstream f(csv);
        if (!f) throw ConfigError("cannot write '" + csv + "'");
        f << os.str();
      }
      return 0;
    }
    if (*repro) {
      auto r = cmd_reproduce(table, rsize ? std::optional<int>(rsize) : std::nullopt);
      for (const auto& l : r.lines) std::cout << l << "\n";
      std::cout << (r.ok ? "all expectations met" : "MISMATCH") << "\n";
      if (!rout.empty()) write_out(rout, r.report.dump(2));
      return r.ok ? 0 : kExitMismatch;
    }
    if (*self) {
      auto r = cmd_selftest(seed);
      for (const auto& l : r.lines) std::cout << l << "\n";
      return r.ok ? 0 : kExitEngine;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::config ? kExitConfig : kExitEngine;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEngine;
  }
  return 0;
}
