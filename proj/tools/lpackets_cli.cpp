// lpackets command line: describe | packet | endoscopy | verify | oracle
// Configs and reports are JSON; see README for the schema.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

#include "lpackets/jobs.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lpk::Error("cannot open config file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void emit(const lpk::Json& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw lpk::Error("cannot write '" + out_path + "'");
    out << text;
  }
}

void print_verify_summary(const lpk::Json& rep) {
  if (!rep.value("supported", true)) {
    std::cerr << "unsupported configuration: "
              << rep.value("reason", std::string("?")) << "\n";
    return;
  }
  std::cerr << "max residual " << rep["max_residual"].get<double>()
            << " (rhs consistency " << rep["max_rhs_consistency"].get<double>()
            << ") over " << rep["per_sample"].size() << " samples: "
            << (rep["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

void print_oracle_summary(const lpk::Json& rep) {
  for (const auto& row : rep["rows"])
    std::cerr << (row["match"].get<bool>() ? "  ok   " : "  MISMATCH ")
              << row["quantity"].get<std::string>() << ": oracle "
              << row["oracle"].get<std::string>() << " vs combinatorial "
              << row["combinatorial"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete-series L-packets and endoscopic character identities"};
  app.require_subcommand(1);

  std::string config_path, out_path, oracle_family;
  int samples = -1;
  long long seed = -1;
  double tol = -1.0;

  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    if (needs_config)
      cmd->add_option("--config", config_path, "job config (JSON)")->required();
    cmd->add_option("--out", out_path, "write the JSON report to a file");
  };

  CLI::App* cmd_describe = app.add_subcommand("describe", "root datum, gradings, cohomology");
  add_common(cmd_describe, true);
  CLI::App* cmd_packet = app.add_subcommand("packet", "packet members, classes, pairings");
  add_common(cmd_packet, true);
  CLI::App* cmd_endo = app.add_subcommand("endoscopy", "endoscopic side summary");
  add_common(cmd_endo, true);
  CLI::App* cmd_verify = app.add_subcommand("verify", "endoscopic character identity check");
  add_common(cmd_verify, true);
  cmd_verify->add_option("--samples", samples, "override sample count");
  cmd_verify->add_option("--seed", seed, "override PRNG seed");
  cmd_verify->add_option("--tol", tol, "override tolerance");
  CLI::App* cmd_oracle = app.add_subcommand("oracle", "matrix-model cross check");
  cmd_oracle->add_option("--family", oracle_family, "A1-sc or A1-adj")->required();
  add_common(cmd_oracle, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_oracle->parsed()) {
      lpk::Json rep = lpk::oracle_report(oracle_family);
      print_oracle_summary(rep);
      emit(rep, out_path);
      return lpk::exit_code_for_oracle(rep);
    }
    lpk::JobConfig cfg = lpk::parse_config_text(read_file(config_path));
    if (samples > 0) cfg.samples = samples;
    if (seed >= 0) cfg.seed = static_cast<unsigned long long>(seed);
    if (tol > 0) cfg.tolerance = tol;

    if (cmd_describe->parsed()) {
      emit(lpk::describe(cfg), out_path);
      return 0;
    }
    if (cmd_packet->parsed()) {
      emit(lpk::packet_report(cfg), out_path);
      return 0;
    }
    if (cmd_endo->parsed()) {
      emit(lpk::endoscopy_report(cfg), out_path);
      return 0;
    }
    lpk::Json rep = lpk::verify_report(cfg);
    print_verify_summary(rep);
    emit(rep, out_path);
    return lpk::exit_code_for_verify(rep);
  } catch (const lpk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (std::string(e.what()).find("no oracle model") != std::string::npos)
      return 3;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
