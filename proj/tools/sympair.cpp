// sympair: seeded exact verification runs over the symmetric pair models.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sympair/run.hpp"

namespace {

struct Flag {
  const char* key;
  std::string value;
  CLI::Option* option = nullptr;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sympair::IoError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact seeded checks of restriction identities for symmetric pairs"};
  app.set_version_flag("--version", "sympair 1.0");

  std::vector<Flag> flags = {
      {"pair", {}},    {"n", {}},     {"m", {}},          {"d", {}},
      {"trials", {}},  {"seed", {}},  {"max-degree", {}}, {"max-word-length", {}},
      {"bound", {}},   {"checks", {}}, {"output", {}},    {"samples", {}},
      {"threads", {}},
  };
  const char* help[] = {
      "pair kind: AI, AII, AIII, BDI or CI",
      "rank n",
      "second size m (AIII, BDI; m >= n)",
      "tuple length d",
      "trials per check",
      "master seed (64-bit)",
      "total degree cap for enumerated words",
      "cyclic word length cap (block kinds)",
      "coefficient bound B for sampling",
      "comma list of checks, or 'all' for every check (must all apply)",
      "report path, '-' for stdout",
      "sample points for the generation check (0: automatic)",
      "worker threads",
  };
  for (std::size_t i = 0; i < flags.size(); ++i)
    flags[i].option = app.add_option(std::string("--") + flags[i].key, flags[i].value, help[i]);

  bool allow_even_m = false;
  auto* even_opt =
      app.add_flag("--allow-even-m", allow_even_m, "run BDI generation with m even anyway");
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file (flags take precedence)");
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "no summary on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  sympair::RunConfig config;
  try {
    if (!config_path.empty()) sympair::apply_config_text(config, read_file(config_path));
    if (const char* env = std::getenv("SYMPAIR_SEED"); env && *env)
      sympair::apply_setting(config, "seed", env);
    for (const auto& f : flags)
      if (f.option->count() > 0) sympair::apply_setting(config, f.key, f.value);
    if (even_opt->count() > 0) config.allow_even_m = allow_even_m;
    for (const auto& w : sympair::validate_config(config)) std::cerr << "warning: " << w << '\n';
  } catch (const sympair::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const sympair::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 3;
  }

  sympair::Report report;
  try {
    report = sympair::run(config);
  } catch (const sympair::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }

  try {
    sympair::emit_report(report, config.output);
  } catch (const sympair::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 3;
  }

  if (!quiet) {
    const auto s = report.summary();
    std::cerr << report.config.descriptor().label() << " d=" << config.d << ": " << s.pass
              << " pass, " << s.fail << " fail, " << s.inconclusive << " inconclusive, " << s.total
              << " total\n";
  }
  return sympair::exit_status(report);
}
