#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "jetvar/jetvar.h"

namespace {

int exit_for(jetvar_status s) {
  switch (s) {
    case JETVAR_OK: return 0;
    case JETVAR_VERIFICATION_FAILED: return 1;
    case JETVAR_CONFIG_ERROR:
    case JETVAR_INVALID_ARGUMENT: return 2;
    case JETVAR_TERM_LIMIT: return 3;
    default: return 4;
  }
}

bool apply_term_cap() {
  const char* env = std::getenv("JETVAR_MAX_TERMS");
  if (!env || !*env) return true;
  char* end = nullptr;
  unsigned long long cap = std::strtoull(env, &end, 10);
  if (*end != '\0' || cap == 0 || env[0] == '-') {
    std::cerr << "error: JETVAR_MAX_TERMS must be a positive integer\n";
    return false;
  }
  jetvar_set_max_terms(cap);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Chern-Simons variational identities", "jetvar"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", jetvar_version());

  std::string config_path, dump_path;
  bool compare_background = false;
  std::uint64_t seed = 1;
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--dump", dump_path, "write the untruncated output to this file");
  app.add_flag("--compare-background", compare_background,
               "euler-lagrange: also print the difference between symbolic and zero background");
  app.add_option("--seed", seed, "seed for randomized commands");

  const char* commands[][2] = {
      {"check-algebra", "validate structure constants and the invariant tensor"},
      {"transgression", "verify the transgression identity and its sub-checks"},
      {"euler-lagrange", "print the Euler-Lagrange components of the CS Lagrangian"},
      {"noether", "print the Noether current along the gauge generator"},
      {"verify-conservation", "verify conservation of the modified current"},
      {"first-variational-selftest", "first variational formula on random instances"},
  };
  for (const auto& c : commands) app.add_subcommand(c[0], c[1]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  if (!apply_term_cap()) return 2;

  auto t0 = std::chrono::steady_clock::now();
  jetvar_session* session = nullptr;
  jetvar_status st;
  if (!config_path.empty()) {
    st = jetvar_session_from_file(config_path.c_str(), &session);
  } else if (command == "first-variational-selftest") {
    st = jetvar_session_new(&session);
  } else {
    std::cerr << "error: " << command << " needs --config\n";
    return 2;
  }
  if (st != JETVAR_OK) {
    std::cerr << "error: " << jetvar_last_error() << "\n";
    return exit_for(st);
  }
  jetvar_result* result = nullptr;
  st = jetvar_run(session, command.c_str(), compare_background ? JETVAR_FLAG_COMPARE_BACKGROUND : 0u, seed, &result);
  jetvar_session_free(session);
  if (!result) {
    std::cerr << "error: " << jetvar_last_error() << "\n";
    return exit_for(st);
  }
  std::cout << jetvar_result_text(result);
  std::cout.flush();
  int code = exit_for(st);
  if (!dump_path.empty()) {
    std::ofstream out(dump_path, std::ios::binary);
    out << jetvar_result_dump(result);
    if (!out) {
      std::cerr << "error: cannot write " << dump_path << "\n";
      code = code == 0 ? 2 : code;
    }
  }
  jetvar_result_free(result);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "elapsed %.3fs\n", secs);
  return code;
}
