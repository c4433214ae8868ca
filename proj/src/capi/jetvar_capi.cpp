#include "jetvar/jetvar.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "app/commands.hpp"
#include "common/error.hpp"
#include "symbolic/poly_parse.hpp"

struct jetvar_session {
  std::optional<jetvar::RunConfig> config;
};

struct jetvar_result {
  jetvar::CommandOutput output;
};

struct jetvar_poly {
  jetvar::Polynomial value;
};

namespace {

thread_local std::string g_last_error;

jetvar_status status_for(jetvar::ErrorCode code) {
  switch (jetvar::exit_code_for(code)) {
    case 2:
      return code == jetvar::ErrorCode::ConfigError ? JETVAR_CONFIG_ERROR : JETVAR_INVALID_ARGUMENT;
    case 3:
      return JETVAR_TERM_LIMIT;
    default:
      return JETVAR_VERIFICATION_FAILED;
  }
}

template <class F>
jetvar_status guard(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const jetvar::Error& e) {
    g_last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return JETVAR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return JETVAR_INTERNAL;
  }
}

jetvar_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return JETVAR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* jetvar_version(void) { return "1.0.0"; }

const char* jetvar_last_error(void) { return g_last_error.c_str(); }

void jetvar_set_max_terms(uint64_t cap) { jetvar::set_max_terms(cap ? cap : 10'000'000ull); }

uint64_t jetvar_max_terms(void) { return jetvar::max_terms(); }

jetvar_status jetvar_session_new(jetvar_session** out) {
  if (!out) return null_argument("out");
  return guard([&] {
    *out = new jetvar_session{};
    return JETVAR_OK;
  });
}

jetvar_status jetvar_session_from_file(const char* path, jetvar_session** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!path) return null_argument("path");
  return guard([&] {
    auto cfg = jetvar::load_config_file(path);
    *out = new jetvar_session{std::move(cfg)};
    return JETVAR_OK;
  });
}

jetvar_status jetvar_session_from_string(const char* json, jetvar_session** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!json) return null_argument("json");
  return guard([&] {
    auto cfg = jetvar::parse_config(json);
    *out = new jetvar_session{std::move(cfg)};
    return JETVAR_OK;
  });
}

void jetvar_session_free(jetvar_session* session) { delete session; }

jetvar_status jetvar_run(jetvar_session* session, const char* command, unsigned flags, uint64_t seed,
                         jetvar_result** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!session) return null_argument("session");
  if (!command) return null_argument("command");
  return guard([&] {
    jetvar::CommandOptions opt;
    opt.compare_background = (flags & JETVAR_FLAG_COMPARE_BACKGROUND) != 0;
    opt.seed = seed;
    auto output = jetvar::run_command(command, session->config, opt);
    const int code = output.exit_code;
    *out = new jetvar_result{std::move(output)};
    return code == 0 ? JETVAR_OK : JETVAR_VERIFICATION_FAILED;
  });
}

const char* jetvar_result_text(const jetvar_result* result) { return result ? result->output.text.c_str() : ""; }

const char* jetvar_result_dump(const jetvar_result* result) { return result ? result->output.dump.c_str() : ""; }

int jetvar_result_passed(const jetvar_result* result) { return result && result->output.exit_code == 0; }

void jetvar_result_free(jetvar_result* result) { delete result; }

jetvar_status jetvar_poly_parse(const char* text, jetvar_poly** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!text) return null_argument("text");
  return guard([&] {
    *out = new jetvar_poly{jetvar::parse_polynomial(text)};
    return JETVAR_OK;
  });
}

jetvar_status jetvar_poly_mul(const jetvar_poly* a, const jetvar_poly* b, jetvar_poly** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!a || !b) return null_argument("operand");
  return guard([&] {
    *out = new jetvar_poly{a->value * b->value};
    return JETVAR_OK;
  });
}

jetvar_status jetvar_poly_add(const jetvar_poly* a, const jetvar_poly* b, jetvar_poly** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!a || !b) return null_argument("operand");
  return guard([&] {
    *out = new jetvar_poly{a->value + b->value};
    return JETVAR_OK;
  });
}

jetvar_status jetvar_poly_partial(const jetvar_poly* p, const char* var, jetvar_poly** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!p || !var) return null_argument("operand");
  return guard([&] {
    *out = new jetvar_poly{jetvar::partial(p->value, jetvar::parse_indeterminate(var))};
    return JETVAR_OK;
  });
}

char* jetvar_poly_to_string(const jetvar_poly* p) {
  if (!p) return nullptr;
  std::string s = p->value.to_string();
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void jetvar_poly_free(jetvar_poly* p) { delete p; }

void jetvar_string_free(char* s) { std::free(s); }

}  // extern "C"
