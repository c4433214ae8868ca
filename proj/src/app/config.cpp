#include "app/config.hpp"

#include <fstream>
#include <sstream>

#include "common/error.hpp"
#include "json.hpp"

namespace jetvar {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ConfigError, (where.empty() ? std::string("/") : where) + ": " + what);
}

int as_int(const json& v, const std::string& where, int lo, int hi) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  auto x = v.get<long long>();
  if (x < lo || x > hi) fail(where, "value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                                        std::to_string(hi) + "]");
  return static_cast<int>(x);
}

Rational as_rational(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "rationals are written as \"p/q\" strings");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    fail(where, "bad rational \"" + v.get<std::string>() + "\"");
  }
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) fail(where + "/" + it.key(), "unknown key");
  }
}

AlgebraSpec parse_algebra(const json& v) {
  AlgebraSpec s;
  if (v.is_string()) {
    s.name = v.get<std::string>();
    try {
      builtin_algebra(s.name);  // rejects unknown names early
    } catch (const Error& e) {
      fail("/algebra", e.detail());
    }
    return s;
  }
  check_keys(v, "/algebra", {"dim", "structure_constants", "name"});
  s.builtin = false;
  s.name = v.contains("name") ? as_string(v["name"], "/algebra/name") : "custom";
  if (!v.contains("dim")) fail("/algebra", "missing \"dim\"");
  s.dim = as_int(v["dim"], "/algebra/dim", 1, 16);
  if (!v.contains("structure_constants")) fail("/algebra", "missing \"structure_constants\"");
  const json& sc = v["structure_constants"];
  if (!sc.is_array()) fail("/algebra/structure_constants", "expected an array");
  for (std::size_t i = 0; i < sc.size(); ++i) {
    std::string w = "/algebra/structure_constants/" + std::to_string(i);
    const json& e = sc[i];
    if (!e.is_array() || e.size() != 4) fail(w, "expected [r, p, q, \"value\"]");
    s.entries.push_back({as_int(e[0], w + "/0", 0, s.dim - 1), as_int(e[1], w + "/1", 0, s.dim - 1),
                         as_int(e[2], w + "/2", 0, s.dim - 1), as_rational(e[3], w + "/3")});
  }
  return s;
}

InvariantSpec parse_invariant(const json& v) {
  InvariantSpec s;
  if (v.is_string()) {
    std::string name = v.get<std::string>();
    if (name == "killing") s.kind = InvariantSpec::Kind::Killing;
    else if (name == "u1-su2-cubic") s.kind = InvariantSpec::Kind::U1Su2Cubic;
    else if (name == "unit") s.kind = InvariantSpec::Kind::Unit;
    else fail("/invariant", "unknown invariant \"" + name + "\" (killing, u1-su2-cubic, unit)");
    return s;
  }
  check_keys(v, "/invariant", {"degree", "entries", "symmetrize"});
  s.kind = InvariantSpec::Kind::Explicit;
  if (!v.contains("degree")) fail("/invariant", "missing \"degree\"");
  s.degree = as_int(v["degree"], "/invariant/degree", 2, 8);
  if (v.contains("symmetrize")) {
    if (!v["symmetrize"].is_boolean()) fail("/invariant/symmetrize", "expected true or false");
    s.symmetrize = v["symmetrize"].get<bool>();
  }
  if (!v.contains("entries")) fail("/invariant", "missing \"entries\"");
  const json& en = v["entries"];
  if (!en.is_array()) fail("/invariant/entries", "expected an array");
  for (std::size_t i = 0; i < en.size(); ++i) {
    std::string w = "/invariant/entries/" + std::to_string(i);
    const json& e = en[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_array()) fail(w, "expected [[indices...], \"value\"]");
    if (static_cast<int>(e[0].size()) != s.degree) fail(w + "/0", "index count differs from degree");
    std::vector<int> idx;
    for (std::size_t j = 0; j < e[0].size(); ++j) idx.push_back(as_int(e[0][j], w + "/0/" + std::to_string(j), 0, 255));
    s.entries.emplace_back(std::move(idx), as_rational(e[1], w + "/1"));
  }
  return s;
}

InvariantSectorSpec parse_sector(const json& v) {
  InvariantSectorSpec s;
  s.enabled = true;
  if (v.is_string()) {
    if (v.get<std::string>() != "charged-doublet")
      fail("/invariant_lagrangian", "unknown model \"" + v.get<std::string>() + "\" (charged-doublet)");
    s.builtin_model = true;
    s.matter_dim = 2;
    return s;
  }
  check_keys(v, "/invariant_lagrangian", {"matter_dim", "density", "matter_variations"});
  if (!v.contains("matter_dim") || !v.contains("density"))
    fail("/invariant_lagrangian", "needs \"matter_dim\" and \"density\"");
  s.matter_dim = as_int(v["matter_dim"], "/invariant_lagrangian/matter_dim", 0, 16);
  s.density = as_string(v["density"], "/invariant_lagrangian/density");
  if (v.contains("matter_variations")) {
    const json& mv = v["matter_variations"];
    if (!mv.is_array()) fail("/invariant_lagrangian/matter_variations", "expected an array");
    for (std::size_t i = 0; i < mv.size(); ++i) {
      std::string w = "/invariant_lagrangian/matter_variations/" + std::to_string(i);
      if (!mv[i].is_array() || mv[i].size() != 2) fail(w, "expected [A, \"polynomial\"]");
      s.variations.emplace_back(as_int(mv[i][0], w + "/0", 0, s.matter_dim - 1), as_string(mv[i][1], w + "/1"));
    }
  }
  return s;
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

std::string RunConfig::summary() const {
  std::string s = "algebra=" + algebra.name + " k=" + std::to_string(k) + " n=" + std::to_string(2 * k - 1);
  s += std::string(" background=") + (background == Background::Zero ? "zero" : "symbolic");
  s += " h=" + h.to_string() + " jet_order=" + std::to_string(jet_order);
  s += std::string(" gauge=") + (gauge_zero ? "zero" : "symbolic");
  if (sector.enabled) s += " matter_dim=" + std::to_string(sector.matter_dim);
  return s;
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    auto pos = msg.find("parse error");
    if (pos != std::string::npos) msg = msg.substr(pos);
    throw Error(ErrorCode::ConfigError, line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
  }
  check_keys(doc, "", {"algebra", "invariant", "k", "background", "h", "jet_order", "gauge_parameter",
                       "invariant_lagrangian", "selftest"});
  RunConfig c;
  if (!doc.contains("algebra")) fail("", "missing \"algebra\"");
  try {
    c.algebra = parse_algebra(doc["algebra"]);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError) throw;
    fail("/algebra", e.detail());
  }
  c.invariant = parse_invariant(doc.contains("invariant") ? doc["invariant"] : json("killing"));
  if (doc.contains("k")) {
    c.k = as_int(doc["k"], "/k", 2, 8);
  } else if (c.invariant.kind == InvariantSpec::Kind::Explicit) {
    c.k = c.invariant.degree;
  } else if (c.invariant.kind == InvariantSpec::Kind::U1Su2Cubic) {
    c.k = 3;
  }
  if (c.invariant.kind == InvariantSpec::Kind::Explicit && c.invariant.degree != c.k)
    fail("/invariant/degree", "tensor degree differs from k");
  if (c.invariant.kind == InvariantSpec::Kind::Killing && c.k != 2) fail("/k", "the Killing form needs k = 2");
  if (c.invariant.kind == InvariantSpec::Kind::U1Su2Cubic && c.k != 3) fail("/k", "the cubic tensor needs k = 3");
  if (doc.contains("background")) {
    std::string b = as_string(doc["background"], "/background");
    if (b == "zero") c.background = Background::Zero;
    else if (b == "symbolic") c.background = Background::Symbolic;
    else fail("/background", "expected \"zero\" or \"symbolic\"");
  }
  if (doc.contains("h")) c.h = as_rational(doc["h"], "/h");
  if (c.h.is_zero()) fail("/h", "h must be nonzero");
  if (doc.contains("jet_order")) c.jet_order = as_int(doc["jet_order"], "/jet_order", 1, 8);
  if (doc.contains("gauge_parameter")) {
    std::string g = as_string(doc["gauge_parameter"], "/gauge_parameter");
    if (g == "zero") c.gauge_zero = true;
    else if (g != "symbolic") fail("/gauge_parameter", "expected \"symbolic\" or \"zero\"");
  }
  if (doc.contains("invariant_lagrangian")) c.sector = parse_sector(doc["invariant_lagrangian"]);
  if (doc.contains("selftest")) {
    const json& st = doc["selftest"];
    check_keys(st, "/selftest", {"instances", "dims"});
    if (st.contains("instances")) c.selftest_instances = as_int(st["instances"], "/selftest/instances", 1, 100000);
    if (st.contains("dims")) {
      if (!st["dims"].is_array() || st["dims"].empty()) fail("/selftest/dims", "expected a nonempty array");
      c.selftest_dims.clear();
      for (std::size_t i = 0; i < st["dims"].size(); ++i)
        c.selftest_dims.push_back(as_int(st["dims"][i], "/selftest/dims/" + std::to_string(i), 1, 6));
    }
  }
  return c;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

LieAlgebraData build_algebra(const AlgebraSpec& spec) {
  if (spec.builtin) return builtin_algebra(spec.name);
  return load_lie_algebra(spec.dim, spec.entries, spec.name);
}

InvariantTensor build_invariant(const InvariantSpec& spec, const LieAlgebraData& g, int k) {
  switch (spec.kind) {
    case InvariantSpec::Kind::Killing: {
      auto K = killing_form(g);
      bool zero = true;
      for (const auto& row : K)
        for (const auto& x : row) zero = zero && x.is_zero();
      if (zero) throw Error(ErrorCode::ConfigError, "/invariant: Killing form vanishes for this algebra");
      return tensor_from_matrix(K);
    }
    case InvariantSpec::Kind::U1Su2Cubic:
      return u1_su2_cubic(g);
    case InvariantSpec::Kind::Unit: {
      InvariantTensor b(g.dim(), k);
      for (int r = 0; r < g.dim(); ++r) b.set(std::vector<int>(static_cast<std::size_t>(k), r), Rational(1));
      return b;
    }
    case InvariantSpec::Kind::Explicit: {
      InvariantTensor b(g.dim(), spec.degree);
      for (const auto& [idx, v] : spec.entries) {
        for (int i : idx)
          if (i >= g.dim()) throw Error(ErrorCode::ConfigError, "/invariant/entries: index beyond algebra dimension");
        if (spec.symmetrize) b.set_symmetric(idx, v);
        else b.set(idx, v);
      }
      b.require_symmetric();
      return b;
    }
  }
  throw Error(ErrorCode::ConfigError, "/invariant: unsupported kind");
}

CSData build_cs(const RunConfig& cfg) {
  LieAlgebraData g = build_algebra(cfg.algebra);
  InvariantTensor b = build_invariant(cfg.invariant, g, cfg.k);
  return CSData(std::move(g), std::move(b), cfg.h, cfg.background, cfg.jet_order, cfg.matter_dim());
}

}  // namespace jetvar
