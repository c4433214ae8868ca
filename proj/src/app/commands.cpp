#include "app/commands.hpp"

#include <functional>

#include "common/error.hpp"
#include "cs/reference3d.hpp"
#include "symbolic/poly_parse.hpp"
#include "variational/random_instances.hpp"

namespace jetvar {

namespace {

class Document {
 public:
  void line(const std::string& s) {
    text_ += s + "\n";
    dump_ += s + "\n";
  }
  void report(const VerificationReport& r) {
    text_ += r.serialize(kScreenLines);
    dump_ += r.serialize(0);
    all_pass_ = all_pass_ && r.passed();
  }
  void listing(const std::string& title, const std::vector<std::string>& lines) {
    line("listing " + title + " " + std::to_string(lines.size()));
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i < kScreenLines) text_ += "  " + lines[i] + "\n";
      dump_ += "  " + lines[i] + "\n";
    }
    if (lines.size() > kScreenLines)
      text_ += "  ... " + std::to_string(lines.size() - kScreenLines) + " more lines (use --dump)\n";
  }
  CommandOutput finish() {
    line(std::string("result ") + (all_pass_ ? "PASS" : "FAIL"));
    return {all_pass_ ? 0 : 1, std::move(text_), std::move(dump_)};
  }

 private:
  std::string text_, dump_;
  bool all_pass_ = true;
};

bool is_verification_error(ErrorCode c) { return exit_code_for(c) == 1; }

// Runs f; a verification error becomes a FAIL report named `check`.
bool guarded(Document& doc, const std::string& check, const std::function<void()>& f) {
  try {
    f();
    return true;
  } catch (const Error& e) {
    if (!is_verification_error(e.code())) throw;
    VerificationReport r;
    r.check = check;
    r.status = Status::Fail;
    std::string msg = e.what();
    std::size_t start = 0;
    while (start <= msg.size()) {
      auto end = msg.find('\n', start);
      std::string piece = msg.substr(start, end == std::string::npos ? std::string::npos : end - start);
      while (!piece.empty() && piece.front() == ' ') piece.erase(piece.begin());
      if (!piece.empty()) r.residual.push_back(piece);
      if (end == std::string::npos) break;
      start = end + 1;
    }
    doc.report(r);
    return false;
  }
}

VerificationReport diff_report(const std::string& check, const ExteriorForm& diff) {
  return VerificationReport::from_residual(check, diff.to_lines());
}

std::vector<std::string> poly_diff_lines(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                         const std::string& label) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    Polynomial d = (i < a.size() ? a[i] : Polynomial()) - (i < b.size() ? b[i] : Polynomial());
    if (!d.is_zero()) out.push_back(label + "^" + std::to_string(i) + " " + d.to_string());
  }
  return out;
}

GaugeGenerator make_generator(const RunConfig& cfg, const CSData& cs) {
  if (cfg.gauge_zero)
    return gauge_generator(cs.algebra(), cs.ctx(), std::vector<Polynomial>(cs.algebra().dim()));
  return gauge_generator(cs.algebra(), cs.ctx());
}

struct Sector {
  Lagrangian lagrangian;
  VectorField variation;
};

std::optional<Sector> make_sector(const RunConfig& cfg, const CSData& cs) {
  if (!cfg.sector.enabled) return std::nullopt;
  const JetContext& ctx = cs.ctx();
  if (cfg.sector.builtin_model) {
    auto m = abelian_matter_model(cs.algebra(), ctx);
    if (cfg.gauge_zero) m.matter_variation.clear();
    return Sector{Lagrangian::from_density(m.density, ctx), m.matter_variation};
  }
  Sector s{Lagrangian::from_density(parse_polynomial(cfg.sector.density), ctx), {}};
  if (!cfg.gauge_zero)
    for (const auto& [A, text] : cfg.sector.variations) {
      Polynomial p = parse_polynomial(text);
      if (!p.is_zero()) s.variation[Indeterminate::matter(A)] = p;
    }
  return s;
}

void header(Document& doc, const std::string& name, const RunConfig& cfg) {
  doc.line("jetvar " + name);
  doc.line("config " + cfg.summary());
}

CommandOutput cmd_check_algebra(const RunConfig& cfg) {
  Document doc;
  header(doc, "check-algebra", cfg);
  std::optional<LieAlgebraData> g;
  if (!guarded(doc, "lie-algebra", [&] { g = build_algebra(cfg.algebra); })) return doc.finish();
  VerificationReport alg = VerificationReport::from_residual("lie-algebra", {});
  alg.counts.emplace_back("dim", static_cast<std::size_t>(g->dim()));
  std::size_t nz = 0;
  for (int r = 0; r < g->dim(); ++r)
    for (int p = 0; p < g->dim(); ++p)
      for (int q = 0; q < g->dim(); ++q) nz += !g->c(r, p, q).is_zero();
  alg.counts.emplace_back("structure-constants", nz);
  alg.notes.push_back("antisymmetry and Jacobi identity hold");
  doc.report(alg);
  std::optional<InvariantTensor> b;
  if (guarded(doc, "invariant-tensor", [&] { b = build_invariant(cfg.invariant, *g, cfg.k); }))
    doc.report(check_invariant_tensor(*g, *b));
  return doc.finish();
}

CommandOutput cmd_transgression(const RunConfig& cfg) {
  Document doc;
  header(doc, "transgression", cfg);
  std::optional<CSData> cs;
  if (!guarded(doc, "setup", [&] { cs = build_cs(cfg); })) return doc.finish();
  const Chart& chart = cs->ctx().chart();
  doc.report(check_invariant_tensor(cs->algebra(), cs->invariant()));
  ExteriorForm P = characteristic_form(*cs);
  ExteriorForm PB = characteristic_at_B(*cs);
  ExteriorForm S = cs_form(*cs);
  auto closed = diff_report("closed", exterior_d(P, chart));
  closed.counts.emplace_back("characteristic-terms", P.term_count());
  doc.report(closed);
  auto closed_b = diff_report("closed-background", exterior_d(PB, chart));
  closed_b.counts.emplace_back("background-terms", PB.term_count());
  doc.report(closed_b);
  auto gen = gauge_generator(cs->algebra(), cs->ctx());
  doc.report(diff_report("gauge-invariance", lie_derivative_form(gen.field, P, chart)));
  auto tr = diff_report("transgression", exterior_d(S, chart) - (P - PB));
  tr.counts.emplace_back("cs-form-terms", S.term_count());
  doc.report(tr);
  ExteriorForm L = cs_lagrangian(*cs);
  auto routes = diff_report("lagrangian-routes", L - cs_lagrangian_direct(*cs));
  routes.counts.emplace_back("lagrangian-terms", L.term_count());
  doc.report(routes);
  return doc.finish();
}

CommandOutput cmd_euler_lagrange(const RunConfig& cfg, const CommandOptions& opt) {
  Document doc;
  header(doc, "euler-lagrange", cfg);
  std::optional<CSData> cs;
  if (!guarded(doc, "setup", [&] { cs = build_cs(cfg); })) return doc.finish();
  Lagrangian L(cs_lagrangian(*cs), cs->ctx());
  ELResult el = euler_lagrange(L, cs->ctx());
  doc.listing("euler-lagrange", el.lines());
  if (opt.compare_background) {
    RunConfig other = cfg;
    other.background = cfg.background == Background::Zero ? Background::Symbolic : Background::Zero;
    CSData cs2 = build_cs(other);
    ELResult el2 = euler_lagrange(Lagrangian(cs_lagrangian(cs2), cs2.ctx()), cs2.ctx());
    const ELResult& withB = cfg.background == Background::Symbolic ? el : el2;
    const ELResult& without = cfg.background == Background::Symbolic ? el2 : el;
    std::vector<std::string> diff;
    for (std::size_t i = 0; i < withB.fields.size(); ++i) {
      Polynomial d = withB.components[i] - without.components[i];
      if (!d.is_zero()) diff.push_back("delta " + withB.fields[i].to_string() + " " + d.to_string());
    }
    doc.report(VerificationReport::from_residual("background-independence", std::move(diff)));
  }
  return doc.finish();
}

CommandOutput cmd_noether(const RunConfig& cfg) {
  Document doc;
  header(doc, "noether", cfg);
  std::optional<CSData> cs;
  if (!guarded(doc, "setup", [&] { cs = build_cs(cfg); })) return doc.finish();
  const JetContext& ctx = cs->ctx();
  auto gen = make_generator(cfg, *cs);
  ExteriorForm Lform = cs_lagrangian(*cs);
  VectorField u = gen.field;
  if (auto sec = make_sector(cfg, *cs)) {
    Lform += sec->lagrangian.form();
    u = vf_add(u, sec->variation);
  }
  Lagrangian L(Lform, ctx);
  Current J = noether_current(L, u, ctx);
  doc.listing("noether-current", J.lines());
  doc.report(first_variational_check(L, u, ctx));
  return doc.finish();
}

CommandOutput cmd_verify_conservation(const RunConfig& cfg) {
  Document doc;
  header(doc, "verify-conservation", cfg);
  std::optional<CSData> cs;
  if (!guarded(doc, "setup", [&] { cs = build_cs(cfg); })) return doc.finish();
  const JetContext& ctx = cs->ctx();
  auto gen = make_generator(cfg, *cs);
  std::optional<SigmaResult> sg;
  if (!guarded(doc, "boundary-term", [&] { sg = sigma_boundary_term(*cs, gen); })) return doc.finish();
  auto bt = VerificationReport::from_residual("boundary-term", {});
  bt.counts.emplace_back("sigma-terms", sg->sigma.term_count());
  bt.notes.push_back("homotopy centered at a=0");
  if (cs->background() == Background::Symbolic && !cfg.gauge_zero) {
    auto hb = fiber_homotopy_with_remainder(sg->omega, *cs, HomotopyCenter::Background);
    bt.notes.push_back("centering at a=B leaves a closed remainder of " + std::to_string(hb.remainder.term_count()) +
                       " terms");
  }
  doc.report(bt);
  Lagrangian L_cs(cs_lagrangian(*cs), ctx);
  Current modified;
  std::optional<Current> J_inv;
  if (auto sec = make_sector(cfg, *cs)) {
    std::optional<InvariantSectorResult> res;
    if (!guarded(doc, "gauge-invariance",
                 [&] { res = invariant_sector(L_cs, sec->lagrangian, sec->variation, gen, sg->sigma, ctx); }))
      return doc.finish();
    doc.report(res->invariance);
    doc.report(res->total.report);
    modified = res->total.modified;
    J_inv = res->current;
  } else {
    auto res = conservation_check(L_cs, gen.field, sg->sigma, ctx);
    doc.report(res.report);
    modified = res.modified;
  }
  doc.listing("modified-current", modified.lines());
  if (cs->k() == 2 && !cfg.gauge_zero) {
    Reference3D ref = reference_3d(*cs);
    auto lag = VerificationReport::from_residual(
        "reference-lagrangian", poly_diff_lines({L_cs.density()}, {ref.lagrangian}, "L"));
    doc.report(lag);
    doc.report(VerificationReport::from_residual(
        "reference-lie-derivative", poly_diff_lines({sg->lie_derivative.top_coefficient(3)}, {ref.lie_derivative}, "LJ")));
    doc.report(VerificationReport::from_residual(
        "reference-noether-current",
        poly_diff_lines(noether_current(L_cs, gen.field, ctx).components, ref.noether_current, "J")));
    Current expected{ref.modified_current};
    if (J_inv) expected = expected + *J_inv;
    doc.report(VerificationReport::from_residual("reference-modified-current",
                                                 poly_diff_lines(modified.components, expected.components, "J")));
  }
  return doc.finish();
}

CommandOutput cmd_selftest(const RunConfig& cfg, const CommandOptions& opt) {
  Document doc;
  doc.line("jetvar first-variational-selftest");
  doc.line("config seed=" + std::to_string(opt.seed) + " instances=" + std::to_string(cfg.selftest_instances));
  RandomSource rs(opt.seed);
  std::vector<std::string> failures;
  std::size_t total_terms = 0;
  bool control_ran = false, control_caught = true;
  for (int i = 0; i < cfg.selftest_instances; ++i) {
    int n = cfg.selftest_dims[static_cast<std::size_t>(i) % cfg.selftest_dims.size()];
    JetContext ctx(n, 1, 1, 3);
    Lagrangian L = random_lagrangian(ctx, rs);
    VectorField u = random_vertical_field(ctx, rs);
    total_terms += L.density().size();
    Current J = noether_current(L, u, ctx);
    ExteriorForm res = first_variational_residual(L, u, J, ctx);
    if (!res.is_zero())
      failures.push_back("instance " + std::to_string(i) + " n=" + std::to_string(n) + " residual-terms " +
                         std::to_string(res.term_count()));
    // Negative control: perturb J^0 by a term with nonzero d_0.
    Current bad = J;
    bad.components[0] += Polynomial::var(Indeterminate::base(0)) * rs.rational();
    control_ran = true;
    control_caught = control_caught && !first_variational_residual(L, u, bad, ctx).is_zero();
  }
  auto rep = VerificationReport::from_residual("first-variational", std::move(failures));
  rep.counts.emplace_back("instances", static_cast<std::size_t>(cfg.selftest_instances));
  rep.counts.emplace_back("lagrangian-terms", total_terms);
  doc.report(rep);
  doc.report(VerificationReport::from_residual(
      "negative-control", control_ran && control_caught ? std::vector<std::string>{}
                                                        : std::vector<std::string>{"perturbed current not detected"}));
  return doc.finish();
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TermLimitExceeded:
      return 3;
    case ErrorCode::ConfigError:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::JetOrderExceeded:
      return 2;
    default:
      return 1;
  }
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-algebra", "transgression", "euler-lagrange",
                                              "noether", "verify-conservation", "first-variational-selftest"};
  return names;
}

bool command_needs_config(const std::string& name) { return name != "first-variational-selftest"; }

CommandOutput run_command(const std::string& name, const std::optional<RunConfig>& cfg, const CommandOptions& opt) {
  if (name == "first-variational-selftest") {
    RunConfig defaults;
    return cmd_selftest(cfg ? *cfg : defaults, opt);
  }
  bool known = false;
  for (const auto& n : command_names()) known = known || n == name;
  if (!known) throw Error(ErrorCode::InvalidArgument, "unknown command '" + name + "'");
  if (!cfg) throw Error(ErrorCode::ConfigError, "command '" + name + "' needs a configuration");
  if (name == "check-algebra") return cmd_check_algebra(*cfg);
  if (name == "transgression") return cmd_transgression(*cfg);
  if (name == "euler-lagrange") return cmd_euler_lagrange(*cfg, opt);
  if (name == "noether") return cmd_noether(*cfg);
  return cmd_verify_conservation(*cfg);
}

}  // namespace jetvar
