#include "variational/variational.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace jetvar {

namespace {

Polynomial var(Indeterminate v) { return Polynomial::var(v); }

std::vector<std::string> excerpt(const std::vector<std::string>& lines, std::size_t n = 5) {
  return {lines.begin(), lines.begin() + static_cast<std::ptrdiff_t>(std::min(n, lines.size()))};
}

std::string join_excerpt(const ExteriorForm& f) {
  std::string s;
  for (const auto& l : excerpt(f.to_lines())) s += "\n  " + l;
  if (f.term_count() > 5) s += "\n  ...";
  return s;
}

void require_vertical(const VectorField& u, const JetContext& ctx) {
  for (const auto& [v, c] : u) {
    if (!v.is_field_jet() || v.order() != 0)
      throw Error(ErrorCode::InvalidArgument, "vector field component on " + v.to_string() + " is not vertical");
    ctx.chart().require_in_chart(v);
  }
}

// Basis and sign of omega_lambda.
std::pair<Basis, Rational> slot_term(int lambda, const JetContext& ctx) {
  ExteriorForm slot = ctx.volume_slot(lambda);
  const auto& t = slot.terms().front();
  return {t.first, t.second.constant_term()};
}

}  // namespace

Lagrangian::Lagrangian(ExteriorForm form, const JetContext& ctx) : form_(std::move(form)) {
  const int n = ctx.base_dim();
  if (!form_.is_zero() && form_.degree() != n)
    throw Error(ErrorCode::InvalidArgument, "Lagrangian must be a form of degree " + std::to_string(n));
  if (!form_.is_horizontal()) throw Error(ErrorCode::InvalidArgument, "Lagrangian must be horizontal");
  form_ = ExteriorForm(n) + form_;
  density_ = form_.top_coefficient(n);
  for (auto v : density_.variables()) {
    if (v.is_field_jet() && v.order() > 1)
      throw Error(ErrorCode::JetOrderExceeded, "Lagrangian is not first order: " + v.to_string());
    ctx.chart().require_in_chart(v);
  }
}

Lagrangian Lagrangian::from_density(const Polynomial& density, const JetContext& ctx) {
  return Lagrangian(density * ctx.volume(), ctx);
}

const Polynomial& ELResult::operator[](Indeterminate field) const {
  auto it = std::find(fields.begin(), fields.end(), field);
  if (it == fields.end()) throw Error(ErrorCode::IndexOutOfRange, "no field " + field.to_string());
  return components[static_cast<std::size_t>(it - fields.begin())];
}

bool ELResult::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::vector<std::string> ELResult::lines() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < fields.size(); ++i)
    out.push_back("delta " + fields[i].to_string() + " = " + components[i].to_string());
  return out;
}

ExteriorForm Current::to_form(const JetContext& ctx) const {
  ExteriorForm out(ctx.base_dim() - 1);
  for (std::size_t l = 0; l < components.size(); ++l)
    if (!components[l].is_zero()) out += components[l] * ctx.volume_slot(static_cast<int>(l));
  return out;
}

Current Current::from_form(const ExteriorForm& f, const JetContext& ctx) {
  const int n = ctx.base_dim();
  if (!f.is_zero() && (f.degree() != n - 1 || !f.is_horizontal()))
    throw Error(ErrorCode::InvalidArgument, "current must be a horizontal form of degree " + std::to_string(n - 1));
  Current c;
  for (int l = 0; l < n; ++l) {
    auto [b, sign] = slot_term(l, ctx);
    c.components.push_back(f.coefficient(b) * sign);
  }
  return c;
}

Current Current::operator-(const Current& o) const {
  Current c;
  for (std::size_t l = 0; l < std::max(components.size(), o.components.size()); ++l) {
    Polynomial a = l < components.size() ? components[l] : Polynomial();
    Polynomial b = l < o.components.size() ? o.components[l] : Polynomial();
    c.components.push_back(a - b);
  }
  return c;
}

Current Current::operator+(const Current& o) const {
  Current c;
  for (std::size_t l = 0; l < std::max(components.size(), o.components.size()); ++l) {
    Polynomial a = l < components.size() ? components[l] : Polynomial();
    Polynomial b = l < o.components.size() ? o.components[l] : Polynomial();
    c.components.push_back(a + b);
  }
  return c;
}

std::vector<std::string> Current::lines() const {
  std::vector<std::string> out;
  for (std::size_t l = 0; l < components.size(); ++l)
    out.push_back("J^" + std::to_string(l) + " = " + components[l].to_string());
  return out;
}

ELResult euler_lagrange(const Lagrangian& L, const JetContext& ctx) {
  ELResult out;
  const Polynomial& f = L.density();
  for (auto y : ctx.fields()) {
    Polynomial e = partial(f, y);
    for (int l = 0; l < ctx.base_dim(); ++l) {
      Polynomial p = partial(f, ctx.first_jet(y, l));
      if (!p.is_zero()) e -= total_derivative(p, l, ctx);
    }
    out.fields.push_back(y);
    out.components.push_back(std::move(e));
  }
  return out;
}

ExteriorForm poincare_cartan(const Lagrangian& L, const JetContext& ctx) {
  ExteriorForm H = L.form();
  for (auto y : ctx.fields())
    for (int l = 0; l < ctx.base_dim(); ++l) {
      Polynomial p = partial(L.density(), ctx.first_jet(y, l));
      if (p.is_zero()) continue;
      H += p * wedge(contact_form(y, ctx), ctx.volume_slot(l));
    }
  return H;
}

Current noether_current(const Lagrangian& L, const VectorField& u, const JetContext& ctx) {
  require_vertical(u, ctx);
  Current J;
  for (int l = 0; l < ctx.base_dim(); ++l) {
    PolyAccumulator acc;
    for (const auto& [y, c] : u) {
      Polynomial p = partial(L.density(), ctx.first_jet(y, l));
      if (!p.is_zero()) acc.add_product(c, p, Rational(1));
    }
    J.components.push_back(acc.finish());
  }
  return J;
}

ExteriorForm lie_derivative_lagrangian(const Lagrangian& L, const VectorField& u, const JetContext& ctx) {
  require_vertical(u, ctx);
  VectorField j1 = prolong(u, ctx, 1);
  PolyAccumulator acc;
  for (const auto& [c, comp] : j1) {
    Polynomial p = partial(L.density(), c);
    if (!p.is_zero()) acc.add_product(comp, p, Rational(1));
  }
  return acc.finish() * ctx.volume();
}

ExteriorForm first_variational_residual(const Lagrangian& L, const VectorField& u, const Current& J,
                                        const JetContext& ctx) {
  ExteriorForm res = lie_derivative_lagrangian(L, u, ctx);
  ELResult el = euler_lagrange(L, ctx);
  PolyAccumulator acc;
  for (const auto& [y, c] : u) acc.add_product(c, el[y], Rational(1));
  res -= acc.finish() * ctx.volume();
  res -= horizontal_differential(J.to_form(ctx), ctx);
  return res;
}

VerificationReport first_variational_check(const Lagrangian& L, const VectorField& u, const JetContext& ctx) {
  Current J = noether_current(L, u, ctx);
  ExteriorForm res = first_variational_residual(L, u, J, ctx);
  auto report = VerificationReport::from_residual("first-variational", res.to_lines());
  report.counts.emplace_back("lagrangian-terms", L.density().size());
  return report;
}

HomotopyResult fiber_homotopy_with_remainder(const ExteriorForm& omega, const CSData& cs, HomotopyCenter center) {
  const Chart& chart = cs.ctx().chart();
  ExteriorForm dw = exterior_d(omega, chart);
  if (!dw.is_zero())
    throw Error(ErrorCode::NotClosed,
                "form is not closed (" + std::to_string(dw.term_count()) + " terms in d)" + join_excerpt(dw));
  auto on_C = [](Indeterminate v) {
    if (v.kind() == VarKind::MatterJet || (v.kind() == VarKind::ConnJet && v.order() > 0))
      throw Error(ErrorCode::InvalidArgument, "homotopy input must live on C, found " + v.to_string());
  };
  for (const auto& [b, p] : omega.terms()) {
    for (auto k : b) on_C(Indeterminate::from_key(k));
    for (auto v : p.variables()) on_C(v);
  }
  const int n = cs.base_dim();
  const Polynomial t = var(Indeterminate::aux_t());
  const Polynomial one_minus_t = Polynomial(1) - t;
  const ExteriorForm dt = ExteriorForm::differential(Indeterminate::aux_t());
  const bool zero = center == HomotopyCenter::Zero || cs.background() == Background::Zero;
  Bindings scaled, at_center;
  std::map<Indeterminate, ExteriorForm> scaled_d, at_center_d;
  for (int r = 0; r < cs.algebra().dim(); ++r)
    for (int mu = 0; mu < n; ++mu) {
      Indeterminate a = Indeterminate::conn(r, mu);
      Polynomial c = zero ? Polynomial() : cs.background_field(r, mu);
      ExteriorForm dc(1);
      if (!zero)
        for (int l = 0; l < n; ++l)
          dc += ExteriorForm::monomial(cs.background_derivative(r, mu, l), {Indeterminate::base(l)});
      scaled[a] = c + t * (var(a) - c);
      scaled_d.emplace(a, t * ExteriorForm::differential(a) + one_minus_t * dc + (var(a) - c) * dt);
      at_center[a] = c;
      at_center_d.emplace(a, dc);
    }
  ExteriorForm H = pullback(omega, scaled, scaled_d);
  ExteriorForm K = contract(VectorField{{Indeterminate::aux_t(), Polynomial(1)}}, H);
  HomotopyResult out;
  out.psi = map_coefficients(K, [](const Polynomial& p) { return integrate_t(p); });
  out.remainder = pullback(omega, at_center, at_center_d);
  if (exterior_d(out.psi, chart) + out.remainder != omega)
    throw Error(ErrorCode::NonzeroResidual, "homotopy identity failed");
  return out;
}

ExteriorForm fiber_homotopy(const ExteriorForm& omega, const CSData& cs, HomotopyCenter center) {
  HomotopyResult h = fiber_homotopy_with_remainder(omega, cs, center);
  if (!h.remainder.is_zero())
    throw Error(ErrorCode::NonzeroResidual, "d psi - omega is nonzero (" + std::to_string(h.remainder.term_count()) +
                                                " terms)" + join_excerpt(-h.remainder));
  return h.psi;
}

SigmaResult sigma_boundary_term(const CSData& cs, const GaugeGenerator& gen, HomotopyCenter center) {
  const JetContext& ctx = cs.ctx();
  if (ctx.jet_order() < 2) throw Error(ErrorCode::JetOrderExceeded, "boundary term needs jet order >= 2");
  SigmaResult out;
  ExteriorForm P = characteristic_form(cs) - characteristic_at_B(cs);
  out.omega = contract(gen.field, P);
  out.psi = fiber_homotopy(out.omega, cs, center);
  out.sigma = horizontal_projection(out.psi + contract(gen.field, cs_form(cs)), ctx);
  Lagrangian L(cs_lagrangian(cs), ctx);
  out.lie_derivative = lie_derivative_lagrangian(L, gen.field, ctx);
  ExteriorForm mismatch = horizontal_differential(out.sigma, ctx) - out.lie_derivative;
  if (!mismatch.is_zero())
    throw Error(ErrorCode::SigmaMismatch, "d_H sigma differs from the Lie derivative (" +
                                              std::to_string(mismatch.term_count()) + " terms)" +
                                              join_excerpt(mismatch));
  return out;
}

ConservationResult conservation_check(const Lagrangian& L, const VectorField& u, const ExteriorForm& sigma,
                                      const JetContext& ctx) {
  ConservationResult out;
  Current J = noether_current(L, u, ctx);
  out.modified = J - Current::from_form(sigma, ctx);
  ExteriorForm res = horizontal_differential(out.modified.to_form(ctx), ctx);
  ELResult el = euler_lagrange(L, ctx);
  PolyAccumulator acc;
  for (const auto& [y, c] : u) acc.add_product(c, el[y], Rational(1));
  res += acc.finish() * ctx.volume();
  out.report = VerificationReport::from_residual("conservation", res.to_lines());
  std::size_t terms = 0;
  for (const auto& c : out.modified.components) terms += c.size();
  out.report.counts.emplace_back("lagrangian-terms", L.density().size());
  out.report.counts.emplace_back("current-terms", terms);
  return out;
}

InvariantSectorResult invariant_sector(const Lagrangian& L_cs, const Lagrangian& L_inv,
                                       const VectorField& matter_variation, const GaugeGenerator& gen,
                                       const ExteriorForm& sigma, const JetContext& ctx) {
  for (const auto& [v, c] : matter_variation)
    if (v.kind() != VarKind::MatterJet)
      throw Error(ErrorCode::InvalidArgument, "matter variation on non-matter coordinate " + v.to_string());
  VectorField u = vf_add(gen.field, matter_variation);
  ExteriorForm inv = lie_derivative_lagrangian(L_inv, u, ctx);
  if (!inv.is_zero())
    throw Error(ErrorCode::NotInvariant, "invariant Lagrangian is not gauge invariant (" +
                                             std::to_string(inv.term_count()) + " terms)" + join_excerpt(inv));
  InvariantSectorResult out;
  out.invariance = VerificationReport::from_residual("gauge-invariance", {});
  out.current = noether_current(L_inv, u, ctx);
  Lagrangian total(L_cs.form() + L_inv.form(), ctx);
  out.total = conservation_check(total, u, sigma, ctx);
  return out;
}

AbelianMatterModel abelian_matter_model(const LieAlgebraData& g, const JetContext& ctx) {
  if (ctx.conn_dim() < 1 || ctx.matter_dim() < 2)
    throw Error(ErrorCode::InvalidArgument, "matter model needs one connection and two matter components");
  for (int p = 0; p < g.dim(); ++p)
    for (int q = 0; q < g.dim(); ++q)
      if (!g.c(0, p, q).is_zero() || !g.c(p, 0, q).is_zero())
        throw Error(ErrorCode::InvalidArgument, "connection component 0 is not central");
  const int n = ctx.base_dim();
  AbelianMatterModel m;
  Polynomial z0 = var(Indeterminate::matter(0)), z1 = var(Indeterminate::matter(1));
  PolyAccumulator acc;
  for (int l = 0; l < n; ++l) {
    int d[1] = {l};
    Polynomial a = var(Indeterminate::conn(0, l));
    Polynomial D0 = var(Indeterminate::matter(0, d)) + a * z1;
    Polynomial D1 = var(Indeterminate::matter(1, d)) - a * z0;
    acc.add_product(D0, D0, Rational(1));
    acc.add_product(D1, D1, Rational(1));
    for (int mu = l + 1; mu < n; ++mu) {
      int dm[1] = {mu};
      Polynomial F = var(Indeterminate::conn(0, mu, d)) - var(Indeterminate::conn(0, l, dm));
      acc.add_product(F, F, Rational(1));
    }
  }
  m.density = acc.finish();
  Polynomial xi = var(Indeterminate::gauge(0));
  m.matter_variation[Indeterminate::matter(0)] = -(xi * z1);
  m.matter_variation[Indeterminate::matter(1)] = xi * z0;
  return m;
}

}  // namespace jetvar
