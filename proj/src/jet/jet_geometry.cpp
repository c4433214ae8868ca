#include "jet/jet_geometry.hpp"

#include <string>

#include "common/error.hpp"

namespace jetvar {

JetContext::JetContext(int base_dim, int conn_dim, int matter_dim, int jet_order) {
  if (base_dim < 1 || base_dim > Indeterminate::kMaxBase)
    throw Error(ErrorCode::InvalidArgument, "base dimension " + std::to_string(base_dim));
  if (jet_order < 1 || jet_order >= Indeterminate::kMaxOrder)
    throw Error(ErrorCode::InvalidArgument, "jet order " + std::to_string(jet_order));
  if (conn_dim < 0 || matter_dim < 0 || conn_dim > Indeterminate::kMaxIndex ||
      matter_dim > Indeterminate::kMaxIndex)
    throw Error(ErrorCode::InvalidArgument, "field block dimensions");
  chart_ = Chart{base_dim, conn_dim, matter_dim, jet_order};
}

std::vector<Indeterminate> JetContext::fields() const {
  std::vector<Indeterminate> out;
  for (int r = 0; r < conn_dim(); ++r)
    for (int mu = 0; mu < base_dim(); ++mu) out.push_back(Indeterminate::conn(r, mu));
  for (int A = 0; A < matter_dim(); ++A) out.push_back(Indeterminate::matter(A));
  return out;
}

ExteriorForm JetContext::volume() const {
  std::vector<Indeterminate> dx;
  for (int l = 0; l < base_dim(); ++l) dx.push_back(Indeterminate::base(l));
  return ExteriorForm::monomial(Polynomial(1), dx);
}

ExteriorForm JetContext::volume_slot(int lambda) const {
  return contract(VectorField{{Indeterminate::base(lambda), Polynomial(1)}}, volume());
}

Polynomial total_derivative(const Polynomial& f, int lambda, const JetContext& ctx) {
  const Chart& chart = ctx.chart();
  if (lambda < 0 || lambda >= chart.base_dim)
    throw Error(ErrorCode::IndexOutOfRange, "total derivative direction " + std::to_string(lambda));
  const Indeterminate x = Indeterminate::base(lambda);
  PolyAccumulator acc;
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      Indeterminate v = t.mono.var(i);
      chart.require_in_chart(v);
      Rational c = t.coeff * Rational(t.mono.exponent(i));
      switch (v.kind()) {
        case VarKind::BaseCoord:
          if (v == x) acc.add(t.mono.reduced(i), c);
          break;
        case VarKind::ConnJet:
        case VarKind::MatterJet:
          if (v.order() >= chart.jet_order)
            throw Error(ErrorCode::JetOrderExceeded,
                        "d_" + std::to_string(lambda) + " of top-order jet " + v.to_string());
          acc.add(t.mono.reduced(i) * Monomial::of(v.raised(lambda)), c);
          break;
        case VarKind::BackgroundFn:
        case VarKind::GaugeParam: acc.add(t.mono.reduced(i) * Monomial::of(v.raised(lambda)), c); break;
        case VarKind::AuxScalar: break;
      }
    }
  }
  return acc.finish();
}

ExteriorForm horizontal_projection(const ExteriorForm& a, const JetContext& ctx) {
  std::map<Indeterminate, ExteriorForm> images;
  for (const auto& [b, p] : a.terms()) {
    for (auto k : b) {
      Indeterminate v = Indeterminate::from_key(k);
      if (v.kind() == VarKind::BaseCoord || images.count(v)) continue;
      if (!v.is_field_jet())
        throw Error(ErrorCode::InvalidArgument, "differential of non-coordinate " + v.to_string());
      if (v.order() >= ctx.jet_order())
        throw Error(ErrorCode::JetOrderExceeded, "h0 of d" + v.to_string() + " needs order " +
                                                     std::to_string(v.order() + 1));
      ExteriorForm img(1);
      for (int l = 0; l < ctx.base_dim(); ++l)
        img += ExteriorForm::monomial(Polynomial::var(v.raised(l)), {Indeterminate::base(l)});
      images.emplace(v, std::move(img));
    }
  }
  return pullback(a, {}, images);
}

ExteriorForm horizontal_differential(const ExteriorForm& a, const JetContext& ctx) {
  if (!a.is_horizontal())
    throw Error(ErrorCode::InvalidArgument, "d_H needs a horizontal form");
  FormAccumulator acc(a.degree() + 1);
  Basis merged;
  for (int l = 0; l < ctx.base_dim(); ++l) {
    Basis dx{Indeterminate::base(l).key()};
    for (const auto& [b, p] : a.terms()) {
      int s = merge_bases(dx, b, merged);
      if (s == 0) continue;
      acc.add(merged, total_derivative(p, l, ctx), Rational(s));
    }
  }
  return acc.finish();
}

ExteriorForm contact_form(Indeterminate y, const JetContext& ctx) {
  if (!y.is_field_jet() || !ctx.chart().is_coordinate(y))
    throw Error(ErrorCode::InvalidArgument, y.to_string() + " is not a field coordinate");
  if (y.order() >= ctx.jet_order())
    throw Error(ErrorCode::JetOrderExceeded, "contact form of top-order " + y.to_string());
  ExteriorForm theta = ExteriorForm::differential(y);
  for (int l = 0; l < ctx.base_dim(); ++l)
    theta -= ExteriorForm::monomial(Polynomial::var(y.raised(l)), {Indeterminate::base(l)});
  return theta;
}

VectorField prolong(const VectorField& u, const JetContext& ctx, int order) {
  if (order > ctx.jet_order())
    throw Error(ErrorCode::JetOrderExceeded, "prolongation order " + std::to_string(order));
  VectorField out;
  // frontier: components at the current jet order
  VectorField frontier;
  for (const auto& [v, comp] : u) {
    if (!v.is_field_jet() || v.order() != 0)
      throw Error(ErrorCode::InvalidArgument, "prolong needs a vertical field on order-0 fields, got " +
                                                  v.to_string());
    if (comp.is_zero()) continue;
    frontier[v] = comp;
  }
  out = frontier;
  for (int k = 1; k <= order; ++k) {
    VectorField next;
    for (const auto& [v, comp] : frontier) {
      // Only raise along indices >= the last one so each multi-index is built once.
      int start = v.order() ? v.deriv(v.order() - 1) : 0;
      for (int l = start; l < ctx.base_dim(); ++l) {
        Polynomial d = total_derivative(comp, l, ctx);
        if (!d.is_zero()) next[v.raised(l)] = std::move(d);
      }
    }
    out.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace jetvar
