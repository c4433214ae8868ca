#pragma once

#include <vector>

#include "forms/exterior_form.hpp"

namespace jetvar {

/// Jet manifold J^N of the connection bundle C (dim g = conn_dim, fields
/// a^r_mu) optionally extended by matter fields z^A.
class JetContext {
 public:
  JetContext(int base_dim, int conn_dim, int matter_dim, int jet_order);

  const Chart& chart() const { return chart_; }
  int base_dim() const { return chart_.base_dim; }
  int conn_dim() const { return chart_.conn_dim; }
  int matter_dim() const { return chart_.matter_dim; }
  int jet_order() const { return chart_.jet_order; }

  /// Order-0 field coordinates y^i: all a^r_mu then all z^A.
  std::vector<Indeterminate> fields() const;
  /// y^i_lambda for an order-0 field y^i.
  Indeterminate first_jet(Indeterminate field, int lambda) const { return field.raised(lambda); }

  /// omega = dx^0 ^ ... ^ dx^{n-1}.
  ExteriorForm volume() const;
  /// omega_lambda = d/dx^lambda ⌋ omega.
  ExteriorForm volume_slot(int lambda) const;

 private:
  Chart chart_;
};

/// d_lambda f: base partial plus y^i_{Lambda+lambda} dF/dy^i_Lambda over the
/// field jets, with function symbols raised the same way.
Polynomial total_derivative(const Polynomial& f, int lambda, const JetContext& ctx);

/// h0: dx -> dx, dy_Lambda -> y_{Lambda+lambda} dx^lambda.
ExteriorForm horizontal_projection(const ExteriorForm& a, const JetContext& ctx);

/// d_H a = dx^lambda ^ d_lambda(a) for a horizontal form.
ExteriorForm horizontal_differential(const ExteriorForm& a, const JetContext& ctx);

/// theta = dy - y_lambda dx^lambda for a field jet y of order < N.
ExteriorForm contact_form(Indeterminate y, const JetContext& ctx);

/// Prolongation of a vertical field with components on order-0 field
/// coordinates. Components on y_Lambda are d_Lambda u for |Lambda| <= order.
VectorField prolong(const VectorField& u, const JetContext& ctx, int order = 1);

}  // namespace jetvar
