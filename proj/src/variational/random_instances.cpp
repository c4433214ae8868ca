#include "variational/random_instances.hpp"

#include <algorithm>

namespace jetvar {

int RandomSource::uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

Rational RandomSource::rational(int range) {
  int p = 0;
  while (p == 0) p = uniform(-range, range);
  return Rational(p, uniform(1, range));
}

Polynomial RandomSource::polynomial(const std::vector<Indeterminate>& vars, int terms, int max_degree) {
  PolyAccumulator acc;
  for (int i = 0; i < terms; ++i) {
    Polynomial m(rational());
    int deg = uniform(0, max_degree);
    for (int j = 0; j < deg && !vars.empty(); ++j)
      m *= Polynomial::var(vars[static_cast<std::size_t>(uniform(0, static_cast<int>(vars.size()) - 1))]);
    acc.add(m);
  }
  return acc.finish();
}

ExteriorForm RandomSource::form(const std::vector<Indeterminate>& coeff_vars,
                                const std::vector<Indeterminate>& labels, int degree, int terms,
                                int max_degree) {
  ExteriorForm out(degree);
  if (degree > static_cast<int>(labels.size())) return out;
  for (int i = 0; i < terms; ++i) {
    std::vector<Indeterminate> pick = labels;
    for (int j = 0; j < degree; ++j)
      std::swap(pick[static_cast<std::size_t>(j)],
                pick[static_cast<std::size_t>(uniform(j, static_cast<int>(pick.size()) - 1))]);
    pick.resize(static_cast<std::size_t>(degree));
    out += ExteriorForm::monomial(polynomial(coeff_vars, 1, max_degree), pick);
  }
  return out;
}

std::vector<Indeterminate> jet_variables(const JetContext& ctx, int max_order) {
  std::vector<Indeterminate> out;
  for (auto v : ctx.chart().coordinates())
    if (!v.is_field_jet() || v.order() <= max_order) out.push_back(v);
  return out;
}

Lagrangian random_lagrangian(const JetContext& ctx, RandomSource& rs) {
  return Lagrangian::from_density(rs.polynomial(jet_variables(ctx, 1), rs.uniform(1, 6), 3), ctx);
}

VectorField random_vertical_field(const JetContext& ctx, RandomSource& rs) {
  VectorField u;
  auto vars = jet_variables(ctx, 1);
  for (auto y : ctx.fields())
    if (rs.uniform(0, 3) > 0) {
      Polynomial c = rs.polynomial(vars, rs.uniform(1, 3), 2);
      if (!c.is_zero()) u[y] = std::move(c);
    }
  return u;
}

}  // namespace jetvar
