#include "gauge/gauge.hpp"

#include "common/error.hpp"

namespace jetvar {

GaugeGenerator gauge_generator(const LieAlgebraData& g, const JetContext& ctx) {
  std::vector<Polynomial> xi;
  for (int r = 0; r < g.dim(); ++r) xi.push_back(Polynomial::var(Indeterminate::gauge(r)));
  return gauge_generator(g, ctx, xi);
}

GaugeGenerator gauge_generator(const LieAlgebraData& g, const JetContext& ctx,
                               const std::vector<Polynomial>& xi) {
  if (ctx.conn_dim() != g.dim())
    throw Error(ErrorCode::InvalidArgument, "jet context connection block does not match the algebra");
  if (static_cast<int>(xi.size()) != g.dim())
    throw Error(ErrorCode::InvalidArgument, "gauge parameter count does not match the algebra");
  GaugeGenerator gen;
  gen.parameters = xi;
  for (int r = 0; r < g.dim(); ++r) {
    for (int mu = 0; mu < ctx.base_dim(); ++mu) {
      PolyAccumulator acc;
      acc.add(total_derivative(xi[r], mu, ctx));
      for (int p = 0; p < g.dim(); ++p)
        for (int q = 0; q < g.dim(); ++q) {
          const Rational& c = g.c(r, p, q);
          if (c.is_zero()) continue;
          acc.add_product(Polynomial::var(Indeterminate::conn(p, mu)), xi[q], c);
        }
      Polynomial comp = acc.finish();
      if (!comp.is_zero()) gen.field[Indeterminate::conn(r, mu)] = std::move(comp);
    }
  }
  return gen;
}

VerificationReport check_invariant_tensor(const LieAlgebraData& g, const InvariantTensor& b) {
  std::vector<std::string> lines;
  if (!b.is_symmetric()) {
    try {
      b.require_symmetric();
    } catch (const Error& e) {
      lines.push_back(std::string("not symmetric: ") + e.what());
    }
  }
  for (const auto& res : invariance_residuals(g, b)) {
    std::string s = "p=" + std::to_string(res.indices[0]) + " s=(";
    for (std::size_t i = 1; i < res.indices.size(); ++i)
      s += (i > 1 ? "," : "") + std::to_string(res.indices[i]);
    lines.push_back(s + ") " + res.value.to_string());
  }
  auto report = VerificationReport::from_residual("invariant-tensor", std::move(lines));
  report.counts.emplace_back("degree", static_cast<std::size_t>(b.degree()));
  return report;
}

}  // namespace jetvar
