#pragma once

#include <vector>

#include "common/report.hpp"
#include "gauge/lie_algebra.hpp"
#include "jet/jet_geometry.hpp"

namespace jetvar {

/// Infinitesimal gauge transformation of the connection bundle,
/// xi_C = (d_mu xi^r + c^r_{pq} a^p_mu xi^q) d/da^r_mu.
struct GaugeGenerator {
  std::vector<Polynomial> parameters;  // xi^r
  VectorField field;                   // components on a^r_mu
};

/// Generator built from the symbolic gauge parameters xi^r (function symbols).
GaugeGenerator gauge_generator(const LieAlgebraData& g, const JetContext& ctx);

/// Generator for explicit parameters xi^r, polynomials in x and function
/// symbols; d_mu is the total derivative.
GaugeGenerator gauge_generator(const LieAlgebraData& g, const JetContext& ctx,
                               const std::vector<Polynomial>& xi);

/// Ad-invariance check of a symmetric tensor; the residual lists every
/// nonzero invariance component.
VerificationReport check_invariant_tensor(const LieAlgebraData& g, const InvariantTensor& b);

}  // namespace jetvar
