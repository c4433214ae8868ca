#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "variational/variational.hpp"

namespace jetvar {

/// Deterministic generators for randomized identity checks. Only raw
/// engine output is used (no distributions), so a seed reproduces the same
/// instance on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  /// Nonzero p/q with |p| <= range, 1 <= q <= range.
  Rational rational(int range = 9);
  /// Sum of `terms` random monomials of total degree <= max_degree.
  Polynomial polynomial(const std::vector<Indeterminate>& vars, int terms, int max_degree);
  /// Random p-form on the given labels with coefficients in coeff_vars.
  ExteriorForm form(const std::vector<Indeterminate>& coeff_vars, const std::vector<Indeterminate>& labels,
                    int degree, int terms, int max_degree);

 private:
  std::mt19937_64 rng_;
};

/// x^lambda and field jets of order <= max_order in the context.
std::vector<Indeterminate> jet_variables(const JetContext& ctx, int max_order);

/// Random first-order polynomial Lagrangian.
Lagrangian random_lagrangian(const JetContext& ctx, RandomSource& rs);

/// Random vertical field with components of jet order <= 1.
VectorField random_vertical_field(const JetContext& ctx, RandomSource& rs);

}  // namespace jetvar
