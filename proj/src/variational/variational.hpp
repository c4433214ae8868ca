#pragma once

#include <string>
#include <vector>

#include "common/report.hpp"
#include "cs/chern_simons.hpp"
#include "gauge/gauge.hpp"

namespace jetvar {

/// First-order Lagrangian L = density * omega on J^1.
class Lagrangian {
 public:
  /// Validates: horizontal, degree n, field jets of order <= 1.
  Lagrangian(ExteriorForm form, const JetContext& ctx);
  static Lagrangian from_density(const Polynomial& density, const JetContext& ctx);

  const ExteriorForm& form() const { return form_; }
  const Polynomial& density() const { return density_; }

 private:
  ExteriorForm form_;
  Polynomial density_;
};

/// Components delta_i L, one per order-0 field coordinate of the context.
struct ELResult {
  std::vector<Indeterminate> fields;
  std::vector<Polynomial> components;

  const Polynomial& operator[](Indeterminate field) const;
  bool is_zero() const;
  /// "delta a[r=..;mu=..;D=()] = <poly>" lines, zero components included.
  std::vector<std::string> lines() const;
};

/// Horizontal (n-1)-form J^lambda omega_lambda by components.
struct Current {
  std::vector<Polynomial> components;

  ExteriorForm to_form(const JetContext& ctx) const;
  /// Inverse of to_form; throws InvalidArgument for a non-horizontal or
  /// wrong-degree form.
  static Current from_form(const ExteriorForm& f, const JetContext& ctx);
  Current operator-(const Current& o) const;
  Current operator+(const Current& o) const;
  bool operator==(const Current& o) const { return components == o.components; }
  std::vector<std::string> lines() const;
};

ELResult euler_lagrange(const Lagrangian& L, const JetContext& ctx);

/// H_L = L omega + dL/dy^i_lambda theta^i ^ omega_lambda.
ExteriorForm poincare_cartan(const Lagrangian& L, const JetContext& ctx);

/// J^lambda = u^i dL/dy^i_lambda; u has components on order-0 fields only.
Current noether_current(const Lagrangian& L, const VectorField& u, const JetContext& ctx);

/// (u^i d_i L + d_lambda u^i d^lambda_i L) omega.
ExteriorForm lie_derivative_lagrangian(const Lagrangian& L, const VectorField& u, const JetContext& ctx);

/// L_{J^1 u} L - u^i delta_i L omega - d_H J for the given current.
ExteriorForm first_variational_residual(const Lagrangian& L, const VectorField& u, const Current& J,
                                        const JetContext& ctx);

VerificationReport first_variational_check(const Lagrangian& L, const VectorField& u, const JetContext& ctx);

enum class HomotopyCenter { Zero, Background };

struct HomotopyResult {
  ExteriorForm psi;
  /// omega - d psi: the pull-back of omega to the center section.
  ExteriorForm remainder;
};

/// Fiberwise homotopy a -> c + t (a - c) on the connection coordinates,
/// c = 0 or B. omega must be closed and live on C (order-0 jets only).
/// Throws NotClosed when d omega != 0.
HomotopyResult fiber_homotopy_with_remainder(const ExteriorForm& omega, const CSData& cs,
                                             HomotopyCenter center = HomotopyCenter::Zero);

/// As above but requires d psi = omega exactly (NonzeroResidual otherwise).
ExteriorForm fiber_homotopy(const ExteriorForm& omega, const CSData& cs,
                            HomotopyCenter center = HomotopyCenter::Zero);

struct SigmaResult {
  ExteriorForm omega;           // xi_C ⌋ (P(F) - P(F_B))
  ExteriorForm psi;             // primitive of omega
  ExteriorForm sigma;           // h0(psi + xi_C ⌋ S(B))
  ExteriorForm lie_derivative;  // L_{J^1 xi_C} of the CS Lagrangian
};

/// Boundary term with d_H sigma = L_{J^1 xi_C} S(B); SigmaMismatch if the
/// post-check fails.
SigmaResult sigma_boundary_term(const CSData& cs, const GaugeGenerator& gen,
                                HomotopyCenter center = HomotopyCenter::Zero);

struct ConservationResult {
  VerificationReport report;
  Current modified;  // J - sigma
};

/// Checks d_H(J - sigma) + u^i delta_i L omega = 0.
ConservationResult conservation_check(const Lagrangian& L, const VectorField& u, const ExteriorForm& sigma,
                                      const JetContext& ctx);

struct InvariantSectorResult {
  VerificationReport invariance;
  Current current;  // Noether current of the invariant Lagrangian
  ConservationResult total;
};

/// Gauge-invariant add-on: u = xi_C + matter variations. Throws
/// NotInvariant when L_{J^1 u} L_inv != 0.
InvariantSectorResult invariant_sector(const Lagrangian& L_cs, const Lagrangian& L_inv,
                                       const VectorField& matter_variation, const GaugeGenerator& gen,
                                       const ExteriorForm& sigma, const JetContext& ctx);

/// A charged doublet z^0, z^1 coupled to the connection component r = 0,
/// which must be central: (Dz^0)^2 + (Dz^1)^2 summed over lambda plus the
/// squared strength of a^0, with dz^0 = -xi^0 z^1, dz^1 = xi^0 z^0.
struct AbelianMatterModel {
  Polynomial density;
  VectorField matter_variation;
};
AbelianMatterModel abelian_matter_model(const LieAlgebraData& g, const JetContext& ctx);

}  // namespace jetvar
