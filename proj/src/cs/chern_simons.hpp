#pragma once

#include <vector>

#include "gauge/lie_algebra.hpp"
#include "jet/jet_geometry.hpp"

namespace jetvar {

enum class Background { Zero, Symbolic };

/// Everything needed to build the Chern-Simons forms of degree 2k-1 on a
/// (2k-1)-dimensional base: the algebra, a symmetric invariant tensor of
/// degree k, a constant multiple h applied to that tensor, and the
/// background section B (zero or symbolic).
class CSData {
 public:
  CSData(LieAlgebraData algebra, InvariantTensor invariant, Rational h, Background background,
         int jet_order = 3, int matter_dim = 0);

  const LieAlgebraData& algebra() const { return algebra_; }
  /// The tensor as supplied, before the factor h.
  const InvariantTensor& invariant() const { return invariant_; }
  /// h * invariant(): the tensor every construction below contracts with.
  const InvariantTensor& effective_tensor() const { return effective_; }
  const Rational& h() const { return h_; }
  int k() const { return invariant_.degree(); }
  int base_dim() const { return 2 * k() - 1; }
  Background background() const { return background_; }
  const JetContext& ctx() const { return ctx_; }

  /// B^r_mu, or zero for the zero background.
  Polynomial background_field(int r, int mu) const;
  /// d_lambda B^r_mu as a function symbol (zero for the zero background).
  Polynomial background_derivative(int r, int mu, int lambda) const;

 private:
  LieAlgebraData algebra_;
  InvariantTensor invariant_;
  InvariantTensor effective_;
  Rational h_;
  Background background_;
  JetContext ctx_;
};

/// F^r = da^r_mu ^ dx^mu + 1/2 c^r_{pq} a^p_lambda a^q_mu dx^lambda ^ dx^mu.
std::vector<ExteriorForm> canonical_curvature(const CSData& cs);

/// h0 of the canonical curvature.
std::vector<ExteriorForm> strength_horizontal(const CSData& cs);

/// Components F^r_{lambda mu} = a^r_{lambda;mu} - a^r_{mu;lambda} + c^r_{pq} a^p_lambda a^q_mu,
/// indexed [r][lambda][mu].
std::vector<std::vector<std::vector<Polynomial>>> strength_components(const CSData& cs);

/// P_2k(F) = b_{r1..rk} F^{r1} ^ ... ^ F^{rk}.
ExteriorForm characteristic_form(const CSData& cs);

/// P_2k(F_B): P_2k(F) pulled back along a -> B, da -> dB.
ExteriorForm characteristic_at_B(const CSData& cs);

/// The transgression form k * int_0^1 b (a-B) dx ^ F(t,B) ^ ... ^ F(t,B) dt on C.
ExteriorForm cs_form(const CSData& cs);

/// Horizontal projection of cs_form: the CS Lagrangian on J^1 C.
ExteriorForm cs_lagrangian(const CSData& cs);

/// Same Lagrangian assembled directly from the horizontal strength of the
/// interpolated connection t a + (1-t) B, without going through h0.
ExteriorForm cs_lagrangian_direct(const CSData& cs);

/// sum b_{r1..rk} first[r1] ^ rest[r2] ^ ... ^ rest[rk].
ExteriorForm contract_symmetric(const InvariantTensor& b, const std::vector<ExteriorForm>& first,
                                const std::vector<ExteriorForm>& rest);

}  // namespace jetvar
