#pragma once

#include <vector>

#include "cs/chern_simons.hpp"

namespace jetvar {

/// Closed-form expressions for the three-dimensional CS model with
/// quadratic tensor h * kappa (kappa = cs.invariant()), written out
/// directly with the Levi-Civita symbol eps^{012} = 1. They serve as an
/// independent oracle for the engine.
struct Reference3D {
  /// 1/2 h k_mn eps a^m_a (F^n_bc - 1/3 c^n_pq a^p_b a^q_c)
  ///  - 1/2 h k_mn eps B^m_a (F(B)^n_bc - 1/3 c^n_pq B^p_b B^q_c)
  ///  - d_a (h k_mn eps a^m_b B^n_c)
  Polynomial lagrangian;
  /// -d_a (h k_mn eps (d_b xi^m a^n_c + (d_b xi^m + c^m_pq a^p_b xi^q) B^n_c))
  Polynomial lie_derivative;
  /// h k_mn eps^{abc} (d_b xi^m + c^m_pq a^p_b xi^q)(a^n_c - B^n_c)
  std::vector<Polynomial> noether_current;
  /// h k_mn eps^{abc} (2 d_b xi^m a^n_c + c^m_pq a^p_b a^n_c xi^q)
  std::vector<Polynomial> modified_current;
};

/// Requires k = 2.
Reference3D reference_3d(const CSData& cs);

}  // namespace jetvar
