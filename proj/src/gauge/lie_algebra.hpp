#pragma once

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "symbolic/rational.hpp"

namespace jetvar {

/// Structure constant entry c^r_{pq}.
struct StructureConstant {
  int r, p, q;
  Rational value;
};

/// Finite-dimensional Lie algebra in a fixed basis, validated on construction.
class LieAlgebraData {
 public:
  int dim() const { return dim_; }
  const Rational& c(int r, int p, int q) const { return c_[index(r, p, q)]; }
  bool is_abelian() const;
  const std::string& name() const { return name_; }

  /// Dense data; throws AntisymmetryViolation / JacobiViolation.
  static LieAlgebraData from_dense(int dim, std::vector<Rational> c, std::string name = "custom");

 private:
  std::size_t index(int r, int p, int q) const {
    return (static_cast<std::size_t>(r) * dim_ + p) * dim_ + q;
  }
  int dim_ = 0;
  std::vector<Rational> c_;
  std::string name_;
};

/// Validated algebra from a dimension and a list of nonzero entries. Entries
/// are taken literally (both c^r_{pq} and c^r_{qp} must be listed).
LieAlgebraData load_lie_algebra(int dim, const std::vector<StructureConstant>& entries,
                                std::string name = "custom");

/// Built-in algebras: "u1", "u1^m" (m copies), "su2", "so3", and direct sums
/// joined by '+', e.g. "u1+su2".
LieAlgebraData builtin_algebra(const std::string& name);

LieAlgebraData direct_sum(const LieAlgebraData& a, const LieAlgebraData& b);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// kappa_{mn} = sum_{p,q} c^p_{mq} c^q_{np}.
RationalMatrix killing_form(const LieAlgebraData& g);

/// Fully symmetric tensor b_{r1...rk} stored densely.
class InvariantTensor {
 public:
  InvariantTensor() = default;
  InvariantTensor(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Rational& at(const std::vector<int>& idx) const { return data_[flat(idx)]; }
  void set(const std::vector<int>& idx, const Rational& v) { data_[flat(idx)] = v; }
  /// Sets v on every permutation of idx.
  void set_symmetric(std::vector<int> idx, const Rational& v);
  InvariantTensor scaled(const Rational& s) const;
  /// Nonzero entries as (indices, value), in lexicographic index order.
  std::vector<std::pair<std::vector<int>, Rational>> nonzero() const;
  bool is_symmetric() const;
  /// Throws SymmetryViolation naming the first asymmetric entry.
  void require_symmetric() const;

 private:
  std::size_t flat(const std::vector<int>& idx) const;
  int dim_ = 0;
  int degree_ = 0;
  std::vector<Rational> data_;
};

InvariantTensor tensor_from_matrix(const RationalMatrix& m);

/// Ad-invariance residuals: for every p and (s1..sk) the value
/// sum_j sum_r b_{s1..r..sk} c^r_{p s_j}, listed where nonzero.
struct InvarianceResidual {
  std::vector<int> indices;  // p followed by s1..sk
  Rational value;
};
std::vector<InvarianceResidual> invariance_residuals(const LieAlgebraData& g, const InvariantTensor& b);

/// Shipped degree-3 tensor on u(1)+su(2): b_{000} = 1 and the symmetrized
/// product of the u(1) slot with the su(2) Killing block.
InvariantTensor u1_su2_cubic(const LieAlgebraData& g);

/// [xi, eta]^r = c^r_{pq} xi^p eta^q for coefficients in any ring T.
template <class T>
std::vector<T> section_bracket(const std::vector<T>& xi, const std::vector<T>& eta, const LieAlgebraData& g) {
  std::vector<T> out(static_cast<std::size_t>(g.dim()));
  for (int r = 0; r < g.dim(); ++r)
    for (int p = 0; p < g.dim(); ++p)
      for (int q = 0; q < g.dim(); ++q) {
        const Rational& c = g.c(r, p, q);
        if (!c.is_zero()) out[r] += xi[p] * eta[q] * c;
      }
  return out;
}

}  // namespace jetvar
