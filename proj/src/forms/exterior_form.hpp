#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "forms/chart.hpp"
#include "symbolic/polynomial.hpp"

namespace jetvar {

/// Strictly increasing list of differential labels (indeterminate keys).
using Basis = std::vector<std::uint64_t>;

struct BasisHash {
  std::size_t operator()(const Basis& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto k : b) h = (h ^ k) * 0xbf58476d1ce4e5b9ull;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

/// Vector field by components; absent entries are zero.
using VectorField = std::map<Indeterminate, Polynomial>;

class ExteriorForm;

class FormAccumulator {
 public:
  explicit FormAccumulator(int degree) : degree_(degree) {}
  void add(const Basis& b, const Polynomial& p, const Rational& scale = Rational(1));
  void add(const ExteriorForm& f, const Rational& scale = Rational(1));
  void add_product(const Basis& b, const Polynomial& p, const Polynomial& q, const Rational& scale);
  PolyAccumulator& slot(const Basis& b) { return map_[b]; }
  ExteriorForm finish();

 private:
  int degree_;
  std::unordered_map<Basis, PolyAccumulator, BasisHash> map_;
};

/// Differential form of fixed degree with polynomial coefficients. The
/// terms are kept sorted by basis; coefficients are never zero.
class ExteriorForm {
 public:
  explicit ExteriorForm(int degree = 0) : degree_(degree) {}
  static ExteriorForm scalar(const Polynomial& f);
  /// The 1-form dv.
  static ExteriorForm differential(Indeterminate v);
  /// coeff * dv_1 ^ ... ^ dv_p in the given order (sign applied).
  static ExteriorForm monomial(const Polynomial& coeff, const std::vector<Indeterminate>& diffs);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<Basis, Polynomial>>& terms() const { return terms_; }
  Polynomial coefficient(const Basis& b) const;
  /// Coefficient of dx^0 ^ ... ^ dx^{n-1}.
  Polynomial top_coefficient(int base_dim) const;
  /// Only dx^lambda differentials appear.
  bool is_horizontal() const;
  std::size_t term_count() const;

  ExteriorForm operator-() const;
  ExteriorForm& operator+=(const ExteriorForm& o);
  ExteriorForm& operator-=(const ExteriorForm& o);
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  ExteriorForm& operator*=(const Polynomial& f);
  ExteriorForm& operator*=(const Rational& c);
  friend ExteriorForm operator*(const Polynomial& f, ExteriorForm a) { return a *= f; }
  friend ExteriorForm operator*(const Rational& c, ExteriorForm a) { return a *= c; }
  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b);

  /// One line per monomial: "coeff[*mono] dc1/\dc2...", in canonical order.
  std::vector<std::string> to_lines() const;
  std::string to_string() const;

 private:
  friend class FormAccumulator;
  int degree_;
  std::vector<std::pair<Basis, Polynomial>> terms_;
};

/// Merges two bases. Returns 0 if they share a label, else the permutation sign.
int merge_bases(const Basis& a, const Basis& b, Basis& out);

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
ExteriorForm exterior_d(const ExteriorForm& a, const Chart& chart);
/// Interior product X ⌋ a; zero on 0-forms.
ExteriorForm contract(const VectorField& X, const ExteriorForm& a);
/// Cartan: X ⌋ da + d(X ⌋ a).
ExteriorForm lie_derivative_form(const VectorField& X, const ExteriorForm& a, const Chart& chart);
/// X applied to f as a derivation (equals X ⌋ df).
Polynomial apply_vector_field(const VectorField& X, const Polynomial& f, const Chart& chart);

/// Pull-back under a map given by coefficient bindings and images of
/// differentials. Labels without an image are kept.
ExteriorForm pullback(const ExteriorForm& a, const Bindings& coeffs,
                      const std::map<Indeterminate, ExteriorForm>& diff_images);

ExteriorForm map_coefficients(const ExteriorForm& a, const std::function<Polynomial(const Polynomial&)>& f);

/// Vector field helpers.
VectorField vf_add(const VectorField& u, const VectorField& v);
VectorField vf_scale(const VectorField& u, const Rational& c);
/// [u, v]^c = u(v^c) - v(u^c).
VectorField vf_bracket(const VectorField& u, const VectorField& v, const Chart& chart);
bool vf_equal(const VectorField& u, const VectorField& v);

}  // namespace jetvar
