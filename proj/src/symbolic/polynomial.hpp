#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "symbolic/indeterminate.hpp"
#include "symbolic/rational.hpp"

namespace jetvar {

/// Product of indeterminate powers. Each word packs `key << 8 | exponent`;
/// words are sorted by key so equal monomials have identical storage.
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;
  static Monomial of(Indeterminate v, unsigned exponent = 1);

  bool is_one() const { return words_.empty(); }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return words_.size(); }
  Indeterminate var(std::size_t i) const { return Indeterminate::from_key(words_[i] >> 8); }
  unsigned exponent(std::size_t i) const { return static_cast<unsigned>(words_[i] & 0xff); }
  unsigned exponent_of(Indeterminate v) const;

  Monomial operator*(const Monomial& o) const;
  /// Removes one power of the i-th factor.
  Monomial reduced(std::size_t i) const;
  /// Drops the i-th factor entirely.
  Monomial without(std::size_t i) const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.words_ == b.words_; }
  /// Graded order: total degree first, then the ascending (indeterminate,
  /// exponent) sequence compared lexicographically.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.words_ < b.words_;
  }

 private:
  std::vector<std::uint64_t> words_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : m.words()) {
      h ^= w;
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

struct Term {
  Monomial mono;
  Rational coeff;
};

class Polynomial;

/// Unordered scratch space for building polynomials term by term.
class PolyAccumulator {
 public:
  void add(const Monomial& m, const Rational& c);
  void add(Monomial&& m, const Rational& c);
  void add(const Polynomial& p, const Rational& scale = Rational(1));
  /// Adds scale * a * b.
  void add_product(const Polynomial& a, const Polynomial& b, const Rational& scale = Rational(1));
  void add_product(const Polynomial& a, const Monomial& m, const Rational& scale);
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  Polynomial finish();

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> map_;
};

/// Exact-rational multivariate polynomial in canonical form: sorted
/// monomials, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(std::int64_t c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Polynomial var(Indeterminate v, unsigned exponent = 1);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  /// Takes arbitrary terms, merges duplicates and sorts.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_term() const;
  /// Coefficient of monomial `m`, zero if absent.
  Rational coefficient(const Monomial& m) const;
  std::set<Indeterminate> variables() const;
  bool contains(Indeterminate v) const;
  bool any_variable(const std::function<bool(Indeterminate)>& pred) const;
  unsigned degree_in(Indeterminate v) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// "num/den*v1^e1*v2 + ..." in canonical monomial order; "0" when empty.
  std::string to_string() const;

 private:
  friend class PolyAccumulator;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned e);

/// Formal partial derivative, every other indeterminate held constant.
Polynomial partial(const Polynomial& p, Indeterminate v);

using Bindings = std::map<Indeterminate, Polynomial>;

/// Simultaneous substitution. A binding's value may mention its own
/// indeterminate (v -> t*v); mentioning a different bound indeterminate
/// raises CyclicSubstitution.
Polynomial substitute(const Polynomial& p, const Bindings& bindings);

/// Exact integral of p over t in [0, 1].
Polynomial integrate_t(const Polynomial& p);

/// Exact value at a point; every indeterminate of p must be assigned.
Rational evaluate(const Polynomial& p, const std::unordered_map<Indeterminate, Rational, IndeterminateHash>& point);

}  // namespace jetvar
