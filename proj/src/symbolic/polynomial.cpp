#include "symbolic/polynomial.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace jetvar {

namespace {

std::uint64_t pack(Indeterminate v, unsigned e) { return (v.key() << 8) | e; }

void check_exponent(unsigned e) {
  if (e > Monomial::kMaxExponent)
    throw Error(ErrorCode::InvalidArgument, "exponent " + std::to_string(e) + " exceeds 255");
}

}  // namespace

// --- Monomial ---------------------------------------------------------------

Monomial Monomial::of(Indeterminate v, unsigned exponent) {
  Monomial m;
  if (exponent == 0) return m;
  check_exponent(exponent);
  m.words_.push_back(pack(v, exponent));
  m.degree_ = exponent;
  return m;
}

unsigned Monomial::exponent_of(Indeterminate v) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), v.key() << 8);
  if (it != words_.end() && (*it >> 8) == v.key()) return static_cast<unsigned>(*it & 0xff);
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.words_.reserve(words_.size() + o.words_.size());
  std::size_t i = 0, j = 0;
  while (i < words_.size() && j < o.words_.size()) {
    std::uint64_t ka = words_[i] >> 8, kb = o.words_[j] >> 8;
    if (ka < kb) {
      r.words_.push_back(words_[i++]);
    } else if (kb < ka) {
      r.words_.push_back(o.words_[j++]);
    } else {
      unsigned e = static_cast<unsigned>((words_[i] & 0xff) + (o.words_[j] & 0xff));
      check_exponent(e);
      r.words_.push_back((ka << 8) | e);
      ++i;
      ++j;
    }
  }
  r.words_.insert(r.words_.end(), words_.begin() + i, words_.end());
  r.words_.insert(r.words_.end(), o.words_.begin() + j, o.words_.end());
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::reduced(std::size_t i) const {
  Monomial r = *this;
  if ((r.words_[i] & 0xff) == 1) {
    r.words_.erase(r.words_.begin() + i);
  } else {
    r.words_[i] -= 1;
  }
  r.degree_ -= 1;
  return r;
}

Monomial Monomial::without(std::size_t i) const {
  Monomial r = *this;
  r.degree_ -= exponent(i);
  r.words_.erase(r.words_.begin() + i);
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) s += '*';
    s += var(i).to_string();
    if (exponent(i) > 1) s += "^" + std::to_string(exponent(i));
  }
  return s;
}

// --- PolyAccumulator ----------------------------------------------------------

void PolyAccumulator::add(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = map_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add(Monomial&& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = map_.try_emplace(std::move(m), c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add(const Polynomial& p, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const auto& t : p.terms()) add(t.mono, scale.is_one() ? t.coeff : t.coeff * scale);
}

void PolyAccumulator::add_product(const Polynomial& a, const Polynomial& b, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const auto& ta : a.terms()) {
    Rational ca = scale.is_one() ? ta.coeff : ta.coeff * scale;
    for (const auto& tb : b.terms()) add(ta.mono * tb.mono, ca * tb.coeff);
  }
  check_term_count(map_.size());
}

void PolyAccumulator::add_product(const Polynomial& a, const Monomial& m, const Rational& scale) {
  if (scale.is_zero()) return;
  for (const auto& ta : a.terms()) add(ta.mono * m, ta.coeff * scale);
}

Polynomial PolyAccumulator::finish() {
  Polynomial p;
  p.terms_.reserve(map_.size());
  for (auto& [m, c] : map_)
    if (!c.is_zero()) p.terms_.push_back(Term{m, std::move(c)});
  map_.clear();
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  check_term_count(p.terms_.size());
  return p;
}

// --- Polynomial ---------------------------------------------------------------

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.push_back(Term{Monomial{}, c});
}

Polynomial Polynomial::var(Indeterminate v, unsigned exponent) {
  return monomial(Monomial::of(v, exponent), Rational(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  PolyAccumulator acc;
  for (auto& t : terms) acc.add(std::move(t.mono), t.coeff);
  return acc.finish();
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.mono < x; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Rational(0);
}

std::set<Indeterminate> Polynomial::variables() const {
  std::set<Indeterminate> out;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.mono.size(); ++i) out.insert(t.mono.var(i));
  return out;
}

bool Polynomial::contains(Indeterminate v) const {
  for (const auto& t : terms_)
    if (t.mono.exponent_of(v) > 0) return true;
  return false;
}

bool Polynomial::any_variable(const std::function<bool(Indeterminate)>& pred) const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (pred(t.mono.var(i))) return true;
  return false;
}

unsigned Polynomial::degree_in(Indeterminate v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent_of(v));
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].mono < o.terms_[j].mono) {
      out.push_back(std::move(terms_[i++]));
    } else if (o.terms_[j].mono < terms_[i].mono) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) out.push_back(Term{std::move(terms_[i].mono), std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  check_term_count(terms_.size());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.constant_term();
  if (b.is_constant()) return a * b.constant_term();
  PolyAccumulator acc;
  acc.add_product(a, b);
  return acc.finish();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff))
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    s += terms_[i].coeff.to_string();
    if (!terms_[i].mono.is_one()) s += "*" + terms_[i].mono.to_string();
  }
  return s;
}

// --- free functions -------------------------------------------------------------

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result(1);
  Polynomial base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial partial(const Polynomial& p, Indeterminate v) {
  PolyAccumulator acc;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono.var(i) != v) continue;
      acc.add(t.mono.reduced(i), t.coeff * Rational(t.mono.exponent(i)));
      break;
    }
  }
  return acc.finish();
}

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  for (const auto& [v, value] : bindings) {
    for (const auto& [w, unused] : bindings) {
      (void)unused;
      if (w != v && value.contains(w))
        throw Error(ErrorCode::CyclicSubstitution,
                    "value bound to " + v.to_string() + " mentions bound " + w.to_string());
    }
  }
  // Cache of value powers keyed by (indeterminate, exponent).
  std::map<std::pair<Indeterminate, unsigned>, Polynomial> powers;
  auto power_of = [&](Indeterminate v, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, pow(bindings.at(v), e)).first->second;
  };
  PolyAccumulator acc;
  for (const auto& t : p.terms()) {
    Monomial rest;
    Polynomial factor(t.coeff);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      Indeterminate v = t.mono.var(i);
      if (bindings.count(v)) {
        factor = factor * power_of(v, t.mono.exponent(i));
        if (factor.is_zero()) break;
      } else {
        rest = rest * Monomial::of(v, t.mono.exponent(i));
      }
    }
    acc.add_product(factor, rest, Rational(1));
  }
  return acc.finish();
}

Polynomial integrate_t(const Polynomial& p) {
  const Indeterminate t = Indeterminate::aux_t();
  PolyAccumulator acc;
  for (const auto& term : p.terms()) {
    unsigned e = 0;
    std::size_t pos = term.mono.size();
    for (std::size_t i = 0; i < term.mono.size(); ++i)
      if (term.mono.var(i) == t) {
        e = term.mono.exponent(i);
        pos = i;
      }
    Monomial rest = pos < term.mono.size() ? term.mono.without(pos) : term.mono;
    acc.add(std::move(rest), term.coeff / Rational(static_cast<std::int64_t>(e) + 1));
  }
  return acc.finish();
}

Rational evaluate(const Polynomial& p,
                  const std::unordered_map<Indeterminate, Rational, IndeterminateHash>& point) {
  Rational total;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      auto it = point.find(t.mono.var(i));
      if (it == point.end())
        throw Error(ErrorCode::InvalidArgument, "no value for " + t.mono.var(i).to_string());
      for (unsigned e = 0; e < t.mono.exponent(i); ++e) v *= it->second;
    }
    total += v;
  }
  return total;
}

}  // namespace jetvar
