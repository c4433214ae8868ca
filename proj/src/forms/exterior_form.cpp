#include "forms/exterior_form.hpp"

#include <algorithm>
#include <set>

#include "common/error.hpp"

namespace jetvar {

// --- FormAccumulator ------------------------------------------------------------

void FormAccumulator::add(const Basis& b, const Polynomial& p, const Rational& scale) {
  if (p.is_zero() || scale.is_zero()) return;
  map_[b].add(p, scale);
}

void FormAccumulator::add(const ExteriorForm& f, const Rational& scale) {
  for (const auto& [b, p] : f.terms()) add(b, p, scale);
}

void FormAccumulator::add_product(const Basis& b, const Polynomial& p, const Polynomial& q,
                                  const Rational& scale) {
  if (p.is_zero() || q.is_zero() || scale.is_zero()) return;
  map_[b].add_product(p, q, scale);
}

ExteriorForm FormAccumulator::finish() {
  ExteriorForm f(degree_);
  f.terms_.reserve(map_.size());
  std::size_t total = 0;
  for (auto& [b, acc] : map_) {
    Polynomial p = acc.finish();
    if (p.is_zero()) continue;
    total += p.size();
    f.terms_.emplace_back(b, std::move(p));
  }
  map_.clear();
  std::sort(f.terms_.begin(), f.terms_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  check_term_count(total);
  return f;
}

// --- ExteriorForm -----------------------------------------------------------------

ExteriorForm ExteriorForm::scalar(const Polynomial& f) {
  ExteriorForm out(0);
  if (!f.is_zero()) out.terms_.emplace_back(Basis{}, f);
  return out;
}

ExteriorForm ExteriorForm::differential(Indeterminate v) {
  ExteriorForm out(1);
  out.terms_.emplace_back(Basis{v.key()}, Polynomial(1));
  return out;
}

ExteriorForm ExteriorForm::monomial(const Polynomial& coeff, const std::vector<Indeterminate>& diffs) {
  ExteriorForm out = scalar(coeff);
  for (auto v : diffs) out = wedge(out, differential(v));
  return out;
}

Polynomial ExteriorForm::coefficient(const Basis& b) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const auto& t, const Basis& x) { return t.first < x; });
  if (it != terms_.end() && it->first == b) return it->second;
  return {};
}

Polynomial ExteriorForm::top_coefficient(int base_dim) const {
  Basis b;
  for (int l = 0; l < base_dim; ++l) b.push_back(Indeterminate::base(l).key());
  return coefficient(b);
}

bool ExteriorForm::is_horizontal() const {
  for (const auto& [b, p] : terms_)
    for (auto k : b)
      if (Indeterminate::from_key(k).kind() != VarKind::BaseCoord) return false;
  return true;
}

std::size_t ExteriorForm::term_count() const {
  std::size_t n = 0;
  for (const auto& [b, p] : terms_) n += p.size();
  return n;
}

ExteriorForm ExteriorForm::operator-() const {
  ExteriorForm r = *this;
  for (auto& [b, p] : r.terms_) p = -p;
  return r;
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    degree_ = o.degree_;
    return *this;
  }
  if (o.degree_ != degree_)
    throw Error(ErrorCode::InvalidArgument, "adding forms of degree " + std::to_string(degree_) +
                                                " and " + std::to_string(o.degree_));
  std::vector<std::pair<Basis, Polynomial>> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first < o.terms_[j].first) {
      out.push_back(std::move(terms_[i++]));
    } else if (o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Polynomial p = terms_[i].second + o.terms_[j].second;
      if (!p.is_zero()) out.emplace_back(std::move(terms_[i].first), std::move(p));
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) { return *this += -o; }

ExteriorForm& ExteriorForm::operator*=(const Polynomial& f) {
  std::vector<std::pair<Basis, Polynomial>> out;
  for (auto& [b, p] : terms_) {
    Polynomial q = p * f;
    if (!q.is_zero()) out.emplace_back(std::move(b), std::move(q));
  }
  terms_ = std::move(out);
  return *this;
}

ExteriorForm& ExteriorForm::operator*=(const Rational& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [b, p] : terms_) p *= c;
  return *this;
}

bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::vector<std::string> ExteriorForm::to_lines() const {
  std::vector<std::string> lines;
  for (const auto& [b, p] : terms_) {
    std::string diff;
    for (std::size_t i = 0; i < b.size(); ++i) {
      diff += i ? "/\\d" : "d";
      diff += Indeterminate::from_key(b[i]).to_string();
    }
    for (const auto& t : p.terms()) {
      std::string line = t.coeff.to_string();
      if (!t.mono.is_one()) line += "*" + t.mono.to_string();
      if (!diff.empty()) line += " " + diff;
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

std::string ExteriorForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& line : to_lines()) {
    if (!s.empty()) s += '\n';
    s += line;
  }
  return s;
}

// --- operations ---------------------------------------------------------------------

int merge_bases(const Basis& a, const Basis& b, Basis& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  std::size_t swaps = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else if (b[j] < a[i]) {
      swaps += a.size() - i;
      out.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return (swaps & 1u) ? -1 : 1;
}

namespace {

// Inserts label k at the front of b and returns the sign of sorting it in.
int prepend_label(std::uint64_t k, const Basis& b, Basis& out) {
  auto it = std::lower_bound(b.begin(), b.end(), k);
  if (it != b.end() && *it == k) return 0;
  auto pos = static_cast<std::size_t>(it - b.begin());
  out.clear();
  out.reserve(b.size() + 1);
  out.insert(out.end(), b.begin(), it);
  out.push_back(k);
  out.insert(out.end(), it, b.end());
  return (pos & 1u) ? -1 : 1;
}

}  // namespace

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  FormAccumulator acc(a.degree() + b.degree());
  Basis merged;
  for (const auto& [ba, pa] : a.terms()) {
    for (const auto& [bb, pb] : b.terms()) {
      int s = merge_bases(ba, bb, merged);
      if (s == 0) continue;
      acc.add_product(merged, pa, pb, Rational(s));
    }
  }
  return acc.finish();
}

ExteriorForm exterior_d(const ExteriorForm& a, const Chart& chart) {
  FormAccumulator acc(a.degree() + 1);
  Basis out;
  for (const auto& [b, p] : a.terms()) {
    for (const auto& t : p.terms()) {
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        Indeterminate v = t.mono.var(i);
        chart.require_in_chart(v);
        if (v.kind() == VarKind::AuxScalar) continue;
        Rational c = t.coeff * Rational(t.mono.exponent(i));
        Monomial rest = t.mono.reduced(i);
        if (chart.is_coordinate(v)) {
          int s = prepend_label(v.key(), b, out);
          if (s != 0) acc.slot(out).add(rest, s > 0 ? c : -c);
        } else {
          // function symbol: d s = s_{,lambda} dx^lambda
          for (int l = 0; l < chart.base_dim; ++l) {
            int s = prepend_label(Indeterminate::base(l).key(), b, out);
            if (s == 0) continue;
            acc.slot(out).add(rest * Monomial::of(v.raised(l)), s > 0 ? c : -c);
          }
        }
      }
    }
  }
  return acc.finish();
}

ExteriorForm contract(const VectorField& X, const ExteriorForm& a) {
  if (a.degree() == 0) return ExteriorForm(0);
  FormAccumulator acc(a.degree() - 1);
  for (const auto& [b, p] : a.terms()) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto it = X.find(Indeterminate::from_key(b[j]));
      if (it == X.end() || it->second.is_zero()) continue;
      Basis rest = b;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      acc.add_product(rest, p, it->second, Rational((j & 1u) ? -1 : 1));
    }
  }
  return acc.finish();
}

ExteriorForm lie_derivative_form(const VectorField& X, const ExteriorForm& a, const Chart& chart) {
  ExteriorForm result = contract(X, exterior_d(a, chart));
  if (a.degree() > 0) result += exterior_d(contract(X, a), chart);
  return result;
}

Polynomial apply_vector_field(const VectorField& X, const Polynomial& f, const Chart& chart) {
  return contract(X, exterior_d(ExteriorForm::scalar(f), chart)).coefficient({});
}

ExteriorForm pullback(const ExteriorForm& a, const Bindings& coeffs,
                      const std::map<Indeterminate, ExteriorForm>& diff_images) {
  std::map<Basis, ExteriorForm> image_cache;
  auto image_of = [&](const Basis& b) -> const ExteriorForm& {
    auto it = image_cache.find(b);
    if (it != image_cache.end()) return it->second;
    ExteriorForm img = ExteriorForm::scalar(Polynomial(1));
    for (auto k : b) {
      Indeterminate v = Indeterminate::from_key(k);
      auto d = diff_images.find(v);
      img = wedge(img, d != diff_images.end() ? d->second : ExteriorForm::differential(v));
      if (img.is_zero()) break;
    }
    return image_cache.emplace(b, std::move(img)).first->second;
  };
  // Every differential image is a 1-form, so the degree is preserved.
  FormAccumulator acc(a.degree());
  for (const auto& [b, p] : a.terms()) {
    Polynomial c = substitute(p, coeffs);
    if (c.is_zero()) continue;
    const ExteriorForm& img = image_of(b);
    for (const auto& [ib, ip] : img.terms()) acc.add_product(ib, c, ip, Rational(1));
  }
  return acc.finish();
}

ExteriorForm map_coefficients(const ExteriorForm& a, const std::function<Polynomial(const Polynomial&)>& f) {
  FormAccumulator acc(a.degree());
  for (const auto& [b, p] : a.terms()) acc.add(b, f(p));
  return acc.finish();
}

VectorField vf_add(const VectorField& u, const VectorField& v) {
  VectorField out = u;
  for (const auto& [k, p] : v) out[k] += p;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

VectorField vf_scale(const VectorField& u, const Rational& c) {
  VectorField out;
  if (c.is_zero()) return out;
  for (const auto& [k, p] : u) out[k] = p * c;
  return out;
}

VectorField vf_bracket(const VectorField& u, const VectorField& v, const Chart& chart) {
  VectorField out;
  std::set<Indeterminate> keys;
  for (const auto& kv : u) keys.insert(kv.first);
  for (const auto& kv : v) keys.insert(kv.first);
  for (auto k : keys) {
    Polynomial c;
    if (auto it = v.find(k); it != v.end()) c += apply_vector_field(u, it->second, chart);
    if (auto it = u.find(k); it != u.end()) c -= apply_vector_field(v, it->second, chart);
    if (!c.is_zero()) out[k] = std::move(c);
  }
  return out;
}

bool vf_equal(const VectorField& u, const VectorField& v) {
  auto diff = vf_add(u, vf_scale(v, Rational(-1)));
  return diff.empty();
}

}  // namespace jetvar
