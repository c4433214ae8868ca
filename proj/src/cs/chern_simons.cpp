#include "cs/chern_simons.hpp"

#include <string>

#include "common/error.hpp"

namespace jetvar {

namespace {

Polynomial var(Indeterminate v) { return Polynomial::var(v); }

ExteriorForm dx(int l) { return ExteriorForm::differential(Indeterminate::base(l)); }

ExteriorForm dxdx(const Polynomial& c, int l, int m) {
  return ExteriorForm::monomial(c, {Indeterminate::base(l), Indeterminate::base(m)});
}

Polynomial t_poly() { return var(Indeterminate::aux_t()); }

}  // namespace

CSData::CSData(LieAlgebraData algebra, InvariantTensor invariant, Rational h, Background background,
               int jet_order, int matter_dim)
    : algebra_(std::move(algebra)),
      invariant_(std::move(invariant)),
      h_(std::move(h)),
      background_(background),
      ctx_(2 * invariant_.degree() - 1, algebra_.dim(), matter_dim, jet_order) {
  if (invariant_.degree() < 2)
    throw Error(ErrorCode::InvalidArgument, "invariant tensor degree must be at least 2");
  if (invariant_.dim() != algebra_.dim())
    throw Error(ErrorCode::InvalidArgument, "invariant tensor dimension does not match the algebra");
  invariant_.require_symmetric();
  effective_ = invariant_.scaled(h_);
}

Polynomial CSData::background_field(int r, int mu) const {
  if (background_ == Background::Zero) return {};
  return var(Indeterminate::background(r, mu));
}

Polynomial CSData::background_derivative(int r, int mu, int lambda) const {
  if (background_ == Background::Zero) return {};
  int d[1] = {lambda};
  return var(Indeterminate::background(r, mu, d));
}

ExteriorForm contract_symmetric(const InvariantTensor& b, const std::vector<ExteriorForm>& first,
                                const std::vector<ExteriorForm>& rest) {
  const int m = b.dim(), k = b.degree();
  // level[j] holds partial sums indexed by the leading k-1-j slots.
  // Start: G_{r1..r_{k-1}} = sum_{rk} b_{r1..rk} rest[rk].
  std::vector<int> idx(k, 0);
  std::vector<ExteriorForm> level;
  {
    std::size_t count = 1;
    for (int i = 0; i < k - 1; ++i) count *= static_cast<std::size_t>(m);
    level.resize(count);
    for (std::size_t f = 0; f < count; ++f) {
      std::size_t g = f;
      for (int i = k - 2; i >= 0; --i) {
        idx[i] = static_cast<int>(g % m);
        g /= m;
      }
      FormAccumulator acc(rest.empty() ? 0 : rest[0].degree());
      for (int r = 0; r < m; ++r) {
        idx[k - 1] = r;
        const Rational& c = b.at(idx);
        if (!c.is_zero()) acc.add(rest[r], c);
      }
      level[f] = acc.finish();
    }
  }
  // Fold the middle slots: G_{r1..r_{j}} = sum_{r_{j+1}} rest[r_{j+1}] ^ G_{r1..r_{j+1}}.
  for (int depth = k - 2; depth >= 1; --depth) {
    std::vector<ExteriorForm> next(level.size() / m);
    for (std::size_t f = 0; f < next.size(); ++f) {
      ExteriorForm sum;
      for (int r = 0; r < m; ++r) {
        const ExteriorForm& g = level[f * m + r];
        if (g.is_zero() || rest[r].is_zero()) continue;
        sum += wedge(rest[r], g);
      }
      next[f] = std::move(sum);
    }
    level = std::move(next);
  }
  ExteriorForm total;
  for (int r = 0; r < m; ++r) {
    if (level[r].is_zero() || first[r].is_zero()) continue;
    total += wedge(first[r], level[r]);
  }
  return total;
}

std::vector<ExteriorForm> canonical_curvature(const CSData& cs) {
  const auto& g = cs.algebra();
  const int n = cs.base_dim();
  std::vector<ExteriorForm> out;
  for (int r = 0; r < g.dim(); ++r) {
    ExteriorForm F(2);
    for (int mu = 0; mu < n; ++mu)
      F += wedge(ExteriorForm::differential(Indeterminate::conn(r, mu)), dx(mu));
    for (int p = 0; p < g.dim(); ++p)
      for (int q = 0; q < g.dim(); ++q) {
        const Rational& c = g.c(r, p, q);
        if (c.is_zero()) continue;
        for (int l = 0; l < n; ++l)
          for (int mu = 0; mu < n; ++mu) {
            if (l == mu) continue;
            F += dxdx(var(Indeterminate::conn(p, l)) * var(Indeterminate::conn(q, mu)) * (c * Rational(1, 2)),
                      l, mu);
          }
      }
    out.push_back(std::move(F));
  }
  return out;
}

std::vector<ExteriorForm> strength_horizontal(const CSData& cs) {
  std::vector<ExteriorForm> out;
  for (const auto& F : canonical_curvature(cs)) out.push_back(horizontal_projection(F, cs.ctx()));
  return out;
}

std::vector<std::vector<std::vector<Polynomial>>> strength_components(const CSData& cs) {
  const auto& g = cs.algebra();
  const int n = cs.base_dim();
  std::vector<std::vector<std::vector<Polynomial>>> F(
      g.dim(), std::vector<std::vector<Polynomial>>(n, std::vector<Polynomial>(n)));
  for (int r = 0; r < g.dim(); ++r)
    for (int l = 0; l < n; ++l)
      for (int mu = 0; mu < n; ++mu) {
        int dl[1] = {l}, dm[1] = {mu};
        Polynomial f = var(Indeterminate::conn(r, mu, dl)) - var(Indeterminate::conn(r, l, dm));
        for (int p = 0; p < g.dim(); ++p)
          for (int q = 0; q < g.dim(); ++q) {
            const Rational& c = g.c(r, p, q);
            if (c.is_zero()) continue;
            f += var(Indeterminate::conn(p, l)) * var(Indeterminate::conn(q, mu)) * c;
          }
        F[r][l][mu] = std::move(f);
      }
  return F;
}

ExteriorForm characteristic_form(const CSData& cs) {
  auto F = canonical_curvature(cs);
  return contract_symmetric(cs.effective_tensor(), F, F);
}

ExteriorForm characteristic_at_B(const CSData& cs) {
  const int n = cs.base_dim();
  Bindings coeffs;
  std::map<Indeterminate, ExteriorForm> diffs;
  for (int r = 0; r < cs.algebra().dim(); ++r)
    for (int mu = 0; mu < n; ++mu) {
      Indeterminate a = Indeterminate::conn(r, mu);
      coeffs[a] = cs.background_field(r, mu);
      ExteriorForm dB(1);
      for (int l = 0; l < n; ++l) dB += ExteriorForm::monomial(cs.background_derivative(r, mu, l), {Indeterminate::base(l)});
      diffs.emplace(a, std::move(dB));
    }
  return pullback(characteristic_form(cs), coeffs, diffs);
}

namespace {

// t a + (1-t) B for every (r, mu).
std::vector<std::vector<Polynomial>> interpolated_connection(const CSData& cs) {
  const int n = cs.base_dim();
  Polynomial t = t_poly();
  Polynomial one_minus_t = Polynomial(1) - t;
  std::vector<std::vector<Polynomial>> A(cs.algebra().dim(), std::vector<Polynomial>(n));
  for (int r = 0; r < cs.algebra().dim(); ++r)
    for (int mu = 0; mu < n; ++mu)
      A[r][mu] = t * var(Indeterminate::conn(r, mu)) + one_minus_t * cs.background_field(r, mu);
  return A;
}

// (a - B)^r_mu dx^mu for every r.
std::vector<ExteriorForm> difference_one_forms(const CSData& cs) {
  const int n = cs.base_dim();
  std::vector<ExteriorForm> out;
  for (int r = 0; r < cs.algebra().dim(); ++r) {
    ExteriorForm w(1);
    for (int mu = 0; mu < n; ++mu)
      w += ExteriorForm::monomial(var(Indeterminate::conn(r, mu)) - cs.background_field(r, mu),
                                  {Indeterminate::base(mu)});
    out.push_back(std::move(w));
  }
  return out;
}

// c-term 1/2 c^r_{pq} A^p_l A^q_mu dx^l ^ dx^mu added into F.
void add_quadratic(ExteriorForm& F, int r, const CSData& cs, const std::vector<std::vector<Polynomial>>& A) {
  const auto& g = cs.algebra();
  const int n = cs.base_dim();
  for (int p = 0; p < g.dim(); ++p)
    for (int q = 0; q < g.dim(); ++q) {
      const Rational& c = g.c(r, p, q);
      if (c.is_zero()) continue;
      for (int l = 0; l < n; ++l)
        for (int mu = 0; mu < n; ++mu)
          if (l != mu) F += dxdx(A[p][l] * A[q][mu] * (c * Rational(1, 2)), l, mu);
    }
}

ExteriorForm integrate_and_scale(const ExteriorForm& P, int k) {
  return map_coefficients(P, [k](const Polynomial& p) { return integrate_t(p) * Rational(k); });
}

}  // namespace

ExteriorForm cs_form(const CSData& cs) {
  const int n = cs.base_dim();
  Polynomial t = t_poly();
  Polynomial one_minus_t = Polynomial(1) - t;
  auto A = interpolated_connection(cs);
  std::vector<ExteriorForm> Ft;
  for (int r = 0; r < cs.algebra().dim(); ++r) {
    ExteriorForm F(2);
    for (int mu = 0; mu < n; ++mu) {
      // d(t a + (1-t) B) ^ dx^mu with dB = d_l B dx^l
      F += ExteriorForm::monomial(t, {Indeterminate::conn(r, mu), Indeterminate::base(mu)});
      for (int l = 0; l < n; ++l)
        if (l != mu) F += dxdx(one_minus_t * cs.background_derivative(r, mu, l), l, mu);
    }
    add_quadratic(F, r, cs, A);
    Ft.push_back(std::move(F));
  }
  ExteriorForm P = contract_symmetric(cs.effective_tensor(), difference_one_forms(cs), Ft);
  return integrate_and_scale(P, cs.k());
}

ExteriorForm cs_lagrangian(const CSData& cs) { return horizontal_projection(cs_form(cs), cs.ctx()); }

ExteriorForm cs_lagrangian_direct(const CSData& cs) {
  const int n = cs.base_dim();
  Polynomial t = t_poly();
  Polynomial one_minus_t = Polynomial(1) - t;
  auto A = interpolated_connection(cs);
  std::vector<ExteriorForm> Ft;
  for (int r = 0; r < cs.algebra().dim(); ++r) {
    ExteriorForm F(2);
    for (int l = 0; l < n; ++l)
      for (int mu = 0; mu < n; ++mu) {
        if (l == mu) continue;
        int dl[1] = {l}, dm[1] = {mu};
        Polynomial half_curl = (t * var(Indeterminate::conn(r, mu, dl)) +
                                one_minus_t * cs.background_derivative(r, mu, l) -
                                t * var(Indeterminate::conn(r, l, dm)) -
                                one_minus_t * cs.background_derivative(r, l, mu)) *
                               Rational(1, 2);
        F += dxdx(half_curl, l, mu);
      }
    add_quadratic(F, r, cs, A);
    Ft.push_back(std::move(F));
  }
  ExteriorForm P = contract_symmetric(cs.effective_tensor(), difference_one_forms(cs), Ft);
  return integrate_and_scale(P, cs.k());
}

}  // namespace jetvar
