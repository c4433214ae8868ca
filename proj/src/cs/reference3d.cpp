#include "cs/reference3d.hpp"

#include <array>

#include "common/error.hpp"

namespace jetvar {

namespace {

Polynomial var(Indeterminate v) { return Polynomial::var(v); }

struct Perm {
  int a, b, c, sign;
};

constexpr std::array<Perm, 6> kEps = {{{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                                      {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}}};

}  // namespace

Reference3D reference_3d(const CSData& cs) {
  if (cs.k() != 2) throw Error(ErrorCode::InvalidArgument, "three-dimensional reference needs k = 2");
  const auto& g = cs.algebra();
  const int m = g.dim();
  const JetContext& ctx = cs.ctx();
  auto a = [](int r, int mu) { return var(Indeterminate::conn(r, mu)); };
  auto da = [](int r, int mu, int l) {
    int d[1] = {l};
    return var(Indeterminate::conn(r, mu, d));
  };
  auto B = [&](int r, int mu) { return cs.background_field(r, mu); };
  auto dB = [&](int r, int mu, int l) { return cs.background_derivative(r, mu, l); };
  auto xi = [](int r) { return var(Indeterminate::gauge(r)); };
  auto dxi = [](int r, int l) {
    int d[1] = {l};
    return var(Indeterminate::gauge(r, d));
  };
  auto kappa = [&](int p, int q) -> const Rational& { return cs.invariant().at({p, q}); };
  const Rational h = cs.h();

  Reference3D out;
  PolyAccumulator L;
  std::vector<PolyAccumulator> boundary(3), lie(3), J(3), Jbar(3);
  for (const auto& e : kEps) {
    const Rational s(e.sign);
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) {
        const Rational& k = kappa(p, q);
        if (k.is_zero()) continue;
        const Rational w = h * k * s;
        // curvature of a and of B
        Polynomial Fa = da(q, e.c, e.b) - da(q, e.b, e.c);
        Polynomial FB = dB(q, e.c, e.b) - dB(q, e.b, e.c);
        Polynomial cubic_a, cubic_B;
        for (int u = 0; u < m; ++u)
          for (int v = 0; v < m; ++v) {
            const Rational& c = g.c(q, u, v);
            if (c.is_zero()) continue;
            Fa += a(u, e.b) * a(v, e.c) * c;
            FB += B(u, e.b) * B(v, e.c) * c;
            cubic_a += a(u, e.b) * a(v, e.c) * (c * Rational(1, 3));
            cubic_B += B(u, e.b) * B(v, e.c) * (c * Rational(1, 3));
          }
        L.add_product(a(p, e.a), Fa - cubic_a, w * Rational(1, 2));
        L.add_product(B(p, e.a), FB - cubic_B, -w * Rational(1, 2));
        boundary[e.a].add_product(a(p, e.b), B(q, e.c), w);
        // covariant derivative of xi, index p
        Polynomial Dxi = dxi(p, e.b);
        for (int u = 0; u < m; ++u)
          for (int v = 0; v < m; ++v) {
            const Rational& c = g.c(p, u, v);
            if (!c.is_zero()) Dxi += a(u, e.b) * xi(v) * c;
          }
        lie[e.a].add_product(dxi(p, e.b), a(q, e.c), w);
        lie[e.a].add_product(Dxi, B(q, e.c), w);
        J[e.a].add_product(Dxi, a(q, e.c) - B(q, e.c), w);
        Jbar[e.a].add_product(dxi(p, e.b), a(q, e.c), w * Rational(2));
        for (int u = 0; u < m; ++u)
          for (int v = 0; v < m; ++v) {
            const Rational& c = g.c(p, u, v);
            if (!c.is_zero()) Jbar[e.a].add_product(a(u, e.b) * a(q, e.c), xi(v), w * c);
          }
      }
  }
  PolyAccumulator lie_total;
  for (int al = 0; al < 3; ++al) {
    L.add(total_derivative(boundary[al].finish(), al, ctx), Rational(-1));
    lie_total.add(total_derivative(lie[al].finish(), al, ctx), Rational(-1));
    out.noether_current.push_back(J[al].finish());
    out.modified_current.push_back(Jbar[al].finish());
  }
  out.lagrangian = L.finish();
  out.lie_derivative = lie_total.finish();
  return out;
}

}  // namespace jetvar
