#include "doctest.h"
#include "test_support.hpp"

using namespace jt;

namespace {

InvariantTensor unit_tensor(int m, int k) {
  InvariantTensor b(m, k);
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  for (int r = 0; r < m; ++r) {
    std::fill(idx.begin(), idx.end(), r);
    b.set(idx, Rational(1));
  }
  return b;
}

CSData killing_data(const LieAlgebraData& g, Rational h, Background bg) {
  return CSData(g, tensor_from_matrix(killing_form(g)), std::move(h), bg);
}

ExteriorForm canonical_one_form(const CSData& cs, int r) {
  ExteriorForm A(1);
  for (int mu = 0; mu < cs.base_dim(); ++mu) A += ExteriorForm::monomial(P(a(r, mu)), {x(mu)});
  return A;
}

void check_transgression(const CSData& cs) {
  ExteriorForm lhs = exterior_d(cs_form(cs), cs.ctx().chart());
  ExteriorForm rhs = characteristic_form(cs) - characteristic_at_B(cs);
  CHECK(lhs == rhs);
  CHECK(cs_lagrangian(cs) == cs_lagrangian_direct(cs));
}

}  // namespace

TEST_SUITE("chern_simons") {

TEST_CASE("abelian curvature") {
  CSData cs(builtin_algebra("u1"), unit_tensor(1, 2), Rational(1), Background::Zero);
  ExteriorForm F(2);
  for (int mu = 0; mu < 3; ++mu) F += wedge(ExteriorForm::differential(a(0, mu)), ExteriorForm::differential(x(mu)));
  CHECK(canonical_curvature(cs)[0] == F);
}

TEST_CASE("su2 curvature quadratic term") {
  auto cs = killing_data(builtin_algebra("su2"), Rational(1), Background::Zero);
  auto F = canonical_curvature(cs);
  Basis b01{x(0).key(), x(1).key()};
  CHECK(F[0].coefficient(b01) == P(a(1, 0)) * P(a(2, 1)) - P(a(1, 1)) * P(a(2, 0)));
  Basis b12{x(1).key(), x(2).key()};
  CHECK(F[1].coefficient(b12) == P(a(2, 1)) * P(a(0, 2)) - P(a(2, 2)) * P(a(0, 1)));
}

TEST_CASE("Bianchi identity") {
  RandomSource rs(3);
  std::vector<LieAlgebraData> algebras{builtin_algebra("su2"), affine_line(), heisenberg(),
                                       random_basis_change(builtin_algebra("su2"), rs),
                                       random_basis_change(affine_line(), rs)};
  for (const auto& g : algebras) {
    InvariantTensor b(g.dim(), 2);  // only the context matters here
    b.set({0, 0}, Rational(1));
    CSData cs(g, b, Rational(1), Background::Zero);
    auto F = canonical_curvature(cs);
    for (int r = 0; r < g.dim(); ++r) {
      ExteriorForm rhs(3);
      for (int p = 0; p < g.dim(); ++p)
        for (int q = 0; q < g.dim(); ++q)
          if (!g.c(r, p, q).is_zero()) rhs += g.c(r, p, q) * wedge(F[p], canonical_one_form(cs, q));
      CHECK(exterior_d(F[r], cs.ctx().chart()) == rhs);
    }
  }
}

TEST_CASE("horizontal strength components") {
  RandomSource rs(4);
  auto cs = killing_data(random_basis_change(builtin_algebra("su2"), rs), Rational(1), Background::Zero);
  auto H = strength_horizontal(cs);
  auto C = strength_components(cs);
  for (int r = 0; r < 3; ++r)
    for (int l = 0; l < 3; ++l) {
      CHECK(C[r][l][l].is_zero());
      for (int mu = l + 1; mu < 3; ++mu) {
        CHECK(H[r].coefficient(Basis{x(l).key(), x(mu).key()}) == C[r][l][mu]);
        CHECK(C[r][mu][l] == -C[r][l][mu]);
      }
    }
}

TEST_CASE("characteristic form is closed and gauge invariant") {
  std::vector<CSData> cases{killing_data(builtin_algebra("su2"), Rational(1), Background::Zero),
                            killing_data(builtin_algebra("so3"), Rational(2, 3), Background::Symbolic),
                            CSData(builtin_algebra("u1+su2"), u1_su2_cubic(builtin_algebra("u1+su2")), Rational(1),
                                   Background::Zero)};
  for (const auto& cs : cases) {
    ExteriorForm PF = characteristic_form(cs);
    CHECK(exterior_d(PF, cs.ctx().chart()).is_zero());
    auto gen = gauge_generator(cs.algebra(), cs.ctx());
    CHECK(lie_derivative_form(gen.field, PF, cs.ctx().chart()).is_zero());
  }
}

TEST_CASE("characteristic form at the background vanishes on the base") {
  for (auto bg : {Background::Zero, Background::Symbolic}) {
    auto cs = killing_data(builtin_algebra("su2"), Rational(1), bg);
    CHECK(characteristic_at_B(cs).is_zero());
  }
}

TEST_CASE("abelian k=2 form is A ^ dA") {
  CSData cs(builtin_algebra("u1"), unit_tensor(1, 2), Rational(1), Background::Zero);
  ExteriorForm A = canonical_one_form(cs, 0);
  CHECK(cs_form(cs) == wedge(A, exterior_d(A, cs.ctx().chart())));
}

TEST_CASE("transgression") {
  check_transgression(CSData(builtin_algebra("u1"), unit_tensor(1, 2), Rational(1), Background::Symbolic));
  check_transgression(killing_data(builtin_algebra("su2"), Rational(1), Background::Symbolic));
  check_transgression(killing_data(builtin_algebra("su2"), Rational(3, 2), Background::Zero));
  RandomSource rs(12);
  check_transgression(killing_data(random_basis_change(builtin_algebra("su2"), rs), Rational(-1, 4), Background::Symbolic));
  check_transgression(CSData(builtin_algebra("u1"), unit_tensor(1, 3), Rational(1), Background::Symbolic));
}

TEST_CASE("transgression with a mixed cubic tensor" * doctest::timeout(60)) {
  auto g = builtin_algebra("u1+su2");
  check_transgression(CSData(g, u1_su2_cubic(g), Rational(1), Background::Symbolic));
}

TEST_CASE("mutated form breaks the transgression") {
  auto cs = killing_data(builtin_algebra("su2"), Rational(1), Background::Symbolic);
  ExteriorForm bad = cs_form(cs) + ExteriorForm::monomial(P(a(0, 1)) * P(a(1, 2)), {a(2, 0), x(1), x(2)});
  CHECK_FALSE(exterior_d(bad, cs.ctx().chart()) == characteristic_form(cs) - characteristic_at_B(cs));
}

TEST_CASE("three-dimensional Lagrangian in components") {
  RandomSource rs(21);
  std::vector<LieAlgebraData> algebras{builtin_algebra("su2"), random_basis_change(builtin_algebra("su2"), rs)};
  for (const auto& g : algebras) {
    Rational h(5, 3);
    auto cs = killing_data(g, h, Background::Zero);
    const auto& b = cs.effective_tensor();
    const int m = g.dim();
    Polynomial L;
    for (int l = 0; l < 3; ++l)
      for (int mu = 0; mu < 3; ++mu)
        for (int nu = 0; nu < 3; ++nu) {
          int e = levi_civita3(l, mu, nu);
          if (!e) continue;
          for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
              const Rational& bpq = b.at({p, q});
              if (bpq.is_zero()) continue;
              L += P(a(p, l)) * P(a(q, nu, {mu})) * (bpq * Rational(e));
              for (int r = 0; r < m; ++r)
                for (int s = 0; s < m; ++s)
                  if (!g.c(q, r, s).is_zero())
                    L += P(a(p, l)) * P(a(r, mu)) * P(a(s, nu)) * (bpq * g.c(q, r, s) * Rational(e, 3));
            }
        }
    CHECK(cs_lagrangian(cs).top_coefficient(3) == L);
  }
}

}
