#include "doctest.h"
#include "test_support.hpp"

using namespace jt;

namespace {

// Direct Jacobiator over all triples.
bool jacobi_holds(int m, const std::vector<Rational>& c) {
  auto C = [&](int r, int p, int q) -> const Rational& { return c[static_cast<std::size_t>((r * m + p) * m + q)]; };
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int s = 0; s < m; ++s)
        for (int r = 0; r < m; ++r) {
          Rational v;
          for (int u = 0; u < m; ++u)
            v += C(u, q, s) * C(r, p, u) + C(u, s, p) * C(r, q, u) + C(u, p, q) * C(r, s, u);
          if (!v.is_zero()) return false;
        }
  return true;
}

std::vector<Rational> dense(const LieAlgebraData& g) {
  const int m = g.dim();
  std::vector<Rational> c;
  for (int r = 0; r < m; ++r)
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) c.push_back(g.c(r, p, q));
  return c;
}

}  // namespace

TEST_SUITE("gauge") {

TEST_CASE("builtin algebras") {
  for (const char* name : {"u1", "u1^3", "su2", "so3", "u1+su2", "su2+su2"}) {
    auto g = builtin_algebra(name);
    CHECK(jacobi_holds(g.dim(), dense(g)));
  }
  CHECK(builtin_algebra("u1+su2").dim() == 4);
  CHECK(builtin_algebra("u1^3").is_abelian());
  CHECK(builtin_algebra("su2").c(0, 1, 2) == Rational(1));
  CHECK_THROWS_AS(builtin_algebra("e8"), Error);
}

TEST_CASE("structure constant validation agrees with the brute-force Jacobiator") {
  RandomSource rs(41);
  int rejected = 0, accepted = 0;
  for (int i = 0; i < 80; ++i) {
    auto g = i % 2 ? builtin_algebra("su2") : heisenberg();
    auto c = dense(g);
    const int m = g.dim();
    // antisymmetric mutation of one pair
    int r = rs.uniform(0, m - 1), p = rs.uniform(0, m - 1), q = rs.uniform(0, m - 1);
    if (p == q) continue;
    Rational d = rs.rational(3);
    c[static_cast<std::size_t>((r * m + p) * m + q)] += d;
    c[static_cast<std::size_t>((r * m + q) * m + p)] -= d;
    bool ok = jacobi_holds(m, c);
    if (ok) {
      CHECK_NOTHROW(LieAlgebraData::from_dense(m, c));
      ++accepted;
    } else {
      CHECK_THROWS_AS(LieAlgebraData::from_dense(m, c), Error);
      ++rejected;
    }
  }
  CHECK(rejected > 0);
  CHECK(accepted > 0);
}

TEST_CASE("antisymmetry violation") {
  try {
    load_lie_algebra(2, {{1, 0, 1, Rational(1)}}, "half");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AntisymmetryViolation);
  }
  try {
    load_lie_algebra(3, {{1, 0, 1, Rational(1)}, {1, 1, 0, Rational(-1)}, {0, 1, 2, Rational(1)}, {0, 2, 1, Rational(-1)}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::JacobiViolation);
  }
}

TEST_CASE("Killing form") {
  auto K = killing_form(builtin_algebra("su2"));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(K[i][j] == Rational(i == j ? -2 : 0));
  auto Ka = killing_form(affine_line());
  CHECK(Ka[0][0] == Rational(1));
  CHECK(Ka[1][1] == Rational(0));
}

TEST_CASE("invariant tensors") {
  RandomSource rs(5);
  for (int i = 0; i < 6; ++i) {
    auto g = random_basis_change(i % 2 ? builtin_algebra("su2") : builtin_algebra("u1+su2"), rs);
    CHECK(check_invariant_tensor(g, tensor_from_matrix(killing_form(g))).passed());
  }
  auto g4 = builtin_algebra("u1+su2");
  CHECK(check_invariant_tensor(g4, u1_su2_cubic(g4)).passed());
  auto su2 = builtin_algebra("su2");
  InvariantTensor bad(3, 2);
  bad.set({0, 0}, Rational(1));
  bad.set({1, 1}, Rational(1));
  bad.set({2, 2}, Rational(2));
  auto rep = check_invariant_tensor(su2, bad);
  CHECK_FALSE(rep.passed());
  CHECK(!rep.residual.empty());
  InvariantTensor skew(3, 2);
  skew.set({0, 1}, Rational(1));
  CHECK_THROWS_AS(skew.require_symmetric(), Error);
  InvariantTensor cubic(2, 3);
  cubic.set_symmetric({0, 1, 1}, Rational(5));
  CHECK(cubic.is_symmetric());
  CHECK(cubic.at({1, 0, 1}) == Rational(5));
  CHECK(check_invariant_tensor(builtin_algebra("u1^2"), cubic).passed());
}

TEST_CASE("gauge generator components") {
  JetContext ctx(3, 3, 0, 2);
  auto gen = gauge_generator(builtin_algebra("su2"), ctx);
  Polynomial expected = P(xi(0, {1})) + P(a(1, 1)) * P(xi(2)) - P(a(2, 1)) * P(xi(1));
  CHECK(gen.field.at(a(0, 1)) == expected);
}

TEST_CASE("gauge generators close under the bracket") {
  RandomSource rs(13);
  for (const char* name : {"su2", "u1+su2"}) {
    auto g = builtin_algebra(name);
    JetContext ctx(2, g.dim(), 0, 2);
    std::vector<Indeterminate> base{x(0), x(1)};
    for (int i = 0; i < 5; ++i) {
      std::vector<Polynomial> s, t;
      for (int r = 0; r < g.dim(); ++r) {
        s.push_back(rs.polynomial(base, 2, 2));
        t.push_back(rs.polynomial(base, 2, 2));
      }
      auto lhs = vf_bracket(gauge_generator(g, ctx, s).field, gauge_generator(g, ctx, t).field, ctx.chart());
      auto rhs = gauge_generator(g, ctx, section_bracket(s, t, g)).field;
      CHECK(vf_equal(lhs, rhs));
    }
  }
}

}
