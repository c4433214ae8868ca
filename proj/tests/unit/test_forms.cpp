#include "doctest.h"
#include "test_support.hpp"

using namespace jt;

namespace {

struct FormGen {
  JetContext ctx{3, 2, 1, 2};
  std::vector<Indeterminate> coeff_vars;
  std::vector<Indeterminate> labels;
  RandomSource rs;
  explicit FormGen(std::uint64_t seed) : rs(seed) {
    coeff_vars = jet_variables(ctx, 1);
    coeff_vars.push_back(B(0, 1));
    coeff_vars.push_back(xi(1, {2}));
    labels = jet_variables(ctx, 1);
  }
  ExteriorForm form(int p) { return rs.form(coeff_vars, labels, p, rs.uniform(1, 4), 2); }
};

// L_X a term by term: X(f) dv.. + sum_j f dv1 ^ .. ^ d(X^{vj}) ^ ..
ExteriorForm lie_oracle(const VectorField& X, const ExteriorForm& a, const Chart& chart) {
  ExteriorForm out(a.degree());
  for (const auto& [b, f] : a.terms()) {
    std::vector<Indeterminate> diffs;
    for (auto k : b) diffs.push_back(Indeterminate::from_key(k));
    out += ExteriorForm::monomial(apply_vector_field(X, f, chart), diffs);
    for (std::size_t j = 0; j < diffs.size(); ++j) {
      auto it = X.find(diffs[j]);
      if (it == X.end()) continue;
      ExteriorForm piece = ExteriorForm::scalar(f);
      for (std::size_t i = 0; i < diffs.size(); ++i)
        piece = wedge(piece, i == j ? exterior_d(ExteriorForm::scalar(it->second), chart)
                                    : ExteriorForm::differential(diffs[i]));
      out += piece;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("forms") {

TEST_CASE("serialization") {
  auto f = ExteriorForm::monomial(P(x(0)) * Rational(2), {a(0, 0), x(1)});
  f += ExteriorForm::monomial(Polynomial(Rational(-1, 3)), {x(2), x(0)});
  CHECK(f.to_string() == "1/3 dx[0]/\\dx[2]\n-2/1*x[0] dx[1]/\\da[r=0;mu=0;D=()]");
  CHECK(ExteriorForm(2).to_string() == "0");
}

TEST_CASE("basis merge sign") {
  Basis out;
  CHECK(merge_bases({x(1).key()}, {x(0).key()}, out) == -1);
  CHECK(out == Basis{x(0).key(), x(1).key()});
  CHECK(merge_bases({x(0).key(), x(2).key()}, {x(1).key()}, out) == -1);
  CHECK(merge_bases({x(1).key()}, {x(0).key(), x(2).key()}, out) == -1);
  CHECK(merge_bases({x(0).key()}, {x(0).key()}, out) == 0);
}

TEST_CASE("graded commutativity and associativity") {
  FormGen g(21);
  for (int i = 0; i < 40; ++i) {
    int p = g.rs.uniform(0, 2), q = g.rs.uniform(0, 2);
    auto A = g.form(p), Bf = g.form(q), C = g.form(1);
    ExteriorForm ba = wedge(Bf, A);
    if ((p * q) % 2) ba = -ba;
    CHECK(wedge(A, Bf) == ba);
    CHECK(wedge(wedge(A, Bf), C) == wedge(A, wedge(Bf, C)));
  }
}

TEST_CASE("d squares to zero") {
  FormGen g(1);
  for (int i = 0; i < 60; ++i) {
    auto A = g.form(g.rs.uniform(0, 3));
    CHECK(exterior_d(exterior_d(A, g.ctx.chart()), g.ctx.chart()).is_zero());
  }
}

TEST_CASE("Leibniz rule") {
  FormGen g(2);
  const Chart& ch = g.ctx.chart();
  for (int i = 0; i < 40; ++i) {
    int p = g.rs.uniform(0, 2);
    auto A = g.form(p), Bf = g.form(g.rs.uniform(0, 2));
    ExteriorForm rhs = wedge(exterior_d(A, ch), Bf);
    ExteriorForm second = wedge(A, exterior_d(Bf, ch));
    rhs += (p % 2) ? -second : second;
    CHECK(exterior_d(wedge(A, Bf), ch) == rhs);
  }
}

TEST_CASE("function symbols differentiate along the base") {
  JetContext ctx(3, 1, 0, 2);
  ExteriorForm dB = exterior_d(ExteriorForm::scalar(P(B(0, 1))), ctx.chart());
  ExteriorForm expected(1);
  for (int l = 0; l < 3; ++l) expected += ExteriorForm::monomial(P(B(0, 1, {l})), {x(l)});
  CHECK(dB == expected);
  CHECK(exterior_d(ExteriorForm::scalar(P(Indeterminate::aux_t())), ctx.chart()).is_zero());
}

TEST_CASE("interior product is an antiderivation") {
  FormGen g(3);
  for (int i = 0; i < 40; ++i) {
    VectorField X;
    for (int k = 0; k < 3; ++k)
      X[g.labels[static_cast<std::size_t>(g.rs.uniform(0, static_cast<int>(g.labels.size()) - 1))]] =
          g.rs.polynomial(g.coeff_vars, 2, 1);
    int p = g.rs.uniform(1, 2);
    auto A = g.form(p), Bf = g.form(g.rs.uniform(1, 2));
    ExteriorForm rhs = wedge(contract(X, A), Bf);
    ExteriorForm second = wedge(A, contract(X, Bf));
    rhs += (p % 2) ? -second : second;
    CHECK(contract(X, wedge(A, Bf)) == rhs);
    CHECK(contract(X, contract(X, A)).is_zero());
  }
}

TEST_CASE("Cartan formula agrees with the term-by-term Lie derivative") {
  FormGen g(4);
  for (int i = 0; i < 40; ++i) {
    VectorField X;
    for (int k = 0; k < 3; ++k)
      X[g.labels[static_cast<std::size_t>(g.rs.uniform(0, static_cast<int>(g.labels.size()) - 1))]] =
          g.rs.polynomial(g.coeff_vars, 2, 2);
    auto A = g.form(g.rs.uniform(0, 2));
    CHECK(lie_derivative_form(X, A, g.ctx.chart()) == lie_oracle(X, A, g.ctx.chart()));
  }
}

TEST_CASE("pullback commutes with d for a fiber scaling") {
  // a -> s a with s a base polynomial; da -> s da + a ds
  JetContext ctx(2, 1, 0, 1);
  const Chart& ch = ctx.chart();
  RandomSource rs(9);
  Polynomial s = P(x(0)) * P(x(1)) + Polynomial(2);
  Bindings coeffs;
  std::map<Indeterminate, ExteriorForm> diffs;
  for (int mu = 0; mu < 2; ++mu) {
    coeffs[a(0, mu)] = s * P(a(0, mu));
    diffs.emplace(a(0, mu), s * ExteriorForm::differential(a(0, mu)) +
                                P(a(0, mu)) * exterior_d(ExteriorForm::scalar(s), ch));
  }
  std::vector<Indeterminate> vars{x(0), x(1), a(0, 0), a(0, 1)};
  for (int i = 0; i < 30; ++i) {
    auto A = rs.form(vars, vars, rs.uniform(0, 2), 3, 2);
    CHECK(pullback(exterior_d(A, ch), coeffs, diffs) == exterior_d(pullback(A, coeffs, diffs), ch));
  }
}

TEST_CASE("vector field bracket") {
  JetContext ctx(1, 1, 0, 1);
  VectorField u{{a(0, 0), P(a(0, 0)) * P(a(0, 0))}}, v{{a(0, 0), P(x(0))}};
  auto br = vf_bracket(u, v, ctx.chart());
  CHECK(vf_equal(br, VectorField{{a(0, 0), Polynomial(-2) * P(x(0)) * P(a(0, 0))}}));
  CHECK(vf_equal(vf_bracket(u, u, ctx.chart()), {}));
}

}
