// One line per acceptance criterion; exit status 1 if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "common/error.hpp"
#include "cs/chern_simons.hpp"
#include "cs/reference3d.hpp"
#include "gauge/gauge.hpp"
#include "variational/random_instances.hpp"
#include "variational/variational.hpp"
#include "../unit/test_support.hpp"

using namespace jetvar;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

InvariantTensor unit_tensor(int m, int k) {
  InvariantTensor b(m, k);
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  for (int r = 0; r < m; ++r) {
    std::fill(idx.begin(), idx.end(), r);
    b.set(idx, Rational(1));
  }
  return b;
}

struct Case {
  std::string name;
  std::function<CSData(Background)> make;
};

std::vector<Case> four_cases() {
  return {
      {"u1 k=2", [](Background bg) { return CSData(builtin_algebra("u1"), unit_tensor(1, 2), Rational(1), bg); }},
      {"su2 k=2",
       [](Background bg) {
         auto g = builtin_algebra("su2");
         return CSData(g, tensor_from_matrix(killing_form(g)), Rational(1), bg);
       }},
      {"u1 k=3", [](Background bg) { return CSData(builtin_algebra("u1"), unit_tensor(1, 3), Rational(1), bg); }},
      {"u1+su2 k=3",
       [](Background bg) {
         auto g = builtin_algebra("u1+su2");
         return CSData(g, u1_su2_cubic(g), Rational(1), bg);
       }},
  };
}

Outcome criterion1() {
  Outcome o;
  for (const auto& c : four_cases()) {
    auto t0 = std::chrono::steady_clock::now();
    CSData cs = c.make(Background::Symbolic);
    ExteriorForm residual =
        exterior_d(cs_form(cs), cs.ctx().chart()) - (characteristic_form(cs) - characteristic_at_B(cs));
    double s = seconds_since(t0);
    require(o, residual.is_zero(), c.name + " residual " + std::to_string(residual.term_count()) + " terms");
    require(o, s < 60, c.name + " took " + std::to_string(s) + "s");
    o.detail += (o.detail.empty() ? "" : ", ") + c.name + " 0 terms";
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  RandomSource rs(20240101);
  const int instances = 120;
  int bad = 0;
  for (int i = 0; i < instances; ++i) {
    JetContext ctx(1 + i % 3, 1, 1, 3);
    Lagrangian L = random_lagrangian(ctx, rs);
    VectorField u = random_vertical_field(ctx, rs);
    if (!first_variational_residual(L, u, noether_current(L, u, ctx), ctx).is_zero()) ++bad;
  }
  double s = seconds_since(t0);
  require(o, bad == 0, std::to_string(bad) + " nonzero residuals");
  require(o, s < 120, "suite took " + std::to_string(s) + "s");
  if (o.ok) o.detail = std::to_string(instances) + " instances, n in {1,2,3}";
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto g = builtin_algebra("su2");
  CSData cs(g, tensor_from_matrix(killing_form(g)), Rational(1), Background::Symbolic);
  const auto& ctx = cs.ctx();
  Reference3D ref = reference_3d(cs);
  Lagrangian L(cs_lagrangian(cs), ctx);
  auto gen = gauge_generator(g, ctx);
  auto sg = sigma_boundary_term(cs, gen);
  require(o, L.density() == ref.lagrangian, "Lagrangian differs");
  require(o, sg.lie_derivative.top_coefficient(3) == ref.lie_derivative, "Lie derivative differs");
  require(o, noether_current(L, gen.field, ctx).components == ref.noether_current, "Noether current differs");
  auto cons = conservation_check(L, gen.field, sg.sigma, ctx);
  require(o, cons.modified.components == ref.modified_current, "modified current differs");
  auto hb = fiber_homotopy_with_remainder(sg.omega, cs, HomotopyCenter::Background);
  if (o.ok)
    o.detail = "4 exact matches; homotopy at a=B leaves a closed remainder of " +
               std::to_string(hb.remainder.term_count()) + " terms";
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const auto& c : four_cases()) {
    auto t0 = std::chrono::steady_clock::now();
    CSData cs = c.make(Background::Symbolic);
    auto gen = gauge_generator(cs.algebra(), cs.ctx());
    auto sg = sigma_boundary_term(cs, gen);
    Lagrangian L(cs_lagrangian(cs), cs.ctx());
    auto res = conservation_check(L, gen.field, sg.sigma, cs.ctx());
    double s = seconds_since(t0);
    require(o, res.report.passed(), c.name + " residual nonzero");
    require(o, s < 600, c.name + " took " + std::to_string(s) + "s");
  }
  if (o.ok) o.detail = "4 cases";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::vector<Case> cases{four_cases()[1], four_cases()[2]};
  for (const auto& c : cases) {
    CSData withB = c.make(Background::Symbolic), without = c.make(Background::Zero);
    auto e1 = euler_lagrange(Lagrangian(cs_lagrangian(withB), withB.ctx()), withB.ctx());
    auto e0 = euler_lagrange(Lagrangian(cs_lagrangian(without), without.ctx()), without.ctx());
    require(o, e1.fields == e0.fields && e1.components == e0.components, c.name + " differs");
  }
  if (o.ok) o.detail = "su2 k=2, u1 k=3";
  return o;
}

template <class F>
bool throws_code(F&& f, ErrorCode code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

Outcome criterion6() {
  Outcome o;
  RandomSource rs(6);
  JetContext ctx(3, 1, 1, 3);
  auto coeffs = jet_variables(ctx, 2);
  auto labels = jet_variables(ctx, 1);
  int trials = 0;
  for (int i = 0; i < 50; ++i, ++trials) {
    ExteriorForm f = rs.form(coeffs, labels, rs.uniform(0, 2), 3, 2);
    require(o, exterior_d(exterior_d(f, ctx.chart()), ctx.chart()).is_zero(), "d d != 0");
    require(o,
            horizontal_differential(horizontal_projection(f, ctx), ctx) ==
                horizontal_projection(exterior_d(f, ctx.chart()), ctx),
            "d_H h0 != h0 d");
  }
  // variational triviality
  JetContext c3(3, 1, 0, 2);
  std::vector<Indeterminate> cv{Indeterminate::base(0), Indeterminate::base(1), Indeterminate::conn(0, 0),
                                Indeterminate::conn(0, 2)};
  auto lv = jet_variables(c3, 0);
  for (int i = 0; i < 10; ++i) {
    ExteriorForm L = horizontal_projection(exterior_d(rs.form(cv, lv, 2, 3, 2), c3.chart()), c3);
    if (!L.is_zero()) require(o, euler_lagrange(Lagrangian(L, c3), c3).is_zero(), "delta h0(d eta) != 0");
  }
  // Jacobi and invariant tensor validation
  for (const char* name : {"u1", "su2", "so3", "u1+su2", "su2+su2"}) builtin_algebra(name);
  require(o,
          throws_code([] { load_lie_algebra(3, {{1, 0, 1, 1}, {1, 1, 0, -1}, {0, 1, 2, 1}, {0, 2, 1, -1}}); },
                      ErrorCode::JacobiViolation),
          "broken Jacobi accepted");
  for (int i = 0; i < 6; ++i) {
    // from_dense re-validates Jacobi; the Killing form is invariant in any basis
    auto g = jt::random_basis_change(builtin_algebra(i % 2 ? "su2" : "u1+su2"), rs);
    require(o, check_invariant_tensor(g, tensor_from_matrix(killing_form(g))).passed(), "Killing form rejected");
  }
  auto su2 = builtin_algebra("su2");
  require(o, check_invariant_tensor(su2, tensor_from_matrix(killing_form(su2))).passed(), "Killing form rejected");
  InvariantTensor diag(3, 2);
  diag.set({0, 0}, Rational(1));
  diag.set({1, 1}, Rational(1));
  diag.set({2, 2}, Rational(2));
  require(o, !check_invariant_tensor(su2, diag).passed(), "non-invariant tensor accepted");
  // negative controls
  {
    JetContext c(2, 1, 1, 3);
    Lagrangian L = random_lagrangian(c, rs);
    VectorField u = random_vertical_field(c, rs);
    Current J = noether_current(L, u, c);
    J.components[1] += Polynomial::var(Indeterminate::base(1));
    require(o, !first_variational_residual(L, u, J, c).is_zero(), "corrupted current not detected");
  }
  CSData cs(su2, tensor_from_matrix(killing_form(su2)), Rational(1), Background::Symbolic);
  require(o,
          throws_code(
              [&] {
                fiber_homotopy(ExteriorForm::monomial(Polynomial::var(Indeterminate::conn(0, 0)),
                                                      {Indeterminate::base(0), Indeterminate::base(1),
                                                       Indeterminate::base(2)}),
                               cs);
              },
              ErrorCode::NotClosed),
          "non-closed homotopy input accepted");
  ExteriorForm mutated = cs_form(cs) + ExteriorForm::monomial(Polynomial::var(Indeterminate::conn(1, 1)),
                                                              {Indeterminate::conn(2, 0), Indeterminate::base(1),
                                                               Indeterminate::base(2)});
  require(o, !(exterior_d(mutated, cs.ctx().chart()) == characteristic_form(cs) - characteristic_at_B(cs)),
          "mutated CS form not detected");
  auto gen = gauge_generator(su2, cs.ctx());
  auto sg = sigma_boundary_term(cs, gen);
  ExteriorForm bad_sigma = sg.sigma + ExteriorForm::monomial(Polynomial::var(Indeterminate::base(0)),
                                                             {Indeterminate::base(1), Indeterminate::base(2)});
  require(o, !conservation_check(Lagrangian(cs_lagrangian(cs), cs.ctx()), gen.field, bad_sigma, cs.ctx()).report.passed(),
          "mutated sigma not detected");
  if (o.ok) o.detail = std::to_string(trials) + " random forms, 6 negative controls detected";
  return o;
}

}  // namespace

int main() {
  struct Item {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Item items[] = {{1, "transgression", criterion1},          {2, "first-variational", criterion2},
                        {3, "three-dimensional-reference", criterion3}, {4, "conservation", criterion4},
                        {5, "background-independence", criterion5},    {6, "structural", criterion6}};
  bool all = true;
  for (const auto& it : items) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = e.what();
    }
    all = all && o.ok;
    std::printf("criterion %d %s %s (%.2fs) %s\n", it.id, it.name, o.ok ? "PASS" : "FAIL", seconds_since(t0),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
