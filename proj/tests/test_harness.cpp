#include <doctest.h>

#include <cmath>

#include "chahn/harness.hpp"
#include "chahn/polynomial.hpp"
#include "support.hpp"

using namespace chahn;
using namespace chahn::harness;
using namespace testing;

TEST_CASE("orthogonality defects") {
  const Params p = half();
  CHECK(orthogonality_defect(0, 0, p) <= 1e-8);
  CHECK(orthogonality_defect(0, 1, p) <= 1e-10);
  CHECK(orthogonality_defect(3, 5, p) <= 1e-8);
  const Params q = make_params(Complex(0.8, 0.5), 1.4, Complex(0.8, -0.5), 1.4);
  const auto g = gram_matrix(8, q);
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) CHECK(normalized_defect(g, m, n, q) <= 1e-8);
  CHECK_THROWS_CODE(orthogonality_defect(0, 21, p), ErrorCode::DomainError);
}

TEST_CASE("quadrature self-consistency under step halving") {
  const Params p = half();
  QuadratureConfig coarse;
  QuadratureConfig fine;
  fine.initial_step = 0.125;
  fine.target = 1e-13;
  const auto a = gram_matrix(10, p, coarse), b = gram_matrix(10, p, fine);
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n <= 10; ++n) CHECK(std::abs(normalized_defect(a, m, n, p) - normalized_defect(b, m, n, p)) < 1e-9);
}

TEST_CASE("quadrature failures are reported") {
  QuadratureConfig tight;
  tight.max_halvings = 1;
  tight.initial_step = 2.0;
  tight.target = 1e-16;
  // a narrow analytic strip makes the coarse rule converge slowly
  const Params narrow = make_params(0.05, 0.05, 0.05, 0.05);
  CHECK_THROWS_CODE(gram_matrix(4, narrow, tight), ErrorCode::QuadratureNotConverged);
}

TEST_CASE("convergence tables") {
  const Params p = half();
  const auto outer = convergence_table(Regime::Outer, 1.0, {20, 40, 80, 160}, p);
  REQUIRE(outer.size() == 4);
  CHECK_FALSE(outer[0].empirical_order.has_value());
  for (std::size_t i = 1; i < outer.size(); ++i) {
    REQUIRE(outer[i].empirical_order.has_value());
    CHECK(*outer[i].empirical_order >= 0.6);
    CHECK(*outer[i].empirical_order <= 1.4);
    CHECK(outer[i].rel_error == doctest::Approx(relative_difference(outer[i].exact, outer[i].approx)));
  }
  const auto pl = convergence_table(Regime::Plancherel, 0.0, {50, 100, 200}, p);
  CHECK(pl[1].rel_error < pl[0].rel_error);
  CHECK(pl[2].rel_error < pl[1].rel_error);
  const auto osc = convergence_table(Regime::Osc, 0.3, {50, 100, 200, 400}, p);
  for (std::size_t i = 1; i < osc.size(); ++i) CHECK(*osc[i].empirical_order == doctest::Approx(1.0).epsilon(0.2));
  // non-doubling neighbours carry no order
  const auto gaps = convergence_table(Regime::Outer, 1.0, {20, 30, 60}, p);
  CHECK_FALSE(gaps[1].empirical_order.has_value());
  CHECK(gaps[2].empirical_order.has_value());
  CHECK_THROWS_CODE(convergence_table(Regime::Outer, 1.0, {40, 20}, p), ErrorCode::DomainError);
}

TEST_CASE("tables are deterministic") {
  const Params p = make_params(Complex(0.7, 0.3), 1.2, Complex(0.7, -0.3), 1.2);
  const auto a = convergence_table(Regime::Osc, 0.25, {50, 100}, p);
  const auto b = convergence_table(Regime::Osc, 0.25, {50, 100}, p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].exact == b[i].exact);
    CHECK(a[i].approx == b[i].approx);
    CHECK(a[i].rel_error == b[i].rel_error);
  }
}

TEST_CASE("consistency report") {
  const auto rows = consistency_report(80, {0.7, 1.0, 1.5}, half());
  for (const auto& r : rows) {
    CHECK(r.kind == RowKind::Consistency);
    CHECK(r.rel_error <= 0.1);
  }
  // within twice the error of the uniform formula against exact values
  for (double t : {0.7, 1.0, 1.5}) {
    const auto u = convergence_table(Regime::Uniform, t, {80}, half());
    const auto c = consistency_report(80, {t}, half());
    const auto o = convergence_table(Regime::Outer, u[0].point * (80.5 / 80.0), {80}, half());
    CHECK(c[0].rel_error <= 2.0 * std::max(u[0].rel_error, o[0].rel_error));
  }
}

TEST_CASE("zero accuracy report") {
  const Params p = half();
  const auto rows = zero_accuracy_report({40, 80, 160}, 1, p);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(*r.scaled_deviation <= 5.0);
  const auto r20 = zero_accuracy_report({20}, 1, p);
  CHECK(std::abs(r20[0].exact.real() - r20[0].approx.real()) <= 0.13);
  const auto left = zero_accuracy_report({40, 80}, 2, p, Side::Minus);
  const auto right = zero_accuracy_report({40, 80}, 2, p, Side::Plus);
  for (std::size_t i = 0; i < left.size(); ++i) {
    CHECK(left[i].exact.real() == doctest::Approx(-right[i].exact.real()).epsilon(1e-12));
    CHECK(left[i].approx.real() == -right[i].approx.real());
    CHECK(*left[i].scaled_deviation == doctest::Approx(*right[i].scaled_deviation).epsilon(1e-9));
  }
}
