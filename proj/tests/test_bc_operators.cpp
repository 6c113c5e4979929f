#include "doctest.h"
#include "test_support.hpp"

#include "jacobi_bc/bc_operators.hpp"
#include "jacobi_bc/linalg.hpp"

using namespace jbc;
using jbc::testing::Gen;

namespace {

double inner(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

const JacobiCoefficients kSmall{{2, 1}, {3, 0}};

}  // namespace

TEST_CASE("response vector examples") {
  SUBCASE("free") {
    const auto r = response_vector(JacobiCoefficients{{1, 1, 1}, {0, 0, 0}}, 5);
    CHECK(r.values == std::vector<double>{1, 0, 0, 0, 0});
  }
  SUBCASE("a = (2,1), b = (3,0)") {
    CHECK(response_vector(kSmall, 3).values == std::vector<double>{2, 6, 18});
  }
  SUBCASE("r_1 = b_1 in the Schrödinger case") {
    for (double beta : {-1.5, 0.0, 0.25, 2.0})
      CHECK(response_vector(JacobiCoefficients{{1, 1}, {beta, 0}}, 2)[1] == beta);
  }
}

TEST_CASE("response vector matches the brute-force oracle exactly") {
  Gen g(21);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t len = g.index(1, 21);
    const auto c = g.coefficients((len + 1) / 2);
    const auto want = jbc::testing::oracle_response(c.a, c.b, len);
    CHECK(response_vector(c, len).values == want);
  }
}

TEST_CASE("response vector finite speed: coefficients past the window are invisible") {
  Gen g(22);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t horizon = g.index(1, 10);
    auto c = g.coefficients(horizon + 4);
    const auto r = response_vector(c, 2 * horizon);
    for (std::size_t k = horizon; k < c.window(); ++k) c.a[k] = g.uniform(0.1, 5);
    for (std::size_t n = horizon + 1; n <= c.window(); ++n) c.b[n - 1] = g.uniform(-5, 5);
    CHECK(response_vector(c, 2 * horizon).values == r.values);
  }
}

TEST_CASE("response vector errors") {
  CHECK_THROWS_AS(response_vector(kSmall, 5), WindowTooSmall);
  CHECK_THROWS_AS(response_vector(kSmall, 0), Error);
  CHECK_THROWS_AS(response_vector(JacobiCoefficients{{1, -1}, {0, 0}}, 2),
                  InvalidCoefficients);
}

TEST_CASE("apply_response and its adjoint") {
  Gen g(23);
  SUBCASE("delta control reads off r") {
    const ResponseVector r{{2, 6, 18, -1}};
    const auto out = apply_response(r, Control<double>{{1, 0, 0, 0}});
    CHECK(out == r.values);
  }
  SUBCASE("free response shifts the control") {
    const ResponseVector r{{1, 0, 0, 0}};
    const auto out = apply_response(r, Control<double>{{5, 6, 7, 8}});
    CHECK(out == std::vector<double>{5, 6, 7, 8});
    const auto adj = adjoint_response(r, std::vector<double>{5, 6, 7, 8});
    CHECK(adj == std::vector<double>{5, 6, 7, 8});
  }
  SUBCASE("random data matches the direct sum") {
    ResponseVector r;
    for (int i = 0; i < 6; ++i) r.values.push_back(g.uniform(-2, 2));
    const auto f = g.control(6);
    const auto out = apply_response(r, f);
    for (std::size_t t = 1; t <= 6; ++t) {
      double want = 0;
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
          if (i + j + 1 == t) want += r[i] * f.values[j];
      CHECK(out[t - 1] == doctest::Approx(want).epsilon(1e-15));
    }
  }
  SUBCASE("zero argument") {
    const ResponseVector r{{1, 2, 3}};
    CHECK(adjoint_response(r, std::vector<double>{0, 0, 0}) == std::vector<double>{0, 0, 0});
  }
  SUBCASE("inner-product identity (property)") {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t horizon = g.index(1, 10);
      ResponseVector r;
      for (std::size_t i = 0; i < horizon; ++i) r.values.push_back(g.uniform(-2, 2));
      const auto f = g.control(horizon), h = g.control(horizon);
      const double lhs = inner(apply_response(r, f), h.values);
      const double rhs = inner(f.values, adjoint_response(r, h.values));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (1 + std::abs(lhs)));
    }
  }
  SUBCASE("inner-product identity is exact over the rationals") {
    Response<Rational> r{{Rational(1, 3), Rational(-2, 7), Rational(5)}};
    Control<Rational> f{{Rational(1, 2), Rational(3), Rational(-1, 5)}};
    std::vector<Rational> h{Rational(2), Rational(-1, 9), Rational(4, 3)};
    const auto rf = apply_response(r, f);
    const auto adj = adjoint_response(r, h);
    Rational lhs(0), rhs(0);
    for (int i = 0; i < 3; ++i) {
      lhs += rf[i] * h[i];
      rhs += f.values[i] * adj[i];
    }
    CHECK(lhs == rhs);
  }
  SUBCASE("too-short response") {
    CHECK_THROWS_AS(apply_response(ResponseVector{{1}}, Control<double>{{1, 2}}),
                    WindowTooSmall);
  }
}

TEST_CASE("control matrix examples") {
  SUBCASE("free case is the reversal") {
    const auto w = control_matrix(JacobiCoefficients{{1, 1, 1}, {0, 0, 0}}, 3);
    CHECK(w.dense == Matrix<double>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  }
  SUBCASE("a = (2,1), b = (3,0), T = 2") {
    const auto w = control_matrix(kSmall, 2);
    CHECK(w.dense == Matrix<double>{{6, 2}, {2, 0}});
    CHECK(w.triangular() == Matrix<double>{{2, 6}, {0, 2}});
    CHECK(w.diagonal == std::vector<double>{2, 2});
  }
  SUBCASE("columns are the state at time T under basis controls") {
    Gen g(24);
    const std::size_t horizon = 7;
    const auto c = g.coefficients(horizon);
    const auto w = control_matrix(c, horizon);
    for (std::size_t j = 0; j < horizon; ++j) {
      Control<double> e{std::vector<double>(horizon, 0.0)};
      e.values[j] = 1.0;
      const auto u = step_forward(c, e, horizon);
      for (std::size_t n = 1; n <= horizon; ++n)
        CHECK(w.dense(n - 1, j) == doctest::Approx(u(n, horizon)).epsilon(1e-12));
    }
  }
  SUBCASE("Schrödinger determinant is +-1") {
    Gen g(25);
    const auto w = control_matrix(g.schrodinger(6), 6);
    CHECK(std::abs(std::abs(determinant(w.dense)) - 1.0) < 1e-12);
  }
  SUBCASE("window too small") {
    CHECK_THROWS_AS(control_matrix(kSmall, 3), WindowTooSmall);
  }
}

TEST_CASE("connecting matrix examples") {
  const Matrix<double> small{{40, 12}, {12, 4}};
  CHECK(connecting_from_gram(control_matrix(kSmall, 2)).values == small);
  CHECK(connecting_from_response(ResponseVector{{2, 6, 18}}, 2).values == small);
  CHECK(connecting_from_response(ResponseVector{{1, 0, 0, 0, 0}}, 3).values ==
        Matrix<double>::identity(3));
  CHECK(connecting_from_gram(control_matrix(JacobiCoefficients{{1, 1, 1}, {0, 0, 0}}, 3))
            .values == Matrix<double>::identity(3));
  CHECK(connecting_from_response(ResponseVector{{3}}, 1).values == Matrix<double>{{9}});
  CHECK_THROWS_AS(connecting_from_response(ResponseVector{{1, 0}}, 2), WindowTooSmall);
}

TEST_CASE("rotation") {
  const Connecting<double> c{Matrix<double>{{40, 12}, {12, 4}}, Orientation::plain};
  const auto cbar = rotate_connecting(c);
  CHECK(cbar.values == Matrix<double>{{4, 12}, {12, 40}});
  CHECK(cbar.orientation == Orientation::rotated);
  CHECK(rotate_connecting(cbar).values == c.values);
  CHECK(rotate_connecting(Connecting<double>{Matrix<double>::identity(4)}).values ==
        Matrix<double>::identity(4));
}

TEST_CASE("rotated leading blocks are the smaller-horizon matrices") {
  Gen g(26);
  const auto c = g.coefficients(8);
  const auto r = response_vector(c, 15);
  const auto big = rotated_from_response(r, 8).values;
  for (std::size_t k = 1; k <= 8; ++k)
    CHECK(big.leading(k) == rotated_from_response(r, k).values);
}

TEST_CASE("Gram and response constructions agree (property)") {
  Gen g(27);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t horizon = g.index(1, 10);
    const auto c = g.coefficients(horizon);
    const auto gram = connecting_from_gram(control_matrix(c, horizon)).values;
    const auto resp =
        connecting_from_response(response_vector(c, 2 * horizon - 1), horizon).values;
    CHECK(max_abs_diff(gram, resp) <= 1e-10 * (1 + max_abs(gram)));
    CHECK(ldlt(gram).positive_definite);
  }
}

TEST_CASE("Gram and response constructions agree exactly over the rationals") {
  Gen g(28);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t horizon = g.index(1, 6);
    const auto c = to_exact(g.dyadic_coefficients(horizon));
    CHECK(connecting_from_gram(control_matrix(c, horizon)).values ==
          connecting_from_response(response_vector(c, 2 * horizon - 1), horizon).values);
  }
}

TEST_CASE("Schrödinger connecting matrices have unit determinant") {
  Gen g(29);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = g.schrodinger(8);
    for (std::size_t l = 1; l <= 8; ++l) {
      const auto m = connecting_from_gram(control_matrix(c, l)).values;
      CHECK(std::abs(determinant(m) - 1.0) <= 1e-8 * l * max_abs(m));
    }
  }
}

TEST_CASE("Blagoveshchenskii form") {
  Gen g(30);
  SUBCASE("zero controls") {
    const ResponseVector r{{2, 6, 18}};
    CHECK(blagoveshchenskii_form(r, Control<double>{{0, 0}}, Control<double>{{0, 0}}, 2) == 0);
  }
  SUBCASE("free case, delta controls") {
    const ResponseVector r{{1, 0, 0}};
    CHECK(blagoveshchenskii_form(r, ControlVector::delta(2), ControlVector::delta(2), 2) ==
          doctest::Approx(1.0));
  }
  SUBCASE("equals the Gram bilinear form and is symmetric (property)") {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t horizon = g.index(1, 9);
      const auto c = g.coefficients(horizon);
      const auto r = response_vector(c, 2 * horizon - 1);
      const auto f = g.control(horizon), h = g.control(horizon);
      const auto gram = connecting_from_gram(control_matrix(c, horizon)).values;
      const double want = inner(gram.apply(f.values), h.values);
      const double fg = blagoveshchenskii_form(r, f, h, horizon);
      const double gf = blagoveshchenskii_form(r, h, f, horizon);
      const double scale = 1 + max_abs(gram);
      CHECK(std::abs(fg - want) <= 1e-10 * scale);
      CHECK(std::abs(fg - gf) <= 1e-12 * scale);
    }
  }
}
