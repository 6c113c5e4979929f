#include "doctest.h"
#include "test_support.hpp"

#include "jacobi_bc/io.hpp"

using namespace jbc;

TEST_CASE("numbers use 17 significant digits and survive a reparse") {
  CHECK(io::format_number(2.0) == "2");
  CHECK(io::format_number(0.1) == "0.10000000000000001");
  CHECK(io::format_number(NAN) == "null");
  jbc::testing::Gen g(71);
  ResponseVector r;
  for (int i = 0; i < 20; ++i) r.values.push_back(g.uniform(-1e6, 1e6) * g.uniform(1e-9, 1));
  CHECK(io::parse_response(io::format_response(r)).values == r.values);
}

TEST_CASE("coefficient files") {
  const auto c = io::parse_coefficients(R"({"a": [2, 1], "b": [3, 0]})");
  CHECK(c.a == std::vector<double>{2, 1});
  CHECK(c.b == std::vector<double>{3, 0});
  CHECK(io::format_coefficients(c) == "{\n  \"a\": [2, 1],\n  \"b\": [3, 0]\n}\n");
  CHECK(io::parse_coefficients(R"({"a": ["3/2"], "b": ["-1/4"]})").a[0] == 1.5);

  CHECK_THROWS_AS(io::parse_coefficients("{\"a\": [1]"), ParseError);
  CHECK_THROWS_AS(io::parse_coefficients(R"({"a": [1]})"), ParseError);
  CHECK_THROWS_AS(io::parse_coefficients(R"({"a": [1], "b": [0, 0]})"), ParseError);
  CHECK_THROWS_AS(io::parse_coefficients(R"({"a": [0], "b": [0]})"), ParseError);
  CHECK_THROWS_AS(io::parse_coefficients(R"({"a": 1, "b": [0]})"), ParseError);
  CHECK_THROWS_AS(io::parse_coefficients(R"({"a": [true], "b": [0]})"), ParseError);
  CHECK_THROWS_AS(io::parse_coefficients(R"({"a": ["x/y"], "b": [0]})"), ParseError);
  CHECK_THROWS_AS(io::parse_coefficients("[1, 2]"), ParseError);
}

TEST_CASE("exact coefficient output carries rational strings") {
  const Coefficients<Rational> c{{Rational(2), Rational(1, 3)}, {Rational(-3, 4), Rational(0)}};
  const std::string s = io::format_coefficients(c);
  CHECK(s.find(R"("a_exact": ["2", "1/3"])") != std::string::npos);
  CHECK(s.find(R"("b_exact": ["-3/4", "0"])") != std::string::npos);
  // The rounded fields make it a valid floating coefficient file as well.
  CHECK(io::parse_coefficients(s).a[1] == doctest::Approx(1.0 / 3));
}

TEST_CASE("exact response reader keeps rationals") {
  const auto r = io::parse_response_exact(R"({"r": [2, "1/3", 0.5]})");
  CHECK(r.values == std::vector<Rational>{2, Rational(1, 3), Rational(1, 2)});
  CHECK_THROWS_AS(io::parse_response_exact(R"({"r": []})"), ParseError);
  CHECK_THROWS_AS(io::parse_response(R"({"r": []})"), ParseError);
}

TEST_CASE("measure files") {
  const auto mu = io::parse_measure(R"({"atoms": [[-1, 0.25], [1, 0.75]]})");
  REQUIRE(mu.atoms.size() == 2);
  CHECK(mu.atoms[1].mass == 0.75);
  CHECK(io::parse_measure(io::format_measure(mu)).atoms[0].point == -1);
  CHECK_THROWS_AS(io::parse_measure(R"({"atoms": [[1, 0.5], [-1, 0.5]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_measure(R"({"atoms": [[1]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_measure(R"({"atoms": [[1, 0]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_measure(R"({"atoms": []})"), ParseError);
}

TEST_CASE("spectral data output doubles as a measure file") {
  const SpectralData sd{{-1, 1}, {2, 2}, 1};
  const auto mu = io::parse_measure(io::format_spectral_data(sd));
  REQUIRE(mu.atoms.size() == 2);
  CHECK(mu.atoms[0].mass == 0.5);
}

TEST_CASE("control files") {
  CHECK(io::parse_control(R"({"f": [1, 0, -2]})").values == std::vector<double>{1, 0, -2});
  CHECK_THROWS_AS(io::parse_control(R"({"f": []})"), ParseError);
}

TEST_CASE("CSV exports") {
  Wavefield<double> u(1, 1);
  u(0, 0) = 1;
  u(1, 1) = 2.5;
  CHECK(io::wavefield_csv(u) == "n,t,value\n0,0,1\n1,0,0\n0,1,0\n1,1,2.5\n");
  CHECK(io::matrix_csv(Matrix<double>{{1, 2}, {3, 4}}) == "1,2\n3,4\n");
  CHECK(io::diagnostics_csv({"k", "b"}, {{0, NAN}, {1, 3}}) == "k,b\n0,\n1,3\n");
}

TEST_CASE("matrix and report documents parse as JSON") {
  CHECK(io::format_matrix(Matrix<double>{{1, 2}, {3, 4}}) ==
        "{\n  \"matrix\": [\n    [1, 2],\n    [3, 4]\n  ]\n}\n");
  CharacterizationReport rep;
  rep.failure = Failure{Condition::det_not_one, 3, 0.5};
  rep.warnings = {"quote \" inside"};
  const std::string s = io::format_report(rep);
  CHECK(s.find(R"("condition": "det_not_one")") != std::string::npos);
  CHECK(s.find(R"("quote \" inside")") != std::string::npos);
}

TEST_CASE("file errors") {
  CHECK_THROWS_AS(io::read_text("/nonexistent/definitely/missing.json"), ParseError);
  CHECK_THROWS_AS(io::write_text("/nonexistent/dir/out.json", "x"), Error);
}
