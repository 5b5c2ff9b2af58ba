#include "convert.hpp"
#include "oracles.hpp"

#include "jetinv/linalg.hpp"
#include "jetinv/polynomial.hpp"
#include "jetinv/sampling.hpp"

#include <doctest.h>

using namespace jetinv;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational("-1/3") == make_rational(-1, 3));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(parse_rational_list("1,-2,3/4") == std::vector<Rational>{1, -2, make_rational(3, 4)});
}

TEST_CASE("parse_rational rejects malformed text") {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "1//2", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
  CHECK_THROWS_AS(parse_rational_list("1,,2"), std::invalid_argument);
  CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("matrix arithmetic") {
  const ExactMatrix a{{1, 2}, {3, 4}};
  const ExactMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == ExactMatrix{{2, 1}, {4, 3}});
  CHECK(a + b == ExactMatrix{{1, 3}, {4, 4}});
  CHECK(a - a == ExactMatrix::zero(2, 2));
  CHECK(a.transpose() == ExactMatrix{{1, 3}, {2, 4}});
  CHECK(a * ExactMatrix::identity(2) == a);
  CHECK(a * Vector{1, 1} == Vector{3, 7});
  CHECK(vstack(a, b).rows() == 4);
  CHECK(ExactMatrix{{1, 5}, {0, 2}}.is_upper_triangular());
  CHECK_FALSE(a.is_upper_triangular());
}

TEST_CASE("rank plus nullity equals column count on random matrices") {
  Sampler rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.integer(1, 7));
    const auto cols = static_cast<std::size_t>(rng.integer(1, 7));
    ExactMatrix m = rng.rational_matrix(rows, cols, 4);
    // Force rank deficiency half of the time.
    if (trial % 2 == 0 && rows > 1)
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 2;
    const auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == cols);
    CHECK(rank(m) == oracle::rank(testing::to_oracle(m)));
    for (const auto& v : ker) CHECK(m * v == Vector(rows, 0));
  }
}

TEST_CASE("RowEchelon tracks incremental rank") {
  RowEchelon e(3);
  CHECK(e.add_row(Vector{1, 2, 3}));
  CHECK_FALSE(e.add_row(Vector{2, 4, 6}));
  CHECK(e.add_row(Vector{0, 1, 1}));
  CHECK(e.rank() == 2);
  CHECK(e.pivot_columns() == std::vector<std::uint32_t>{0, 1});
  const auto ker = e.kernel();
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == Vector{-1, -1, 1});
}

TEST_CASE("solve, determinant and inverse") {
  Sampler rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 5));
    const ExactMatrix m = rng.rational_matrix(n, n, 5);
    CHECK(determinant(m) == oracle::determinant_laplace(testing::to_oracle(m)));
    if (determinant(m) != 0) {
      CHECK(m * inverse(m) == ExactMatrix::identity(n));
      Vector b(n);
      for (auto& x : b) x = rng.rational(5);
      const auto x = solve(m, b);
      REQUIRE(x.has_value());
      CHECK(m * *x == b);
    }
  }
  const ExactMatrix singular{{1, 2}, {2, 4}};
  CHECK(determinant(singular) == 0);
  CHECK_THROWS_AS(inverse(singular), std::domain_error);
  CHECK_FALSE(solve(singular, Vector{1, 0}).has_value());
  CHECK(row_space_basis(singular) == std::vector<Vector>{Vector{1, 2}});
}

TEST_CASE("polynomial arithmetic and evaluation") {
  const auto x = Polynomial::variable(2, 0);
  const auto y = Polynomial::variable(2, 1);
  const auto p = (x + y).pow(3);
  CHECK(p.coefficient({2, 1}) == 3);
  CHECK(p.evaluate({1, 2}) == 27);
  CHECK(p.derivative(0) == Rational(3) * (x + y).pow(2));
  CHECK((x * y - y * x).is_zero());
  CHECK(Polynomial::constant(2, 0).is_zero());
}

TEST_CASE("linear substitution composes as L2 * L1") {
  Sampler rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t nv = 3;
    Polynomial p(nv);
    for (int t = 0; t < 4; ++t) {
      Exponents e(nv);
      for (auto& x : e) x = static_cast<unsigned>(rng.integer(0, 2));
      p.add_term(e, rng.rational(4));
    }
    const ExactMatrix l1 = rng.rational_matrix(nv, nv, 3);
    const ExactMatrix l2 = rng.rational_matrix(nv, nv, 3);
    CHECK(substitute_linear(substitute_linear(p, l1), l2) == substitute_linear(p, l2 * l1));
  }
}

TEST_CASE("monomial enumeration matches brute-force counts") {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned n = 1; n <= 3; ++n)
      for (unsigned m = 1; m <= 7; ++m) {
        CAPTURE(k);
        CAPTURE(n);
        CAPTURE(m);
        const auto mons = monomials(k, n, m);
        CHECK(mons.size() == oracle::brute_monomial_count(k, n, m));
        CHECK(monomial_count(k, n, m) == mons.size());
        for (const auto& e : mons) CHECK(weighted_degree(e, n) == m);
        CHECK(std::is_sorted(mons.rbegin(), mons.rend()));
      }
}

TEST_CASE("k = 1 monomial counts are binomial") {
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned m = 1; m <= 8; ++m) CHECK(monomial_count(1, n, m) == binomial(m + n - 1, n - 1));
}

TEST_CASE("weighted homogeneous components") {
  const auto a = WeightedPoly::xi(2, 1, 1, 1);
  const auto b = WeightedPoly::xi(2, 1, 2, 1);
  WeightedPoly p(2, 1, a.poly * a.poly + b.poly + a.poly);
  const auto parts = p.homogeneous_components();
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(1).poly == a.poly);
  CHECK(parts.at(2).poly == a.poly * a.poly + b.poly);
  CHECK_FALSE(p.is_homogeneous(2));
  CHECK(parts.at(2).is_homogeneous(2));
  CHECK(xi_index(3, 2, 1) == 3);
}
