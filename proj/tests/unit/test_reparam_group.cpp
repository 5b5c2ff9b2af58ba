#include "convert.hpp"
#include "oracles.hpp"

#include "jetinv/linalg.hpp"
#include "jetinv/reparam.hpp"
#include "jetinv/sampling.hpp"

#include <doctest.h>

using namespace jetinv;

TEST_CASE("constructor rejects a_1 = 0 and empty coefficient lists") {
  CHECK_THROWS_AS(Reparam({0, 1}), std::domain_error);
  CHECK_THROWS_AS(Reparam(std::vector<Rational>{}), std::domain_error);
  CHECK(Reparam::identity(3).coeffs() == std::vector<Rational>{1, 0, 0});
  CHECK(Reparam::scaling(2, 5).coeffs() == std::vector<Rational>{5, 0});
}

TEST_CASE("compositions are counted by binomials") {
  for (unsigned total = 1; total <= 8; ++total)
    for (unsigned parts = 1; parts <= total; ++parts)
      CHECK(compositions(total, parts).size() == binomial(total - 1, parts - 1));
  CHECK(compositions(2, 3).empty());
}

TEST_CASE("group matrix agrees with the power-series oracle") {
  Sampler rng(1);
  for (unsigned k = 1; k <= 6; ++k)
    for (int t = 0; t < 20; ++t) {
      const Reparam phi = rng.reparam(k, 6);
      CHECK(group_matrix(phi) == testing::to_exact(oracle::group_matrix(phi.coeffs())));
    }
  // t -> 2t + t^2: rows are phi, phi^2, phi^3 truncated at t^3.
  CHECK(group_matrix(Reparam({2, 1, 0})) == ExactMatrix{{2, 1, 0}, {0, 4, 4}, {0, 0, 8}});
}

TEST_CASE("compose agrees with series substitution") {
  Sampler rng(2);
  for (unsigned k = 1; k <= 6; ++k)
    for (int t = 0; t < 20; ++t) {
      const Reparam f = rng.reparam(k, 6);
      const Reparam g = rng.reparam(k, 6);
      CHECK(compose(f, g).coeffs() == oracle::compose(f.coeffs(), g.coeffs()));
    }
}

TEST_CASE("group matrix is a homomorphism") {
  Sampler rng(20240);
  for (unsigned k = 2; k <= 6; ++k)
    for (int t = 0; t < 200; ++t) {
      const Reparam f = rng.reparam(k, 9);
      const Reparam g = rng.reparam(k, 9);
      CHECK(group_matrix(compose(f, g)) == group_matrix(f) * group_matrix(g));
    }
}

TEST_CASE("compose is associative and invert is two-sided") {
  Sampler rng(7);
  for (unsigned k = 1; k <= 6; ++k)
    for (int t = 0; t < 20; ++t) {
      const Reparam f = rng.reparam(k, 5);
      const Reparam g = rng.reparam(k, 5);
      const Reparam h = rng.reparam(k, 5);
      CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
      CHECK(compose(f, invert(f)) == Reparam::identity(k));
      CHECK(compose(invert(f), f) == Reparam::identity(k));
      CHECK(group_matrix(invert(f)) == inverse(group_matrix(f)));
    }
}

TEST_CASE("diagonal is (a_1, a_1^2, ..., a_1^k)") {
  Sampler rng(8);
  for (unsigned k = 1; k <= 6; ++k) {
    const Reparam f = rng.reparam(k, 7);
    const ExactMatrix m = group_matrix(f);
    CHECK(m.is_upper_triangular());
    Rational p = 1;
    for (unsigned i = 0; i < k; ++i) {
      p *= f.a(1);
      CHECK(m(i, i) == p);
    }
  }
}

TEST_CASE("unipotent elements form a subgroup of SL_k") {
  Sampler rng(9);
  for (unsigned k = 1; k <= 6; ++k)
    for (int t = 0; t < 20; ++t) {
      const Reparam u = rng.unipotent(k, 5);
      const Reparam v = rng.unipotent(k, 5);
      CHECK(is_unipotent(u));
      CHECK(determinant(group_matrix(u)) == 1);
      for (unsigned i = 0; i < k; ++i) CHECK(group_matrix(u)(i, i) == 1);
      CHECK(is_unipotent(compose(u, v)));
      CHECK(is_unipotent(invert(u)));
    }
  CHECK_FALSE(is_unipotent(Reparam::scaling(3, 2)));
}
