#include "convert.hpp"
#include "oracles.hpp"

#include "jetinv/jets.hpp"
#include "jetinv/linalg.hpp"
#include "jetinv/sampling.hpp"
#include "jetinv/serialize.hpp"

#include <doctest.h>

#include <fstream>

using namespace jetinv;

namespace {

// Orbit dimension from the dense oracle: rank of {T * e_i}.
std::size_t oracle_orbit_dim(const Jet& j) {
  const auto t = testing::to_oracle(j.taylor());
  oracle::Mat rows;
  for (const auto& e : oracle::lie_basis(j.k())) {
    oracle::Row flat;
    for (const auto& r : oracle::mat_mul(t, e)) flat.insert(flat.end(), r.begin(), r.end());
    rows.push_back(flat);
  }
  return oracle::rank(rows);
}

std::size_t oracle_trdeg(unsigned k, unsigned n, std::uint64_t seed) {
  Sampler rng(seed);
  std::size_t best = 0;
  for (int s = 0; s < 10; ++s) best = std::max(best, oracle_orbit_dim(random_jet(rng, k, n, 9)));
  return static_cast<std::size_t>(k) * n - best;
}

}  // namespace

TEST_CASE("jet construction") {
  const Jet j = Jet::from_row_major(2, 2, {1, 2, 3, 4});
  CHECK(j.taylor() == ExactMatrix{{1, 2}, {3, 4}});
  const Jet d = Jet::from_derivatives(ExactMatrix{{1, 2, 6}});
  CHECK(d.taylor() == ExactMatrix{{1, 1, 1}});
  CHECK(d.derivative(3) == Vector{6});
  CHECK(is_regular(j));
  CHECK_FALSE(is_regular(Jet::from_row_major(2, 2, {0, 2, 0, 4})));
}

TEST_CASE("action is T * M and a right action") {
  Sampler rng(41);
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned n = 1; n <= 3; ++n)
      for (int t = 0; t < 5; ++t) {
        const Jet j = random_jet(rng, k, n, 6);
        const Reparam f = rng.reparam(k, 5);
        const Reparam g = rng.reparam(k, 5);
        CHECK(act(j, f).taylor() == j.taylor() * group_matrix(f));
        CHECK(act(act(j, f), g) == act(j, compose(f, g)));
        CHECK(is_regular(act(j, f)) == is_regular(j));
      }
}

TEST_CASE("reparametrizing a polynomial curve matches direct substitution") {
  // f(t) = t + 2t^2 + 3t^3, phi(t) = 2t + t^2; f(phi(t)) mod t^4.
  const Jet j = Jet::from_row_major(3, 1, {1, 2, 3});
  const auto fphi = oracle::compose({1, 2, 3}, {2, 1, 0});
  const Jet expected = Jet::from_row_major(3, 1, fphi);
  CHECK(act(j, Reparam({2, 1, 0})) == expected);
}

TEST_CASE("orbit dimension: oracle agreement, rank-nullity, constancy on orbits") {
  Sampler rng(42);
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned n = 1; n <= 4; ++n)
      for (int t = 0; t < 6; ++t) {
        Jet j = (t % 3 == 0) ? random_singular_jet(rng, k, n, 5) : random_jet(rng, k, n, 5);
        if (t == 5) j = Jet(k, n);
        const std::size_t od = orbit_dim(j);
        CHECK(od == oracle_orbit_dim(j));
        CHECK(od + stabilizer_algebra(j).dim() == k);
        CHECK(orbit_dim(act(j, rng.reparam(k, 4))) == od);
        CHECK(infinitesimal_action(j).rows() == k);
      }
  CHECK(orbit_dim(Jet(3, 2)) == 0);
}

TEST_CASE("stabilizer elements annihilate the jet") {
  Sampler rng(43);
  for (unsigned k = 2; k <= 4; ++k) {
    const Jet j = random_singular_jet(rng, k, 2, 5);
    for (const auto& s : stabilizer_algebra(j).basis()) CHECK((j.taylor() * s.matrix).is_zero());
  }
}

TEST_CASE("regular jets with n >= k have trivial stabilizer") {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned n = k; n <= 4; ++n) {
      const auto ev = generic_stabilizer_evidence(SamplingSpec{k, n, 50, 100 + k * 10 + n, 9});
      if (ev.failures > 0) {
        std::ofstream fixture("stabilizer_counterexamples_k" + std::to_string(k) + "_n" + std::to_string(n) +
                              ".json");
        Json dump = Json::array();
        for (const auto& j : ev.counterexamples) dump.push_back(to_json(j));
        fixture << dump.dump(2) << "\n";
      }
      CHECK(ev.failures == 0);
    }
}

TEST_CASE("jet certificate holds on regular jets") {
  Sampler rng(44);
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned n = k; n <= 4; ++n) {
      const auto c = elashvili_jet(random_regular_jet(rng, k, n, 9));
      CHECK(c.stabilizer_dim == 0);
      CHECK(c.orbit_dim == k);
      CHECK(c.elashvili_holds);
      CHECK(c.sum_dim == static_cast<std::size_t>(k) * n);
    }
}

TEST_CASE("transcendence degree") {
  // Frozen from the dense orbit-rank oracle.
  REQUIRE(oracle_trdeg(2, 2, 1) == 2);
  REQUIRE(oracle_trdeg(2, 1, 1) == 0);
  REQUIRE(oracle_trdeg(1, 1, 1) == 0);
  CHECK(trdeg(SamplingSpec{2, 2, 10, 1, 9}).trdeg == 2);
  CHECK(trdeg(SamplingSpec{2, 1, 10, 1, 9}).trdeg == 0);
  CHECK(trdeg(SamplingSpec{1, 1, 10, 1, 9}).trdeg == 0);
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned n = 1; n <= 3; ++n) {
      const auto r = trdeg(SamplingSpec{k, n, 10, 7, 9});
      CHECK(r.trdeg == oracle_trdeg(k, n, 7));
      CHECK(orbit_dim(r.witness) == r.max_orbit_dim);
    }
}

TEST_CASE("singular locus codimension") {
  for (unsigned k = 1; k <= 6; ++k)
    for (unsigned n = 1; n <= 5; ++n) {
      const auto s = singular_locus_codim(k, n);
      CHECK(s.codim == n);
      CHECK(s.codim_at_least_two == (n >= 2));
    }
}

TEST_CASE("strata census") {
  const auto c = strata_histogram(SamplingSpec{3, 2, 20, 5, 9});
  std::size_t generic_total = 0;
  for (const auto& [d, cnt] : c.generic) generic_total += cnt;
  CHECK(generic_total == 20);
  CHECK(c.generic.count(3) == 1);
  CHECK(c.combined.at(0) >= 1);
  for (const auto& [d, cnt] : c.singular) CHECK(d < 3);
}

TEST_CASE("sampling is reproducible") {
  Sampler a(9), b(9);
  for (int i = 0; i < 5; ++i) CHECK(random_jet(a, 3, 2, 9) == random_jet(b, 3, 2, 9));
  Sampler c(10);
  for (int i = 0; i < 10; ++i) CHECK(is_regular(random_regular_jet(c, 2, 2, 1)));
  for (int i = 0; i < 10; ++i) CHECK_FALSE(is_regular(random_singular_jet(c, 2, 2, 9)));
}
