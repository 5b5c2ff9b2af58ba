#include "jetinv/jets.hpp"

#include "jetinv/linalg.hpp"

#include <stdexcept>

namespace jetinv {

Jet::Jet(unsigned k, unsigned n) : taylor_(n, k) {}

Jet::Jet(ExactMatrix taylor) : taylor_(std::move(taylor)) {
  if (taylor_.cols() == 0 || taylor_.rows() == 0) throw std::invalid_argument("jet needs k >= 1 and n >= 1");
}

Jet Jet::from_row_major(unsigned k, unsigned n, const std::vector<Rational>& entries) {
  if (entries.size() != static_cast<std::size_t>(k) * n) {
    throw std::invalid_argument("jet needs n*k entries");
  }
  ExactMatrix t(n, k);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < k; ++j) t(i, j) = entries[static_cast<std::size_t>(i) * k + j];
  return Jet(std::move(t));
}

Jet Jet::from_derivatives(const ExactMatrix& derivatives) {
  ExactMatrix t = derivatives;
  for (std::size_t j = 0; j < t.cols(); ++j) {
    const Rational f = factorial(static_cast<unsigned>(j + 1));
    for (std::size_t i = 0; i < t.rows(); ++i) t(i, j) /= f;
  }
  return Jet(std::move(t));
}

Vector Jet::derivative(unsigned j) const {
  Vector v = taylor_.column(j - 1);
  const Rational f = factorial(j);
  for (auto& x : v) x *= f;
  return v;
}

Jet act(const Jet& jet, const Reparam& phi) {
  if (phi.k() != jet.k()) throw std::invalid_argument("act: jet order mismatch");
  return Jet(jet.taylor() * group_matrix(phi));
}

Jet left_multiply(const ExactMatrix& g, const Jet& jet) { return Jet(g * jet.taylor()); }

bool is_regular(const Jet& jet) {
  for (unsigned i = 0; i < jet.n(); ++i)
    if (jet.taylor()(i, 0) != 0) return true;
  return false;
}

ExactMatrix infinitesimal_action(const Jet& jet) {
  const unsigned k = jet.k();
  const unsigned n = jet.n();
  ExactMatrix a(k, static_cast<std::size_t>(n) * k);
  const auto basis = lie_basis(k);
  for (unsigned i = 0; i < k; ++i) {
    const ExactMatrix moved = jet.taylor() * basis[i].matrix;
    const auto& flat = moved.data();
    for (std::size_t p = 0; p < flat.size(); ++p) a(i, p) = flat[p];
  }
  return a;
}

std::size_t orbit_dim(const Jet& jet) { return rank(infinitesimal_action(jet)); }

Subalgebra stabilizer_algebra(const Jet& jet) {
  // b is in the stabilizer iff sum_i b_i (T e_i) = 0, i.e. b^T A = 0.
  return Subalgebra(jet.k(), kernel_basis(infinitesimal_action(jet).transpose()));
}

OrbitCertificate elashvili_jet(const Jet& jet) {
  const unsigned k = jet.k();
  const unsigned n = jet.n();
  const std::size_t dim = static_cast<std::size_t>(n) * k;
  const ExactMatrix a = infinitesimal_action(jet);
  const Subalgebra stab = stabilizer_algebra(jet);

  // Fixed space: V with V * s = 0 for every stabilizer element s. The map
  // V -> V s is linear in vec(V); entry (i, c) of V s is sum_r V(i, r) s(r, c).
  std::vector<Vector> conditions;
  for (const auto& s : stab.basis()) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned c = 0; c < k; ++c) {
        Vector row(dim);
        for (unsigned r = 0; r < k; ++r) row[static_cast<std::size_t>(i) * k + r] = s.matrix(r, c);
        conditions.push_back(std::move(row));
      }
    }
  }
  std::vector<Vector> fixed;
  if (conditions.empty()) {
    for (std::size_t p = 0; p < dim; ++p) {
      Vector e(dim);
      e[p] = 1;
      fixed.push_back(std::move(e));
    }
  } else {
    fixed = kernel_basis(ExactMatrix::from_rows(conditions, dim));
  }

  RowEchelon sum(dim);
  for (std::size_t r = 0; r < a.rows(); ++r) sum.add_row(a.row(r));
  const std::size_t orbit = sum.rank();
  for (const auto& v : fixed) sum.add_row(v);

  OrbitCertificate cert{jet};
  cert.orbit_dim = orbit;
  cert.stabilizer_dim = stab.dim();
  cert.fixed_dim = fixed.size();
  cert.sum_dim = sum.rank();
  cert.elashvili_holds = cert.sum_dim == dim;
  return cert;
}

Jet random_jet(Sampler& rng, unsigned k, unsigned n, std::int64_t box) {
  return Jet(rng.integer_matrix(n, k, box));
}

Jet random_regular_jet(Sampler& rng, unsigned k, unsigned n, std::int64_t box) {
  while (true) {
    Jet j = random_jet(rng, k, n, box);
    if (is_regular(j)) return j;
  }
}

Jet random_singular_jet(Sampler& rng, unsigned k, unsigned n, std::int64_t box) {
  ExactMatrix t = rng.integer_matrix(n, k, box);
  for (unsigned i = 0; i < n; ++i) t(i, 0) = 0;
  return Jet(std::move(t));
}

namespace {

void check_spec(const SamplingSpec& spec) {
  if (spec.k < 1 || spec.n < 1) throw std::invalid_argument("k and n must be >= 1");
  if (spec.samples < 1) throw std::invalid_argument("sample count must be >= 1");
  if (spec.box < 1) throw std::invalid_argument("sampling box must be >= 1");
}

}  // namespace

TrdegResult trdeg(const SamplingSpec& spec) {
  check_spec(spec);
  Sampler rng(spec.seed);
  TrdegResult result{spec, 0, 0, Jet(spec.k, spec.n)};
  bool first = true;
  for (std::size_t s = 0; s < spec.samples; ++s) {
    Jet j = random_jet(rng, spec.k, spec.n, spec.box);
    const std::size_t d = orbit_dim(j);
    if (first || d > result.max_orbit_dim) {
      result.max_orbit_dim = d;
      result.witness = std::move(j);
      first = false;
    }
  }
  result.trdeg = static_cast<std::size_t>(spec.n) * spec.k - result.max_orbit_dim;
  return result;
}

StrataCensus strata_histogram(const SamplingSpec& spec) {
  check_spec(spec);
  Sampler rng(spec.seed);
  StrataCensus census{spec, {}, {}, {}};
  for (std::size_t s = 0; s < spec.samples; ++s) {
    const std::size_t d = orbit_dim(random_jet(rng, spec.k, spec.n, spec.box));
    ++census.generic[d];
    ++census.combined[d];
  }
  for (std::size_t s = 0; s < spec.samples; ++s) {
    const std::size_t d = orbit_dim(random_singular_jet(rng, spec.k, spec.n, spec.box));
    ++census.singular[d];
    ++census.combined[d];
  }
  ++census.singular[orbit_dim(Jet(spec.k, spec.n))];
  ++census.combined[orbit_dim(Jet(spec.k, spec.n))];
  return census;
}

SingularLocus singular_locus_codim(unsigned k, unsigned n) {
  if (k < 1 || n < 1) throw std::invalid_argument("k and n must be >= 1");
  // Defining equations of {f'(0) = 0}: the n coordinates of column 1.
  const std::size_t dim = static_cast<std::size_t>(n) * k;
  ExactMatrix eqs(n, dim);
  for (unsigned i = 0; i < n; ++i) eqs(i, static_cast<std::size_t>(i) * k) = 1;
  SingularLocus loc{k, n, rank(eqs), false};
  loc.codim_at_least_two = loc.codim >= 2;
  return loc;
}

GenericStabilizerEvidence generic_stabilizer_evidence(const SamplingSpec& spec) {
  check_spec(spec);
  Sampler rng(spec.seed);
  GenericStabilizerEvidence ev{spec, 0, {}};
  for (std::size_t s = 0; s < spec.samples; ++s) {
    Jet j = random_regular_jet(rng, spec.k, spec.n, spec.box);
    if (stabilizer_algebra(j).dim() != 0) {
      ++ev.failures;
      ev.counterexamples.push_back(std::move(j));
    }
  }
  return ev;
}

}  // namespace jetinv
