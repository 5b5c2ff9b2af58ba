#pragma once

#include "jetinv/lie.hpp"
#include "jetinv/matrix.hpp"
#include "jetinv/reparam.hpp"
#include "jetinv/sampling.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace jetinv {

// k-jet of a curve in C^n stored as an n x k matrix whose column j holds the
// Taylor coefficient f^(j)(0) / j!. Raw derivatives are never stored.
class Jet {
 public:
  Jet(unsigned k, unsigned n);
  explicit Jet(ExactMatrix taylor);  // n x k
  // Entries listed coordinate by coordinate: row i holds the k Taylor
  // coefficients of f_i.
  static Jet from_row_major(unsigned k, unsigned n, const std::vector<Rational>& entries);
  // Taylor coefficients obtained from raw derivative columns by dividing
  // column j by j!.
  static Jet from_derivatives(const ExactMatrix& derivatives);

  unsigned k() const { return static_cast<unsigned>(taylor_.cols()); }
  unsigned n() const { return static_cast<unsigned>(taylor_.rows()); }
  const ExactMatrix& taylor() const { return taylor_; }
  // Column j scaled back by j! (1-based j).
  Vector derivative(unsigned j) const;

  friend bool operator==(const Jet&, const Jet&) = default;

 private:
  ExactMatrix taylor_;
};

Jet act(const Jet& jet, const Reparam& phi);
// g * T: linear change of coordinates on C^n.
Jet left_multiply(const ExactMatrix& g, const Jet& jet);
bool is_regular(const Jet& jet);

// k x nk matrix; row i is the row-major flattening of T * e_i.
ExactMatrix infinitesimal_action(const Jet& jet);
std::size_t orbit_dim(const Jet& jet);
Subalgebra stabilizer_algebra(const Jet& jet);

struct OrbitCertificate {
  Jet jet;
  std::size_t orbit_dim = 0;
  std::size_t stabilizer_dim = 0;
  std::size_t fixed_dim = 0;  // dim of the jets annihilated by the stabilizer
  std::size_t sum_dim = 0;    // dim (g.J + fixed space)
  bool elashvili_holds = false;
};
OrbitCertificate elashvili_jet(const Jet& jet);

struct SamplingSpec {
  unsigned k = 1;
  unsigned n = 1;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  std::int64_t box = 9;
};

Jet random_jet(Sampler& rng, unsigned k, unsigned n, std::int64_t box);
Jet random_regular_jet(Sampler& rng, unsigned k, unsigned n, std::int64_t box);
Jet random_singular_jet(Sampler& rng, unsigned k, unsigned n, std::int64_t box);

struct TrdegResult {
  SamplingSpec spec;
  std::size_t max_orbit_dim = 0;
  std::size_t trdeg = 0;
  Jet witness;
};
TrdegResult trdeg(const SamplingSpec& spec);

struct StrataCensus {
  SamplingSpec spec;
  std::map<std::size_t, std::size_t> generic;   // random jets
  std::map<std::size_t, std::size_t> singular;  // first column forced to 0
  std::map<std::size_t, std::size_t> combined;  // both, plus the zero jet
};
StrataCensus strata_histogram(const SamplingSpec& spec);

struct SingularLocus {
  unsigned k = 0;
  unsigned n = 0;
  std::size_t codim = 0;
  bool codim_at_least_two = false;
};
SingularLocus singular_locus_codim(unsigned k, unsigned n);

// Replayable record of a genericity claim: how many sampled regular jets had
// a nontrivial stabilizer, with the offending jets kept.
struct GenericStabilizerEvidence {
  SamplingSpec spec;
  std::size_t failures = 0;
  std::vector<Jet> counterexamples;
};
GenericStabilizerEvidence generic_stabilizer_evidence(const SamplingSpec& spec);

}  // namespace jetinv
