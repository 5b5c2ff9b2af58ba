#pragma once

// JSON and CSV encodings. Rationals are always written as "num/den" strings
// so that no output ever passes through floating point.

#include "jetinv/embedding.hpp"
#include "jetinv/invariants.hpp"
#include "jetinv/jets.hpp"
#include "jetinv/lie.hpp"
#include "jetinv/reparam.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace jetinv {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const ExactMatrix& m);
Json to_json(const Reparam& phi);
Json group_matrix_json(const Reparam& phi);
Json to_json(const LieElement& x);
Json to_json(const Subalgebra& s);
Json to_json(const AdjointElashvili& c);
Json to_json(const CartanCertificate& c);
Json to_json(const WeylCertificate& c);
Json to_json(const Jet& j);
Json to_json(const OrbitCertificate& c);
Json to_json(const TrdegResult& r);
Json to_json(const StrataCensus& s);
Json to_json(const SingularLocus& s);
Json to_json(const WeightedPoly& p);
Json to_json(const InvariantSpace& s);
Json to_json(const DimensionRow& r);
Json to_json(const SymIndex& i);
Json to_json(const SymVector& v);
Json to_json(const PluckerVector& p);

Rational rational_from_json(const Json& j);
Reparam reparam_from_json(const Json& j);
// Accepts the object produced by to_json(const WeightedPoly&).
WeightedPoly weighted_poly_from_json(const Json& j);

// Header k,n,m,monomial_count,invariant_dim,product_span_dim.
std::string dimension_table_csv(const std::vector<DimensionRow>& rows);
// Header orbit_dim,count.
std::string histogram_csv(const std::map<std::size_t, std::size_t>& hist);

}  // namespace jetinv
