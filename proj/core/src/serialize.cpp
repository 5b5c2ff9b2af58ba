#include "jetinv/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace jetinv {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

Json to_json(const Reparam& phi) { return Json{{"k", phi.k()}, {"coeffs", to_json(phi.coeffs())}}; }

Json group_matrix_json(const Reparam& phi) {
  return Json{{"k", phi.k()},
              {"coeffs", to_json(phi.coeffs())},
              {"unipotent", is_unipotent(phi)},
              {"matrix", to_json(group_matrix(phi))}};
}

Json to_json(const LieElement& x) {
  return Json{{"k", x.k}, {"coords", to_json(x.coords)}, {"matrix", to_json(x.matrix)}};
}

Json to_json(const Subalgebra& s) {
  Json basis = Json::array();
  for (const auto& b : s.basis()) basis.push_back(to_json(b.coords));
  return Json{{"k", s.k()}, {"dim", s.dim()}, {"basis", basis}};
}

Json to_json(const AdjointElashvili& c) {
  return Json{{"k", c.k},
              {"probe_point", to_json(c.probe)},
              {"dims",
               {{"image_ad", c.image_dim},
                {"centralizer", c.centralizer_dim},
                {"fixed_space_of_centralizer", c.fixed_dim},
                {"sum", c.sum_dim}}},
              {"holds", c.holds},
              {"centralizer_commutative", c.centralizer_commutative},
              {"direct_sum_with_centralizer", c.direct_sum_with_centralizer}};
}

Json to_json(const CartanCertificate& c) {
  return Json{{"k", c.k},
              {"probe_point", to_json(c.probe)},
              {"dims", {{"centralizer", c.dim}, {"normalizer", c.normalizer_dim}}},
              {"commutative", c.commutative},
              {"nilpotent", c.nilpotent},
              {"self_normalizing", c.self_normalizing},
              {"is_cartan", c.is_cartan}};
}

Json to_json(const WeylCertificate& c) {
  return Json{{"k", c.k},
              {"probe_point", to_json(c.probe)},
              {"dims", {{"centralizer", c.centralizer_dim}, {"normalizer", c.normalizer_dim}}},
              {"cartan", c.cartan},
              {"normalizer_equals_centralizer", c.normalizer_equals_centralizer}};
}

Json to_json(const Jet& j) {
  return Json{{"k", j.k()}, {"n", j.n()}, {"taylor", to_json(j.taylor())}, {"regular", is_regular(j)}};
}

Json to_json(const OrbitCertificate& c) {
  return Json{{"jet", to_json(c.jet)},
              {"dims",
               {{"orbit", c.orbit_dim},
                {"stabilizer", c.stabilizer_dim},
                {"fixed_space_of_stabilizer", c.fixed_dim},
                {"sum", c.sum_dim},
                {"jet_space", static_cast<std::size_t>(c.jet.k()) * c.jet.n()}}},
              {"holds", c.elashvili_holds}};
}

namespace {

Json spec_json(const SamplingSpec& s) {
  return Json{{"k", s.k}, {"n", s.n}, {"samples", s.samples}, {"seed", s.seed}, {"box", s.box}};
}

Json hist_json(const std::map<std::size_t, std::size_t>& h) {
  Json a = Json::array();
  for (const auto& [d, c] : h) a.push_back(Json{{"orbit_dim", d}, {"count", c}});
  return a;
}

}  // namespace

Json to_json(const TrdegResult& r) {
  return Json{{"sampling", spec_json(r.spec)},
              {"jet_space_dim", static_cast<std::size_t>(r.spec.k) * r.spec.n},
              {"max_orbit_dim", r.max_orbit_dim},
              {"trdeg", r.trdeg},
              {"witness", to_json(r.witness)}};
}

Json to_json(const StrataCensus& s) {
  return Json{{"sampling", spec_json(s.spec)},
              {"generic", hist_json(s.generic)},
              {"singular_locus", hist_json(s.singular)},
              {"combined", hist_json(s.combined)}};
}

Json to_json(const SingularLocus& s) {
  return Json{{"k", s.k}, {"n", s.n}, {"codim", s.codim}, {"codim_at_least_two", s.codim_at_least_two}};
}

Json to_json(const WeightedPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.poly.terms()) terms.push_back(Json{{"exponents", e}, {"coeff", to_json(c)}});
  return Json{{"k", p.k}, {"n", p.n}, {"terms", terms}};
}

Json to_json(const InvariantSpace& s) {
  Json basis = Json::array();
  for (const auto& b : s.basis) basis.push_back(to_json(b));
  return Json{{"k", s.k}, {"n", s.n}, {"m", s.m}, {"monomial_count", s.monomial_count}, {"dim", s.dim()},
              {"basis", basis}};
}

Json to_json(const DimensionRow& r) {
  return Json{{"k", r.k},
              {"n", r.n},
              {"m", r.m},
              {"monomial_count", r.monomial_count},
              {"invariant_dim", r.invariant_dim},
              {"product_span_dim", r.product_span_dim},
              {"new_generators_needed", r.new_generators_needed}};
}

Json to_json(const SymIndex& i) { return Json(i.idx); }

Json to_json(const SymVector& v) {
  Json a = Json::array();
  for (const auto& [i, c] : v.coords) a.push_back(Json{{"index", to_json(i)}, {"coeff", to_json(c)}});
  return a;
}

Json to_json(const PluckerVector& p) {
  Json coords = Json::object();
  for (const auto& [key, c] : p.coords) {
    std::string label;
    for (std::size_t f = 0; f < key.size(); ++f) {
      if (f > 0) label += "^";
      for (std::size_t t = 0; t < key[f].idx.size(); ++t) {
        if (t > 0) label += ".";
        label += std::to_string(key[f].idx[t]);
      }
    }
    coords[label] = to_json(c);
  }
  return Json{{"k", p.k}, {"zero", p.is_zero()}, {"nonzero_count", p.coords.size()}, {"coords", coords}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw std::invalid_argument("rational must be a \"num/den\" string or an integer");
}

Reparam reparam_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return Reparam(std::move(c));
}

WeightedPoly weighted_poly_from_json(const Json& j) {
  const auto k = j.at("k").get<unsigned>();
  const auto n = j.at("n").get<unsigned>();
  WeightedPoly p(k, n);
  for (const auto& t : j.at("terms")) {
    const auto e = t.at("exponents").get<Exponents>();
    p.poly.add_term(e, rational_from_json(t.at("coeff")));
  }
  return p;
}

std::string dimension_table_csv(const std::vector<DimensionRow>& rows) {
  std::ostringstream out;
  out << "k,n,m,monomial_count,invariant_dim,product_span_dim\n";
  for (const auto& r : rows)
    out << r.k << ',' << r.n << ',' << r.m << ',' << r.monomial_count << ',' << r.invariant_dim << ','
        << r.product_span_dim << '\n';
  return out.str();
}

std::string histogram_csv(const std::map<std::size_t, std::size_t>& hist) {
  std::ostringstream out;
  out << "orbit_dim,count\n";
  for (const auto& [d, c] : hist) out << d << ',' << c << '\n';
  return out.str();
}

}  // namespace jetinv
