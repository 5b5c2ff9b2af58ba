#include "cli.hpp"

#include "jetinv/embedding.hpp"
#include "jetinv/invariants.hpp"
#include "jetinv/jets.hpp"
#include "jetinv/lie.hpp"
#include "jetinv/linalg.hpp"
#include "jetinv/reparam.hpp"
#include "jetinv/sampling.hpp"
#include "jetinv/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace jetinv::cli {

namespace {

// Thrown for malformed flag values discovered after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  unsigned k = 2;
  unsigned n = 1;
  unsigned m = 1;
  unsigned m_max = 4;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  std::int64_t box = 9;
  std::string format = "json";
  std::string output;
  std::size_t cap = kDefaultMonomialCap;

  // Raw value flags, parsed per command.
  std::string coeffs, f, g, x, y, jet, columns, input;

  Json to_json() const {
    Json j{{"k", k}, {"n", n}, {"m", m}, {"m_max", m_max}, {"samples", samples}, {"seed", seed},
           {"box", box}, {"format", format}, {"cap", cap}};
    const std::pair<const char*, const std::string*> raw[] = {
        {"coeffs", &coeffs}, {"f", &f}, {"g", &g}, {"x", &x}, {"y", &y},
        {"jet", &jet}, {"columns", &columns}, {"input", &input}};
    for (const auto& [name, value] : raw)
      if (!value->empty()) j[name] = *value;
    return j;
  }
};

std::vector<Rational> rationals(const std::string& text, const char* flag) {
  try {
    return parse_rational_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + flag + ": " + e.what());
  }
}

Reparam reparam_flag(const std::string& text, unsigned k, const char* flag) {
  if (text.empty()) throw UsageError(std::string("--") + flag + " is required");
  auto c = rationals(text, flag);
  if (c.size() != k) throw UsageError(std::string("--") + flag + " needs exactly k coefficients");
  return Reparam(std::move(c));  // std::domain_error when a_1 == 0
}

LieElement lie_flag(const std::string& text, unsigned k, const char* flag) {
  if (text.empty()) return LieElement::basis_element(k, 1);
  auto c = rationals(text, flag);
  if (c.size() != k) throw UsageError(std::string("--") + flag + " needs exactly k coordinates");
  return LieElement::from_coords(k, std::move(c));
}

Jet jet_flag(const RunConfig& cfg) {
  if (cfg.jet.empty()) throw UsageError("--jet is required");
  auto e = rationals(cfg.jet, "jet");
  if (e.size() != static_cast<std::size_t>(cfg.k) * cfg.n) throw UsageError("--jet needs n*k entries");
  return Jet::from_row_major(cfg.k, cfg.n, e);
}

SamplingSpec sampling(const RunConfig& cfg) { return SamplingSpec{cfg.k, cfg.n, cfg.samples, cfg.seed, cfg.box}; }

Json provenance(const RunConfig& cfg, const std::string& claim) {
  Json p{{"command", cfg.command}, {"config", cfg.to_json()}, {"seed", cfg.seed}, {"version", kVersion}};
  if (!claim.empty()) p["claim"] = claim;
  return p;
}

Json envelope(const RunConfig& cfg, const std::string& claim, Json result) {
  return Json{{"provenance", provenance(cfg, claim)}, {"result", std::move(result)}};
}

struct Output {
  std::string text;
};

Output json_output(const Json& j) { return Output{j.dump(2) + "\n"}; }

// ---- group ---------------------------------------------------------------

Output cmd_group(const std::string& sub, const RunConfig& cfg) {
  if (sub == "matrix") {
    return json_output(envelope(cfg, "", group_matrix_json(reparam_flag(cfg.coeffs, cfg.k, "coeffs"))));
  }
  if (sub == "compose") {
    const Reparam f = reparam_flag(cfg.f, cfg.k, "f");
    const Reparam g = reparam_flag(cfg.g, cfg.k, "g");
    const Reparam fg = compose(f, g);
    return json_output(envelope(cfg, "", Json{{"f", to_json(f)}, {"g", to_json(g)},
                                              {"composition", to_json(fg)},
                                              {"matrix", to_json(group_matrix(fg))}}));
  }
  const Reparam phi = reparam_flag(cfg.coeffs, cfg.k, "coeffs");
  const Reparam inv = invert(phi);
  return json_output(envelope(cfg, "", Json{{"input", to_json(phi)}, {"inverse", to_json(inv)},
                                            {"matrix", to_json(group_matrix(inv))}}));
}

// ---- lie -----------------------------------------------------------------

Output cmd_lie(const std::string& sub, const RunConfig& cfg) {
  const unsigned k = cfg.k;
  if (sub == "basis") {
    Json basis = Json::array();
    for (const auto& e : lie_basis(k)) basis.push_back(to_json(e));
    return json_output(envelope(cfg, "", Json{{"k", k}, {"basis", basis}}));
  }
  if (sub == "bracket") {
    if (cfg.x.empty() || cfg.y.empty()) throw UsageError("--x and --y are required");
    const auto x = lie_flag(cfg.x, k, "x");
    const auto y = lie_flag(cfg.y, k, "y");
    return json_output(envelope(cfg, "", Json{{"x", to_json(x)}, {"y", to_json(y)}, {"bracket", to_json(bracket(x, y))},
                                              {"convention", "[x,y] = yx - xy (right action on jets)"}}));
  }
  if (sub == "elashvili-adjoint") {
    return json_output(envelope(cfg, "adjoint action has a generic stabilizer",
                                to_json(elashvili_adjoint(lie_flag(cfg.x, k, "x")))));
  }
  if (sub == "cartan") {
    return json_output(envelope(cfg, "Cartan subalgebras are commutative",
                                to_json(cartan_certificate(lie_flag(cfg.x, k, "x")))));
  }
  if (sub == "weyl-cert") {
    return json_output(envelope(cfg, "Weyl group of the adjoint action is finite",
                                to_json(weyl_finiteness_certificate(lie_flag(cfg.x, k, "x")))));
  }
  // derived
  const Subalgebra d = derived_subalgebra(k);
  bool inside_unipotent = true;
  for (const auto& b : d.basis())
    if (b.coords[0] != 0) inside_unipotent = false;
  bool contains_e1_brackets = true;
  for (unsigned j = 1; j <= k; ++j)
    if (!d.contains(bracket(LieElement::basis_element(k, 1), LieElement::basis_element(k, j))))
      contains_e1_brackets = false;
  return json_output(envelope(cfg, "derived subalgebra [g_k, g_k]",
                              Json{{"subalgebra", to_json(d)},
                                   {"dim", d.dim()},
                                   {"algebra_dim", k},
                                   {"equals_whole_algebra", d.dim() == k},
                                   {"inside_unipotent_part", inside_unipotent},
                                   {"closed_under_bracket", d.is_closed()},
                                   {"contains_e1_brackets", contains_e1_brackets}}));
}

// ---- jets ----------------------------------------------------------------

Output cmd_jets(const std::string& sub, const RunConfig& cfg) {
  if (sub == "act") {
    const Jet j = jet_flag(cfg);
    const Reparam phi = reparam_flag(cfg.coeffs, cfg.k, "coeffs");
    return json_output(envelope(cfg, "", Json{{"jet", to_json(j)}, {"reparam", to_json(phi)},
                                              {"result", to_json(act(j, phi))}}));
  }
  if (sub == "orbit") {
    const Jet j = jet_flag(cfg);
    const Subalgebra stab = stabilizer_algebra(j);
    return json_output(envelope(cfg, "", Json{{"jet", to_json(j)},
                                              {"orbit_dim", orbit_dim(j)},
                                              {"stabilizer_dim", stab.dim()},
                                              {"stabilizer", to_json(stab)}}));
  }
  if (sub == "elashvili") {
    const std::string claim = "jet action has a generic stabilizer";
    if (!cfg.jet.empty()) return json_output(envelope(cfg, claim, to_json(elashvili_jet(jet_flag(cfg)))));
    Sampler rng(cfg.seed);
    Json certs = Json::array();
    std::size_t holding = 0;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      const auto cert = elashvili_jet(random_regular_jet(rng, cfg.k, cfg.n, cfg.box));
      holding += cert.elashvili_holds ? 1 : 0;
      certs.push_back(to_json(cert));
    }
    return json_output(envelope(cfg, claim, Json{{"samples", cfg.samples}, {"holding", holding},
                                                 {"failures", cfg.samples - holding}, {"certificates", certs}}));
  }
  if (sub == "trdeg") {
    return json_output(envelope(cfg, "trdeg of invariant field = dim X - max orbit dim", to_json(trdeg(sampling(cfg)))));
  }
  if (sub == "strata") {
    const auto census = strata_histogram(sampling(cfg));
    if (cfg.format == "csv") return Output{histogram_csv(census.combined)};
    return json_output(envelope(cfg, "orbit dimension census", to_json(census)));
  }
  return json_output(envelope(cfg, "codimension of non-regular jets", to_json(singular_locus_codim(cfg.k, cfg.n))));
}

// ---- invariants ----------------------------------------------------------

Output cmd_invariants(const std::string& sub, const RunConfig& cfg) {
  if (sub == "dim" || sub == "profile") {
    const auto profile = generation_profile(cfg.k, cfg.n, cfg.m_max, cfg.cap);
    if (cfg.format == "csv") return Output{dimension_table_csv(profile.rows)};
    Json rows = Json::array();
    for (const auto& r : profile.rows) rows.push_back(to_json(r));
    Json result{{"k", cfg.k}, {"n", cfg.n}, {"m_max", cfg.m_max}, {"rows", rows}};
    if (sub == "profile") {
      Json degrees = Json::array();
      for (const auto& r : profile.rows)
        if (r.new_generators_needed) degrees.push_back(r.m);
      result["new_generator_degrees"] = degrees;
    }
    return json_output(envelope(cfg, sub == "profile" ? "bounded-degree generation evidence" : "", result));
  }
  if (sub == "basis") {
    return json_output(envelope(cfg, "", to_json(invariant_basis(cfg.k, cfg.n, cfg.m, cfg.cap))));
  }
  // verify
  std::vector<WeightedPoly> polys;
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw UsageError("cannot read --input " + cfg.input);
    Json j;
    try {
      j = Json::parse(in);
      if (j.contains("basis")) {
        for (const auto& p : j.at("basis")) polys.push_back(weighted_poly_from_json(p));
      } else {
        polys.push_back(weighted_poly_from_json(j));
      }
    } catch (const Json::exception& e) {
      throw UsageError(std::string("malformed --input: ") + e.what());
    }
    for (const auto& p : polys)
      if (p.k != cfg.k || p.n != cfg.n) throw UsageError("--input polynomial ring does not match --k/--n");
  } else {
    polys = invariant_basis(cfg.k, cfg.n, cfg.m, cfg.cap).basis;
  }
  Sampler rng(cfg.seed);
  std::vector<Reparam> us;
  for (std::size_t s = 0; s < cfg.samples; ++s) us.push_back(rng.unipotent(cfg.k, cfg.box));
  Json results = Json::array();
  bool all = true;
  for (const auto& p : polys) {
    std::size_t passed = 0;
    for (const auto& u : us) passed += verify_invariance(p, u) ? 1 : 0;
    const bool derivations = annihilated_by_derivations(p);
    const bool ok = passed == us.size() && derivations;
    all = all && ok;
    results.push_back(Json{{"polynomial", to_json(p)}, {"unipotent_samples", us.size()}, {"passed", passed},
                           {"annihilated_by_derivations", derivations}, {"invariant", ok}});
  }
  return json_output(envelope(cfg, "U_k-invariance", Json{{"all_invariant", all}, {"results", results}}));
}

// ---- embed ---------------------------------------------------------------

std::vector<SymVector> columns_flag(const RunConfig& cfg) {
  const auto basis = sym_basis(cfg.n, cfg.k);
  std::vector<SymVector> cols;
  std::stringstream ss(cfg.columns);
  std::string part;
  while (std::getline(ss, part, ';')) {
    const auto v = rationals(part, "columns");
    if (v.size() != basis.size()) {
      throw UsageError("--columns: each column needs " + std::to_string(basis.size()) + " coordinates");
    }
    SymVector s;
    for (std::size_t i = 0; i < v.size(); ++i) s.add(basis[i], v[i]);
    cols.push_back(std::move(s));
  }
  if (cols.size() != cfg.k) throw UsageError("--columns needs exactly k columns");
  return cols;
}

Json plucker_payload(const PluckerVector& p) {
  Json j = to_json(p);
  if (!p.is_zero()) j["a_nk_member"] = a_nk_membership(p);
  return j;
}

Output cmd_embed(const std::string& sub, const RunConfig& cfg) {
  if (sub == "phi") {
    const Jet j = jet_flag(cfg);
    Json cols = Json::array();
    for (const auto& c : phi(j)) cols.push_back(to_json(c));
    return json_output(envelope(cfg, "", Json{{"jet", to_json(j)}, {"phi", cols}}));
  }
  if (sub == "plucker") {
    std::vector<SymVector> cols;
    if (!cfg.columns.empty()) {
      cols = columns_flag(cfg);
    } else {
      cols = phi(jet_flag(cfg));
    }
    return json_output(envelope(cfg, "", plucker_payload(plucker(cols))));
  }
  if (sub == "zpoint") {
    return json_output(envelope(cfg, "", plucker_payload(z_point(cfg.n, cfg.k))));
  }
  // check-invariance
  const std::string claim = "phi is a G_k-invariant morphism on regular jets";
  if (!cfg.jet.empty()) {
    const Jet j = jet_flag(cfg);
    const Reparam g = cfg.coeffs.empty() ? Reparam::identity(cfg.k) : reparam_flag(cfg.coeffs, cfg.k, "coeffs");
    return json_output(envelope(cfg, claim, Json{{"jet", to_json(j)}, {"reparam", to_json(g)},
                                                 {"invariant", invariance_check(j, g)}}));
  }
  Sampler rng(cfg.seed);
  Json checks = Json::array();
  bool all = true;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const Jet j = random_regular_jet(rng, cfg.k, cfg.n, cfg.box);
    const Reparam g = rng.reparam(cfg.k, cfg.box);
    const ExactMatrix h = rng.invertible_matrix(cfg.n, cfg.box);
    const bool inv = invariance_check(j, g);
    const bool equiv = phi(left_multiply(h, j)) == gl_action(h, phi(j));
    all = all && inv && equiv;
    checks.push_back(Json{{"jet", to_json(j)}, {"reparam", to_json(g)}, {"invariant", inv},
                          {"gl_equivariant", equiv}});
  }
  return json_output(envelope(cfg, claim, Json{{"all_true", all}, {"checks", checks}}));
}

std::size_t default_cap() {
  if (const char* env = std::getenv(kCapEnvVar)) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultMonomialCap;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.cap = default_cap();

  CLI::App app{"Exact invariant theory of the jet reparametrization group", "jetinv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto positive = CLI::PositiveNumber;
  auto add_k = [&](CLI::App* s) { s->add_option("--k", cfg.k, "jet order")->check(positive); };
  auto add_n = [&](CLI::App* s) { s->add_option("--n", cfg.n, "ambient dimension")->check(positive); };
  auto add_sampling = [&](CLI::App* s) {
    s->add_option("--samples", cfg.samples, "sample count")->check(positive);
    s->add_option("--seed", cfg.seed, "random seed");
    s->add_option("--box", cfg.box, "integer box bound for sampled entries")->check(positive);
  };
  auto add_common = [&](CLI::App* s) {
    s->add_option("--output", cfg.output, "write output to this file instead of stdout");
    s->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  // leaf name -> (group, handler)
  std::vector<std::pair<CLI::App*, std::function<Output()>>> leaves;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& desc,
                  std::function<Output(const std::string&, const RunConfig&)> handler) {
    CLI::App* s = group->add_subcommand(name, desc);
    add_common(s);
    const std::string full = group->get_name() + " " + name;
    leaves.emplace_back(s, [&cfg, handler, name, full]() {
      cfg.command = full;
      return handler(name, cfg);
    });
    return s;
  };

  CLI::App* group = app.add_subcommand("group", "reparametrization group G_k");
  group->require_subcommand(1);
  for (const char* name : {"matrix", "invert"}) {
    auto* s = leaf(group, name, std::string(name) == "matrix" ? "group matrix of a reparametrization" : "inverse",
                   cmd_group);
    add_k(s);
    s->add_option("--coeffs", cfg.coeffs, "a_1,...,a_k")->required();
  }
  {
    auto* s = leaf(group, "compose", "t -> f(g(t))", cmd_group);
    add_k(s);
    s->add_option("--f", cfg.f, "outer coefficients")->required();
    s->add_option("--g", cfg.g, "inner coefficients")->required();
  }

  CLI::App* lie = app.add_subcommand("lie", "Lie algebra g_k");
  lie->require_subcommand(1);
  for (const char* name : {"basis", "bracket", "elashvili-adjoint", "cartan", "derived", "weyl-cert"}) {
    auto* s = leaf(lie, name, std::string("lie ") + name, cmd_lie);
    add_k(s);
    const std::string n = name;
    if (n == "bracket") {
      s->add_option("--x", cfg.x, "coordinates in the e-basis")->required();
      s->add_option("--y", cfg.y, "coordinates in the e-basis")->required();
    } else if (n != "basis" && n != "derived") {
      s->add_option("--x", cfg.x, "probe point coordinates (default e_1)");
    }
  }

  CLI::App* jets = app.add_subcommand("jets", "action on k-jets");
  jets->require_subcommand(1);
  for (const char* name : {"act", "orbit", "elashvili", "trdeg", "strata", "codim"}) {
    auto* s = leaf(jets, name, std::string("jets ") + name, cmd_jets);
    add_k(s);
    add_n(s);
    const std::string n = name;
    if (n == "act" || n == "orbit" || n == "elashvili") {
      s->add_option("--jet", cfg.jet, "n*k Taylor coefficients, coordinate by coordinate");
    }
    if (n == "act") s->add_option("--coeffs", cfg.coeffs, "reparametrization a_1,...,a_k")->required();
    if (n == "elashvili" || n == "trdeg" || n == "strata") add_sampling(s);
  }

  CLI::App* inv = app.add_subcommand("invariants", "Demailly-Semple invariant spaces E_{k,m}");
  inv->require_subcommand(1);
  for (const char* name : {"dim", "basis", "verify", "profile"}) {
    auto* s = leaf(inv, name, std::string("invariants ") + name, cmd_invariants);
    add_k(s);
    add_n(s);
    s->add_option("--cap", cfg.cap, "maximum monomial count per degree")->check(positive);
    const std::string n = name;
    if (n == "dim" || n == "profile") s->add_option("--mmax", cfg.m_max, "largest weighted degree")->check(positive);
    if (n == "basis" || n == "verify") s->add_option("--m", cfg.m, "weighted degree")->check(positive);
    if (n == "verify") {
      add_sampling(s);
      s->add_option("--input", cfg.input, "JSON polynomial (or basis) to verify");
    }
  }

  CLI::App* embed = app.add_subcommand("embed", "Grassmannian / Plucker embedding of regular jets");
  embed->require_subcommand(1);
  for (const char* name : {"phi", "plucker", "zpoint", "check-invariance"}) {
    auto* s = leaf(embed, name, std::string("embed ") + name, cmd_embed);
    add_k(s);
    add_n(s);
    const std::string n = name;
    if (n != "zpoint") s->add_option("--jet", cfg.jet, "n*k Taylor coefficients, coordinate by coordinate");
    if (n == "plucker") s->add_option("--columns", cfg.columns, "k columns over sym_basis(n,k), ';' separated");
    if (n == "check-invariance") {
      add_sampling(s);
      s->add_option("--coeffs", cfg.coeffs, "reparametrization for a single --jet check");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto handler = std::find_if(leaves.begin(), leaves.end(), [](const auto& l) { return l.first->parsed(); });
  if (handler == leaves.end()) {
    err << "error: no command given\n";
    return kExitUsage;
  }

  try {
    const Output result = handler->second();
    if (cfg.output.empty()) {
      out << result.text;
    } else {
      std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
      if (!file) {
        err << "error: cannot write " << cfg.output << "\n";
        return kExitUsage;
      }
      file << result.text;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace jetinv::cli
