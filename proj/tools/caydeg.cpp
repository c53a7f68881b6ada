// caydeg — command-line front end for the algebraic-degree library.
//
// Subcommands: degree, spectrum, construct, verify, enumerate, bound.
// Default output is versioned JSON (schema 1) on stdout; --format table emits
// a human-readable rendering with no stability promise.  Every run carries a
// manifest (tool version, full effective request, timing) from which the
// result portion is reproducible bit-for-bit.
//
// Exit codes: 0 success (and theorem match), 1 theorem mismatch,
// 2 invalid input, 3 budget/cap exceeded (partial-flagged report when one can
// be emitted), 4 internal invariant failure.
//
// Environment overrides: CAYDEG_WORKERS (verifier parallelism width when
// --workers is absent), CAYDEG_MAX_SETS (default enumeration budget when
// --limit is absent).

#include "caydeg/construct.hpp"
#include "caydeg/degree.hpp"
#include "caydeg/graph.hpp"
#include "caydeg/group.hpp"
#include "caydeg/numbers.hpp"
#include "caydeg/spectra.hpp"
#include "caydeg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "1.0.0";

using caydeg::Int;
using json = nlohmann::ordered_json;

json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

json poly_json(const caydeg::IntPoly& p) {
  json a = json::array();
  for (const Int& c : p.coeffs()) a.push_back(json_int(c));
  return a;
}

json field_json(const caydeg::SplittingFieldInfo& f) {
  json j;
  switch (f.kind) {
  case caydeg::SplittingFieldInfo::Kind::rational: j["kind"] = "rational"; break;
  case caydeg::SplittingFieldInfo::Kind::multiquadratic: j["kind"] = "multiquadratic"; break;
  case caydeg::SplittingFieldInfo::Kind::partial: j["kind"] = "partial"; break;
  }
  j["degree"] = f.degree;
  j["lower_bound"] = f.lower_bound;
  json d = json::array();
  for (const Int& v : f.discriminants) d.push_back(json_int(v));
  j["discriminants"] = std::move(d);
  if (f.kind == caydeg::SplittingFieldInfo::Kind::partial) {
    j["witness_factor"] = poly_json(f.witness);
    j["witness_display"] = f.witness.str();
  }
  j["display"] = f.str();
  return j;
}

json degree_json(const caydeg::DegreeResult& r) {
  json j;
  j["degree"] = r.degree;
  j["lower_bound"] = r.lower_bound;
  j["path"] = r.path;
  if (r.stab_modulus > 0) {
    j["stabilizer_units"] = json{{"modulus", r.stab_modulus}, {"units", r.stabilizer}};
  }
  if (r.field) j["field"] = field_json(*r.field);
  return j;
}

json connection_set_json(const caydeg::FiniteGroup& G, const std::vector<int>& S) {
  json members = json::array();
  bool inverse_closed = true;
  for (int s : S) {
    members.push_back(G.names[static_cast<size_t>(s)]);
    if (!std::binary_search(S.begin(), S.end(), G.inv(s))) inverse_closed = false;
  }
  json j;
  j["group_spec"] = G.spec;
  j["set_members"] = std::move(members);
  j["directed"] = !inverse_closed;
  j["n"] = G.n;
  j["inverse_closed"] = inverse_closed;
  j["normal"] = caydeg::is_normal_subset(G, S).normal;
  j["generating"] = caydeg::generates(G, S);
  return j;
}

json report_json(const caydeg::VerificationReport& R) {
  json j;
  j["theorem"] = R.theorem;
  j["search_space"] = R.search_space;
  j["verdict"] = R.match ? "match" : "mismatch";
  j["match"] = R.match;
  j["partial"] = R.partial;
  j["sets_scanned"] = R.sets_scanned;
  j["positives_checked"] = R.positives_checked;
  j["found_count"] = R.found.size();
  j["expected_count"] = R.expected.size();
  j["missing"] = R.missing;
  j["extra"] = R.extra;
  j["found"] = R.found;
  j["expected"] = R.expected;
  j["notes"] = R.notes;
  j["seconds"] = R.seconds;
  if (R.counterexample) {
    const auto& ce = *R.counterexample;
    json c;
    c["set"] = ce.set;
    c["set_members"] = ce.words;
    c["degree"] = degree_json(ce.degree);
    json fs = json::array(), fd = json::array();
    for (const auto& f : ce.factors) {
      fs.push_back(poly_json(f));
      fd.push_back(f.str());
    }
    c["factors"] = std::move(fs);
    c["factor_display"] = std::move(fd);
    j["counterexample"] = std::move(c);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

struct RunContext {
  std::string format = "json"; // json | table
  json request;                // full effective request, reproducibility anchor
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  json manifest() const {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json m;
    m["tool"] = "caydeg";
    m["version"] = kVersion;
    m["request"] = request;
    m["timing_seconds"] = secs;
    return m;
  }
};

void print_table(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      std::string key = prefix.empty() ? k : prefix + "." + k;
      print_table(v, key, os);
    }
  } else if (j.is_array()) {
    bool scalar_only = true;
    for (const auto& v : j)
      if (v.is_object() || v.is_array()) scalar_only = false;
    if (scalar_only) {
      os << prefix << ": ";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        os << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      }
      os << "\n";
    } else {
      for (size_t i = 0; i < j.size(); ++i)
        print_table(j[i], prefix + "[" + std::to_string(i) + "]", os);
    }
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const RunContext& ctx, json payload, const std::string& table_override = "") {
  json root;
  root["schema"] = 1;
  root["manifest"] = ctx.manifest();
  for (auto& [k, v] : payload.items()) root[k] = std::move(v);
  if (ctx.format == "table") {
    if (!table_override.empty()) {
      std::cout << table_override;
      if (table_override.back() != '\n') std::cout << "\n";
    } else {
      json body = root;
      body.erase("manifest");
      body.erase("schema");
      print_table(body, "", std::cout);
    }
  } else {
    std::cout << root.dump(2) << "\n";
  }
}

// Writes DOT to the given path; "-" replaces the JSON output on stdout.
bool handle_dot(const std::string& dot_path, const caydeg::Graph& g) {
  if (dot_path.empty()) return false;
  std::string dot = caydeg::to_dot(g);
  if (dot_path == "-") {
    std::cout << dot;
    return true;
  }
  std::ofstream out(dot_path);
  caydeg::require(static_cast<bool>(out), "cannot open DOT output file: " + dot_path);
  out << dot;
  return false;
}

// ---------------------------------------------------------------------------
// Shared option bundles
// ---------------------------------------------------------------------------

struct SetArgs {
  std::string group_spec;
  std::string set_spec;
  std::string set_json_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--group", group_spec,
                    "group spec (Z12, Z5xZ2, Z2^3, D10, GDih(Z5^2), G5, G250.1, G250.2)");
    cmd->add_option("--set", set_spec,
                    "connection set: comma-separated element words or integer exponents");
    cmd->add_option("--set-json", set_json_path,
                    "read {group_spec, set_members} from a connection-set JSON file");
  }

  std::pair<caydeg::FiniteGroup, std::vector<int>> resolve(json* request) const {
    std::string gspec = group_spec, sspec = set_spec;
    if (!set_json_path.empty()) {
      caydeg::require(group_spec.empty() && set_spec.empty(),
                      "--set-json replaces --group/--set; give one or the other");
      std::ifstream in(set_json_path);
      caydeg::require(static_cast<bool>(in), "cannot open set JSON file: " + set_json_path);
      json doc = json::parse(in, nullptr, false);
      caydeg::require(!doc.is_discarded(), "set JSON file does not parse: " + set_json_path);
      caydeg::require(doc.contains("group_spec") && doc.contains("set_members"),
                      "set JSON needs group_spec and set_members fields");
      gspec = doc["group_spec"].get<std::string>();
      std::string joined;
      for (const auto& w : doc["set_members"]) {
        if (!joined.empty()) joined += ",";
        joined += w.get<std::string>();
      }
      sspec = joined;
    }
    caydeg::require(!gspec.empty(), "a group spec is required (--group or --set-json)");
    caydeg::require(!sspec.empty(), "a connection set is required (--set or --set-json)");
    (*request)["group"] = gspec;
    (*request)["set"] = sspec;
    caydeg::FiniteGroup G = caydeg::parse_group_spec(gspec);
    std::vector<int> S = caydeg::parse_connection_set(G, sspec);
    return {std::move(G), std::move(S)};
  }
};

long env_long(const char* name, long fallback) {
  if (const char* v = std::getenv(name)) {
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
  }
  return fallback;
}

// ---------------------------------------------------------------------------
// Subcommand implementations (each returns the process exit code)
// ---------------------------------------------------------------------------

int run_degree(RunContext& ctx, const SetArgs& sa, bool with_field, const std::string& dot_path) {
  auto [G, S] = sa.resolve(&ctx.request);
  ctx.request["field"] = with_field;
  caydeg::DegreeResult r = caydeg::algebraic_degree(G, S, with_field);
  if (!dot_path.empty()) {
    caydeg::Graph g = caydeg::build_cayley(G, S);
    if (handle_dot(dot_path, g)) return 0;
  }
  json payload;
  payload["connection_set"] = connection_set_json(G, S);
  payload["result"] = degree_json(r);
  emit(ctx, std::move(payload));
  return 0;
}

int run_spectrum(RunContext& ctx, const SetArgs& sa, const std::string& dot_path) {
  auto [G, S] = sa.resolve(&ctx.request);
  caydeg::Graph g = caydeg::build_cayley(G, S);
  if (handle_dot(dot_path, g)) return 0;
  caydeg::IntPoly p = caydeg::char_poly(g);
  caydeg::IntPoly sf = caydeg::squarefree_part(p);
  auto factors = caydeg::factor_over_Z(sf);
  caydeg::SplittingFieldInfo info = caydeg::splitting_field_from_factors(factors);

  json payload;
  payload["connection_set"] = connection_set_json(G, S);
  json spec;
  spec["vertices"] = g.n;
  spec["valency"] = static_cast<long>(S.size());
  spec["connected"] = caydeg::is_connected(g);
  spec["char_poly"] = poly_json(p);
  spec["char_poly_display"] = p.str();
  spec["squarefree_part"] = poly_json(sf);
  json fl = json::array();
  for (const auto& [f, mult] : factors) {
    json e;
    e["coeffs"] = poly_json(f);
    e["degree"] = f.degree();
    e["multiplicity"] = mult;
    e["display"] = f.str();
    fl.push_back(std::move(e));
  }
  spec["irreducible_factors"] = std::move(fl);
  spec["distinct_eigenvalues"] = sf.degree();
  spec["field"] = field_json(info);
  payload["spectrum"] = std::move(spec);
  emit(ctx, std::move(payload));
  return 0;
}

int run_construct_p_integral(RunContext& ctx, long n, long p, const std::string& dot_path) {
  ctx.request["n"] = n;
  ctx.request["p"] = p;
  caydeg::CirculantResult r = caydeg::construct_p_integral_circulant(n, p);
  caydeg::FiniteGroup G = caydeg::build_cyclic(n);
  if (!dot_path.empty() && handle_dot(dot_path, caydeg::build_cayley(G, r.set))) return 0;
  json payload;
  payload["connection_set"] = connection_set_json(G, r.set);
  payload["construction"] =
      json{{"kind", "p-integral-circulant"}, {"n", r.n},      {"p", r.p},
           {"unit_subgroup", r.K},           {"set", r.set},  {"valency", r.set.size()}};
  payload["result"] = degree_json(r.degree);
  emit(ctx, std::move(payload));
  return 0;
}

int run_construct_orbit(RunContext& ctx, long n, long d, long k, const std::string& units_csv,
                        const std::string& dot_path) {
  ctx.request["n"] = n;
  ctx.request["d"] = d;
  ctx.request["k"] = k;
  ctx.request["units"] = units_csv;
  std::vector<long> K;
  std::stringstream ss(units_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    caydeg::require(!tok.empty(), "empty unit in --units list");
    K.push_back(std::stol(tok));
  }
  caydeg::OrbitSetResult r = caydeg::orbit_set(n, d, k, K);
  caydeg::FiniteGroup G = caydeg::build_cyclic(n);
  if (!dot_path.empty() && handle_dot(dot_path, caydeg::build_cayley(G, r.set))) return 0;
  json payload;
  payload["connection_set"] = connection_set_json(G, r.set);
  payload["construction"] = json{{"kind", "unit-orbit"},
                                 {"n", r.n},
                                 {"d", r.d},
                                 {"k", r.k},
                                 {"pointwise_stabilizer", r.Td},
                                 {"unit_index", r.unit_index},
                                 {"inverse_closed", r.inverse_closed},
                                 {"generating", r.generating},
                                 {"set", r.set}};
  payload["result"] = degree_json(r.degree);
  emit(ctx, std::move(payload));
  return 0;
}

int run_construct_product(RunContext& ctx, const std::string& g1, const std::string& s1,
                          const std::string& g2, const std::string& s2, int form,
                          const std::string& dot_path) {
  ctx.request["group1"] = g1;
  ctx.request["set1"] = s1;
  ctx.request["group2"] = g2;
  ctx.request["set2"] = s2;
  ctx.request["form"] = form;
  caydeg::FiniteGroup G1 = caydeg::parse_group_spec(g1);
  caydeg::FiniteGroup G2 = caydeg::parse_group_spec(g2);
  std::vector<int> S1 = caydeg::parse_connection_set(G1, s1);
  std::vector<int> S2 = caydeg::parse_connection_set(G2, s2);
  caydeg::ProductResult r = caydeg::product_connection_set(G1, S1, G2, S2, form);
  if (!dot_path.empty() && handle_dot(dot_path, caydeg::build_cayley(r.group, r.set))) return 0;
  json payload;
  payload["connection_set"] = connection_set_json(r.group, r.set);
  payload["construction"] = json{{"kind", "product-set"},
                                 {"form", r.form},
                                 {"valency", r.valency},
                                 {"connected", r.connected}};
  payload["result"] = degree_json(r.degree);
  emit(ctx, std::move(payload));
  return 0;
}

int run_construct_lift(RunContext& ctx, const SetArgs& sa, const std::string& dot_path) {
  auto [G, S] = sa.resolve(&ctx.request);
  caydeg::LiftResult r = caydeg::odd_valency_lift(G, S);
  if (!dot_path.empty() && handle_dot(dot_path, caydeg::build_cayley(G, r.set))) return 0;
  json payload;
  payload["connection_set"] = connection_set_json(G, r.set);
  payload["construction"] = json{{"kind", "odd-valency-lift"},
                                 {"added", G.names[static_cast<size_t>(r.added)]},
                                 {"valency", r.set.size()}};
  payload["result"] = degree_json(r.degree);
  emit(ctx, std::move(payload));
  return 0;
}

int run_verify(RunContext& ctx, const std::string& theorem, std::optional<long> max_order,
               const std::string& group_spec, int k) {
  ctx.request["theorem"] = theorem;
  caydeg::VerificationReport R;
  if (theorem == "G2") {
    long mo = max_order.value_or(100);
    ctx.request["max_order"] = mo;
    R = caydeg::verify_G2(mo);
  } else if (theorem == "G3") {
    long mo = max_order.value_or(40);
    ctx.request["max_order"] = mo;
    R = caydeg::verify_G3(mo);
  } else if (theorem == "G4") {
    long mo = max_order.value_or(60);
    ctx.request["max_order"] = mo;
    R = caydeg::verify_G4(mo);
  } else if (theorem == "G5") {
    long mo = max_order.value_or(30);
    ctx.request["max_order"] = mo;
    R = caydeg::verify_G5(mo);
  } else if (theorem == "B2") {
    R = caydeg::verify_B2_theorem();
  } else if (theorem == "B3") {
    R = caydeg::verify_B3_theorem();
  } else if (theorem == "Z20" || theorem == "z20") {
    R = caydeg::verify_z20_example();
  } else if (theorem == "Bk") {
    caydeg::require(!group_spec.empty() && k >= 2,
                    "verify Bk needs --group and --k (k >= 2)");
    ctx.request["group"] = group_spec;
    ctx.request["k"] = k;
    caydeg::FiniteGroup G = caydeg::parse_group_spec(group_spec);
    R = caydeg::verify_Bk(G, k);
  } else {
    caydeg::fail(caydeg::errc::validation,
                 "unknown theorem '" + theorem +
                     "' (expected G2, G3, G4, G5, B2, B3, Z20, or Bk)");
  }
  json payload;
  payload["report"] = report_json(R);
  emit(ctx, std::move(payload), R.str());
  return R.match ? 0 : 1;
}

int run_enumerate_sets(RunContext& ctx, const std::string& group_spec, int valency,
                       bool inverse_closed, bool generating, long limit, bool with_degrees) {
  ctx.request["group"] = group_spec;
  ctx.request["valency"] = valency;
  ctx.request["inverse_closed"] = inverse_closed;
  ctx.request["generating"] = generating;
  ctx.request["limit"] = limit;
  ctx.request["degrees"] = with_degrees;
  caydeg::FiniteGroup G = caydeg::parse_group_spec(group_spec);
  json sets = json::array();
  long count = 0;
  bool partial = false;
  caydeg::enumerate_connection_sets(G, valency, inverse_closed, generating,
                                    [&](const std::vector<int>& S) {
                                      if (count >= limit) {
                                        partial = true;
                                        return false;
                                      }
                                      ++count;
                                      json e;
                                      e["set"] = S;
                                      e["set_members"] = caydeg::set_to_words(G, S);
                                      if (with_degrees)
                                        e["degree"] = degree_json(caydeg::algebraic_degree(G, S));
                                      sets.push_back(std::move(e));
                                      return true;
                                    });
  json payload;
  payload["group_spec"] = G.spec;
  payload["count"] = count;
  payload["partial"] = partial;
  payload["sets"] = std::move(sets);
  if (partial) {
    payload["note"] = "enumeration budget of " + std::to_string(limit) +
                      " sets exhausted; raise --limit or CAYDEG_MAX_SETS";
  }
  emit(ctx, std::move(payload));
  return partial ? 3 : 0;
}

int run_enumerate_groups(RunContext& ctx, long max_order) {
  ctx.request["abelian_max_order"] = max_order;
  json groups = json::array();
  for (const caydeg::FiniteGroup& G : caydeg::enumerate_abelian_groups(max_order))
    groups.push_back(json{{"spec", G.spec}, {"order", G.n}, {"exponent", G.exponent}});
  json payload;
  payload["count"] = groups.size();
  payload["groups"] = std::move(groups);
  emit(ctx, std::move(payload));
  return 0;
}

int run_bound(RunContext& ctx, long k, long delta) {
  ctx.request["k"] = k;
  ctx.request["delta"] = delta;
  json payload;
  payload["k"] = k;
  payload["delta"] = delta;
  payload["distinct_eigenvalue_bound"] = json_int(caydeg::distinct_eigenvalue_bound(k, delta));
  bool partial = false;
  try {
    payload["order_bound"] = json_int(caydeg::order_bound(k, delta));
  } catch (const caydeg::error& e) {
    if (e.code() != caydeg::errc::cap_exceeded) throw;
    payload["order_bound"] = nullptr;
    payload["note"] = e.what();
    partial = true;
  }
  payload["partial"] = partial;
  emit(ctx, std::move(payload));
  return partial ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebraic degrees of Cayley graphs over finite groups"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunContext ctx;
  int workers = 0;
  app.add_option("--format", ctx.format, "output format: json (default) or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--workers", workers, "parallelism width for verification scans");
  long seed = 0;
  app.add_option("--seed", seed, "seed recorded for sampled suites");

  // degree
  auto* cmd_degree = app.add_subcommand("degree", "algebraic degree of Cay(group, set)");
  SetArgs degree_args;
  degree_args.attach(cmd_degree);
  bool with_field = true;
  cmd_degree->add_flag("--field,!--no-field", with_field,
                       "attach the splitting-field certificate (default on)");
  std::string degree_dot;
  cmd_degree->add_option("--dot", degree_dot, "write the Cayley graph in DOT ('-': stdout)");

  // spectrum
  auto* cmd_spectrum =
      app.add_subcommand("spectrum", "exact characteristic polynomial and splitting field");
  SetArgs spectrum_args;
  spectrum_args.attach(cmd_spectrum);
  std::string spectrum_dot;
  cmd_spectrum->add_option("--dot", spectrum_dot, "write the Cayley graph in DOT ('-': stdout)");

  // construct
  auto* cmd_construct = app.add_subcommand("construct", "k-integral Cayley graph constructions");
  cmd_construct->require_subcommand(1);
  auto* cc_pint = cmd_construct->add_subcommand(
      "p-integral", "circulant with degree exactly p and valency phi(n)/p");
  long pint_n = 0, pint_p = 0;
  cc_pint->add_option("--n", pint_n, "cyclic group order")->required();
  cc_pint->add_option("--p", pint_p, "prime dividing phi(n)")->required();
  std::string pint_dot;
  cc_pint->add_option("--dot", pint_dot, "write the Cayley graph in DOT ('-': stdout)");

  auto* cc_orbit =
      cmd_construct->add_subcommand("orbit", "unit-subgroup orbit set over a cyclic group");
  long orb_n = 0, orb_d = 1, orb_k = 1;
  std::string orb_units, orb_dot;
  cc_orbit->add_option("--n", orb_n, "cyclic group order")->required();
  cc_orbit->add_option("--d", orb_d, "layer: gcd(k, n)")->required();
  cc_orbit->add_option("--k", orb_k, "orbit seed exponent")->required();
  cc_orbit->add_option("--units", orb_units, "comma-separated unit subgroup K")->required();
  cc_orbit->add_option("--dot", orb_dot, "write the Cayley graph in DOT ('-': stdout)");

  auto* cc_prod = cmd_construct->add_subcommand(
      "product", "product set over G1 x G2 preserving the first factor's degree");
  std::string prod_g1, prod_s1, prod_g2, prod_s2, prod_dot;
  int prod_form = 1;
  cc_prod->add_option("--group1", prod_g1, "first group spec")->required();
  cc_prod->add_option("--set1", prod_s1, "first connection set")->required();
  cc_prod->add_option("--group2", prod_g2, "second group spec")->required();
  cc_prod->add_option("--set2", prod_s2, "second connection set (integral factor)")->required();
  cc_prod->add_option("--form", prod_form, "product form 1..4")->required();
  cc_prod->add_option("--dot", prod_dot, "write the Cayley graph in DOT ('-': stdout)");

  auto* cc_lift = cmd_construct->add_subcommand(
      "lift", "add a central involution: odd valency, same splitting field");
  SetArgs lift_args;
  lift_args.attach(cc_lift);
  std::string lift_dot;
  cc_lift->add_option("--dot", lift_dot, "write the Cayley graph in DOT ('-': stdout)");

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "reproduce a classification theorem (G2, G3, G4, G5, B2, B3, Z20, Bk)");
  std::string verify_theorem, verify_group;
  std::optional<long> verify_max_order;
  int verify_k = 0;
  cmd_verify->add_option("theorem", verify_theorem, "theorem id")->required();
  long verify_mo_raw = -1;
  cmd_verify->add_option("--max-order", verify_mo_raw, "scan bound (theorem-specific default)");
  cmd_verify->add_option("--group", verify_group, "group spec (Bk only)");
  cmd_verify->add_option("--k", verify_k, "valency bound k (Bk only)");

  // enumerate
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "list connection sets of a group, or abelian groups up to an order");
  std::string enum_group;
  int enum_valency = 0;
  bool enum_inverse_closed = true, enum_generating = false, enum_degrees = false;
  bool enum_abelian = false;
  long enum_max_order = 0;
  long enum_limit = env_long("CAYDEG_MAX_SETS", 100000);
  cmd_enum->add_option("--group", enum_group, "group spec (set mode)");
  cmd_enum->add_option("--valency", enum_valency, "connection-set size (set mode)");
  cmd_enum->add_flag("--inverse-closed,!--no-inverse-closed", enum_inverse_closed,
                     "restrict to inverse-closed sets (default on)");
  cmd_enum->add_flag("--generating", enum_generating, "restrict to generating sets");
  cmd_enum->add_flag("--degrees", enum_degrees, "attach the degree of every set");
  cmd_enum->add_option("--limit", enum_limit,
                       "set budget; exceeding it flags the report partial (exit 3)");
  cmd_enum->add_flag("--abelian", enum_abelian, "group mode: list abelian isomorphism classes");
  cmd_enum->add_option("--max-order", enum_max_order, "largest order (group mode)");

  // bound
  auto* cmd_bound = app.add_subcommand(
      "bound", "distinct-eigenvalue and order bounds for degree k, max valency delta");
  long bound_k = 0, bound_delta = 0;
  cmd_bound->add_option("--k", bound_k, "algebraic degree")->required();
  cmd_bound->add_option("--delta", bound_delta, "maximum valency")->required();

  // Global flags (--format, --workers, --seed) remain valid after a
  // subcommand name.
  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e); // prints the positioned message to stderr
    return 2;
  }

  if (workers > 0) {
    setenv("CAYDEG_WORKERS", std::to_string(workers).c_str(), 1);
  }
  ctx.request["format"] = ctx.format;
  if (workers > 0) ctx.request["workers"] = workers;
  if (seed != 0) ctx.request["seed"] = seed;
  if (verify_mo_raw > 0) verify_max_order = verify_mo_raw;

  try {
    if (cmd_degree->parsed()) {
      ctx.request["subcommand"] = "degree";
      return run_degree(ctx, degree_args, with_field, degree_dot);
    }
    if (cmd_spectrum->parsed()) {
      ctx.request["subcommand"] = "spectrum";
      return run_spectrum(ctx, spectrum_args, spectrum_dot);
    }
    if (cmd_construct->parsed()) {
      if (cc_pint->parsed()) {
        ctx.request["subcommand"] = "construct p-integral";
        return run_construct_p_integral(ctx, pint_n, pint_p, pint_dot);
      }
      if (cc_orbit->parsed()) {
        ctx.request["subcommand"] = "construct orbit";
        return run_construct_orbit(ctx, orb_n, orb_d, orb_k, orb_units, orb_dot);
      }
      if (cc_prod->parsed()) {
        ctx.request["subcommand"] = "construct product";
        return run_construct_product(ctx, prod_g1, prod_s1, prod_g2, prod_s2, prod_form,
                                     prod_dot);
      }
      ctx.request["subcommand"] = "construct lift";
      return run_construct_lift(ctx, lift_args, lift_dot);
    }
    if (cmd_verify->parsed()) {
      ctx.request["subcommand"] = "verify";
      return run_verify(ctx, verify_theorem, verify_max_order, verify_group, verify_k);
    }
    if (cmd_enum->parsed()) {
      ctx.request["subcommand"] = "enumerate";
      if (enum_abelian) {
        caydeg::require(enum_max_order > 0, "group mode needs --max-order");
        caydeg::require(enum_group.empty(), "--abelian and --group are mutually exclusive");
        return run_enumerate_groups(ctx, enum_max_order);
      }
      caydeg::require(!enum_group.empty() && enum_valency > 0,
                      "set mode needs --group and --valency (or use --abelian --max-order)");
      return run_enumerate_sets(ctx, enum_group, enum_valency, enum_inverse_closed,
                                enum_generating, enum_limit, enum_degrees);
    }
    if (cmd_bound->parsed()) {
      ctx.request["subcommand"] = "bound";
      return run_bound(ctx, bound_k, bound_delta);
    }
  } catch (const caydeg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    json payload;
    const char* code = e.code() == caydeg::errc::validation      ? "validation"
                       : e.code() == caydeg::errc::cap_exceeded  ? "cap_exceeded"
                                                                 : "internal";
    payload["error"] = json{{"code", code}, {"message", e.what()}};
    emit(ctx, std::move(payload), std::string("error: ") + e.what());
    switch (e.code()) {
    case caydeg::errc::validation: return 2;
    case caydeg::errc::cap_exceeded: return 3;
    case caydeg::errc::internal: return 4;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
