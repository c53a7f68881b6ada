#include "caydeg/degree.hpp"

#include "caydeg/numbers.hpp"

#include <algorithm>

namespace caydeg {

namespace {

void validate_set(const FiniteGroup& G, const std::vector<int>& S) {
  require(!S.empty(), "connection set is empty");
  for (int s : S) {
    require(s >= 0 && s < G.n, "connection set element out of range");
    require(s != 0, "connection set must not contain the identity");
  }
  require(std::is_sorted(S.begin(), S.end()), "connection set must be sorted");
  require(std::adjacent_find(S.begin(), S.end()) == S.end(),
          "connection set must not repeat elements");
}

// Stabilizer {k in units mod m : S^k = S} by direct filtration.
std::vector<long> power_stabilizer(const FiniteGroup& G, const std::vector<int>& S, long m) {
  const UnitGroup& U = unit_group(m);
  std::vector<long> stab;
  for (long k : U.elements)
    if (power_map(G, S, k) == S) stab.push_back(k);
  check_internal(!stab.empty() && stab[0] == 1, "power stabilizer contains 1");
  check_internal(euler_phi(m) % static_cast<long>(stab.size()) == 0,
                 "power stabilizer is a subgroup");
  return stab;
}

} // namespace

DegreeResult degree_abelian_formula(const FiniteGroup& G, const std::vector<int>& S) {
  require(G.abelian, "the order-based degree formula needs an abelian group");
  validate_set(G, S);

  std::vector<long> H = power_stabilizer(G, S, G.n);
  long deg = euler_phi(G.n) / static_cast<long>(H.size());

  // Exponent-based variant: S^k only depends on k mod exp(G), and reduction
  // mod exp(G) maps units onto units, so the two quotients must agree.
  if (G.exponent != G.n) {
    std::vector<long> Hexp = power_stabilizer(G, S, G.exponent);
    long deg_exp = euler_phi(G.exponent) / static_cast<long>(Hexp.size());
    check_internal(deg == deg_exp, "order-based and exponent-based degrees agree");
  }

  DegreeResult r;
  r.degree = deg;
  r.path = "abelian-formula";
  r.stabilizer = std::move(H);
  r.stab_modulus = G.n;
  return r;
}

DegreeResult degree_normal_formula(const FiniteGroup& G, const std::vector<int>& S) {
  validate_set(G, S);
  NormalityCertificate cert = is_normal_subset(G, S);
  if (!cert.normal)
    fail(errc::validation, "connection set is not conjugation-closed: " +
                               G.names[cert.element] + " conjugated by " +
                               G.names[cert.conjugator] + " leaves the set");

  std::vector<long> H = power_stabilizer(G, S, G.exponent);
  DegreeResult r;
  r.degree = euler_phi(G.exponent) / static_cast<long>(H.size());
  r.path = "normal-formula";
  r.stabilizer = std::move(H);
  r.stab_modulus = G.exponent;
  return r;
}

DegreeResult degree_bracket_subset(const FiniteGroup& G, int g, const std::vector<int>& S) {
  validate_set(G, S);
  require(g > 0 && g < G.n, "bracket representative out of range");
  std::vector<int> cls = bracket_class(G, g);
  for (int s : S)
    require(std::binary_search(cls.begin(), cls.end(), s),
            "set member " + G.names[s] + " lies outside the bracket class of " + G.names[g]);

  // Same splitting field as the Cayley graph on <g>; compute there.
  std::vector<int> sub = generated_subgroup(G, {g});
  std::vector<int> to_sub;
  FiniteGroup C = subgroup_group(G, sub, &to_sub);
  std::vector<int> Ssub;
  Ssub.reserve(S.size());
  for (int s : S) Ssub.push_back(to_sub[s]);
  std::sort(Ssub.begin(), Ssub.end());

  DegreeResult r = degree_abelian_formula(C, Ssub);
  r.path = "bracket-characterization";
  return r;
}

bool is_half_orbit(const FiniteGroup& G, int g, const std::vector<int>& S) {
  DegreeResult r = degree_bracket_subset(G, g, S);
  long phi = euler_phi(G.element_order(g));
  bool half = 2 * static_cast<long>(S.size()) == phi &&
              2 * static_cast<long>(r.stabilizer.size()) == phi;
  check_internal(half == (r.degree == 2), "half-orbit structure is equivalent to degree 2");
  return half;
}

std::vector<SetPart> decompose_normal_set(const FiniteGroup& G, const std::vector<int>& S) {
  DegreeResult whole = degree_normal_formula(G, S); // also validates S
  std::vector<SetPart> parts;
  long covered = 0;
  for (const std::vector<int>& cls : omega_partition(G)) {
    SetPart part;
    std::set_intersection(S.begin(), S.end(), cls.begin(), cls.end(),
                          std::back_inserter(part.members));
    if (part.members.empty()) continue;
    part.rep = part.members[0];
    part.degree = degree_bracket_subset(G, part.rep, part.members);
    check_internal(whole.degree % part.degree.degree == 0,
                   "part degree divides the whole-set degree");
    covered += static_cast<long>(part.members.size());
    parts.push_back(std::move(part));
  }
  check_internal(covered == static_cast<long>(S.size()), "parts cover the set");
  return parts;
}

PartStructure two_integral_part_structure(const FiniteGroup& G, const std::vector<int>& S,
                                          bool claim_2_integral) {
  validate_set(G, S);
  NormalityCertificate cert = is_normal_subset(G, S);
  require(cert.normal, "part structure analysis needs a conjugation-closed set");

  PartStructure report;
  for (const std::vector<int>& cls : omega_partition(G)) {
    std::vector<int> members;
    std::set_intersection(S.begin(), S.end(), cls.begin(), cls.end(),
                          std::back_inserter(members));
    if (members.empty()) continue;
    PartStructure::Entry entry;
    entry.rep = members[0];
    entry.rep_word = G.names[entry.rep];
    entry.part_size = static_cast<long>(members.size());
    if (members == cls)
      entry.branch = PartStructure::Branch::full_class;
    else if (is_half_orbit(G, entry.rep, members))
      entry.branch = PartStructure::Branch::half_orbit;
    else
      entry.branch = PartStructure::Branch::neither;
    report.parts.push_back(std::move(entry));
  }
  report.all_parts_structured =
      std::all_of(report.parts.begin(), report.parts.end(), [](const auto& e) {
        return e.branch != PartStructure::Branch::neither;
      });
  report.has_half_orbit =
      std::any_of(report.parts.begin(), report.parts.end(), [](const auto& e) {
        return e.branch == PartStructure::Branch::half_orbit;
      });
  report.consistent = report.all_parts_structured && report.has_half_orbit;
  report.claim_consistent = !claim_2_integral || report.consistent;
  return report;
}

DegreeResult algebraic_degree(const FiniteGroup& G, const std::vector<int>& S, bool with_field) {
  validate_set(G, S);

  // Shrink to the generated subgroup: deleting the other components' copies
  // of the same graph never changes the splitting field.
  const FiniteGroup* Cp = &G;
  FiniteGroup reduced;
  std::vector<int> Sred = S;
  std::vector<int> sub = generated_subgroup(G, S);
  if (static_cast<int>(sub.size()) < G.n) {
    std::vector<int> to_sub;
    reduced = subgroup_group(G, sub, &to_sub);
    Sred.clear();
    for (int s : S) Sred.push_back(to_sub[s]);
    std::sort(Sred.begin(), Sred.end());
    Cp = &reduced;
  }
  const FiniteGroup& C = *Cp;

  DegreeResult r;
  if (C.abelian) {
    r = degree_abelian_formula(C, Sred);
  } else if (is_normal_subset(C, Sred).normal) {
    r = degree_normal_formula(C, Sred);
  } else if ([&] {
               std::vector<int> cls = bracket_class(C, Sred[0]);
               return std::includes(cls.begin(), cls.end(), Sred.begin(), Sred.end());
             }()) {
    r = degree_bracket_subset(C, Sred[0], Sred);
  } else {
    SplittingFieldInfo info = splitting_field_of(build_cayley(C, Sred));
    r.degree = info.degree;
    r.lower_bound = info.lower_bound;
    r.path = "spectral";
    r.field = std::move(info);
  }

  if (with_field && !r.field) {
    if (C.abelian) {
      CharacterDegree cd = algebraic_degree_characters(C, Sred);
      check_internal(cd.degree == r.degree, "character degree matches formula degree");
      if (cd.field) r.field = std::move(cd.field);
    }
    if (!r.field && C.n <= kSpectralCap) {
      SplittingFieldInfo info = splitting_field_of(build_cayley(C, Sred));
      if (info.lower_bound)
        check_internal(info.degree <= r.degree, "spectral lower bound respects exact degree");
      else
        check_internal(info.degree == r.degree, "spectral degree matches formula degree");
      r.field = std::move(info);
    }
  }
  return r;
}

} // namespace caydeg
