#pragma once

// Algebraic degrees of Cayley graphs.  Formula paths (unit-group stabilizers
// over the group order or exponent) cover abelian groups and conjugation-
// closed sets; a cyclic reduction covers sets inside one bracket class; the
// exact spectral machinery covers everything else.  A dispatcher picks the
// cheapest valid path after first shrinking to the generated subgroup, which
// leaves the splitting field unchanged.

#include "caydeg/graph.hpp"
#include "caydeg/group.hpp"
#include "caydeg/spectra.hpp"

#include <optional>

namespace caydeg {

struct DegreeResult {
  long degree = 1;
  bool lower_bound = false; // degree is only a lower bound (deep spectral factor)
  std::string path;         // abelian-formula | normal-formula |
                            // bracket-characterization | spectral | characters
  std::vector<long> stabilizer; // unit-group stabilizer H when a formula ran
  long stab_modulus = 0;        // modulus the stabilizer units live in (0: none)
  std::optional<SplittingFieldInfo> field;
};

// phi(|G|) / |H| with H = {k coprime to |G| : S^k = S}.  Also evaluates the
// exponent-based variant and insists the two agree.
DegreeResult degree_abelian_formula(const FiniteGroup& G, const std::vector<int>& S);

// phi(exponent) / |H'| with H' = {k coprime to exp(G) : S^k = S}; S must be
// conjugation-closed (rejected otherwise, naming a witness conjugator).
DegreeResult degree_normal_formula(const FiniteGroup& G, const std::vector<int>& S);

// Degree of Cay(G, S) for S inside the bracket class of g, computed on the
// cyclic subgroup <g> (same splitting field).
DegreeResult degree_bracket_subset(const FiniteGroup& G, int g, const std::vector<int>& S);

// True iff S is the orbit of any of its members under an index-2 subgroup of
// the units mod o(g) with |S| = phi(o(g))/2 — equivalently, iff Cay(<g>, S)
// has degree exactly 2.
bool is_half_orbit(const FiniteGroup& G, int g, const std::vector<int>& S);

struct SetPart {
  int rep = -1;             // least member of the part
  std::vector<int> members; // S intersected with one bracket class, sorted
  DegreeResult degree;      // degree of Cay(G, members)
};

// Splits a conjugation-closed set along bracket classes and computes each
// part's degree; asserts that every part degree divides the whole degree.
std::vector<SetPart> decompose_normal_set(const FiniteGroup& G, const std::vector<int>& S);

// Necessary structure for 2-integrality of a conjugation-closed set: every
// bracket-class part must be a full class or a half orbit, with at least one
// half orbit present.
struct PartStructure {
  enum class Branch { full_class, half_orbit, neither };
  struct Entry {
    int rep = -1;
    std::string rep_word;
    long part_size = 0;
    Branch branch = Branch::neither;
  };
  std::vector<Entry> parts;
  bool all_parts_structured = false; // every part hit full_class or half_orbit
  bool has_half_orbit = false;
  bool consistent = false;       // both of the above
  bool claim_consistent = false; // the caller's 2-integrality claim survives
};
PartStructure two_integral_part_structure(const FiniteGroup& G, const std::vector<int>& S,
                                          bool claim_2_integral);

// Path dispatcher.  Always reduces to the generated subgroup first, then:
// abelian formula, normal formula, bracket reduction, exact spectra — in that
// order of preference.  with_field additionally names the splitting field
// (via character sums on abelian groups, spectra otherwise) and cross-checks
// its degree against the formula result.
DegreeResult algebraic_degree(const FiniteGroup& G, const std::vector<int>& S,
                              bool with_field = false);

} // namespace caydeg
