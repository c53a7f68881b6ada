#pragma once

// Desk-scale verification of the finite classifications: 2-integral Cayley
// graphs of valency 2..5 over abelian groups, the B_k membership scans with
// their order-250 witnesses, the Z20 worked example, and the eigenvalue-count
// and order bounds.  Reports carry the found/expected diff under a canonical
// normalization: invariant-factor group specs plus sorted element words.

#include "caydeg/construct.hpp"
#include "caydeg/degree.hpp"
#include "caydeg/group.hpp"

#include <functional>
#include <optional>

namespace caydeg {

// Upper bound on the number of distinct eigenvalues of a graph with
// algebraic degree k and maximum degree delta: sum over d | k of the count
// of integer coefficient vectors bounded by the binomial-scaled powers of
// delta.  Grows fast; exact integer.
Int distinct_eigenvalue_bound(long k, long delta);

// Moore bound at diameter distinct_eigenvalue_bound(k, delta) - 1.
Int order_bound(long k, long delta);

struct BkCounterexample {
  std::vector<int> set;
  std::string words;
  DegreeResult degree;
  std::vector<IntPoly> factors; // irreducible factors of the char poly's squarefree part
};

struct VerificationReport {
  std::string theorem;
  std::string search_space;
  std::vector<std::string> found;    // canonical entries, sorted
  std::vector<std::string> expected; // canonical entries within the scan bound, sorted
  std::vector<std::string> missing;  // expected but not found
  std::vector<std::string> extra;    // found but not expected
  std::vector<std::string> notes;
  long long positives_checked = 0; // family/witness instances verified directly
  long long sets_scanned = 0;
  bool match = false;
  bool partial = false; // a budget stopped the scan early
  double seconds = 0.0;
  std::optional<BkCounterexample> counterexample;
  std::string str() const;
};

// One abelian group per isomorphism class of order <= max_order (trivial
// group included), as invariant-factor direct products ("Z12xZ2"), ordered by
// order then cyclic-first.
std::vector<FiniteGroup> enumerate_abelian_groups(long max_order);

// The invariant-factor twin of an abelian group together with the index map
// realizing one isomorphism onto it.
FiniteGroup canonical_abelian(const FiniteGroup& G, std::vector<int>* index_map);

// All size-`valency` subsets of G minus the identity, lexicographically
// ascending as sorted index lists, filtered by the two flags; yield returns
// false to stop early.  Inverse-closed enumeration walks involution/pair
// blocks directly instead of filtering.
void enumerate_connection_sets(const FiniteGroup& G, int valency, bool require_inverse_closed,
                               bool require_generating,
                               const std::function<bool(const std::vector<int>&)>& yield);
std::vector<std::vector<int>> connection_sets(const FiniteGroup& G, int valency,
                                              bool require_inverse_closed,
                                              bool require_generating);

// Classification scans.  Each expands the claimed families into explicit
// canonical sets (closing over the automorphism group inside the scan bound),
// verifies every instance 2-integral by formula plus spectra, scans all
// connected sets of the right valency underneath the bound, and diffs.
VerificationReport verify_G2(long max_n);
VerificationReport verify_G3(long max_order);
VerificationReport verify_G4(long max_order);
VerificationReport verify_G5(long max_order);

// Scans every inverse-closed S with 2 <= |S| <= k (ascending size, then
// lexicographic) for a set that is not 2-integral; match means none exists.
VerificationReport verify_Bk(const FiniteGroup& G, int k);

// Membership theorems for valency bounds 2 and 3: positive groups verified
// exhaustively, negative groups through their witness subgroups.
VerificationReport verify_B2_theorem();
VerificationReport verify_B3_theorem();

// The Z20 worked example: six 2-integral orbit sets, plus the integral
// full-class sets.
VerificationReport verify_z20_example();

// Chunked map over [0, n): fn(i) for every i, executed on `width` threads
// over contiguous chunks.  Results must be written to index-addressed slots
// by the caller, which keeps every run order-independent.
void parallel_chunks(long n, int width, const std::function<void(long)>& fn);

// Worker width: CAYDEG_WORKERS environment override, else 1.
int default_worker_width();

} // namespace caydeg
