#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ptol/bool_matrix.hpp"
#include "ptol/poset.hpp"
#include "ptol/relation.hpp"

namespace ptol {

// All posets on n elements up to isomorphism, labelled "0".."n-1", sorted by
// canonical form.  Sizes above `bound` are rejected (the enumeration walks
// 2^(n(n-1)/2) candidate relations).
std::vector<Poset> all_posets(int n, int bound = 6);

// A complete list of relations of one kind on a fixed poset, together with
// their pairwise inclusions.
struct ToleranceFamily {
  Poset poset;
  std::vector<Relation> members;  // sorted by (pair count, matrix bits)
  BoolMatrix inclusion;           // inclusion.get(i, j) <=> members[i] ⊆ members[j]
};

ToleranceFamily all_tolerances(const Poset& p, int bound = 6);
ToleranceFamily all_congruences(const Poset& p, int bound = 10);

// The family ordered by inclusion, as a poset with labels "T0", "T1", ...
Poset family_poset(const ToleranceFamily& f);

// Indices of the minimal members that include both members[a] and members[b].
std::vector<int> minimal_upper_bounds(const ToleranceFamily& f, int a, int b);

// ---------------------------------------------------------------------------
// Exhaustive verification sweep
// ---------------------------------------------------------------------------

// Every machine-checkable claim the sweep knows, in report order.
const std::vector<std::string>& all_claims();

inline constexpr int kDefaultWitnessCap = 20;

struct ClaimStats {
  std::int64_t checked = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
};

struct SweepFailure {
  std::string claim;
  std::string poset_canonical;  // canonical order-matrix bits
  std::string poset;            // elements/covers, one line
  std::string relation;         // clique description, or "-" for poset-level claims
  std::string detail;
};

// Measured but never asserted: a property whose status the sweep records
// without treating a violation as a failure.
struct SweepObservation {
  std::int64_t checked = 0;
  std::int64_t violations = 0;
};

struct VerificationReport {
  int max_n = 0;
  std::vector<std::string> claims;  // active claims, sorted
  int witness_cap = kDefaultWitnessCap;
  std::vector<std::int64_t> posets_per_n;  // posets_per_n[k] = count at size k+1
  std::map<std::string, ClaimStats> stats;
  std::map<std::string, SweepObservation> observations;
  std::vector<SweepFailure> failures;  // capped at witness_cap

  std::int64_t total_failures() const;
  bool all_passed() const;
};

// Checks every active claim against every tolerance on every poset of size
// 1..max_n (max_n <= 6).  An empty claim list means all of them.  `jobs`
// worker threads split the posets of each size; the report is byte-identical
// for any job count.
VerificationReport verify_theorems(int max_n,
                                   std::vector<std::string> claims = {},
                                   int jobs = 1,
                                   int witness_cap = kDefaultWitnessCap);

std::string report_json(const VerificationReport& report);
std::string report_summary(const VerificationReport& report);

}  // namespace ptol
