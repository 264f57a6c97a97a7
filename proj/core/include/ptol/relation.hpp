#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptol/bool_matrix.hpp"
#include "ptol/poset.hpp"

namespace ptol {

// Reflexive symmetric binary relation over a fixed-size carrier. Both
// properties are enforced by construction: relate() always inserts
// symmetrically and the diagonal can never be cleared.
class Relation {
 public:
  Relation() = default;

  static Relation diagonal(int n);
  static Relation full(int n);

  // Diagonal plus the square of every clique. Member indices must lie in
  // [0, n); cliques may overlap and may be singletons.
  static Relation from_cliques(int n, const std::vector<ElementSet>& cliques);

  // Adopts a pair matrix, rejecting anything not reflexive and symmetric.
  static Relation from_matrix(BoolMatrix pairs);

  int size() const { return pairs_.size(); }
  bool related(int a, int b) const { return pairs_.get(a, b); }
  void relate(int a, int b) {
    pairs_.set(a, b, true);
    pairs_.set(b, a, true);
  }

  bool is_diagonal() const;
  bool is_full() const;
  bool is_transitive() const;
  bool subset_of(const Relation& other) const {
    return pairs_.is_subset_of(other.pairs_);
  }

  static Relation intersection(const Relation& a, const Relation& b);

  // All related ordered pairs, diagonal included, ascending by (first,
  // second). This is the iteration order behind witness minimality.
  std::vector<std::pair<int, int>> ordered_pairs() const;

  const BoolMatrix& matrix() const { return pairs_; }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  explicit Relation(BoolMatrix pairs) : pairs_(std::move(pairs)) {}

  BoolMatrix pairs_;
};

// A maximal set of pairwise related elements.
using Block = ElementSet;

// Evidence that one of the four compatibility conditions fails: the condition
// number, the lexicographically least violating element tuple, and a short
// reason code. Tuple shapes: conditions 1 and 2 carry (x, y, z, u), condition
// 3 carries (x, y, z), condition 4 carries (x, y).
struct ConditionWitness {
  int condition = 0;
  std::vector<int> elements;
  std::string reason;
};

// Checks one of the four conditions a reflexive symmetric relation must meet
// to be a tolerance:
//   1. related pairs are closed under componentwise joins, where they exist;
//   2. dually for meets;
//   3. for related (x,y),(y,z) with the whole relation proper, some u below
//      x,y,z and some v above x,y,z are related to y;
//   4. every related (x,y) of a proper relation has a related bound pair
//      (z,u), z below x,y and u above x,y, absorbing every common neighbour
//      v of x and y: (v,z),(v,u) are then related too.
// Returns the least witness, or nullopt when the condition holds.
std::optional<ConditionWitness> check_condition(const Poset& p,
                                                const Relation& t,
                                                int condition);

// First failing condition in order 1..4, if any.
std::optional<ConditionWitness> tolerance_violation(const Poset& p,
                                                    const Relation& t);

bool is_tolerance(const Poset& p, const Relation& t);

// Tolerance that is also transitive.
bool is_congruence(const Poset& p, const Relation& t);

// Maximal cliques of the relation graph, each sorted ascending, the list
// sorted lexicographically. Works for any reflexive symmetric relation; for
// tolerances these are exactly the blocks and their squares reconstruct the
// relation.
std::vector<Block> blocks(const Relation& t);

}  // namespace ptol
