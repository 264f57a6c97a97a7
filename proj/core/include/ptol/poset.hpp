#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptol/bool_matrix.hpp"

namespace ptol {

// Elements are identified by their position in the label list; labels are
// presentation only. An ElementSet is a strictly ascending index list.
using ElementSet = std::vector<int>;

bool set_contains(const ElementSet& s, int x);
bool set_is_subset(const ElementSet& a, const ElementSet& b);

// Finite partially ordered set over an explicit carrier. The order matrix is
// always reflexive, antisymmetric and transitive; both factory functions
// reject anything else.
class Poset {
 public:
  // Builds the reflexive-transitive closure of a cover list given as label
  // pairs (low, high). Throws std::invalid_argument on duplicate labels,
  // unknown labels, or covers whose closure would create a cycle.
  static Poset from_covers(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& covers);

  // Adopts a full order matrix, validating the poset axioms.
  static Poset from_leq(std::vector<std::string> labels, BoolMatrix leq);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(std::string_view label) const;

  const BoolMatrix& matrix() const { return leq_; }
  bool leq(int a, int b) const { return leq_.get(a, b); }
  bool less(int a, int b) const { return a != b && leq_.get(a, b); }

  // Least upper bound; absent when the set of upper bounds has no minimum.
  std::optional<int> join(int x, int y) const;
  // Greatest lower bound, dually.
  std::optional<int> meet(int x, int y) const;

  // [a, b] = {x : a <= x <= b}. Throws std::invalid_argument unless a <= b.
  ElementSet interval(int a, int b) const;

  // Every pair of members has a lower and an upper bound inside the set.
  bool is_directed(const ElementSet& s) const;
  // Contains every interval between comparable members.
  bool is_convex(const ElementSet& s) const;

  bool is_lattice() const;

  // Every interval [a, b], viewed as a poset in its own right, is
  // complemented: each member x has a y in the interval with join and meet
  // (taken within the interval sub-poset) equal to b and a.
  bool is_relatively_complemented() const;

  // Member below (resp. above) every member of s, if one exists.
  std::optional<int> bottom_of(const ElementSet& s) const;
  std::optional<int> top_of(const ElementSet& s) const;

  ElementSet carrier() const;

  // Sub-poset induced on s; labels are carried over.
  Poset restricted_to(const ElementSet& s) const;

  // Relabeling: element i of the result is element perm[i] of *this.
  Poset permuted(const std::vector<int>& perm) const;

  // Cover relation (transitive reduction), ascending by (low, high).
  std::vector<std::pair<int, int>> cover_pairs() const;

  // Minimal order matrix over all relabelings, as row-major '0'/'1' text.
  // Two posets are isomorphic iff their canonical forms agree. The search is
  // a full permutation scan, so the carrier must stay small; throws
  // std::invalid_argument when size() > bound.
  std::string canonical_form(int bound = 8) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  Poset(std::vector<std::string> labels, BoolMatrix leq)
      : labels_(std::move(labels)), leq_(std::move(leq)) {}

  std::vector<std::string> labels_;
  BoolMatrix leq_;
};

}  // namespace ptol
