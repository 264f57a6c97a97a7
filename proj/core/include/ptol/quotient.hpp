#pragma once

#include <vector>

#include "ptol/poset.hpp"
#include "ptol/relation.hpp"

namespace ptol {

// Quotient of a poset by a tolerance: the blocks, ordered by mutual covering
// (see block_leq). The order is itself materialized as a Poset whose element
// labels are "{a,b,c}" renderings of the blocks, in block-list order.
struct QuotientPoset {
  Poset source;
  Relation tolerance;
  std::vector<Block> blocks;
  Poset poset;
};

// b1 is below b2 when every member of b1 lies below some member of b2 and
// every member of b2 lies above some member of b1. Both arguments should be
// blocks of one tolerance; the function itself accepts any nonempty sets.
bool block_leq(const Poset& p, const Block& b1, const Block& b2);

// Builds the quotient, then verifies that block_leq really is reflexive,
// antisymmetric and transitive on the blocks. A violation means the claimed
// guarantee fails on this input and raises FalsifiedGuarantee; a non-tolerance
// argument raises std::invalid_argument instead.
QuotientPoset quotient_poset(const Poset& p, const Relation& t);

// Order between the intervals [a,b] and [c,d] computed two ways: via
// block_leq on the interval sets and via the endpoint test a<=c and b<=d.
// The two routes must agree; this is a cross-check, not a shortcut. Throws
// std::invalid_argument unless a<=b and c<=d.
bool interval_block_leq(const Poset& p, int a, int b, int c, int d);

// On a lattice, the unique block containing every pairwise join (resp. meet)
// of b1 and b2. Missing or ambiguous absorbing blocks raise
// FalsifiedGuarantee; a non-lattice poset or arguments that are not blocks of
// t raise std::invalid_argument.
Block czedli_join(const Poset& p, const Relation& t, const Block& b1,
                  const Block& b2);
Block czedli_meet(const Poset& p, const Relation& t, const Block& b1,
                  const Block& b2);

// True when, for all blocks, block_leq(B1, B2) coincides with
// czedli_join(B1, B2) == B2 and czedli_meet(B1, B2) == B1. Lattices only.
bool orders_coincide(const Poset& p, const Relation& t);

}  // namespace ptol
