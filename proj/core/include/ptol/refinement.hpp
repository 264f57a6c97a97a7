#pragma once

#include <vector>

#include "ptol/poset.hpp"
#include "ptol/quotient.hpp"
#include "ptol/relation.hpp"

namespace ptol {

// How the blocks of a candidate refinement pair (S, T) sit inside each
// other. S refines T when every S-block lies in exactly one T-block and
// every T-block is the union of the S-blocks it contains.
struct RefinementPair {
  std::vector<Block> s_blocks;
  std::vector<Block> t_blocks;
  // Per S-block: how many T-blocks contain it, and the first one that does.
  std::vector<int> containing_count;
  std::vector<int> container;  // -1 when no T-block contains the S-block
  bool unique_containment = false;
  bool union_decomposition = false;

  bool refines() const { return unique_containment && union_decomposition; }
};

// Precondition for everything below: s and t are tolerances on p
// (std::invalid_argument otherwise).
RefinementPair analyze_refinement(const Poset& p, const Relation& s,
                                  const Relation& t);
bool refines(const Poset& p, const Relation& s, const Relation& t);

// Containment analysis on precomputed block lists. Skips the tolerance
// checks and the pair-containment cross-check of the three-argument form;
// meant for sweeps that already hold the block lists.
RefinementPair analyze_refinement(const std::vector<Block>& s_blocks,
                                  const std::vector<Block>& t_blocks);

// The relation T/S on the carrier of P/S: two S-blocks are related iff some
// T-block contains them both. Requires refines(p, s, t); the result is
// checked to be reflexive and symmetric (FalsifiedGuarantee otherwise).
Relation quotient_relation(const Poset& p, const Relation& s,
                           const Relation& t);

enum class BlockMapKind {
  injection,  // P/T  ->  (P/S)/(T/S)
  bijection,  // (P/S)/(T/S)  ->  P/T
};

// Map between block lists of two quotients: image[i] is the codomain block
// index assigned to domain block i.
struct BlockMap {
  BlockMapKind kind;
  std::vector<int> image;
};

// f(B) = the set of S-blocks contained in the T-block B, read as an element
// set of (P/S)/(T/S). Requires refines(p, s, t) and T/S a tolerance on P/S.
// Verifies on this input that every image is nonempty, is a block of T/S,
// that f is injective, and that |(P/S)/(T/S)| >= |P/T|; any miss raises
// FalsifiedGuarantee.
BlockMap injection_f(const Poset& p, const Relation& s, const Relation& t);

// g(D) = union of the S-blocks collected in the T/S-block D. Requires s and
// t to be congruences, refines(p, s, t), and T/S a tolerance on P/S.
// Verifies that g lands on T-blocks, is a bijection onto P/T, and preserves
// the block order; any miss raises FalsifiedGuarantee. Nothing is claimed
// about the inverse direction, which callers can probe with
// is_order_preserving on the inverted map.
BlockMap congruence_bijection_g(const Poset& p, const Relation& s,
                                const Relation& t);

// image must be a bijection (codomain a permutation of the domain indices).
BlockMap inverted(const BlockMap& map);

// x <= y in dom implies image[x] <= image[y] in cod.
bool is_order_preserving(const std::vector<int>& image, const Poset& dom,
                         const Poset& cod);
bool is_order_preserving(const BlockMap& map, const QuotientPoset& dom,
                         const QuotientPoset& cod);

// Exhaustive scan over all bijections dom -> cod for an order-preserving
// one. Requires equal sizes and at most `bound` elements.
bool exists_order_preserving_bijection(const Poset& dom, const Poset& cod,
                                       int bound = 8);

}  // namespace ptol
