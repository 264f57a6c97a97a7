#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ptol/enumerate.hpp"
#include "ptol/errors.hpp"
#include "ptol/refinement.hpp"
#include "test_support.hpp"

using namespace ptol;
using support::load_poset;
using support::load_rel;
using support::set_of;

namespace {

Poset chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(labels[i], labels[i + 1]);
  return Poset::from_covers(labels, covers);
}

Poset antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Poset::from_covers(labels, {});
}

}  // namespace

TEST_SUITE("refinement") {

TEST_CASE("refinement requires unique containment") {
  const Poset p = load_poset("fig1");
  const Relation s = load_rel(p, "fig3-T2");
  const Relation t = load_rel(p, "fig1-T1");
  const RefinementPair pair = analyze_refinement(p, s, t);
  CHECK_FALSE(pair.refines());
  CHECK_FALSE(pair.unique_containment);
  // the S-block {b,c} sits inside both T-blocks
  REQUIRE(pair.s_blocks.size() == 3);
  CHECK(pair.s_blocks[1] == set_of(p, {"b", "c"}));
  CHECK(pair.containing_count[1] == 2);
  CHECK(pair.containing_count[0] == 1);
  CHECK(refines(p, s, t) == false);
}

TEST_CASE("refinement fails without a union decomposition") {
  // exercised through the block-list form, which accepts arbitrary covers
  const std::vector<Block> s_blocks = {{0}, {1}};
  const std::vector<Block> t_blocks = {{0, 1}, {2}};
  const RefinementPair pair = analyze_refinement(s_blocks, t_blocks);
  CHECK(pair.unique_containment);
  CHECK_FALSE(pair.union_decomposition);
  CHECK_FALSE(pair.refines());
  CHECK(pair.container == std::vector<int>{0, 0});
}

TEST_CASE("refinement demands tolerances") {
  const Poset p = load_poset("fig1");
  CHECK_THROWS_AS(
      analyze_refinement(p, load_rel(p, "fig1-T1capT2"), load_rel(p, "fig1-T1")),
      std::invalid_argument);
}

TEST_CASE("every tolerance refines itself with a diagonal quotient") {
  const Poset p = load_poset("fig1");
  for (const char* name : {"fig1-T1", "fig1-T2", "fig3-T2"}) {
    const Relation t = load_rel(p, name);
    CHECK(refines(p, t, t));
    const Relation over = quotient_relation(p, t, t);
    CHECK(over.is_diagonal());
    const BlockMap f = injection_f(p, t, t);
    CHECK(f.kind == BlockMapKind::injection);
    std::vector<int> identity(f.image.size());
    for (std::size_t i = 0; i < identity.size(); ++i) {
      identity[i] = static_cast<int>(i);
    }
    CHECK(f.image == identity);
  }
}

TEST_CASE("the collapsing example yields an isomorphism") {
  const Poset p = load_poset("fig2");
  const Relation s = load_rel(p, "ex1-S");
  const Relation t = load_rel(p, "ex1-T");
  REQUIRE(is_tolerance(p, s));
  REQUIRE(is_tolerance(p, t));
  CHECK(s.is_transitive());
  CHECK(t.is_transitive());

  REQUIRE(refines(p, s, t));
  CHECK(s.subset_of(t));

  const QuotientPoset by_s = quotient_poset(p, s);
  REQUIRE(by_s.blocks.size() == 3);
  CHECK(by_s.blocks[0] == set_of(p, {"0", "a"}));
  CHECK(by_s.blocks[1] == set_of(p, {"b", "c"}));
  CHECK(by_s.blocks[2] == set_of(p, {"d"}));

  const Relation over = quotient_relation(p, s, t);
  CHECK(blocks(over) == std::vector<Block>{{0, 1}, {2}});
  REQUIRE(is_tolerance(by_s.poset, over));

  const BlockMap f = injection_f(p, s, t);
  const QuotientPoset dom = quotient_poset(p, t);
  const QuotientPoset cod = quotient_poset(by_s.poset, over);
  CHECK(dom.blocks.size() == 2);
  CHECK(cod.blocks.size() == 2);
  CHECK(f.image == std::vector<int>{0, 1});
  CHECK(is_order_preserving(f, dom, cod));

  CHECK(exists_order_preserving_bijection(dom.poset, cod.poset));
  CHECK(exists_order_preserving_bijection(cod.poset, dom.poset));

  const BlockMap g = congruence_bijection_g(p, s, t);
  CHECK(g.kind == BlockMapKind::bijection);
  CHECK(g.image == std::vector<int>{0, 1});
}

TEST_CASE("the chain-to-vee example breaks the isomorphism") {
  const Poset p = load_poset("fig1");
  const Relation s = load_rel(p, "ex2-S");
  const Relation t = load_rel(p, "ex2-T");
  REQUIRE(is_tolerance(p, s));
  REQUIRE(is_tolerance(p, t));
  CHECK(s.is_transitive());
  CHECK(t.is_transitive());
  REQUIRE(refines(p, s, t));

  const QuotientPoset by_s = quotient_poset(p, s);
  REQUIRE(by_s.blocks.size() == 4);

  const Relation over = quotient_relation(p, s, t);
  CHECK(blocks(over) == std::vector<Block>{{0}, {1, 2}, {3}});
  REQUIRE(is_tolerance(by_s.poset, over));

  const QuotientPoset doubled = quotient_poset(by_s.poset, over);
  const QuotientPoset by_t = quotient_poset(p, t);

  // the double quotient is a two-chain plus an isolated point, the direct
  // quotient a three-chain
  CHECK(doubled.poset.cover_pairs() ==
        std::vector<std::pair<int, int>>{{0, 2}});
  CHECK(by_t.poset.cover_pairs() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  const BlockMap g = congruence_bijection_g(p, s, t);
  CHECK(g.image == std::vector<int>{0, 1, 2});
  CHECK(is_order_preserving(g, doubled, by_t));

  const BlockMap back = inverted(g);
  CHECK_FALSE(is_order_preserving(back, by_t, doubled));
  // the explicit witness: the bottom two direct blocks are ordered, their
  // preimages are not
  CHECK(by_t.poset.leq(0, 1));
  CHECK_FALSE(doubled.poset.leq(0, 1));

  CHECK_FALSE(exists_order_preserving_bijection(by_t.poset, doubled.poset));
  CHECK(exists_order_preserving_bijection(doubled.poset, by_t.poset));

  const BlockMap f = injection_f(p, s, t);
  CHECK(f.image == std::vector<int>{0, 1, 2});
}

TEST_CASE("order-preserving bijection search is exhaustive") {
  CHECK(exists_order_preserving_bijection(chain(3), chain(3)));
  CHECK_FALSE(exists_order_preserving_bijection(chain(3), antichain(3)));
  CHECK(exists_order_preserving_bijection(antichain(3), chain(3)));
  CHECK_THROWS_AS(exists_order_preserving_bijection(chain(2), chain(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(exists_order_preserving_bijection(antichain(9), antichain(9)),
                  std::invalid_argument);
}

TEST_CASE("map plumbing") {
  BlockMap squash{BlockMapKind::bijection, {0, 0}};
  CHECK_THROWS_AS(inverted(squash), std::invalid_argument);
  BlockMap swap{BlockMapKind::bijection, {1, 0}};
  CHECK(inverted(swap).image == std::vector<int>{1, 0});
  CHECK(is_order_preserving(std::vector<int>{0, 1, 2}, chain(3), chain(3)));
  CHECK_FALSE(is_order_preserving(std::vector<int>{2, 1, 0}, chain(3), chain(3)));
  CHECK(is_order_preserving(std::vector<int>{2, 1, 0}, antichain(3), chain(3)));
}

TEST_CASE("refinement is reflexive and antisymmetric on small posets") {
  for (int n = 1; n <= 5; ++n) {
    for (const Poset& p : all_posets(n)) {
      const ToleranceFamily f = all_tolerances(p);
      const int m = static_cast<int>(f.members.size());
      std::vector<std::vector<Block>> blks(m);
      for (int i = 0; i < m; ++i) blks[i] = blocks(f.members[i]);
      std::vector<std::vector<bool>> refine(m, std::vector<bool>(m));
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          refine[i][j] = analyze_refinement(blks[i], blks[j]).refines();
        }
      }
      for (int i = 0; i < m; ++i) {
        CHECK(refine[i][i]);
        for (int j = 0; j < m; ++j) {
          if (i == j) continue;
          const bool mutual = refine[i][j] && refine[j][i];
          CHECK_FALSE(mutual);
          if (refine[i][j]) CHECK(f.members[i].subset_of(f.members[j]));
        }
      }
    }
  }
}

}  // TEST_SUITE
