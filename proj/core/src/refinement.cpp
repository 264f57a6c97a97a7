#include "ptol/refinement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ptol/errors.hpp"
#include "ptol/io.hpp"

namespace ptol {

namespace {

void require_tolerance(const Poset& p, const Relation& r, const char* which) {
  if (!is_tolerance(p, r)) {
    throw std::invalid_argument(std::string(which) +
                                " relation is not a tolerance");
  }
}

ElementSet sorted_union(const std::vector<Block>& parts,
                        const std::vector<int>& picks) {
  ElementSet out;
  for (int i : picks) {
    for (int x : parts[i]) {
      if (!set_contains(out, x)) {
        out.insert(std::lower_bound(out.begin(), out.end(), x), x);
      }
    }
  }
  return out;
}

}  // namespace

RefinementPair analyze_refinement(const std::vector<Block>& s_blocks,
                                  const std::vector<Block>& t_blocks) {
  RefinementPair out;
  out.s_blocks = s_blocks;
  out.t_blocks = t_blocks;
  const int ns = static_cast<int>(out.s_blocks.size());
  const int nt = static_cast<int>(out.t_blocks.size());

  out.containing_count.assign(ns, 0);
  out.container.assign(ns, -1);
  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nt; ++j) {
      if (set_is_subset(out.s_blocks[i], out.t_blocks[j])) {
        if (out.containing_count[i]++ == 0) out.container[i] = j;
      }
    }
  }
  out.unique_containment = true;
  for (int i = 0; i < ns; ++i) {
    out.unique_containment =
        out.unique_containment && out.containing_count[i] == 1;
  }

  out.union_decomposition = true;
  for (int j = 0; j < nt; ++j) {
    ElementSet covered;
    for (int i = 0; i < ns; ++i) {
      if (set_is_subset(out.s_blocks[i], out.t_blocks[j])) {
        for (int x : out.s_blocks[i]) {
          if (!set_contains(covered, x)) {
            covered.insert(
                std::lower_bound(covered.begin(), covered.end(), x), x);
          }
        }
      }
    }
    out.union_decomposition =
        out.union_decomposition && covered == out.t_blocks[j];
  }
  return out;
}

RefinementPair analyze_refinement(const Poset& p, const Relation& s,
                                  const Relation& t) {
  require_tolerance(p, s, "first");
  require_tolerance(p, t, "second");

  RefinementPair out = analyze_refinement(blocks(s), blocks(t));

  // Refinement is supposed to force pairwise containment of the relations.
  if (out.refines() && !s.subset_of(t)) {
    throw FalsifiedGuarantee(
        "block refinement without pair containment between the relations");
  }
  return out;
}

bool refines(const Poset& p, const Relation& s, const Relation& t) {
  return analyze_refinement(p, s, t).refines();
}

Relation quotient_relation(const Poset& p, const Relation& s,
                           const Relation& t) {
  const RefinementPair pair = analyze_refinement(p, s, t);
  if (!pair.refines()) {
    throw std::invalid_argument(
        "first relation does not refine the second");
  }
  const int m = static_cast<int>(pair.s_blocks.size());
  BoolMatrix related(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      bool joint = false;
      for (const Block& host : pair.t_blocks) {
        joint = joint || (set_is_subset(pair.s_blocks[i], host) &&
                          set_is_subset(pair.s_blocks[j], host));
      }
      related.set(i, j, joint);
      related.set(j, i, joint);
    }
  }
  for (int i = 0; i < m; ++i) {
    if (!related.get(i, i)) {
      throw FalsifiedGuarantee(
          "quotient relation is not reflexive at block " +
          element_set_label(p, pair.s_blocks[i]));
    }
  }
  return Relation::from_matrix(std::move(related));
}

namespace {

struct RefinementQuotients {
  QuotientPoset by_s;          // P/S
  QuotientPoset by_t;          // P/T
  Relation t_over_s;           // T/S on the carrier of P/S
  QuotientPoset double_quot;   // (P/S)/(T/S)
};

RefinementQuotients build_quotients(const Poset& p, const Relation& s,
                                    const Relation& t) {
  Relation t_over_s = quotient_relation(p, s, t);
  QuotientPoset by_s = quotient_poset(p, s);
  if (!is_tolerance(by_s.poset, t_over_s)) {
    throw std::invalid_argument(
        "quotient relation is not a tolerance on the quotient poset");
  }
  QuotientPoset by_t = quotient_poset(p, t);
  QuotientPoset double_quot = quotient_poset(by_s.poset, t_over_s);
  return RefinementQuotients{std::move(by_s), std::move(by_t),
                             std::move(t_over_s), std::move(double_quot)};
}

}  // namespace

BlockMap injection_f(const Poset& p, const Relation& s, const Relation& t) {
  const RefinementQuotients q = build_quotients(p, s, t);
  const int nt = static_cast<int>(q.by_t.blocks.size());

  BlockMap map{BlockMapKind::injection, std::vector<int>(nt, -1)};
  for (int j = 0; j < nt; ++j) {
    ElementSet image;  // indices of S-blocks inside T-block j
    for (int i = 0; i < static_cast<int>(q.by_s.blocks.size()); ++i) {
      if (set_is_subset(q.by_s.blocks[i], q.by_t.blocks[j])) {
        image.push_back(i);
      }
    }
    if (image.empty()) {
      throw FalsifiedGuarantee("image of " +
                               element_set_label(p, q.by_t.blocks[j]) +
                               " contains no block of the finer relation");
    }
    const auto at = std::find(q.double_quot.blocks.begin(),
                              q.double_quot.blocks.end(), image);
    if (at == q.double_quot.blocks.end()) {
      throw FalsifiedGuarantee(
          "image of " + element_set_label(p, q.by_t.blocks[j]) +
          " is not a block of the quotient relation");
    }
    map.image[j] = static_cast<int>(at - q.double_quot.blocks.begin());
  }

  for (int a = 0; a < nt; ++a) {
    for (int b = a + 1; b < nt; ++b) {
      if (map.image[a] == map.image[b]) {
        throw FalsifiedGuarantee("block injection is not injective: " +
                                 element_set_label(p, q.by_t.blocks[a]) +
                                 " and " +
                                 element_set_label(p, q.by_t.blocks[b]) +
                                 " share an image");
      }
    }
  }
  if (static_cast<int>(q.double_quot.blocks.size()) < nt) {
    throw FalsifiedGuarantee(
        "double quotient is smaller than the quotient by the coarser "
        "relation");
  }
  return map;
}

BlockMap congruence_bijection_g(const Poset& p, const Relation& s,
                                const Relation& t) {
  if (!s.is_transitive() || !t.is_transitive()) {
    throw std::invalid_argument("both relations must be congruences");
  }
  const RefinementQuotients q = build_quotients(p, s, t);
  const int nd = static_cast<int>(q.double_quot.blocks.size());
  const int nt = static_cast<int>(q.by_t.blocks.size());

  BlockMap map{BlockMapKind::bijection, std::vector<int>(nd, -1)};
  for (int d = 0; d < nd; ++d) {
    const ElementSet united =
        sorted_union(q.by_s.blocks, q.double_quot.blocks[d]);
    const auto at =
        std::find(q.by_t.blocks.begin(), q.by_t.blocks.end(), united);
    if (at == q.by_t.blocks.end()) {
      throw FalsifiedGuarantee(
          "union of the blocks in " +
          element_set_label(q.by_s.poset, q.double_quot.blocks[d]) +
          " is not a block of the coarser congruence");
    }
    map.image[d] = static_cast<int>(at - q.by_t.blocks.begin());
  }

  std::vector<int> hits(nt, 0);
  for (int image : map.image) ++hits[image];
  if (nd != nt ||
      std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
    throw FalsifiedGuarantee("block union map is not a bijection");
  }
  if (!is_order_preserving(map.image, q.double_quot.poset, q.by_t.poset)) {
    throw FalsifiedGuarantee("block union map does not preserve order");
  }
  return map;
}

BlockMap inverted(const BlockMap& map) {
  const int n = static_cast<int>(map.image.size());
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    const int to = map.image[i];
    if (to < 0 || to >= n || inverse[to] != -1) {
      throw std::invalid_argument("map is not a bijection");
    }
    inverse[to] = i;
  }
  const BlockMapKind kind = map.kind == BlockMapKind::injection
                                ? BlockMapKind::bijection
                                : BlockMapKind::injection;
  return BlockMap{kind, std::move(inverse)};
}

bool is_order_preserving(const std::vector<int>& image, const Poset& dom,
                         const Poset& cod) {
  if (static_cast<int>(image.size()) != dom.size()) {
    throw std::invalid_argument("map size does not match its domain");
  }
  for (int to : image) {
    if (to < 0 || to >= cod.size()) {
      throw std::invalid_argument("map image leaves the codomain");
    }
  }
  for (int x = 0; x < dom.size(); ++x) {
    for (int y = 0; y < dom.size(); ++y) {
      if (dom.leq(x, y) && !cod.leq(image[x], image[y])) return false;
    }
  }
  return true;
}

bool is_order_preserving(const BlockMap& map, const QuotientPoset& dom,
                         const QuotientPoset& cod) {
  return is_order_preserving(map.image, dom.poset, cod.poset);
}

bool exists_order_preserving_bijection(const Poset& dom, const Poset& cod,
                                       int bound) {
  if (dom.size() != cod.size()) {
    throw std::invalid_argument("posets have different sizes");
  }
  if (dom.size() > bound) {
    throw std::invalid_argument(
        "bijection search supports at most " + std::to_string(bound) +
        " elements");
  }
  std::vector<int> image(static_cast<std::size_t>(dom.size()));
  std::iota(image.begin(), image.end(), 0);
  do {
    if (is_order_preserving(image, dom, cod)) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

}  // namespace ptol
