#include "ptol/relation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace ptol {

Relation Relation::diagonal(int n) {
  if (n <= 0) throw std::invalid_argument("relation carrier must not be empty");
  BoolMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return Relation(std::move(m));
}

Relation Relation::full(int n) {
  if (n <= 0) throw std::invalid_argument("relation carrier must not be empty");
  return Relation(BoolMatrix(n, true));
}

Relation Relation::from_cliques(int n, const std::vector<ElementSet>& cliques) {
  Relation out = diagonal(n);
  for (const auto& clique : cliques) {
    for (int a : clique) {
      if (a < 0 || a >= n) {
        throw std::invalid_argument("clique member index out of range");
      }
      for (int b : clique) out.relate(a, b);
    }
  }
  return out;
}

Relation Relation::from_matrix(BoolMatrix pairs) {
  const int n = pairs.size();
  if (n <= 0) throw std::invalid_argument("relation carrier must not be empty");
  for (int i = 0; i < n; ++i) {
    if (!pairs.get(i, i)) {
      throw std::invalid_argument("relation is not reflexive");
    }
    for (int j = i + 1; j < n; ++j) {
      if (pairs.get(i, j) != pairs.get(j, i)) {
        throw std::invalid_argument("relation is not symmetric");
      }
    }
  }
  return Relation(std::move(pairs));
}

bool Relation::is_diagonal() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((i == j) != related(i, j)) return false;
    }
  }
  return true;
}

bool Relation::is_full() const { return pairs_.count() == size() * size(); }

bool Relation::is_transitive() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!related(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (related(j, k) && !related(i, k)) return false;
      }
    }
  }
  return true;
}

Relation Relation::intersection(const Relation& a, const Relation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("relations have different carriers");
  }
  return Relation(BoolMatrix::intersection(a.pairs_, b.pairs_));
}

std::vector<std::pair<int, int>> Relation::ordered_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (related(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

void require_same_carrier(const Poset& p, const Relation& t) {
  if (p.size() != t.size()) {
    throw std::invalid_argument("relation carrier does not match poset");
  }
}

std::optional<ConditionWitness> check_bound_closure(const Poset& p,
                                                    const Relation& t,
                                                    bool joins) {
  const auto pairs = t.ordered_pairs();
  for (const auto& [x, y] : pairs) {
    for (const auto& [z, u] : pairs) {
      const auto left = joins ? p.join(x, z) : p.meet(x, z);
      if (!left) continue;
      const auto right = joins ? p.join(y, u) : p.meet(y, u);
      if (!right) continue;
      if (!t.related(*left, *right)) {
        return ConditionWitness{joins ? 1 : 2,
                                {x, y, z, u},
                                joins ? "join-image-not-related"
                                      : "meet-image-not-related"};
      }
    }
  }
  return std::nullopt;
}

std::optional<ConditionWitness> check_middle_bounds(const Poset& p,
                                                    const Relation& t) {
  if (t.is_full()) return std::nullopt;
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!t.related(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!t.related(y, z)) continue;
        bool lower = false;
        bool upper = false;
        for (int u = 0; u < n && (!lower || !upper); ++u) {
          lower = lower || (p.leq(u, x) && p.leq(u, y) && p.leq(u, z) &&
                            t.related(u, y));
          upper = upper || (p.leq(x, u) && p.leq(y, u) && p.leq(z, u) &&
                            t.related(y, u));
        }
        if (!lower || !upper) {
          return ConditionWitness{
              3, {x, y, z}, "no-bounds-related-to-middle"};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ConditionWitness> check_absorbing_bounds(const Poset& p,
                                                       const Relation& t) {
  if (t.is_full()) return std::nullopt;
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!t.related(x, y)) continue;
      bool found = false;
      for (int z = 0; z < n && !found; ++z) {
        if (!p.leq(z, x) || !p.leq(z, y)) continue;
        for (int u = 0; u < n && !found; ++u) {
          if (!t.related(z, u) || !p.leq(x, u) || !p.leq(y, u)) continue;
          bool absorbs = true;
          for (int v = 0; v < n && absorbs; ++v) {
            if (t.related(v, x) && t.related(v, y)) {
              absorbs = t.related(v, z) && t.related(v, u);
            }
          }
          found = absorbs;
        }
      }
      if (!found) {
        return ConditionWitness{4, {x, y}, "no-absorbing-bound-pair"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ConditionWitness> check_condition(const Poset& p,
                                                const Relation& t,
                                                int condition) {
  require_same_carrier(p, t);
  switch (condition) {
    case 1:
      return check_bound_closure(p, t, true);
    case 2:
      return check_bound_closure(p, t, false);
    case 3:
      return check_middle_bounds(p, t);
    case 4:
      return check_absorbing_bounds(p, t);
    default:
      throw std::invalid_argument("condition number must be 1, 2, 3 or 4");
  }
}

std::optional<ConditionWitness> tolerance_violation(const Poset& p,
                                                    const Relation& t) {
  for (int condition = 1; condition <= 4; ++condition) {
    if (auto witness = check_condition(p, t, condition)) return witness;
  }
  return std::nullopt;
}

bool is_tolerance(const Poset& p, const Relation& t) {
  return !tolerance_violation(p, t).has_value();
}

bool is_congruence(const Poset& p, const Relation& t) {
  return t.is_transitive() && is_tolerance(p, t);
}

namespace {

int pick_pivot(std::uint64_t candidates, std::uint64_t finished,
               const std::vector<std::uint64_t>& adjacency) {
  int pivot = -1;
  int best = -1;
  std::uint64_t pool = candidates | finished;
  while (pool) {
    const int u = std::countr_zero(pool);
    pool &= pool - 1;
    const int score = std::popcount(candidates & adjacency[u]);
    if (score > best) {
      best = score;
      pivot = u;
    }
  }
  return pivot;
}

// Pivoted maximal clique expansion. Vertices are always scanned in ascending
// index order, so the recursion (and with it the output) is deterministic.
void expand_cliques(std::uint64_t clique, std::uint64_t candidates,
                    std::uint64_t finished,
                    const std::vector<std::uint64_t>& adjacency,
                    std::vector<std::uint64_t>& out) {
  if (candidates == 0 && finished == 0) {
    out.push_back(clique);
    return;
  }
  const int pivot = pick_pivot(candidates, finished, adjacency);
  std::uint64_t extension = candidates & ~adjacency[pivot];
  while (extension) {
    const int v = std::countr_zero(extension);
    extension &= extension - 1;
    const std::uint64_t bit = std::uint64_t{1} << v;
    expand_cliques(clique | bit, candidates & adjacency[v],
                   finished & adjacency[v], adjacency, out);
    candidates &= ~bit;
    finished |= bit;
  }
}

}  // namespace

std::vector<Block> blocks(const Relation& t) {
  const int n = t.size();
  if (n > 64) {
    throw std::invalid_argument("block enumeration supports at most 64 elements");
  }
  // Off-diagonal adjacency; the reflexive loops play no role in cliques.
  std::vector<std::uint64_t> adjacency(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && t.related(a, b)) {
        adjacency[a] |= std::uint64_t{1} << b;
      }
    }
  }
  std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> masks;
  expand_cliques(0, all, 0, adjacency, masks);

  std::vector<Block> out;
  out.reserve(masks.size());
  for (std::uint64_t mask : masks) {
    Block block;
    while (mask) {
      block.push_back(std::countr_zero(mask));
      mask &= mask - 1;
    }
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ptol
