#include "ptol/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ptol {

bool set_contains(const ElementSet& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

bool set_is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) {
    throw std::invalid_argument("poset carrier must not be empty");
  }
  std::unordered_map<std::string, int> seen;
  for (const auto& label : labels) {
    if (!seen.emplace(label, 1).second) {
      throw std::invalid_argument("duplicate element label '" + label + "'");
    }
  }
}

}  // namespace

Poset Poset::from_covers(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  check_labels(labels);
  const int n = static_cast<int>(labels.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) index.emplace(labels[i], i);

  BoolMatrix leq(n);
  for (int i = 0; i < n; ++i) leq.set(i, i, true);
  for (const auto& [low, high] : covers) {
    auto li = index.find(low);
    auto hi = index.find(high);
    if (li == index.end()) {
      throw std::invalid_argument("cover uses unknown label '" + low + "'");
    }
    if (hi == index.end()) {
      throw std::invalid_argument("cover uses unknown label '" + high + "'");
    }
    if (li->second == hi->second) {
      throw std::invalid_argument("cover '" + low + "<" + high +
                                  "' relates a label to itself");
    }
    leq.set(li->second, hi->second, true);
  }

  // Reflexive-transitive closure, then cycle check via antisymmetry.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!leq.get(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (leq.get(k, j)) leq.set(i, j, true);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (leq.get(i, j) && leq.get(j, i)) {
        throw std::invalid_argument("covers create a cycle through '" +
                                    labels[i] + "' and '" + labels[j] + "'");
      }
    }
  }
  return Poset(std::move(labels), std::move(leq));
}

Poset Poset::from_leq(std::vector<std::string> labels, BoolMatrix leq) {
  check_labels(labels);
  const int n = static_cast<int>(labels.size());
  if (leq.size() != n) {
    throw std::invalid_argument("order matrix size does not match carrier");
  }
  for (int i = 0; i < n; ++i) {
    if (!leq.get(i, i)) {
      throw std::invalid_argument("order matrix is not reflexive");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (leq.get(i, j) && leq.get(j, i)) {
        throw std::invalid_argument("order matrix is not antisymmetric");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (!leq.get(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (leq.get(k, j) && !leq.get(i, j)) {
          throw std::invalid_argument("order matrix is not transitive");
        }
      }
    }
  }
  return Poset(std::move(labels), std::move(leq));
}

std::optional<int> Poset::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::optional<int> Poset::join(int x, int y) const {
  const int n = size();
  std::optional<int> best;
  for (int u = 0; u < n; ++u) {
    if (!leq(x, u) || !leq(y, u)) continue;
    if (!best || leq(u, *best)) {
      // Candidate minimum so far; confirmed against all bounds below.
      best = u;
    }
  }
  if (!best) return std::nullopt;
  for (int u = 0; u < n; ++u) {
    if (leq(x, u) && leq(y, u) && !leq(*best, u)) return std::nullopt;
  }
  return best;
}

std::optional<int> Poset::meet(int x, int y) const {
  const int n = size();
  std::optional<int> best;
  for (int u = 0; u < n; ++u) {
    if (!leq(u, x) || !leq(u, y)) continue;
    if (!best || leq(*best, u)) best = u;
  }
  if (!best) return std::nullopt;
  for (int u = 0; u < n; ++u) {
    if (leq(u, x) && leq(u, y) && !leq(u, *best)) return std::nullopt;
  }
  return best;
}

ElementSet Poset::interval(int a, int b) const {
  if (!leq(a, b)) {
    throw std::invalid_argument("interval endpoints are not ordered: '" +
                                label(a) + "' is not below '" + label(b) + "'");
  }
  ElementSet out;
  for (int x = 0; x < size(); ++x) {
    if (leq(a, x) && leq(x, b)) out.push_back(x);
  }
  return out;
}

bool Poset::is_directed(const ElementSet& s) const {
  for (int x : s) {
    for (int y : s) {
      bool lower = false;
      bool upper = false;
      for (int z : s) {
        lower = lower || (leq(z, x) && leq(z, y));
        upper = upper || (leq(x, z) && leq(y, z));
      }
      if (!lower || !upper) return false;
    }
  }
  return true;
}

bool Poset::is_convex(const ElementSet& s) const {
  for (int x : s) {
    for (int y : s) {
      if (!leq(x, y)) continue;
      for (int z = 0; z < size(); ++z) {
        if (leq(x, z) && leq(z, y) && !set_contains(s, z)) return false;
      }
    }
  }
  return true;
}

bool Poset::is_lattice() const {
  for (int x = 0; x < size(); ++x) {
    for (int y = x + 1; y < size(); ++y) {
      if (!join(x, y) || !meet(x, y)) return false;
    }
  }
  return true;
}

bool Poset::is_relatively_complemented() const {
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (!leq(a, b)) continue;
      const Poset sub = restricted_to(interval(a, b));
      const int bot = *sub.index_of(label(a));
      const int top = *sub.index_of(label(b));
      for (int x = 0; x < sub.size(); ++x) {
        bool complemented = false;
        for (int y = 0; y < sub.size() && !complemented; ++y) {
          complemented = sub.join(x, y) == std::optional<int>(top) &&
                         sub.meet(x, y) == std::optional<int>(bot);
        }
        if (!complemented) return false;
      }
    }
  }
  return true;
}

std::optional<int> Poset::bottom_of(const ElementSet& s) const {
  for (int x : s) {
    bool below_all = true;
    for (int y : s) below_all = below_all && leq(x, y);
    if (below_all) return x;
  }
  return std::nullopt;
}

std::optional<int> Poset::top_of(const ElementSet& s) const {
  for (int x : s) {
    bool above_all = true;
    for (int y : s) above_all = above_all && leq(y, x);
    if (above_all) return x;
  }
  return std::nullopt;
}

ElementSet Poset::carrier() const {
  ElementSet all(static_cast<std::size_t>(size()));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

Poset Poset::restricted_to(const ElementSet& s) const {
  const int m = static_cast<int>(s.size());
  std::vector<std::string> labels(m);
  BoolMatrix sub(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = label(s[i]);
    for (int j = 0; j < m; ++j) sub.set(i, j, leq(s[i], s[j]));
  }
  return Poset(std::move(labels), std::move(sub));
}

Poset Poset::permuted(const std::vector<int>& perm) const {
  const int n = size();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation size does not match carrier");
  }
  std::vector<std::string> labels(n);
  BoolMatrix out(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = label(perm[i]);
    for (int j = 0; j < n; ++j) out.set(i, j, leq(perm[i], perm[j]));
  }
  return Poset(std::move(labels), std::move(out));
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (!less(a, b)) continue;
      bool covered = true;
      for (int z = 0; z < size() && covered; ++z) {
        covered = !(less(a, z) && less(z, b));
      }
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string Poset::canonical_form(int bound) const {
  const int n = size();
  if (n > bound) {
    throw std::invalid_argument("carrier of " + std::to_string(n) +
                                " elements exceeds the canonical form bound " +
                                std::to_string(bound));
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string candidate(static_cast<std::size_t>(n) * n, '0');
  do {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        candidate[static_cast<std::size_t>(i) * n + j] =
            leq(perm[i], perm[j]) ? '1' : '0';
      }
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace ptol
