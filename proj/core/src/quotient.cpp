#include "ptol/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptol/errors.hpp"
#include "ptol/io.hpp"

namespace ptol {

bool block_leq(const Poset& p, const Block& b1, const Block& b2) {
  for (int x : b1) {
    bool covered = false;
    for (int y : b2) covered = covered || p.leq(x, y);
    if (!covered) return false;
  }
  for (int y : b2) {
    bool covered = false;
    for (int x : b1) covered = covered || p.leq(x, y);
    if (!covered) return false;
  }
  return true;
}

QuotientPoset quotient_poset(const Poset& p, const Relation& t) {
  if (auto witness = tolerance_violation(p, t)) {
    std::string tuple;
    for (int e : witness->elements) {
      if (!tuple.empty()) tuple += ',';
      tuple += p.label(e);
    }
    throw std::invalid_argument(
        "relation is not a tolerance: condition " +
        std::to_string(witness->condition) + " fails at (" + tuple + "): " +
        witness->reason);
  }

  auto blks = blocks(t);
  const int m = static_cast<int>(blks.size());
  BoolMatrix order(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      order.set(i, j, block_leq(p, blks[i], blks[j]));
    }
  }

  // The block order of a tolerance is promised to be a partial order.
  // Check it on this instance rather than trusting the promise.
  auto describe = [&](int i) { return element_set_label(p, blks[i]); };
  for (int i = 0; i < m; ++i) {
    if (!order.get(i, i)) {
      throw FalsifiedGuarantee("block order is not reflexive at " +
                               describe(i));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (order.get(i, j) && order.get(j, i)) {
        throw FalsifiedGuarantee("block order is not antisymmetric between " +
                                 describe(i) + " and " + describe(j));
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!order.get(i, j)) continue;
      for (int k = 0; k < m; ++k) {
        if (order.get(j, k) && !order.get(i, k)) {
          throw FalsifiedGuarantee("block order is not transitive through " +
                                   describe(i) + ", " + describe(j) + ", " +
                                   describe(k));
        }
      }
    }
  }

  std::vector<std::string> labels;
  labels.reserve(blks.size());
  for (const Block& block : blks) labels.push_back(element_set_label(p, block));
  Poset quotient = Poset::from_leq(std::move(labels), std::move(order));
  return QuotientPoset{p, t, std::move(blks), std::move(quotient)};
}

bool interval_block_leq(const Poset& p, int a, int b, int c, int d) {
  if (!p.leq(a, b) || !p.leq(c, d)) {
    throw std::invalid_argument("interval endpoints are not ordered");
  }
  const bool via_blocks = block_leq(p, p.interval(a, b), p.interval(c, d));
  const bool via_endpoints = p.leq(a, c) && p.leq(b, d);
  if (via_blocks != via_endpoints) {
    throw FalsifiedGuarantee(
        "interval order disagrees with the endpoint test between [" +
        p.label(a) + "," + p.label(b) + "] and [" + p.label(c) + "," +
        p.label(d) + "]");
  }
  return via_endpoints;
}

namespace {

Block czedli_block(const Poset& p, const Relation& t, const Block& b1,
                   const Block& b2, bool joins) {
  if (!p.is_lattice()) {
    throw std::invalid_argument("block join and meet require a lattice");
  }
  const auto blks = blocks(t);
  auto is_block = [&](const Block& b) {
    return std::find(blks.begin(), blks.end(), b) != blks.end();
  };
  if (!is_block(b1) || !is_block(b2)) {
    throw std::invalid_argument("arguments are not blocks of the relation");
  }

  ElementSet images;
  for (int x : b1) {
    for (int y : b2) {
      const auto z = joins ? p.join(x, y) : p.meet(x, y);
      if (!z) {
        throw FalsifiedGuarantee("lattice bound missing despite is_lattice");
      }
      if (!set_contains(images, *z)) {
        images.insert(std::lower_bound(images.begin(), images.end(), *z), *z);
      }
    }
  }

  const Block* found = nullptr;
  for (const Block& candidate : blks) {
    if (!set_is_subset(images, candidate)) continue;
    if (found) {
      throw FalsifiedGuarantee(
          std::string("absorbing block for pairwise ") +
          (joins ? "joins" : "meets") + " of " + element_set_label(p, b1) +
          " and " + element_set_label(p, b2) + " is not unique: both " +
          element_set_label(p, *found) + " and " +
          element_set_label(p, candidate) + " contain " +
          element_set_label(p, images));
    }
    found = &candidate;
  }
  if (!found) {
    throw FalsifiedGuarantee(std::string("no block absorbs the pairwise ") +
                             (joins ? "joins" : "meets") + " of " +
                             element_set_label(p, b1) + " and " +
                             element_set_label(p, b2));
  }
  return *found;
}

}  // namespace

Block czedli_join(const Poset& p, const Relation& t, const Block& b1,
                  const Block& b2) {
  return czedli_block(p, t, b1, b2, true);
}

Block czedli_meet(const Poset& p, const Relation& t, const Block& b1,
                  const Block& b2) {
  return czedli_block(p, t, b1, b2, false);
}

bool orders_coincide(const Poset& p, const Relation& t) {
  const auto blks = blocks(t);
  for (const Block& b1 : blks) {
    for (const Block& b2 : blks) {
      const bool ordered = block_leq(p, b1, b2);
      const bool absorbed = czedli_join(p, t, b1, b2) == b2 &&
                            czedli_meet(p, t, b1, b2) == b1;
      if (ordered != absorbed) return false;
    }
  }
  return true;
}

}  // namespace ptol
