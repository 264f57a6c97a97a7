#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ptol/poset.hpp"
#include "ptol/relation.hpp"

namespace ptol {

// Poset text format: comment-stripped ('#' to end of line), an 'elements:'
// line listing labels, then a 'covers:' line of 'A<B' tokens. Labels may not
// contain whitespace, '<', '{', '}' or ','. All failures raise ParseError
// with 1-based line and column.
Poset parse_poset(std::string_view text, std::string_view source = "<input>");
Poset read_poset_file(const std::filesystem::path& path);

struct ParsedRelation {
  // Value of the optional 'poset:' header line, if present. Callers that
  // know which poset file the relation came with should compare it against
  // that file's stem.
  std::optional<std::string> poset_name;
  Relation relation;
};

// Relation text format: an optional 'poset:' line, then a 'cliques:' line of
// '{A,B,C}' groups over the carrier poset's labels. An empty group list
// denotes the diagonal relation.
ParsedRelation parse_relation(std::string_view text, const Poset& p,
                              std::string_view source = "<input>");
ParsedRelation read_relation_file(const std::filesystem::path& path,
                                  const Poset& p);

// Inverses of the parsers, with covers (resp. cliques) in canonical order.
// parse(to_text(x)) reproduces x exactly.
std::string poset_to_text(const Poset& p);
std::string relation_to_text(const Poset& p, const Relation& t);

// "{a,b,c}" with members in carrier order.
std::string element_set_label(const Poset& p, const ElementSet& s);

// One clique group per block, space separated: "{0,a} {b,c}".
std::string relation_cliques(const Poset& p, const Relation& t);

// Hasse diagram as a DOT digraph: one node per element, one edge per cover,
// drawn bottom-up. Node and edge order follow the carrier, so the output is
// byte-deterministic.
std::string to_dot(const Poset& p, std::string_view name = "hasse");

}  // namespace ptol
