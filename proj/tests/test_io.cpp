#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "ptol/errors.hpp"
#include "ptol/io.hpp"
#include "test_support.hpp"

using namespace ptol;
using support::fixture_path;
using support::load_poset;
using support::load_rel;
using support::set_of;

namespace {

// Asserts that parsing fails exactly at source:line:column.
template <typename Fn>
void expect_error(Fn&& parse, int line, int column, const char* fragment) {
  try {
    parse();
    FAIL_CHECK("expected a ParseError mentioning '" << fragment << "'");
  } catch (const ParseError& e) {
    CHECK(e.source() == "<input>");
    CHECK(e.line() == line);
    CHECK(e.column() == column);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("fixture files parse") {
  const Poset p = load_poset("fig1");
  CHECK(p.labels() == std::vector<std::string>{"0", "a", "b", "c", "d", "1"});
  CHECK(p.cover_pairs().size() == 8);
  const auto parsed = read_relation_file(fixture_path("fig1-T1.rel"), p);
  REQUIRE(parsed.poset_name.has_value());
  CHECK(*parsed.poset_name == "fig1");
}

TEST_CASE("every relation fixture names its carrier poset") {
  const std::map<std::string, std::string> carriers = {
      {"fig1-T1", "fig1"},        {"fig1-T2", "fig1"},
      {"fig1-T1capT2", "fig1"},   {"fig3-T2", "fig1"},
      {"fig2-T1", "fig2"},        {"fig2-T2", "fig2"},
      {"fig2-T3", "fig2"},        {"fig2-T4", "fig2"},
      {"fig5-C1", "fig5"},        {"fig5-C2", "fig5"},
      {"fig5-C3", "fig5"},        {"fig5-C4", "fig5"},
      {"fig5-C5", "fig5"},        {"fig5-C6", "fig5"},
      {"fig5-C7", "fig5"},        {"fig5-C8", "fig5"},
      {"ex1-S", "fig2"},          {"ex1-T", "fig2"},
      {"ex2-S", "fig1"},          {"ex2-T", "fig1"},
      {"chain3-T", "chain3"},
  };
  for (const auto& [rel, poset] : carriers) {
    const Poset p = load_poset(poset);
    const auto parsed = read_relation_file(fixture_path(rel + ".rel"), p);
    REQUIRE(parsed.poset_name.has_value());
    CHECK(*parsed.poset_name == poset);
  }
}

TEST_CASE("poset serialization round-trips") {
  for (const char* name : {"fig1", "fig2", "fig4", "fig5", "chain3"}) {
    const Poset p = load_poset(name);
    const std::string text = poset_to_text(p);
    CHECK(parse_poset(text) == p);
    CHECK(poset_to_text(parse_poset(text)) == text);
  }
  CHECK(poset_to_text(load_poset("chain3")) ==
        "elements: a b c\ncovers: a<b b<c\n");
}

TEST_CASE("relation serialization round-trips") {
  const Poset p = load_poset("fig1");
  for (const char* name : {"fig1-T1", "fig1-T2", "fig1-T1capT2", "fig3-T2",
                           "ex2-S", "ex2-T"}) {
    const Relation t = load_rel(p, name);
    const std::string text = relation_to_text(p, t);
    CHECK(parse_relation(text, p).relation == t);
  }
  CHECK(relation_to_text(p, load_rel(p, "fig1-T1")) ==
        "cliques: {0,a,b,c} {b,c,d,1}\n");
  // the diagonal renders as singleton cliques and still round-trips
  const Poset crown = load_poset("fig5");
  CHECK(relation_to_text(crown, load_rel(crown, "fig5-C1")) ==
        "cliques: {a} {b} {c} {d}\n");
  CHECK(parse_relation("cliques:", crown).relation ==
        load_rel(crown, "fig5-C1"));
}

TEST_CASE("poset parse errors carry 1-based positions") {
  expect_error([] { return parse_poset(""); }, 1, 1, "expected an 'elements:'");
  expect_error([] { return parse_poset("covers: a<b"); }, 1, 1,
               "expected an 'elements:'");
  expect_error([] { return parse_poset("elements: a a\ncovers:"); }, 1, 13,
               "duplicate element label 'a'");
  expect_error([] { return parse_poset("elements: a{b\ncovers:"); }, 1, 12,
               "forbidden character '{'");
  expect_error([] { return parse_poset("elements:\ncovers:"); }, 1, 1,
               "element list is empty");
  expect_error([] { return parse_poset("elements: a b"); }, 1, 1,
               "expected a 'covers:' line");
  expect_error([] { return parse_poset("elements: a b\ncovers: a<b\nx"); },
               3, 1, "unexpected extra line");
  expect_error([] { return parse_poset("elements: a b\ncovers: ab"); }, 2, 9,
               "missing '<'");
  expect_error([] { return parse_poset("elements: a b\ncovers: a<b<a"); },
               2, 9, "more than one '<'");
  expect_error([] { return parse_poset("elements: a b\ncovers: a<"); }, 2, 9,
               "empty side");
  expect_error([] { return parse_poset("elements: a b\ncovers: a<z"); }, 2, 9,
               "unknown label 'z'");
  expect_error([] { return parse_poset("elements: a b\ncovers: a<a"); }, 2, 9,
               "to itself");
  expect_error([] { return parse_poset("elements: a b\ncovers: a<b b<a"); },
               2, 1, "cycle");
  // comments and blank lines keep original numbering
  expect_error([] { return parse_poset("# header\n\nelements: a a\ncovers:"); },
               3, 13, "duplicate element label 'a'");
}

TEST_CASE("relation parse errors carry 1-based positions") {
  const Poset p = load_poset("chain3");
  expect_error([&] { return parse_relation("", p); }, 1, 1,
               "expected a 'cliques:' line");
  expect_error([&] { return parse_relation("poset: chain3", p); }, 1, 1,
               "expected a 'cliques:' line");
  expect_error([&] { return parse_relation("poset: x y\ncliques:", p); }, 1, 7,
               "exactly one poset name");
  expect_error([&] { return parse_relation("cliques: a,b", p); }, 1, 10,
               "not of the form");
  expect_error([&] { return parse_relation("cliques: {}", p); }, 1, 10,
               "no members");
  expect_error([&] { return parse_relation("cliques: {a,}", p); }, 1, 13,
               "empty member");
  expect_error([&] { return parse_relation("cliques: {z}", p); }, 1, 11,
               "not an element of the poset");
  expect_error([&] { return parse_relation("cliques: {a}\ncliques: {b}", p); },
               2, 1, "unexpected extra line");
}

TEST_CASE("missing files surface as parse errors") {
  CHECK_THROWS_AS(read_poset_file(fixture_path("no-such.poset")), ParseError);
  const Poset p = load_poset("fig1");
  CHECK_THROWS_AS(read_relation_file(fixture_path("no-such.rel"), p),
                  ParseError);
}

TEST_CASE("set and clique labels") {
  const Poset p = load_poset("fig1");
  CHECK(element_set_label(p, set_of(p, {"0", "a", "b"})) == "{0,a,b}");
  CHECK(element_set_label(p, {}) == "{}");
  CHECK(relation_cliques(p, load_rel(p, "fig1-T1capT2")) ==
        "{0,a,b} {a,c} {b,d} {c,d,1}");
}

TEST_CASE("hasse diagrams in dot form") {
  const Poset crown = load_poset("fig5");
  const std::string expected =
      "digraph \"hasse\" {\n"
      "  rankdir=BT;\n"
      "  \"a\";\n"
      "  \"b\";\n"
      "  \"c\";\n"
      "  \"d\";\n"
      "  \"a\" -> \"c\";\n"
      "  \"a\" -> \"d\";\n"
      "  \"b\" -> \"c\";\n"
      "  \"b\" -> \"d\";\n"
      "}\n";
  CHECK(to_dot(crown) == expected);
  CHECK(to_dot(crown) == to_dot(crown));
  CHECK(to_dot(crown, "order\"x") .find("\\\"") != std::string::npos);

  // edges are exactly the covers
  const Poset p = load_poset("fig4");
  const std::string dot = to_dot(p, "f4");
  std::size_t arrows = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos;
       at = dot.find("->", at + 2)) {
    ++arrows;
  }
  CHECK(arrows == p.cover_pairs().size());
}

}  // TEST_SUITE
