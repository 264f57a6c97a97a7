// Command line front end: file-based access to the relation engine, the
// quotient constructions, the refinement analysis, and the verification
// sweep. Exit discipline: 0 = yes / all passed, 1 = no / failures found,
// 2 = usage or input error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptol/enumerate.hpp"
#include "ptol/errors.hpp"
#include "ptol/io.hpp"
#include "ptol/poset.hpp"
#include "ptol/quotient.hpp"
#include "ptol/refinement.hpp"
#include "ptol/relation.hpp"

namespace {

using namespace ptol;

// Relations name their carrier; applying one to a differently named poset
// file is almost always a mix-up, so it is rejected before any math runs.
Relation load_relation(const std::string& rel_path, const Poset& p,
                       const std::string& poset_path) {
  const ParsedRelation parsed = read_relation_file(rel_path, p);
  if (parsed.poset_name) {
    const std::string stem =
        std::filesystem::path(poset_path).stem().string();
    if (*parsed.poset_name != stem) {
      throw std::invalid_argument("relation file " + rel_path +
                                  " names poset '" + *parsed.poset_name +
                                  "' but the carrier file is '" + stem + "'");
    }
  }
  return parsed.relation;
}

std::string label_tuple(const Poset& p, const std::vector<int>& elements) {
  std::string out = "(";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ",";
    out += p.label(elements[i]);
  }
  return out + ")";
}

std::string witness_line(const Poset& p, const ConditionWitness& w) {
  return "witness: condition " + std::to_string(w.condition) + " at " +
         label_tuple(p, w.elements) + ": " + w.reason + "\n";
}

int run_check(const Poset& p, const Relation& r, bool want_congruence) {
  const auto violation = tolerance_violation(p, r);
  if (!want_congruence) {
    std::cout << "tolerance: " << (violation ? "no" : "yes") << "\n";
    if (!violation) return 0;
    std::cout << witness_line(p, *violation);
    return 1;
  }
  if (violation) {
    std::cout << "congruence: no\n" << witness_line(p, *violation);
    return 1;
  }
  const int n = r.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!r.related(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (r.related(y, z) && !r.related(x, z)) {
          std::cout << "congruence: no\n"
                    << "witness: " << label_tuple(p, {x, y}) << " and "
                    << label_tuple(p, {y, z}) << " related, "
                    << label_tuple(p, {x, z}) << " not\n";
          return 1;
        }
      }
    }
  }
  std::cout << "congruence: yes\n";
  return 0;
}

int run_blocks(const Poset& p, const Relation& r) {
  for (const Block& b : blocks(r)) {
    std::cout << element_set_label(p, b) << "\n";
  }
  return 0;
}

int run_quotient(const Poset& p, const Relation& r, bool as_dot) {
  const QuotientPoset q = quotient_poset(p, r);
  if (as_dot) {
    std::cout << to_dot(q.poset);
    return 0;
  }
  const std::vector<std::string> labels = q.poset.labels();
  for (const std::string& label : labels) {
    std::cout << label << "\n";
  }
  for (const auto& [low, high] : q.poset.cover_pairs()) {
    std::cout << labels[low] << " < " << labels[high] << "\n";
  }
  return 0;
}

int run_enumerate(const Poset& p, const std::string& what, bool as_json,
                  bool as_dot) {
  const ToleranceFamily family =
      what == "congruences" ? all_congruences(p) : all_tolerances(p);
  if (as_dot) {
    std::cout << to_dot(family_poset(family));
    return 0;
  }
  if (as_json) {
    nlohmann::json out;
    out["what"] = what;
    out["count"] = family.members.size();
    auto& members = out["members"] = nlohmann::json::array();
    for (const Relation& member : family.members) {
      members.push_back(relation_cliques(p, member));
    }
    auto& covers = out["covers"] = nlohmann::json::array();
    for (const auto& [low, high] : family_poset(family).cover_pairs()) {
      covers.push_back({low, high});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (const Relation& member : family.members) {
    std::cout << relation_cliques(p, member) << "\n";
  }
  return 0;
}

// "{B2,B3}" style rendering of an index set under a one-letter block prefix.
std::string prefixed_set(char prefix, const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += prefix;
    out += std::to_string(members[i] + 1);
  }
  return out + "}";
}

std::string named_blocks(const Poset& p, char prefix,
                         const std::vector<Block>& blks) {
  std::string out;
  for (std::size_t i = 0; i < blks.size(); ++i) {
    if (i) out += " ";
    out += prefix;
    out += std::to_string(i + 1) + "=" + element_set_label(p, blks[i]);
  }
  return out;
}

int run_refine(const Poset& p, const Relation& s, const Relation& t,
               bool as_json) {
  nlohmann::json out;
  std::string text;
  const auto put = [&](const std::string& key, const std::string& value,
                       const nlohmann::json& json_value) {
    if (as_json) {
      out[key] = json_value;
    } else {
      text += key + ": " + value + "\n";
    }
  };
  const auto flush = [&]() {
    if (as_json) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  };
  const auto yes_no = [](bool b) { return b ? "yes" : "no"; };

  const bool ok = refines(p, s, t);
  put("refines", yes_no(ok), ok);
  if (!ok) {
    flush();
    return 1;
  }

  const QuotientPoset by_s = quotient_poset(p, s);
  const QuotientPoset direct = quotient_poset(p, t);
  put("s-blocks", named_blocks(p, 'B', by_s.blocks),
      nlohmann::json(by_s.poset.labels()));
  put("t-blocks", named_blocks(p, 'C', direct.blocks),
      nlohmann::json(direct.poset.labels()));

  const Relation over = quotient_relation(p, s, t);
  std::string clique_text;
  nlohmann::json clique_json = nlohmann::json::array();
  for (const Block& clique : blocks(over)) {
    if (!clique_text.empty()) clique_text += " ";
    clique_text += prefixed_set('B', clique);
    clique_json.push_back(prefixed_set('B', clique));
  }
  put("ts-cliques", clique_text, clique_json);

  const bool over_ok = is_tolerance(by_s.poset, over);
  put("ts-is-tolerance", yes_no(over_ok), over_ok);
  if (!over_ok) {
    flush();
    return 0;
  }

  const QuotientPoset iterated = quotient_poset(by_s.poset, over);
  std::string iter_text;
  nlohmann::json iter_json = nlohmann::json::array();
  for (std::size_t i = 0; i < iterated.blocks.size(); ++i) {
    if (i) iter_text += " ";
    const std::string rendered = prefixed_set('B', iterated.blocks[i]);
    iter_text += "D" + std::to_string(i + 1) + "=" + rendered;
    iter_json.push_back(rendered);
  }
  put("iterated-blocks", iter_text, iter_json);

  const auto map_text = [](const BlockMap& map, char from, char to) {
    std::string rendered;
    for (std::size_t i = 0; i < map.image.size(); ++i) {
      if (i) rendered += " ";
      rendered += from + std::to_string(i + 1) + "->" + to +
                  std::to_string(map.image[i] + 1);
    }
    return rendered;
  };
  const BlockMap f = injection_f(p, s, t);
  put("f", map_text(f, 'C', 'D'), map_text(f, 'C', 'D'));

  if (s.is_transitive() && t.is_transitive()) {
    const BlockMap g = congruence_bijection_g(p, s, t);
    put("g", map_text(g, 'D', 'C'), map_text(g, 'D', 'C'));
    const bool forward = is_order_preserving(g, iterated, direct);
    const bool backward = is_order_preserving(inverted(g), direct, iterated);
    put("g-order-preserving", yes_no(forward), forward);
    put("g-inverse-order-preserving", yes_no(backward), backward);
  }

  const bool same_size = iterated.blocks.size() == direct.blocks.size();
  const bool iter_to_direct =
      same_size && exists_order_preserving_bijection(iterated.poset,
                                                     direct.poset);
  const bool direct_to_iter =
      same_size && exists_order_preserving_bijection(direct.poset,
                                                     iterated.poset);
  put("iterated-to-direct-bijection", yes_no(iter_to_direct), iter_to_direct);
  put("direct-to-iterated-bijection", yes_no(direct_to_iter), direct_to_iter);
  flush();
  return 0;
}

int run_verify(int max_n, const std::string& claims_arg, int jobs,
               int witness_cap, bool as_json) {
  std::vector<std::string> claims;
  std::size_t begin = 0;
  while (begin <= claims_arg.size() && !claims_arg.empty()) {
    const std::size_t comma = claims_arg.find(',', begin);
    const std::size_t end =
        comma == std::string::npos ? claims_arg.size() : comma;
    if (end > begin) claims.push_back(claims_arg.substr(begin, end - begin));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  const VerificationReport report =
      verify_theorems(max_n, claims, jobs, witness_cap);
  std::cout << (as_json ? report_json(report) : report_summary(report));
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tolerances and congruences on finite posets", "ptol"};
  app.require_subcommand(1);

  std::string poset_path, rel_path, rel_s_path, rel_t_path;
  std::string what = "tolerances", claims_arg;
  bool congruence = false, as_json = false, as_dot = false;
  int max_n = 5, jobs = 1, witness_cap = kDefaultWitnessCap;

  CLI::App* check =
      app.add_subcommand("check", "verify the tolerance (or congruence) axioms");
  check->add_option("--poset", poset_path, "poset file")->required();
  check->add_option("--rel", rel_path, "relation file")->required();
  check->add_flag("--congruence", congruence,
                  "require transitivity on top of the tolerance conditions");

  CLI::App* blocks_cmd =
      app.add_subcommand("blocks", "maximal cliques of a relation");
  blocks_cmd->add_option("--poset", poset_path, "poset file")->required();
  blocks_cmd->add_option("--rel", rel_path, "relation file")->required();

  CLI::App* quotient_cmd =
      app.add_subcommand("quotient", "blocks of a tolerance and their order");
  quotient_cmd->add_option("--poset", poset_path, "poset file")->required();
  quotient_cmd->add_option("--rel", rel_path, "relation file")->required();
  quotient_cmd->add_flag("--dot", as_dot, "emit the quotient's Hasse DOT");

  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "every tolerance or congruence on a poset");
  enumerate_cmd->add_option("--poset", poset_path, "poset file")->required();
  enumerate_cmd->add_option("--what", what, "tolerances (default) or congruences")
      ->check(CLI::IsMember({"tolerances", "congruences"}));
  CLI::Option* enum_json =
      enumerate_cmd->add_flag("--json", as_json, "structured output");
  enumerate_cmd->add_flag("--dot", as_dot, "emit the family's Hasse DOT")
      ->excludes(enum_json);

  CLI::App* refine_cmd = app.add_subcommand(
      "refine", "refinement analysis of two tolerances on one poset");
  refine_cmd->add_option("--poset", poset_path, "poset file")->required();
  refine_cmd->add_option("--rel-s", rel_s_path, "finer relation file")
      ->required();
  refine_cmd->add_option("--rel-t", rel_t_path, "coarser relation file")
      ->required();
  refine_cmd->add_flag("--json", as_json, "structured output");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "exhaustive sweep of the machine-checkable claims");
  verify_cmd->add_option("--max-n", max_n, "largest carrier size (default 5)")
      ->check(CLI::Range(1, 6));
  verify_cmd->add_option("--claims", claims_arg,
                         "comma-separated claim names (default: all)");
  verify_cmd->add_option("--jobs", jobs, "worker threads (default 1)")
      ->check(CLI::Range(1, 64));
  verify_cmd
      ->add_option("--witness-cap", witness_cap,
                   "failure details kept in the report (default 20)")
      ->check(CLI::Range(0, 100000));
  verify_cmd->add_flag("--json", as_json, "full report instead of the summary");

  CLI::App* dot_cmd = app.add_subcommand("dot", "Hasse diagram as DOT");
  dot_cmd->add_option("--poset", poset_path, "poset file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify_cmd->parsed()) {
      return run_verify(max_n, claims_arg, jobs, witness_cap, as_json);
    }
    const Poset p = read_poset_file(poset_path);
    if (check->parsed()) {
      return run_check(p, load_relation(rel_path, p, poset_path), congruence);
    }
    if (blocks_cmd->parsed()) {
      return run_blocks(p, load_relation(rel_path, p, poset_path));
    }
    if (quotient_cmd->parsed()) {
      return run_quotient(p, load_relation(rel_path, p, poset_path), as_dot);
    }
    if (enumerate_cmd->parsed()) {
      return run_enumerate(p, what, as_json, as_dot);
    }
    if (refine_cmd->parsed()) {
      return run_refine(p, load_relation(rel_s_path, p, poset_path),
                        load_relation(rel_t_path, p, poset_path), as_json);
    }
    std::cout << to_dot(p);
    return 0;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const FalsifiedGuarantee& e) {
    std::cerr << "falsified: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
