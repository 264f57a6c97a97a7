#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>

#include "ptol/io.hpp"
#include "ptol/poset.hpp"
#include "ptol/relation.hpp"

namespace support {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(PTOL_FIXTURE_DIR) / name;
}

inline ptol::Poset load_poset(const std::string& stem) {
  return ptol::read_poset_file(fixture_path(stem + ".poset"));
}

inline ptol::Relation load_rel(const ptol::Poset& p, const std::string& stem) {
  return ptol::read_relation_file(fixture_path(stem + ".rel"), p).relation;
}

inline int idx(const ptol::Poset& p, const std::string& label) {
  auto i = p.index_of(label);
  if (!i) throw std::runtime_error("no element labelled '" + label + "'");
  return *i;
}

inline ptol::ElementSet set_of(const ptol::Poset& p,
                               std::initializer_list<const char*> labels) {
  ptol::ElementSet s;
  for (const char* l : labels) s.push_back(idx(p, l));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace support
