#include "ptol/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ptol/errors.hpp"

namespace ptol {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

struct Line {
  std::string text;
  int number = 0;  // 1-based
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Comment-stripped, non-blank lines.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    bool blank = true;
    for (char c : line) blank = blank && is_space(c);
    if (!blank) lines.push_back({std::move(line), number});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<Token> split_tokens(const std::string& line, int from_column) {
  std::vector<Token> tokens;
  std::size_t i = static_cast<std::size_t>(from_column - 1);
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    std::size_t begin = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    tokens.push_back({line.substr(begin, i - begin),
                      static_cast<int>(begin) + 1});
  }
  return tokens;
}

// Returns the column just past the keyword, or 0 if the line does not start
// with 'keyword:'.
int match_keyword(const std::string& line, std::string_view keyword) {
  std::size_t i = 0;
  while (i < line.size() && is_space(line[i])) ++i;
  if (line.compare(i, keyword.size(), keyword) != 0) return 0;
  std::size_t after = i + keyword.size();
  if (after >= line.size() || line[after] != ':') return 0;
  return static_cast<int>(after) + 2;
}

void check_label_charset(const std::string& source, const Line& line,
                         const Token& token) {
  for (std::size_t i = 0; i < token.text.size(); ++i) {
    char c = token.text[i];
    if (c == '<' || c == '{' || c == '}' || c == ',') {
      throw ParseError(source, line.number,
                       token.column + static_cast<int>(i),
                       std::string("label contains forbidden character '") +
                           c + "'");
    }
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string(), 1, 1, "cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void quote_dot_id(std::ostringstream& out, const std::string& id) {
  out << '"';
  for (char c : id) {
    if (c == '"' || c == '\\') out << '\\';
    out << c;
  }
  out << '"';
}

}  // namespace

Poset parse_poset(std::string_view text, std::string_view source) {
  const std::string src(source);
  const auto lines = significant_lines(text);
  if (lines.empty()) {
    throw ParseError(src, 1, 1, "expected an 'elements:' line");
  }
  const Line& elements_line = lines[0];
  int after = match_keyword(elements_line.text, "elements");
  if (after == 0) {
    throw ParseError(src, elements_line.number, 1,
                     "expected an 'elements:' line");
  }
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  for (const Token& token : split_tokens(elements_line.text, after)) {
    check_label_charset(src, elements_line, token);
    if (index.count(token.text)) {
      throw ParseError(src, elements_line.number, token.column,
                       "duplicate element label '" + token.text + "'");
    }
    index.emplace(token.text, static_cast<int>(labels.size()));
    labels.push_back(token.text);
  }
  if (labels.empty()) {
    throw ParseError(src, elements_line.number, 1, "element list is empty");
  }

  if (lines.size() < 2) {
    throw ParseError(src, elements_line.number, 1,
                     "expected a 'covers:' line");
  }
  const Line& covers_line = lines[1];
  after = match_keyword(covers_line.text, "covers");
  if (after == 0) {
    throw ParseError(src, covers_line.number, 1,
                     "expected a 'covers:' line");
  }
  if (lines.size() > 2) {
    throw ParseError(src, lines[2].number, 1, "unexpected extra line");
  }

  std::vector<std::pair<std::string, std::string>> covers;
  for (const Token& token : split_tokens(covers_line.text, after)) {
    const auto first = token.text.find('<');
    if (first == std::string::npos) {
      throw ParseError(src, covers_line.number, token.column,
                       "cover token '" + token.text + "' is missing '<'");
    }
    if (token.text.find('<', first + 1) != std::string::npos) {
      throw ParseError(src, covers_line.number, token.column,
                       "cover token '" + token.text + "' has more than one '<'");
    }
    std::string low = token.text.substr(0, first);
    std::string high = token.text.substr(first + 1);
    if (low.empty() || high.empty()) {
      throw ParseError(src, covers_line.number, token.column,
                       "cover token '" + token.text + "' has an empty side");
    }
    for (const std::string& side : {low, high}) {
      if (!index.count(side)) {
        throw ParseError(src, covers_line.number, token.column,
                         "cover uses unknown label '" + side + "'");
      }
    }
    if (low == high) {
      throw ParseError(src, covers_line.number, token.column,
                       "cover relates '" + low + "' to itself");
    }
    covers.emplace_back(std::move(low), std::move(high));
  }

  try {
    return Poset::from_covers(std::move(labels), covers);
  } catch (const std::invalid_argument& e) {
    // Label problems were caught above; what remains is a cycle.
    throw ParseError(src, covers_line.number, 1, e.what());
  }
}

Poset read_poset_file(const std::filesystem::path& path) {
  return parse_poset(read_file(path), path.string());
}

ParsedRelation parse_relation(std::string_view text, const Poset& p,
                              std::string_view source) {
  const std::string src(source);
  const auto lines = significant_lines(text);
  std::size_t at = 0;
  std::optional<std::string> poset_name;
  if (at < lines.size()) {
    if (int after = match_keyword(lines[at].text, "poset"); after != 0) {
      const auto tokens = split_tokens(lines[at].text, after);
      if (tokens.size() != 1) {
        throw ParseError(src, lines[at].number, after,
                         "expected exactly one poset name");
      }
      poset_name = tokens[0].text;
      ++at;
    }
  }
  if (at >= lines.size()) {
    throw ParseError(src, lines.empty() ? 1 : lines.back().number, 1,
                     "expected a 'cliques:' line");
  }
  const Line& cliques_line = lines[at];
  int after = match_keyword(cliques_line.text, "cliques");
  if (after == 0) {
    throw ParseError(src, cliques_line.number, 1,
                     "expected a 'cliques:' line");
  }
  if (at + 1 < lines.size()) {
    throw ParseError(src, lines[at + 1].number, 1, "unexpected extra line");
  }

  std::vector<ElementSet> cliques;
  for (const Token& token : split_tokens(cliques_line.text, after)) {
    if (token.text.front() != '{' || token.text.back() != '}') {
      throw ParseError(src, cliques_line.number, token.column,
                       "clique token '" + token.text +
                           "' is not of the form {A,B,C}");
    }
    const std::string inner = token.text.substr(1, token.text.size() - 2);
    if (inner.empty()) {
      throw ParseError(src, cliques_line.number, token.column,
                       "clique token has no members");
    }
    ElementSet clique;
    std::size_t begin = 0;
    while (true) {
      std::size_t comma = inner.find(',', begin);
      const std::string member =
          inner.substr(begin, comma == std::string::npos ? std::string::npos
                                                         : comma - begin);
      const int member_column =
          token.column + 1 + static_cast<int>(begin);
      if (member.empty()) {
        throw ParseError(src, cliques_line.number, member_column,
                         "clique has an empty member");
      }
      const auto idx = p.index_of(member);
      if (!idx) {
        throw ParseError(src, cliques_line.number, member_column,
                         "clique member '" + member +
                             "' is not an element of the poset");
      }
      clique.push_back(*idx);
      if (comma == std::string::npos) break;
      begin = comma + 1;
    }
    cliques.push_back(std::move(clique));
  }
  return ParsedRelation{std::move(poset_name),
                        Relation::from_cliques(p.size(), cliques)};
}

ParsedRelation read_relation_file(const std::filesystem::path& path,
                                  const Poset& p) {
  return parse_relation(read_file(path), p, path.string());
}

std::string poset_to_text(const Poset& p) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& label : p.labels()) out << ' ' << label;
  out << "\ncovers:";
  for (const auto& [low, high] : p.cover_pairs()) {
    out << ' ' << p.label(low) << '<' << p.label(high);
  }
  out << '\n';
  return out.str();
}

std::string relation_to_text(const Poset& p, const Relation& t) {
  std::string groups = relation_cliques(p, t);
  std::string out = "cliques:";
  if (!groups.empty()) {
    out += ' ';
    out += groups;
  }
  out += '\n';
  return out;
}

std::string element_set_label(const Poset& p, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ',';
    out += p.label(s[i]);
  }
  out += '}';
  return out;
}

std::string relation_cliques(const Poset& p, const Relation& t) {
  std::string out;
  for (const Block& block : blocks(t)) {
    if (!out.empty()) out += ' ';
    out += element_set_label(p, block);
  }
  return out;
}

std::string to_dot(const Poset& p, std::string_view name) {
  std::ostringstream out;
  out << "digraph ";
  quote_dot_id(out, std::string(name));
  out << " {\n  rankdir=BT;\n";
  for (const auto& label : p.labels()) {
    out << "  ";
    quote_dot_id(out, label);
    out << ";\n";
  }
  for (const auto& [low, high] : p.cover_pairs()) {
    out << "  ";
    quote_dot_id(out, p.label(low));
    out << " -> ";
    quote_dot_id(out, p.label(high));
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ptol
