// Copyright 2026 The fairdire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairdire/election_file.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "fairdire/errors.h"

namespace fairdire {
namespace {

constexpr std::string_view kHeader = "fairdire election v1";

struct Token {
  std::string text;
  int column = 1;
};

// Splits on whitespace; columns are 1-based.
std::vector<Token> Tokenize(std::string_view line, int column_offset = 0) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i >= line.size()) break;
    size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    out.push_back({std::string(line.substr(i, j - i)),
                   static_cast<int>(i) + 1 + column_offset});
    i = j;
  }
  return out;
}

// Splits on commas, trimming blanks around each item.
std::vector<Token> SplitList(std::string_view text, int column_offset) {
  std::vector<Token> out;
  size_t start = 0;
  while (true) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    size_t a = start;
    size_t b = end;
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    out.push_back({std::string(text.substr(a, b - a)),
                   static_cast<int>(a) + 1 + column_offset});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

bool ValidName(std::string_view name) {
  if (name.empty()) return false;
  for (char ch : name) {
    const unsigned char u = static_cast<unsigned char>(ch);
    if (std::isspace(u) || ch == '=' || ch == ',' || ch == ':' || ch == '#' ||
        ch == '{' || ch == '}' || ch == '&' || ch == '[' || ch == ']') {
      return false;
    }
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) { SplitLines(text); }

  ElectionDocument Parse();

 private:
  struct Line {
    int number;
    std::string text;
  };

  struct Side {
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> labels;
    std::map<std::string, int> attribute_index;
    std::vector<std::map<std::string, int>> label_index;
    std::vector<Partition> partitions;
  };

  void SplitLines(std::string_view text) {
    int number = 0;
    size_t start = 0;
    while (start <= text.size()) {
      size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string line(text.substr(start, end - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t") != std::string::npos) {
        lines_.push_back({number, line});
      }
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  [[noreturn]] void Fail(int line, int column, const std::string& message) {
    throw ParseError(line, column, message);
  }

  int ParseInt(const Token& token, int line, std::string_view what) {
    int value = 0;
    const char* end = token.text.data() + token.text.size();
    auto [ptr, ec] = std::from_chars(token.text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      Fail(line, token.column,
           std::string(what) + " must be an integer, got '" + token.text + "'");
    }
    return value;
  }

  std::string SectionName(const Line& line) {
    const auto tokens = Tokenize(line.text);
    if (tokens.size() == 1 && tokens[0].text.size() > 2 &&
        tokens[0].text.front() == '[' && tokens[0].text.back() == ']') {
      return tokens[0].text.substr(1, tokens[0].text.size() - 2);
    }
    return "";
  }

  // Lines of the section starting at pos_ (header already consumed).
  std::vector<Line> TakeBody() {
    std::vector<Line> body;
    while (pos_ < lines_.size() && SectionName(lines_[pos_]).empty()) {
      body.push_back(lines_[pos_++]);
    }
    return body;
  }

  void ParseMeta(const std::vector<Line>& body);
  void ParseAttributes(const std::vector<Line>& body);
  void ParseCandidates(const Line& header, const std::vector<Line>& body);
  void ParseVoters(const Line& header, const std::vector<Line>& body);
  void ParseConstraints(const std::vector<Line>& body);
  // "attr=label" on the given side: returns {attribute, index}.
  AttributeIndex ResolveLabel(const Side& side, const Token& token, int line,
                              std::string_view side_name);
  void ParseAssignments(Side& side, const std::vector<Token>& tokens,
                        size_t first, int item, int line);

  std::vector<Line> lines_;
  size_t pos_ = 0;
  std::map<std::string, int> meta_;
  Side candidate_side_;
  Side voter_side_;
  std::vector<std::string> candidate_names_;
  std::unordered_map<std::string, int> candidate_index_;
  std::vector<std::string> voter_names_;
  std::vector<Ranking> rankings_;
  std::optional<ConstraintSet> constraints_;
};

void Parser::ParseMeta(const std::vector<Line>& body) {
  for (const Line& line : body) {
    std::string text = line.text;
    std::replace(text.begin(), text.end(), '=', ' ');
    const auto tokens = Tokenize(text);
    if (tokens.size() != 2) {
      Fail(line.number, 1, "expected 'key = value' in meta section");
    }
    const std::string& key = tokens[0].text;
    if (key != "m" && key != "n" && key != "k") {
      Fail(line.number, tokens[0].column, "unknown meta key '" + key + "'");
    }
    if (meta_.count(key)) {
      Fail(line.number, tokens[0].column, "duplicate meta key '" + key + "'");
    }
    meta_[key] = ParseInt(tokens[1], line.number, key);
  }
  for (const char* key : {"m", "n", "k"}) {
    if (!meta_.count(key)) {
      Fail(body.empty() ? 1 : body.back().number, 1,
           std::string("meta section lacks '") + key + "'");
    }
  }
  if (meta_["m"] < 1 || meta_["n"] < 1 || meta_["k"] < 1) {
    Fail(body.back().number, 1, "m, n and k must be positive");
  }
}

void Parser::ParseAttributes(const std::vector<Line>& body) {
  for (const Line& line : body) {
    const auto tokens = Tokenize(line.text);
    if (tokens.size() < 2 ||
        (tokens[0].text != "candidate" && tokens[0].text != "voter")) {
      Fail(line.number, 1,
           "expected 'candidate|voter <attribute> <label>...'");
    }
    Side& side = tokens[0].text == "candidate" ? candidate_side_ : voter_side_;
    const std::string& name = tokens[1].text;
    if (!ValidName(name)) {
      Fail(line.number, tokens[1].column, "invalid attribute name");
    }
    if (side.attribute_index.count(name)) {
      Fail(line.number, tokens[1].column,
           "duplicate " + tokens[0].text + " attribute '" + name + "'");
    }
    side.attribute_index[name] = static_cast<int>(side.names.size());
    side.names.push_back(name);
    side.labels.emplace_back();
    side.label_index.emplace_back();
    for (size_t i = 2; i < tokens.size(); ++i) {
      const std::string& label = tokens[i].text;
      if (!ValidName(label)) {
        Fail(line.number, tokens[i].column, "invalid label '" + label + "'");
      }
      if (side.label_index.back().count(label)) {
        Fail(line.number, tokens[i].column,
             "duplicate label '" + label + "' for attribute '" + name + "'");
      }
      side.label_index.back()[label] =
          static_cast<int>(side.labels.back().size());
      side.labels.back().push_back(label);
    }
    side.partitions.emplace_back(side.labels.back().size());
  }
}

void Parser::ParseAssignments(Side& side, const std::vector<Token>& tokens,
                              size_t first, int item, int line) {
  std::vector<char> seen(side.names.size(), 0);
  for (size_t i = first; i < tokens.size(); ++i) {
    const Token& token = tokens[i];
    const size_t eq = token.text.find('=');
    if (eq == std::string::npos) {
      Fail(line, token.column, "expected 'attribute=label', got '" +
                                   token.text + "'");
    }
    const std::string attribute = token.text.substr(0, eq);
    const std::string label = token.text.substr(eq + 1);
    auto at = side.attribute_index.find(attribute);
    if (at == side.attribute_index.end()) {
      Fail(line, token.column, "unknown attribute '" + attribute + "'");
    }
    auto lt = side.label_index[at->second].find(label);
    if (lt == side.label_index[at->second].end()) {
      Fail(line, token.column + static_cast<int>(eq) + 1,
           "unknown label '" + label + "' for attribute '" + attribute + "'");
    }
    if (seen[at->second]) {
      Fail(line, token.column, "attribute '" + attribute + "' given twice");
    }
    seen[at->second] = 1;
    side.partitions[at->second][lt->second].push_back(item);
  }
}

void Parser::ParseCandidates(const Line& header, const std::vector<Line>& body) {
  for (const Line& line : body) {
    const auto tokens = Tokenize(line.text);
    const std::string& name = tokens[0].text;
    if (!ValidName(name) || name.find('=') != std::string::npos) {
      Fail(line.number, 1, "invalid candidate name '" + name + "'");
    }
    if (candidate_index_.count(name)) {
      Fail(line.number, 1, "duplicate candidate '" + name + "'");
    }
    const int id = static_cast<int>(candidate_names_.size());
    candidate_index_[name] = id;
    candidate_names_.push_back(name);
    ParseAssignments(candidate_side_, tokens, 1, id, line.number);
  }
  if (static_cast<int>(candidate_names_.size()) != meta_["m"]) {
    Fail(header.number, 1,
         "expected " + std::to_string(meta_["m"]) + " candidates, found " +
             std::to_string(candidate_names_.size()));
  }
}

void Parser::ParseVoters(const Line& header, const std::vector<Line>& body) {
  std::unordered_map<std::string, int> voter_index;
  for (const Line& line : body) {
    const size_t colon = line.text.find(':');
    if (colon == std::string::npos) {
      Fail(line.number, 1, "expected '<voter> [attr=label...] : <ranking>'");
    }
    const auto tokens = Tokenize(std::string_view(line.text).substr(0, colon));
    if (tokens.empty()) Fail(line.number, 1, "missing voter name");
    const std::string& name = tokens[0].text;
    if (!ValidName(name)) {
      Fail(line.number, tokens[0].column, "invalid voter name '" + name + "'");
    }
    if (voter_index.count(name)) {
      Fail(line.number, tokens[0].column, "duplicate voter '" + name + "'");
    }
    const int id = static_cast<int>(voter_names_.size());
    voter_index[name] = id;
    voter_names_.push_back(name);
    ParseAssignments(voter_side_, tokens, 1, id, line.number);

    Ranking ranking;
    std::vector<char> used(candidate_names_.size(), 0);
    for (const Token& item :
         SplitList(std::string_view(line.text).substr(colon + 1),
                   static_cast<int>(colon) + 1)) {
      auto it = candidate_index_.find(item.text);
      if (it == candidate_index_.end()) {
        Fail(line.number, item.column,
             "voter " + name + " ranks unknown candidate '" + item.text + "'");
      }
      if (used[it->second]) {
        Fail(line.number, item.column,
             "voter " + name + " ranks candidate " + item.text + " twice");
      }
      used[it->second] = 1;
      ranking.push_back(it->second);
    }
    rankings_.push_back(std::move(ranking));
  }
  if (static_cast<int>(voter_names_.size()) != meta_["n"]) {
    Fail(header.number, 1,
         "expected " + std::to_string(meta_["n"]) + " voters, found " +
             std::to_string(voter_names_.size()));
  }
}

AttributeIndex Parser::ResolveLabel(const Side& side, const Token& token,
                                    int line, std::string_view side_name) {
  const size_t eq = token.text.find('=');
  if (eq == std::string::npos) {
    Fail(line, token.column, "expected 'attribute=label'");
  }
  const std::string attribute = token.text.substr(0, eq);
  const std::string label = token.text.substr(eq + 1);
  auto at = side.attribute_index.find(attribute);
  if (at == side.attribute_index.end()) {
    Fail(line, token.column, "unknown " + std::string(side_name) +
                                 " attribute '" + attribute + "'");
  }
  auto lt = side.label_index[at->second].find(label);
  if (lt == side.label_index[at->second].end()) {
    Fail(line, token.column + static_cast<int>(eq) + 1,
         "unknown label '" + label + "' for attribute '" + attribute + "'");
  }
  return {at->second, lt->second};
}

void Parser::ParseConstraints(const std::vector<Line>& body) {
  ConstraintSet cs;
  for (const Line& line : body) {
    const auto tokens = Tokenize(line.text);
    const std::string& kind = tokens[0].text;
    if (kind != "diversity" && kind != "representation" &&
        kind != "committee") {
      Fail(line.number, 1, "unknown constraint '" + kind +
                               "' (expected diversity, representation or "
                               "committee)");
    }
    if (tokens.size() < 3) {
      Fail(line.number, 1, "constraint needs a target and a value");
    }
    if (kind == "diversity") {
      if (tokens.size() != 3) Fail(line.number, tokens[3].column, "extra text");
      const GroupId gid =
          ResolveLabel(candidate_side_, tokens[1], line.number, "candidate");
      if (cs.diversity.count(gid)) {
        Fail(line.number, tokens[1].column, "duplicate diversity bound");
      }
      cs.diversity[gid] = ParseInt(tokens[2], line.number, "bound");
    } else if (kind == "representation") {
      if (tokens.size() != 3) Fail(line.number, tokens[3].column, "extra text");
      const PopulationId pid =
          ResolveLabel(voter_side_, tokens[1], line.number, "voter");
      if (cs.representation.count(pid)) {
        Fail(line.number, tokens[1].column, "duplicate representation bound");
      }
      cs.representation[pid] = ParseInt(tokens[2], line.number, "bound");
    } else {
      const PopulationId pid =
          ResolveLabel(voter_side_, tokens[1], line.number, "voter");
      if (cs.population_committees.count(pid)) {
        Fail(line.number, tokens[1].column, "duplicate committee");
      }
      const size_t start = static_cast<size_t>(tokens[2].column - 1);
      std::vector<CandidateId> members;
      for (const Token& item :
           SplitList(std::string_view(line.text).substr(start),
                     static_cast<int>(start))) {
        auto it = candidate_index_.find(item.text);
        if (it == candidate_index_.end()) {
          Fail(line.number, item.column,
               "unknown candidate '" + item.text + "'");
        }
        members.push_back(it->second);
      }
      std::sort(members.begin(), members.end());
      if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        Fail(line.number, tokens[2].column, "committee repeats a candidate");
      }
      cs.population_committees[pid] = std::move(members);
    }
  }
  constraints_ = std::move(cs);
}

ElectionDocument Parser::Parse() {
  if (lines_.empty()) throw ParseError(1, 1, "missing meta section");
  const auto first = Tokenize(lines_[0].text);
  if (first.size() != 3 || first[0].text != "fairdire" ||
      first[1].text != "election" || first[2].text != "v1") {
    Fail(lines_[0].number, 1,
         "expected header line '" + std::string(kHeader) + "'");
  }
  pos_ = 1;
  static const std::vector<std::string> kOrder = {
      "meta", "attributes", "candidates", "voters", "constraints"};
  size_t next = 0;
  bool have_meta = false, have_candidates = false, have_voters = false;
  while (pos_ < lines_.size()) {
    const Line header = lines_[pos_];
    const std::string name = SectionName(header);
    if (name.empty()) {
      Fail(header.number, 1, "text outside a section");
    }
    auto it = std::find(kOrder.begin(), kOrder.end(), name);
    if (it == kOrder.end()) {
      Fail(header.number, 2, "unknown section '" + name + "'");
    }
    const size_t index = static_cast<size_t>(it - kOrder.begin());
    if (index < next) {
      Fail(header.number, 2, "section [" + name + "] out of order or repeated");
    }
    if (index > 0 && !have_meta) {
      throw ParseError(header.number, 1, "missing meta section");
    }
    if (index == 3 && !have_candidates) {
      Fail(header.number, 1, "[voters] needs a preceding [candidates]");
    }
    next = index + 1;
    ++pos_;
    const std::vector<Line> body = TakeBody();
    switch (index) {
      case 0:
        ParseMeta(body);
        have_meta = true;
        break;
      case 1:
        ParseAttributes(body);
        break;
      case 2:
        ParseCandidates(header, body);
        have_candidates = true;
        break;
      case 3:
        ParseVoters(header, body);
        have_voters = true;
        break;
      case 4:
        if (!have_voters) {
          Fail(header.number, 1, "[constraints] needs a preceding [voters]");
        }
        ParseConstraints(body);
        break;
    }
  }
  if (!have_meta) {
    throw ParseError(lines_.back().number, 1, "missing meta section");
  }
  if (!have_candidates) {
    throw ParseError(lines_.back().number, 1, "missing candidates section");
  }
  if (!have_voters) {
    throw ParseError(lines_.back().number, 1, "missing voters section");
  }

  ElectionDocument doc{
      Election(meta_["m"], rankings_, candidate_side_.partitions,
               voter_side_.partitions),
      {}, meta_["k"], constraints_};
  doc.names.candidates = candidate_names_;
  doc.names.voters = voter_names_;
  doc.names.candidate_attributes = candidate_side_.names;
  doc.names.voter_attributes = voter_side_.names;
  doc.names.group_labels = candidate_side_.labels;
  doc.names.population_labels = voter_side_.labels;

  std::vector<std::string> problems = ValidateElection(doc.election).errors;
  if (doc.k > doc.election.num_candidates()) {
    problems.push_back("k = " + std::to_string(doc.k) + " exceeds m = " +
                       std::to_string(doc.election.num_candidates()));
  }
  if (problems.empty() && doc.constraints.has_value()) {
    problems = doc.constraints->Validate(doc.election, doc.k,
                                          /*require_committees=*/false);
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return doc;
}

std::string Join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::runtime_error("invalid election: " + Join(problems, "; ")),
      problems_(std::move(problems)) {}

ElectionNames DefaultNames(const Election& e) {
  ElectionNames names;
  for (int c = 0; c < e.num_candidates(); ++c) {
    names.candidates.push_back("c" + std::to_string(c + 1));
  }
  for (int v = 0; v < e.num_voters(); ++v) {
    names.voters.push_back("v" + std::to_string(v + 1));
  }
  const auto& ca = e.candidate_attributes();
  for (size_t a = 0; a < ca.size(); ++a) {
    names.candidate_attributes.push_back("a" + std::to_string(a + 1));
    names.group_labels.emplace_back();
    for (size_t g = 0; g < ca[a].size(); ++g) {
      names.group_labels.back().push_back("g" + std::to_string(g + 1));
    }
  }
  const auto& va = e.voter_attributes();
  for (size_t a = 0; a < va.size(); ++a) {
    names.voter_attributes.push_back("b" + std::to_string(a + 1));
    names.population_labels.emplace_back();
    for (size_t p = 0; p < va[a].size(); ++p) {
      names.population_labels.back().push_back("p" + std::to_string(p + 1));
    }
  }
  return names;
}

ElectionDocument ParseElection(std::string_view text) {
  return Parser(text).Parse();
}

std::string SerializeElection(const ElectionDocument& doc) {
  const Election& e = doc.election;
  const ElectionNames& names = doc.names;
  const int m = e.num_candidates();
  const int n = e.num_voters();
  std::ostringstream out;
  out << kHeader << "\n\n[meta]\nm = " << m << "\nn = " << n
      << "\nk = " << doc.k << "\n";

  const auto& ca = e.candidate_attributes();
  const auto& va = e.voter_attributes();
  if (!ca.empty() || !va.empty()) {
    out << "\n[attributes]\n";
    for (size_t a = 0; a < ca.size(); ++a) {
      out << "candidate " << names.candidate_attributes[a];
      for (const auto& label : names.group_labels[a]) out << ' ' << label;
      out << '\n';
    }
    for (size_t a = 0; a < va.size(); ++a) {
      out << "voter " << names.voter_attributes[a];
      for (const auto& label : names.population_labels[a]) out << ' ' << label;
      out << '\n';
    }
  }

  // label_of[a][item] = group index or -1.
  auto labels_of = [](const std::vector<Partition>& attributes, int count) {
    std::vector<std::vector<int>> out(attributes.size(),
                                      std::vector<int>(count, -1));
    for (size_t a = 0; a < attributes.size(); ++a) {
      for (size_t g = 0; g < attributes[a].size(); ++g) {
        for (int item : attributes[a][g]) out[a][item] = static_cast<int>(g);
      }
    }
    return out;
  };
  const auto candidate_labels = labels_of(ca, m);
  const auto voter_labels = labels_of(va, n);

  out << "\n[candidates]\n";
  for (int c = 0; c < m; ++c) {
    out << names.candidates[c];
    for (size_t a = 0; a < ca.size(); ++a) {
      if (candidate_labels[a][c] < 0) continue;
      out << ' ' << names.candidate_attributes[a] << '='
          << names.group_labels[a][candidate_labels[a][c]];
    }
    out << '\n';
  }
  out << "\n[voters]\n";
  for (int v = 0; v < n; ++v) {
    out << names.voters[v];
    for (size_t a = 0; a < va.size(); ++a) {
      if (voter_labels[a][v] < 0) continue;
      out << ' ' << names.voter_attributes[a] << '='
          << names.population_labels[a][voter_labels[a][v]];
    }
    out << " :";
    const Ranking& r = e.ranking(v);
    for (size_t i = 0; i < r.size(); ++i) {
      out << (i ? "," : " ") << names.candidates[r[i]];
    }
    out << '\n';
  }
  if (doc.constraints.has_value()) {
    const ConstraintSet& cs = *doc.constraints;
    out << "\n[constraints]\n";
    for (const auto& [gid, lower] : cs.diversity) {
      out << "diversity " << FormatAttributeIndex(gid, false, names) << ' '
          << lower << '\n';
    }
    for (const auto& [pid, lower] : cs.representation) {
      out << "representation " << FormatAttributeIndex(pid, true, names) << ' '
          << lower << '\n';
    }
    for (const auto& [pid, members] : cs.population_committees) {
      out << "committee " << FormatAttributeIndex(pid, true, names) << ' ';
      for (size_t i = 0; i < members.size(); ++i) {
        out << (i ? "," : "") << names.candidates[members[i]];
      }
      out << '\n';
    }
  }
  return out.str();
}

ElectionDocument ReadElectionFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseElection(buffer.str());
}

void WriteElectionFile(const std::string& path, const ElectionDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << SerializeElection(doc);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string FormatCommittee(std::span<const CandidateId> members,
                            const ElectionNames& names) {
  std::vector<CandidateId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  std::string out = "{";
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ",";
    out += names.candidates.at(sorted[i]);
  }
  return out + "}";
}

std::vector<CandidateId> ParseCommittee(std::string_view text,
                                        const ElectionNames& names) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
    body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.remove_suffix(1);
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<CandidateId> out;
  for (const Token& item : SplitList(body, 0)) {
    auto it = std::find(names.candidates.begin(), names.candidates.end(),
                        item.text);
    if (it == names.candidates.end()) {
      throw LookupError("unknown candidate '" + item.text + "'");
    }
    out.push_back(static_cast<CandidateId>(it - names.candidates.begin()));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw DomainError("committee lists a candidate twice");
  }
  return out;
}

std::string FormatAttributeIndex(const AttributeIndex& id, bool voter_side,
                                 const ElectionNames& names) {
  const auto& attributes =
      voter_side ? names.voter_attributes : names.candidate_attributes;
  const auto& labels =
      voter_side ? names.population_labels : names.group_labels;
  return attributes.at(id.attribute) + "=" +
         labels.at(id.attribute).at(id.index);
}

std::string FormatPopulation(const ScopedPopulation& p,
                             const ElectionNames& names) {
  std::string out;
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += "&";
    out += FormatAttributeIndex(p.parts[i], true, names);
  }
  return out;
}

}  // namespace fairdire
