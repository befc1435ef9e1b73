#include "tourney/io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace tourney {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int parse_int(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    fail(Errc::ParseError, what + ": '" + token + "' is not an integer");
  }
  if (used != token.size())
    fail(Errc::ParseError, what + ": trailing characters in '" + token + "'");
  return value;
}

int checked_int(const nlohmann::json& v, const char* what) {
  const long long x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    fail(Errc::ParseError, std::string(what) + " out of range");
  return static_cast<int>(x);
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

TournamentDoc read_tournament_text(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Arc> arcs;
  std::vector<std::pair<int, std::string>> labels;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (n < 0) {
      if (head != "n")
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'n <count>' first");
      std::string count;
      if (!(ls >> count)) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": missing count");
      n = parse_int(count, "vertex count");
      std::string extra;
      if (ls >> extra) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": trailing tokens");
      continue;
    }
    if (head == "label") {
      std::string idx, name;
      if (!(ls >> idx) || !(ls >> name))
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'label <index> <name>'");
      labels.emplace_back(parse_int(idx, "label index"), name);
      continue;
    }
    std::string second;
    if (!(ls >> second))
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'u v' arc");
    std::string extra;
    if (ls >> extra) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": trailing tokens");
    arcs.emplace_back(parse_int(head, "arc winner"), parse_int(second, "arc loser"));
  }
  if (n < 0) fail(Errc::ParseError, "document has no 'n <count>' line");

  TournamentDoc doc{Tournament::from_arcs(n, arcs), {}};
  if (!labels.empty()) {
    doc.labels.assign(n, "");
    for (const auto& [idx, name] : labels) {
      if (idx < 0 || idx >= n) fail(Errc::ParseError, "label index " + std::to_string(idx));
      doc.labels[idx] = name;
    }
  }
  return doc;
}

void write_tournament_text(std::ostream& out, const TournamentDoc& doc) {
  out << "n " << doc.t.order() << "\n";
  for (const auto& [w, l] : doc.t.arcs()) out << w << " " << l << "\n";
  for (std::size_t i = 0; i < doc.labels.size(); ++i)
    if (!doc.labels[i].empty()) out << "label " << i << " " << doc.labels[i] << "\n";
}

TournamentDoc read_tournament_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    fail(Errc::ParseError, "document needs 'n' and 'arcs' fields");
  if (!j["n"].is_number_integer()) fail(Errc::ParseError, "'n' must be an integer");
  const int n = checked_int(j["n"], "'n'");
  if (!j["arcs"].is_array()) fail(Errc::ParseError, "'arcs' must be an array");
  std::vector<Arc> arcs;
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      fail(Errc::ParseError, "each arc must be a [winner, loser] integer pair");
    arcs.emplace_back(checked_int(a[0], "arc winner"), checked_int(a[1], "arc loser"));
  }
  TournamentDoc doc{Tournament::from_arcs(n, arcs), {}};
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != n)
      fail(Errc::ParseError, "'labels' must list one name per vertex");
    for (const auto& name : j["labels"]) {
      if (!name.is_string()) fail(Errc::ParseError, "labels must be strings");
      doc.labels.push_back(name.get<std::string>());
    }
  }
  return doc;
}

nlohmann::json tournament_to_json(const TournamentDoc& doc) {
  nlohmann::json j;
  j["n"] = doc.t.order();
  auto arcs = nlohmann::json::array();
  for (const auto& [w, l] : doc.t.arcs()) arcs.push_back({w, l});
  j["arcs"] = arcs;
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  return j;
}

ScoreSequence read_score_line(const std::string& line) {
  const std::string body = trim(line);
  if (body.empty()) fail(Errc::ParseError, "empty score line");
  std::vector<int> scores;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    const std::string token = trim(body.substr(start, comma - start));
    if (token.empty()) fail(Errc::ParseError, "empty entry in score line");
    scores.push_back(parse_int(token, "score entry"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ScoreSequence(std::move(scores));
}

std::string score_line(const ScoreSequence& seq) {
  std::string out;
  for (int i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(seq.values()[i]);
  }
  return out;
}

std::string export_graphviz(const TournamentDoc& doc) {
  std::ostringstream out;
  out << "digraph tournament {\n";
  for (int v = 0; v < doc.t.order(); ++v) {
    out << "  " << v;
    if (v < static_cast<int>(doc.labels.size()) && !doc.labels[v].empty())
      out << " [label=" << quote_dot(doc.labels[v]) << "]";
    out << ";\n";
  }
  for (const auto& [w, l] : doc.t.arcs()) out << "  " << w << " -> " << l << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tourney
