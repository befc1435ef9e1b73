#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tourney/core.hpp"
#include "tourney/scores.hpp"

namespace tourney {

/// A tournament plus optional vertex names. labels is empty or has one
/// entry per vertex; empty strings fall back to the index.
struct TournamentDoc {
  Tournament t;
  std::vector<std::string> labels;
};

/// Line-oriented text format:
///   # comment
///   n 3
///   0 2
///   2 1
///   1 0
///   label 0 alice        (optional)
/// Every pair must be covered by exactly one arc line.
TournamentDoc read_tournament_text(std::istream& in);
void write_tournament_text(std::ostream& out, const TournamentDoc& doc);

/// Structured format: {"n": 3, "arcs": [[0,2],[1,0],[2,1]], "labels": [...]}.
TournamentDoc read_tournament_json(const nlohmann::json& j);
nlohmann::json tournament_to_json(const TournamentDoc& doc);

/// One comma-separated line, e.g. "0,1,2,3".
ScoreSequence read_score_line(const std::string& line);
std::string score_line(const ScoreSequence& seq);

/// DOT digraph, arcs sorted, byte-stable across runs.
std::string export_graphviz(const TournamentDoc& doc);

}  // namespace tourney
