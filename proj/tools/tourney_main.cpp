// tourney: analyze tournaments (finite weak selections) from the command
// line. Subcommands: gen, enum, scores check|realize, analyze, path,
// triples, flow, kappa search, export.
//
// Exit codes: 0 success; 2 parse/domain error or invalid input;
// 3 search proved no witness exists; 4 search was inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tourney/dominance.hpp"
#include "tourney/flows.hpp"
#include "tourney/generate.hpp"
#include "tourney/io.hpp"
#include "tourney/paths.hpp"
#include "tourney/psel.hpp"
#include "tourney/scores.hpp"

using nlohmann::json;
using namespace tourney;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitProvenNone = 3;
constexpr int kExitInconclusive = 4;
constexpr std::uint64_t kDefaultBudget = 50'000'000;

enum class Format { Human, Structured };

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream file(path);
  if (!file) fail(Errc::ParseError, "cannot open '" + path + "'");
  return slurp(file);
}

// Text documents start with an 'n' header; structured ones with '{'.
TournamentDoc parse_tournament(const std::string& body) {
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) fail(Errc::ParseError, "empty tournament document");
  if (body[first] == '{') {
    json j;
    try {
      j = json::parse(body);
    } catch (const json::exception& e) {
      fail(Errc::ParseError, e.what());
    }
    return read_tournament_json(j);
  }
  std::istringstream in(body);
  return read_tournament_text(in);
}

TournamentDoc load_tournament(const std::string& path) {
  return parse_tournament(read_input(path));
}

// Sequence argument: stdin marker, an existing file, or the inline text.
ScoreSequence load_scores(const std::string& arg) {
  std::string line = arg;
  if (arg == "-") {
    line = slurp(std::cin);
  } else if (std::ifstream file(arg); file) {
    line = slurp(file);
  }
  const auto eol = line.find('\n');
  if (eol != std::string::npos) line = line.substr(0, eol);
  return read_score_line(line);
}

json doc_json(const TournamentDoc& doc) {
  json j = tournament_to_json(doc);
  j["schema_version"] = 1;
  return j;
}

void emit_tournament(const TournamentDoc& doc, Format fmt) {
  if (fmt == Format::Structured) {
    std::cout << doc_json(doc).dump(2) << "\n";
  } else {
    write_tournament_text(std::cout, doc);
  }
}

template <typename T>
std::string join(const std::vector<T>& xs, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

json distances_json(const DistanceMatrix& d) {
  json rows = json::array();
  for (const auto& row : d) {
    json r = json::array();
    for (const auto& cell : row)
      cell ? r.push_back(*cell) : r.push_back(nullptr);
    rows.push_back(r);
  }
  return rows;
}

int run_gen(int n, std::uint64_t seed, Format fmt) {
  emit_tournament({random_tournament(n, Seed{seed}), {}}, fmt);
  return kExitOk;
}

int run_enum(int n, bool classes, bool allow_large, Format fmt) {
  std::vector<Tournament> list;
  if (classes) {
    list = nonisomorphic_representatives(n);
  } else {
    for (const Tournament& t : AllTournaments(n, allow_large)) list.push_back(t);
  }
  if (fmt == Format::Structured) {
    json j;
    j["schema_version"] = 1;
    j["count"] = list.size();
    json docs = json::array();
    for (const Tournament& t : list) docs.push_back(tournament_to_json({t, {}}));
    j["tournaments"] = docs;
    std::cout << j.dump(2) << "\n";
  } else {
    bool first = true;
    for (const Tournament& t : list) {
      if (!first) std::cout << "\n";
      first = false;
      write_tournament_text(std::cout, {t, {}});
    }
  }
  return kExitOk;
}

int run_scores_check(const std::string& arg, Format fmt) {
  const ScoreSequence seq = load_scores(arg);
  const auto why = landau_violation(seq);
  if (fmt == Format::Structured) {
    json j;
    j["schema_version"] = 1;
    j["scores"] = seq.values();
    j["valid"] = !why.has_value();
    if (why) j["reason"] = *why;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (why ? "invalid: " + *why : "valid") << "\n";
  }
  return why ? kExitInvalid : kExitOk;
}

int run_scores_realize(const std::string& arg, Format fmt) {
  emit_tournament({realize(load_scores(arg)), {}}, fmt);
  return kExitOk;
}

int run_analyze(const std::string& input, Format fmt) {
  const TournamentDoc doc = load_tournament(input);
  const DominanceReport rep = classify(doc.t);
  if (fmt == Format::Structured) {
    json j;
    j["schema_version"] = 1;
    j["n"] = doc.t.order();
    j["emperor"] = rep.emperor ? json(*rep.emperor) : json(nullptr);
    j["kings"] = rep.kings;
    j["slaves"] = rep.slaves;
    j["serfs"] = rep.serfs;
    j["max_score_kings"] = kings_by_max_score(doc.t);
    j["distances"] = distances_json(rep.distances);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "n: " << doc.t.order() << "\n";
  std::cout << "emperor: " << (rep.emperor ? std::to_string(*rep.emperor) : "none") << "\n";
  std::cout << "kings: " << join(rep.kings) << "\n";
  std::cout << "slaves: " << (rep.slaves.empty() ? "none" : join(rep.slaves)) << "\n";
  std::cout << "serfs: " << (rep.serfs.empty() ? "none" : join(rep.serfs)) << "\n";
  std::cout << "distances:\n";
  for (int u = 0; u < doc.t.order(); ++u) {
    std::cout << "  " << u << ":";
    for (const auto& cell : rep.distances[u])
      std::cout << " " << (cell ? std::to_string(*cell) : "-");
    std::cout << "\n";
  }
  return kExitOk;
}

int run_path(const std::string& input, bool with_count, Format fmt) {
  const TournamentDoc doc = load_tournament(input);
  const CompletePath p = redei_path(doc.t);
  std::optional<std::uint64_t> count;
  if (with_count) count = count_complete_paths(doc.t);
  if (fmt == Format::Structured) {
    json j;
    j["schema_version"] = 1;
    j["path"] = p.order;
    if (count) j["count"] = *count;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "path: " << join(p.order) << "\n";
    if (count) std::cout << "count: " << *count << "\n";
  }
  return kExitOk;
}

int run_triples(const std::string& input, int extremal, Format fmt) {
  if (extremal > 0) {
    const ExtremalCyclic ex = max_cyclic_witness(extremal);
    if (fmt == Format::Structured) {
      json j;
      j["schema_version"] = 1;
      j["n"] = extremal;
      j["max_cyclic"] = ex.count;
      j["formula"] = max_cyclic_triples(extremal);
      j["witness"] = tournament_to_json({ex.witness, {}});
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "max cyclic triples at n=" << extremal << ": " << ex.count << "\n";
      std::cout << "witness:\n";
      write_tournament_text(std::cout, {ex.witness, {}});
    }
    return kExitOk;
  }
  const TournamentDoc doc = load_tournament(input);
  const std::uint64_t trans = transitive_triples_count(doc.t);
  const std::uint64_t cyc = cyclic_triples_count(doc.t);
  if (fmt == Format::Structured) {
    json j;
    j["schema_version"] = 1;
    j["transitive"] = trans;
    j["cyclic"] = cyc;
    j["total"] = trans + cyc;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "transitive: " << trans << "\n";
    std::cout << "cyclic: " << cyc << "\n";
    std::cout << "total: " << trans + cyc << "\n";
  }
  return kExitOk;
}

int run_flow(const std::string& input, Format fmt) {
  const TournamentDoc doc = load_tournament(input);
  const int n = doc.t.order();
  const SelectionFlow f = selection_flow(doc.t);
  std::vector<long long> phi(n);
  for (int a = 0; a < n; ++a) phi[a] = total_flow(f, a);
  const long long sum = flow_sum(f);
  const bool even = n >= 4 && n % 2 == 0;

  if (fmt == Format::Structured) {
    json j;
    j["schema_version"] = 1;
    j["phi"] = phi;
    j["sum"] = sum;
    if (n == 4)
      j["dichotomy"] =
          k4_dichotomy(f) == K4Class::EmperorLike ? "emperor-like" : "all-unit";
    if (even) {
      const EvenPartition part = even_partition(doc.t);
      j["positive"] = part.positive;
      j["negative"] = part.negative;
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "phi: " << join(phi) << "\n";
  std::cout << "sum: " << sum << "\n";
  if (n == 4)
    std::cout << "dichotomy: "
              << (k4_dichotomy(f) == K4Class::EmperorLike ? "emperor-like" : "all-unit")
              << "\n";
  if (even) {
    const EvenPartition part = even_partition(doc.t);
    std::cout << "positive: " << join(part.positive) << "\n";
    std::cout << "negative: " << join(part.negative) << "\n";
  }
  return kExitOk;
}

const char* verdict_name(KappaVerdict v) {
  switch (v) {
    case KappaVerdict::ImpossibleByCount: return "impossible-by-count";
    case KappaVerdict::ImpossibleByPrime: return "impossible-by-prime";
    case KappaVerdict::Candidate: return "candidate";
  }
  return "?";
}

int run_kappa_search(int m, int p, std::uint64_t budget, Format fmt) {
  const KappaVerdict verdict = constant_kappa_precheck(m, p);
  const KappaSearchResult res = search_constant_kappa(m, p, budget);
  const char* status = res.status == KappaSearchResult::Status::FoundWitness ? "witness"
                       : res.status == KappaSearchResult::Status::ExhaustedNone
                           ? "none"
                           : "inconclusive";
  if (fmt == Format::Structured) {
    json j;
    j["schema_version"] = 1;
    j["m"] = m;
    j["p"] = p;
    j["precheck"] = verdict_name(verdict);
    j["status"] = status;
    j["nodes"] = res.nodes_visited;
    if (res.witness) {
      json choices = json::array();
      for (std::uint64_t r = 0; r < res.witness->domain_size(); ++r)
        choices.push_back({{"subset", res.witness->subset_at(r)},
                           {"chosen", res.witness->choice_at(r)}});
      j["choices"] = choices;
      const KappaProfile prof = kappa(*res.witness);
      j["kappa"] = prof.counts;
      j["min_set"] = prof.min_set();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "precheck: " << verdict_name(verdict) << "\n";
    std::cout << "status: " << status << "\n";
    std::cout << "nodes: " << res.nodes_visited << "\n";
    if (res.witness) {
      for (std::uint64_t r = 0; r < res.witness->domain_size(); ++r)
        std::cout << join(res.witness->subset_at(r)) << " -> " << res.witness->choice_at(r)
                  << "\n";
      const KappaProfile prof = kappa(*res.witness);
      std::cout << "kappa: " << join(prof.counts) << "\n";
      std::cout << "min-set: " << join(prof.min_set()) << "\n";
    }
  }
  switch (res.status) {
    case KappaSearchResult::Status::FoundWitness: return kExitOk;
    case KappaSearchResult::Status::ExhaustedNone: return kExitProvenNone;
    case KappaSearchResult::Status::BudgetExceeded: return kExitInconclusive;
  }
  return kExitInvalid;
}

int run_export(const std::string& input) {
  std::cout << export_graphviz(load_tournament(input));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tournament and weak-selection analysis toolkit"};
  app.require_subcommand(1);
  // let --format reach the parent app from behind any subcommand
  app.fallthrough();

  std::string format_name = "human";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();

  int n = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  bool allow_large = false;
  bool classes = false;
  bool with_count = false;
  int extremal = 0;
  std::string input = "-";
  std::string seq_arg;
  int kappa_m = 0, kappa_p = 0;

  auto* gen = app.add_subcommand("gen", "generate a seeded random tournament");
  gen->add_option("-n,--order", n, "vertex count")->required();
  gen->add_option("--seed", seed, "64-bit generator seed")->capture_default_str();

  auto* enum_cmd = app.add_subcommand("enum", "enumerate all labeled tournaments");
  enum_cmd->add_option("-n,--order", n, "vertex count")->required();
  enum_cmd->add_flag("--classes", classes, "one representative per isomorphism class");
  enum_cmd->add_flag("--allow-large", allow_large, "permit n = 7 (2^21 tournaments)");

  auto* scores_cmd = app.add_subcommand("scores", "score-sequence operations");
  scores_cmd->require_subcommand(1);
  auto* check = scores_cmd->add_subcommand("check", "test Landau's condition");
  check->add_option("sequence", seq_arg, "comma-separated scores, file, or -")->required();
  auto* realize_cmd = scores_cmd->add_subcommand("realize", "build a tournament with the scores");
  realize_cmd->add_option("sequence", seq_arg, "comma-separated scores, file, or -")->required();

  auto* analyze = app.add_subcommand("analyze", "dominance report: emperor, kings, distances");
  analyze->add_option("input", input, "tournament document or -")->capture_default_str();

  auto* path = app.add_subcommand("path", "complete path through every vertex");
  path->add_option("input", input, "tournament document or -")->capture_default_str();
  path->add_flag("--count", with_count, "also count all complete paths (n <= 8)");

  auto* triples = app.add_subcommand("triples", "transitive and cyclic triple counts");
  triples->add_option("input", input, "tournament document or -")->capture_default_str();
  triples->add_option("--extremal", extremal, "exhaustive max-cyclic witness for this order")
      ->check(CLI::PositiveNumber);

  auto* flow = app.add_subcommand("flow", "selection flow: phi vector, partition, dichotomy");
  flow->add_option("input", input, "tournament document or -")->capture_default_str();

  auto* kappa_cmd = app.add_subcommand("kappa", "p-subset selection analysis");
  kappa_cmd->require_subcommand(1);
  auto* search = kappa_cmd->add_subcommand("search", "hunt a constant-kappa selection");
  search->add_option("m", kappa_m, "ground-set size")->required();
  search->add_option("p", kappa_p, "subset size")->required();
  search->add_option("--budget", budget, "search-node budget")->capture_default_str();

  auto* export_cmd = app.add_subcommand("export", "DOT graph description");
  export_cmd->add_option("input", input, "tournament document or -")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  const Format fmt = format_name == "structured" ? Format::Structured : Format::Human;

  try {
    if (gen->parsed()) return run_gen(n, seed, fmt);
    if (enum_cmd->parsed()) return run_enum(n, classes, allow_large, fmt);
    if (check->parsed()) return run_scores_check(seq_arg, fmt);
    if (realize_cmd->parsed()) return run_scores_realize(seq_arg, fmt);
    if (analyze->parsed()) return run_analyze(input, fmt);
    if (path->parsed()) return run_path(input, with_count, fmt);
    if (triples->parsed()) return run_triples(input, extremal, fmt);
    if (flow->parsed()) return run_flow(input, fmt);
    if (search->parsed()) return run_kappa_search(kappa_m, kappa_p, budget, fmt);
    if (export_cmd->parsed()) return run_export(input);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitInvalid;
}
