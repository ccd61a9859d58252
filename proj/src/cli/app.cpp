/// @file
/// @brief CLI task orchestration: compose, diagnose, complete.

#include "cli/app.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "pitch/pitch.h"
#include "render/render.h"
#include "rhythm/partition_tree.h"
#include "rhythm/timed_piece.h"
#include "rules/checker.h"
#include "score/fact_io.h"
#include "score/piece.h"
#include "score/style.h"
#include "solver/search.h"
#include "solver/shuffle.h"

namespace cantus {

namespace {

/// RNG stream id for the rhythm-tree choice, far outside the solver's
/// per-cell stream ids.
constexpr std::uint64_t kTreeChoiceStream = std::uint64_t{1} << 32;

/// How many seeded tree picks to try before declaring the task
/// unsatisfiable under --rhythm.
constexpr int kTreeAttempts = 64;

struct CliOptions {
  std::string task;
  std::string mode_name = "major";
  int time = 16;
  std::string style_name = "solo";
  bool rhythm = false;
  std::string piece_path;
  std::uint64_t seed = kDefaultSeed;
  std::string fundamental_name = "c";
  std::string output = "human";
  long long limit = 1;
  int repeat_window = kDefaultRepeatWindow;
  double seconds = 0.0;  ///< Whole-piece duration; 0 = half a second a step.
  long long node_budget = kDefaultNodeBudget;
  std::string caps_text = "2,2,2";
};

/// Thrown for semantic flag problems; mapped to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- Flag validation ---------------------------------------------------------

LayerCaps parseCaps(const std::string& text) {
  LayerCaps caps;
  char comma1 = 0;
  char comma2 = 0;
  std::istringstream in(text);
  if (!(in >> caps.measure >> comma1 >> caps.beat >> comma2 >> caps.duration) ||
      comma1 != ',' || comma2 != ',' || !(in >> std::ws).eof()) {
    throw UsageError("--caps expects three comma-separated integers, got \"" +
                     text + "\"");
  }
  if (caps.measure < 1 || caps.beat < 0 || caps.duration < 0) {
    throw UsageError("--caps levels must be at least 1,0,0");
  }
  return caps;
}

Mode parseMode(const std::string& name) {
  auto mode = modeFromName(name);
  if (!mode) throw UsageError("unknown mode \"" + name + "\"");
  return *mode;
}

StyleName parseStyle(const std::string& name) {
  auto style = styleFromName(name);
  if (!style) throw UsageError("unknown style \"" + name + "\"");
  return *style;
}

Fundamental parseFundamental(const std::string& name) {
  auto fundamental = fundamentalFromName(name);
  if (!fundamental) throw UsageError("unknown fundamental \"" + name + "\"");
  return *fundamental;
}

void validateCommon(const CliOptions& opts) {
  static const std::set<std::string> kOutputs = {"human", "facts", "events",
                                                 "engraver", "tree"};
  if (kOutputs.count(opts.output) == 0) {
    throw UsageError("unknown output format \"" + opts.output + "\"");
  }
  if ((opts.output == "events" || opts.output == "tree") && !opts.rhythm) {
    throw UsageError("--output=" + opts.output + " requires --rhythm");
  }
  if (opts.limit < 1) throw UsageError("--limit must be at least 1");
  if (opts.repeat_window < kRepeatWindowMin) {
    throw UsageError("--rw must be at least " +
                     std::to_string(kRepeatWindowMin));
  }
  if (opts.seconds < 0) throw UsageError("--seconds must be positive");
  if (opts.node_budget < 0) {
    throw UsageError("--node-budget must be 0 (unlimited) or positive");
  }
}

// --- Piece files ---------------------------------------------------------------

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read piece file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PartialPiece loadPiece(const CliOptions& opts) {
  if (opts.piece_path.empty()) {
    throw UsageError("--task=" + opts.task + " requires --piece");
  }
  try {
    return parseFacts(readFile(opts.piece_path));
  } catch (const FactParseError& error) {
    throw UsageError(opts.piece_path + ": " + error.what());
  }
}

// --- Rendering -----------------------------------------------------------------

double wholeDurationSeconds(const CliOptions& opts, int length) {
  if (opts.seconds > 0) return opts.seconds;
  return 0.5 * length;
}

std::string renderUntimed(const Piece& piece, const CliOptions& opts,
                          Fundamental fundamental) {
  if (opts.output == "facts") return emitFacts(piece);
  if (opts.output == "engraver") return renderEngraver(piece, fundamental);
  return renderHuman(piece, fundamental);
}

std::string renderTimed(const TimedPiece& timed, const CliOptions& opts,
                        Fundamental fundamental) {
  if (opts.output == "facts") return emitFacts(timed.piece);
  if (opts.output == "engraver") return renderEngraver(timed, fundamental);
  if (opts.output == "events") {
    return renderEvents(timed, fundamental,
                        wholeDurationSeconds(opts, timed.piece.length));
  }
  if (opts.output == "tree") return treeToSexpr(timed.tree) + "\n";
  return renderHuman(timed, fundamental);
}

// --- Solving -------------------------------------------------------------------

SolverOptions baseSolverOptions(const CliOptions& opts) {
  SolverOptions options;
  options.rules.repeat_window = opts.repeat_window;
  options.seed = opts.seed;
  options.node_budget = opts.node_budget;
  return options;
}

/// One solve attempt: from scratch for compose, pin-respecting otherwise.
EnumerateResult solveOnce(const CliOptions& opts,
                          const std::optional<PartialPiece>& partial,
                          const StyleSpec& style, Mode mode, int length,
                          const SolverOptions& options) {
  if (partial) return enumerateCompletions(*partial, opts.limit, options);
  return enumeratePieces(style, mode, length, opts.limit, options);
}

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unsatisfiable;
  std::vector<Piece> pieces;
  std::optional<PartitionTree> tree;
};

TreeCount randomIndex(SplitMix64& rng, TreeCount total) {
  TreeCount high = rng.next();
  TreeCount value = (high << 64) | TreeCount{rng.next()};
  return value % total;
}

/// @brief Solve with a rhythm attached.
///
/// Picks a partition tree by seeded index first, folds its duration
/// strengths into the pitch search, and retries with a fresh pick when the
/// combination is unsatisfiable.
SolveOutcome solveWithRhythm(const CliOptions& opts,
                             const std::optional<PartialPiece>& partial,
                             const StyleSpec& style, Mode mode, int length) {
  LayerCaps caps = parseCaps(opts.caps_text);
  TreeCount total = countTrees(length, caps);
  if (total == 0) return {};

  SplitMix64 rng = streamRng(opts.seed, kTreeChoiceStream);
  for (int attempt = 0; attempt < kTreeAttempts; ++attempt) {
    PartitionTree tree = treeAtIndex(length, randomIndex(rng, total), caps);
    SolverOptions options = baseSolverOptions(opts);
    options.rhythm = RhythmProfile{beatInfo(tree).duration_classes};

    EnumerateResult result =
        solveOnce(opts, partial, style, mode, length, options);
    if (result.status == SolveStatus::BudgetExhausted) {
      return {SolveStatus::BudgetExhausted, {}, std::move(tree)};
    }
    if (result.status == SolveStatus::Solved) {
      bool attachable = std::all_of(
          result.pieces.begin(), result.pieces.end(),
          [&](const Piece& piece) { return attachRhythm(piece, tree).accepted(); });
      if (attachable) {
        return {SolveStatus::Solved, std::move(result.pieces), std::move(tree)};
      }
    }
  }
  return {};
}

SolveOutcome solveTask(const CliOptions& opts,
                       const std::optional<PartialPiece>& partial,
                       const StyleSpec& style, Mode mode, int length) {
  if (opts.rhythm) return solveWithRhythm(opts, partial, style, mode, length);
  EnumerateResult result =
      solveOnce(opts, partial, style, mode, length, baseSolverOptions(opts));
  return {result.status, std::move(result.pieces), std::nullopt};
}

// --- Tasks ---------------------------------------------------------------------

int emitOutcome(const SolveOutcome& outcome, const CliOptions& opts,
                Fundamental fundamental, std::ostream& out,
                std::ostream& err) {
  if (outcome.status == SolveStatus::BudgetExhausted) {
    err << "node budget exhausted before a solution was found\n";
    return kExitBudget;
  }
  if (outcome.status == SolveStatus::Unsatisfiable || outcome.pieces.empty()) {
    err << "no piece satisfies the task\n";
    return kExitUnsatisfiable;
  }
  for (std::size_t i = 0; i < outcome.pieces.size(); ++i) {
    if (i > 0) out << "\n";
    if (outcome.tree) {
      AttachResult attach = attachRhythm(outcome.pieces[i], *outcome.tree);
      out << renderTimed(*attach.timed, opts, fundamental);
    } else {
      out << renderUntimed(outcome.pieces[i], opts, fundamental);
    }
  }
  return kExitOk;
}

int runCompose(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.time < kLengthMin || opts.time > kLengthMax) {
    throw UsageError("--time must be in " + std::to_string(kLengthMin) +
                     ".." + std::to_string(kLengthMax));
  }
  StyleSpec style = styleSpec(parseStyle(opts.style_name));
  Mode mode = parseMode(opts.mode_name);
  Fundamental fundamental = parseFundamental(opts.fundamental_name);
  SolveOutcome outcome = solveTask(opts, std::nullopt, style, mode, opts.time);
  return emitOutcome(outcome, opts, fundamental, out, err);
}

int runDiagnose(const CliOptions& opts, std::ostream& out, std::ostream&) {
  PartialPiece partial = loadPiece(opts);
  if (!partial.isComplete()) {
    throw UsageError(opts.piece_path +
                     ": diagnose needs every cell given; use --task=complete "
                     "to fill a partial piece");
  }
  RuleConfig config;
  config.repeat_window = opts.repeat_window;
  for (const ErrorRecord& error : diagnose(partial.toPiece(), config)) {
    out << formatError(error) << "\n";
  }
  return kExitOk;
}

int runComplete(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  PartialPiece partial = loadPiece(opts);
  StyleSpec style = partial.style;
  Mode mode = partial.mode;
  int length = partial.length;
  Fundamental fundamental = parseFundamental(opts.fundamental_name);
  SolveOutcome outcome = solveTask(opts, partial, style, mode, length);
  return emitOutcome(outcome, opts, fundamental, out, err);
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"first-species counterpoint: compose, diagnose, complete"};
  app.name("cantus");

  CliOptions opts;
  app.add_option("--task", opts.task,
                 "compose, diagnose (alias diagnosis), or complete")
      ->required();
  app.add_option("--mode", opts.mode_name,
                 "major, minor, dorian, lydian, or phrygian");
  app.add_option("--time", opts.time, "piece length in time steps");
  app.add_option("--style", opts.style_name,
                 "solo, duet, trio, or quartet");
  app.add_flag("--rhythm", opts.rhythm,
               "pick a partition tree and attach it");
  app.add_option("--piece", opts.piece_path, "fact file to read");
  app.add_option("--seed", opts.seed, "random seed");
  app.add_option("--fundamental", opts.fundamental_name,
                 "pitch letter of lattice note 1 (c, d, e, f, g, a, b)");
  app.add_option("--output", opts.output,
                 "human, facts, events, engraver, or tree");
  app.add_option("--limit", opts.limit, "number of solutions to print");
  app.add_option("--rw", opts.repeat_window,
                 "lookback window for the repetition rules");
  app.add_option("--seconds", opts.seconds,
                 "whole-piece duration for --output=events");
  app.add_option("--node-budget", opts.node_budget,
                 "search node budget, 0 for unlimited");
  app.add_option("--caps", opts.caps_text,
                 "tree layer caps as measure,beat,duration");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& error) {
    err << error.what() << "\n";
    return kExitUsage;
  }

  try {
    validateCommon(opts);
    if (opts.task == "compose") return runCompose(opts, out, err);
    if (opts.task == "diagnose" || opts.task == "diagnosis") {
      return runDiagnose(opts, out, err);
    }
    if (opts.task == "complete") return runComplete(opts, out, err);
    throw UsageError("unknown task \"" + opts.task + "\"");
  } catch (const UsageError& error) {
    err << error.what() << "\n";
    return kExitUsage;
  }
}

int runCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return runCli(args, out, err);
}

}  // namespace cantus
