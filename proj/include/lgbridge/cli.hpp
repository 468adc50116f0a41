// Command-line front end: compute, verify and batch subcommands.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgbridge/braid.hpp"

namespace lgbridge {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct TableEntry {
  std::string name;
  BraidWord braid;
};

/// Parses "name; strands; w1 w2 ...". Returns nothing for blank and '#'
/// comment lines; throws std::invalid_argument on malformed lines.
std::optional<TableEntry> parse_table_line(const std::string& line);

enum class InvariantSelector { kAlexanderDet, kAlexanderTrace, kLg21, kLg21Special, kLg31Special, kAll };

/// Throws std::invalid_argument for an unknown name.
InvariantSelector parse_selector(const std::string& name);

/// Invariants of one braid as a JSON object keyed by invariant name, plus
/// unit comparisons with the Alexander polynomial when both sides are present.
nlohmann::json compute_invariants(const BraidWord& b, InvariantSelector which);

/// Text rendering of compute_invariants' result.
std::string render_text(const nlohmann::json& invariants, InvariantSelector which);

/// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgbridge
