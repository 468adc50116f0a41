// Named, seedable identity checks over a braid corpus and random braids,
// with machine-readable reports.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgbridge/braid.hpp"
#include "lgbridge/scalar.hpp"

namespace lgbridge {

struct NamedBraid {
  std::string name;
  BraidWord braid;
  bool knot = false;  // closure has one component
};

/// Unknots, Hopf link, trefoil, figure-eight, 5_1, a granny knot on four
/// strands and identity braids.
const std::vector<NamedBraid>& corpus();

/// Unset fields take the check's defaults.
struct CheckParams {
  std::optional<int> strands;             // largest strand count for random braids
  std::optional<std::size_t> length;      // largest random word length
  std::optional<std::uint64_t> seed;
  std::optional<int> count;               // number of random braids
  std::optional<BraidWord> braid;         // check this braid only
  bool corrupt = false;                   // perturb one R-matrix entry (negative control)
};

struct ResolvedParams {
  int strands = 3;
  std::size_t length = 8;
  std::uint64_t seed = 1;
  int count = 10;
  std::optional<BraidWord> braid;
  bool corrupt = false;
};

struct CaseUnit {
  std::string label;
  Unit unit;
};

struct Counterexample {
  std::string label;                  // corpus name or "random#k"
  std::optional<BraidWord> braid;
  std::uint64_t seed = 0;
  std::string mismatch;
};

struct CheckReport {
  std::string name;
  ResolvedParams params;
  bool passed = true;
  int cases = 0;
  std::vector<CaseUnit> units;
  std::optional<Counterexample> counterexample;
  std::string note;
};

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CheckInfo {
  std::string name;
  std::string description;
  ResolvedParams defaults;
};

const std::vector<CheckInfo>& list_checks();

/// Throws UnknownCheck for an unknown name.
CheckReport run_check(const std::string& name, const CheckParams& params = {});

/// Every registered check with its defaults (seed overridable).
std::vector<CheckReport> run_suite(std::optional<std::uint64_t> seed = std::nullopt);

nlohmann::json to_json(const CheckReport& report);

/// i-th random braid of a check: strand count in [2, max_strands], length in
/// [0, max_length], derived deterministically from the seed.
BraidWord check_random_braid(std::uint64_t seed, int index, int max_strands, std::size_t max_length);

}  // namespace lgbridge
