#include "lgbridge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lgbridge/burau.hpp"
#include "lgbridge/links_gould.hpp"
#include "lgbridge/parallel.hpp"
#include "lgbridge/serialize.hpp"
#include "lgbridge/verifier.hpp"

namespace lgbridge {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_strands(const std::string& text) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad strand count '" + text + "'");
  }
  if (used != text.size() || n < 1) throw std::invalid_argument("bad strand count '" + text + "'");
  return n;
}

const std::vector<std::pair<std::string, InvariantSelector>>& selector_names() {
  static const std::vector<std::pair<std::string, InvariantSelector>> names = {
      {"alexander-det", InvariantSelector::kAlexanderDet}, {"alexander-trace", InvariantSelector::kAlexanderTrace},
      {"lg21", InvariantSelector::kLg21},                   {"lg21-special", InvariantSelector::kLg21Special},
      {"lg31-special", InvariantSelector::kLg31Special},    {"all", InvariantSelector::kAll},
  };
  return names;
}

bool wants(InvariantSelector which, InvariantSelector one) {
  return which == InvariantSelector::kAll || which == one;
}

// Order in which invariants are printed.
const std::vector<std::pair<std::string, InvariantSelector>>& output_keys() {
  static const std::vector<std::pair<std::string, InvariantSelector>> keys = {
      {"alexander_det", InvariantSelector::kAlexanderDet}, {"alexander_trace", InvariantSelector::kAlexanderTrace},
      {"lg21", InvariantSelector::kLg21},                   {"lg21_special", InvariantSelector::kLg21Special},
      {"lg31_special", InvariantSelector::kLg31Special},
  };
  return keys;
}

}  // namespace

std::optional<TableEntry> parse_table_line(const std::string& line) {
  const std::string body = trim(line);
  if (body.empty() || body[0] == '#') return std::nullopt;
  std::vector<std::string> fields;
  std::stringstream ss(body);
  std::string field;
  while (std::getline(ss, field, ';')) fields.push_back(trim(field));
  if (body.back() == ';') fields.emplace_back();
  if (fields.size() != 3) throw std::invalid_argument("expected 'name; strands; word', got '" + body + "'");
  if (fields[0].empty()) throw std::invalid_argument("empty name");
  return TableEntry{fields[0], parse_braid(fields[2], parse_strands(fields[1]))};
}

InvariantSelector parse_selector(const std::string& name) {
  for (const auto& [n, s] : selector_names())
    if (n == name) return s;
  throw std::invalid_argument("unknown invariant '" + name + "'");
}

json compute_invariants(const BraidWord& b, InvariantSelector which) {
  json out = json::object();
  std::optional<LaurentHalf> det;
  auto need_det = [&]() -> const LaurentHalf& {
    if (!det) det = alexander_det(b);
    return *det;
  };
  json units = json::object();
  auto relate = [&](const std::string& key, const LaurentHalf& value, int power) {
    LaurentHalf target(1);
    for (int k = 0; k < power; ++k) target = target * need_det();
    const auto u = equal_up_to_unit(value, target);
    units[key] = u ? to_json(*u) : json(nullptr);
  };
  if (wants(which, InvariantSelector::kAlexanderDet)) out["alexander_det"] = to_json(normalize_unit(need_det()));
  if (wants(which, InvariantSelector::kAlexanderTrace)) {
    const auto v = alexander_trace(b, SmallR::kR1, AlexanderWeight::kH, true);
    out["alexander_trace"] = to_json(normalize_unit(v));
    if (which == InvariantSelector::kAll) relate("alexander_trace_vs_alexander_det", v, 1);
  }
  if (wants(which, InvariantSelector::kLg21)) out["lg21"] = to_json(lg21_two_variable(b));
  if (wants(which, InvariantSelector::kLg21Special)) {
    const auto v = lg_invariant(b, LgFlavor::kLg21Special);
    out["lg21_special"] = to_json(normalize_unit(v));
    if (which == InvariantSelector::kAll) relate("lg21_special_vs_alexander_squared", v, 2);
  }
  if (wants(which, InvariantSelector::kLg31Special)) {
    const auto v = lg_invariant(b, LgFlavor::kLg31Special);
    out["lg31_special"] = to_json(normalize_unit(v));
    if (which == InvariantSelector::kAll) relate("lg31_special_vs_alexander_cubed", v, 3);
  }
  if (!units.empty()) out["units"] = units;
  return out;
}

std::string render_text(const json& invariants, InvariantSelector which) {
  std::ostringstream os;
  for (const auto& [key, selector] : output_keys()) {
    if (!invariants.contains(key)) continue;
    const std::string text = key == "lg21" ? to_string(ext_scalar_from_json(invariants.at(key)))
                                           : to_string(laurent_from_json(invariants.at(key)));
    if (which == InvariantSelector::kAll)
      os << key << ": " << text << "\n";
    else
      os << text << "\n";
  }
  return os.str();
}

namespace {

int cmd_compute(const std::string& braid_text, int strands, const std::string& invariant, const std::string& format,
                std::ostream& out, std::ostream& err) {
  InvariantSelector which;
  std::optional<BraidWord> b;
  try {
    which = parse_selector(invariant);
    b = parse_braid(braid_text, strands);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const json inv = compute_invariants(*b, which);
  if (format == "json") {
    json doc = to_json(*b);
    doc["invariants"] = inv;
    out << doc.dump() << "\n";
  } else {
    out << render_text(inv, which);
  }
  return kExitOk;
}

int cmd_verify(const std::string& target, const CheckParams& params, std::ostream& out, std::ostream& err) {
  std::vector<CheckReport> reports;
  try {
    if (target == "suite") {
      if (params.braid || params.corrupt) {
        err << "error: --braid and --corrupt apply to single checks only\n";
        return kExitUsage;
      }
      reports = run_suite(params.seed);
    } else {
      reports.push_back(run_check(target, params));
    }
  } catch (const UnknownCheck& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  bool all = true;
  for (const auto& r : reports) {
    out << to_json(r).dump() << "\n";
    all = all && r.passed;
  }
  return all ? kExitOk : kExitFailure;
}

int cmd_batch(const std::string& input, const std::string& output, const std::string& invariant, std::ostream& out,
              std::ostream& err) {
  InvariantSelector which;
  try {
    which = parse_selector(invariant);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::ifstream in(input);
  if (!in) {
    err << "error: cannot read " << input << "\n";
    return kExitUsage;
  }
  std::ofstream sink;
  std::ostream* dest = &out;
  if (!output.empty() && output != "-") {
    sink.open(output);
    if (!sink) {
      err << "error: cannot write " << output << "\n";
      return kExitUsage;
    }
    dest = &sink;
  }
  int ok = 0, failed = 0, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    json record;
    try {
      const auto entry = parse_table_line(line);
      if (!entry) continue;
      record = {{"name", entry->name}};
      record.update(to_json(entry->braid));
      record["invariants"] = compute_invariants(entry->braid, which);
      ++ok;
    } catch (const std::exception& e) {
      record = {{"line", line_no}, {"input", trim(line)}, {"error", e.what()}};
      ++failed;
    }
    *dest << record.dump() << "\n";
  }
  if (dest != &out) out << ok << " ok, " << failed << " failed\n";
  else err << ok << " ok, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alexander and Links-Gould invariants of braid closures", "lgbridge"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = one per hardware thread)");

  auto* compute = app.add_subcommand("compute", "compute invariants of one braid");
  std::string braid_text;
  int strands = 0;
  std::string invariant = "all";
  std::string format = "text";
  compute->add_option("--braid", braid_text, "signed generator indices, e.g. \"1 -2 1 -2\"");
  compute->add_option("--strands", strands, "number of strands")->required();
  compute->add_option("--invariant", invariant,
                      "alexander-det | alexander-trace | lg21 | lg21-special | lg31-special | all");
  compute->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run a named identity check or the whole suite");
  std::string target;
  std::optional<std::uint64_t> seed;
  std::optional<int> v_strands, count;
  std::optional<std::size_t> length;
  std::string v_braid;
  bool corrupt = false, list = false;
  verify->add_option("check", target, "check name or 'suite'");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--strands", v_strands, "largest strand count (or the strand count of --braid)");
  verify->add_option("--length", length, "largest random word length");
  verify->add_option("--count", count, "number of random braids");
  auto* braid_opt = verify->add_option("--braid", v_braid, "check this braid only");
  verify->add_flag("--corrupt", corrupt, "perturb one R-matrix entry (negative control)");
  verify->add_flag("--list", list, "list the available checks");

  auto* batch = app.add_subcommand("batch", "compute invariants for every line of a knot table");
  std::string input, output;
  std::string b_invariant = "all";
  batch->add_option("--input", input, "table of 'name; strands; word' lines")->required();
  batch->add_option("--output", output, "JSON-lines output file (default: standard output)");
  batch->add_option("--invariant", b_invariant, "invariant selector as for compute");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  set_worker_count(threads);

  if (*compute) return cmd_compute(braid_text, strands, invariant, format, out, err);

  if (*verify) {
    if (list) {
      for (const auto& c : list_checks()) out << c.name << "  " << c.description << "\n";
      return kExitOk;
    }
    if (target.empty()) {
      err << "error: missing check name (use --list)\n";
      return kExitUsage;
    }
    CheckParams params;
    params.seed = seed;
    params.strands = v_strands;
    params.length = length;
    params.count = count;
    params.corrupt = corrupt;
    if (braid_opt->count() > 0) {
      if (!v_strands) {
        err << "error: --braid needs --strands\n";
        return kExitUsage;
      }
      try {
        params.braid = parse_braid(v_braid, *v_strands);
      } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
      }
    }
    return cmd_verify(target, params, out, err);
  }

  return cmd_batch(input, output, b_invariant, out, err);
}

}  // namespace lgbridge
