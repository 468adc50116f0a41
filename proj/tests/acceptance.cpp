// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails. An optional argument selects a single criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lgbridge/burau.hpp"
#include "lgbridge/exterior.hpp"
#include "lgbridge/links_gould.hpp"
#include "lgbridge/verifier.hpp"
#include "oracle.hpp"

namespace {

using namespace lgbridge;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 = no runtime target
  std::function<Outcome()> run;
};

std::vector<NamedBraid> corpus_plus_random(int count, int max_strands, std::size_t max_length, std::uint64_t seed) {
  std::vector<NamedBraid> out = corpus();
  for (int i = 0; i < count; ++i)
    out.push_back({"random#" + std::to_string(i), check_random_braid(seed, i, max_strands, max_length), false});
  return out;
}

std::string describe(const NamedBraid& e) {
  return e.name + " [B" + std::to_string(e.braid.strands()) + ": " + e.braid.to_text() + "]";
}

Outcome fail_on(const NamedBraid& e, const std::string& what) { return {false, describe(e) + ": " + what}; }

LaurentHalf power(const LaurentHalf& x, int k) {
  LaurentHalf out(1);
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

Outcome yang_baxter() {
  std::vector<std::string> bad;
  if (yang_baxter_violation(r_small(SmallR::kR1))) bad.push_back("R1");
  if (yang_baxter_violation(r_small(SmallR::kR3))) bad.push_back("R3");
  if (yang_baxter_violation(r_lg21())) bad.push_back("R two-variable");
  if (yang_baxter_violation(r_lg21_special())) bad.push_back("R at t1=1/t0");
  if (yang_baxter_violation(s_lg31())) bad.push_back("S");
  if (!bad.empty()) {
    std::string s = "violated for";
    for (const auto& b : bad) s += " " + b;
    return {false, s};
  }
  return {true, "R1, R3, two-variable R, specialized R, S"};
}

Outcome alexander_paths() {
  const auto cases = corpus_plus_random(50, 4, 10, 2024);
  for (const auto& e : cases) {
    const std::vector<std::pair<std::string, LaurentHalf>> values = {
        {"det", alexander_det(e.braid)},
        {"trace R1/h", alexander_trace(e.braid, SmallR::kR1, AlexanderWeight::kH, true)},
        {"trace R3/h~", alexander_trace(e.braid, SmallR::kR3, AlexanderWeight::kHTilde, false)},
        {"exterior Psi/mu1", alexander_exterior(e.braid, AlexanderPath::kViaPsiMu1)},
        {"exterior G/nu", alexander_exterior(e.braid, AlexanderPath::kViaGNu)},
    };
    for (std::size_t a = 0; a < values.size(); ++a)
      for (std::size_t b = a + 1; b < values.size(); ++b)
        if (!equal_up_to_unit(values[a].second, values[b].second))
          return fail_on(e, values[a].first + " = " + to_string(values[a].second) + " vs " + values[b].first + " = " +
                                to_string(values[b].second));
  }
  return {true, std::to_string(cases.size()) + " braids, 5 paths pairwise"};
}

Outcome corpus_values() {
  using oracle::t;
  struct Case {
    std::string name;
    BraidWord braid;
    oracle::Poly expected;
  };
  const std::vector<Case> cases = {
      {"unknot", BraidWord(1), oracle::Poly(1)},
      {"hopf", parse_braid("1 1", 2), oracle::Poly(1) - t(2)},
      {"trefoil", parse_braid("1 1 1", 2), oracle::Poly(1) - t(2) + t(4)},
      {"figure_eight", parse_braid("1 -2 1 -2", 3), oracle::Poly(3) - t(2) - t(-2)},
      {"cinquefoil", parse_braid("1 1 1 1 1", 2), oracle::Poly(1) - t(2) + t(4) - t(6) + t(8)},
  };
  std::ostringstream os;
  for (const auto& c : cases) {
    if (c.braid.strands() > 1) {
      std::vector<int> word;
      for (const auto& l : c.braid.letters()) word.push_back(l.index * l.sign);
      if (!oracle::equal_up_to_unit(oracle::alexander(c.braid.strands(), word), c.expected))
        return {false, c.name + ": reference determinant disagrees with the expected value"};
    }
    const auto value = alexander_det(c.braid);
    if (!oracle::equal_up_to_unit(oracle::from_library(value), c.expected))
      return {false, c.name + ": got " + to_string(value)};
    os << c.name << "=" << to_string(normalize_unit(value)) << "; ";
  }
  return {true, os.str()};
}

Outcome main_theorem(LgFlavor flavor, int power_of_det, int count, int max_strands, std::size_t max_length) {
  const auto cases = corpus_plus_random(count, max_strands, max_length, 77);
  for (const auto& e : cases) {
    const auto lg = lg_invariant(e.braid, flavor);
    const auto target = power(alexander_det(e.braid), power_of_det);
    if (!equal_up_to_unit(lg, target))
      return fail_on(e, "LG = " + to_string(lg) + ", det^" + std::to_string(power_of_det) + " = " + to_string(target));
  }
  return {true, std::to_string(cases.size()) + " braids"};
}

Outcome intertwiners() {
  int checks = 0;
  auto all_generators = [&](IntertwinerKind kind, int max_n) -> std::optional<std::string> {
    for (int n = 1; n <= max_n; ++n) {
      const Intertwiner map(kind, n);
      if (!map.is_bijection()) return "not a bijection at n=" + std::to_string(n);
      for (int i = 1; i < n; ++i)
        for (int s : {1, -1}) {
          ++checks;
          if (auto code = intertwining_violation(map, tensor_operator_for(kind), BraidWord(n, {{i, s}})))
            return "n=" + std::to_string(n) + " sigma_" + std::to_string(i) + (s < 0 ? "^-1" : "") + " basis code " +
                   std::to_string(*code);
        }
    }
    return std::nullopt;
  };
  const std::vector<std::tuple<IntertwinerKind, int, const char*>> suites = {
      {IntertwinerKind::kI21, 4, "I(2,1)"},
      {IntertwinerKind::kJ, 5, "J"},
      {IntertwinerKind::kK, 5, "K"},
      {IntertwinerKind::kI31, 3, "I(3,1)"}};
  for (const auto& [kind, max_n, name] : suites)
    if (auto err = all_generators(kind, max_n)) return {false, std::string(name) + ": " + *err};
  return {true, std::to_string(checks) + " generator commutations, exhaustive on each tensor basis"};
}

Outcome product_form() {
  for (const auto& e : corpus()) {
    const auto p21 = lg_product(e.braid, ProductFlavor::kLg21);
    const auto l21 = lg_invariant(e.braid, LgFlavor::kLg21Special);
    if (!(p21 == l21)) return fail_on(e, "(2,1) product " + to_string(p21) + " vs trace " + to_string(l21));
    const auto p31 = lg_product(e.braid, ProductFlavor::kLg31);
    const auto l31 = lg_invariant(e.braid, LgFlavor::kLg31Special);
    if (!(p31 == l31)) return fail_on(e, "(3,1) product " + to_string(p31) + " vs trace " + to_string(l31));
  }
  return {true, "exact on " + std::to_string(corpus().size()) + " corpus braids, both flavors"};
}

Outcome scalar_partial_trace() {
  const auto cases = corpus_plus_random(25, 3, 8, 99);
  for (const auto& e : cases) {
    if (!partial_trace_scalar(e.braid, r_lg21_special(), mu21_special()).is_scalar)
      return fail_on(e, "not scalar with mu");
    if (!partial_trace_scalar(e.braid, s_lg31(), mu31()).is_scalar) return fail_on(e, "not scalar with mu(3,1)");
    if (!partial_trace_scalar(e.braid, r_small(SmallR::kR1), alexander_weight(AlexanderWeight::kH)).is_scalar)
      return fail_on(e, "not scalar with h");
  }
  return {true, std::to_string(cases.size()) + " braids, weights mu, mu(3,1), h"};
}

Outcome markov() {
  const std::vector<std::pair<std::string, std::function<LaurentHalf(const BraidWord&)>>> invariants = {
      {"alexander_det", [](const BraidWord& b) { return alexander_det(b); }},
      {"lg21_special", [](const BraidWord& b) { return lg_invariant(b, LgFlavor::kLg21Special); }},
      {"lg31_special", [](const BraidWord& b) { return lg_invariant(b, LgFlavor::kLg31Special); }},
  };
  int moves = 0;
  for (const auto& e : corpus()) {
    std::vector<BraidWord> variants;
    for (int k = 0; k < 10; ++k)
      variants.push_back(conjugate(e.braid, random_word(500 + static_cast<std::uint64_t>(k), e.braid.strands(), 1 + k % 3)));
    variants.push_back(stabilize(e.braid, e.name.size() % 2 ? 1 : -1));
    for (const auto& [name, fn] : invariants) {
      const auto base = fn(e.braid);
      for (const auto& v : variants) {
        ++moves;
        const auto value = fn(v);
        if (!equal_up_to_unit(value, base))
          return fail_on(e, name + " changed under " + v.to_text() + ": " + to_string(value));
      }
    }
  }
  return {true, std::to_string(moves) + " moves (10 conjugations + 1 stabilization per corpus braid)"};
}

Outcome reduction_at_t1_one() {
  Outcome out;
  std::ostringstream os, diag;
  for (const auto& e : corpus()) {
    if (e.name != "trefoil" && e.name != "figure_eight" && e.name != "cinquefoil") continue;
    const auto value = specialize(lg21_two_variable(e.braid), Specialization::kT1ToOne);
    if (!(value == LaurentHalf(1))) out.pass = false;
    os << e.name << " -> " << to_string(value) << "; ";
    const LaurentHalf sign(e.braid.strands() % 2 == 0 ? -1 : 1);
    diag << e.name << " " << to_string(sign * value) << "; ";
  }
  out.detail = os.str() + " [not counted: times (-1)^(n-1): " + diag.str() + "]";
  return out;
}

Outcome symmetry() {
  for (const auto& e : corpus()) {
    const auto v = lg21_two_variable(e.braid);
    if (!(swap_variables(v) == v)) return fail_on(e, "not symmetric: " + to_string(v));
  }
  return {true, "corpus"};
}

Outcome negative_controls() {
  std::ostringstream os;
  CheckParams p;
  p.corrupt = true;
  for (const char* name :
       {"yang_baxter_r1", "yang_baxter_r3", "yang_baxter_lg21", "yang_baxter_lg21_special", "yang_baxter_s31", "main21",
        "main31"}) {
    const auto r = run_check(name, p);
    if (r.passed || !r.counterexample || !r.counterexample->braid)
      return {false, std::string(name) + " did not fail with a counterexample under perturbation"};
    os << name << " fails at " << r.counterexample->label << "; ";
  }
  return {true, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "Yang-Baxter equation", 60, yang_baxter},
      {2, "Alexander cross-path agreement", 120, alexander_paths},
      {3, "corpus Alexander values", 0, corpus_values},
      {4, "LG(2,1) at t1=1/t0 equals det^2 up to unit", 300,
       [] { return main_theorem(LgFlavor::kLg21Special, 2, 50, 4, 12); }},
      {5, "LG(3,1) equals det^3 up to unit", 300, [] { return main_theorem(LgFlavor::kLg31Special, 3, 25, 3, 10); }},
      {6, "intertwiner commutation", 600, intertwiners},
      {7, "product form equals trace exactly", 0, product_form},
      {8, "partial traces are scalar", 0, scalar_partial_trace},
      {9, "Markov moves preserve invariants up to unit", 0, markov},
      {10, "two-variable LG(2,1) at t1=1 equals 1 on knots", 0, reduction_at_t1_one},
      {11, "two-variable LG(2,1) symmetric in t0, t1", 0, symmetry},
      {12, "perturbed R/S makes checks fail", 0, negative_controls},
  };
  const int only = argc > 1 ? std::stoi(argv[1]) : 0;
  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    std::ostringstream timing;
    timing.precision(2);
    timing << std::fixed << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " -- " << o.detail << " ["
              << timing.str() << " s]" << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
