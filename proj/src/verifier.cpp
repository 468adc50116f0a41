#include "lgbridge/verifier.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "lgbridge/burau.hpp"
#include "lgbridge/exterior.hpp"
#include "lgbridge/links_gould.hpp"
#include "lgbridge/serialize.hpp"

namespace lgbridge {

const std::vector<NamedBraid>& corpus() {
  static const std::vector<NamedBraid> items = {
      {"unknot", BraidWord(1), true},
      {"unknot_b2", parse_braid("1", 2), true},
      {"hopf", parse_braid("1 1", 2), false},
      {"trefoil", parse_braid("1 1 1", 2), true},
      {"figure_eight", parse_braid("1 -2 1 -2", 3), true},
      {"cinquefoil", parse_braid("1 1 1 1 1", 2), true},
      {"granny", parse_braid("1 1 1 2 3 3 3", 4), true},
      {"identity_b2", BraidWord(2), false},
      {"identity_b3", BraidWord(3), false},
  };
  return items;
}

BraidWord check_random_braid(std::uint64_t seed, int index, int max_strands, std::size_t max_length) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(index) + 1);
  const int n = max_strands < 2 ? 1 : 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_strands - 1));
  const std::size_t len = static_cast<std::size_t>(rng() % (max_length + 1));
  return random_word(rng(), n, len);
}

namespace {

struct Case {
  std::string label;
  BraidWord braid;
  bool knot = false;
};

// A case either passes (empty) or reports a mismatch; units are logged.
struct CaseResult {
  std::optional<std::string> mismatch;
  std::optional<Unit> unit;
};

using CaseFn = std::function<CaseResult(const Case&)>;

std::vector<Case> make_cases(const ResolvedParams& p, bool with_corpus, bool with_random, bool knots_only = false) {
  std::vector<Case> out;
  if (p.braid) {
    out.push_back({"braid", *p.braid, false});
    return out;
  }
  if (with_corpus)
    for (const auto& c : corpus())
      if (!knots_only || c.knot) out.push_back({c.name, c.braid, c.knot});
  if (with_random)
    for (int k = 0; k < p.count; ++k)
      out.push_back({"random#" + std::to_string(k), check_random_braid(p.seed, k, p.strands, p.length), false});
  return out;
}

void run_cases(CheckReport& report, const std::vector<Case>& cases, const CaseFn& fn) {
  for (const auto& c : cases) {
    ++report.cases;
    CaseResult r;
    try {
      r = fn(c);
    } catch (const std::exception& e) {
      r.mismatch = std::string("exception: ") + e.what();
    }
    if (r.unit) report.units.push_back({c.label, *r.unit});
    if (r.mismatch) {
      report.passed = false;
      report.counterexample = Counterexample{c.label, c.braid, report.params.seed, *r.mismatch};
      return;
    }
  }
}

void fail(CheckReport& report, const std::string& label, const std::string& mismatch,
          std::optional<BraidWord> braid = std::nullopt) {
  report.passed = false;
  report.counterexample = Counterexample{label, std::move(braid), report.params.seed, mismatch};
}

// Negative controls: one off-diagonal entry doubled.
LocalOperator<LaurentHalf> corrupted(const LocalOperator<LaurentHalf>& op, std::size_t row, std::size_t col) {
  return op.modified([&](DenseMatrix<LaurentHalf>& m) { m(row, col) = m(row, col) * LaurentHalf(2); });
}

const LocalOperator<LaurentHalf>& lg_op(LgFlavor flavor, bool corrupt) {
  static const auto bad21 = corrupted(r_lg21_special(), 1, 4);
  static const auto bad31 = corrupted(s_lg31(), 1, 8);
  if (!corrupt) return lg_operator(flavor);
  return flavor == LgFlavor::kLg21Special ? bad21 : bad31;
}

template <class Scalar>
void yang_baxter(CheckReport& report, const LocalOperator<Scalar>& op) {
  ++report.cases;
  if (auto code = yang_baxter_violation(op)) {
    const auto digits = decode_basis(*code, op.site_dim(), 3);
    std::ostringstream os;
    os << "braid relation differs on basis vector (";
    for (std::size_t k = 0; k < digits.size(); ++k) os << (k ? "," : "") << digits[k] + 1;
    os << ")";
    fail(report, "yang_baxter", os.str(), BraidWord(3, {{1, 1}, {2, 1}, {1, 1}}));
  }
}

std::string mismatch_text(const std::string& lhs_name, const LaurentHalf& lhs, const std::string& rhs_name,
                          const LaurentHalf& rhs) {
  return lhs_name + " = " + to_string(lhs) + ", " + rhs_name + " = " + to_string(rhs);
}

CaseResult compare_up_to_unit(const std::string& lhs_name, const LaurentHalf& lhs, const std::string& rhs_name,
                              const LaurentHalf& rhs) {
  if (auto u = equal_up_to_unit(lhs, rhs)) return {std::nullopt, *u};
  return {mismatch_text(lhs_name, lhs, rhs_name, rhs), std::nullopt};
}

void check_intertwiner(CheckReport& report, IntertwinerKind kind, int min_strands) {
  const auto& p = report.params;
  const auto& op = tensor_operator_for(kind);
  auto test = [&](const Intertwiner& map, const BraidWord& word, const std::string& label) {
    ++report.cases;
    if (auto code = intertwining_violation(map, op, word)) {
      const auto digits = decode_basis(*code, map.site_dim(), map.strands());
      std::ostringstream os;
      os << "commutation fails on tensor basis vector (";
      for (std::size_t k = 0; k < digits.size(); ++k) os << (k ? "," : "") << digits[k] + 1;
      os << ")";
      fail(report, label, os.str(), word);
      return false;
    }
    return true;
  };
  if (p.braid) {
    test(Intertwiner(kind, p.braid->strands()), *p.braid, "braid");
    return;
  }
  for (int n = min_strands; n <= p.strands; ++n) {
    const Intertwiner map(kind, n);
    ++report.cases;
    if (!map.is_bijection()) {
      fail(report, "n=" + std::to_string(n), "not a bijection onto the exterior basis");
      return;
    }
    for (int i = 1; i < n; ++i)
      for (int s : {1, -1})
        if (!test(map, BraidWord(n, {{i, s}}), "generator")) return;
  }
  for (int k = 0; k < p.count; ++k) {
    const auto b = check_random_braid(p.seed, k, p.strands, p.length);
    if (!test(Intertwiner(kind, b.strands()), b, "random#" + std::to_string(k))) return;
  }
}

using CheckBody = std::function<void(CheckReport&)>;

struct Registered {
  CheckInfo info;
  CheckBody body;
};

ResolvedParams defaults(int strands, std::size_t length, int count) {
  ResolvedParams p;
  p.strands = strands;
  p.length = length;
  p.count = count;
  return p;
}

const std::vector<Registered>& registry() {
  static const std::vector<Registered> checks = [] {
    std::vector<Registered> r;
    auto add = [&](std::string name, std::string description, ResolvedParams d, CheckBody body) {
      r.push_back({{std::move(name), std::move(description), std::move(d)}, std::move(body)});
    };

    add("yang_baxter_r1", "Yang-Baxter equation for the 4x4 Alexander R-matrix R1", defaults(3, 0, 0),
        [](CheckReport& rep) {
          yang_baxter(rep, rep.params.corrupt ? corrupted(r_small(SmallR::kR1), 1, 2) : r_small(SmallR::kR1));
        });
    add("yang_baxter_r3", "Yang-Baxter equation for R3 (R2 with t inverted)", defaults(3, 0, 0),
        [](CheckReport& rep) {
          yang_baxter(rep, rep.params.corrupt ? corrupted(r_small(SmallR::kR3), 1, 2) : r_small(SmallR::kR3));
        });
    add("yang_baxter_lg21", "Yang-Baxter equation for the two-variable 16x16 R-matrix over the Y extension",
        defaults(3, 0, 0), [](CheckReport& rep) {
          if (!rep.params.corrupt) return yang_baxter(rep, r_lg21());
          yang_baxter(rep, r_lg21().modified([](DenseMatrix<ExtScalar>& m) { m(1, 4) = m(1, 4) * ExtScalar(2); }));
        });
    add("yang_baxter_lg21_special", "Yang-Baxter equation for the 16x16 R-matrix at t1 = 1/t0", defaults(3, 0, 0),
        [](CheckReport& rep) { yang_baxter(rep, lg_op(LgFlavor::kLg21Special, rep.params.corrupt)); });
    add("yang_baxter_s31", "Yang-Baxter equation for the 64x64 R-matrix S", defaults(3, 0, 0),
        [](CheckReport& rep) { yang_baxter(rep, lg_op(LgFlavor::kLg31Special, rep.params.corrupt)); });

    add("burau_relations", "braid relations and inverses for every Burau-type variant", defaults(5, 0, 0),
        [](CheckReport& rep) {
          const int n = rep.params.strands;
          for (auto v : {BurauVariant::kStandard, BurauVariant::kF21, BurauVariant::kG21, BurauVariant::kFGH31}) {
            const auto id = PolyMatrix::identity(static_cast<std::size_t>(n));
            for (int i = 1; i < n; ++i) {
              ++rep.cases;
              const auto gi = burau_generator(n, i, v);
              if (!(gi * burau_generator_inverse(n, i, v) == id))
                return fail(rep, "variant " + std::to_string(static_cast<int>(v)), "generator times inverse != I",
                            BraidWord(n, {{i, 1}, {i, -1}}));
              for (int j = i + 1; j < n; ++j) {
                const auto gj = burau_generator(n, j, v);
                const bool ok = j == i + 1 ? gi * gj * gi == gj * gi * gj : gi * gj == gj * gi;
                if (!ok)
                  return fail(rep, "variant " + std::to_string(static_cast<int>(v)),
                              "relation between generators " + std::to_string(i) + " and " + std::to_string(j));
              }
            }
          }
        });

    add("delta_fixed", "the standard Burau representation fixes delta_n", defaults(5, 10, 20),
        [](CheckReport& rep) {
          run_cases(rep, make_cases(rep.params, true, true), [](const Case& c) -> CaseResult {
            const auto m = burau_matrix(c.braid, BurauVariant::kStandard);
            const auto delta = burau_fixed_vector(c.braid.strands());
            for (std::size_t r = 0; r < delta.size(); ++r) {
              LaurentHalf sum;
              for (std::size_t k = 0; k < delta.size(); ++k) sum += m(r, k) * delta[k];
              if (!(sum == delta[r])) return {"component " + std::to_string(r + 1) + " moved", std::nullopt};
            }
            return {};
          });
        });

    add("j_matrix", "J_n intertwines Psi and G; determinant recurrence", defaults(8, 0, 0), [](CheckReport& rep) {
      const int top = rep.params.strands;
      std::vector<LaurentHalf> dets{LaurentHalf(), LaurentHalf()};  // index 0 unused, det J_1 = 0
      for (int n = 2; n <= top; ++n) {
        const auto j = j_n_matrix(n);
        for (int i = 1; i < n; ++i) {
          ++rep.cases;
          if (!(j * burau_generator(n, i, BurauVariant::kStandard) == burau_generator(n, i, BurauVariant::kG21) * j))
            return fail(rep, "n=" + std::to_string(n), "J Psi(sigma_" + std::to_string(i) + ") != G J");
        }
        dets.push_back(determinant(j));
        if (n >= 3) {
          ++rep.cases;
          const int m = n - 1;
          const LaurentHalf expected =
              (t_pow(1) + t_pow(-1)).scaled(Rational(m % 2 == 0 ? -1 : 1)) * dets[static_cast<std::size_t>(m)] +
              dets[static_cast<std::size_t>(m - 1)];
          if (!(dets.back() == expected))
            return fail(rep, "n=" + std::to_string(n),
                        mismatch_text("det", dets.back(), "recurrence", expected));
        }
      }
    });

    add("alexander_paths", "determinant, quantum traces and exterior traces agree up to unit", defaults(4, 10, 50),
        [](CheckReport& rep) {
          run_cases(rep, make_cases(rep.params, true, true), [](const Case& c) -> CaseResult {
            const auto det = alexander_det(c.braid);
            const std::pair<const char*, LaurentHalf> others[] = {
                {"trace R1/h", alexander_trace(c.braid, SmallR::kR1, AlexanderWeight::kH, true)},
                {"trace R3/h~", alexander_trace(c.braid, SmallR::kR3, AlexanderWeight::kHTilde, true)},
                {"exterior mu1", alexander_exterior(c.braid, AlexanderPath::kViaPsiMu1)},
                {"exterior nu", alexander_exterior(c.braid, AlexanderPath::kViaGNu)},
            };
            std::optional<Unit> first;
            for (const auto& [name, value] : others) {
              auto r = compare_up_to_unit(name, value, "det", det);
              if (r.mismatch) return r;
              if (!first) first = r.unit;
            }
            return {std::nullopt, first};
          });
        });

    auto main_check = [](LgFlavor flavor, int power) {
      return [flavor, power](CheckReport& rep) {
        const auto& op = lg_op(flavor, rep.params.corrupt);
        run_cases(rep, make_cases(rep.params, true, true), [&](const Case& c) {
          const auto lg = lg_invariant(c.braid, flavor, op);
          const auto det = alexander_det(c.braid);
          LaurentHalf target(1);
          for (int k = 0; k < power; ++k) target = target * det;
          return compare_up_to_unit("LG", lg, "det^" + std::to_string(power), target);
        });
      };
    };
    add("main21", "LG(2,1) at t1 = 1/t0 equals the squared Alexander polynomial up to unit", defaults(4, 12, 50),
        main_check(LgFlavor::kLg21Special, 2));
    add("main31", "LG(3,1) at t1 = 1/t0 equals the cubed Alexander polynomial up to unit", defaults(3, 10, 25),
        main_check(LgFlavor::kLg31Special, 3));

    auto product_check = [](ProductFlavor pf, LgFlavor lf) {
      return [pf, lf](CheckReport& rep) {
        run_cases(rep, make_cases(rep.params, true, true), [&](const Case& c) -> CaseResult {
          const auto prod = lg_product(c.braid, pf);
          const auto trace = lg_invariant(c.braid, lf);
          if (prod == trace) return {};
          return {mismatch_text("product", prod, "trace", trace), std::nullopt};
        });
      };
    };
    add("product21", "exterior product form equals the LG(2,1) trace exactly", defaults(4, 10, 20),
        product_check(ProductFlavor::kLg21, LgFlavor::kLg21Special));
    add("product31", "exterior product form on hat(b) equals the LG(3,1) trace exactly", defaults(3, 8, 10),
        product_check(ProductFlavor::kLg31, LgFlavor::kLg31Special));

    add("intertwine_i21", "I_n commutes W^n with the exterior of F + G, exhaustive on the tensor basis",
        defaults(4, 8, 5), [](CheckReport& rep) { check_intertwiner(rep, IntertwinerKind::kI21, 1); });
    add("intertwine_j", "J_n commutes the R1 representation with the exterior of Psi", defaults(5, 8, 5),
        [](CheckReport& rep) { check_intertwiner(rep, IntertwinerKind::kJ, 1); });
    add("intertwine_k", "K_n commutes the R3 representation with the exterior of G", defaults(5, 8, 5),
        [](CheckReport& rep) { check_intertwiner(rep, IntertwinerKind::kK, 1); });
    add("intertwine_i31", "I_n(3,1) commutes S on hat(b) with the exterior of F + G + H", defaults(3, 6, 5),
        [](CheckReport& rep) { check_intertwiner(rep, IntertwinerKind::kI31, 1); });

    add("weight_match", "the site weights transported by I_n give the exterior diagonal weights", defaults(4, 0, 0),
        [](CheckReport& rep) {
          auto run = [&](IntertwinerKind kind, DiagonalWeight w, const std::vector<LaurentHalf>& mu, int top) {
            for (int n = 1; n <= top; ++n) {
              const Intertwiner map(kind, n);
              const BasisCode total = basis_size(map.site_dim(), n);
              ++rep.cases;
              for (BasisCode code = 0; code < total; ++code) {
                const auto digits = decode_basis(code, map.site_dim(), n);
                LaurentHalf product(1);
                for (int s = 1; s < n; ++s) product = product * mu[static_cast<std::size_t>(digits[static_cast<std::size_t>(s)])];
                if (!(product == diagonal_weight(w, map.image(code).index))) {
                  fail(rep, "n=" + std::to_string(n), "weight differs on basis code " + std::to_string(code));
                  return false;
                }
              }
            }
            return true;
          };
          if (!run(IntertwinerKind::kI21, DiagonalWeight::kMuTilde21, mu21_special(), rep.params.strands)) return;
          run(IntertwinerKind::kI31, DiagonalWeight::kMuTilde31, mu31(), std::min(rep.params.strands, 3));
        });

    add("scalar_trace", "partial traces of braid images are scalar (mu, mu31, h)", defaults(3, 8, 25),
        [](CheckReport& rep) {
          run_cases(rep, make_cases(rep.params, true, true), [](const Case& c) -> CaseResult {
            if (!partial_trace_scalar(c.braid, r_lg21_special(), mu21_special()).is_scalar)
              return {"partial trace with mu is not scalar", std::nullopt};
            if (!partial_trace_scalar(c.braid, s_lg31(), mu31()).is_scalar)
              return {"partial trace with mu31 is not scalar", std::nullopt};
            if (!partial_trace_scalar(c.braid, r_small(SmallR::kR1), alexander_weight(AlexanderWeight::kH)).is_scalar)
              return {"partial trace with h is not scalar", std::nullopt};
            return {};
          });
        });

    add("markov", "invariance under conjugation (exact) and stabilization (up to unit)", defaults(4, 4, 10),
        [](CheckReport& rep) {
          const auto p = rep.params;
          auto cases = make_cases(p, true, false);
          run_cases(rep, cases, [&](const Case& c) -> CaseResult {
            const int n = c.braid.strands();
            struct Invariant {
              const char* name;
              std::function<LaurentHalf(const BraidWord&)> eval;
            };
            const Invariant invariants[] = {
                {"alexander_det", [](const BraidWord& b) { return alexander_det(b); }},
                {"lg21_special", [](const BraidWord& b) { return lg_invariant(b, LgFlavor::kLg21Special); }},
                {"lg31_special", [](const BraidWord& b) { return lg_invariant(b, LgFlavor::kLg31Special); }},
            };
            std::mt19937_64 rng(p.seed ^ std::hash<std::string>{}(c.label));
            std::optional<Unit> logged;
            for (const auto& inv : invariants) {
              const auto base = inv.eval(c.braid);
              for (int k = 0; k < p.count; ++k) {
                const auto g = random_word(rng(), n, 1 + static_cast<std::size_t>(rng() % std::max<std::size_t>(p.length, 1)));
                const auto conj = conjugate(c.braid, g);
                const auto v = inv.eval(conj);
                // Conjugation-invariant values are compared exactly except for the Alexander
                // determinant, which is only defined up to unit.
                const bool ok = std::string(inv.name) == "alexander_det" ? equal_up_to_unit(v, base).has_value()
                                                                        : v == base;
                if (!ok)
                  return {std::string(inv.name) + " changes under conjugation by " + g.to_text() + ": " +
                              mismatch_text("before", base, "after", v),
                          std::nullopt};
              }
              for (int sign : {1, -1}) {
                const auto v = inv.eval(stabilize(c.braid, sign));
                auto r = compare_up_to_unit(std::string(inv.name) + " stabilized", v, "original", base);
                if (r.mismatch) return r;
                if (!logged && std::string(inv.name) == "lg21_special") logged = r.unit;
              }
            }
            return {std::nullopt, logged};
          });
        });

    add("t1_one_reduction", "LG(2,1) at t1 = 1 equals 1 on corpus knots", defaults(3, 0, 0), [](CheckReport& rep) {
      run_cases(rep, make_cases(rep.params, true, false, true), [](const Case& c) -> CaseResult {
        const auto v = specialize(lg21_two_variable(c.braid), Specialization::kT1ToOne);
        if (v == LaurentHalf(1)) return {};
        return {"LG(t, 1) = " + to_string(v), std::nullopt};
      });
    });

    add("symmetry21", "two-variable LG(2,1) is symmetric in t0 and t1", defaults(3, 0, 0), [](CheckReport& rep) {
      run_cases(rep, make_cases(rep.params, true, false), [](const Case& c) -> CaseResult {
        const auto v = lg21_two_variable(c.braid);
        if (swap_variables(v) == v) return {};
        return {"not symmetric: " + to_string(v), std::nullopt};
      });
    });

    add("y_component", "the Y part of the two-variable LG(2,1) trace vanishes", defaults(3, 0, 0),
        [](CheckReport& rep) {
          run_cases(rep, make_cases(rep.params, true, false), [](const Case& c) -> CaseResult {
            const auto v = lg21_two_variable(c.braid);
            if (v.ycoef().is_zero()) return {};
            return {"Y part = " + to_string(v.ycoef()), std::nullopt};
          });
        });
    return r;
  }();
  return checks;
}

const Registered& find_check(const std::string& name) {
  for (const auto& c : registry())
    if (c.info.name == name) return c;
  throw UnknownCheck("unknown check: " + name);
}

}  // namespace

const std::vector<CheckInfo>& list_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& c : registry()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

CheckReport run_check(const std::string& name, const CheckParams& params) {
  const auto& check = find_check(name);
  CheckReport report;
  report.name = name;
  report.params = check.info.defaults;
  if (params.strands) report.params.strands = *params.strands;
  if (params.length) report.params.length = *params.length;
  if (params.seed) report.params.seed = *params.seed;
  if (params.count) report.params.count = *params.count;
  report.params.braid = params.braid;
  report.params.corrupt = params.corrupt;
  try {
    check.body(report);
  } catch (const std::exception& e) {
    fail(report, "check", std::string("exception: ") + e.what());
  }
  return report;
}

std::vector<CheckReport> run_suite(std::optional<std::uint64_t> seed) {
  std::vector<CheckReport> out;
  CheckParams p;
  p.seed = seed;
  for (const auto& c : list_checks()) out.push_back(run_check(c.name, p));
  return out;
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json params = {{"strands", report.params.strands},
                           {"length", report.params.length},
                           {"seed", report.params.seed},
                           {"count", report.params.count},
                           {"corrupt", report.params.corrupt}};
  if (report.params.braid) params["braid"] = to_json(*report.params.braid);
  nlohmann::json j = {{"name", report.name},
                      {"params", params},
                      {"outcome", report.passed ? "pass" : "fail"},
                      {"cases", report.cases}};
  nlohmann::json units = nlohmann::json::array();
  for (const auto& u : report.units) {
    auto entry = to_json(u.unit);
    entry["label"] = u.label;
    units.push_back(entry);
  }
  j["units"] = units;
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    nlohmann::json ce = {{"label", c.label}, {"seed", c.seed}, {"mismatch", c.mismatch}};
    if (c.braid) ce["braid"] = to_json(*c.braid);
    j["counterexample"] = ce;
  } else {
    j["counterexample"] = nullptr;
  }
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

}  // namespace lgbridge
