// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every tolerance and time limit is a named constant below.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dfadist/algebra.hpp"
#include "dfadist/distinguish.hpp"
#include "dfadist/reduction.hpp"
#include "dfadist/sat.hpp"
#include "test_support.hpp"

namespace {

using namespace dfadist;
using Clock = std::chrono::steady_clock;

constexpr double kUnaryPairWordSeconds = 1.0;
constexpr double kUnaryPairSynthSeconds = 10.0;
constexpr double kBatterySeconds = 300.0;
constexpr std::size_t kUnaryPairWordLength = 7;
constexpr std::size_t kUnaryPairMinStates = 2;
constexpr std::size_t kUnaryPairSynthBound = 8;
constexpr std::size_t kBruteForceMaxBound = 3;
constexpr std::size_t kMinWordAutomatonPairs = 10'000;
constexpr std::size_t kTruthTableMaxVars = 12;
constexpr std::size_t kRandomThreeCnf = 200;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail.str("");
    if (!pass) detail << "; ";
    pass = false;
    detail << why;
  }
};

int g_failures = 0;

void report(int id, const char* name, const Verdict& v, double secs) {
  if (!v.pass) ++g_failures;
  std::printf("%s  criterion %d  %-34s %8.3f s  %s\n", v.pass ? "PASS" : "FAIL", id, name, secs,
              v.detail.str().c_str());
  std::fflush(stdout);
}

// Built once and shared by the battery criteria.
struct BatteryCase {
  reduction::CnfFormula phi;
  Dfa plus;
  Dfa minus;
};

std::vector<BatteryCase> build_battery() {
  std::vector<BatteryCase> out;
  for (reduction::CnfFormula& phi : testing::lemma_battery()) {
    Dfa plus = reduction::build_Lplus(phi);
    Dfa minus = reduction::build_Lminus(phi.var_count(), phi.clause_count());
    out.push_back({std::move(phi), std::move(plus), std::move(minus)});
  }
  return out;
}

void unary_pair_word() {
  Verdict v;
  const Dfa a = testing::fixture("cycle4.dfa");
  const Dfa b = testing::fixture("lasso5.dfa");
  const auto start = Clock::now();
  const auto w = shortest_distinguishing_word(a, b);
  const double secs = seconds_since(start);
  if (!w) {
    v.fail("no distinguishing word");
  } else if (*w != Word(kUnaryPairWordLength, 'a')) {
    v.fail("got '" + *w + "'");
  } else {
    v.detail << "word=" << *w;
  }
  if (secs >= kUnaryPairWordSeconds) v.fail("too slow");
  report(1, "unary pair shortest word", v, secs);
}

void unary_pair_synth() {
  Verdict v;
  const Dfa a = testing::fixture("cycle4.dfa");
  const Dfa b = testing::fixture("lasso5.dfa");
  const auto start = Clock::now();
  const SynthOutcome out = synth_min_distinguishing(a, b, kUnaryPairSynthBound);
  const bool one_state_possible =
      brute_force_distinguishing(a, b, 1, Orientation::First).has_value() ||
      brute_force_distinguishing(a, b, 1, Orientation::Second).has_value();
  const double secs = seconds_since(start);
  if (!out.found()) {
    v.fail("synthesis found nothing");
  } else {
    const Dfa& d = out.result->dfa;
    v.detail << "k=" << d.state_count() << " orientation=" << orientation_number(out.result->orientation);
    if (d.state_count() != kUnaryPairMinStates) v.fail("expected 2 states");
    if (!is_distinguishing(d, a, b)) v.fail("decoded DFA does not distinguish");
  }
  if (one_state_possible) v.fail("brute force found a 1-state distinguisher");
  if (secs >= kUnaryPairSynthSeconds) v.fail("too slow");
  report(2, "unary pair two-state synthesis", v, secs);
}

void lemma_battery(const std::vector<BatteryCase>& battery) {
  Verdict sat_side, unsat_side;
  std::size_t sat_count = 0, unsat_count = 0, consistent = 0, brute_checked = 0;
  double lemma_secs = 0;
  double brute_secs = 0;

  for (const BatteryCase& c : battery) {
    const std::size_t k = c.phi.var_count();
    const std::string name = testing::describe(c.phi.instance());

    auto start = Clock::now();
    const reduction::LemmaReport r = reduction::verify_lemma(c.phi);
    lemma_secs += seconds_since(start);
    if (r.consistent()) ++consistent;

    const bool truly_sat = testing::truth_table_solve(c.phi.instance()).has_value();
    Verdict& side = truly_sat ? sat_side : unsat_side;
    if (r.satisfiable != truly_sat) side.fail(name + ": solver disagrees with truth table");
    if (r.bound != k + 2) side.fail(name + ": wrong bound");

    if (truly_sat) {
      ++sat_count;
      if (!r.model) {
        sat_side.fail(name + ": no model");
        continue;
      }
      const Dfa w = reduction::witness_dfa(*r.model);
      if (w.state_count() != k + 2) sat_side.fail(name + ": witness size");
      if (!is_distinguishing(w, c.plus, c.minus)) sat_side.fail(name + ": witness not distinguishing");
      if (!r.synth.found() || r.synth.result->dfa.state_count() > k + 2) {
        sat_side.fail(name + ": synthesis failed at k+2");
      } else if (!is_distinguishing(r.synth.result->dfa, c.plus, c.minus)) {
        sat_side.fail(name + ": synthesized DFA not distinguishing");
      }
    } else {
      ++unsat_count;
      if (r.synth.found()) unsat_side.fail(name + ": synthesis found a distinguisher");
      if (k + 2 <= kBruteForceMaxBound) {
        start = Clock::now();
        if (brute_force_min_distinguishing(c.plus, c.minus, k + 2).found()) {
          unsat_side.fail(name + ": brute force found a distinguisher");
        }
        brute_secs += seconds_since(start);
        ++brute_checked;
      }
    }
    if (!r.consistent()) side.fail(name + ": verdict INCONSISTENT");
  }

  if (lemma_secs >= kBatterySeconds) sat_side.fail("battery too slow");
  if (sat_side.pass) sat_side.detail << sat_count << " satisfiable formulas";
  report(3, "lemma battery, satisfiable side", sat_side, lemma_secs);

  if (consistent != battery.size()) {
    unsat_side.fail(std::to_string(consistent) + "/" + std::to_string(battery.size()) +
                    " CONSISTENT");
  }
  if (unsat_side.pass) {
    unsat_side.detail << unsat_count << " unsatisfiable formulas, " << brute_checked
                      << " brute-forced, " << consistent << "/" << battery.size()
                      << " CONSISTENT";
  }
  report(4, "lemma battery, unsatisfiable side", unsat_side, brute_secs);
}

void builder_oracle(const std::vector<BatteryCase>& battery) {
  Verdict v;
  const auto start = Clock::now();
  std::size_t checked = 0;
  const Alphabet sigma = reduction::block_alphabet();
  std::vector<std::vector<Word>> words_by_k;
  for (const BatteryCase& c : battery) {
    const std::size_t k = c.phi.var_count();
    const std::size_t n = c.phi.clause_count();
    while (words_by_k.size() <= k) {
      words_by_k.push_back(testing::words_up_to(sigma, 2 * (words_by_k.size() + 1) + 2));
    }
    for (const Word& w : words_by_k[k]) {
      ++checked;
      if (testing::table_accepts(c.minus, w) != reduction::in_Lminus(w, k, n)) {
        v.fail(testing::describe(c.phi.instance()) + ": L- mismatch on '" + w + "'");
        break;
      }
      if (testing::table_accepts(c.plus, w) != reduction::in_Lplus(w, c.phi)) {
        v.fail(testing::describe(c.phi.instance()) + ": L+ mismatch on '" + w + "'");
        break;
      }
    }
  }
  if (v.pass) v.detail << checked << " words, 0 mismatches";
  report(5, "builder/scan agreement", v, seconds_since(start));
}

void size_bounds(const std::vector<BatteryCase>& battery) {
  Verdict v;
  const auto start = Clock::now();
  std::size_t worst_minus = 0, worst_plus = 0;
  for (const BatteryCase& c : battery) {
    const std::size_t k = c.phi.var_count();
    const std::size_t n = c.phi.clause_count();
    const std::size_t minus = minimize(c.minus).state_count();
    const std::size_t plus = minimize(c.plus).state_count();
    const std::string name = testing::describe(c.phi.instance());
    if (minus > n * (k + 1) + 2) {
      v.fail(name + ": |L-|=" + std::to_string(minus) + " > " + std::to_string(n * (k + 1) + 2));
    }
    if (plus > 2 * n * (k + 1) + 3) {
      v.fail(name + ": |L+|=" + std::to_string(plus) + " > " +
             std::to_string(2 * n * (k + 1) + 3));
    }
    worst_minus = std::max(worst_minus, minus);
    worst_plus = std::max(worst_plus, plus);
  }
  if (v.pass) v.detail << "largest |L-|=" << worst_minus << " |L+|=" << worst_plus;
  report(6, "reduction automaton sizes", v, seconds_since(start));
}

void algebra_properties() {
  Verdict v;
  const auto start = Clock::now();
  std::mt19937 rng(20240601);
  const Alphabet alphabets[] = {Alphabet("a"), Alphabet("ab"), Alphabet("01#")};
  const BoolOp ops[] = {BoolOp::And, BoolOp::Or, BoolOp::Xor, BoolOp::AndNot};
  std::size_t pairs = 0;

  for (int i = 0; i < 300 && v.pass; ++i) {
    const Alphabet& sigma = alphabets[i % 3];
    const Dfa a = testing::random_dfa(rng, sigma, 1 + i % 7);
    const Dfa b = testing::random_dfa(rng, sigma, 1 + (i * 5) % 6);

    const Dfa m = minimize(a);
    if (!(minimize(m) == m)) v.fail("minimize not idempotent");
    if (!is_equivalent(a, m)) v.fail("minimize changed the language");
    if (m.state_count() != testing::pair_marking_class_count(a)) v.fail("minimal size != pair marking");

    std::vector<Dfa> derived{complement(a), m};
    for (BoolOp op : ops) derived.push_back(product(a, b, op));
    for (int j = 0; j < 10; ++j) {
      const Word w = testing::random_word(rng, sigma, 15);
      const bool in_a = testing::table_accepts(a, w);
      const bool in_b = testing::table_accepts(b, w);
      bool ok = accepts(derived[0], w) == !in_a && accepts(derived[1], w) == in_a;
      for (std::size_t o = 0; o < 4; ++o) ok = ok && accepts(derived[2 + o], w) == apply(ops[o], in_a, in_b);
      pairs += derived.size();
      if (!ok) v.fail("pointwise mismatch on '" + w + "'");
    }

    // Any counterexample to inclusion is shorter than |a|*|b|, so small
    // automata can be checked against every word up to that length.
    {
      const Dfa small_a = testing::random_dfa(rng, sigma, 1 + (i / 3) % 3);
      const Dfa small_b = testing::random_dfa(rng, sigma, 1 + (i / 9) % 3);
      bool expected = true;
      for (const Word& w :
           testing::words_up_to(sigma, small_a.state_count() * small_b.state_count())) {
        if (testing::table_accepts(small_a, w) && !testing::table_accepts(small_b, w)) {
          expected = false;
          break;
        }
      }
      if (is_subset(small_a, small_b) != expected) v.fail("inclusion disagrees with enumeration");
    }

    if (i % 10 == 0 && sigma.size() == 2) {
      if (nerode_class_count(a) != testing::residual_row_count(a, a.state_count())) {
        v.fail("Nerode count disagrees with residual table");
      }
    }
  }
  if (pairs < kMinWordAutomatonPairs) v.fail("only " + std::to_string(pairs) + " word-automaton pairs");
  if (v.pass) v.detail << pairs << " word-automaton pairs";
  report(7, "core algebra properties", v, seconds_since(start));
}

void sat_engine(const std::vector<BatteryCase>& battery) {
  Verdict v;
  const auto start = Clock::now();
  std::size_t checked = 0;
  auto check = [&](const sat::CnfInstance& f) {
    if (f.var_count > kTruthTableMaxVars) return;
    ++checked;
    const auto got = sat::solve(f);
    const auto expected = testing::truth_table_solve(f);
    if (got.has_value() != expected.has_value()) {
      v.fail("disagreement on " + testing::describe(f));
    } else if (got && !sat::evaluate(f, *got)) {
      v.fail("bad model for " + testing::describe(f));
    }
  };

  for (const BatteryCase& c : battery) check(c.phi.instance());
  std::mt19937 rng(777);
  for (std::size_t vars = 1; vars <= kTruthTableMaxVars; ++vars) {
    for (std::size_t i = 0; i < 25; ++i) {
      check(testing::random_kcnf(rng, vars, 1 + (i * vars) % (6 * vars), 1 + i % std::min<std::size_t>(vars, 4)));
    }
  }
  std::size_t random3 = 0;
  std::uniform_int_distribution<std::size_t> var_count(3, kTruthTableMaxVars);
  for (; random3 < kRandomThreeCnf; ++random3) {
    const std::size_t vars = var_count(rng);
    // clause/variable ratio around the 3-SAT threshold gives a mix of outcomes
    const std::size_t clauses = static_cast<std::size_t>(4.26 * static_cast<double>(vars) + 0.5);
    check(testing::random_kcnf(rng, vars, clauses, 3));
  }
  if (v.pass) v.detail << checked << " instances incl. " << random3 << " random 3-CNF, 0 disagreements";
  report(8, "SAT engine vs truth tables", v, seconds_since(start));
}

}  // namespace

int main() {
  try {
    unary_pair_word();
    unary_pair_synth();
    const std::vector<BatteryCase> battery = build_battery();
    std::printf("battery: %zu formulas\n", battery.size());
    lemma_battery(battery);
    builder_oracle(battery);
    size_bounds(battery);
    algebra_properties();
    sat_engine(battery);
  } catch (const std::exception& e) {
    std::printf("FAIL  aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%d criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
