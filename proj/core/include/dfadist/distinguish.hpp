#pragma once

#include <cstddef>
#include <optional>

#include "dfadist/dfa.hpp"
#include "dfadist/sat.hpp"

namespace dfadist {

/// Which input the synthesized language must be contained in. The other
/// input is the one it must escape.
enum class Orientation { First, Second };

constexpr int orientation_number(Orientation o) noexcept {
  return o == Orientation::First ? 1 : 2;
}

struct Distinguisher {
  Dfa dfa;
  Orientation orientation;
};

/// Result of a bounded search. `result` is empty when no distinguishing DFA
/// with at most `bound` states exists.
struct SynthOutcome {
  std::optional<Distinguisher> result;
  std::size_t bound = 0;

  bool found() const noexcept { return result.has_value(); }
};

/// Shortest word accepted by exactly one of the automata, nullopt iff the
/// languages are equal. Ties are broken by alphabet order.
std::optional<Word> shortest_distinguishing_word(const Dfa& a1, const Dfa& a2);

/// L(d) is a subset of exactly one of L(a1), L(a2).
bool is_distinguishing(const Dfa& d, const Dfa& a1, const Dfa& a2);

/// How the encoding certifies that L(D) escapes the second language.
enum class WitnessEncoding {
  /// Layered forward reachability over D x X, where X accepts
  /// L(target) \ L(escape). Fully determined by unit propagation once D's
  /// transitions are fixed.
  LayeredReachability,
  /// A single explicit path of bounded length with per-step state, symbol and
  /// end-marker variables. Much weaker under DPLL; kept for cross-checking.
  BoundedPath,
};

struct EncodingOptions {
  WitnessEncoding witness = WitnessEncoding::LayeredReachability;
  /// Adds BFS state-numbering constraints on D. Never changes satisfiability;
  /// without it DPLL revisits every relabeling of D.
  bool symmetry_breaking = true;
};

/// Maps a model of an encoding back to the automaton it describes.
class DecodeContext {
 public:
  DecodeContext(Alphabet alphabet, std::size_t states, sat::Literal first_transition_var,
                sat::Literal first_accepting_var);

  /// The raw k-state DFA (initial state 0), not minimized.
  Dfa decode(const sat::Model& model) const;

  std::size_t states() const noexcept { return states_; }
  sat::Literal transition_var(State q, SymbolIndex a, State target) const;
  sat::Literal accepting_var(State q) const;

 private:
  Alphabet alphabet_;
  std::size_t states_;
  sat::Literal first_transition_var_;
  sat::Literal first_accepting_var_;
};

struct Encoding {
  sat::CnfInstance cnf;
  DecodeContext context;
};

/// CNF that is satisfiable iff some complete DFA with `states` states
/// (initial state 0) accepts a language contained in the target automaton
/// and not contained in the other one. Throws InputError when the alphabets
/// differ or `states` is 0.
Encoding encode_distinguishing(const Dfa& a1, const Dfa& a2, std::size_t states,
                               Orientation orientation,
                               const EncodingOptions& options = {});

/// Tries k = 1..k_max, orientation First before Second at each k, and returns
/// the first hit, minimized. The result is re-checked with is_distinguishing.
SynthOutcome synth_min_distinguishing(const Dfa& a1, const Dfa& a2, std::size_t k_max,
                                      const EncodingOptions& options = {});

/// Exhaustive oracle: some complete DFA with exactly `states` states and
/// initial state 0 satisfying the given orientation, or nullopt. Transition
/// tables are enumerated as a base-k counter over (symbol, state) digits,
/// accepting sets as a binary counter inside each table.
std::optional<Dfa> brute_force_distinguishing(const Dfa& a1, const Dfa& a2,
                                              std::size_t states,
                                              Orientation orientation);

/// Smallest k <= k_max with any distinguishing DFA, by exhaustive enumeration.
/// Only practical for k_max <= 3 and alphabets of at most 3 symbols.
SynthOutcome brute_force_min_distinguishing(const Dfa& a1, const Dfa& a2,
                                            std::size_t k_max);

}  // namespace dfadist
