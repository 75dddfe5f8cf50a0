#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfadist/dfa.hpp"
#include "dfadist/distinguish.hpp"
#include "dfadist/sat.hpp"

namespace dfadist::reduction {

/// The three-symbol alphabet of the reduction: bits, then the block separator.
inline constexpr char kSeparator = '#';
Alphabet block_alphabet();

/// CNF formula phi = C_1 ∧ ... ∧ C_n over variables p_1..p_k, with k >= 1,
/// n >= 1 and no empty clause.
class CnfFormula {
 public:
  /// Throws InputError when an invariant is violated.
  explicit CnfFormula(sat::CnfInstance instance);

  std::size_t var_count() const noexcept { return instance_.var_count; }
  std::size_t clause_count() const noexcept { return instance_.clauses.size(); }
  const sat::Clause& clause(std::size_t i) const { return instance_.clauses.at(i); }
  const sat::CnfInstance& instance() const noexcept { return instance_; }

 private:
  sat::CnfInstance instance_;
};

/// Truth assignment ρ(p_1) ... ρ(p_k).
struct Assignment {
  std::vector<bool> bits;

  static Assignment from_model(const sat::Model& m) { return {m.values}; }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Block word of an assignment: i-th symbol is '1' iff bit i is true.
Word assignment_word(const Assignment& a);

/// Inverse of assignment_word; nullopt for anything but a {0,1} string.
std::optional<Assignment> assignment_from_word(std::string_view w);

/// Whether the block `bits` (a {0,1} string of length k) satisfies clause `c`.
bool block_satisfies(std::string_view bits, const sat::Clause& c);

/// Direct scan: w = w_1#...w_j# with 0 <= j <= n and every w_i in {0,1}^k.
bool in_Lminus(std::string_view w, std::size_t k, std::size_t n);

/// Direct scan: in_Lminus, or the first n blocks exist and block i satisfies
/// clause i, followed by any suffix over {0,1,#}.
bool in_Lplus(std::string_view w, const CnfFormula& phi);

/// Minimal DFA for the bounded block language. Accepts ε.
Dfa build_Lminus(std::size_t k, std::size_t n);

/// Minimal DFA for the block language extended by every word whose first n
/// blocks satisfy the clauses in order.
Dfa build_Lplus(const CnfFormula& phi);

/// The (k+2)-state automaton for {(w#)^i : i >= 0}, w the assignment word.
Dfa witness_dfa(const Assignment& a);

struct LemmaReport {
  std::size_t var_count = 0;
  std::size_t clause_count = 0;
  bool satisfiable = false;
  std::optional<Assignment> model;
  SynthOutcome synth;
  /// k + 2, the size bound the synthesizer was given.
  std::size_t bound = 0;
  /// Whether witness_dfa(model) distinguishes the pair; only meaningful when
  /// satisfiable.
  bool witness_distinguishing = false;

  std::optional<std::size_t> min_distinguishing_k() const;
  /// sat <=> synth found, and the witness check passed when sat.
  bool consistent() const;
  /// Plain-text report: sat, min_distinguishing_k, bound, verdict.
  std::string to_text() const;
};

/// Runs the SAT solver and the bounded synthesizer on (L+, L-) with bound
/// k + 2 and compares the two answers.
LemmaReport verify_lemma(const CnfFormula& phi, const EncodingOptions& options = {});

}  // namespace dfadist::reduction
