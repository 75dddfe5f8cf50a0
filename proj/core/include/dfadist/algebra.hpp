#pragma once

#include <optional>

#include "dfadist/dfa.hpp"

namespace dfadist {

/// Boolean combinator applied to the acceptance bits of a product pair.
enum class BoolOp { And, Or, Xor, AndNot };

constexpr bool apply(BoolOp op, bool lhs, bool rhs) noexcept {
  switch (op) {
    case BoolOp::And: return lhs && rhs;
    case BoolOp::Or: return lhs || rhs;
    case BoolOp::Xor: return lhs != rhs;
    case BoolOp::AndNot: return lhs && !rhs;
  }
  return false;
}

/// True iff δ*(initial, w) is accepting. Throws InputError on foreign symbols.
bool accepts(const Dfa& d, std::string_view w);

/// Reachable part of the synchronous product. Pair states are numbered in
/// BFS discovery order from (initial_a, initial_b); a pair accepts iff
/// `op(accepting_a, accepting_b)`.
Dfa product(const Dfa& a, const Dfa& b, BoolOp op);

/// Flips the accepting set; transitions and unreachable states are kept.
Dfa complement(const Dfa& d);

/// A minimum-length accepted word, ties broken by alphabet order, or nullopt
/// when the language is empty.
std::optional<Word> shortest_accepted_word(const Dfa& d);

bool is_empty(const Dfa& d);

/// L(a) ⊆ L(b), decided as emptiness of product(a, complement(b)).
bool is_subset(const Dfa& a, const Dfa& b);
bool is_equivalent(const Dfa& a, const Dfa& b);

/// Minimal complete DFA for L(d) by Moore partition refinement over the
/// reachable states, renumbered in BFS order. Deterministic and idempotent.
Dfa minimize(const Dfa& d);

/// Number of Myhill-Nerode classes of L(d), i.e. the minimal DFA size.
std::size_t nerode_class_count(const Dfa& d);

}  // namespace dfadist
