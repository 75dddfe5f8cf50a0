#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dfadist {

using State = std::uint32_t;
using SymbolIndex = std::uint32_t;

/// Words are plain strings; each character must be a symbol of the
/// alphabet the word is interpreted against.
using Word = std::string;

/// Raised for bad arguments: unknown symbols, mismatched alphabets,
/// out-of-range states, invalid formulas.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text parsers; the message carries the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Ordered set of single-character symbols. The order fixes the column
/// order of transition rows and the tie-breaking order of every search.
class Alphabet {
 public:
  /// Throws InputError on an empty string, duplicates, whitespace,
  /// non-printable characters or ';' (the comment marker of `.dfa`).
  explicit Alphabet(std::string symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(SymbolIndex i) const { return symbols_.at(i); }
  const std::string& symbols() const noexcept { return symbols_; }

  std::optional<SymbolIndex> index_of(char c) const noexcept;
  bool contains(char c) const noexcept { return index_of(c).has_value(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

/// Complete deterministic finite automaton with dense state indices.
///
/// The transition table is stored row-major: the target of state q under the
/// i-th alphabet symbol lives at `q * |alphabet| + i`. Every constructor
/// validates totality, so a Dfa value is always complete.
class Dfa {
 public:
  Dfa(Alphabet alphabet, std::size_t state_count, State initial,
      std::vector<bool> accepting, std::vector<State> delta);

  /// Builds a DFA from an accepting-state list instead of a mask.
  static Dfa from_accepting_list(Alphabet alphabet, std::size_t state_count,
                                 State initial,
                                 std::span<const State> accepting,
                                 std::vector<State> delta);

  /// One state, every transition a self-loop, accepting iff `accept_all`.
  static Dfa trivial(Alphabet alphabet, bool accept_all);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return state_count_; }
  State initial() const noexcept { return initial_; }

  bool is_accepting(State q) const { return accepting_.at(q); }
  const std::vector<bool>& accepting_mask() const noexcept { return accepting_; }
  std::vector<State> accepting_states() const;

  State next(State q, SymbolIndex a) const {
    return delta_[static_cast<std::size_t>(q) * alphabet_.size() + a];
  }
  std::span<const State> row(State q) const {
    return {delta_.data() + static_cast<std::size_t>(q) * alphabet_.size(),
            alphabet_.size()};
  }
  const std::vector<State>& delta() const noexcept { return delta_; }

  /// δ* from `from`; throws InputError when `w` leaves the alphabet.
  State run(State from, std::string_view w) const;

  /// States reachable from the initial state, in BFS discovery order with
  /// alphabet-ordered edge exploration.
  std::vector<State> bfs_order() const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  Alphabet alphabet_;
  std::size_t state_count_;
  State initial_;
  std::vector<bool> accepting_;
  std::vector<State> delta_;
};

/// Same automaton with states renumbered: BFS order from the initial state
/// first, then unreachable states in their original index order. Language and
/// state count are unchanged.
Dfa canonical_numbering(const Dfa& d);

/// Throws InputError unless both automata share the same ordered alphabet.
void require_same_alphabet(const Dfa& a, const Dfa& b);

}  // namespace dfadist
