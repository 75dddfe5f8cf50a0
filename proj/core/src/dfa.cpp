#include "dfadist/dfa.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace dfadist {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InputError("alphabet must not be empty");
  std::array<bool, 256> seen{};
  for (char c : symbols_) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isgraph(u) || c == ';') {
      throw InputError(std::string("invalid alphabet symbol '") + c + "'");
    }
    if (seen[u]) {
      throw InputError(std::string("duplicate alphabet symbol '") + c + "'");
    }
    seen[u] = true;
  }
}

std::optional<SymbolIndex> Alphabet::index_of(char c) const noexcept {
  const auto pos = symbols_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<SymbolIndex>(pos);
}

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, State initial,
         std::vector<bool> accepting, std::vector<State> delta)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      accepting_(std::move(accepting)),
      delta_(std::move(delta)) {
  if (state_count_ == 0) throw InputError("a DFA needs at least one state");
  if (initial_ >= state_count_) throw InputError("initial state out of range");
  if (accepting_.size() != state_count_) {
    throw InputError("accepting mask size differs from state count");
  }
  if (delta_.size() != state_count_ * alphabet_.size()) {
    throw InputError("transition table is not total");
  }
  for (State t : delta_) {
    if (t >= state_count_) throw InputError("transition target out of range");
  }
}

Dfa Dfa::from_accepting_list(Alphabet alphabet, std::size_t state_count,
                             State initial, std::span<const State> accepting,
                             std::vector<State> delta) {
  std::vector<bool> mask(state_count, false);
  for (State q : accepting) {
    if (q >= state_count) throw InputError("accepting state out of range");
    mask[q] = true;
  }
  return Dfa(std::move(alphabet), state_count, initial, std::move(mask),
             std::move(delta));
}

Dfa Dfa::trivial(Alphabet alphabet, bool accept_all) {
  const std::size_t width = alphabet.size();
  return Dfa(std::move(alphabet), 1, 0, {accept_all},
             std::vector<State>(width, 0));
}

std::vector<State> Dfa::accepting_states() const {
  std::vector<State> out;
  for (State q = 0; q < state_count_; ++q) {
    if (accepting_[q]) out.push_back(q);
  }
  return out;
}

State Dfa::run(State from, std::string_view w) const {
  if (from >= state_count_) throw InputError("state out of range");
  State q = from;
  for (char c : w) {
    const auto a = alphabet_.index_of(c);
    if (!a) {
      throw InputError(std::string("symbol '") + c + "' is not in alphabet \"" +
                       alphabet_.symbols() + "\"");
    }
    q = next(q, *a);
  }
  return q;
}

std::vector<State> Dfa::bfs_order() const {
  std::vector<bool> seen(state_count_, false);
  std::vector<State> order;
  order.reserve(state_count_);
  order.push_back(initial_);
  seen[initial_] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (State t : row(order[head])) {
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }
  return order;
}

Dfa canonical_numbering(const Dfa& d) {
  const std::size_t m = d.state_count();
  const std::size_t width = d.alphabet().size();
  std::vector<State> order = d.bfs_order();
  std::vector<bool> placed(m, false);
  for (State q : order) placed[q] = true;
  for (State q = 0; q < m; ++q) {
    if (!placed[q]) order.push_back(q);
  }

  std::vector<State> rename(m);
  for (State i = 0; i < m; ++i) rename[order[i]] = i;

  std::vector<bool> accepting(m);
  std::vector<State> delta(m * width);
  for (State i = 0; i < m; ++i) {
    const State old = order[i];
    accepting[i] = d.is_accepting(old);
    for (SymbolIndex a = 0; a < width; ++a) {
      delta[i * width + a] = rename[d.next(old, a)];
    }
  }
  return Dfa(d.alphabet(), m, 0, std::move(accepting), std::move(delta));
}

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (a.alphabet() != b.alphabet()) {
    throw InputError("alphabet mismatch: \"" + a.alphabet().symbols() +
                     "\" vs \"" + b.alphabet().symbols() + "\"");
  }
}

}  // namespace dfadist
