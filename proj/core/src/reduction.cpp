#include "dfadist/reduction.hpp"

#include <map>
#include <sstream>
#include <tuple>

#include "dfadist/algebra.hpp"

namespace dfadist::reduction {

Alphabet block_alphabet() { return Alphabet("01#"); }

CnfFormula::CnfFormula(sat::CnfInstance instance) : instance_(std::move(instance)) {
  if (instance_.var_count == 0) throw InputError("formula needs at least one variable");
  if (instance_.clauses.empty()) throw InputError("formula needs at least one clause");
  for (std::size_t i = 0; i < instance_.clauses.size(); ++i) {
    if (instance_.clauses[i].empty()) {
      throw InputError("clause " + std::to_string(i + 1) +
                       " is empty; the reduction languages would coincide");
    }
  }
  instance_.validate();
}

Word assignment_word(const Assignment& a) {
  Word w;
  w.reserve(a.bits.size());
  for (bool bit : a.bits) w.push_back(bit ? '1' : '0');
  return w;
}

std::optional<Assignment> assignment_from_word(std::string_view w) {
  Assignment a;
  a.bits.reserve(w.size());
  for (char c : w) {
    if (c != '0' && c != '1') return std::nullopt;
    a.bits.push_back(c == '1');
  }
  return a;
}

bool block_satisfies(std::string_view bits, const sat::Clause& c) {
  for (sat::Literal lit : c) {
    const auto var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
    if (var > bits.size()) continue;
    if ((bits[var - 1] == '1') == (lit > 0)) return true;
  }
  return false;
}

namespace {

/// Splits off one "bits#" block of length k starting at `pos`; returns the
/// bits on success and advances `pos` past the separator.
std::optional<std::string_view> take_block(std::string_view w, std::size_t& pos,
                                           std::size_t k) {
  if (pos + k + 1 > w.size()) return std::nullopt;
  const std::string_view bits = w.substr(pos, k);
  for (char c : bits) {
    if (c != '0' && c != '1') return std::nullopt;
  }
  if (w[pos + k] != kSeparator) return std::nullopt;
  pos += k + 1;
  return bits;
}

bool over_block_alphabet(std::string_view w) {
  for (char c : w) {
    if (c != '0' && c != '1' && c != kSeparator) return false;
  }
  return true;
}

}  // namespace

bool in_Lminus(std::string_view w, std::size_t k, std::size_t n) {
  std::size_t pos = 0;
  std::size_t blocks = 0;
  while (pos < w.size()) {
    if (!take_block(w, pos, k)) return false;
    ++blocks;
  }
  return blocks <= n;
}

bool in_Lplus(std::string_view w, const CnfFormula& phi) {
  if (in_Lminus(w, phi.var_count(), phi.clause_count())) return true;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < phi.clause_count(); ++i) {
    const auto bits = take_block(w, pos, phi.var_count());
    if (!bits || !block_satisfies(*bits, phi.clause(i))) return false;
  }
  return over_block_alphabet(w.substr(pos));
}

namespace {

enum class Mode { Alive, Dead, AcceptAll, Final, Sink };

// (mode, block, position, clause already satisfied by the current block)
using Key = std::tuple<Mode, std::size_t, std::size_t, bool>;

class StateSpace {
 public:
  State intern(const Key& key) {
    auto [it, fresh] = ids_.try_emplace(key, static_cast<State>(keys_.size()));
    if (fresh) keys_.push_back(key);
    return it->second;
  }
  std::size_t size() const { return keys_.size(); }
  const Key& key(State s) const { return keys_[s]; }

 private:
  std::map<Key, State> ids_;
  std::vector<Key> keys_;
};

template <typename Step, typename Accepting>
Dfa explore(const Key& start, Step step, Accepting accepting) {
  const Alphabet alphabet = block_alphabet();
  StateSpace space;
  space.intern(start);
  std::vector<State> delta;
  for (State s = 0; s < space.size(); ++s) {
    const Key key = space.key(s);
    for (SymbolIndex a = 0; a < alphabet.size(); ++a) {
      delta.push_back(space.intern(step(key, alphabet.symbol(a))));
    }
  }
  std::vector<bool> acc(space.size());
  for (State s = 0; s < space.size(); ++s) acc[s] = accepting(space.key(s));
  return minimize(Dfa(alphabet, space.size(), 0, std::move(acc), std::move(delta)));
}

const Key kSink{Mode::Sink, 0, 0, false};
const Key kFinal{Mode::Final, 0, 0, false};
const Key kAcceptAll{Mode::AcceptAll, 0, 0, false};

/// Successor in the plain block language, staying in `mode` between blocks.
Key block_step(std::size_t block, std::size_t pos, std::size_t k, std::size_t n, char c,
               Mode mode) {
  if (pos < k) {
    if (c == kSeparator) return kSink;
    return Key{mode, block, pos + 1, false};
  }
  if (c != kSeparator) return kSink;
  if (block + 1 < n) return Key{mode, block + 1, 0, false};
  return kFinal;
}

bool block_language_accepts(const Key& key) {
  const auto& [mode, block, pos, flag] = key;
  if (mode == Mode::Final || mode == Mode::AcceptAll) return true;
  if (mode == Mode::Alive || mode == Mode::Dead) return pos == 0;
  return false;
}

}  // namespace

Dfa build_Lminus(std::size_t k, std::size_t n) {
  if (k == 0 || n == 0) throw InputError("build_Lminus needs k >= 1 and n >= 1");
  auto step = [k, n](const Key& key, char c) -> Key {
    const auto& [mode, block, pos, flag] = key;
    if (mode != Mode::Dead) return kSink;
    return block_step(block, pos, k, n, c, Mode::Dead);
  };
  return explore(Key{Mode::Dead, 0, 0, false}, step, block_language_accepts);
}

Dfa build_Lplus(const CnfFormula& phi) {
  const std::size_t k = phi.var_count();
  const std::size_t n = phi.clause_count();
  auto step = [&](const Key& key, char c) -> Key {
    const auto& [mode, block, pos, flag] = key;
    switch (mode) {
      case Mode::AcceptAll:
        return kAcceptAll;
      case Mode::Final:
      case Mode::Sink:
        return kSink;
      case Mode::Dead:
        return block_step(block, pos, k, n, c, Mode::Dead);
      case Mode::Alive:
        break;
    }
    if (pos < k) {
      if (c == kSeparator) return kSink;
      bool satisfied = flag;
      for (sat::Literal lit : phi.clause(block)) {
        const auto var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
        if (var == pos + 1 && (c == '1') == (lit > 0)) satisfied = true;
      }
      return Key{Mode::Alive, block, pos + 1, satisfied};
    }
    if (c != kSeparator) return kSink;
    if (!flag) return block + 1 < n ? Key{Mode::Dead, block + 1, 0, false} : kFinal;
    return block + 1 < n ? Key{Mode::Alive, block + 1, 0, false} : kAcceptAll;
  };
  return explore(Key{Mode::Alive, 0, 0, false}, step, block_language_accepts);
}

Dfa witness_dfa(const Assignment& a) {
  const Alphabet alphabet = block_alphabet();
  const std::size_t k = a.bits.size();
  const auto sink = static_cast<State>(k + 1);
  const std::size_t width = alphabet.size();
  std::vector<State> delta((k + 2) * width, sink);
  const Word w = assignment_word(a);
  for (State j = 0; j < k; ++j) {
    delta[j * width + *alphabet.index_of(w[j])] = j + 1;
  }
  delta[k * width + *alphabet.index_of(kSeparator)] = 0;
  std::vector<bool> accepting(k + 2, false);
  accepting[0] = true;
  return Dfa(alphabet, k + 2, 0, std::move(accepting), std::move(delta));
}

std::optional<std::size_t> LemmaReport::min_distinguishing_k() const {
  if (!synth.found()) return std::nullopt;
  return synth.result->dfa.state_count();
}

bool LemmaReport::consistent() const {
  if (satisfiable != synth.found()) return false;
  return !satisfiable || witness_distinguishing;
}

std::string LemmaReport::to_text() const {
  std::ostringstream out;
  out << "sat: " << (satisfiable ? "yes" : "no") << '\n';
  out << "min_distinguishing_k: ";
  if (const auto k = min_distinguishing_k()) {
    out << *k;
  } else {
    out << "none";
  }
  out << '\n';
  out << "bound: k+2 = " << bound << '\n';
  out << "verdict: " << (consistent() ? "CONSISTENT" : "INCONSISTENT") << '\n';
  return out.str();
}

LemmaReport verify_lemma(const CnfFormula& phi, const EncodingOptions& options) {
  LemmaReport report;
  report.var_count = phi.var_count();
  report.clause_count = phi.clause_count();
  report.bound = phi.var_count() + 2;

  if (const auto model = sat::solve(phi.instance())) {
    report.satisfiable = true;
    report.model = Assignment::from_model(*model);
  }

  const Dfa plus = build_Lplus(phi);
  const Dfa minus = build_Lminus(phi.var_count(), phi.clause_count());
  report.synth = synth_min_distinguishing(plus, minus, report.bound, options);
  if (report.model) {
    report.witness_distinguishing = is_distinguishing(witness_dfa(*report.model), plus, minus);
  }
  return report;
}

}  // namespace dfadist::reduction
