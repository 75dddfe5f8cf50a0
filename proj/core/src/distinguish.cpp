#include "dfadist/distinguish.hpp"

#include <stdexcept>
#include <vector>

#include "dfadist/algebra.hpp"

namespace dfadist {

std::optional<Word> shortest_distinguishing_word(const Dfa& a1, const Dfa& a2) {
  return shortest_accepted_word(product(a1, a2, BoolOp::Xor));
}

bool is_distinguishing(const Dfa& d, const Dfa& a1, const Dfa& a2) {
  require_same_alphabet(d, a1);
  require_same_alphabet(d, a2);
  return is_subset(d, a1) != is_subset(d, a2);
}

DecodeContext::DecodeContext(Alphabet alphabet, std::size_t states,
                             sat::Literal first_transition_var,
                             sat::Literal first_accepting_var)
    : alphabet_(std::move(alphabet)),
      states_(states),
      first_transition_var_(first_transition_var),
      first_accepting_var_(first_accepting_var) {}

sat::Literal DecodeContext::transition_var(State q, SymbolIndex a, State target) const {
  const std::size_t offset = (q * alphabet_.size() + a) * states_ + target;
  return first_transition_var_ + static_cast<sat::Literal>(offset);
}

sat::Literal DecodeContext::accepting_var(State q) const {
  return first_accepting_var_ + static_cast<sat::Literal>(q);
}

Dfa DecodeContext::decode(const sat::Model& model) const {
  const std::size_t width = alphabet_.size();
  std::vector<State> delta(states_ * width, 0);
  std::vector<bool> accepting(states_);
  for (State q = 0; q < states_; ++q) {
    accepting[q] = model.value(accepting_var(q));
    for (SymbolIndex a = 0; a < width; ++a) {
      bool assigned = false;
      for (State t = 0; t < states_; ++t) {
        if (model.value(transition_var(q, a, t))) {
          delta[q * width + a] = t;
          assigned = true;
          break;
        }
      }
      if (!assigned) throw std::logic_error("model leaves a transition undefined");
    }
  }
  return Dfa(alphabet_, states_, 0, std::move(accepting), std::move(delta));
}

namespace {

class CnfBuilder {
 public:
  sat::Literal fresh() { return static_cast<sat::Literal>(++cnf_.var_count); }

  sat::Literal fresh_block(std::size_t n) {
    const auto first = static_cast<sat::Literal>(cnf_.var_count + 1);
    cnf_.var_count += n;
    return first;
  }

  void add(sat::Clause c) { cnf_.clauses.push_back(std::move(c)); }

  void exactly_one(const std::vector<sat::Literal>& lits) {
    add(lits);
    for (std::size_t i = 0; i < lits.size(); ++i) {
      for (std::size_t j = i + 1; j < lits.size(); ++j) add({-lits[i], -lits[j]});
    }
  }

  /// out <-> AND(ins)
  void define_and(sat::Literal out, const std::vector<sat::Literal>& ins) {
    sat::Clause back{out};
    for (sat::Literal in : ins) {
      add({-out, in});
      back.push_back(-in);
    }
    add(std::move(back));
  }

  /// out <-> OR(ins)
  void define_or(sat::Literal out, const std::vector<sat::Literal>& ins) {
    sat::Clause forth{-out};
    for (sat::Literal in : ins) {
      add({out, -in});
      forth.push_back(in);
    }
    add(std::move(forth));
  }

  sat::CnfInstance take() { return std::move(cnf_); }

 private:
  sat::CnfInstance cnf_;
};

/// Live states of `x`: those from which an accepting state is reachable.
std::vector<bool> live_states(const Dfa& x) {
  const std::size_t m = x.state_count();
  const std::size_t width = x.alphabet().size();
  std::vector<std::vector<State>> preds(m);
  for (State s = 0; s < m; ++s) {
    for (SymbolIndex a = 0; a < width; ++a) preds[x.next(s, a)].push_back(s);
  }
  std::vector<bool> live(m, false);
  std::vector<State> stack;
  for (State s = 0; s < m; ++s) {
    if (x.is_accepting(s)) {
      live[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (State p : preds[s]) {
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
    }
  }
  return live;
}

// BFS canonical numbering of D: every state j > 0 has a BFS parent i < j
// reached over the smallest symbol, and parents/symbols are ordered.
void add_symmetry_breaking(CnfBuilder& b, const DecodeContext& ctx, std::size_t width) {
  const std::size_t k = ctx.states();
  if (k < 2) return;

  // edge[i][j] <-> some symbol leads from i to j
  std::vector<std::vector<sat::Literal>> edge(k, std::vector<sat::Literal>(k, 0));
  for (State i = 0; i < k; ++i) {
    for (State j = i + 1; j < k; ++j) {
      edge[i][j] = b.fresh();
      std::vector<sat::Literal> labels;
      for (SymbolIndex a = 0; a < width; ++a) labels.push_back(ctx.transition_var(i, a, j));
      b.define_or(edge[i][j], labels);
    }
  }

  // parent[j][i] <-> edge[i][j] and no edge into j from a smaller state
  std::vector<std::vector<sat::Literal>> parent(k, std::vector<sat::Literal>(k, 0));
  for (State j = 1; j < k; ++j) {
    std::vector<sat::Literal> options;
    for (State i = 0; i < j; ++i) {
      parent[j][i] = b.fresh();
      std::vector<sat::Literal> conj{edge[i][j]};
      for (State r = 0; r < i; ++r) conj.push_back(-edge[r][j]);
      b.define_and(parent[j][i], conj);
      options.push_back(parent[j][i]);
    }
    b.add(options);
  }
  for (State j = 1; j + 1 < k; ++j) {
    for (State i = 0; i < j; ++i) {
      for (State r = 0; r < i; ++r) b.add({-parent[j][i], -parent[j + 1][r]});
    }
  }

  // least[i][a][j] <-> a is the smallest symbol on an i -> j transition
  auto least_index = [&](State i, SymbolIndex a, State j) { return (i * width + a) * k + j; };
  std::vector<sat::Literal> least(k * width * k, 0);
  for (State i = 0; i < k; ++i) {
    for (State j = i + 1; j < k; ++j) {
      for (SymbolIndex a = 0; a < width; ++a) {
        const sat::Literal v = b.fresh();
        std::vector<sat::Literal> conj{ctx.transition_var(i, a, j)};
        for (SymbolIndex c = 0; c < a; ++c) conj.push_back(-ctx.transition_var(i, c, j));
        b.define_and(v, conj);
        least[least_index(i, a, j)] = v;
      }
    }
  }
  for (State j = 1; j + 1 < k; ++j) {
    for (State i = 0; i < j; ++i) {
      for (SymbolIndex a = 0; a < width; ++a) {
        for (SymbolIndex c = a + 1; c < width; ++c) {
          b.add({-parent[j][i], -parent[j + 1][i], -least[least_index(i, a, j + 1)],
                 -least[least_index(i, c, j)]});
        }
      }
    }
  }
}

// L(D) ⊆ L(target): over-approximated reachability of D x target must never
// pair an accepting D-state with a rejecting target state.
void add_inclusion(CnfBuilder& b, const DecodeContext& ctx, const Dfa& target) {
  const std::size_t k = ctx.states();
  const std::size_t width = target.alphabet().size();
  const std::size_t m = target.state_count();
  const sat::Literal first = b.fresh_block(k * m);
  auto reach = [&](State q, State s) { return first + static_cast<sat::Literal>(q * m + s); };

  b.add({reach(0, target.initial())});
  for (State q = 0; q < k; ++q) {
    for (State s = 0; s < m; ++s) {
      for (SymbolIndex a = 0; a < width; ++a) {
        const State s2 = target.next(s, a);
        for (State q2 = 0; q2 < k; ++q2) {
          b.add({-reach(q, s), -ctx.transition_var(q, a, q2), reach(q2, s2)});
        }
      }
      if (!target.is_accepting(s)) b.add({-reach(q, s), -ctx.accepting_var(q)});
    }
  }
}

// L(D) ∩ L(x) ≠ ∅ via layered reachability: reach[t][q][s] holds iff (q, s) is
// reachable in D x x within t steps. Only live x-states are tracked.
void add_layered_witness(CnfBuilder& b, const DecodeContext& ctx, const Dfa& x) {
  const std::size_t k = ctx.states();
  const std::size_t width = x.alphabet().size();
  const std::vector<bool> live = live_states(x);
  if (!live[x.initial()]) {
    b.add({});
    return;
  }

  std::vector<State> live_ids;
  std::vector<std::size_t> slot(x.state_count(), 0);
  for (State s = 0; s < x.state_count(); ++s) {
    if (live[s]) {
      slot[s] = live_ids.size();
      live_ids.push_back(s);
    }
  }
  const std::size_t n = live_ids.size();
  // A shortest accepted word of D x x visits each of at most k * n live pairs
  // once, so k * n - 1 steps suffice.
  const std::size_t last_layer = k * n - 1;

  auto layer_block = [&]() { return b.fresh_block(k * n); };
  auto at = [&](sat::Literal base, State q, State s) {
    return base + static_cast<sat::Literal>(q * n + slot[s]);
  };

  sat::Literal current = layer_block();
  for (State q = 0; q < k; ++q) {
    for (State s : live_ids) {
      const bool start = q == 0 && s == x.initial();
      b.add({start ? at(current, q, s) : -at(current, q, s)});
    }
  }

  for (std::size_t t = 0; t < last_layer; ++t) {
    const sat::Literal following = layer_block();
    std::vector<std::vector<sat::Literal>> support(k * n);
    for (State q = 0; q < k; ++q) {
      for (State s : live_ids) {
        support[q * n + slot[s]].push_back(at(current, q, s));
      }
    }
    for (State q = 0; q < k; ++q) {
      for (State s : live_ids) {
        for (SymbolIndex a = 0; a < width; ++a) {
          const State s2 = x.next(s, a);
          if (!live[s2]) continue;
          for (State q2 = 0; q2 < k; ++q2) {
            const sat::Literal step = b.fresh();
            b.define_and(step, {at(current, q, s), ctx.transition_var(q, a, q2)});
            support[q2 * n + slot[s2]].push_back(step);
          }
        }
      }
    }
    for (State q = 0; q < k; ++q) {
      for (State s : live_ids) {
        b.define_or(at(following, q, s), support[q * n + slot[s]]);
      }
    }
    current = following;
  }

  sat::Clause goal;
  for (State q = 0; q < k; ++q) {
    for (State s : live_ids) {
      if (!x.is_accepting(s)) continue;
      const sat::Literal hit = b.fresh();
      b.add({-hit, at(current, q, s)});
      b.add({-hit, ctx.accepting_var(q)});
      goal.push_back(hit);
    }
  }
  b.add(std::move(goal));
}

// L(D) ∩ L(x) ≠ ∅ via one explicit path of length at most k * |x|.
void add_path_witness(CnfBuilder& b, const DecodeContext& ctx, const Dfa& x) {
  const std::size_t k = ctx.states();
  const std::size_t width = x.alphabet().size();
  const std::size_t m = x.state_count();
  const std::size_t length = k * m;

  std::vector<sat::Literal> d_state(length + 1), x_state(length + 1), symbol(length),
      end(length + 1);
  for (std::size_t t = 0; t <= length; ++t) {
    d_state[t] = b.fresh_block(k);
    x_state[t] = b.fresh_block(m);
    if (t < length) symbol[t] = b.fresh_block(width);
    end[t] = b.fresh();
  }
  auto lits = [](sat::Literal base, std::size_t n) {
    std::vector<sat::Literal> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = base + static_cast<sat::Literal>(i);
    return out;
  };

  b.add({d_state[0]});
  b.add({x_state[0] + static_cast<sat::Literal>(x.initial())});
  for (std::size_t t = 0; t <= length; ++t) {
    b.exactly_one(lits(d_state[t], k));
    b.exactly_one(lits(x_state[t], m));
    if (t < length) b.exactly_one(lits(symbol[t], width));
  }
  b.exactly_one(end);

  for (std::size_t t = 0; t < length; ++t) {
    for (SymbolIndex a = 0; a < width; ++a) {
      const sat::Literal c = symbol[t] + static_cast<sat::Literal>(a);
      for (State q = 0; q < k; ++q) {
        const sat::Literal p = d_state[t] + static_cast<sat::Literal>(q);
        for (State q2 = 0; q2 < k; ++q2) {
          b.add({-p, -c, -ctx.transition_var(q, a, q2),
                 d_state[t + 1] + static_cast<sat::Literal>(q2)});
        }
      }
      for (State s = 0; s < m; ++s) {
        b.add({-(x_state[t] + static_cast<sat::Literal>(s)), -c,
               x_state[t + 1] + static_cast<sat::Literal>(x.next(s, a))});
      }
    }
  }
  for (std::size_t t = 0; t <= length; ++t) {
    for (State q = 0; q < k; ++q) {
      b.add({-end[t], -(d_state[t] + static_cast<sat::Literal>(q)), ctx.accepting_var(q)});
    }
    for (State s = 0; s < m; ++s) {
      if (!x.is_accepting(s)) {
        b.add({-end[t], -(x_state[t] + static_cast<sat::Literal>(s))});
      }
    }
  }
}

}  // namespace

Encoding encode_distinguishing(const Dfa& a1, const Dfa& a2, std::size_t states,
                               Orientation orientation, const EncodingOptions& options) {
  require_same_alphabet(a1, a2);
  if (states == 0) throw InputError("distinguishing DFA size must be positive");

  const Dfa target = minimize(orientation == Orientation::First ? a1 : a2);
  const Dfa escape = minimize(orientation == Orientation::First ? a2 : a1);
  const Dfa witness = minimize(product(target, complement(escape), BoolOp::And));
  const std::size_t width = target.alphabet().size();

  CnfBuilder b;
  // D's own variables come first so the solver branches on them before any
  // auxiliary variable.
  const sat::Literal first_accepting = b.fresh_block(states);
  const sat::Literal first_transition = b.fresh_block(states * width * states);
  DecodeContext ctx(target.alphabet(), states, first_transition, first_accepting);

  for (State q = 0; q < states; ++q) {
    for (SymbolIndex a = 0; a < width; ++a) {
      std::vector<sat::Literal> row;
      for (State t = 0; t < states; ++t) row.push_back(ctx.transition_var(q, a, t));
      b.exactly_one(row);
    }
  }
  if (options.symmetry_breaking) add_symmetry_breaking(b, ctx, width);
  add_inclusion(b, ctx, target);
  if (options.witness == WitnessEncoding::LayeredReachability) {
    add_layered_witness(b, ctx, witness);
  } else {
    add_path_witness(b, ctx, witness);
  }
  return Encoding{b.take(), std::move(ctx)};
}

SynthOutcome synth_min_distinguishing(const Dfa& a1, const Dfa& a2, std::size_t k_max,
                                      const EncodingOptions& options) {
  require_same_alphabet(a1, a2);
  SynthOutcome outcome;
  outcome.bound = k_max;
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (Orientation o : {Orientation::First, Orientation::Second}) {
      const Encoding enc = encode_distinguishing(a1, a2, k, o, options);
      const std::optional<sat::Model> model = sat::solve(enc.cnf);
      if (!model) continue;
      Dfa found = minimize(enc.context.decode(*model));
      if (!is_distinguishing(found, a1, a2)) {
        throw std::logic_error("decoded automaton is not distinguishing");
      }
      outcome.result = Distinguisher{std::move(found), o};
      return outcome;
    }
  }
  return outcome;
}

namespace {

/// Calls `visit` on every k-state DFA with initial state 0 until it returns
/// true; returns the accepted DFA, if any.
template <typename Visit>
std::optional<Dfa> enumerate_dfas(const Alphabet& alphabet, std::size_t k, Visit visit) {
  const std::size_t width = alphabet.size();
  const std::size_t cells = k * width;
  // digit i is the target of (state i % k, symbol i / k): symbol-major
  std::vector<State> digits(cells, 0);
  std::vector<State> delta(cells);
  for (;;) {
    for (std::size_t i = 0; i < cells; ++i) {
      const std::size_t q = i % k;
      const std::size_t a = i / k;
      delta[q * width + a] = digits[i];
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<bool> accepting(k);
      for (std::size_t q = 0; q < k; ++q) accepting[q] = (mask >> q) & 1U;
      Dfa d(alphabet, k, 0, std::move(accepting), delta);
      if (visit(d)) return d;
    }
    std::size_t i = 0;
    while (i < cells && ++digits[i] == k) digits[i++] = 0;
    if (i == cells) return std::nullopt;
  }
}

}  // namespace

std::optional<Dfa> brute_force_distinguishing(const Dfa& a1, const Dfa& a2,
                                              std::size_t states,
                                              Orientation orientation) {
  require_same_alphabet(a1, a2);
  if (states == 0) throw InputError("distinguishing DFA size must be positive");
  const Dfa& target = orientation == Orientation::First ? a1 : a2;
  const Dfa& escape = orientation == Orientation::First ? a2 : a1;
  return enumerate_dfas(a1.alphabet(), states, [&](const Dfa& d) {
    return is_subset(d, target) && !is_subset(d, escape);
  });
}

SynthOutcome brute_force_min_distinguishing(const Dfa& a1, const Dfa& a2,
                                            std::size_t k_max) {
  require_same_alphabet(a1, a2);
  SynthOutcome outcome;
  outcome.bound = k_max;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::optional<Dfa> hit =
        enumerate_dfas(a1.alphabet(), k, [&](const Dfa& d) { return is_distinguishing(d, a1, a2); });
    if (hit) {
      const Orientation o = is_subset(*hit, a1) ? Orientation::First : Orientation::Second;
      outcome.result = Distinguisher{std::move(*hit), o};
      return outcome;
    }
  }
  return outcome;
}

}  // namespace dfadist
