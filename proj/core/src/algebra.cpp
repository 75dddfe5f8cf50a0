#include "dfadist/algebra.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

namespace dfadist {

bool accepts(const Dfa& d, std::string_view w) {
  return d.is_accepting(d.run(d.initial(), w));
}

Dfa product(const Dfa& a, const Dfa& b, BoolOp op) {
  require_same_alphabet(a, b);
  const std::size_t width = a.alphabet().size();
  const std::size_t mb = b.state_count();

  // pair (s, t) is keyed as s * |Q_b| + t
  std::unordered_map<std::size_t, State> index;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State s, State t) {
    const std::size_t key = static_cast<std::size_t>(s) * mb + t;
    auto [it, fresh] = index.try_emplace(key, static_cast<State>(pairs.size()));
    if (fresh) pairs.emplace_back(s, t);
    return it->second;
  };

  intern(a.initial(), b.initial());
  std::vector<State> delta;
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    const auto [s, t] = pairs[head];
    for (SymbolIndex c = 0; c < width; ++c) {
      delta.push_back(intern(a.next(s, c), b.next(t, c)));
    }
  }

  std::vector<bool> accepting(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    accepting[i] = apply(op, a.is_accepting(pairs[i].first),
                         b.is_accepting(pairs[i].second));
  }
  return Dfa(a.alphabet(), pairs.size(), 0, std::move(accepting),
             std::move(delta));
}

Dfa complement(const Dfa& d) {
  std::vector<bool> flipped = d.accepting_mask();
  flipped.flip();
  return Dfa(d.alphabet(), d.state_count(), d.initial(), std::move(flipped),
             d.delta());
}

std::optional<Word> shortest_accepted_word(const Dfa& d) {
  constexpr State kNone = static_cast<State>(-1);
  const std::size_t m = d.state_count();
  std::vector<State> parent(m, kNone);
  std::vector<SymbolIndex> via(m, 0);
  std::vector<bool> seen(m, false);
  std::vector<State> queue{d.initial()};
  seen[d.initial()] = true;

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const State q = queue[head];
    if (d.is_accepting(q)) {
      Word w;
      for (State cur = q; parent[cur] != kNone; cur = parent[cur]) {
        w.push_back(d.alphabet().symbol(via[cur]));
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (SymbolIndex a = 0; a < d.alphabet().size(); ++a) {
      const State t = d.next(q, a);
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = q;
        via[t] = a;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

bool is_empty(const Dfa& d) {
  for (State q : d.bfs_order()) {
    if (d.is_accepting(q)) return false;
  }
  return true;
}

bool is_subset(const Dfa& a, const Dfa& b) {
  return is_empty(product(a, complement(b), BoolOp::And));
}

bool is_equivalent(const Dfa& a, const Dfa& b) {
  return is_empty(product(a, b, BoolOp::Xor));
}

Dfa minimize(const Dfa& d) {
  const std::size_t width = d.alphabet().size();
  const std::vector<State> reachable = d.bfs_order();
  const std::size_t n = reachable.size();

  std::vector<State> local(d.state_count(), 0);
  for (State i = 0; i < n; ++i) local[reachable[i]] = i;

  // Moore refinement: split blocks by (own block, successor blocks) until the
  // number of blocks stops growing.
  std::vector<State> block(n);
  for (State i = 0; i < n; ++i) block[i] = d.is_accepting(reachable[i]) ? 1 : 0;
  std::size_t block_count = 0;
  for (;;) {
    std::map<std::vector<State>, State> signatures;
    std::vector<State> refined(n);
    std::vector<State> sig(width + 1);
    for (State i = 0; i < n; ++i) {
      sig[0] = block[i];
      for (SymbolIndex a = 0; a < width; ++a) {
        sig[a + 1] = block[local[d.next(reachable[i], a)]];
      }
      auto [it, fresh] =
          signatures.try_emplace(sig, static_cast<State>(signatures.size()));
      refined[i] = it->second;
    }
    block = std::move(refined);
    if (signatures.size() == block_count) break;
    block_count = signatures.size();
  }

  // Quotient, then renumber blocks by BFS from the initial block.
  std::vector<State> quotient(block_count * width);
  std::vector<bool> accepting(block_count);
  for (State i = 0; i < n; ++i) {
    const State b = block[i];
    accepting[b] = d.is_accepting(reachable[i]);
    for (SymbolIndex a = 0; a < width; ++a) {
      quotient[b * width + a] = block[local[d.next(reachable[i], a)]];
    }
  }
  Dfa q(d.alphabet(), block_count, block[local[d.initial()]],
        std::move(accepting), std::move(quotient));
  return canonical_numbering(q);
}

std::size_t nerode_class_count(const Dfa& d) {
  return minimize(d).state_count();
}

}  // namespace dfadist
