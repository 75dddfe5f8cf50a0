#include "dfadist/dfa_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace dfadist {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto semi = raw.find(';'); semi != std::string::npos) {
      raw.erase(semi);
    }
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string tok; words >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t parse_count(const Line& line, const std::string& tok) {
  std::size_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line.number, "expected a non-negative integer, got '" +
                                      tok + "'");
  }
  return value;
}

State parse_state(const Line& line, const std::string& tok,
                  std::size_t state_count) {
  const std::size_t q = parse_count(line, tok);
  if (q >= state_count) {
    throw ParseError(line.number, "state " + tok + " out of range [0," +
                                      std::to_string(state_count) + ")");
  }
  return static_cast<State>(q);
}

const Line& expect_keyword(const std::vector<Line>& lines, std::size_t index,
                           const char* keyword, std::size_t last_line) {
  if (index >= lines.size()) {
    throw ParseError(last_line + 1,
                     std::string("unexpected end of input, expected '") +
                         keyword + "'");
  }
  const Line& line = lines[index];
  if (line.tokens.front() != keyword) {
    throw ParseError(line.number, std::string("expected '") + keyword +
                                      "', got '" + line.tokens.front() + "'");
  }
  return line;
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity + 1) {
    throw ParseError(line.number, "'" + line.tokens.front() + "' expects " +
                                      std::to_string(arity) + " argument(s)");
  }
}

}  // namespace

Dfa parse_dfa(std::istream& in) {
  const std::vector<Line> lines = significant_lines(in);
  const std::size_t last_line = lines.empty() ? 0 : lines.back().number;

  const Line& header = expect_keyword(lines, 0, "dfa", last_line);
  if (header.tokens.size() != 2 || header.tokens[1] != "v1") {
    throw ParseError(header.number, "malformed header, expected 'dfa v1'");
  }

  const Line& alpha_line = expect_keyword(lines, 1, "alphabet", last_line);
  expect_arity(alpha_line, 1);
  std::optional<Alphabet> alphabet;
  try {
    alphabet.emplace(alpha_line.tokens[1]);
  } catch (const InputError& e) {
    throw ParseError(alpha_line.number, e.what());
  }
  const std::size_t width = alphabet->size();

  const Line& states_line = expect_keyword(lines, 2, "states", last_line);
  expect_arity(states_line, 1);
  const std::size_t m = parse_count(states_line, states_line.tokens[1]);
  if (m == 0) throw ParseError(states_line.number, "state count must be positive");

  const Line& init_line = expect_keyword(lines, 3, "initial", last_line);
  expect_arity(init_line, 1);
  const State initial = parse_state(init_line, init_line.tokens[1], m);

  const Line& acc_line = expect_keyword(lines, 4, "accepting", last_line);
  std::vector<bool> accepting(m, false);
  for (std::size_t i = 1; i < acc_line.tokens.size(); ++i) {
    accepting[parse_state(acc_line, acc_line.tokens[i], m)] = true;
  }

  std::vector<State> delta(m * width);
  std::vector<bool> have_row(m, false);
  std::size_t index = 5;
  for (std::size_t r = 0; r < m; ++r, ++index) {
    const Line& row = expect_keyword(lines, index, "row", last_line);
    if (row.tokens.size() < 2) throw ParseError(row.number, "row without state");
    const State q = parse_state(row, row.tokens[1], m);
    if (have_row[q]) {
      throw ParseError(row.number, "duplicate row for state " + row.tokens[1]);
    }
    if (row.tokens.size() != width + 2) {
      throw ParseError(row.number, "row " + row.tokens[1] + " lists " +
                                       std::to_string(row.tokens.size() - 2) +
                                       " targets, alphabet has " +
                                       std::to_string(width));
    }
    have_row[q] = true;
    for (std::size_t a = 0; a < width; ++a) {
      delta[q * width + a] = parse_state(row, row.tokens[a + 2], m);
    }
  }
  if (index < lines.size()) {
    throw ParseError(lines[index].number,
                     "trailing content after " + std::to_string(m) + " rows");
  }

  return Dfa(std::move(*alphabet), m, initial, std::move(accepting),
             std::move(delta));
}

Dfa parse_dfa(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dfa(in);
}

std::string serialize_dfa(const Dfa& d) {
  const Dfa c = canonical_numbering(d);
  std::ostringstream out;
  out << "dfa v1\n";
  out << "alphabet " << c.alphabet().symbols() << '\n';
  out << "states " << c.state_count() << '\n';
  out << "initial " << c.initial() << '\n';
  out << "accepting";
  for (State q : c.accepting_states()) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < c.state_count(); ++q) {
    out << "row " << q;
    for (State t : c.row(q)) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

namespace {

std::string dot_escape(char c) {
  if (c == '"' || c == '\\') return std::string("\\") + c;
  return std::string(1, c);
}

}  // namespace

std::string to_dot(const Dfa& d) {
  std::ostringstream out;
  out << "digraph {\n  rankdir=LR;\n";
  out << "  __start [shape=point, label=\"\"];\n";
  for (State q = 0; q < d.state_count(); ++q) {
    out << "  q" << q << " [label=\"" << q << "\", shape="
        << (d.is_accepting(q) ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __start -> q" << d.initial() << ";\n";
  for (State q = 0; q < d.state_count(); ++q) {
    for (SymbolIndex a = 0; a < d.alphabet().size(); ++a) {
      out << "  q" << q << " -> q" << d.next(q, a) << " [label=\""
          << dot_escape(d.alphabet().symbol(a)) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

Dfa load_dfa(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return parse_dfa(in);
  } catch (const ParseError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_dfa(const Dfa& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << serialize_dfa(d);
  if (!out) throw InputError("write to '" + path.string() + "' failed");
}

}  // namespace dfadist
