#include "dfadist/sat.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "dfadist/dfa.hpp"

namespace dfadist::sat {

void CnfInstance::validate() const {
  for (const Clause& c : clauses) {
    for (Literal lit : c) {
      if (lit == 0) throw InputError("literal 0 inside a clause");
      const auto var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
      if (var > var_count) {
        throw InputError("literal " + std::to_string(lit) + " exceeds " +
                         std::to_string(var_count) + " variables");
      }
    }
  }
}

DimacsResult parse_dimacs(std::istream& in) {
  DimacsResult result;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  std::size_t header_line = 0;
  Clause current;
  std::size_t line_number = 0;

  for (std::string raw; std::getline(in, raw);) {
    ++line_number;
    std::istringstream tokens(raw);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c") continue;
    if (first == "%") break;  // SATLIB trailer
    if (first == "p") {
      if (have_header) throw ParseError(line_number, "duplicate 'p' header");
      std::string format;
      long long vars = -1;
      long long count = -1;
      std::string extra;
      if (!(tokens >> format >> vars >> count) || (tokens >> extra)) {
        throw ParseError(line_number, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      if (format != "cnf") {
        throw ParseError(line_number, "unsupported format '" + format + "', expected 'cnf'");
      }
      if (vars < 0 || count < 0) {
        throw ParseError(line_number, "negative count in header");
      }
      result.instance.var_count = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(count);
      header_line = line_number;
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw ParseError(line_number, "clause data before 'p cnf' header");
    }
    std::istringstream body(raw);
    for (std::string tok; body >> tok;) {
      long long lit = 0;
      std::size_t used = 0;
      try {
        lit = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw ParseError(line_number, "invalid literal '" + tok + "'");
      }
      if (lit == 0) {
        result.instance.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto var = static_cast<unsigned long long>(lit > 0 ? lit : -lit);
      if (var > result.instance.var_count) {
        throw ParseError(line_number, "literal " + tok + " exceeds declared " +
                                          std::to_string(result.instance.var_count) +
                                          " variables");
      }
      current.push_back(static_cast<Literal>(lit));
    }
  }

  if (!have_header) throw ParseError(line_number + 1, "missing 'p cnf' header");
  if (!current.empty()) {
    throw ParseError(line_number, "last clause is not terminated by 0");
  }
  if (result.instance.clauses.size() != declared_clauses) {
    result.warnings.push_back(
        "line " + std::to_string(header_line) + ": header declares " +
        std::to_string(declared_clauses) + " clauses, found " +
        std::to_string(result.instance.clauses.size()));
  }
  return result;
}

DimacsResult parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string write_dimacs(const CnfInstance& f) {
  std::ostringstream out;
  out << "p cnf " << f.var_count << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (Literal lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string format_model(const Model& m) {
  std::ostringstream out;
  out << 'v';
  for (std::size_t v = 1; v <= m.values.size(); ++v) {
    out << ' ' << (m.values[v - 1] ? "" : "-") << v;
  }
  out << " 0\n";
  return out.str();
}

bool evaluate(const CnfInstance& f, const Model& m) {
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(),
                       [&](Literal lit) { return m.satisfies(lit); });
  });
}

Solver::Solver(const CnfInstance& f) : var_count_(f.var_count) {
  f.validate();
  watches_.resize(2 * (var_count_ + 1));
  for (const Clause& original : f.clauses) {
    Clause c = original;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    const bool tautology = std::any_of(c.begin(), c.end(), [&](Literal lit) {
      return lit > 0 && std::binary_search(c.begin(), c.end(), -lit);
    });
    if (tautology) continue;
    if (c.empty()) {
      trivially_unsat_ = true;
      continue;
    }
    if (c.size() == 1) {
      units_.push_back(c.front());
      continue;
    }
    const auto id = static_cast<std::uint32_t>(clauses_.size());
    watches_[watch_index(c[0])].push_back(id);
    watches_[watch_index(c[1])].push_back(id);
    clauses_.push_back(std::move(c));
  }
}

Solver::Value Solver::value_of(Literal lit) const noexcept {
  const Value v = assignment_[static_cast<std::size_t>(lit > 0 ? lit : -lit)];
  if (v == Value::Unset || lit > 0) return v;
  return v == Value::True ? Value::False : Value::True;
}

void Solver::assign(Literal lit) {
  assignment_[static_cast<std::size_t>(lit > 0 ? lit : -lit)] =
      lit > 0 ? Value::True : Value::False;
  trail_.push_back(lit);
}

bool Solver::propagate() {
  while (queue_head_ < trail_.size()) {
    const Literal falsified = -trail_[queue_head_++];
    auto& watching = watches_[watch_index(falsified)];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < watching.size(); ++i) {
      const std::uint32_t id = watching[i];
      Clause& c = clauses_[id];
      if (c[0] == falsified) std::swap(c[0], c[1]);
      if (value_of(c[0]) == Value::True) {
        watching[keep++] = id;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value_of(c[k]) != Value::False) {
          std::swap(c[1], c[k]);
          watches_[watch_index(c[1])].push_back(id);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      watching[keep++] = id;
      if (value_of(c[0]) == Value::False) {
        for (++i; i < watching.size(); ++i) watching[keep++] = watching[i];
        watching.resize(keep);
        return false;
      }
      ++stats_.propagations;
      assign(c[0]);
    }
    watching.resize(keep);
  }
  return true;
}

void Solver::undo_to(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    const Literal lit = trail_.back();
    trail_.pop_back();
    assignment_[static_cast<std::size_t>(lit > 0 ? lit : -lit)] = Value::Unset;
  }
  queue_head_ = trail_size;
}

std::optional<Model> Solver::solve() {
  stats_ = {};
  assignment_.assign(var_count_ + 1, Value::Unset);
  trail_.clear();
  queue_head_ = 0;
  if (trivially_unsat_) return std::nullopt;

  for (Literal u : units_) {
    const Value v = value_of(u);
    if (v == Value::False) return std::nullopt;
    if (v == Value::Unset) assign(u);
  }
  if (!propagate()) return std::nullopt;

  std::vector<Frame> frames;
  for (;;) {
    // Every variable below the newest decision is assigned, so the scan for
    // the lowest unassigned one can start just above it.
    auto var = static_cast<std::size_t>(frames.empty() ? 1 : frames.back().var + 1);
    while (var <= var_count_ && assignment_[var] != Value::Unset) ++var;
    if (var > var_count_) break;

    ++stats_.decisions;
    frames.push_back({trail_.size(), static_cast<std::int32_t>(var), false});
    assign(-static_cast<Literal>(var));

    while (!propagate()) {
      ++stats_.conflicts;
      while (!frames.empty() && frames.back().flipped) {
        undo_to(frames.back().trail_size);
        frames.pop_back();
      }
      if (frames.empty()) return std::nullopt;
      Frame& top = frames.back();
      undo_to(top.trail_size);
      top.flipped = true;
      assign(top.var);
    }
  }

  Model model;
  model.values.resize(var_count_);
  for (std::size_t v = 1; v <= var_count_; ++v) {
    model.values[v - 1] = assignment_[v] == Value::True;
  }
  return model;
}

std::optional<Model> solve(const CnfInstance& f) {
  Solver solver(f);
  return solver.solve();
}

}  // namespace dfadist::sat
