#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dfadist::sat {

/// DIMACS-style literal: +v is variable v, -v its negation, never 0.
using Literal = std::int32_t;
using Clause = std::vector<Literal>;

/// Propositional formula in conjunctive normal form. Variables are 1-based.
/// Empty clauses are allowed and make the instance unsatisfiable.
struct CnfInstance {
  std::size_t var_count = 0;
  std::vector<Clause> clauses;

  /// Throws InputError when a literal is 0 or exceeds var_count.
  void validate() const;

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;
};

/// Truth values for variables 1..n, stored at index v - 1.
struct Model {
  std::vector<bool> values;

  bool value(std::int32_t var) const { return values.at(var - 1); }
  bool satisfies(const Literal lit) const {
    return lit > 0 ? value(lit) : !value(-lit);
  }

  friend bool operator==(const Model&, const Model&) = default;
};

/// Result of parsing: the instance plus any non-fatal diagnostics, such as
/// a clause count that disagrees with the header.
struct DimacsResult {
  CnfInstance instance;
  std::vector<std::string> warnings;
};

DimacsResult parse_dimacs(std::istream& in);
DimacsResult parse_dimacs(std::string_view text);

std::string write_dimacs(const CnfInstance& f);

/// `v 1 -2 0` style model lines.
std::string format_model(const Model& m);

/// Direct clause-by-clause evaluation.
bool evaluate(const CnfInstance& f, const Model& m);

/// Counters from the last solve() call.
struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
};

/// DPLL with unit propagation over two watched literals and chronological
/// backtracking. Branches on the lowest-indexed unassigned variable, false
/// first, so results are deterministic. No clause learning, no restarts.
///
/// A Solver owns mutable search state; use one instance per thread.
class Solver {
 public:
  explicit Solver(const CnfInstance& f);

  std::optional<Model> solve();

  const SolverStats& stats() const noexcept { return stats_; }

 private:
  enum class Value : std::int8_t { False = -1, Unset = 0, True = 1 };

  struct Frame {
    std::size_t trail_size;
    std::int32_t var;
    bool flipped;
  };

  static std::size_t watch_index(Literal lit) noexcept {
    return 2 * static_cast<std::size_t>(lit > 0 ? lit : -lit) + (lit < 0);
  }
  Value value_of(Literal lit) const noexcept;
  void assign(Literal lit);
  bool propagate();
  void undo_to(std::size_t trail_size);

  std::size_t var_count_;
  std::vector<Clause> clauses_;
  bool trivially_unsat_ = false;
  std::vector<Literal> units_;
  std::vector<std::vector<std::uint32_t>> watches_;
  std::vector<Value> assignment_;
  std::vector<Literal> trail_;
  std::size_t queue_head_ = 0;
  SolverStats stats_;
};

/// Convenience wrapper: constructs a Solver and runs it once.
std::optional<Model> solve(const CnfInstance& f);

}  // namespace dfadist::sat
