#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <string>

#include "dfadist/algebra.hpp"
#include "dfadist/dfa_io.hpp"
#include "dfadist/distinguish.hpp"
#include "dfadist/reduction.hpp"
#include "dfadist/sat.hpp"

namespace dfadist::cli {
namespace {

sat::CnfInstance load_cnf(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    sat::DimacsResult parsed = sat::parse_dimacs(in);
    for (const std::string& w : parsed.warnings) err << "warning: " << path << ": " << w << '\n';
    return std::move(parsed.instance);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinguishing-automaton toolkit: DFA algebra, minimal distinguishing DFA "
               "synthesis and the CNF-to-DFA reduction"};
  app.name("dfadist");
  app.require_subcommand(1);

  // The selected subcommand stores its action here; it runs after parsing.
  std::function<int()> action;
  EncodingOptions encoding;
  auto add_encoding_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--no-symmetry-breaking",
                  [&](std::int64_t) { encoding.symmetry_breaking = false; },
                  "Drop the BFS numbering constraints from the encoding");
    cmd->add_flag("--path-witness",
                  [&](std::int64_t) { encoding.witness = WitnessEncoding::BoundedPath; },
                  "Use the bounded single-path witness encoding");
  };

  std::string cnf_path, plus_path, minus_path;
  auto* reduce = app.add_subcommand("reduce", "Build the L+ / L- automata of a DIMACS formula");
  reduce->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  reduce->add_option("plus", plus_path, "Output .dfa for L+")->required();
  reduce->add_option("minus", minus_path, "Output .dfa for L-")->required();
  reduce->callback([&] {
    action = [&] {
      const reduction::CnfFormula phi(load_cnf(cnf_path, err));
      const Dfa plus = reduction::build_Lplus(phi);
      const Dfa minus = reduction::build_Lminus(phi.var_count(), phi.clause_count());
      save_dfa(plus, plus_path);
      save_dfa(minus, minus_path);
      out << "plus: " << plus.state_count() << " states\n";
      out << "minus: " << minus.state_count() << " states\n";
      return kTrue;
    };
  });

  std::string first_path, second_path, third_path, emit_path;
  std::size_t max_k = 0;
  auto* synth = app.add_subcommand("synth", "Smallest DFA distinguishing two automata");
  synth->add_option("a1", first_path, "First .dfa")->required();
  synth->add_option("a2", second_path, "Second .dfa")->required();
  synth->add_option("--max-k", max_k, "Largest state count to try")
      ->required()
      ->check(CLI::PositiveNumber);
  synth->add_option("--emit", emit_path, "Write the distinguishing DFA here");
  add_encoding_flags(synth);
  synth->callback([&] {
    action = [&] {
      const Dfa a1 = load_dfa(first_path);
      const Dfa a2 = load_dfa(second_path);
      const SynthOutcome outcome = synth_min_distinguishing(a1, a2, max_k, encoding);
      if (!outcome.found()) {
        out << "none\n";
        return kFalse;
      }
      const Distinguisher& d = *outcome.result;
      out << "k=" << d.dfa.state_count() << " orientation=" << orientation_number(d.orientation)
          << '\n';
      if (!emit_path.empty()) save_dfa(d.dfa, emit_path);
      return kTrue;
    };
  });

  auto* word = app.add_subcommand("word", "Shortest word accepted by exactly one automaton");
  word->add_option("a1", first_path, "First .dfa")->required();
  word->add_option("a2", second_path, "Second .dfa")->required();
  word->callback([&] {
    action = [&] {
      const auto w = shortest_distinguishing_word(load_dfa(first_path), load_dfa(second_path));
      if (!w) {
        out << "none\n";
        return kFalse;
      }
      out << *w << '\n';
      return kTrue;
    };
  });

  auto* check = app.add_subcommand("check", "Language predicates; exit 0 if true, 1 if false");
  check->require_subcommand(1);
  auto* subset = check->add_subcommand("subset", "L(a) is a subset of L(b)");
  subset->add_option("a", first_path)->required();
  subset->add_option("b", second_path)->required();
  subset->callback([&] {
    action = [&] {
      return is_subset(load_dfa(first_path), load_dfa(second_path)) ? kTrue : kFalse;
    };
  });
  auto* equiv = check->add_subcommand("equiv", "L(a) equals L(b)");
  equiv->add_option("a", first_path)->required();
  equiv->add_option("b", second_path)->required();
  equiv->callback([&] {
    action = [&] {
      return is_equivalent(load_dfa(first_path), load_dfa(second_path)) ? kTrue : kFalse;
    };
  });
  auto* distinguishing =
      check->add_subcommand("distinguishing", "L(d) is a subset of exactly one of L(a1), L(a2)");
  distinguishing->add_option("d", first_path)->required();
  distinguishing->add_option("a1", second_path)->required();
  distinguishing->add_option("a2", third_path)->required();
  distinguishing->callback([&] {
    action = [&] {
      return is_distinguishing(load_dfa(first_path), load_dfa(second_path),
                               load_dfa(third_path))
                 ? kTrue
                 : kFalse;
    };
  });

  auto* minimize_cmd = app.add_subcommand("minimize", "Print the minimal equivalent DFA");
  minimize_cmd->add_option("dfa", first_path)->required();
  minimize_cmd->callback([&] {
    action = [&] {
      out << serialize_dfa(minimize(load_dfa(first_path)));
      return kTrue;
    };
  });

  auto* dot = app.add_subcommand("dot", "Print a Graphviz rendering");
  dot->add_option("dfa", first_path)->required();
  dot->callback([&] {
    action = [&] {
      out << to_dot(load_dfa(first_path));
      return kTrue;
    };
  });

  auto* sat_cmd = app.add_subcommand("sat", "Solve a DIMACS CNF with the built-in DPLL engine");
  sat_cmd->add_option("cnf", cnf_path)->required();
  sat_cmd->callback([&] {
    action = [&] {
      const auto model = sat::solve(load_cnf(cnf_path, err));
      if (!model) {
        out << "s UNSATISFIABLE\n";
        return kFalse;
      }
      out << "s SATISFIABLE\n" << sat::format_model(*model);
      return kTrue;
    };
  });

  auto* verify = app.add_subcommand(
      "verify-lemma", "Compare satisfiability with (k+2)-bounded distinguishing synthesis");
  verify->add_option("cnf", cnf_path)->required();
  add_encoding_flags(verify);
  verify->callback([&] {
    action = [&] {
      const reduction::CnfFormula phi(load_cnf(cnf_path, err));
      const reduction::LemmaReport report = reduction::verify_lemma(phi, encoding);
      out << report.to_text();
      return report.consistent() ? kTrue : kFalse;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kError;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

}  // namespace dfadist::cli
