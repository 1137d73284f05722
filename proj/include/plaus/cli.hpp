#pragma once

// Command-line surface. Subcommands map one-to-one onto the library:
//
//   prob QUERY PREMISE                    exact conditional plausibility
//   count FORMULA [--symbols s1,s2,...]   model count
//   entails X A                           logical consequence
//   order X A B                           implication ordering of A vs B given X
//   canon A X                             reduction-to-urn trace report
//   check [--provider p] [--seed n] [--cases n]   requirement suites
//   limit REGIONFILE --schedule ... [--reference m/n] [--policy ...]
//   carnap --individuals I --granularity K --query EXPR [--given EXPR]
//
// Formula arguments starting with '@' name a file ('#' starts a comment).
// --json switches every subcommand to a machine-stable envelope. Exit codes:
// 0 success / suite pass, 1 failure or semantic error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "plaus/canonical.hpp"
#include "plaus/continuum.hpp"
#include "plaus/formula.hpp"
#include "plaus/plausibility.hpp"
#include "plaus/rational.hpp"
#include "plaus/requirements.hpp"
#include "plaus/semantics.hpp"

namespace plaus::cli {

namespace detail {

constexpr unsigned kDecimalDigits = 6;
constexpr std::uint64_t kReportFormulaNodeLimit = 2000;

inline std::string read_formula_argument(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw std::runtime_error("cannot open formula file '" + arg.substr(1) + "'");
  std::string text, line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    text += line;
    text += ' ';
  }
  return text;
}

inline Formula parse_formula_argument(const std::string& arg, SymbolTable& table) {
  return parse(read_formula_argument(arg), table);
}

inline void emit_probability(bool json_mode, const PlausibilityResult& p, std::ostream& out) {
  if (json_mode) {
    nlohmann::json envelope{{"rational", to_string(p.value)},
                            {"decimal", to_decimal_string(p.value, kDecimalDigits)},
                            {"decimal_digits", kDecimalDigits},
                            {"convention_applied", p.convention_applied}};
    out << envelope.dump() << "\n";
    return;
  }
  out << to_string(p.value) << "\n";
  if (p.convention_applied)
    out << "note: premise unsatisfiable; the value is the convention for that case\n";
}

inline std::string formula_or_note(const Formula& f, const SymbolTable& table) {
  if (f.node_count() > kReportFormulaNodeLimit)
    return "(omitted: " + std::to_string(f.node_count()) + " nodes)";
  return print(f, table);
}

inline std::vector<unsigned> parse_schedule(const std::string& text) {
  std::vector<unsigned> schedule;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    schedule.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (schedule.empty()) throw std::runtime_error("empty schedule");
  return schedule;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact plausible-reasoning engine for propositional logic"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-stable JSON output");

  std::string arg_query, arg_premise, arg_formula, arg_a, arg_b, arg_x;
  std::string arg_symbols, arg_provider = "counting", arg_schedule, arg_reference;
  std::string arg_policy = "corner", arg_region_file, arg_carnap_query, arg_carnap_given;
  std::uint64_t arg_seed = 1;
  unsigned arg_cases = 100, arg_chain = 4, arg_individuals = 0, arg_granularity = 0;
  std::uint64_t arg_max_models = 4096;

  CLI::App* cmd_prob = app.add_subcommand("prob", "P(QUERY | PREMISE) as an exact rational");
  cmd_prob->add_option("query", arg_query)->required();
  cmd_prob->add_option("premise", arg_premise)->required();

  CLI::App* cmd_count = app.add_subcommand("count", "number of satisfying truth assignments");
  cmd_count->add_option("formula", arg_formula)->required();
  cmd_count->add_option("--symbols", arg_symbols, "comma-separated counting set");

  CLI::App* cmd_entails = app.add_subcommand("entails", "does X entail A");
  cmd_entails->add_option("premise", arg_x)->required();
  cmd_entails->add_option("query", arg_a)->required();

  CLI::App* cmd_order = app.add_subcommand("order", "implication ordering of A, B given X");
  cmd_order->add_option("premise", arg_x)->required();
  cmd_order->add_option("a", arg_a)->required();
  cmd_order->add_option("b", arg_b)->required();

  CLI::App* cmd_canon = app.add_subcommand("canon", "reduce (A, X) to urn form with trace");
  cmd_canon->add_option("query", arg_a)->required();
  cmd_canon->add_option("premise", arg_x)->required();
  cmd_canon->add_option("--max-models", arg_max_models, "trace cap on #models of X");

  CLI::App* cmd_check = app.add_subcommand("check", "run the requirement suites");
  cmd_check->add_option("--provider", arg_provider, "counting|three-valued|weighted|all");
  cmd_check->add_option("--seed", arg_seed, "base seed");
  cmd_check->add_option("--cases", arg_cases, "instances per requirement");
  cmd_check->add_option("--chain", arg_chain, "witness chain length");

  CLI::App* cmd_limit = app.add_subcommand("limit", "grid probabilities over a schedule");
  cmd_limit->add_option("regionfile", arg_region_file)->required();
  cmd_limit->add_option("--schedule", arg_schedule, "g1,g2,...")->required();
  cmd_limit->add_option("--reference", arg_reference, "reference value m/n");
  cmd_limit->add_option("--policy", arg_policy, "corner|inner|outer");

  CLI::App* cmd_carnap = app.add_subcommand("carnap", "latent-variable premise queries");
  cmd_carnap->add_option("--individuals", arg_individuals)->required();
  cmd_carnap->add_option("--granularity", arg_granularity)->required();
  cmd_carnap->add_option("--query", arg_carnap_query)->required();
  cmd_carnap->add_option("--given", arg_carnap_given, "extra premise conjunct");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend()); // CLI11 convention
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    SymbolTable table;

    if (cmd_prob->parsed()) {
      Formula query = detail::parse_formula_argument(arg_query, table);
      Formula premise = detail::parse_formula_argument(arg_premise, table);
      detail::emit_probability(json_mode, plausibility(query, premise), out);
      return 0;
    }

    if (cmd_count->parsed()) {
      Formula f = detail::parse_formula_argument(arg_formula, table);
      SymbolSet s = symbols(f);
      if (!arg_symbols.empty()) {
        SymbolSet listed;
        std::stringstream ss(arg_symbols);
        std::string name;
        while (std::getline(ss, name, ','))
          if (!name.empty()) listed.insert(table.intern(name));
        s = listed; // must cover the formula; count_models checks
      }
      ModelCount n = count_models(f, s);
      if (json_mode) {
        std::vector<std::string> names;
        for (SymbolId id : s) names.push_back(table.name(id));
        out << nlohmann::json{{"count", n.str()}, {"symbols", names}}.dump() << "\n";
      } else {
        out << n << "\n";
      }
      return 0;
    }

    if (cmd_entails->parsed()) {
      Formula x = detail::parse_formula_argument(arg_x, table);
      Formula a = detail::parse_formula_argument(arg_a, table);
      bool result = entails(x, a);
      if (json_mode) out << nlohmann::json{{"entails", result}}.dump() << "\n";
      else out << (result ? "true" : "false") << "\n";
      return 0;
    }

    if (cmd_order->parsed()) {
      Formula x = detail::parse_formula_argument(arg_x, table);
      Formula a = detail::parse_formula_argument(arg_a, table);
      Formula b = detail::parse_formula_argument(arg_b, table);
      if (!satisfiable(x))
        throw std::runtime_error("the ordering needs a satisfiable premise; '" +
                                 print(x, table) + "' has no models");
      Ordering o = compare_implication(x, a, b);
      if (json_mode) out << nlohmann::json{{"order", to_string(o)}}.dump() << "\n";
      else out << to_string(o) << "\n";
      return 0;
    }

    if (cmd_canon->parsed()) {
      Formula query = detail::parse_formula_argument(arg_a, table);
      Formula premise = detail::parse_formula_argument(arg_x, table);
      ReductionOptions opt;
      opt.max_models = arg_max_models;
      ReductionTrace trace = reduce_to_urn(query, premise, table, opt);
      if (json_mode) {
        nlohmann::json checkpoints = nlohmann::json::array();
        for (const Checkpoint& c : trace.checkpoints)
          checkpoints.push_back({{"step", c.step},
                                 {"query", detail::formula_or_note(c.query, table)},
                                 {"premise", detail::formula_or_note(c.premise, table)},
                                 {"value", to_string(c.value)}});
        std::vector<std::string> urn_names;
        for (SymbolId id : trace.urn_symbols) urn_names.push_back(table.name(id));
        out << nlohmann::json{{"m", trace.m},
                              {"n", trace.n},
                              {"value", to_string(trace.original_value)},
                              {"urn_symbols", urn_names},
                              {"canonical_query",
                               detail::formula_or_note(trace.canonical_query, table)},
                              {"canonical_premise",
                               detail::formula_or_note(trace.canonical_premise, table)},
                              {"checkpoints", checkpoints}}
                   .dump()
            << "\n";
      } else {
        out << "query:             " << detail::formula_or_note(trace.query, table) << "\n";
        out << "premise:           " << detail::formula_or_note(trace.premise, table) << "\n";
        out << "models of premise: n=" << trace.n << ", satisfying query: m=" << trace.m << "\n";
        out << "urn symbols:       " << table.name(trace.urn_symbols.front()) << " .. "
            << table.name(trace.urn_symbols.back()) << "\n";
        out << "canonical query:   " << detail::formula_or_note(trace.canonical_query, table)
            << "\n";
        out << "canonical premise: " << detail::formula_or_note(trace.canonical_premise, table)
            << "\n";
        out << "value:             " << to_string(trace.original_value) << " (= " << trace.m
            << "/" << trace.n << ")\n";
        out << "checkpoints:\n";
        for (const Checkpoint& c : trace.checkpoints) {
          out << "  " << c.step;
          for (std::size_t i = c.step.size(); i < 28; ++i) out << ' ';
          out << to_string(c.value) << "\n";
        }
        out << "all checkpoints equal: yes\n";
      }
      return 0;
    }

    if (cmd_check->parsed()) {
      GenParams params;
      std::vector<std::string> provider_names;
      if (arg_provider == "all") provider_names = {"counting", "three-valued", "weighted"};
      else provider_names = {arg_provider};
      bool all_pass = true;
      nlohmann::json json_suites = nlohmann::json::array();
      for (const std::string& name : provider_names) {
        auto provider = make_provider(name, table);
        SuiteResult result =
            run_requirement_suite(*provider, arg_cases, arg_seed, params, table, arg_chain);
        all_pass = all_pass && result.all_pass;
        if (json_mode) json_suites.push_back(suite_to_json(result));
        else out << suite_to_text(result) << "\n";
      }
      if (json_mode)
        out << nlohmann::json{{"suites", json_suites}, {"pass", all_pass}}.dump() << "\n";
      return all_pass ? 0 : 1;
    }

    if (cmd_limit->parsed()) {
      std::ifstream in(arg_region_file);
      if (!in) throw std::runtime_error("cannot open region file '" + arg_region_file + "'");
      nlohmann::json j;
      in >> j;
      RegionPair pair = region_pair_from_json(j);
      std::vector<unsigned> schedule = detail::parse_schedule(arg_schedule);
      std::optional<Rational> reference;
      if (!arg_reference.empty()) reference = parse_rational(arg_reference);
      CellPolicy policy = parse_cell_policy(arg_policy);
      ConvergenceReport report = converge(pair, schedule, reference, policy);
      if (json_mode) {
        nlohmann::json rows = nlohmann::json::array();
        for (const ConvergenceRow& row : report.rows) {
          nlohmann::json r{{"g", row.resolution}};
          if (row.value) {
            r["rational"] = to_string(*row.value);
            r["decimal"] = to_decimal_string(*row.value, detail::kDecimalDigits);
          }
          if (row.abs_error) r["abs_error"] = to_decimal_string(*row.abs_error, detail::kDecimalDigits);
          if (!row.message.empty()) r["error"] = row.message;
          rows.push_back(std::move(r));
        }
        nlohmann::json envelope{{"policy", arg_policy}, {"rows", rows}};
        if (reference) envelope["reference"] = to_string(*reference);
        out << envelope.dump() << "\n";
      } else {
        for (const ConvergenceRow& row : report.rows) {
          out << "g=" << row.resolution;
          if (row.value) {
            out << "  P=" << to_string(*row.value) << " (~"
                << to_decimal_string(*row.value, detail::kDecimalDigits) << ")";
            if (row.abs_error)
              out << "  |err|=" << to_decimal_string(*row.abs_error, detail::kDecimalDigits);
          } else {
            out << "  error: " << row.message;
          }
          out << "\n";
        }
      }
      return 0;
    }

    if (cmd_carnap->parsed()) {
      CarnapModel model = carnap_premise(arg_individuals, arg_granularity, table);
      Formula query = parse(arg_carnap_query, table);
      Formula premise = model.premise;
      if (!arg_carnap_given.empty())
        premise = Formula::conjunction(parse(arg_carnap_given, table), premise);
      detail::emit_probability(json_mode, plausibility(query, premise), out);
      return 0;
    }

    err << "usage error: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    err << "formula error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace plaus::cli
