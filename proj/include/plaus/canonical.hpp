#pragma once

// Constructive reduction of any (query, premise) pair to urn form: a fresh
// exactly-one premise over one symbol per model of the original premise,
// with the query becoming a disjunction over the query-satisfying models.
// The trace records every intermediate formula and re-derives the
// plausibility at each rewrite step, so the whole chain is checkable.
// Also: verification of explicit change-of-variables mappings, and the
// renaming / negation-swap transforms.

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "plaus/formula.hpp"
#include "plaus/plausibility.hpp"
#include "plaus/rational.hpp"
#include "plaus/semantics.hpp"

namespace plaus {

struct Checkpoint {
  std::string step;
  Formula query;
  Formula premise;
  Rational value;
};

struct ReductionTrace {
  Formula query;   // A
  Formula premise; // X, satisfiable
  SymbolSet base_symbols;

  std::uint64_t n = 0; // models of X on the base symbols
  std::uint64_t m = 0; // of which satisfy A

  std::vector<SymbolId> urn_symbols;   // fresh t_1..t_n
  std::vector<TruthAssignment> models; // rho_1..rho_n, query-satisfying first,
                                       // lexicographic within each block
  std::vector<Formula> model_formulas; // Z_i, satisfied exactly by rho_i
  Formula urn_definitions;             // conjunction of t_i <-> Z_i
  Formula source_definitions;          // conjunction of s_j <-> (disjunction of t_i with rho_i(s_j)=1)
  Formula canonical_query;             // t_1 | ... | t_m
  Formula canonical_premise;           // exactly-one over t_1..t_n

  Rational original_value;              // P(A|X)
  std::array<Checkpoint, 4> checkpoints; // equal values along the rewrite chain
};

struct ReductionOptions {
  std::uint64_t max_models = 4096; // trace construction enumerates models explicitly
  std::size_t max_base_symbols = 24;
  CountOptions count;
};

inline ReductionTrace reduce_to_urn(const Formula& query, const Formula& premise,
                                    SymbolTable& table, const ReductionOptions& opt = {}) {
  ReductionTrace trace;
  trace.query = query;
  trace.premise = premise;
  trace.base_symbols = symbols({query, premise});
  const SymbolSet& s = trace.base_symbols;
  std::size_t p = s.size();
  if (p > opt.max_base_symbols)
    throw std::invalid_argument("reduce_to_urn: too many symbols to enumerate models");

  // Enumerate models of the premise on S via truth-table masks, then order
  // them lexicographically (the mask bit order differs from lexicographic by
  // a bit reversal).
  Formula joint = Formula::conjunction(query, premise);
  std::unordered_map<SymbolId, unsigned> rank;
  {
    unsigned r = 0;
    for (SymbolId sym : s) rank.emplace(sym, r++);
  }
  std::size_t bits = std::size_t{1} << p;
  std::size_t words = p >= 6 ? (bits >> 6) : 1;
  std::vector<std::uint64_t> premise_mask, joint_mask;
  detail::truth_table_mask(premise, rank, words, premise_mask);
  detail::truth_table_mask(joint, rank, words, joint_mask);
  if (p < 6) {
    std::uint64_t trim = (bits >= 64) ? ~0ULL : ((std::uint64_t{1} << bits) - 1);
    premise_mask[0] &= trim;
    joint_mask[0] &= trim;
  }
  auto bit_reverse = [p](std::uint64_t b) {
    std::uint64_t idx = 0;
    for (std::size_t r = 0; r < p; ++r)
      if ((b >> r) & 1u) idx |= std::uint64_t{1} << (p - 1 - r);
    return idx;
  };
  std::vector<std::uint64_t> sat_query, sat_rest;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t word = premise_mask[w];
    while (word) {
      unsigned bit = std::countr_zero(word);
      word &= word - 1;
      std::uint64_t b = (std::uint64_t{w} << 6) | bit;
      std::uint64_t lex = bit_reverse(b);
      if ((joint_mask[w] >> bit) & 1u) sat_query.push_back(lex);
      else sat_rest.push_back(lex);
    }
  }
  std::sort(sat_query.begin(), sat_query.end());
  std::sort(sat_rest.begin(), sat_rest.end());
  trace.m = sat_query.size();
  trace.n = sat_query.size() + sat_rest.size();
  if (trace.n == 0) throw std::invalid_argument("reduce_to_urn: premise is unsatisfiable");
  if (trace.n > opt.max_models)
    throw std::invalid_argument("reduce_to_urn: model count exceeds the configured cap");

  for (std::uint64_t idx : sat_query) trace.models.push_back(TruthAssignment::from_index(s, idx));
  for (std::uint64_t idx : sat_rest) trace.models.push_back(TruthAssignment::from_index(s, idx));

  // Cross-check the enumeration against the counting engine.
  if (ModelCount(trace.n) != count_models(premise, s, opt.count) ||
      ModelCount(trace.m) != count_models(joint, s, opt.count))
    throw std::logic_error("reduce_to_urn: enumeration disagrees with count_models");

  trace.urn_symbols.reserve(trace.n);
  for (std::uint64_t i = 0; i < trace.n; ++i) trace.urn_symbols.push_back(table.fresh());

  // Z_i: the conjunction of literals pinning down model rho_i.
  trace.model_formulas.reserve(trace.n);
  for (const TruthAssignment& rho : trace.models) {
    std::vector<Formula> lits;
    lits.reserve(p);
    for (SymbolId sym : s) {
      Formula atom = Formula::symbol(sym);
      lits.push_back(rho.value(sym) ? atom : Formula::negation(std::move(atom)));
    }
    trace.model_formulas.push_back(conjoin_all(lits));
  }

  // D_t: each fresh symbol defined by its model formula.
  {
    std::vector<Formula> defs;
    defs.reserve(trace.n);
    for (std::uint64_t i = 0; i < trace.n; ++i)
      defs.push_back(
          Formula::equivalence(Formula::symbol(trace.urn_symbols[i]), trace.model_formulas[i]));
    trace.urn_definitions = conjoin_all(defs);
  }

  // D_s: each original symbol re-defined from the urn symbols of the models
  // in which it is true.
  {
    std::vector<Formula> defs;
    defs.reserve(p);
    for (SymbolId sym : s) {
      std::vector<Formula> hits;
      for (std::uint64_t i = 0; i < trace.n; ++i)
        if (trace.models[i].value(sym)) hits.push_back(Formula::symbol(trace.urn_symbols[i]));
      defs.push_back(Formula::equivalence(Formula::symbol(sym), disjoin_all(hits)));
    }
    trace.source_definitions = conjoin_all(defs);
  }

  {
    std::vector<Formula> first;
    first.reserve(trace.m);
    for (std::uint64_t i = 0; i < trace.m; ++i)
      first.push_back(Formula::symbol(trace.urn_symbols[i]));
    trace.canonical_query = disjoin_all(first);
  }
  trace.canonical_premise = exactly_one(trace.urn_symbols);

  // The rewrite chain, re-derived value by value.
  trace.original_value = plausibility(query, premise, opt.count).value;
  Formula with_urn_defs = Formula::conjunction(trace.urn_definitions, premise);
  Formula with_source_defs =
      Formula::conjunction(trace.source_definitions, trace.canonical_premise);
  trace.checkpoints = {
      Checkpoint{"introduce_urn_definitions", query, with_urn_defs,
                 plausibility(query, with_urn_defs, opt.count).value},
      Checkpoint{"rewrite_query", trace.canonical_query, with_urn_defs,
                 plausibility(trace.canonical_query, with_urn_defs, opt.count).value},
      Checkpoint{"rewrite_premise", trace.canonical_query, with_source_defs,
                 plausibility(trace.canonical_query, with_source_defs, opt.count).value},
      Checkpoint{"drop_source_definitions", trace.canonical_query, trace.canonical_premise,
                 plausibility(trace.canonical_query, trace.canonical_premise, opt.count).value},
  };
  Rational expected(trace.m, trace.n);
  for (const Checkpoint& c : trace.checkpoints)
    if (c.value != trace.original_value)
      throw std::logic_error("reduce_to_urn: checkpoint '" + c.step + "' diverges");
  if (trace.original_value != expected)
    throw std::logic_error("reduce_to_urn: value differs from m/n");
  return trace;
}

// ---------------------------------------------------------------------------
// Change of variables

/// An explicit finite pairing between the models of one pair's premise and
/// the models of another's. Left components must share one domain, right
/// components another.
struct CovMapping {
  std::vector<std::pair<TruthAssignment, TruthAssignment>> pairs;
};

/// True iff `f` is a bijection between the model sets of the two premises
/// that preserves membership in query-and-premise. When it is, the two
/// plausibilities are re-derived and must agree.
inline bool verify_change_of_variables(const std::pair<Formula, Formula>& pair1,
                                       const std::pair<Formula, Formula>& pair2,
                                       const CovMapping& f, const CountOptions& opt = {}) {
  if (f.pairs.empty())
    throw std::invalid_argument("verify_change_of_variables: empty mapping");
  const SymbolSet& dom_left = f.pairs.front().first.domain();
  const SymbolSet& dom_right = f.pairs.front().second.domain();
  for (const auto& [lhs, rhs] : f.pairs) {
    if (!(lhs.domain() == dom_left) || !(rhs.domain() == dom_right))
      throw std::invalid_argument("verify_change_of_variables: inconsistent mapping domains");
  }
  if (!symbols({pair1.first, pair1.second}).subset_of(dom_left) ||
      !symbols({pair2.first, pair2.second}).subset_of(dom_right))
    throw std::invalid_argument("verify_change_of_variables: mapping domain misses symbols");

  // Left components must exhaust the models of premise1 exactly once.
  auto exhausts = [&](const SymbolSet& dom, const Formula& premise, bool left) {
    std::vector<std::uint64_t> seen;
    for (const auto& pr : f.pairs) {
      const TruthAssignment& rho = left ? pr.first : pr.second;
      if (!evaluate(premise, rho)) return false;
      seen.push_back(rho.index());
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    return ModelCount(seen.size()) == count_models(premise, dom, opt);
  };
  if (!exhausts(dom_left, pair1.second, true)) return false;
  if (!exhausts(dom_right, pair2.second, false)) return false;

  Formula joint1 = Formula::conjunction(pair1.first, pair1.second);
  Formula joint2 = Formula::conjunction(pair2.first, pair2.second);
  for (const auto& [lhs, rhs] : f.pairs)
    if (evaluate(joint1, lhs) != evaluate(joint2, rhs)) return false;

  PlausibilityResult p1 = plausibility(pair1.first, pair1.second, opt);
  PlausibilityResult p2 = plausibility(pair2.first, pair2.second, opt);
  if (p1.value != p2.value)
    throw std::logic_error("verify_change_of_variables: verified mapping but unequal values");
  return true;
}

// ---------------------------------------------------------------------------
// Renaming transforms

/// Simultaneous symbol renaming; must be injective on the symbols of the
/// pair (unmapped symbols stay put).
struct PermuteSymbols {
  std::unordered_map<SymbolId, SymbolId> mapping;
};

/// Replace every occurrence of one symbol with its negation.
struct NegateSymbol {
  SymbolId symbol;
};

using RenameKind = std::variant<PermuteSymbols, NegateSymbol>;

inline std::pair<Formula, Formula> rename_transform(const Formula& query, const Formula& premise,
                                                    const RenameKind& kind) {
  SymbolSet used = symbols({query, premise});
  if (const auto* permute = std::get_if<PermuteSymbols>(&kind)) {
    std::unordered_map<SymbolId, Formula> subst;
    std::unordered_set<SymbolId> targets;
    for (SymbolId sym : used) {
      auto it = permute->mapping.find(sym);
      SymbolId target = it == permute->mapping.end() ? sym : it->second;
      if (!targets.insert(target).second)
        throw std::invalid_argument("rename_transform: mapping is not injective");
      if (target != sym) subst.emplace(sym, Formula::symbol(target));
    }
    return {substitute(query, subst), substitute(premise, subst)};
  }
  const auto& negate = std::get<NegateSymbol>(kind);
  if (!used.contains(negate.symbol))
    throw std::invalid_argument("rename_transform: symbol does not occur in the pair");
  std::unordered_map<SymbolId, Formula> subst{
      {negate.symbol, Formula::negation(Formula::symbol(negate.symbol))}};
  return {substitute(query, subst), substitute(premise, subst)};
}

} // namespace plaus
