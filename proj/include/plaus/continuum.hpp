#pragma once

// Finite approximation of probabilities over B^m x [0,1)^n. A region is a
// boolean combination of polynomial inequalities (plus boolean coordinates);
// the space is cut into g^n cells per boolean part and a cell-inclusion
// policy decides membership:
//
//   corner  evaluate lhs <= rhs at the cell's scaled lattice corner
//           (i_1/g, ..., i_n/g); strict and non-strict atoms are treated
//           alike, matching the classical lattice-counting rule
//   inner   include only cells certainly inside (interval arithmetic)
//   outer   include every cell possibly inside
//
// The same cell classification also drives two propositional encodings
// (one symbol per axis index, and interleaved dyadic bits), whose counting
// ratio must reproduce the cell ratio exactly. All arithmetic is exact.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plaus/formula.hpp"
#include "plaus/plausibility.hpp"
#include "plaus/rational.hpp"
#include "plaus/semantics.hpp"

namespace plaus {

struct Monomial {
  Rational coefficient;
  std::vector<unsigned> exponents; // one per continuous axis
};

struct Polynomial {
  std::vector<Monomial> terms;
};

struct Predicate {
  enum class Kind { And, Or, Not, Lt, Le, BoolVar };
  Kind kind = Kind::And;
  std::vector<Predicate> children; // And/Or: >= 1, Not: exactly 1
  Polynomial lhs, rhs;             // Lt/Le
  unsigned bool_index = 0;         // BoolVar (0-based)
};

struct RegionSpec {
  unsigned bool_dims = 0;
  unsigned cont_dims = 0;
  Predicate predicate;
};

struct RegionPair {
  RegionSpec query;
  RegionSpec premise;
};

enum class CellPolicy { Corner, Inner, Outer };

inline CellPolicy parse_cell_policy(const std::string& name) {
  if (name == "corner") return CellPolicy::Corner;
  if (name == "inner") return CellPolicy::Inner;
  if (name == "outer") return CellPolicy::Outer;
  throw std::invalid_argument("unknown cell policy '" + name + "'");
}

class EmptyPremiseRegion : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class RegionFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// A polynomial inequality lhs ? rhs, pre-scaled so that evaluation at
// lattice points i/g (and at cell corners (i-1)/g, i/g) is pure integer
// arithmetic: sign of sum_t C_t * g^(maxdeg - deg_t) * prod_a v_a^(e_a).
struct ScaledAtom {
  bool strict = false;
  std::vector<BigInt> coeffs;                   // C_t, denominators cleared
  std::vector<std::vector<unsigned>> exponents; // per term, per axis
  std::vector<unsigned> degree;                 // total degree per term
  unsigned max_degree = 0;
};

inline ScaledAtom scale_atom(const Polynomial& lhs, const Polynomial& rhs, bool strict,
                             unsigned cont_dims) {
  ScaledAtom atom;
  atom.strict = strict;
  auto add_terms = [&atom, cont_dims](const Polynomial& p, int sign) {
    for (const Monomial& t : p.terms) {
      if (t.exponents.size() != cont_dims)
        throw RegionFormatError("polynomial exponent vector has wrong length");
      atom.exponents.push_back(t.exponents);
      unsigned deg = 0;
      for (unsigned e : t.exponents) deg += e;
      atom.degree.push_back(deg);
      atom.max_degree = std::max(atom.max_degree, deg);
      atom.coeffs.push_back(sign > 0 ? BigInt(numerator(t.coefficient))
                                     : BigInt(-numerator(t.coefficient)));
      // denominators handled below once the lcm is known; stash them
    }
  };
  // Clear denominators: multiply every term by lcm of all denominators.
  BigInt lcm = 1;
  for (const Polynomial* p : {&lhs, &rhs})
    for (const Monomial& t : p->terms)
      lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(t.coefficient)));
  add_terms(lhs, +1);
  add_terms(rhs, -1);
  std::size_t idx = 0;
  for (const Polynomial* p : {&lhs, &rhs})
    for (const Monomial& t : p->terms)
      atom.coeffs[idx++] *= lcm / BigInt(denominator(t.coefficient));
  return atom;
}

// Predicate compiled against a fixed resolution g: atoms pre-scaled and
// keyed by node, with power tables shared across cells.
struct CompiledRegion {
  std::vector<ScaledAtom> atoms;
  std::unordered_map<const Predicate*, std::size_t> atom_index;
};

inline void collect_atoms(const Predicate& p, CompiledRegion& out, unsigned cont_dims) {
  switch (p.kind) {
    case Predicate::Kind::Lt:
    case Predicate::Kind::Le:
      out.atom_index.emplace(&p, out.atoms.size());
      out.atoms.push_back(scale_atom(p.lhs, p.rhs, p.kind == Predicate::Kind::Lt, cont_dims));
      return;
    case Predicate::Kind::BoolVar:
      return;
    case Predicate::Kind::Not:
      collect_atoms(p.children.at(0), out, cont_dims);
      return;
    default:
      for (const Predicate& c : p.children) collect_atoms(c, out, cont_dims);
      return;
  }
}

// Shared evaluation context for one resolution.
class CellGrid {
public:
  CellGrid(const RegionSpec& spec, unsigned g) : spec_(spec), g_(g) {
    if (g == 0) throw std::invalid_argument("grid resolution must be positive");
    collect_atoms(spec.predicate, compiled_, spec.cont_dims);
    unsigned maxdeg = 0;
    for (const ScaledAtom& a : compiled_.atoms) maxdeg = std::max(maxdeg, a.max_degree);
    powers_.resize(g + 1);
    for (unsigned v = 0; v <= g; ++v) {
      powers_[v].resize(maxdeg + 1);
      powers_[v][0] = 1;
      for (unsigned e = 1; e <= maxdeg; ++e) powers_[v][e] = powers_[v][e - 1] * v;
    }
    gpow_.resize(maxdeg + 1);
    gpow_[0] = 1;
    for (unsigned e = 1; e <= maxdeg; ++e) gpow_[e] = gpow_[e - 1] * g;
  }

  /// Cell given by 1-based lattice indices and boolean part bits.
  bool contains(std::span<const unsigned> cell, std::uint64_t bool_part,
                CellPolicy policy) const {
    if (policy == CellPolicy::Corner) return eval_corner(spec_.predicate, cell, bool_part);
    Tri t = eval_interval(spec_.predicate, cell, bool_part);
    return policy == CellPolicy::Inner ? t == Tri::True : t != Tri::False;
  }

private:
  enum class Tri { False, Unknown, True };

  BigInt atom_value_at(const ScaledAtom& a, std::span<const unsigned> corner) const {
    BigInt sum = 0;
    for (std::size_t t = 0; t < a.coeffs.size(); ++t) {
      BigInt term = a.coeffs[t] * gpow_[a.max_degree - a.degree[t]];
      for (unsigned axis = 0; axis < corner.size(); ++axis) {
        unsigned e = a.exponents[t][axis];
        if (e) term *= powers_[corner[axis]][e];
      }
      sum += term;
    }
    return sum;
  }

  bool eval_corner(const Predicate& p, std::span<const unsigned> cell,
                   std::uint64_t bool_part) const {
    switch (p.kind) {
      case Predicate::Kind::And: {
        for (const Predicate& c : p.children)
          if (!eval_corner(c, cell, bool_part)) return false;
        return true;
      }
      case Predicate::Kind::Or: {
        for (const Predicate& c : p.children)
          if (eval_corner(c, cell, bool_part)) return true;
        return false;
      }
      case Predicate::Kind::Not:
        return !eval_corner(p.children[0], cell, bool_part);
      case Predicate::Kind::BoolVar:
        return (bool_part >> p.bool_index) & 1u;
      default: {
        const ScaledAtom& a = compiled_.atoms[compiled_.atom_index.at(&p)];
        // Lattice rule: closed comparison at the corner for both < and <=.
        return atom_value_at(a, cell) <= 0;
      }
    }
  }

  Tri eval_interval(const Predicate& p, std::span<const unsigned> cell,
                    std::uint64_t bool_part) const {
    switch (p.kind) {
      case Predicate::Kind::And: {
        Tri acc = Tri::True;
        for (const Predicate& c : p.children) {
          Tri t = eval_interval(c, cell, bool_part);
          if (t == Tri::False) acc = Tri::False;
          else if (t == Tri::Unknown && acc != Tri::False) acc = Tri::Unknown;
        }
        return acc;
      }
      case Predicate::Kind::Or: {
        Tri acc = Tri::False;
        for (const Predicate& c : p.children) {
          Tri t = eval_interval(c, cell, bool_part);
          if (t == Tri::True) acc = Tri::True;
          else if (t == Tri::Unknown && acc != Tri::True) acc = Tri::Unknown;
        }
        return acc;
      }
      case Predicate::Kind::Not: {
        Tri t = eval_interval(p.children[0], cell, bool_part);
        if (t == Tri::True) return Tri::False;
        if (t == Tri::False) return Tri::True;
        return Tri::Unknown;
      }
      case Predicate::Kind::BoolVar:
        return ((bool_part >> p.bool_index) & 1u) ? Tri::True : Tri::False;
      default: {
        const ScaledAtom& a = compiled_.atoms[compiled_.atom_index.at(&p)];
        // Interval of the scaled difference over the closed cell box
        // [(i-1)/g, i/g]^n; coordinates are non-negative, so monomials are
        // monotone in each axis.
        BigInt lo = 0, hi = 0;
        for (std::size_t t = 0; t < a.coeffs.size(); ++t) {
          BigInt base = a.coeffs[t] * gpow_[a.max_degree - a.degree[t]];
          BigInt at_lo = base, at_hi = base;
          for (unsigned axis = 0; axis < cell.size(); ++axis) {
            unsigned e = a.exponents[t][axis];
            if (!e) continue;
            at_lo *= powers_[cell[axis] - 1][e];
            at_hi *= powers_[cell[axis]][e];
          }
          if (a.coeffs[t] >= 0) { lo += at_lo; hi += at_hi; }
          else { lo += at_hi; hi += at_lo; }
        }
        if (a.strict ? hi < 0 : hi <= 0) return Tri::True;
        if (a.strict ? lo >= 0 : lo > 0) return Tri::False;
        return Tri::Unknown;
      }
    }
  }

  const RegionSpec& spec_;
  unsigned g_;
  CompiledRegion compiled_;
  std::vector<std::vector<BigInt>> powers_; // powers_[v][e] = v^e
  std::vector<BigInt> gpow_;
};

// Iterates all cells of the discretized space: boolean parts outermost
// (ascending), lattice indices lexicographic with the last axis fastest.
template <typename F>
void for_each_cell(unsigned bool_dims, unsigned cont_dims, unsigned g, F&& body) {
  std::uint64_t bool_parts = std::uint64_t{1} << bool_dims;
  std::vector<unsigned> cell(cont_dims, 1);
  for (std::uint64_t b = 0; b < bool_parts; ++b) {
    std::fill(cell.begin(), cell.end(), 1u);
    for (;;) {
      body(b, std::span<const unsigned>(cell));
      int axis = static_cast<int>(cont_dims) - 1;
      while (axis >= 0) {
        if (++cell[axis] <= g) break;
        cell[axis] = 1;
        --axis;
      }
      if (axis < 0) break;
    }
  }
}

inline void validate_pair(const RegionPair& pair) {
  if (pair.query.bool_dims != pair.premise.bool_dims ||
      pair.query.cont_dims != pair.premise.cont_dims)
    throw std::invalid_argument("query and premise regions have different dimensions");
  if (pair.premise.bool_dims > 16)
    throw std::invalid_argument("too many boolean coordinates");
}

} // namespace detail

struct GridResult {
  BigInt premise_cells;
  BigInt joint_cells;
  Rational value;
};

/// |K & L| / |L| at resolution g, counting cells directly under the policy.
inline GridResult grid_probability(const RegionPair& pair, unsigned g,
                                   CellPolicy policy = CellPolicy::Corner) {
  detail::validate_pair(pair);
  detail::CellGrid query_grid(pair.query, g);
  detail::CellGrid premise_grid(pair.premise, g);
  BigInt in_premise = 0, in_both = 0;
  detail::for_each_cell(pair.premise.bool_dims, pair.premise.cont_dims, g,
                        [&](std::uint64_t b, std::span<const unsigned> cell) {
                          if (!premise_grid.contains(cell, b, policy)) return;
                          ++in_premise;
                          if (query_grid.contains(cell, b, policy)) ++in_both;
                        });
  if (in_premise == 0)
    throw EmptyPremiseRegion("premise region has no cells at resolution " + std::to_string(g));
  return {in_premise, in_both, Rational(in_both, in_premise)};
}

// ---------------------------------------------------------------------------
// Propositional encodings

struct EncodedPair {
  Formula query;
  Formula premise;
  std::vector<SymbolId> symbols_used;
};

/// One-hot encoding: per continuous axis a block of g indicator symbols, one
/// per lattice index, plus one symbol per boolean coordinate. The premise
/// conjoins an exactly-one constraint per axis block so that models
/// correspond one-to-one with premise cells; without it the disjunction
/// alone admits spurious models and the counting ratio detaches from the
/// cell ratio.
inline EncodedPair emit_onehot_formulas(const RegionPair& pair, unsigned g, SymbolTable& table,
                                        CellPolicy policy = CellPolicy::Corner,
                                        unsigned symbol_budget = 16) {
  detail::validate_pair(pair);
  unsigned m = pair.premise.bool_dims, n = pair.premise.cont_dims;
  if (n > 8) throw std::invalid_argument("one-hot encoding supports at most 8 axes");
  unsigned total_symbols = m + n * g;
  if (total_symbols > symbol_budget)
    throw std::invalid_argument("one-hot encoding needs " + std::to_string(total_symbols) +
                                " symbols, over the budget of " + std::to_string(symbol_budget));

  EncodedPair out;
  std::vector<SymbolId> bool_syms;
  for (unsigned i = 1; i <= m; ++i) bool_syms.push_back(table.intern("u" + std::to_string(i)));
  std::vector<std::vector<SymbolId>> axis_syms(n);
  for (unsigned a = 0; a < n; ++a) {
    char letter = static_cast<char>('a' + a);
    for (unsigned i = 1; i <= g; ++i)
      axis_syms[a].push_back(table.intern(std::string(1, letter) + std::to_string(i)));
  }
  out.symbols_used = bool_syms;
  for (const auto& block : axis_syms)
    out.symbols_used.insert(out.symbols_used.end(), block.begin(), block.end());

  auto cell_formula = [&](std::uint64_t b, std::span<const unsigned> cell) {
    std::vector<Formula> lits;
    for (unsigned i = 0; i < m; ++i) {
      Formula atom = Formula::symbol(bool_syms[i]);
      lits.push_back(((b >> i) & 1u) ? atom : Formula::negation(std::move(atom)));
    }
    for (unsigned a = 0; a < n; ++a) lits.push_back(Formula::symbol(axis_syms[a][cell[a] - 1]));
    return conjoin_all(lits);
  };

  detail::CellGrid query_grid(pair.query, g);
  detail::CellGrid premise_grid(pair.premise, g);
  std::vector<Formula> query_cells, premise_cells;
  detail::for_each_cell(m, n, g, [&](std::uint64_t b, std::span<const unsigned> cell) {
    bool in_premise = premise_grid.contains(cell, b, policy);
    bool in_query = query_grid.contains(cell, b, policy);
    if (in_query) query_cells.push_back(cell_formula(b, cell));
    if (in_premise) premise_cells.push_back(cell_formula(b, cell));
  });
  if (premise_cells.empty())
    throw EmptyPremiseRegion("premise region has no cells at resolution " + std::to_string(g));

  out.query = disjoin_all(query_cells);
  std::vector<Formula> premise_parts{disjoin_all(premise_cells)};
  for (unsigned a = 0; a < n; ++a) premise_parts.push_back(exactly_one(axis_syms[a]));
  out.premise = conjoin_all(premise_parts);
  return out;
}

/// Index of the bit-i (1-based, most significant first) symbol of axis j
/// (1-based) among the interleaved continuous-coordinate symbols.
inline unsigned dyadic_interleave(unsigned bit, unsigned axis, unsigned cont_dims) {
  return axis + (bit - 1) * cont_dims;
}

/// Dyadic encoding at resolution g = 2^k: symbol s_{m+interleave(i,j)} holds
/// the i-th binary digit of axis j, so every assignment of the m + n*k
/// symbols is exactly one cell and no structural constraint is needed.
inline EncodedPair emit_dyadic_formulas(const RegionPair& pair, unsigned k, SymbolTable& table,
                                        CellPolicy policy = CellPolicy::Corner,
                                        unsigned symbol_budget = 16) {
  detail::validate_pair(pair);
  if (k == 0) throw std::invalid_argument("dyadic encoding needs k >= 1 bits per axis");
  unsigned m = pair.premise.bool_dims, n = pair.premise.cont_dims;
  unsigned total_symbols = m + n * k;
  if (total_symbols > symbol_budget)
    throw std::invalid_argument("dyadic encoding needs " + std::to_string(total_symbols) +
                                " symbols, over the budget of " + std::to_string(symbol_budget));
  unsigned g = 1u << k;

  EncodedPair out;
  std::vector<SymbolId> syms;
  for (unsigned i = 1; i <= total_symbols; ++i)
    syms.push_back(table.intern("s" + std::to_string(i)));
  out.symbols_used = syms;

  auto cell_formula = [&](std::uint64_t b, std::span<const unsigned> cell) {
    std::vector<Formula> lits;
    for (unsigned i = 0; i < m; ++i) {
      Formula atom = Formula::symbol(syms[i]);
      lits.push_back(((b >> i) & 1u) ? atom : Formula::negation(std::move(atom)));
    }
    // Continuous-coordinate bits in ascending global symbol order.
    for (unsigned pos = m + 1; pos <= total_symbols; ++pos) {
      unsigned offset = pos - m - 1;
      unsigned bit = offset / n + 1;  // 1-based, MSB first
      unsigned axis = offset % n;     // 0-based here
      unsigned c = cell[axis] - 1;    // cell index 0..g-1
      bool set = (c >> (k - bit)) & 1u;
      Formula atom = Formula::symbol(syms[pos - 1]);
      lits.push_back(set ? atom : Formula::negation(std::move(atom)));
    }
    return conjoin_all(lits);
  };

  detail::CellGrid query_grid(pair.query, g);
  detail::CellGrid premise_grid(pair.premise, g);
  std::vector<Formula> query_cells, premise_cells;
  detail::for_each_cell(m, n, g, [&](std::uint64_t b, std::span<const unsigned> cell) {
    if (query_grid.contains(cell, b, policy)) query_cells.push_back(cell_formula(b, cell));
    if (premise_grid.contains(cell, b, policy)) premise_cells.push_back(cell_formula(b, cell));
  });
  if (premise_cells.empty())
    throw EmptyPremiseRegion("premise region has no cells at resolution " +
                             std::to_string(g));
  out.query = disjoin_all(query_cells);
  out.premise = disjoin_all(premise_cells);
  return out;
}

// ---------------------------------------------------------------------------
// Convergence study

struct ConvergenceRow {
  unsigned resolution = 0;
  std::optional<Rational> value;
  std::optional<Rational> abs_error; // only when a reference is given
  std::string message;               // set when the row failed
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  std::optional<Rational> reference;
};

/// Runs grid_probability over an increasing resolution schedule. Rows where
/// the premise region vanishes are reported, not fatal. No extrapolation:
/// the report is just the observed sequence.
inline ConvergenceReport converge(const RegionPair& pair, std::span<const unsigned> schedule,
                                  std::optional<Rational> reference = std::nullopt,
                                  CellPolicy policy = CellPolicy::Corner) {
  for (std::size_t i = 0; i + 1 < schedule.size(); ++i)
    if (schedule[i] >= schedule[i + 1])
      throw std::invalid_argument("converge: schedule must be strictly increasing");
  ConvergenceReport report;
  report.reference = reference;
  for (unsigned g : schedule) {
    ConvergenceRow row;
    row.resolution = g;
    try {
      GridResult result = grid_probability(pair, g, policy);
      row.value = result.value;
      if (reference) row.abs_error = abs_difference(result.value, *reference);
    } catch (const EmptyPremiseRegion& e) {
      row.message = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Latent-variable premise (a finite propositional rendering of a uniform
// prior over a bias parameter with conditionally independent observables)

struct CarnapModel {
  unsigned individuals = 0; // I
  unsigned granularity = 0; // K
  std::vector<SymbolId> observables;            // x_1..x_I
  std::vector<SymbolId> bias_levels;            // h_0..h_K
  std::vector<std::vector<SymbolId>> states;    // s_{i,1}..s_{i,K} per individual
  Formula premise;                              // (K^2+K+1)I + 1 conjuncts
};

inline CarnapModel carnap_premise(unsigned individuals, unsigned granularity, SymbolTable& table,
                                  unsigned symbol_budget = 24) {
  if (individuals < 1 || granularity < 1)
    throw std::invalid_argument("carnap_premise: need I >= 1 and K >= 1");
  unsigned total = individuals + (granularity + 1) + individuals * granularity;
  if (total > symbol_budget)
    throw std::invalid_argument("carnap_premise: needs " + std::to_string(total) +
                                " symbols, over the budget of " + std::to_string(symbol_budget));
  CarnapModel model;
  model.individuals = individuals;
  model.granularity = granularity;
  for (unsigned i = 1; i <= individuals; ++i)
    model.observables.push_back(table.intern("x" + std::to_string(i)));
  for (unsigned k = 0; k <= granularity; ++k)
    model.bias_levels.push_back(table.intern("h" + std::to_string(k)));
  model.states.resize(individuals);
  for (unsigned i = 1; i <= individuals; ++i)
    for (unsigned j = 1; j <= granularity; ++j)
      model.states[i - 1].push_back(
          table.intern("s" + std::to_string(i) + "_" + std::to_string(j)));

  std::vector<Formula> parts;
  parts.push_back(exactly_one(model.bias_levels));
  for (unsigned i = 0; i < individuals; ++i) parts.push_back(exactly_one(model.states[i]));
  // Level k makes each observable true in exactly k of its K states.
  for (unsigned i = 0; i < individuals; ++i)
    for (unsigned j = 1; j <= granularity; ++j)
      for (unsigned k = 0; k <= granularity; ++k) {
        Formula antecedent = Formula::conjunction(Formula::symbol(model.bias_levels[k]),
                                                  Formula::symbol(model.states[i][j - 1]));
        Formula observable = Formula::symbol(model.observables[i]);
        Formula consequent =
            (j <= k) ? observable : Formula::negation(std::move(observable));
        parts.push_back(Formula::implication(std::move(antecedent), std::move(consequent)));
      }
  model.premise = conjoin_all(parts);
  return model;
}

// ---------------------------------------------------------------------------
// JSON region format
//
//   {"m": 0, "n": 2, "query": PRED, "premise": PRED}
//   PRED: {"op":"and","args":[...]} | {"op":"or","args":[...]}
//       | {"op":"not","arg":PRED} | {"op":"bvar","index":0}
//       | {"op":"lt","lhs":POLY,"rhs":POLY} | {"op":"le","lhs":POLY,"rhs":POLY}
//   POLY: [["coefficient", [e_1,...,e_n]], ...]  (rational coefficients as strings)

namespace detail {

inline Polynomial polynomial_from_json(const nlohmann::json& j, unsigned cont_dims) {
  if (!j.is_array()) throw RegionFormatError("polynomial must be an array of terms");
  Polynomial poly;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw RegionFormatError("polynomial term must be [coefficient, exponents]");
    Monomial mono;
    mono.coefficient = parse_rational(term[0].get<std::string>());
    for (const auto& e : term[1]) mono.exponents.push_back(e.get<unsigned>());
    if (mono.exponents.size() != cont_dims)
      throw RegionFormatError("exponent vector length must equal n");
    poly.terms.push_back(std::move(mono));
  }
  return poly;
}

inline Predicate predicate_from_json(const nlohmann::json& j, unsigned bool_dims,
                                     unsigned cont_dims) {
  if (!j.is_object() || !j.contains("op"))
    throw RegionFormatError("predicate node must be an object with an \"op\"");
  std::string op = j.at("op").get<std::string>();
  Predicate p;
  if (op == "and" || op == "or") {
    p.kind = op == "and" ? Predicate::Kind::And : Predicate::Kind::Or;
    const auto& args = j.at("args");
    if (!args.is_array() || args.empty())
      throw RegionFormatError("\"" + op + "\" needs a non-empty args array");
    for (const auto& a : args) p.children.push_back(predicate_from_json(a, bool_dims, cont_dims));
    return p;
  }
  if (op == "not") {
    p.kind = Predicate::Kind::Not;
    p.children.push_back(predicate_from_json(j.at("arg"), bool_dims, cont_dims));
    return p;
  }
  if (op == "bvar") {
    p.kind = Predicate::Kind::BoolVar;
    p.bool_index = j.at("index").get<unsigned>();
    if (p.bool_index >= bool_dims) throw RegionFormatError("bvar index out of range");
    return p;
  }
  if (op == "lt" || op == "le") {
    p.kind = op == "lt" ? Predicate::Kind::Lt : Predicate::Kind::Le;
    p.lhs = polynomial_from_json(j.at("lhs"), cont_dims);
    p.rhs = polynomial_from_json(j.at("rhs"), cont_dims);
    return p;
  }
  throw RegionFormatError("unknown predicate op '" + op + "'");
}

} // namespace detail

inline RegionPair region_pair_from_json(const nlohmann::json& j) {
  try {
    unsigned m = j.at("m").get<unsigned>();
    unsigned n = j.at("n").get<unsigned>();
    RegionPair pair;
    pair.query = {m, n, detail::predicate_from_json(j.at("query"), m, n)};
    pair.premise = {m, n, detail::predicate_from_json(j.at("premise"), m, n)};
    return pair;
  } catch (const nlohmann::json::exception& e) {
    throw RegionFormatError(std::string("malformed region file: ") + e.what());
  }
}

} // namespace plaus
