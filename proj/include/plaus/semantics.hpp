#pragma once

// Truth-assignment semantics and exact model counting. The counter is the
// load-bearing piece: everything downstream (plausibilities, entailment, the
// canonical reduction, the requirement suites) reduces to #S(F). The contract
// is exactness and determinism; the algorithm below is a splitting search
// with unit propagation, connected-component decomposition and memoization,
// falling back to word-parallel truth-table enumeration on small symbol sets.

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "plaus/formula.hpp"

namespace plaus {

using ModelCount = boost::multiprecision::cpp_int;

/// Total map from a finite symbol domain to {0,1}.
class TruthAssignment {
public:
  TruthAssignment(SymbolSet domain, std::vector<bool> bits)
      : domain_(std::move(domain)), bits_(std::move(bits)) {
    if (domain_.size() != bits_.size())
      throw std::invalid_argument("TruthAssignment: domain/bits size mismatch");
  }

  /// Assignment number `index` in lexicographic order: reading the bits of
  /// the symbols in ascending id order gives the binary digits of `index`,
  /// most significant first.
  static TruthAssignment from_index(const SymbolSet& domain, std::uint64_t index) {
    std::size_t p = domain.size();
    if (p > 63) throw std::invalid_argument("TruthAssignment::from_index: domain too large");
    std::vector<bool> bits(p);
    for (std::size_t k = 0; k < p; ++k) bits[k] = (index >> (p - 1 - k)) & 1u;
    return TruthAssignment(domain, std::move(bits));
  }

  std::uint64_t index() const {
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < bits_.size(); ++k) idx = (idx << 1) | (bits_[k] ? 1u : 0u);
    return idx;
  }

  const SymbolSet& domain() const { return domain_; }

  bool value(SymbolId id) const {
    const auto& ids = domain_.ids();
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id)
      throw std::invalid_argument("TruthAssignment: symbol outside domain");
    return bits_[static_cast<std::size_t>(it - ids.begin())];
  }

  TruthAssignment restrict_to(const SymbolSet& sub) const {
    if (!sub.subset_of(domain_))
      throw std::invalid_argument("TruthAssignment: restriction beyond domain");
    std::vector<bool> bits;
    bits.reserve(sub.size());
    for (SymbolId id : sub) bits.push_back(value(id));
    return TruthAssignment(sub, std::move(bits));
  }

  friend bool operator==(const TruthAssignment& a, const TruthAssignment& b) {
    return a.domain_ == b.domain_ && a.bits_ == b.bits_;
  }

private:
  SymbolSet domain_;
  std::vector<bool> bits_;
};

/// rho[[f]] under the recursive evaluation rules; the sugar connectives
/// evaluate per their definitions in terms of ! and &.
inline bool evaluate(const Formula& f, const TruthAssignment& rho) {
  switch (f.kind()) {
    case Connective::Symbol: return rho.value(f.symbol_id());
    case Connective::True: return true;
    case Connective::False: return false;
    case Connective::Not: return !evaluate(f.left(), rho);
    case Connective::And: return evaluate(f.left(), rho) && evaluate(f.right(), rho);
    case Connective::Or: return evaluate(f.left(), rho) || evaluate(f.right(), rho);
    case Connective::Implies: return !evaluate(f.left(), rho) || evaluate(f.right(), rho);
    case Connective::Iff: return evaluate(f.left(), rho) == evaluate(f.right(), rho);
  }
  throw std::logic_error("evaluate: unreachable");
}

struct CountOptions {
  // Residual problems with at most this many symbols are counted by
  // truth-table enumeration instead of further splitting.
  std::size_t enum_threshold = 20;
};

namespace detail {

// --- conditioning --------------------------------------------------------

using Valuation = std::unordered_map<SymbolId, bool>;

/// Partial evaluation: fixes the symbols in `vals` and folds constants.
inline Formula condition(const Formula& f, const Valuation& vals) {
  switch (f.kind()) {
    case Connective::True:
    case Connective::False:
      return f;
    case Connective::Symbol: {
      auto it = vals.find(f.symbol_id());
      if (it == vals.end()) return f;
      return it->second ? Formula::verum() : Formula::falsum();
    }
    case Connective::Not: {
      Formula c = condition(f.left(), vals);
      if (c.kind() == Connective::True) return Formula::falsum();
      if (c.kind() == Connective::False) return Formula::verum();
      if (c.identity() == f.left().identity()) return f;
      return Formula::negation(std::move(c));
    }
    default: {
      Formula l = condition(f.left(), vals);
      Formula r = condition(f.right(), vals);
      bool lt = l.kind() == Connective::True, lf = l.kind() == Connective::False;
      bool rt = r.kind() == Connective::True, rf = r.kind() == Connective::False;
      switch (f.kind()) {
        case Connective::And:
          if (lf || rf) return Formula::falsum();
          if (lt) return r;
          if (rt) return l;
          break;
        case Connective::Or:
          if (lt || rt) return Formula::verum();
          if (lf) return r;
          if (rf) return l;
          break;
        case Connective::Implies:
          if (lf || rt) return Formula::verum();
          if (lt) return r;
          if (rf) return Formula::negation(std::move(l));
          break;
        case Connective::Iff:
          if (lt) return r;
          if (rt) return l;
          if (lf) return r.kind() == Connective::Not ? r.left() : Formula::negation(std::move(r));
          if (rf) return l.kind() == Connective::Not ? l.left() : Formula::negation(std::move(l));
          break;
        default: throw std::logic_error("condition: unreachable");
      }
      if (l.identity() == f.left().identity() && r.identity() == f.right().identity()) return f;
      switch (f.kind()) {
        case Connective::And: return Formula::conjunction(std::move(l), std::move(r));
        case Connective::Or: return Formula::disjunction(std::move(l), std::move(r));
        case Connective::Implies: return Formula::implication(std::move(l), std::move(r));
        case Connective::Iff: return Formula::equivalence(std::move(l), std::move(r));
        default: throw std::logic_error("condition: unreachable");
      }
    }
  }
}

// --- truth-table counting -------------------------------------------------

// Evaluates `f` simultaneously over all 2^t assignments of the symbols in
// `rank` (symbol -> bit position), as a bitset of satisfying assignment
// indices packed into 64-bit words. Assignment index b assigns to the symbol
// of rank r the bit (b >> r) & 1.
inline void truth_table_mask(const Formula& f, const std::unordered_map<SymbolId, unsigned>& rank,
                             std::size_t words, std::vector<std::uint64_t>& out) {
  static constexpr std::uint64_t kVarPattern[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  out.assign(words, 0);
  switch (f.kind()) {
    case Connective::True:
      out.assign(words, ~0ULL);
      return;
    case Connective::False:
      return;
    case Connective::Symbol: {
      unsigned r = rank.at(f.symbol_id());
      if (r < 6) {
        out.assign(words, kVarPattern[r]);
      } else {
        for (std::size_t w = 0; w < words; ++w)
          out[w] = ((w >> (r - 6)) & 1u) ? ~0ULL : 0ULL;
      }
      return;
    }
    case Connective::Not: {
      truth_table_mask(f.left(), rank, words, out);
      for (auto& w : out) w = ~w;
      return;
    }
    default: {
      std::vector<std::uint64_t> rhs;
      truth_table_mask(f.left(), rank, words, out);
      truth_table_mask(f.right(), rank, words, rhs);
      switch (f.kind()) {
        case Connective::And: for (std::size_t w = 0; w < words; ++w) out[w] &= rhs[w]; return;
        case Connective::Or: for (std::size_t w = 0; w < words; ++w) out[w] |= rhs[w]; return;
        case Connective::Implies:
          for (std::size_t w = 0; w < words; ++w) out[w] = ~out[w] | rhs[w];
          return;
        case Connective::Iff:
          for (std::size_t w = 0; w < words; ++w) out[w] = ~(out[w] ^ rhs[w]);
          return;
        default: throw std::logic_error("truth_table_mask: unreachable");
      }
    }
  }
}

// --- splitting counter ----------------------------------------------------

// The working form is a list of conjuncts (the flattened top-level And
// spine) plus the per-conjunct symbol sets, so that conditioning a symbol
// leaves untouched conjuncts shared by pointer.
struct Conjuncts {
  std::vector<Formula> parts;
  std::vector<SymbolSet> part_syms;
};

// Flattens the top-level And spine into conjuncts, left to right, dropping
// `true`. Iterative: spines can be very long.
inline void flatten_and_spine(const Formula& f, std::vector<Formula>& out) {
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* cur = stack.back();
    stack.pop_back();
    if (cur->kind() == Connective::And) {
      stack.push_back(&cur->right());
      stack.push_back(&cur->left());
    } else if (cur->kind() != Connective::True) {
      out.push_back(*cur);
    }
  }
}

struct ConjKey {
  std::vector<Formula> parts; // sorted canonically
  std::size_t hash = 0;
};

struct ConjKeyHash {
  std::size_t operator()(const ConjKey& k) const noexcept { return k.hash; }
};
struct ConjKeyEq {
  bool operator()(const ConjKey& a, const ConjKey& b) const {
    if (a.hash != b.hash || a.parts.size() != b.parts.size()) return false;
    for (std::size_t i = 0; i < a.parts.size(); ++i)
      if (a.parts[i] != b.parts[i]) return false;
    return true;
  }
};

// Total structural order used to canonicalize memo keys (hash first, then a
// lexicographic walk to break ties).
inline int structural_compare(const Formula& a, const Formula& b) {
  if (a.identity() == b.identity()) return 0;
  if (a.hash() != b.hash()) return a.hash() < b.hash() ? -1 : 1;
  std::vector<std::pair<const Formula*, const Formula*>> stack{{&a, &b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x->identity() == y->identity()) continue;
    if (x->kind() != y->kind())
      return static_cast<int>(x->kind()) < static_cast<int>(y->kind()) ? -1 : 1;
    if (x->kind() == Connective::Symbol) {
      if (x->symbol_id() != y->symbol_id()) return x->symbol_id() < y->symbol_id() ? -1 : 1;
      continue;
    }
    if (x->kind() == Connective::Not) {
      stack.emplace_back(&x->left(), &y->left());
      continue;
    }
    if (x->kind() == Connective::True || x->kind() == Connective::False) continue;
    stack.emplace_back(&x->right(), &y->right());
    stack.emplace_back(&x->left(), &y->left());
  }
  return 0;
}

class Counter {
public:
  explicit Counter(const CountOptions& opt) : opt_(opt) {}

  // Count over exactly the union of free symbols of the conjuncts. Every
  // transformation that shrinks that union beyond the symbols it actually
  // fixes must credit a factor of 2 per symbol left unconstrained.
  ModelCount count(Conjuncts cs) {
    std::size_t free_factor_exp = 0; // unconstrained symbols dropped so far

    // 1. Unit propagation until fixpoint.
    for (;;) {
      Valuation units;
      bool contradiction = false;
      for (const Formula& c : cs.parts) {
        if (c.kind() == Connective::False) return 0;
        SymbolId s;
        bool val;
        if (c.kind() == Connective::Symbol) {
          s = c.symbol_id();
          val = true;
        } else if (c.kind() == Connective::Not && c.left().kind() == Connective::Symbol) {
          s = c.left().symbol_id();
          val = false;
        } else {
          continue;
        }
        auto it = units.find(s);
        if (it != units.end() && it->second != val) { contradiction = true; break; }
        units.emplace(s, val);
      }
      if (contradiction) return 0;
      if (units.empty()) break;
      std::size_t before = scope_size(cs);
      Conjuncts next;
      next.parts.reserve(cs.parts.size());
      for (std::size_t i = 0; i < cs.parts.size(); ++i) {
        const Formula& c = cs.parts[i];
        bool touched = false;
        for (SymbolId s : cs.part_syms[i])
          if (units.count(s)) { touched = true; break; }
        if (!touched) {
          if (c.kind() == Connective::True) continue;
          next.parts.push_back(c);
          next.part_syms.push_back(cs.part_syms[i]);
          continue;
        }
        Formula conditioned = condition(c, units);
        if (conditioned.kind() == Connective::False) return 0;
        if (conditioned.kind() == Connective::True) continue;
        // Conditioning may expose a nested And spine; re-flatten it.
        std::vector<Formula> sub;
        flatten_and_spine(conditioned, sub);
        for (Formula& piece : sub) {
          if (piece.kind() == Connective::False) return 0;
          next.part_syms.push_back(symbols(piece));
          next.parts.push_back(std::move(piece));
        }
      }
      std::size_t after = scope_size(next);
      free_factor_exp += before - units.size() - after;
      cs = std::move(next);
    }

    if (cs.parts.empty()) return ModelCount(1) << free_factor_exp;

    // 2. Component decomposition over symbol co-occurrence.
    auto groups = components(cs);
    ModelCount result;
    if (groups.size() > 1) {
      result = 1;
      for (auto& g : groups) result *= count_connected(std::move(g));
    } else {
      result = count_connected(std::move(cs));
    }
    return result << free_factor_exp;
  }

  // Convenience: count `f` over exactly its own free symbols.
  ModelCount count_formula(const Formula& f) {
    if (f.kind() == Connective::True) return 1;
    if (f.kind() == Connective::False) return 0;
    Conjuncts cs;
    flatten_and_spine(f, cs.parts);
    cs.part_syms.reserve(cs.parts.size());
    for (const Formula& c : cs.parts) cs.part_syms.push_back(symbols(c));
    return count(std::move(cs));
  }

private:
  static constexpr std::size_t kMemoConjunctLimit = 256;

  static std::size_t scope_size(const Conjuncts& cs) {
    std::unordered_set<SymbolId> all;
    for (const auto& ss : cs.part_syms) all.insert(ss.begin(), ss.end());
    return all.size();
  }

  std::vector<Conjuncts> components(const Conjuncts& cs) {
    // Union-find over conjunct indices via shared symbols.
    std::vector<std::size_t> parent(cs.parts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::unordered_map<SymbolId, std::size_t> owner;
    for (std::size_t i = 0; i < cs.parts.size(); ++i) {
      for (SymbolId s : cs.part_syms[i]) {
        auto [it, inserted] = owner.emplace(s, i);
        if (!inserted) parent[find(i)] = find(it->second);
      }
    }
    std::map<std::size_t, Conjuncts> grouped; // ordered: deterministic output
    for (std::size_t i = 0; i < cs.parts.size(); ++i) {
      auto& g = grouped[find(i)];
      g.parts.push_back(cs.parts[i]);
      g.part_syms.push_back(cs.part_syms[i]);
    }
    std::vector<Conjuncts> out;
    out.reserve(grouped.size());
    for (auto& [root, g] : grouped) out.push_back(std::move(g));
    return out;
  }

  ModelCount count_connected(Conjuncts cs) {
    SymbolSet all;
    for (const auto& ss : cs.part_syms) all = all.set_union(ss);

    if (all.size() <= opt_.enum_threshold) return truth_table_count(cs, all);

    bool memoizable = cs.parts.size() <= kMemoConjunctLimit;
    ConjKey key;
    if (memoizable) {
      key.parts = cs.parts;
      std::sort(key.parts.begin(), key.parts.end(), [](const Formula& a, const Formula& b) {
        if (a.hash() != b.hash()) return a.hash() < b.hash();
        return structural_compare(a, b) < 0;
      });
      std::size_t h = 0xc0457a1fULL;
      for (const Formula& p : key.parts) h = h * 1099511628211ULL + p.hash();
      key.hash = h;
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }

    // 3. Branch on the most frequently occurring symbol (ties: smallest id).
    std::map<SymbolId, std::size_t> occurrences;
    for (const auto& ss : cs.part_syms)
      for (SymbolId s : ss) ++occurrences[s];
    SymbolId pivot = occurrences.begin()->first;
    std::size_t best = 0;
    for (const auto& [s, cnt] : occurrences)
      if (cnt > best) { best = cnt; pivot = s; }

    ModelCount total = 0;
    for (bool val : {true, false}) {
      Valuation assignment{{pivot, val}};
      Conjuncts branch;
      branch.parts.reserve(cs.parts.size());
      bool dead = false;
      for (std::size_t i = 0; i < cs.parts.size() && !dead; ++i) {
        if (!cs.part_syms[i].contains(pivot)) {
          branch.parts.push_back(cs.parts[i]);
          branch.part_syms.push_back(cs.part_syms[i]);
          continue;
        }
        Formula conditioned = condition(cs.parts[i], assignment);
        if (conditioned.kind() == Connective::False) { dead = true; break; }
        if (conditioned.kind() == Connective::True) continue;
        std::vector<Formula> sub;
        flatten_and_spine(conditioned, sub);
        for (Formula& piece : sub) {
          if (piece.kind() == Connective::False) { dead = true; break; }
          branch.part_syms.push_back(symbols(piece));
          branch.parts.push_back(std::move(piece));
        }
      }
      if (dead) continue;
      SymbolSet remaining;
      for (const auto& ss : branch.part_syms) remaining = remaining.set_union(ss);
      ModelCount sub = count(std::move(branch));
      // Symbols eliminated beyond the pivot are unconstrained: factor 2 each.
      std::size_t eliminated = all.size() - 1 - remaining.size();
      total += sub << eliminated;
    }

    if (memoizable) memo_.emplace(std::move(key), total);
    return total;
  }

  ModelCount truth_table_count(const Conjuncts& cs, const SymbolSet& all) {
    std::size_t t = all.size();
    if (t == 0) {
      // Symbol-free conjuncts (e.g. user-written constant subformulas) are
      // decided by plain evaluation over the empty assignment.
      TruthAssignment empty(SymbolSet{}, {});
      for (const Formula& c : cs.parts)
        if (!evaluate(c, empty)) return 0;
      return 1;
    }
    std::unordered_map<SymbolId, unsigned> rank;
    unsigned r = 0;
    for (SymbolId s : all) rank.emplace(s, r++);
    std::size_t bits = std::size_t{1} << t;
    std::size_t words = t >= 6 ? (bits >> 6) : 1;
    std::vector<std::uint64_t> acc(words, ~0ULL);
    std::vector<std::uint64_t> mask;
    for (const Formula& c : cs.parts) {
      truth_table_mask(c, rank, words, mask);
      for (std::size_t w = 0; w < words; ++w) acc[w] &= mask[w];
    }
    if (t < 6) acc[0] &= (bits >= 64) ? ~0ULL : ((std::uint64_t{1} << bits) - 1);
    ModelCount n = 0;
    for (std::uint64_t w : acc) n += std::popcount(w);
    return n;
  }

  CountOptions opt_;
  std::unordered_map<ConjKey, ModelCount, ConjKeyHash, ConjKeyEq> memo_;
};

} // namespace detail

/// Number of truth assignments on S satisfying f. Exact and deterministic;
/// S must contain every symbol of f, and symbols of S not occurring in f
/// contribute a factor of 2 each (never enumerated).
inline ModelCount count_models(const Formula& f, const SymbolSet& S,
                               const CountOptions& opt = {}) {
  SymbolSet fs = symbols(f);
  if (!fs.subset_of(S))
    throw std::invalid_argument("count_models: symbol set does not cover the formula");
  detail::Counter counter(opt);
  ModelCount inner = counter.count_formula(f);
  return inner << (S.size() - fs.size());
}

inline bool satisfiable(const Formula& f, const CountOptions& opt = {}) {
  return count_models(f, symbols(f), opt) != 0;
}

/// x |= a: every truth assignment satisfying x also satisfies a.
inline bool entails(const Formula& x, const Formula& a, const CountOptions& opt = {}) {
  Formula counterexample = Formula::conjunction(x, Formula::negation(a));
  return count_models(counterexample, symbols(counterexample), opt) == 0;
}

/// |= a <-> b.
inline bool equivalent(const Formula& a, const Formula& b, const CountOptions& opt = {}) {
  return entails(Formula::verum(), Formula::equivalence(a, b), opt);
}

/// x |= a <-> b (equivalence assuming x).
inline bool equivalent_given(const Formula& x, const Formula& a, const Formula& b,
                             const CountOptions& opt = {}) {
  return entails(x, Formula::equivalence(a, b), opt);
}

enum class Ordering { Less, Equal, Greater, Incomparable };

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
    case Ordering::Incomparable: return "incomparable";
  }
  return "?";
}

/// Position of a relative to b in the implication ordering given premise x:
/// Less when x |= a->b but not x |= b->a, Equal when both, Greater when only
/// the converse holds, Incomparable when neither. x must be satisfiable.
inline Ordering compare_implication(const Formula& x, const Formula& a, const Formula& b,
                                    const CountOptions& opt = {}) {
  if (!satisfiable(x, opt))
    throw std::invalid_argument("compare_implication: premise is unsatisfiable");
  bool ab = entails(x, Formula::implication(a, b), opt);
  bool ba = entails(x, Formula::implication(b, a), opt);
  if (ab && ba) return Ordering::Equal;
  if (ab) return Ordering::Less;
  if (ba) return Ordering::Greater;
  return Ordering::Incomparable;
}

} // namespace plaus
