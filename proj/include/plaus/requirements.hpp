#pragma once

// Executable verdicts for the four preservation requirements a plausibility
// function must satisfy, checked against pluggable providers:
//
//   R1  equivalence invariance: X == Y and A ==_X B  =>  A|X = B|Y
//   R2  definition invariance:  s fresh              =>  A|X = A|(s<->E)&X
//   R3  irrelevance invariance: Y disjoint, sat      =>  A|X = A|Y&X
//   R4  order preservation:     A strictly below B   =>  A|X < B|X
//
// Instances are generated deterministically from a seed, preconditions are
// verified semantically before any verdict, and failures carry the concrete
// witness. Three providers are bundled: the counting ratio (passes all
// four), a three-valued consequence translation (passes R1-R3, cannot honor
// R4 on long chains), and a deliberately biased weighted count that the
// harness exists to catch.

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "plaus/formula.hpp"
#include "plaus/plausibility.hpp"
#include "plaus/rational.hpp"
#include "plaus/semantics.hpp"

namespace plaus {

enum class Requirement { R1, R2, R3, R4 };

inline const char* to_string(Requirement r) {
  switch (r) {
    case Requirement::R1: return "R1";
    case Requirement::R2: return "R2";
    case Requirement::R3: return "R3";
    case Requirement::R4: return "R4";
  }
  return "?";
}

enum class ThreeValue { CertainlyFalse, Unknown, CertainlyTrue };

using PlausValue = std::variant<Rational, ThreeValue>;

inline std::string to_string(const PlausValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  switch (std::get<ThreeValue>(v)) {
    case ThreeValue::CertainlyFalse: return "F";
    case ThreeValue::Unknown: return "u";
    case ThreeValue::CertainlyTrue: return "T";
  }
  return "?";
}

/// A candidate plausibility function plus the partial order on its values.
/// eval is only ever called with a satisfiable premise.
class PlausibilityProvider {
public:
  virtual ~PlausibilityProvider() = default;
  virtual std::string name() const = 0;
  virtual PlausValue eval(const Formula& query, const Formula& premise) const = 0;
  virtual bool has_compare() const { return true; }
  virtual Ordering compare(const PlausValue& a, const PlausValue& b) const = 0;
};

/// The counting ratio #S(A&X)/#S(X); values ordered as rationals.
class CountingProvider final : public PlausibilityProvider {
public:
  explicit CountingProvider(CountOptions opt = {}) : opt_(opt) {}
  std::string name() const override { return "counting"; }
  PlausValue eval(const Formula& query, const Formula& premise) const override {
    return plausibility(query, premise, opt_).value;
  }
  Ordering compare(const PlausValue& a, const PlausValue& b) const override {
    const auto* ra = std::get_if<Rational>(&a);
    const auto* rb = std::get_if<Rational>(&b);
    if (!ra || !rb) return Ordering::Incomparable;
    if (*ra == *rb) return Ordering::Equal;
    return *ra < *rb ? Ordering::Less : Ordering::Greater;
  }

private:
  CountOptions opt_;
};

/// Direct translation of logical consequence: F when the premise refutes
/// the query, T when it entails it, u otherwise, with F < u < T.
class ThreeValuedProvider final : public PlausibilityProvider {
public:
  explicit ThreeValuedProvider(CountOptions opt = {}) : opt_(opt) {}
  std::string name() const override { return "three-valued"; }
  PlausValue eval(const Formula& query, const Formula& premise) const override {
    if (entails(premise, Formula::negation(query), opt_)) return ThreeValue::CertainlyFalse;
    if (entails(premise, query, opt_)) return ThreeValue::CertainlyTrue;
    return ThreeValue::Unknown;
  }
  Ordering compare(const PlausValue& a, const PlausValue& b) const override {
    const auto* ta = std::get_if<ThreeValue>(&a);
    const auto* tb = std::get_if<ThreeValue>(&b);
    if (!ta || !tb) return Ordering::Incomparable;
    if (*ta == *tb) return Ordering::Equal;
    return static_cast<int>(*ta) < static_cast<int>(*tb) ? Ordering::Less : Ordering::Greater;
  }

private:
  CountOptions opt_;
};

/// Counting with a built-in bias: models where the designated symbol is true
/// weigh 2 instead of 1. The bias lives in the function, not the premise, so
/// it breaks definition invariance: define the designated symbol to track
/// something correlated with the query and the value moves.
class WeightedCountingProvider final : public PlausibilityProvider {
public:
  WeightedCountingProvider(SymbolTable& table, std::string designated_name = "w",
                           CountOptions opt = {})
      : designated_(table.intern(designated_name)),
        designated_name_(std::move(designated_name)),
        opt_(opt) {}

  std::string name() const override { return "weighted"; }
  SymbolId designated_symbol() const { return designated_; }
  const std::string& designated_name() const { return designated_name_; }

  PlausValue eval(const Formula& query, const Formula& premise) const override {
    SymbolSet s = symbols({query, premise});
    Formula joint = Formula::conjunction(query, premise);
    BigInt wx = weighted_count(premise, s);
    BigInt wax = weighted_count(joint, s);
    return Rational(wax, wx);
  }

  Ordering compare(const PlausValue& a, const PlausValue& b) const override {
    const auto* ra = std::get_if<Rational>(&a);
    const auto* rb = std::get_if<Rational>(&b);
    if (!ra || !rb) return Ordering::Incomparable;
    if (*ra == *rb) return Ordering::Equal;
    return *ra < *rb ? Ordering::Less : Ordering::Greater;
  }

private:
  BigInt weighted_count(const Formula& f, const SymbolSet& s) const {
    BigInt plain = count_models(f, s, opt_);
    if (!s.contains(designated_)) return plain;
    BigInt biased =
        count_models(Formula::conjunction(f, Formula::symbol(designated_)), s, opt_);
    return plain + biased;
  }

  SymbolId designated_;
  std::string designated_name_;
  CountOptions opt_;
};

inline std::unique_ptr<PlausibilityProvider> make_provider(const std::string& name,
                                                           SymbolTable& table,
                                                           CountOptions opt = {}) {
  if (name == "counting") return std::make_unique<CountingProvider>(opt);
  if (name == "three-valued") return std::make_unique<ThreeValuedProvider>(opt);
  if (name == "weighted") return std::make_unique<WeightedCountingProvider>(table, "w", opt);
  throw std::invalid_argument("unknown provider '" + name + "'");
}

// ---------------------------------------------------------------------------
// Instance generation

class GenerationBudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct GenParams {
  unsigned pool_size = 5;  // symbols available to random formulas
  unsigned max_depth = 4;
  unsigned budget = 2000;  // rejection-sampling attempts before giving up
};

/// Deterministic RNG (the mt19937_64 sequence is pinned by the standard).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool chance(unsigned percent) { return below(100) < percent; }

private:
  std::mt19937_64 engine_;
};

struct R1Instance { Formula a, x, b, y; };
struct R2Instance { Formula a, x, e; SymbolId s; };
struct R3Instance { Formula a, x, y; };
struct R4Instance { Formula x, a, b; };
using RequirementInstance = std::variant<R1Instance, R2Instance, R3Instance, R4Instance>;

namespace detail {

inline Formula random_formula(Rng& rng, std::span<const SymbolId> pool, unsigned depth) {
  if (depth == 0 || rng.chance(10)) {
    std::uint64_t r = rng.below(20);
    if (r == 0) return Formula::verum();
    if (r == 1) return Formula::falsum();
    return Formula::symbol(pool[rng.below(pool.size())]);
  }
  switch (rng.below(5)) {
    case 0: return Formula::negation(random_formula(rng, pool, depth - 1));
    case 1:
      return Formula::conjunction(random_formula(rng, pool, depth - 1),
                                  random_formula(rng, pool, depth - 1));
    case 2:
      return Formula::disjunction(random_formula(rng, pool, depth - 1),
                                  random_formula(rng, pool, depth - 1));
    case 3:
      return Formula::implication(random_formula(rng, pool, depth - 1),
                                  random_formula(rng, pool, depth - 1));
    default:
      return Formula::equivalence(random_formula(rng, pool, depth - 1),
                                  random_formula(rng, pool, depth - 1));
  }
}

// One equivalence-preserving rewrite at a random site: commutativity,
// De Morgan in either direction, or double-negation insertion/removal.
enum class Rewrite { Swap, DnInsert, DnRemove, DeMorganFwd, DeMorganBwd };

struct RewriteSite {
  std::vector<bool> path; // false = left/operand, true = right
  Rewrite rewrite;
};

inline void collect_sites(const Formula& f, std::vector<bool>& path,
                          std::vector<RewriteSite>& out) {
  out.push_back({path, Rewrite::DnInsert});
  switch (f.kind()) {
    case Connective::And:
    case Connective::Or:
      out.push_back({path, Rewrite::Swap});
      if (f.left().kind() == Connective::Not && f.right().kind() == Connective::Not)
        out.push_back({path, Rewrite::DeMorganBwd});
      break;
    case Connective::Iff:
      out.push_back({path, Rewrite::Swap});
      break;
    case Connective::Not:
      if (f.left().kind() == Connective::Not) out.push_back({path, Rewrite::DnRemove});
      if (f.left().kind() == Connective::And || f.left().kind() == Connective::Or)
        out.push_back({path, Rewrite::DeMorganFwd});
      break;
    default:
      break;
  }
  switch (f.kind()) {
    case Connective::Symbol:
    case Connective::True:
    case Connective::False:
      return;
    case Connective::Not:
      path.push_back(false);
      collect_sites(f.left(), path, out);
      path.pop_back();
      return;
    default:
      path.push_back(false);
      collect_sites(f.left(), path, out);
      path.back() = true;
      collect_sites(f.right(), path, out);
      path.pop_back();
      return;
  }
}

inline Formula rebuild_with(const Formula& f, Connective kind, Formula l, Formula r) {
  switch (kind) {
    case Connective::And: return Formula::conjunction(std::move(l), std::move(r));
    case Connective::Or: return Formula::disjunction(std::move(l), std::move(r));
    case Connective::Implies: return Formula::implication(std::move(l), std::move(r));
    case Connective::Iff: return Formula::equivalence(std::move(l), std::move(r));
    default: throw std::logic_error("rebuild_with: not a binary connective");
  }
}

inline Formula apply_rewrite_at(const Formula& f, const RewriteSite& site, std::size_t depth) {
  if (depth < site.path.size()) {
    bool go_right = site.path[depth];
    if (f.kind() == Connective::Not)
      return Formula::negation(apply_rewrite_at(f.left(), site, depth + 1));
    Formula l = go_right ? f.left() : apply_rewrite_at(f.left(), site, depth + 1);
    Formula r = go_right ? apply_rewrite_at(f.right(), site, depth + 1) : f.right();
    return rebuild_with(f, f.kind(), std::move(l), std::move(r));
  }
  switch (site.rewrite) {
    case Rewrite::Swap:
      return rebuild_with(f, f.kind(), f.right(), f.left());
    case Rewrite::DnInsert:
      return Formula::negation(Formula::negation(f));
    case Rewrite::DnRemove:
      return f.left().left();
    case Rewrite::DeMorganFwd: {
      const Formula& inner = f.left();
      Formula nl = Formula::negation(inner.left());
      Formula nr = Formula::negation(inner.right());
      return inner.kind() == Connective::And
                 ? Formula::disjunction(std::move(nl), std::move(nr))
                 : Formula::conjunction(std::move(nl), std::move(nr));
    }
    case Rewrite::DeMorganBwd: {
      Formula l = f.left().left();
      Formula r = f.right().left();
      return f.kind() == Connective::And
                 ? Formula::negation(Formula::disjunction(std::move(l), std::move(r)))
                 : Formula::negation(Formula::conjunction(std::move(l), std::move(r)));
    }
  }
  throw std::logic_error("apply_rewrite_at: unreachable");
}

inline Formula rewrite_equivalent(Rng& rng, const Formula& f) {
  std::vector<RewriteSite> sites;
  std::vector<bool> path;
  collect_sites(f, path, sites);
  const RewriteSite& site = sites[rng.below(sites.size())];
  return apply_rewrite_at(f, site, 0);
}

inline Formula random_satisfiable(Rng& rng, std::span<const SymbolId> pool, unsigned depth,
                                  unsigned budget, const char* who) {
  for (unsigned i = 0; i < budget; ++i) {
    Formula f = random_formula(rng, pool, depth);
    if (satisfiable(f)) return f;
  }
  throw GenerationBudgetError(std::string(who) + ": satisfiable-formula budget exhausted");
}

} // namespace detail

/// Deterministic in `seed`; the returned instance satisfies its
/// requirement's preconditions, verified semantically.
inline RequirementInstance generate_instance(std::uint64_t seed, Requirement which,
                                             const GenParams& params, SymbolTable& table) {
  if (params.pool_size == 0 || params.pool_size > 15)
    throw std::invalid_argument(
        "generate_instance: pool_size must be 1..15 (letters p..r and v, w are reserved)");
  Rng rng(seed ^ (0x5eed0000ULL + static_cast<unsigned>(which)));
  std::vector<SymbolId> pool;
  for (unsigned i = 0; i < params.pool_size; ++i)
    pool.push_back(table.intern(std::string(1, static_cast<char>('a' + i))));

  switch (which) {
    case Requirement::R1: {
      Formula x = detail::random_satisfiable(rng, pool, params.max_depth, params.budget, "R1");
      Formula y = x;
      unsigned rewrites = 1 + static_cast<unsigned>(rng.below(3));
      for (unsigned i = 0; i < rewrites; ++i) y = detail::rewrite_equivalent(rng, y);
      Formula a = detail::random_formula(rng, pool, params.max_depth);
      Formula b;
      if (rng.chance(50)) {
        b = a;
        for (unsigned i = 0; i < 1 + rng.below(2); ++i) b = detail::rewrite_equivalent(rng, b);
      } else {
        // A and A & (X | W) agree on every model of X.
        Formula filler = detail::random_formula(rng, pool, params.max_depth - 1);
        b = Formula::conjunction(detail::rewrite_equivalent(rng, a),
                                 Formula::disjunction(x, std::move(filler)));
      }
      if (!equivalent(x, y) || !equivalent_given(x, a, b))
        throw std::logic_error("generate_instance: R1 construction broke equivalence");
      return R1Instance{std::move(a), std::move(x), std::move(b), std::move(y)};
    }
    case Requirement::R2: {
      Formula x = detail::random_satisfiable(rng, pool, params.max_depth, params.budget, "R2");
      Formula a = detail::random_formula(rng, pool, params.max_depth);
      Formula e = detail::random_formula(rng, pool, params.max_depth);
      SymbolId s = table.intern(rng.chance(50) ? "w" : "v");
      if (symbols({a, x, e}).contains(s))
        throw std::logic_error("generate_instance: R2 fresh symbol not fresh");
      return R2Instance{std::move(a), std::move(x), std::move(e), s};
    }
    case Requirement::R3: {
      Formula x = detail::random_satisfiable(rng, pool, params.max_depth, params.budget, "R3");
      Formula a = detail::random_formula(rng, pool, params.max_depth);
      std::vector<SymbolId> aux{table.intern("p"), table.intern("q"), table.intern("r")};
      Formula y = detail::random_satisfiable(rng, aux, params.max_depth, params.budget, "R3");
      if (!symbols({a, x}).disjoint_with(symbols(y)))
        throw std::logic_error("generate_instance: R3 pools overlap");
      return R3Instance{std::move(a), std::move(x), std::move(y)};
    }
    case Requirement::R4: {
      Formula x = detail::random_satisfiable(rng, pool, params.max_depth, params.budget, "R4");
      for (unsigned i = 0; i < params.budget; ++i) {
        Formula a = detail::random_formula(rng, pool, params.max_depth);
        Formula b = Formula::disjunction(a, detail::random_formula(rng, pool, params.max_depth));
        if (compare_implication(x, a, b) == Ordering::Less)
          return R4Instance{std::move(x), std::move(a), std::move(b)};
      }
      throw GenerationBudgetError("R4: strict-ordering budget exhausted");
    }
  }
  throw std::logic_error("generate_instance: unreachable");
}

// ---------------------------------------------------------------------------
// Verdicts

struct Verdict {
  enum class Status { Pass, Fail, Untestable } status;
  std::string evidence; // concrete instance and both values, on Fail
  bool passed() const { return status == Status::Pass; }
};

inline Verdict check_requirement(const PlausibilityProvider& provider,
                                 const RequirementInstance& instance,
                                 const SymbolTable& table) {
  // R1-R3 state equalities, so verdicts use value equality; only R4 consults
  // the provider's ordering.
  auto values_differ = [](const PlausValue& lhs, const PlausValue& rhs) {
    return !(lhs == rhs);
  };
  try {
    if (const auto* r1 = std::get_if<R1Instance>(&instance)) {
      PlausValue va = provider.eval(r1->a, r1->x);
      PlausValue vb = provider.eval(r1->b, r1->y);
      if (values_differ(va, vb))
        return {Verdict::Status::Fail,
                "R1: A=" + print(r1->a, table) + "  X=" + print(r1->x, table) +
                    "  B=" + print(r1->b, table) + "  Y=" + print(r1->y, table) +
                    "  A|X=" + to_string(va) + "  B|Y=" + to_string(vb)};
      return {Verdict::Status::Pass, {}};
    }
    if (const auto* r2 = std::get_if<R2Instance>(&instance)) {
      Formula definition = Formula::equivalence(Formula::symbol(r2->s), r2->e);
      Formula extended = Formula::conjunction(std::move(definition), r2->x);
      PlausValue va = provider.eval(r2->a, r2->x);
      PlausValue vb = provider.eval(r2->a, extended);
      if (values_differ(va, vb))
        return {Verdict::Status::Fail,
                "R2: A=" + print(r2->a, table) + "  X=" + print(r2->x, table) +
                    "  E=" + print(r2->e, table) + "  s=" + table.name(r2->s) +
                    "  A|X=" + to_string(va) + "  A|(s<->E)&X=" + to_string(vb)};
      return {Verdict::Status::Pass, {}};
    }
    if (const auto* r3 = std::get_if<R3Instance>(&instance)) {
      Formula extended = Formula::conjunction(r3->y, r3->x);
      PlausValue va = provider.eval(r3->a, r3->x);
      PlausValue vb = provider.eval(r3->a, extended);
      if (values_differ(va, vb))
        return {Verdict::Status::Fail,
                "R3: A=" + print(r3->a, table) + "  X=" + print(r3->x, table) +
                    "  Y=" + print(r3->y, table) + "  A|X=" + to_string(va) +
                    "  A|Y&X=" + to_string(vb)};
      return {Verdict::Status::Pass, {}};
    }
    const auto& r4 = std::get<R4Instance>(instance);
    if (!provider.has_compare())
      return {Verdict::Status::Untestable, "R4: provider supplies no value ordering"};
    PlausValue va = provider.eval(r4.a, r4.x);
    PlausValue vb = provider.eval(r4.b, r4.x);
    if (provider.compare(va, vb) != Ordering::Less)
      return {Verdict::Status::Fail,
              "R4: X=" + print(r4.x, table) + "  A=" + print(r4.a, table) +
                  "  B=" + print(r4.b, table) + "  A|X=" + to_string(va) +
                  "  B|X=" + to_string(vb) + " (expected strictly less)"};
    return {Verdict::Status::Pass, {}};
  } catch (const std::exception& e) {
    return {Verdict::Status::Fail, std::string("provider error: ") + e.what()};
  }
}

/// Builds the chain premise (s1->s2) & (s2->s3) & ... over n symbols, under
/// which s1, s2, ..., sn are strictly increasing in the implication
/// ordering, and checks that the provider's values strictly increase too.
struct ChainResult {
  Formula premise;
  std::vector<Formula> queries;
  std::vector<PlausValue> values;
  bool pass = false;
  std::size_t first_violation = 0; // index i of the first non-increasing link (values i, i+1)
  std::string evidence;
};

inline ChainResult r4_witness_chain(const PlausibilityProvider& provider, unsigned n,
                                    SymbolTable& table) {
  if (n < 2) throw std::invalid_argument("r4_witness_chain: need n >= 2");
  ChainResult result;
  std::vector<SymbolId> syms;
  for (unsigned i = 1; i <= n; ++i) syms.push_back(table.intern("s" + std::to_string(i)));
  std::vector<Formula> links;
  for (unsigned i = 0; i + 1 < n; ++i)
    links.push_back(
        Formula::implication(Formula::symbol(syms[i]), Formula::symbol(syms[i + 1])));
  result.premise = conjoin_all(links);
  for (unsigned i = 0; i < n; ++i) {
    result.queries.push_back(Formula::symbol(syms[i]));
    result.values.push_back(provider.eval(result.queries.back(), result.premise));
  }
  result.pass = true;
  if (!provider.has_compare()) {
    result.pass = false;
    result.evidence = "provider supplies no value ordering";
    return result;
  }
  for (std::size_t i = 0; i + 1 < result.values.size(); ++i) {
    if (provider.compare(result.values[i], result.values[i + 1]) != Ordering::Less) {
      result.pass = false;
      result.first_violation = i;
      result.evidence = "link " + std::to_string(i + 1) + ": " + to_string(result.values[i]) +
                        " is not strictly below " + to_string(result.values[i + 1]);
      break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Suite

struct SuiteRow {
  std::string provider;
  std::string requirement;
  unsigned cases = 0;
  unsigned passes = 0;
  unsigned untestable = 0;
  std::vector<std::string> failures; // capped; counts stay exact
};

struct SuiteResult {
  std::vector<SuiteRow> rows;
  bool all_pass = true;
};

inline SuiteResult run_requirement_suite(const PlausibilityProvider& provider, unsigned cases,
                                         std::uint64_t seed, const GenParams& params,
                                         SymbolTable& table, unsigned chain_length = 4) {
  constexpr unsigned kMaxRecordedFailures = 5;
  SuiteResult result;
  for (Requirement which :
       {Requirement::R1, Requirement::R2, Requirement::R3, Requirement::R4}) {
    SuiteRow row;
    row.provider = provider.name();
    row.requirement = to_string(which);
    row.cases = cases;
    for (unsigned i = 0; i < cases; ++i) {
      std::uint64_t instance_seed = seed + 1000003ULL * static_cast<unsigned>(which) + i;
      RequirementInstance inst = generate_instance(instance_seed, which, params, table);
      Verdict verdict = check_requirement(provider, inst, table);
      switch (verdict.status) {
        case Verdict::Status::Pass: ++row.passes; break;
        case Verdict::Status::Untestable: ++row.untestable; break;
        case Verdict::Status::Fail:
          if (row.failures.size() < kMaxRecordedFailures)
            row.failures.push_back("seed " + std::to_string(instance_seed) + ": " +
                                   verdict.evidence);
          break;
      }
    }
    if (row.passes + row.untestable < row.cases) result.all_pass = false;
    result.rows.push_back(std::move(row));
  }
  {
    SuiteRow row;
    row.provider = provider.name();
    row.requirement = "R4-chain(n=" + std::to_string(chain_length) + ")";
    row.cases = 1;
    ChainResult chain = r4_witness_chain(provider, chain_length, table);
    if (chain.pass) {
      row.passes = 1;
    } else {
      std::string values;
      for (const PlausValue& v : chain.values) {
        if (!values.empty()) values += " ";
        values += to_string(v);
      }
      row.failures.push_back("premise " + print(chain.premise, table) + "  values [" + values +
                             "]  " + chain.evidence);
      result.all_pass = false;
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

inline std::string suite_to_text(const SuiteResult& result) {
  std::ostringstream out;
  out << "provider      requirement       cases  pass  untestable  fail\n";
  for (const SuiteRow& row : result.rows) {
    unsigned fails = row.cases - row.passes - row.untestable;
    out << row.provider;
    for (std::size_t i = row.provider.size(); i < 14; ++i) out << ' ';
    out << row.requirement;
    for (std::size_t i = row.requirement.size(); i < 18; ++i) out << ' ';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%5u %5u %11u %5u", row.cases, row.passes, row.untestable,
                  fails);
    out << buf << "\n";
  }
  for (const SuiteRow& row : result.rows)
    for (const std::string& failure : row.failures)
      out << "witness [" << row.provider << " " << row.requirement << "] " << failure << "\n";
  out << (result.all_pass ? "suite: PASS" : "suite: FAIL") << "\n";
  return out.str();
}

inline nlohmann::json suite_to_json(const SuiteResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SuiteRow& row : result.rows) {
    rows.push_back({{"provider", row.provider},
                    {"requirement", row.requirement},
                    {"cases", row.cases},
                    {"passes", row.passes},
                    {"untestable", row.untestable},
                    {"failures", row.failures}});
  }
  return nlohmann::json{{"rows", rows}, {"pass", result.all_pass}};
}

} // namespace plaus
