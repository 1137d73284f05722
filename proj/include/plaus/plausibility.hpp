#pragma once

// The plausibility function P(A|X) = #S(A & X) / #S(X) over S = symbols of
// A and X (any finite superset gives the same value), the urn helper, and
// the derived probability laws as an executable report.

#include <string>
#include <vector>

#include "plaus/formula.hpp"
#include "plaus/rational.hpp"
#include "plaus/semantics.hpp"

namespace plaus {

struct PlausibilityResult {
  Rational value;
  // True when the premise is unsatisfiable and the value 1 comes from the
  // convention extending the function to that case, rather than a count.
  bool convention_applied = false;
};

inline PlausibilityResult plausibility(const Formula& query, const Formula& premise,
                                       const CountOptions& opt = {}) {
  SymbolSet s = symbols({query, premise});
  ModelCount premise_models = count_models(premise, s, opt);
  if (premise_models == 0) return {Rational(1), true};
  ModelCount joint = count_models(Formula::conjunction(query, premise), s, opt);
  return {Rational(BigInt(joint), BigInt(premise_models)), false};
}

/// Plausibility of "one of the first m" against an n-symbol urn premise:
/// builds the defining pair (s1|...|sm, exactly-one of s1..sn) over fresh
/// symbols, evaluates it through the counting engine, and checks the result
/// against m/n before returning. Requires 0 <= m <= n, n > 0.
inline Rational urn_probability(unsigned m, unsigned n, const CountOptions& opt = {}) {
  if (n == 0) throw std::invalid_argument("urn_probability: n must be positive");
  if (m > n) throw std::invalid_argument("urn_probability: m exceeds n");
  SymbolTable table;
  std::vector<SymbolId> syms;
  syms.reserve(n);
  for (unsigned i = 1; i <= n; ++i) syms.push_back(table.intern("s" + std::to_string(i)));
  std::vector<Formula> first;
  first.reserve(m);
  for (unsigned i = 0; i < m; ++i) first.push_back(Formula::symbol(syms[i]));
  Formula query = disjoin_all(first); // m = 0 gives the unsatisfiable constant
  Formula premise = exactly_one(syms);
  PlausibilityResult p = plausibility(query, premise, opt);
  Rational expected(m, n);
  if (p.convention_applied || p.value != expected)
    throw std::logic_error("urn_probability: counting engine disagrees with m/n");
  return expected;
}

struct LawCheck {
  std::string law;
  bool applicable = true; // laws with a hypothesis hold vacuously when it fails
  Rational lhs;
  Rational rhs;
  bool pass = false;
  std::string detail;
};

struct LawReport {
  std::vector<LawCheck> laws;
  bool all_pass = true;
};

/// Evaluates the five derived probability laws on (a, b, x) exactly:
///   1. 0 <= P(A|X) <= 1
///   2. P(A|X) = 1 when X |= A               (X satisfiable or not)
///   3. P(A|X) = 0 when X |= !A and X is satisfiable
///   4. P(!A|X) = 1 - P(A|X) when X is satisfiable
///   5. P(A&B|X) = P(B|X) * P(A|B&X)
inline LawReport check_probability_laws(const Formula& a, const Formula& b, const Formula& x,
                                        const CountOptions& opt = {}) {
  LawReport report;
  bool x_sat = satisfiable(x, opt);
  Rational pa = plausibility(a, x, opt).value;

  auto add = [&report](LawCheck check) {
    check.pass = !check.applicable || check.lhs == check.rhs;
    report.all_pass = report.all_pass && check.pass;
    report.laws.push_back(std::move(check));
  };

  {
    LawCheck c;
    c.law = "range";
    c.lhs = pa;
    c.rhs = pa;
    c.pass = pa >= 0 && pa <= 1;
    c.detail = "0 <= " + to_string(pa) + " <= 1";
    report.all_pass = report.all_pass && c.pass;
    report.laws.push_back(std::move(c));
  }
  {
    LawCheck c;
    c.law = "certainty";
    c.applicable = entails(x, a, opt);
    c.lhs = pa;
    c.rhs = Rational(1);
    c.detail = c.applicable ? "X |= A, P(A|X) = " + to_string(pa) : "not applicable (X does not entail A)";
    add(std::move(c));
  }
  {
    LawCheck c;
    c.law = "impossibility";
    c.applicable = x_sat && entails(x, Formula::negation(a), opt);
    c.lhs = pa;
    c.rhs = Rational(0);
    c.detail = c.applicable ? "X |= !A, P(A|X) = " + to_string(pa) : "not applicable";
    add(std::move(c));
  }
  {
    LawCheck c;
    c.law = "negation";
    c.applicable = x_sat;
    Rational pnota = plausibility(Formula::negation(a), x, opt).value;
    c.lhs = pnota;
    c.rhs = Rational(1) - pa;
    c.detail = "P(!A|X) = " + to_string(pnota) + ", 1 - P(A|X) = " + to_string(c.rhs);
    add(std::move(c));
  }
  {
    LawCheck c;
    c.law = "product";
    Rational pab = plausibility(Formula::conjunction(a, b), x, opt).value;
    Rational pb = plausibility(b, x, opt).value;
    Rational pa_given_bx = plausibility(a, Formula::conjunction(b, x), opt).value;
    c.lhs = pab;
    c.rhs = pb * pa_given_bx;
    c.detail = "P(A&B|X) = " + to_string(pab) + ", P(B|X)*P(A|B&X) = " + to_string(pb) + " * " +
               to_string(pa_given_bx);
    add(std::move(c));
  }
  return report;
}

} // namespace plaus
