#pragma once

// Propositional formulas: interned symbols, immutable ASTs, a small ASCII
// grammar, printing with minimal parentheses, and simultaneous substitution.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <iterator>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

namespace plaus {

struct SymbolId {
  std::uint32_t value = 0;

  friend constexpr bool operator==(SymbolId a, SymbolId b) { return a.value == b.value; }
  friend constexpr auto operator<=>(SymbolId a, SymbolId b) { return a.value <=> b.value; }
};

} // namespace plaus

template <>
struct std::hash<plaus::SymbolId> {
  std::size_t operator()(plaus::SymbolId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

namespace plaus {

/// Interns symbol names to dense ids. Interning the same name twice yields
/// the same id, also under concurrent use. Lookup by id is stable forever.
class SymbolTable {
public:
  SymbolTable() = default;
  SymbolTable(const SymbolTable&) = delete;
  SymbolTable& operator=(const SymbolTable&) = delete;

  SymbolId intern(std::string_view name) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = lookup_.find(std::string(name));
    if (it != lookup_.end()) return it->second;
    SymbolId id{static_cast<std::uint32_t>(names_.size())};
    names_.emplace_back(name);
    lookup_.emplace(names_.back(), id);
    return id;
  }

  std::optional<SymbolId> find(std::string_view name) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& name(SymbolId id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (id.value >= names_.size()) throw std::invalid_argument("SymbolTable: unknown symbol id");
    return names_[id.value];
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return names_.size();
  }

  /// Mints a symbol `_t0, _t1, ...` guaranteed distinct from everything
  /// already interned. The parser rejects user identifiers starting with
  /// '_', so these never collide with parsed input either.
  SymbolId fresh(std::string_view stem = "_t") {
    std::lock_guard<std::mutex> lock(mutex_);
    for (;;) {
      std::string candidate = std::string(stem) + std::to_string(fresh_counter_++);
      if (lookup_.find(candidate) != lookup_.end()) continue;
      SymbolId id{static_cast<std::uint32_t>(names_.size())};
      names_.push_back(candidate);
      lookup_.emplace(names_.back(), id);
      return id;
    }
  }

private:
  mutable std::mutex mutex_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> lookup_;
  std::uint64_t fresh_counter_ = 0;
};

/// A finite set of symbols, kept sorted by id.
class SymbolSet {
public:
  SymbolSet() = default;
  explicit SymbolSet(std::vector<SymbolId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  bool contains(SymbolId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  void insert(SymbolId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) ids_.insert(it, id);
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<SymbolId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool subset_of(const SymbolSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  bool disjoint_with(const SymbolSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
      if (*a == *b) return false;
      if (*a < *b) ++a; else ++b;
    }
    return true;
  }

  SymbolSet set_union(const SymbolSet& other) const {
    std::vector<SymbolId> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    SymbolSet result;
    result.ids_ = std::move(out);
    return result;
  }

  SymbolSet set_minus(const SymbolSet& other) const {
    std::vector<SymbolId> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    SymbolSet result;
    result.ids_ = std::move(out);
    return result;
  }

  friend bool operator==(const SymbolSet& a, const SymbolSet& b) { return a.ids_ == b.ids_; }

private:
  std::vector<SymbolId> ids_;
};

enum class Connective : std::uint8_t { Symbol, Not, And, Or, Implies, Iff, True, False };

/// Immutable formula tree. Value type; copies share structure. Structural
/// equality and hashing are precomputed-hash assisted, and all traversals
/// that may meet long And/Or spines are iterative (deep chains such as
/// pairwise exclusion lists must not overflow the stack, including on
/// destruction).
class Formula {
public:
  Formula() = default; // empty handle; factories below produce valid formulas

  static Formula symbol(SymbolId id);
  static Formula verum();
  static Formula falsum();
  static Formula negation(Formula f);
  static Formula conjunction(Formula l, Formula r);
  static Formula disjunction(Formula l, Formula r);
  static Formula implication(Formula l, Formula r);
  static Formula equivalence(Formula l, Formula r);

  bool is_valid() const { return node_ != nullptr; }
  Connective kind() const;
  SymbolId symbol_id() const;
  const Formula& left() const;
  const Formula& right() const;
  std::size_t hash() const;
  std::uint64_t node_count() const;
  bool is_literal() const;

  /// Identity of the underlying node; equal formulas built separately have
  /// distinct identities, so use operator== for structural comparison.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
  struct Node;

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static void check(const Formula& f) {
    if (!f.is_valid()) throw std::invalid_argument("Formula: empty operand");
  }

  static std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  }

  static void destroy(Node* n);
  static std::shared_ptr<const Node> make(Connective kind, SymbolId sym, Formula l, Formula r);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  SymbolId sym;
  Formula left;
  Formula right;
  std::size_t hash = 0;
  std::uint64_t nodes = 1;
};

inline Connective Formula::kind() const { return node_->kind; }
inline SymbolId Formula::symbol_id() const { return node_->sym; }
inline const Formula& Formula::left() const { return node_->left; }
inline const Formula& Formula::right() const { return node_->right; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline std::uint64_t Formula::node_count() const { return node_->nodes; }

inline bool Formula::is_literal() const {
  return kind() == Connective::Symbol ||
         (kind() == Connective::Not && left().kind() == Connective::Symbol);
}

// Frees long chains iteratively: children that would die with this node are
// detached first and destroyed from an explicit stack.
inline void Formula::destroy(Node* n) {
  std::vector<std::shared_ptr<const Node>> pending;
  auto grab = [&pending](Formula& child) {
    if (child.node_ && child.node_.use_count() == 1) pending.push_back(std::move(child.node_));
    child.node_.reset();
  };
  grab(n->left);
  grab(n->right);
  delete n;
  while (!pending.empty()) {
    std::shared_ptr<const Node> cur = std::move(pending.back());
    pending.pop_back();
    Node* raw = const_cast<Node*>(cur.get());
    grab(raw->left);
    grab(raw->right);
    // cur's children are now null; destroy() recurses at most one level.
  }
}

inline std::shared_ptr<const Formula::Node> Formula::make(Connective kind, SymbolId sym,
                                                          Formula l, Formula r) {
  auto* n = new Node{kind, sym, std::move(l), std::move(r)};
  std::size_t h = hash_combine(0x51ed2701u, static_cast<std::size_t>(kind));
  if (kind == Connective::Symbol) h = hash_combine(h, sym.value);
  if (n->left.node_) {
    h = hash_combine(h, n->left.hash());
    n->nodes += n->left.node_count();
  }
  if (n->right.node_) {
    h = hash_combine(h, n->right.hash());
    n->nodes += n->right.node_count();
  }
  n->hash = h;
  return std::shared_ptr<const Node>(n, &Formula::destroy);
}

inline Formula Formula::symbol(SymbolId id) { return Formula(make(Connective::Symbol, id, {}, {})); }
inline Formula Formula::verum() { return Formula(make(Connective::True, SymbolId{}, {}, {})); }
inline Formula Formula::falsum() { return Formula(make(Connective::False, SymbolId{}, {}, {})); }
inline Formula Formula::negation(Formula f) {
  check(f);
  return Formula(make(Connective::Not, SymbolId{}, std::move(f), {}));
}
inline Formula Formula::conjunction(Formula l, Formula r) {
  check(l);
  check(r);
  return Formula(make(Connective::And, SymbolId{}, std::move(l), std::move(r)));
}
inline Formula Formula::disjunction(Formula l, Formula r) {
  check(l);
  check(r);
  return Formula(make(Connective::Or, SymbolId{}, std::move(l), std::move(r)));
}
inline Formula Formula::implication(Formula l, Formula r) {
  check(l);
  check(r);
  return Formula(make(Connective::Implies, SymbolId{}, std::move(l), std::move(r)));
}
inline Formula Formula::equivalence(Formula l, Formula r) {
  check(l);
  check(r);
  return Formula(make(Connective::Iff, SymbolId{}, std::move(l), std::move(r)));
}

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  using Node = Formula::Node;
  std::vector<std::pair<const Node*, const Node*>> stack{{a.node_.get(), b.node_.get()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;
    if (x->hash != y->hash || x->kind != y->kind || x->nodes != y->nodes) return false;
    if (x->kind == Connective::Symbol) {
      if (x->sym != y->sym) return false;
      continue;
    }
    if (x->left.node_) stack.emplace_back(x->left.node_.get(), y->left.node_.get());
    if (x->right.node_) stack.emplace_back(x->right.node_.get(), y->right.node_.get());
  }
  return true;
}

} // namespace plaus

template <>
struct std::hash<plaus::Formula> {
  std::size_t operator()(const plaus::Formula& f) const noexcept {
    return f.is_valid() ? f.hash() : 0;
  }
};

namespace plaus {

/// Left-associated conjunction of `parts`; empty input yields `true`.
inline Formula conjoin_all(std::span<const Formula> parts) {
  if (parts.empty()) return Formula::verum();
  Formula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conjunction(acc, parts[i]);
  return acc;
}

/// Left-associated disjunction of `parts`; empty input yields `false`.
inline Formula disjoin_all(std::span<const Formula> parts) {
  if (parts.empty()) return Formula::falsum();
  Formula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::disjunction(acc, parts[i]);
  return acc;
}

inline Formula conjoin_all(std::initializer_list<Formula> parts) {
  return conjoin_all(std::span<const Formula>(parts.begin(), parts.size()));
}
inline Formula disjoin_all(std::initializer_list<Formula> parts) {
  return disjoin_all(std::span<const Formula>(parts.begin(), parts.size()));
}

/// Set of symbols occurring in `f`. Constants contribute nothing.
inline SymbolSet symbols(const Formula& f) {
  std::unordered_set<SymbolId> seen;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* cur = stack.back();
    stack.pop_back();
    if (!cur->is_valid()) continue;
    switch (cur->kind()) {
      case Connective::Symbol: seen.insert(cur->symbol_id()); break;
      case Connective::True:
      case Connective::False: break;
      case Connective::Not: stack.push_back(&cur->left()); break;
      default:
        stack.push_back(&cur->left());
        stack.push_back(&cur->right());
        break;
    }
  }
  return SymbolSet(std::vector<SymbolId>(seen.begin(), seen.end()));
}

inline SymbolSet symbols(std::span<const Formula> fs) {
  SymbolSet acc;
  for (const Formula& f : fs) acc = acc.set_union(symbols(f));
  return acc;
}

inline SymbolSet symbols(std::initializer_list<Formula> fs) {
  return symbols(std::span<const Formula>(fs.begin(), fs.size()));
}

/// Simultaneous substitution: every symbol in `map` is replaced by its image
/// in one pass, so symbols introduced by replacement formulas are never
/// themselves rewritten. Unmapped symbols stay. Shares untouched subtrees.
inline Formula substitute(const Formula& f, const std::unordered_map<SymbolId, Formula>& map) {
  if (map.empty()) return f;
  switch (f.kind()) {
    case Connective::Symbol: {
      auto it = map.find(f.symbol_id());
      return it == map.end() ? f : it->second;
    }
    case Connective::True:
    case Connective::False:
      return f;
    case Connective::Not: {
      Formula child = substitute(f.left(), map);
      if (child.identity() == f.left().identity()) return f;
      return Formula::negation(std::move(child));
    }
    default: {
      Formula l = substitute(f.left(), map);
      Formula r = substitute(f.right(), map);
      if (l.identity() == f.left().identity() && r.identity() == f.right().identity()) return f;
      switch (f.kind()) {
        case Connective::And: return Formula::conjunction(std::move(l), std::move(r));
        case Connective::Or: return Formula::disjunction(std::move(l), std::move(r));
        case Connective::Implies: return Formula::implication(std::move(l), std::move(r));
        case Connective::Iff: return Formula::equivalence(std::move(l), std::move(r));
        default: throw std::logic_error("substitute: unreachable");
      }
    }
  }
}

/// "Exactly one of syms is true": (s1|...|sn) & /\_{i<j} !(si & sj).
/// n = 1 collapses to the bare symbol (the pairwise part is vacuous).
inline Formula exactly_one(std::span<const SymbolId> syms) {
  if (syms.empty()) throw std::invalid_argument("exactly_one: empty symbol list");
  {
    std::unordered_set<SymbolId> seen(syms.begin(), syms.end());
    if (seen.size() != syms.size()) throw std::invalid_argument("exactly_one: duplicate symbols");
  }
  std::vector<Formula> atoms;
  atoms.reserve(syms.size());
  for (SymbolId s : syms) atoms.push_back(Formula::symbol(s));
  if (syms.size() == 1) return atoms[0];
  Formula acc = disjoin_all(atoms);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      acc = Formula::conjunction(
          std::move(acc), Formula::negation(Formula::conjunction(atoms[i], atoms[j])));
  return acc;
}

inline Formula exactly_one(std::initializer_list<SymbolId> syms) {
  return exactly_one(std::span<const SymbolId>(syms.begin(), syms.size()));
}

// ---------------------------------------------------------------------------
// Printing
//
// Precedence (loosest to tightest): <->, ->, |, &, !. `->` is
// right-associative, the others left-associative. Parentheses are emitted
// only where re-parsing would otherwise change the tree.

namespace detail {
inline int precedence(Connective k) {
  switch (k) {
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    case Connective::Not: return 5;
    default: return 6;
  }
}
} // namespace detail

inline std::string print(const Formula& f, const SymbolTable& table) {
  if (!f.is_valid()) throw std::invalid_argument("print: empty formula");
  std::string out;
  struct Job {
    const Formula* node; // null => emit text
    int min_prec;
    const char* text;
  };
  std::vector<Job> stack{{&f, 1, nullptr}};
  while (!stack.empty()) {
    Job job = stack.back();
    stack.pop_back();
    if (!job.node) {
      out += job.text;
      continue;
    }
    const Formula& n = *job.node;
    int prec = detail::precedence(n.kind());
    bool parens = prec < job.min_prec;
    switch (n.kind()) {
      case Connective::Symbol:
        out += table.name(n.symbol_id()); // atoms bind tightest, never parenthesized
        continue;
      case Connective::True:
      case Connective::False:
        out += (n.kind() == Connective::True) ? "true" : "false";
        continue;
      case Connective::Not:
        if (parens) {
          out += "(";
          stack.push_back({nullptr, 0, ")"});
        }
        out += "!";
        stack.push_back({&n.left(), 5, nullptr});
        continue;
      default: {
        const char* op = nullptr;
        int lp = 0, rp = 0;
        switch (n.kind()) {
          case Connective::And: op = " & "; lp = 4; rp = 5; break;
          case Connective::Or: op = " | "; lp = 3; rp = 4; break;
          case Connective::Implies: op = " -> "; lp = 3; rp = 2; break;
          case Connective::Iff: op = " <-> "; lp = 1; rp = 2; break;
          default: throw std::logic_error("print: unreachable");
        }
        if (parens) {
          out += "(";
          stack.push_back({nullptr, 0, ")"});
        }
        stack.push_back({&n.right(), rp, nullptr});
        stack.push_back({nullptr, 0, op});
        stack.push_back({&n.left(), lp, nullptr});
        continue;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
//
//   formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" imp)? ;
//   or := and ("|" and)* ; and := not ("&" not)* ;
//   not := "!" not | atom ;
//   atom := IDENT | "true" | "false" | "(" formula ")"
//         | "one(" IDENT ("," IDENT)* ")"
//
// IDENT matches [A-Za-z][A-Za-z0-9_]*; a leading '_' is reserved for
// generated symbols. "true", "false" and "one" are keywords.

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t offset, std::size_t token_index)
      : std::runtime_error(msg), offset_(offset), token_index_(token_index) {}
  std::size_t offset() const { return offset_; }      // 0-based char offset
  std::size_t token_index() const { return token_index_; } // 1-based token number
private:
  std::size_t offset_;
  std::size_t token_index_;
};

namespace detail {

enum class TokKind { Ident, KwTrue, KwFalse, KwOne, Not, And, Or, Implies, Iff, LParen, RParen, Comma, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t offset;
  std::size_t index; // 1-based
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> toks;
  std::size_t i = 0;
  auto push = [&toks](TokKind k, std::string t, std::size_t off) {
    toks.push_back(Token{k, std::move(t), off, toks.size() + 1});
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    std::size_t start = i;
    if (c == '!') { push(TokKind::Not, "!", start); ++i; continue; }
    if (c == '&') { push(TokKind::And, "&", start); ++i; continue; }
    if (c == '|') { push(TokKind::Or, "|", start); ++i; continue; }
    if (c == '(') { push(TokKind::LParen, "(", start); ++i; continue; }
    if (c == ')') { push(TokKind::RParen, ")", start); ++i; continue; }
    if (c == ',') { push(TokKind::Comma, ",", start); ++i; continue; }
    if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        push(TokKind::Implies, "->", start);
        i += 2;
        continue;
      }
      throw ParseError("expected '->' after '-'", start, toks.size() + 1);
    }
    if (c == '<') {
      if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
        push(TokKind::Iff, "<->", start);
        i += 3;
        continue;
      }
      throw ParseError("expected '<->' after '<'", start, toks.size() + 1);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      if (word[0] == '_')
        throw ParseError("identifiers starting with '_' are reserved: '" + word + "'", start,
                         toks.size() + 1);
      if (word == "true") push(TokKind::KwTrue, word, start);
      else if (word == "false") push(TokKind::KwFalse, word, start);
      else if (word == "one") push(TokKind::KwOne, word, start);
      else push(TokKind::Ident, word, start);
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start, toks.size() + 1);
  }
  toks.push_back(Token{TokKind::End, "", text.size(), toks.size() + 1});
  return toks;
}

class Parser {
public:
  Parser(std::vector<Token> toks, SymbolTable& table) : toks_(std::move(toks)), table_(table) {}

  Formula parse_formula() {
    Formula f = parse_iff();
    expect(TokKind::End, "end of input");
    return f;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  Token advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string got = t.kind == TokKind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError("syntax error at token " + std::to_string(t.index) + ": expected " + what +
                         ", got " + got,
                     t.offset, t.index);
  }

  void expect(TokKind k, const std::string& what) {
    if (peek().kind != k) fail(what);
    advance();
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (peek().kind == TokKind::Iff) {
      advance();
      f = Formula::equivalence(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (peek().kind == TokKind::Implies) {
      advance();
      return Formula::implication(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().kind == TokKind::Or) {
      advance();
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_not();
    while (peek().kind == TokKind::And) {
      advance();
      f = Formula::conjunction(std::move(f), parse_not());
    }
    return f;
  }

  Formula parse_not() {
    if (peek().kind == TokKind::Not) {
      advance();
      return Formula::negation(parse_not());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    switch (peek().kind) {
      case TokKind::Ident: {
        Token t = advance();
        return Formula::symbol(table_.intern(t.text));
      }
      case TokKind::KwTrue: advance(); return Formula::verum();
      case TokKind::KwFalse: advance(); return Formula::falsum();
      case TokKind::LParen: {
        advance();
        Formula f = parse_iff();
        expect(TokKind::RParen, "')'");
        return f;
      }
      case TokKind::KwOne: {
        advance();
        expect(TokKind::LParen, "'(' after 'one'");
        std::vector<SymbolId> syms;
        for (;;) {
          if (peek().kind != TokKind::Ident) fail("identifier inside one(...)");
          syms.push_back(table_.intern(advance().text));
          if (peek().kind == TokKind::Comma) { advance(); continue; }
          break;
        }
        expect(TokKind::RParen, "')'");
        const Token& t = toks_[pos_ - 1];
        {
          std::unordered_set<SymbolId> seen(syms.begin(), syms.end());
          if (seen.size() != syms.size())
            throw ParseError("duplicate symbol inside one(...)", t.offset, t.index);
        }
        return exactly_one(syms);
      }
      default:
        fail("a formula");
    }
  }

  std::vector<Token> toks_;
  SymbolTable& table_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses `text` against `table`, interning any new identifiers.
inline Formula parse(std::string_view text, SymbolTable& table) {
  detail::Parser parser(detail::tokenize(text), table);
  return parser.parse_formula();
}

} // namespace plaus
