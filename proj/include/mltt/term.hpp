#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mltt/level.hpp"

namespace mltt {

struct Span {
  std::uint32_t line = 0;
  std::uint32_t column = 0;

  bool known() const { return line != 0; }
};

enum class Builtin {
  Nat,
  Zero,
  Succ,
  NatInd,
  Empty,
  EmptyInd,
  Unit,
  Star,
  UnitInd,
  Sum,
  Inl,
  Inr,
  SumInd,
  Id,
  Refl,
  J,
  Lift,
  LiftIn,
  Lower,
};

inline constexpr std::size_t kBuiltinCount = 19;

std::string_view builtin_name(Builtin b);
std::optional<Builtin> builtin_from_name(std::string_view name);
// Number of universe-level parameters.
std::size_t builtin_level_arity(Builtin b);
// Number of explicit arguments before the constant computes or is canonical.
std::size_t builtin_arity(Builtin b);
bool builtin_is_eliminator(Builtin b);

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Core syntax with namefree variables. Var(0) is the innermost binder.
class Term : public std::enable_shared_from_this<Term> {
 public:
  struct Var {
    std::size_t index;
  };
  struct Universe {
    LevelPtr level;
  };
  struct Pi {
    std::string hint;
    TermPtr domain;
    TermPtr codomain;
  };
  struct Lam {
    std::string hint;
    TermPtr body;
  };
  struct App {
    TermPtr fn;
    TermPtr arg;
  };
  struct Sigma {
    std::string hint;
    TermPtr first;
    TermPtr second;
  };
  struct Pair {
    TermPtr first;
    TermPtr second;
  };
  struct Fst {
    TermPtr pair;
  };
  struct Snd {
    TermPtr pair;
  };
  struct Ascribe {
    TermPtr term;
    TermPtr type;
  };
  struct Const {
    Builtin which;
    std::vector<LevelPtr> levels;
  };
  struct Ref {
    std::string name;
    std::vector<LevelPtr> levels;
  };
  using Node = std::variant<Var, Universe, Pi, Lam, App, Sigma, Pair, Fst, Snd, Ascribe, Const, Ref>;

  Term(Node node, Span span);

  const Node& node() const { return node_; }
  Span span() const { return span_; }
  // Number of enclosing binders the term refers to: one more than its largest free index.
  std::size_t scope() const { return scope_; }

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
  Span span_;
  std::size_t scope_ = 0;
};

// Construction helpers. Spans default to unknown.
TermPtr var(std::size_t index, Span span = {});
TermPtr universe(LevelPtr level, Span span = {});
TermPtr pi(std::string hint, TermPtr domain, TermPtr codomain, Span span = {});
TermPtr lam(std::string hint, TermPtr body, Span span = {});
TermPtr app(TermPtr fn, TermPtr arg, Span span = {});
TermPtr apps(TermPtr fn, const std::vector<TermPtr>& args);
TermPtr sigma(std::string hint, TermPtr first, TermPtr second, Span span = {});
TermPtr pair(TermPtr first, TermPtr second, Span span = {});
TermPtr fst(TermPtr p, Span span = {});
TermPtr snd(TermPtr p, Span span = {});
TermPtr ascribe(TermPtr term, TermPtr type, Span span = {});
TermPtr constant(Builtin which, std::vector<LevelPtr> levels = {}, Span span = {});
TermPtr ref(std::string name, std::vector<LevelPtr> levels = {}, Span span = {});
TermPtr numeral(std::uint64_t n, Span span = {});

// Structural equality up to name hints and level equality. Spans are ignored.
bool syntactic_equal(const Term& a, const Term& b);

// True when Var(depth) (relative to the term's top) occurs free.
bool mentions_var(const Term& t, std::size_t index);

// If t is a closed succ-chain over zero, its value.
std::optional<std::uint64_t> as_numeral(const Term& t);

std::size_t term_size(const Term& t);

}  // namespace mltt
