#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mltt/env.hpp"
#include "mltt/level.hpp"
#include "mltt/term.hpp"

namespace mltt {

class Value;
using ValuePtr = std::shared_ptr<const Value>;

// Persistent list of values, innermost binder first.
class Env {
 public:
  Env() : levels_(std::make_shared<const LevelAssignment>()) {}
  explicit Env(std::shared_ptr<const LevelAssignment> levels) : levels_(std::move(levels)) {}

  Env extend(ValuePtr v) const;
  // Value bound to de Bruijn index i, or null when out of range.
  const ValuePtr* lookup(std::size_t index) const;
  const LevelAssignment& levels() const { return *levels_; }
  // The n innermost values, innermost first.
  std::vector<const Value*> prefix(std::size_t n) const;
  std::size_t size() const { return size_; }
  // Identifies this environment: equal identities mean identical bindings.
  std::pair<const void*, const void*> identity() const { return {head_.get(), levels_.get()}; }

 private:
  struct Node {
    ValuePtr value;
    std::shared_ptr<const Node> next;
  };
  std::shared_ptr<const Node> head_;
  std::size_t size_ = 0;
  std::shared_ptr<const LevelAssignment> levels_;
};

struct Closure {
  Env env;
  TermPtr body;
};

// Head of a stuck term: a local variable (by de Bruijn level) or an assumption.
struct HeadVar {
  std::size_t level;
  ValuePtr type;
};
struct HeadGlobal {
  std::string name;
  std::vector<LevelNF> levels;
};

struct ElimApply {
  ValuePtr arg;
};
struct ElimFirst {};
struct ElimSecond {};
// A built-in eliminator stuck on this neutral as its final (scrutinee) argument.
struct ElimBuiltin {
  Builtin which;
  std::vector<LevelNF> levels;
  std::vector<ValuePtr> args;
};
using Elim = std::variant<ElimApply, ElimFirst, ElimSecond, ElimBuiltin>;

struct Neutral {
  std::variant<HeadVar, HeadGlobal> head;
  std::vector<Elim> spine;
};

class Value {
 public:
  struct Universe {
    LevelNF level;
  };
  struct Pi {
    std::string hint;
    ValuePtr domain;
    Closure codomain;
  };
  struct Lam {
    std::string hint;
    Closure body;
  };
  struct Sigma {
    std::string hint;
    ValuePtr first;
    Closure second;
  };
  struct Pair {
    ValuePtr first;
    ValuePtr second;
  };
  // A built-in applied to fewer arguments than its arity, or a saturated
  // type former / constructor (Nat, succ n, inl X Y x, refl X x, lift X x, ...).
  struct Const {
    Builtin which;
    std::vector<LevelNF> levels;
    std::vector<ValuePtr> args;

    bool saturated() const { return args.size() == builtin_arity(which); }
  };
  struct Stuck {
    Neutral neutral;
  };
  using Node = std::variant<Universe, Pi, Lam, Sigma, Pair, Const, Stuck>;

  explicit Value(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node_);
  }

  // Saturated built-in of the given kind, if this is one.
  const Const* as_builtin(Builtin which) const;

 private:
  Node node_;
};

ValuePtr make_value(Value::Node node);
ValuePtr make_var(std::size_t level, ValuePtr type);

}  // namespace mltt
