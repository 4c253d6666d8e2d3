#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>

#include "mltt/env.hpp"
#include "mltt/value.hpp"

namespace mltt {

inline constexpr std::uint64_t kDefaultDepthBudget = 1'000'000;

// Normalization by evaluation against a fixed global environment.
//
// Terms are evaluated into Values; built-in eliminators compute as soon as
// their scrutinee is canonical and otherwise extend a neutral spine. Readback
// is type-directed and eta-expands at Pi, Sigma and Lift.
//
// An Evaluator is not thread-safe (it owns a cache of unfolded definitions
// and the step counter); use one per thread.
class Evaluator {
 public:
  explicit Evaluator(const GlobalEnv& genv, std::uint64_t budget = kDefaultDepthBudget);

  const GlobalEnv& globals() const { return genv_; }

  ValuePtr eval(const Env& env, const Term& t);
  ValuePtr apply(const ValuePtr& fn, const ValuePtr& arg);
  ValuePtr instantiate(const Closure& c, const ValuePtr& arg);
  ValuePtr first(const ValuePtr& v);
  ValuePtr second(const ValuePtr& v);

  TermPtr quote(std::size_t depth, const ValuePtr& v, const ValuePtr& type);
  TermPtr quote_type(std::size_t depth, const ValuePtr& type);

  // Type of a built-in or global at the given level arguments.
  ValuePtr builtin_type(Builtin which, const std::vector<LevelNF>& levels);
  ValuePtr global_type(const GlobalEntry& entry, const std::vector<LevelNF>& levels);

  std::uint64_t steps() const { return steps_; }

 private:
  ValuePtr apply_builtin(const Value::Const& c, const ValuePtr& arg);
  ValuePtr fire(Builtin which, const std::vector<LevelNF>& levels, const std::vector<ValuePtr>& args);
  ValuePtr unfold(const GlobalEntry& entry, const std::vector<LevelNF>& levels);
  TermPtr quote_value(std::size_t depth, const ValuePtr& v, const ValuePtr& type);
  TermPtr quote_type_value(std::size_t depth, const ValuePtr& type);
  TermPtr quote_const(std::size_t depth, const Value::Const& c);
  std::pair<TermPtr, ValuePtr> quote_neutral(std::size_t depth, const Neutral& n);
  void tick();
  ValuePtr eval_node(const Env& env, const Term& t);
  ValuePtr fresh_var(std::size_t depth, const ValuePtr& type);

  class Nesting;

  const GlobalEnv& genv_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::size_t nesting_ = 0;
  std::map<std::pair<std::string, std::vector<LevelNF>>, ValuePtr> unfold_cache_;
  std::map<std::pair<Builtin, std::vector<LevelNF>>, ValuePtr> builtin_type_cache_;

  // Readback is a function of (value, depth, type), so repeated occurrences of
  // one value object share a single quoted term. The entry keeps both values
  // alive so their addresses cannot be reused.
  struct QuoteKey {
    const Value* value;
    std::size_t depth;
    const Value* type;  // null for readback as a type
    bool operator==(const QuoteKey&) const = default;
  };
  struct QuoteKeyHash {
    std::size_t operator()(const QuoteKey& k) const;
  };
  struct QuoteEntry {
    TermPtr term;
    ValuePtr value;
    ValuePtr type;
  };
  std::unordered_map<QuoteKey, QuoteEntry, QuoteKeyHash> quote_cache_;

  // Readback variables are shared per (depth, type) and closure instantiation
  // is memoized on (closure, argument), so readback of one value under one
  // binder reuses value objects and hits the quote cache. Entries keep their
  // keys alive.
  struct VarEntry {
    ValuePtr type;
    ValuePtr var;
  };
  std::map<std::pair<std::size_t, const Value*>, VarEntry> var_cache_;
  struct InstKey {
    std::pair<const void*, const void*> env;
    const Term* body;
    const Value* arg;
    bool operator==(const InstKey&) const = default;
  };
  struct InstKeyHash {
    std::size_t operator()(const InstKey& k) const;
  };
  struct InstEntry {
    Closure closure;
    ValuePtr arg;
    ValuePtr result;
  };
  std::unordered_map<InstKey, InstEntry, InstKeyHash> inst_cache_;

  // Evaluation of one term node, keyed on the values of the variables it
  // actually uses, so a term that shares subterms (such as a normal form read
  // back through the quote cache) evaluates each shared node once even when it
  // occurs under different binders.
  struct EvalKey {
    const Term* term;
    const void* levels;
    std::vector<const Value*> scope;
    bool operator==(const EvalKey&) const = default;
  };
  struct EvalKeyHash {
    std::size_t operator()(const EvalKey& k) const;
  };
  struct EvalEntry {
    Env env;
    TermPtr term;
    ValuePtr result;
  };
  std::unordered_map<EvalKey, EvalEntry, EvalKeyHash> eval_cache_;
};

std::vector<LevelNF> eval_levels(const std::vector<LevelPtr>& levels, const LevelAssignment& assignment);
std::vector<LevelPtr> quote_levels(const std::vector<LevelNF>& levels);

// Signature of each built-in, as a closed term over level variables u, v, w.
const TermPtr& builtin_signature(Builtin which);
const std::vector<std::string>& builtin_level_params(Builtin which);

}  // namespace mltt
