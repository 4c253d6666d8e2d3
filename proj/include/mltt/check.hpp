#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mltt/env.hpp"
#include "mltt/eval.hpp"
#include "mltt/value.hpp"

namespace mltt {

// Local typing context: binder names and types, the matching evaluation
// environment of fresh variables, and the level parameters in scope.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<std::string> level_params);

  Context extend(std::string name, ValuePtr type) const;

  std::size_t depth() const { return types_.size(); }
  const Env& env() const { return env_; }
  const std::vector<std::string>& names() const { return names_; }
  const ValuePtr& type_of(std::size_t index) const { return types_[types_.size() - 1 - index]; }
  bool has_level(const std::string& name) const;
  const std::vector<std::string>& level_params() const { return level_params_; }

 private:
  std::vector<std::string> names_;
  std::vector<ValuePtr> types_;
  Env env_;
  std::vector<std::string> level_params_;
};

// Bidirectional checker. Conversion is decided by reading both sides back to
// eta-long normal forms and comparing them syntactically.
class Checker {
 public:
  explicit Checker(const GlobalEnv& genv, std::uint64_t budget = kDefaultDepthBudget);

  // Returns the elaborated term (ascriptions erased) and its type.
  std::pair<TermPtr, ValuePtr> infer(const Context& ctx, const TermPtr& t);
  TermPtr check(const Context& ctx, const TermPtr& t, const ValuePtr& expected);
  // Elaborates a type and returns the universe level it lives in.
  std::pair<TermPtr, LevelNF> infer_universe(const Context& ctx, const TermPtr& t);

  // Throws TypeMismatch unless a and b are convertible at `type`.
  void conv(const Context& ctx, const ValuePtr& type, const ValuePtr& a, const ValuePtr& b, Span span = {});
  void conv_types(const Context& ctx, const ValuePtr& expected, const ValuePtr& got, Span span = {});
  bool convertible(const Context& ctx, const ValuePtr& type, const ValuePtr& a, const ValuePtr& b);

  ValuePtr eval(const Context& ctx, const TermPtr& t) { return ev_.eval(ctx.env(), *t); }
  TermPtr normalize(const Context& ctx, const TermPtr& t, const ValuePtr& type);
  std::string show_type(const Context& ctx, const ValuePtr& type);

  Evaluator& evaluator() { return ev_; }

 private:
  std::pair<TermPtr, ValuePtr> infer_node(const Context& ctx, const TermPtr& t);
  TermPtr check_node(const Context& ctx, const TermPtr& t, const ValuePtr& expected);
  void check_levels(const Context& ctx, const std::vector<LevelPtr>& levels, Span span);

  const GlobalEnv& genv_;
  Evaluator ev_;
};

// Checks a declaration and returns the extended environment.
GlobalEnv check_decl(const GlobalEnv& genv, const Declaration& decl, bool safe_mode,
                     std::uint64_t budget = kDefaultDepthBudget);

// Infers the signature of every built-in against itself; throws on failure.
void verify_builtin_signatures();

}  // namespace mltt
