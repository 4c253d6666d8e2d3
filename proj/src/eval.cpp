#include "mltt/eval.hpp"

#include <algorithm>

#include "mltt/error.hpp"
#include "mltt/overloaded.hpp"

namespace mltt {

namespace {

// Recursion guard; deeper nesting than this is reported as DepthExceeded
// rather than overflowing the native stack.
constexpr std::size_t kMaxNesting = 60'000;

[[noreturn]] void internal(const std::string& what) {
  throw KernelError(ErrorClass::Internal, {}, "internal error: " + what);
}

LevelAssignment bind_levels(const std::vector<std::string>& params, const std::vector<LevelNF>& levels) {
  LevelAssignment a;
  for (std::size_t i = 0; i < params.size() && i < levels.size(); ++i) a.emplace(params[i], levels[i]);
  return a;
}

ValuePtr stuck(Neutral n) { return make_value(Value::Stuck{std::move(n)}); }

ValuePtr extend_spine(const Neutral& n, Elim e) {
  Neutral next = n;
  next.spine.push_back(std::move(e));
  return stuck(std::move(next));
}

}  // namespace

class Evaluator::Nesting {
 public:
  explicit Nesting(Evaluator& ev) : ev_(ev) {
    if (++ev_.nesting_ > kMaxNesting) {
      --ev_.nesting_;
      throw KernelError(ErrorClass::DepthExceeded, {}, "evaluation nested too deeply");
    }
  }
  ~Nesting() { --ev_.nesting_; }
  Nesting(const Nesting&) = delete;
  Nesting& operator=(const Nesting&) = delete;

 private:
  Evaluator& ev_;
};

std::vector<LevelNF> eval_levels(const std::vector<LevelPtr>& levels, const LevelAssignment& assignment) {
  std::vector<LevelNF> out;
  out.reserve(levels.size());
  for (const auto& l : levels) out.push_back(level_normalize(*l, assignment));
  return out;
}

std::vector<LevelPtr> quote_levels(const std::vector<LevelNF>& levels) {
  std::vector<LevelPtr> out;
  out.reserve(levels.size());
  for (const auto& l : levels) out.push_back(l.to_level());
  return out;
}

Evaluator::Evaluator(const GlobalEnv& genv, std::uint64_t budget) : genv_(genv), budget_(budget) {}

void Evaluator::tick() {
  if (++steps_ > budget_) {
    throw KernelError(ErrorClass::DepthExceeded, {},
                      "evaluation budget of " + std::to_string(budget_) + " eliminator steps exceeded");
  }
}

std::size_t Evaluator::EvalKeyHash::operator()(const EvalKey& k) const {
  std::size_t h = std::hash<const Term*>{}(k.term);
  auto mix = [&](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(std::hash<const void*>{}(k.levels));
  for (const Value* v : k.scope) mix(std::hash<const Value*>{}(v));
  return h;
}

ValuePtr Evaluator::eval(const Env& env, const Term& t) {
  if (t.as<Term::Var>()) return eval_node(env, t);
  EvalKey key{&t, env.identity().second, env.prefix(t.scope())};
  if (auto it = eval_cache_.find(key); it != eval_cache_.end()) return it->second.result;
  ValuePtr v = eval_node(env, t);
  eval_cache_.emplace(std::move(key), EvalEntry{env, t.shared_from_this(), v});
  return v;
}

ValuePtr Evaluator::eval_node(const Env& env, const Term& t) {
  Nesting guard(*this);
  return std::visit(
      overloaded{
          [&](const Term::Var& x) -> ValuePtr {
            const ValuePtr* v = env.lookup(x.index);
            if (!v) internal("variable index " + std::to_string(x.index) + " out of scope");
            return *v;
          },
          [&](const Term::Universe& x) -> ValuePtr {
            return make_value(Value::Universe{level_normalize(*x.level, env.levels())});
          },
          [&](const Term::Pi& x) -> ValuePtr {
            return make_value(Value::Pi{x.hint, eval(env, *x.domain), Closure{env, x.codomain}});
          },
          [&](const Term::Lam& x) -> ValuePtr { return make_value(Value::Lam{x.hint, Closure{env, x.body}}); },
          [&](const Term::App& x) -> ValuePtr { return apply(eval(env, *x.fn), eval(env, *x.arg)); },
          [&](const Term::Sigma& x) -> ValuePtr {
            return make_value(Value::Sigma{x.hint, eval(env, *x.first), Closure{env, x.second}});
          },
          [&](const Term::Pair& x) -> ValuePtr {
            return make_value(Value::Pair{eval(env, *x.first), eval(env, *x.second)});
          },
          [&](const Term::Fst& x) -> ValuePtr { return first(eval(env, *x.pair)); },
          [&](const Term::Snd& x) -> ValuePtr { return second(eval(env, *x.pair)); },
          [&](const Term::Ascribe& x) -> ValuePtr { return eval(env, *x.term); },
          [&](const Term::Const& x) -> ValuePtr {
            return make_value(Value::Const{x.which, eval_levels(x.levels, env.levels()), {}});
          },
          [&](const Term::Ref& x) -> ValuePtr {
            const GlobalEntry* entry = genv_.find(x.name);
            if (!entry) internal("unknown global '" + x.name + "'");
            auto levels = eval_levels(x.levels, env.levels());
            if (entry->is_assumption()) return stuck(Neutral{HeadGlobal{x.name, std::move(levels)}, {}});
            return unfold(*entry, levels);
          },
      },
      t.node());
}

ValuePtr Evaluator::unfold(const GlobalEntry& entry, const std::vector<LevelNF>& levels) {
  auto key = std::make_pair(entry.name, levels);
  if (auto it = unfold_cache_.find(key); it != unfold_cache_.end()) return it->second;
  Env env(std::make_shared<const LevelAssignment>(bind_levels(entry.level_params, levels)));
  ValuePtr v = eval(env, *entry.body);
  unfold_cache_.emplace(std::move(key), v);
  return v;
}

std::size_t Evaluator::InstKeyHash::operator()(const InstKey& k) const {
  std::size_t h = std::hash<const void*>{}(k.env.first);
  auto mix = [&](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(std::hash<const void*>{}(k.env.second));
  mix(std::hash<const Term*>{}(k.body));
  mix(std::hash<const Value*>{}(k.arg));
  return h;
}

ValuePtr Evaluator::instantiate(const Closure& c, const ValuePtr& arg) {
  InstKey key{c.env.identity(), c.body.get(), arg.get()};
  if (auto it = inst_cache_.find(key); it != inst_cache_.end()) return it->second.result;
  ValuePtr v = eval(c.env.extend(arg), *c.body);
  inst_cache_.emplace(key, InstEntry{c, arg, v});
  return v;
}

ValuePtr Evaluator::fresh_var(std::size_t depth, const ValuePtr& type) {
  auto key = std::make_pair(depth, type.get());
  if (auto it = var_cache_.find(key); it != var_cache_.end()) return it->second.var;
  ValuePtr v = make_var(depth, type);
  var_cache_.emplace(key, VarEntry{type, v});
  return v;
}

ValuePtr Evaluator::apply(const ValuePtr& fn, const ValuePtr& arg) {
  return std::visit(overloaded{
                        [&](const Value::Lam& f) { return instantiate(f.body, arg); },
                        [&](const Value::Stuck& s) { return extend_spine(s.neutral, ElimApply{arg}); },
                        [&](const Value::Const& c) -> ValuePtr {
                          if (c.saturated()) internal("applying a saturated built-in");
                          return apply_builtin(c, arg);
                        },
                        [&](const auto&) -> ValuePtr { internal("applying a non-function"); },
                    },
                    fn->node());
}

ValuePtr Evaluator::apply_builtin(const Value::Const& c, const ValuePtr& arg) {
  std::vector<ValuePtr> args = c.args;
  args.push_back(arg);
  if (args.size() < builtin_arity(c.which) || !builtin_is_eliminator(c.which)) {
    return make_value(Value::Const{c.which, c.levels, std::move(args)});
  }
  return fire(c.which, c.levels, args);
}

ValuePtr Evaluator::fire(Builtin which, const std::vector<LevelNF>& levels, const std::vector<ValuePtr>& args) {
  const ValuePtr& scrutinee = args.back();
  if (const auto* s = scrutinee->as<Value::Stuck>()) {
    return extend_spine(s->neutral,
                        ElimBuiltin{which, levels, std::vector<ValuePtr>(args.begin(), args.end() - 1)});
  }
  switch (which) {
    case Builtin::NatInd: {
      // Unwind the succ chain, then fold the step function from the base up.
      std::vector<ValuePtr> predecessors;
      ValuePtr n = scrutinee;
      while (const auto* s = n->as_builtin(Builtin::Succ)) {
        predecessors.push_back(s->args[0]);
        n = s->args[0];
      }
      ValuePtr acc;
      if (n->as_builtin(Builtin::Zero)) {
        tick();
        acc = args[1];
      } else if (const auto* s = n->as<Value::Stuck>()) {
        acc = extend_spine(s->neutral, ElimBuiltin{which, levels, {args[0], args[1], args[2]}});
      } else {
        internal("natInd on a non-numeral");
      }
      for (auto it = predecessors.rbegin(); it != predecessors.rend(); ++it) {
        tick();
        acc = apply(apply(args[2], *it), acc);
      }
      return acc;
    }
    case Builtin::UnitInd:
      if (scrutinee->as_builtin(Builtin::Star)) {
        tick();
        return args[1];
      }
      break;
    case Builtin::SumInd:
      if (const auto* c = scrutinee->as_builtin(Builtin::Inl)) {
        tick();
        return apply(args[3], c->args[2]);
      }
      if (const auto* c = scrutinee->as_builtin(Builtin::Inr)) {
        tick();
        return apply(args[4], c->args[2]);
      }
      break;
    case Builtin::J:
      if (scrutinee->as_builtin(Builtin::Refl)) {
        tick();
        return apply(args[2], args[3]);
      }
      break;
    case Builtin::Lower:
      if (const auto* c = scrutinee->as_builtin(Builtin::LiftIn)) {
        tick();
        return c->args[1];
      }
      break;
    default:
      break;
  }
  internal(std::string(builtin_name(which)) + " applied to a non-canonical scrutinee");
}

ValuePtr Evaluator::first(const ValuePtr& v) {
  if (const auto* p = v->as<Value::Pair>()) return p->first;
  if (const auto* s = v->as<Value::Stuck>()) return extend_spine(s->neutral, ElimFirst{});
  internal("fst of a non-pair");
}

ValuePtr Evaluator::second(const ValuePtr& v) {
  if (const auto* p = v->as<Value::Pair>()) return p->second;
  if (const auto* s = v->as<Value::Stuck>()) return extend_spine(s->neutral, ElimSecond{});
  internal("snd of a non-pair");
}

ValuePtr Evaluator::builtin_type(Builtin which, const std::vector<LevelNF>& levels) {
  auto key = std::make_pair(which, levels);
  if (auto it = builtin_type_cache_.find(key); it != builtin_type_cache_.end()) return it->second;
  Env env(std::make_shared<const LevelAssignment>(bind_levels(builtin_level_params(which), levels)));
  ValuePtr v = eval(env, *builtin_signature(which));
  builtin_type_cache_.emplace(std::move(key), v);
  return v;
}

ValuePtr Evaluator::global_type(const GlobalEntry& entry, const std::vector<LevelNF>& levels) {
  Env env(std::make_shared<const LevelAssignment>(bind_levels(entry.level_params, levels)));
  return eval(env, *entry.type);
}

std::size_t Evaluator::QuoteKeyHash::operator()(const QuoteKey& k) const {
  std::size_t h = std::hash<const Value*>{}(k.value);
  h ^= std::hash<std::size_t>{}(k.depth) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<const Value*>{}(k.type) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

TermPtr Evaluator::quote(std::size_t depth, const ValuePtr& v, const ValuePtr& type) {
  QuoteKey key{v.get(), depth, type.get()};
  if (auto it = quote_cache_.find(key); it != quote_cache_.end()) return it->second.term;
  TermPtr t = quote_value(depth, v, type);
  quote_cache_.emplace(key, QuoteEntry{t, v, type});
  return t;
}

TermPtr Evaluator::quote_type(std::size_t depth, const ValuePtr& type) {
  QuoteKey key{type.get(), depth, nullptr};
  if (auto it = quote_cache_.find(key); it != quote_cache_.end()) return it->second.term;
  TermPtr t = quote_type_value(depth, type);
  quote_cache_.emplace(key, QuoteEntry{t, type, nullptr});
  return t;
}

TermPtr Evaluator::quote_value(std::size_t depth, const ValuePtr& v, const ValuePtr& type) {
  Nesting guard(*this);
  if (const auto* p = type->as<Value::Pi>()) {
    ValuePtr x = fresh_var(depth, p->domain);
    ValuePtr body = apply(v, x);
    const auto* l = v->as<Value::Lam>();
    const std::string& hint = l && l->hint != "_" ? l->hint : p->hint;
    return lam(hint, quote(depth + 1, body, instantiate(p->codomain, x)));
  }
  if (const auto* s = type->as<Value::Sigma>()) {
    ValuePtr a = first(v);
    ValuePtr b = second(v);
    return pair(quote(depth, a, s->first), quote(depth, b, instantiate(s->second, a)));
  }
  if (type->as<Value::Universe>()) return quote_type(depth, v);
  if (const auto* lift_type = type->as_builtin(Builtin::Lift)) {
    const ValuePtr& inner_type = lift_type->args[0];
    ValuePtr inner = fire(Builtin::Lower, lift_type->levels, {inner_type, v});
    return apps(constant(Builtin::LiftIn, quote_levels(lift_type->levels)),
                {quote_type(depth, inner_type), quote(depth, inner, inner_type)});
  }
  if (const auto* c = v->as<Value::Const>()) {
    if (!c->saturated()) internal("partially applied built-in at a non-function type");
    return quote_const(depth, *c);
  }
  if (const auto* s = v->as<Value::Stuck>()) return quote_neutral(depth, s->neutral).first;
  internal("value does not inhabit its type during readback");
}

TermPtr Evaluator::quote_type_value(std::size_t depth, const ValuePtr& type) {
  Nesting guard(*this);
  return std::visit(overloaded{
                        [&](const Value::Universe& u) { return universe(u.level.to_level()); },
                        [&](const Value::Pi& p) {
                          ValuePtr x = fresh_var(depth, p.domain);
                          return pi(p.hint, quote_type(depth, p.domain),
                                    quote_type(depth + 1, instantiate(p.codomain, x)));
                        },
                        [&](const Value::Sigma& s) {
                          ValuePtr x = fresh_var(depth, s.first);
                          return sigma(s.hint, quote_type(depth, s.first),
                                       quote_type(depth + 1, instantiate(s.second, x)));
                        },
                        [&](const Value::Const& c) {
                          if (!c.saturated()) internal("partially applied type former");
                          return quote_const(depth, c);
                        },
                        [&](const Value::Stuck& s) { return quote_neutral(depth, s.neutral).first; },
                        [&](const auto&) -> TermPtr { internal("readback of a non-type as a type"); },
                    },
                    type->node());
}

TermPtr Evaluator::quote_const(std::size_t depth, const Value::Const& c) {
  if (c.which == Builtin::Succ) {
    // Iterative so long numerals do not recurse.
    std::size_t n = 1;
    ValuePtr cur = c.args[0];
    while (const auto* s = cur->as_builtin(Builtin::Succ)) {
      ++n;
      cur = s->args[0];
    }
    static const ValuePtr nat = make_value(Value::Const{Builtin::Nat, {}, {}});
    TermPtr t = quote(depth, cur, nat);
    for (std::size_t i = 0; i < n; ++i) t = app(constant(Builtin::Succ), t);
    return t;
  }
  TermPtr t = constant(c.which, quote_levels(c.levels));
  ValuePtr type = builtin_type(c.which, c.levels);
  for (const auto& arg : c.args) {
    const auto* p = type->as<Value::Pi>();
    if (!p) internal("built-in signature too short");
    t = app(t, quote(depth, arg, p->domain));
    type = instantiate(p->codomain, arg);
  }
  return t;
}

std::pair<TermPtr, ValuePtr> Evaluator::quote_neutral(std::size_t depth, const Neutral& n) {
  Nesting guard(*this);
  TermPtr t;
  ValuePtr type;
  std::visit(overloaded{
                 [&](const HeadVar& h) {
                   if (h.level >= depth) internal("neutral variable escapes its scope");
                   t = var(depth - 1 - h.level);
                   type = h.type;
                 },
                 [&](const HeadGlobal& h) {
                   const GlobalEntry* entry = genv_.find(h.name);
                   if (!entry) internal("unknown global '" + h.name + "'");
                   t = ref(h.name, quote_levels(h.levels));
                   type = global_type(*entry, h.levels);
                 },
             },
             n.head);
  Neutral prefix{n.head, {}};
  for (const auto& e : n.spine) {
    std::visit(overloaded{
                   [&](const ElimApply& a) {
                     const auto* p = type->as<Value::Pi>();
                     if (!p) internal("stuck application at a non-function type");
                     t = app(t, quote(depth, a.arg, p->domain));
                     type = instantiate(p->codomain, a.arg);
                   },
                   [&](const ElimFirst&) {
                     const auto* s = type->as<Value::Sigma>();
                     if (!s) internal("stuck projection at a non-pair type");
                     t = fst(t);
                     type = s->first;
                   },
                   [&](const ElimSecond&) {
                     const auto* s = type->as<Value::Sigma>();
                     if (!s) internal("stuck projection at a non-pair type");
                     t = snd(t);
                     type = instantiate(s->second, first(stuck(prefix)));
                   },
                   [&](const ElimBuiltin& b) {
                     TermPtr head = constant(b.which, quote_levels(b.levels));
                     ValuePtr sig = builtin_type(b.which, b.levels);
                     for (const auto& arg : b.args) {
                       const auto* p = sig->as<Value::Pi>();
                       if (!p) internal("built-in signature too short");
                       head = app(head, quote(depth, arg, p->domain));
                       sig = instantiate(p->codomain, arg);
                     }
                     const auto* p = sig->as<Value::Pi>();
                     if (!p) internal("built-in signature too short");
                     t = app(head, t);
                     type = instantiate(p->codomain, stuck(prefix));
                   },
               },
               e);
    prefix.spine.push_back(e);
  }
  return {t, type};
}

}  // namespace mltt
