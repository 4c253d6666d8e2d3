#include "mltt/check.hpp"

#include <algorithm>

#include "mltt/error.hpp"
#include "mltt/overloaded.hpp"
#include "mltt/syntax.hpp"

namespace mltt {

Context::Context(std::vector<std::string> level_params) : level_params_(std::move(level_params)) {}

Context Context::extend(std::string name, ValuePtr type) const {
  Context next = *this;
  next.env_ = env_.extend(make_var(depth(), type));
  next.names_.push_back(std::move(name));
  next.types_.push_back(std::move(type));
  return next;
}

bool Context::has_level(const std::string& name) const {
  return std::find(level_params_.begin(), level_params_.end(), name) != level_params_.end();
}

Checker::Checker(const GlobalEnv& genv, std::uint64_t budget) : genv_(genv), ev_(genv, budget) {}

std::string Checker::show_type(const Context& ctx, const ValuePtr& type) {
  return print_term(*ev_.quote_type(ctx.depth(), type), ctx.names());
}

void Checker::check_levels(const Context& ctx, const std::vector<LevelPtr>& levels, Span span) {
  for (const auto& l : levels) {
    for_each_level_var(*l, [&](const std::string& name) {
      if (!ctx.has_level(name)) {
        throw KernelError(ErrorClass::UnboundName, span, "unbound level variable '" + name + "'");
      }
    });
  }
}

std::pair<TermPtr, ValuePtr> Checker::infer(const Context& ctx, const TermPtr& t) {
  try {
    return infer_node(ctx, t);
  } catch (KernelError& e) {
    e.locate(t->span());
    throw;
  }
}

TermPtr Checker::check(const Context& ctx, const TermPtr& t, const ValuePtr& expected) {
  try {
    return check_node(ctx, t, expected);
  } catch (KernelError& e) {
    e.locate(t->span());
    throw;
  }
}

std::pair<TermPtr, LevelNF> Checker::infer_universe(const Context& ctx, const TermPtr& t) {
  auto [elab, type] = infer(ctx, t);
  const auto* u = type->as<Value::Universe>();
  if (!u) {
    throw KernelError(ErrorClass::NotAUniverse, t->span(),
                      "expected a type, but this term has type " + show_type(ctx, type));
  }
  return {elab, u->level};
}

std::pair<TermPtr, ValuePtr> Checker::infer_node(const Context& ctx, const TermPtr& t) {
  Span span = t->span();
  return std::visit(
      overloaded{
          [&](const Term::Var& x) -> std::pair<TermPtr, ValuePtr> {
            if (x.index >= ctx.depth()) throw KernelError(ErrorClass::Internal, span, "variable out of scope");
            return {t, ctx.type_of(x.index)};
          },
          [&](const Term::Universe& x) -> std::pair<TermPtr, ValuePtr> {
            check_levels(ctx, {x.level}, span);
            return {t, make_value(Value::Universe{level_normalize(*x.level).suc()})};
          },
          [&](const Term::Pi& x) -> std::pair<TermPtr, ValuePtr> {
            auto [dom, u] = infer_universe(ctx, x.domain);
            Context inner = ctx.extend(x.hint, eval(ctx, dom));
            auto [cod, v] = infer_universe(inner, x.codomain);
            return {pi(x.hint, dom, cod, span), make_value(Value::Universe{u.max(v)})};
          },
          [&](const Term::Sigma& x) -> std::pair<TermPtr, ValuePtr> {
            auto [first, u] = infer_universe(ctx, x.first);
            Context inner = ctx.extend(x.hint, eval(ctx, first));
            auto [second, v] = infer_universe(inner, x.second);
            return {sigma(x.hint, first, second, span), make_value(Value::Universe{u.max(v)})};
          },
          [&](const Term::App& x) -> std::pair<TermPtr, ValuePtr> {
            auto [fn, fn_type] = infer(ctx, x.fn);
            const auto* p = fn_type->as<Value::Pi>();
            if (!p) {
              throw KernelError(ErrorClass::NotAFunction, x.fn->span(),
                                "this term is applied but has non-function type " + show_type(ctx, fn_type));
            }
            TermPtr arg = check(ctx, x.arg, p->domain);
            return {app(fn, arg, span), ev_.instantiate(p->codomain, eval(ctx, arg))};
          },
          [&](const Term::Fst& x) -> std::pair<TermPtr, ValuePtr> {
            auto [p, type] = infer(ctx, x.pair);
            const auto* s = type->as<Value::Sigma>();
            if (!s) {
              throw KernelError(ErrorClass::NotAPair, x.pair->span(),
                                "fst of a term with non-pair type " + show_type(ctx, type));
            }
            return {fst(p, span), s->first};
          },
          [&](const Term::Snd& x) -> std::pair<TermPtr, ValuePtr> {
            auto [p, type] = infer(ctx, x.pair);
            const auto* s = type->as<Value::Sigma>();
            if (!s) {
              throw KernelError(ErrorClass::NotAPair, x.pair->span(),
                                "snd of a term with non-pair type " + show_type(ctx, type));
            }
            return {snd(p, span), ev_.instantiate(s->second, ev_.first(eval(ctx, p)))};
          },
          [&](const Term::Ascribe& x) -> std::pair<TermPtr, ValuePtr> {
            auto [type, level] = infer_universe(ctx, x.type);
            ValuePtr tv = eval(ctx, type);
            return {check(ctx, x.term, tv), tv};
          },
          [&](const Term::Const& x) -> std::pair<TermPtr, ValuePtr> {
            std::size_t want = builtin_level_arity(x.which);
            if (x.levels.size() != want) {
              throw KernelError(ErrorClass::LevelArityMismatch, span,
                                std::string(builtin_name(x.which)) + " takes " + std::to_string(want) +
                                    " level argument(s) but was given " + std::to_string(x.levels.size()));
            }
            check_levels(ctx, x.levels, span);
            return {t, ev_.builtin_type(x.which, eval_levels(x.levels, {}))};
          },
          [&](const Term::Ref& x) -> std::pair<TermPtr, ValuePtr> {
            const GlobalEntry* entry = genv_.find(x.name);
            if (!entry) throw KernelError(ErrorClass::UnboundName, span, "unbound name '" + x.name + "'");
            if (x.levels.size() != entry->level_params.size()) {
              throw KernelError(ErrorClass::LevelArityMismatch, span,
                                x.name + " takes " + std::to_string(entry->level_params.size()) +
                                    " level argument(s) but was given " + std::to_string(x.levels.size()));
            }
            check_levels(ctx, x.levels, span);
            return {t, ev_.global_type(*entry, eval_levels(x.levels, {}))};
          },
          [&](const Term::Lam&) -> std::pair<TermPtr, ValuePtr> {
            throw KernelError(ErrorClass::CheckOnlyTermInInferPosition, span,
                              "cannot infer the type of a lambda; add a type ascription");
          },
          [&](const Term::Pair&) -> std::pair<TermPtr, ValuePtr> {
            throw KernelError(ErrorClass::CheckOnlyTermInInferPosition, span,
                              "cannot infer the type of a pair; add a type ascription");
          },
      },
      t->node());
}

TermPtr Checker::check_node(const Context& ctx, const TermPtr& t, const ValuePtr& expected) {
  Span span = t->span();
  if (const auto* l = t->as<Term::Lam>()) {
    const auto* p = expected->as<Value::Pi>();
    if (!p) {
      throw KernelError(ErrorClass::TypeMismatch, span, "a lambda is checked against a non-function type",
                        show_type(ctx, expected), "a function type");
    }
    Context inner = ctx.extend(l->hint, p->domain);
    ValuePtr x = *inner.env().lookup(0);
    return lam(l->hint, check(inner, l->body, ev_.instantiate(p->codomain, x)), span);
  }
  if (const auto* pr = t->as<Term::Pair>()) {
    const auto* s = expected->as<Value::Sigma>();
    if (!s) {
      throw KernelError(ErrorClass::TypeMismatch, span, "a pair is checked against a non-pair type",
                        show_type(ctx, expected), "a pair type");
    }
    TermPtr a = check(ctx, pr->first, s->first);
    TermPtr b = check(ctx, pr->second, ev_.instantiate(s->second, eval(ctx, a)));
    return pair(a, b, span);
  }
  auto [elab, got] = infer(ctx, t);
  conv_types(ctx, expected, got, span);
  return elab;
}

bool Checker::convertible(const Context& ctx, const ValuePtr& type, const ValuePtr& a, const ValuePtr& b) {
  if (a == b) return true;
  return syntactic_equal(*ev_.quote(ctx.depth(), a, type), *ev_.quote(ctx.depth(), b, type));
}

void Checker::conv(const Context& ctx, const ValuePtr& type, const ValuePtr& a, const ValuePtr& b, Span span) {
  if (a == b) return;
  TermPtr qa = ev_.quote(ctx.depth(), a, type);
  TermPtr qb = ev_.quote(ctx.depth(), b, type);
  if (!syntactic_equal(*qa, *qb)) {
    throw KernelError(ErrorClass::TypeMismatch, span, "terms are not definitionally equal",
                      print_term(*qa, ctx.names()), print_term(*qb, ctx.names()));
  }
}

void Checker::conv_types(const Context& ctx, const ValuePtr& expected, const ValuePtr& got, Span span) {
  if (expected == got) return;
  TermPtr qe = ev_.quote_type(ctx.depth(), expected);
  TermPtr qg = ev_.quote_type(ctx.depth(), got);
  if (!syntactic_equal(*qe, *qg)) {
    throw KernelError(ErrorClass::TypeMismatch, span, "type mismatch", print_term(*qe, ctx.names()),
                      print_term(*qg, ctx.names()));
  }
}

TermPtr Checker::normalize(const Context& ctx, const TermPtr& t, const ValuePtr& type) {
  return ev_.quote(ctx.depth(), eval(ctx, t), type);
}

GlobalEnv check_decl(const GlobalEnv& genv, const Declaration& decl, bool safe_mode, std::uint64_t budget) {
  try {
    if (decl.kind == Declaration::Kind::Assume && safe_mode) {
      throw KernelError(ErrorClass::UnsafeAssume, decl.span,
                        "assumption '" + decl.name + "' is not allowed in safe mode");
    }
    if (genv.contains(decl.name)) {
      throw KernelError(ErrorClass::UnboundName, decl.span, "duplicate definition of '" + decl.name + "'");
    }
    for (std::size_t i = 0; i < decl.level_params.size(); ++i) {
      for (std::size_t j = i + 1; j < decl.level_params.size(); ++j) {
        if (decl.level_params[i] == decl.level_params[j]) {
          throw KernelError(ErrorClass::ParseError, decl.span,
                            "duplicate level parameter '" + decl.level_params[i] + "'");
        }
      }
    }
    Checker checker(genv, budget);
    Context ctx(decl.level_params);
    auto [type, level] = checker.infer_universe(ctx, decl.type);
    TermPtr body;
    if (decl.kind == Declaration::Kind::Def) body = checker.check(ctx, decl.body, checker.eval(ctx, type));
    return genv.extend(GlobalEntry{decl.name, decl.level_params, type, body, decl.span});
  } catch (KernelError& e) {
    e.locate(decl.span);
    throw;
  }
}

void verify_builtin_signatures() {
  GlobalEnv empty;
  for (std::size_t i = 0; i < kBuiltinCount; ++i) {
    auto b = static_cast<Builtin>(i);
    Checker checker(empty);
    Context ctx(builtin_level_params(b));
    checker.infer_universe(ctx, builtin_signature(b));
  }
}

}  // namespace mltt
