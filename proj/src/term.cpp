#include "mltt/term.hpp"

#include <algorithm>
#include <array>

#include "mltt/overloaded.hpp"

namespace mltt {

namespace {

struct BuiltinInfo {
  Builtin which;
  std::string_view name;
  std::size_t level_arity;
  std::size_t arity;
  bool eliminator;
};

constexpr std::array<BuiltinInfo, kBuiltinCount> kBuiltins{{
    {Builtin::Nat, "Nat", 0, 0, false},
    {Builtin::Zero, "zero", 0, 0, false},
    {Builtin::Succ, "succ", 0, 1, false},
    {Builtin::NatInd, "natInd", 1, 4, true},
    {Builtin::Empty, "Empty", 0, 0, false},
    {Builtin::EmptyInd, "emptyInd", 1, 2, true},
    {Builtin::Unit, "Unit", 0, 0, false},
    {Builtin::Star, "star", 0, 0, false},
    {Builtin::UnitInd, "unitInd", 1, 3, true},
    {Builtin::Sum, "Sum", 2, 2, false},
    {Builtin::Inl, "inl", 2, 3, false},
    {Builtin::Inr, "inr", 2, 3, false},
    {Builtin::SumInd, "sumInd", 3, 6, true},
    {Builtin::Id, "Id", 1, 3, false},
    {Builtin::Refl, "refl", 1, 2, false},
    {Builtin::J, "J", 2, 6, true},
    {Builtin::Lift, "Lift", 2, 1, false},
    {Builtin::LiftIn, "lift", 2, 2, false},
    {Builtin::Lower, "lower", 2, 2, true},
}};

const BuiltinInfo& info(Builtin b) { return kBuiltins[static_cast<std::size_t>(b)]; }

}  // namespace

std::string_view builtin_name(Builtin b) { return info(b).name; }

std::optional<Builtin> builtin_from_name(std::string_view name) {
  for (const auto& i : kBuiltins) {
    if (i.name == name) return i.which;
  }
  return std::nullopt;
}

std::size_t builtin_level_arity(Builtin b) { return info(b).level_arity; }
std::size_t builtin_arity(Builtin b) { return info(b).arity; }
bool builtin_is_eliminator(Builtin b) { return info(b).eliminator; }

namespace {

std::size_t under_binder(const TermPtr& t) { return t->scope() > 0 ? t->scope() - 1 : 0; }

}  // namespace

Term::Term(Node node, Span span) : node_(std::move(node)), span_(span) {
  scope_ = std::visit(overloaded{
                          [](const Var& x) { return x.index + 1; },
                          [](const Pi& x) { return std::max(x.domain->scope(), under_binder(x.codomain)); },
                          [](const Lam& x) { return under_binder(x.body); },
                          [](const App& x) { return std::max(x.fn->scope(), x.arg->scope()); },
                          [](const Sigma& x) { return std::max(x.first->scope(), under_binder(x.second)); },
                          [](const Pair& x) { return std::max(x.first->scope(), x.second->scope()); },
                          [](const Fst& x) { return x.pair->scope(); },
                          [](const Snd& x) { return x.pair->scope(); },
                          [](const Ascribe& x) { return std::max(x.term->scope(), x.type->scope()); },
                          [](const auto&) -> std::size_t { return 0; },
                      },
                      node_);
}

TermPtr var(std::size_t index, Span span) { return std::make_shared<const Term>(Term::Var{index}, span); }

TermPtr universe(LevelPtr level, Span span) {
  return std::make_shared<const Term>(Term::Universe{std::move(level)}, span);
}

TermPtr pi(std::string hint, TermPtr domain, TermPtr codomain, Span span) {
  return std::make_shared<const Term>(Term::Pi{std::move(hint), std::move(domain), std::move(codomain)}, span);
}

TermPtr lam(std::string hint, TermPtr body, Span span) {
  return std::make_shared<const Term>(Term::Lam{std::move(hint), std::move(body)}, span);
}

TermPtr app(TermPtr fn, TermPtr arg, Span span) {
  return std::make_shared<const Term>(Term::App{std::move(fn), std::move(arg)}, span);
}

TermPtr apps(TermPtr fn, const std::vector<TermPtr>& args) {
  for (const auto& a : args) {
    Span s = fn->span();
    fn = app(std::move(fn), a, s);
  }
  return fn;
}

TermPtr sigma(std::string hint, TermPtr first, TermPtr second, Span span) {
  return std::make_shared<const Term>(Term::Sigma{std::move(hint), std::move(first), std::move(second)}, span);
}

TermPtr pair(TermPtr first, TermPtr second, Span span) {
  return std::make_shared<const Term>(Term::Pair{std::move(first), std::move(second)}, span);
}

TermPtr fst(TermPtr p, Span span) { return std::make_shared<const Term>(Term::Fst{std::move(p)}, span); }

TermPtr snd(TermPtr p, Span span) { return std::make_shared<const Term>(Term::Snd{std::move(p)}, span); }

TermPtr ascribe(TermPtr term, TermPtr type, Span span) {
  return std::make_shared<const Term>(Term::Ascribe{std::move(term), std::move(type)}, span);
}

TermPtr constant(Builtin which, std::vector<LevelPtr> levels, Span span) {
  return std::make_shared<const Term>(Term::Const{which, std::move(levels)}, span);
}

TermPtr ref(std::string name, std::vector<LevelPtr> levels, Span span) {
  return std::make_shared<const Term>(Term::Ref{std::move(name), std::move(levels)}, span);
}

TermPtr numeral(std::uint64_t n, Span span) {
  TermPtr t = constant(Builtin::Zero, {}, span);
  for (std::uint64_t i = 0; i < n; ++i) t = app(constant(Builtin::Succ, {}, span), t, span);
  return t;
}

namespace {

bool levels_equal(const std::vector<LevelPtr>& a, const std::vector<LevelPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!level_equal(*a[i], *b[i])) return false;
  }
  return true;
}

}  // namespace

bool syntactic_equal(const Term& a, const Term& b) {
  if (&a == &b) return true;
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      overloaded{
          [&](const Term::Var& x) { return x.index == b.as<Term::Var>()->index; },
          [&](const Term::Universe& x) { return level_equal(*x.level, *b.as<Term::Universe>()->level); },
          [&](const Term::Pi& x) {
            const auto& y = *b.as<Term::Pi>();
            return syntactic_equal(*x.domain, *y.domain) && syntactic_equal(*x.codomain, *y.codomain);
          },
          [&](const Term::Lam& x) { return syntactic_equal(*x.body, *b.as<Term::Lam>()->body); },
          [&](const Term::App& x) {
            const auto& y = *b.as<Term::App>();
            return syntactic_equal(*x.fn, *y.fn) && syntactic_equal(*x.arg, *y.arg);
          },
          [&](const Term::Sigma& x) {
            const auto& y = *b.as<Term::Sigma>();
            return syntactic_equal(*x.first, *y.first) && syntactic_equal(*x.second, *y.second);
          },
          [&](const Term::Pair& x) {
            const auto& y = *b.as<Term::Pair>();
            return syntactic_equal(*x.first, *y.first) && syntactic_equal(*x.second, *y.second);
          },
          [&](const Term::Fst& x) { return syntactic_equal(*x.pair, *b.as<Term::Fst>()->pair); },
          [&](const Term::Snd& x) { return syntactic_equal(*x.pair, *b.as<Term::Snd>()->pair); },
          [&](const Term::Ascribe& x) {
            const auto& y = *b.as<Term::Ascribe>();
            return syntactic_equal(*x.term, *y.term) && syntactic_equal(*x.type, *y.type);
          },
          [&](const Term::Const& x) {
            const auto& y = *b.as<Term::Const>();
            return x.which == y.which && levels_equal(x.levels, y.levels);
          },
          [&](const Term::Ref& x) {
            const auto& y = *b.as<Term::Ref>();
            return x.name == y.name && levels_equal(x.levels, y.levels);
          },
      },
      a.node());
}

bool mentions_var(const Term& t, std::size_t index) {
  return std::visit(overloaded{
                        [&](const Term::Var& x) { return x.index == index; },
                        [](const Term::Universe&) { return false; },
                        [&](const Term::Pi& x) {
                          return mentions_var(*x.domain, index) || mentions_var(*x.codomain, index + 1);
                        },
                        [&](const Term::Lam& x) { return mentions_var(*x.body, index + 1); },
                        [&](const Term::App& x) { return mentions_var(*x.fn, index) || mentions_var(*x.arg, index); },
                        [&](const Term::Sigma& x) {
                          return mentions_var(*x.first, index) || mentions_var(*x.second, index + 1);
                        },
                        [&](const Term::Pair& x) {
                          return mentions_var(*x.first, index) || mentions_var(*x.second, index);
                        },
                        [&](const Term::Fst& x) { return mentions_var(*x.pair, index); },
                        [&](const Term::Snd& x) { return mentions_var(*x.pair, index); },
                        [&](const Term::Ascribe& x) {
                          return mentions_var(*x.term, index) || mentions_var(*x.type, index);
                        },
                        [](const Term::Const&) { return false; },
                        [](const Term::Ref&) { return false; },
                    },
                    t.node());
}

std::optional<std::uint64_t> as_numeral(const Term& t) {
  std::uint64_t n = 0;
  const Term* cur = &t;
  while (true) {
    if (const auto* c = cur->as<Term::Const>(); c && c->which == Builtin::Zero) return n;
    const auto* a = cur->as<Term::App>();
    if (!a) return std::nullopt;
    const auto* head = a->fn->as<Term::Const>();
    if (!head || head->which != Builtin::Succ) return std::nullopt;
    ++n;
    cur = a->arg.get();
  }
}

std::size_t term_size(const Term& t) {
  return std::visit(overloaded{
                        [](const Term::Var&) -> std::size_t { return 1; },
                        [](const Term::Universe&) -> std::size_t { return 1; },
                        [](const Term::Pi& x) { return 1 + term_size(*x.domain) + term_size(*x.codomain); },
                        [](const Term::Lam& x) { return 1 + term_size(*x.body); },
                        [](const Term::App& x) { return 1 + term_size(*x.fn) + term_size(*x.arg); },
                        [](const Term::Sigma& x) { return 1 + term_size(*x.first) + term_size(*x.second); },
                        [](const Term::Pair& x) { return 1 + term_size(*x.first) + term_size(*x.second); },
                        [](const Term::Fst& x) { return 1 + term_size(*x.pair); },
                        [](const Term::Snd& x) { return 1 + term_size(*x.pair); },
                        [](const Term::Ascribe& x) { return 1 + term_size(*x.term) + term_size(*x.type); },
                        [](const Term::Const&) -> std::size_t { return 1; },
                        [](const Term::Ref&) -> std::size_t { return 1; },
                    },
                    t.node());
}

}  // namespace mltt
