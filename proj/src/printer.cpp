#include <algorithm>
#include <set>
#include <sstream>

#include "mltt/overloaded.hpp"
#include "mltt/syntax.hpp"

namespace mltt {

namespace {

enum Prec { kTerm = 0, kSigmaOperand = 1, kApp = 2, kAtom = 3 };

void collect_refs(const Term& t, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Term::Ref& r) { out.insert(r.name); },
                 [&](const Term::Pi& x) {
                   collect_refs(*x.domain, out);
                   collect_refs(*x.codomain, out);
                 },
                 [&](const Term::Lam& x) { collect_refs(*x.body, out); },
                 [&](const Term::App& x) {
                   collect_refs(*x.fn, out);
                   collect_refs(*x.arg, out);
                 },
                 [&](const Term::Sigma& x) {
                   collect_refs(*x.first, out);
                   collect_refs(*x.second, out);
                 },
                 [&](const Term::Pair& x) {
                   collect_refs(*x.first, out);
                   collect_refs(*x.second, out);
                 },
                 [&](const Term::Fst& x) { collect_refs(*x.pair, out); },
                 [&](const Term::Snd& x) { collect_refs(*x.pair, out); },
                 [&](const Term::Ascribe& x) {
                   collect_refs(*x.term, out);
                   collect_refs(*x.type, out);
                 },
                 [](const auto&) {},
             },
             t.node());
}

void print_level_to(std::ostream& os, const Level& l, bool atomic) {
  std::visit(overloaded{
                 [&](const Level::Zero&) { os << "lzero"; },
                 [&](const Level::Var& v) { os << v.name; },
                 [&](const Level::Suc& s) {
                   if (atomic) os << '(';
                   os << "lsuc ";
                   print_level_to(os, *s.inner, true);
                   if (atomic) os << ')';
                 },
                 [&](const Level::Max& m) {
                   if (atomic) os << '(';
                   os << "lmax ";
                   print_level_to(os, *m.lhs, true);
                   os << ' ';
                   print_level_to(os, *m.rhs, true);
                   if (atomic) os << ')';
                 },
             },
             l.node());
}

class Printer {
 public:
  Printer(std::vector<std::string> names, std::set<std::string> globals)
      : names_(std::move(names)), globals_(std::move(globals)) {}

  void print(const Term& t, int prec) {
    std::visit(overloaded{
                   [&](const Term::Var& x) {
                     if (x.index < names_.size()) {
                       os_ << names_[names_.size() - 1 - x.index];
                     } else {
                       os_ << "#" << x.index;
                     }
                   },
                   [&](const Term::Universe& x) {
                     open(prec > kApp);
                     os_ << "U ";
                     print_level_to(os_, *x.level, true);
                     close(prec > kApp);
                   },
                   [&](const Term::Pi& x) {
                     open(prec > kTerm);
                     if (mentions_var(*x.codomain, 0)) {
                       std::string n = fresh(x.hint);
                       os_ << '(' << n << " : ";
                       print(*x.domain, kTerm);
                       os_ << ") -> ";
                       names_.push_back(n);
                     } else {
                       print(*x.domain, kSigmaOperand);
                       os_ << " -> ";
                       names_.push_back("_");
                     }
                     print(*x.codomain, kTerm);
                     names_.pop_back();
                     close(prec > kTerm);
                   },
                   [&](const Term::Lam&) {
                     open(prec > kTerm);
                     os_ << '\\';
                     const Term* body = &t;
                     std::size_t pushed = 0;
                     while (const auto* l = body->as<Term::Lam>()) {
                       std::string n = mentions_var(*l->body, 0) ? fresh(l->hint) : "_";
                       if (pushed > 0) os_ << ' ';
                       os_ << n;
                       names_.push_back(n);
                       ++pushed;
                       body = l->body.get();
                     }
                     os_ << " -> ";
                     print(*body, kTerm);
                     names_.resize(names_.size() - pushed);
                     close(prec > kTerm);
                   },
                   [&](const Term::App&) {
                     if (auto n = as_numeral(t)) {
                       os_ << *n;
                       return;
                     }
                     open(prec > kApp);
                     std::vector<const Term*> args;
                     const Term* head = &t;
                     while (const auto* a = head->as<Term::App>()) {
                       args.push_back(a->arg.get());
                       head = a->fn.get();
                     }
                     print(*head, kApp);
                     for (auto it = args.rbegin(); it != args.rend(); ++it) {
                       os_ << ' ';
                       print(**it, kAtom);
                     }
                     close(prec > kApp);
                   },
                   [&](const Term::Sigma& x) {
                     open(prec > kSigmaOperand);
                     if (mentions_var(*x.second, 0)) {
                       std::string n = fresh(x.hint);
                       os_ << '(' << n << " : ";
                       print(*x.first, kTerm);
                       os_ << ") * ";
                       names_.push_back(n);
                     } else {
                       print(*x.first, kApp);
                       os_ << " * ";
                       names_.push_back("_");
                     }
                     print(*x.second, kSigmaOperand);
                     names_.pop_back();
                     close(prec > kSigmaOperand);
                   },
                   [&](const Term::Pair& x) {
                     os_ << '(';
                     print(*x.first, kTerm);
                     os_ << ", ";
                     print(*x.second, kTerm);
                     os_ << ')';
                   },
                   [&](const Term::Fst& x) {
                     open(prec > kApp);
                     os_ << "fst ";
                     print(*x.pair, kAtom);
                     close(prec > kApp);
                   },
                   [&](const Term::Snd& x) {
                     open(prec > kApp);
                     os_ << "snd ";
                     print(*x.pair, kAtom);
                     close(prec > kApp);
                   },
                   [&](const Term::Ascribe& x) {
                     os_ << '(';
                     print(*x.term, kTerm);
                     os_ << " : ";
                     print(*x.type, kTerm);
                     os_ << ')';
                   },
                   [&](const Term::Const& x) {
                     if (x.which == Builtin::Zero) {
                       os_ << '0';
                       return;
                     }
                     os_ << builtin_name(x.which);
                     print_levels(x.levels);
                   },
                   [&](const Term::Ref& x) {
                     os_ << x.name;
                     print_levels(x.levels);
                   },
               },
               t.node());
  }

  std::string str() const { return os_.str(); }

 private:
  void open(bool paren) {
    if (paren) os_ << '(';
  }
  void close(bool paren) {
    if (paren) os_ << ')';
  }

  void print_levels(const std::vector<LevelPtr>& levels) {
    if (levels.empty()) return;
    os_ << " {";
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (i > 0) os_ << ", ";
      print_level_to(os_, *levels[i], false);
    }
    os_ << '}';
  }

  bool taken(const std::string& n) const {
    if (is_reserved_word(n) || globals_.count(n)) return true;
    for (const auto& m : names_) {
      if (m == n) return true;
    }
    return false;
  }

  std::string fresh(const std::string& hint) {
    std::string base = (hint.empty() || hint == "_" || !is_identifier(hint)) ? "x" : hint;
    if (!taken(base)) return base;
    for (std::size_t i = 1;; ++i) {
      std::string candidate = base + std::to_string(i);
      if (!taken(candidate)) return candidate;
    }
  }

  std::ostringstream os_;
  std::vector<std::string> names_;
  std::set<std::string> globals_;
};

}  // namespace

std::string print_level(const Level& l) {
  std::ostringstream os;
  print_level_to(os, l, false);
  return os.str();
}

std::string print_term(const Term& t, const std::vector<std::string>& names) {
  std::set<std::string> globals;
  collect_refs(t, globals);
  // Context names may repeat or be blank; make them distinct so every
  // variable prints unambiguously.
  std::vector<std::string> scope;
  for (const auto& n : names) {
    std::string base = (n.empty() || n == "_" || !is_identifier(n) || is_reserved_word(n)) ? "x" : n;
    std::string candidate = base;
    for (std::size_t i = 1; globals.count(candidate) ||
                            std::find(scope.begin(), scope.end(), candidate) != scope.end();
         ++i) {
      candidate = base + std::to_string(i);
    }
    scope.push_back(candidate);
  }
  Printer p(std::move(scope), std::move(globals));
  p.print(t, kTerm);
  return p.str();
}

}  // namespace mltt
