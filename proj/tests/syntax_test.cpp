#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mltt/error.hpp"
#include "mltt/overloaded.hpp"
#include "mltt/syntax.hpp"
#include "support.hpp"

namespace mltt {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorClass parse_error_class(std::string_view text, Span* span = nullptr) {
  try {
    parse_module(text);
  } catch (const KernelError& e) {
    if (span) *span = e.span();
    return e.error_class();
  }
  return ErrorClass::Internal;
}

TEST(Parse, NumeralDesugarsToSuccessors) {
  SourceModule m = parse_module("def two : Nat := 2");
  ASSERT_EQ(m.declarations.size(), 1u);
  const auto& d = m.declarations[0];
  EXPECT_EQ(d.kind, Declaration::Kind::Def);
  EXPECT_EQ(d.name, "two");
  TermPtr expected = app(constant(Builtin::Succ, {}), app(constant(Builtin::Succ, {}), constant(Builtin::Zero, {})));
  EXPECT_TRUE(syntactic_equal(*d.body, *expected));
}

TEST(Parse, LevelParameters) {
  SourceModule m = parse_module("def id {u} : (X : U u) -> X -> X := \\X -> \\x -> x");
  ASSERT_EQ(m.declarations.size(), 1u);
  EXPECT_EQ(m.declarations[0].level_params, std::vector<std::string>{"u"});
  TermPtr body = lam("X", lam("x", var(0)));
  EXPECT_TRUE(syntactic_equal(*m.declarations[0].body, *body));
}

TEST(Parse, UnclosedParenthesisIsAParseError) {
  Span s;
  EXPECT_EQ(parse_error_class("def bad : Nat := (", &s), ErrorClass::ParseError);
  EXPECT_EQ(s.line, 1u);
}

TEST(Parse, ApplicationOfAGlobal) {
  TermPtr t = parse_term("plus 3 4");
  TermPtr expected = apps(ref("plus", {}), {numeral(3), numeral(4)});
  EXPECT_TRUE(syntactic_equal(*t, *expected));
}

TEST(Parse, ProjectionOfAPair) {
  TermPtr t = parse_term("fst (0, refl {lzero} Nat 0)");
  const auto* f = t->as<Term::Fst>();
  ASSERT_NE(f, nullptr);
  ASSERT_NE(f->pair->as<Term::Pair>(), nullptr);
}

TEST(Parse, UniverseNeedsALevel) {
  try {
    parse_term("U");
    FAIL() << "expected a parse error";
  } catch (const KernelError& e) {
    EXPECT_EQ(e.error_class(), ErrorClass::ParseError);
  }
}

TEST(Parse, ReservedWordAsName) {
  EXPECT_EQ(parse_error_class("def fst : Nat := 0"), ErrorClass::ParseError);
}

TEST(Parse, ImportsPrecedeDeclarations) {
  SourceModule m = parse_module("import \"a.mltt\"\nimport \"../b.mltt\"\ndef x : Nat := 0");
  ASSERT_EQ(m.imports.size(), 2u);
  EXPECT_EQ(m.imports[1].path, "../b.mltt");
  EXPECT_EQ(parse_error_class("def x : Nat := 0\nimport \"a.mltt\""), ErrorClass::ParseError);
}

TEST(Print, Numeral) { EXPECT_EQ(print_term(*numeral(2)), "2"); }

TEST(Print, PiChain) {
  TermPtr t = pi("X", universe(Level::zero()), pi("x", var(0), var(1)));
  EXPECT_EQ(print_term(*t), "(X : U lzero) -> X -> X");
}

TEST(Print, EtaLongIdentity) {
  TermPtr t = lam("x", app(var(1), var(0)));
  EXPECT_EQ(print_term(*t, {"f"}), "\\x -> f x");
}

// Every subterm of the corpus, printed in a context of fresh names and parsed
// back under lambdas binding those names, is the same term.
class RoundTrip {
 public:
  std::size_t checked = 0;

  void visit(const TermPtr& t, std::vector<std::string>& names) {
    check(t, names);
    auto under = [&](const TermPtr& body) {
      names.push_back("v" + std::to_string(names.size()));
      visit(body, names);
      names.pop_back();
    };
    std::visit(overloaded{
                   [](const Term::Var&) {}, [](const Term::Universe&) {}, [](const Term::Const&) {},
                   [](const Term::Ref&) {},
                   [&](const Term::Pi& x) {
                     visit(x.domain, names);
                     under(x.codomain);
                   },
                   [&](const Term::Lam& x) { under(x.body); },
                   [&](const Term::App& x) {
                     visit(x.fn, names);
                     visit(x.arg, names);
                   },
                   [&](const Term::Sigma& x) {
                     visit(x.first, names);
                     under(x.second);
                   },
                   [&](const Term::Pair& x) {
                     visit(x.first, names);
                     visit(x.second, names);
                   },
                   [&](const Term::Fst& x) { visit(x.pair, names); },
                   [&](const Term::Snd& x) { visit(x.pair, names); },
                   [&](const Term::Ascribe& x) {
                     visit(x.term, names);
                     visit(x.type, names);
                   },
               },
               t->node());
  }

 private:
  void check(const TermPtr& t, const std::vector<std::string>& names) {
    std::string text = print_term(*t, names);
    std::string wrapped = text;
    if (!names.empty()) {
      std::string binders;
      for (const auto& n : names) binders += " " + n;
      wrapped = "\\" + binders.substr(1) + " -> " + text;
    }
    TermPtr back;
    try {
      back = parse_term(wrapped);
    } catch (const KernelError& e) {
      ADD_FAILURE() << "cannot reparse: " << wrapped << "\n" << e.what();
      return;
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto* l = back->as<Term::Lam>();
      ASSERT_NE(l, nullptr) << wrapped;
      back = l->body;
    }
    ++checked;
    EXPECT_TRUE(syntactic_equal(*t, *back)) << "printed: " << text << "\nreprinted: " << print_term(*back, names);
  }
};

TEST(RoundTripProperty, EveryCorpusSubterm) {
  RoundTrip rt;
  std::size_t files = 0;
  for (const auto& path : testing::accepted_files()) {
    SourceModule m = parse_module(slurp(path), path);
    ++files;
    for (const auto& d : m.declarations) {
      std::vector<std::string> names;
      rt.visit(d.type, names);
      if (d.body) rt.visit(d.body, names);
    }
  }
  EXPECT_GE(files, 13u);
  EXPECT_GT(rt.checked, 10000u);
  std::cout << "round-tripped " << rt.checked << " subterms from " << files << " files\n";
}

TEST(RoundTripProperty, PrintedModuleReparses) {
  for (const auto& path : testing::accepted_files()) {
    SourceModule m = parse_module(slurp(path), path);
    std::string text;
    for (const auto& d : m.declarations) {
      text += d.kind == Declaration::Kind::Def ? "def " : "assume ";
      text += d.name;
      if (!d.level_params.empty()) {
        text += " {";
        for (std::size_t i = 0; i < d.level_params.size(); ++i) text += (i ? ", " : "") + d.level_params[i];
        text += "}";
      }
      text += " : " + print_term(*d.type);
      if (d.body) text += " := " + print_term(*d.body);
      text += "\n\n";
    }
    SourceModule again = parse_module(text, path);
    ASSERT_EQ(again.declarations.size(), m.declarations.size()) << path;
    for (std::size_t i = 0; i < m.declarations.size(); ++i) {
      EXPECT_TRUE(syntactic_equal(*m.declarations[i].type, *again.declarations[i].type)) << m.declarations[i].name;
      if (m.declarations[i].body) {
        EXPECT_TRUE(syntactic_equal(*m.declarations[i].body, *again.declarations[i].body)) << m.declarations[i].name;
      }
    }
  }
}

}  // namespace
}  // namespace mltt
