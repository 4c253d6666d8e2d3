#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mltt/env.hpp"
#include "mltt/term.hpp"

namespace mltt {

struct Import {
  std::string path;  // relative to the importing file's directory
  Span span;
};

struct SourceModule {
  std::string path;
  std::vector<Import> imports;
  std::vector<Declaration> declarations;
};

// Grammar (layout-free, `--` comments to end of line):
//
//   module ::= (import "PATH")* decl*
//   decl  ::= def NAME {l ...}? : term := term | assume NAME {l ...}? : term
//   term  ::= \x y -> term | (x y : A) -> term | (x : A) * term | A -> term | A * term | app
//   app   ::= atom+ | fst atom | snd atom
//   atom  ::= NAME {level, ...}? | NUMERAL | U level | (term) | (term, term) | (term : term)
//   level ::= lzero | lsuc level | lmax level level | NAME | NUMERAL | (level) | {level}
//
// `*` binds tighter than `->`; both associate to the right.
// Throws KernelError(ParseError) with the offending position.
SourceModule parse_module(std::string_view text, std::string path = {});
TermPtr parse_term(std::string_view text);

bool is_reserved_word(std::string_view word);
bool is_identifier(std::string_view word);

// `names` holds the hints for the enclosing binders, innermost last.
std::string print_term(const Term& t, const std::vector<std::string>& names = {});
std::string print_level(const Level& l);

}  // namespace mltt
