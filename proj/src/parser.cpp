#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>

#include "mltt/error.hpp"
#include "mltt/syntax.hpp"

namespace mltt {

namespace {

constexpr std::array<std::string_view, 9> kKeywords{"def", "assume", "import", "U", "fst", "snd", "lzero", "lsuc", "lmax"};

enum class Tok { Ident, Number, String, LParen, RParen, LBrace, RBrace, Comma, Colon, Define, Arrow, Lambda, Star, End };

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "'" + t.text + "'";
    case Tok::Number: return "numeral " + t.text;
    case Tok::String: return "string \"" + t.text + "\"";
    default: return "'" + t.text + "'";
  }
}

[[noreturn]] void fail(Span span, const std::string& msg) { throw KernelError(ErrorClass::ParseError, span, msg); }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::uint32_t line = 1;
  std::uint32_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Span span{line, col};
    auto single = [&](Tok k, std::size_t n) {
      out.push_back({k, std::string(src.substr(i, n)), span});
      advance(n);
    };
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < src.size()) {
        if (ident_char(src[j])) {
          ++j;
        } else if (src[j] == '-' && j + 1 < src.size() && ident_char(src[j + 1])) {
          ++j;
        } else {
          break;
        }
      }
      single(Tok::Ident, j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && (ident_start(src[j]) || src[j] == '\'')) {
        fail(span, "identifiers must start with a letter or '_'");
      }
      single(Tok::Number, j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') fail(span, "unterminated string");
      out.push_back({Tok::String, std::string(src.substr(i + 1, j - i - 1)), span});
      advance(j + 1 - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      single(Tok::Arrow, 2);
    } else if (c == ':' && i + 1 < src.size() && src[i + 1] == '=') {
      single(Tok::Define, 2);
    } else {
      switch (c) {
        case '(': single(Tok::LParen, 1); break;
        case ')': single(Tok::RParen, 1); break;
        case '{': single(Tok::LBrace, 1); break;
        case '}': single(Tok::RBrace, 1); break;
        case ',': single(Tok::Comma, 1); break;
        case ':': single(Tok::Colon, 1); break;
        case '\\': single(Tok::Lambda, 1); break;
        case '*': single(Tok::Star, 1); break;
        default: {
          std::size_t n = 1;
          while (i + n < src.size() && (static_cast<unsigned char>(src[i + n]) & 0xC0) == 0x80) ++n;
          fail(span, "unexpected character '" + std::string(src.substr(i, n)) + "'");
        }
      }
    }
  }
  out.push_back({Tok::End, "", Span{line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  SourceModule module(std::string path) {
    SourceModule m;
    m.path = std::move(path);
    while (at_word("import")) {
      next();
      const Token& t = expect(Tok::String, "a quoted file path");
      m.imports.push_back({t.text, t.span});
    }
    while (peek().kind != Tok::End) {
      m.declarations.push_back(declaration());
    }
    return m;
  }

  TermPtr single_term() {
    TermPtr t = term();
    if (peek().kind != Tok::End) fail(peek().span, "unexpected " + describe(peek()) + " after term");
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

  const Token& expect(Tok k, std::string_view what) {
    if (peek().kind != k) fail(peek().span, "expected " + std::string(what) + ", found " + describe(peek()));
    return next();
  }

  std::string binder_name() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail(t.span, "expected a binder name, found " + describe(t));
    if (t.text != "_" && (is_reserved_word(t.text))) fail(t.span, "reserved word '" + t.text + "' used as a name");
    next();
    return t.text;
  }

  std::string global_name() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail(t.span, "expected a name, found " + describe(t));
    if (t.text == "_" || is_reserved_word(t.text)) fail(t.span, "reserved word '" + t.text + "' used as a name");
    next();
    return t.text;
  }

  Declaration declaration() {
    Declaration d;
    d.span = peek().span;
    if (at_word("def")) {
      d.kind = Declaration::Kind::Def;
    } else if (at_word("assume")) {
      d.kind = Declaration::Kind::Assume;
    } else {
      std::string where = at_word("import") ? " (imports must precede declarations)" : "";
      fail(peek().span, "expected 'def' or 'assume', found " + describe(peek()) + where);
    }
    next();
    d.name = global_name();
    if (peek().kind == Tok::LBrace) {
      next();
      while (peek().kind != Tok::RBrace) {
        Span s = peek().span;
        std::string p = global_name();
        if (std::find(d.level_params.begin(), d.level_params.end(), p) != d.level_params.end()) {
          fail(s, "duplicate level parameter '" + p + "'");
        }
        d.level_params.push_back(p);
        if (peek().kind == Tok::Comma) next();
      }
      next();
    }
    expect(Tok::Colon, "':'");
    d.type = term();
    if (d.kind == Declaration::Kind::Def) {
      expect(Tok::Define, "':='");
      d.body = term();
    }
    if (peek().kind != Tok::End && !at_word("def") && !at_word("assume")) {
      fail(peek().span, "unexpected " + describe(peek()) + " after declaration of '" + d.name + "'");
    }
    return d;
  }

  // --- terms -------------------------------------------------------------

  TermPtr term() {
    if (peek().kind == Tok::Lambda) return lambda();
    TermPtr lhs;
    if (peek().kind == Tok::LParen) {
      lhs = telescope();
      if (lhs && lhs->as<Term::Pi>()) return lhs;
    }
    if (!lhs) lhs = sigma_level();
    if (peek().kind == Tok::Arrow) {
      Span s = next().span;
      locals_.push_back("_");
      TermPtr rhs = term_popping();
      return pi("_", lhs, rhs, s);
    }
    return lhs;
  }

  // Parses a term with one extra local already pushed, popping it afterwards.
  TermPtr term_popping() {
    TermPtr t = term();
    locals_.pop_back();
    return t;
  }

  TermPtr sigma_level() {
    if (peek().kind == Tok::LParen) {
      std::size_t save = pos_;
      if (auto t = telescope(); t) {
        if (t->as<Term::Sigma>()) return t;
        pos_ = save;
      }
    }
    TermPtr lhs = application();
    if (peek().kind == Tok::Star) {
      Span s = next().span;
      locals_.push_back("_");
      TermPtr rhs = sigma_popping();
      return sigma("_", lhs, rhs, s);
    }
    return lhs;
  }

  TermPtr sigma_popping() {
    TermPtr t = sigma_level();
    locals_.pop_back();
    return t;
  }

  TermPtr lambda() {
    Span s = next().span;
    std::vector<std::string> names;
    while (peek().kind == Tok::Ident) names.push_back(binder_name());
    if (names.empty()) fail(peek().span, "expected a binder name after '\\'");
    expect(Tok::Arrow, "'->'");
    for (const auto& n : names) locals_.push_back(n);
    TermPtr body = term();
    for (auto it = names.rbegin(); it != names.rend(); ++it) {
      locals_.pop_back();
      body = lam(*it, body, s);
    }
    return body;
  }

  // Tries `(x y : A) (z : B) ... -> T` or `... * T`. Restores the position and
  // returns null when the input is not a telescope.
  TermPtr telescope() {
    std::size_t save = pos_;
    std::vector<std::pair<std::string, TermPtr>> binders;
    std::vector<Span> spans;
    std::size_t pushed = 0;
    auto restore = [&]() {
      locals_.resize(locals_.size() - pushed);
      pos_ = save;
      return nullptr;
    };
    while (peek().kind == Tok::LParen) {
      std::size_t k = 1;
      while (peek(k).kind == Tok::Ident && !is_reserved_word(peek(k).text)) ++k;
      if (k == 1 || peek(k).kind != Tok::Colon) break;
      Span s = next().span;
      std::vector<std::string> names;
      while (peek().kind == Tok::Ident) names.push_back(binder_name());
      next();  // ':'
      TermPtr dom;
      try {
        dom = term();
      } catch (const KernelError&) {
        restore();
        throw;
      }
      if (peek().kind != Tok::RParen) {
        if (binders.empty() && names.size() == 1) return restore();
        fail(peek().span, "expected ')' to close binder, found " + describe(peek()));
      }
      next();
      for (std::size_t i = 0; i < names.size(); ++i) {
        // The shared domain is re-scoped under the earlier names of the group.
        binders.emplace_back(names[i], i == 0 ? dom : shift(dom, i));
        spans.push_back(s);
        locals_.push_back(names[i]);
        ++pushed;
      }
    }
    if (binders.empty()) return restore();
    bool arrow = peek().kind == Tok::Arrow;
    bool star = peek().kind == Tok::Star;
    if (!arrow && !star) return restore();
    next();
    TermPtr body = arrow ? term() : sigma_level();
    for (std::size_t i = binders.size(); i-- > 0;) {
      locals_.pop_back();
      body = arrow ? pi(binders[i].first, binders[i].second, body, spans[i])
                   : sigma(binders[i].first, binders[i].second, body, spans[i]);
    }
    return body;
  }

  TermPtr application() {
    TermPtr head = prefix_or_atom();
    while (starts_atom()) {
      TermPtr arg = prefix_or_atom();
      head = app(head, arg, head->span());
    }
    return head;
  }

  bool starts_atom() const {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: return t.text != "def" && t.text != "assume";
      case Tok::Number:
      case Tok::LParen: return true;
      default: return false;
    }
  }

  TermPtr prefix_or_atom() {
    if (at_word("fst") || at_word("snd")) {
      bool first = peek().text == "fst";
      Span s = next().span;
      if (!starts_atom()) fail(peek().span, "expected an argument after '" + std::string(first ? "fst" : "snd") + "'");
      TermPtr arg = prefix_or_atom();
      return first ? fst(arg, s) : snd(arg, s);
    }
    return atom();
  }

  TermPtr atom() {
    const Token& t = peek();
    Span s = t.span;
    switch (t.kind) {
      case Tok::Number: {
        std::uint64_t n = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
        if (ec != std::errc() || n > 100000) fail(s, "numeral too large");
        next();
        return numeral(n, s);
      }
      case Tok::LParen: return parenthesized();
      case Tok::Ident: break;
      default: fail(s, "expected a term, found " + describe(t));
    }
    if (t.text == "U") {
      next();
      if (!starts_level()) fail(peek().span, "'U' requires a level argument");
      return universe(level(), s);
    }
    if (t.text == "_") fail(s, "'_' cannot be used as a term");
    if (is_reserved_word(t.text) && !builtin_from_name(t.text)) {
      fail(s, "unexpected reserved word '" + t.text + "'");
    }
    std::string name = next().text;
    for (std::size_t i = locals_.size(); i-- > 0;) {
      if (locals_[i] == name) {
        if (peek().kind == Tok::LBrace) fail(peek().span, "level arguments given to local variable '" + name + "'");
        return var(locals_.size() - 1 - i, s);
      }
    }
    std::vector<LevelPtr> levels;
    if (peek().kind == Tok::LBrace) {
      next();
      while (peek().kind != Tok::RBrace) {
        levels.push_back(level());
        if (peek().kind == Tok::Comma) {
          next();
        } else if (peek().kind != Tok::RBrace) {
          fail(peek().span, "expected ',' or '}' in level arguments, found " + describe(peek()));
        }
      }
      next();
    }
    if (auto b = builtin_from_name(name)) return constant(*b, std::move(levels), s);
    return ref(std::move(name), std::move(levels), s);
  }

  TermPtr parenthesized() {
    const Token& open = next();
    Span s = open.span;
    try {
      TermPtr inner = term();
      if (peek().kind == Tok::Colon) {
        next();
        TermPtr type = term();
        expect(Tok::RParen, "')'");
        return ascribe(inner, type, s);
      }
      std::vector<TermPtr> parts{inner};
      while (peek().kind == Tok::Comma) {
        next();
        parts.push_back(term());
      }
      if (peek().kind != Tok::RParen) {
        if (peek().kind == Tok::End) fail(s, "unclosed '('");
        fail(peek().span, "expected ')', found " + describe(peek()));
      }
      next();
      TermPtr result = parts.back();
      for (std::size_t i = parts.size() - 1; i-- > 0;) result = pair(parts[i], result, s);
      return result;
    } catch (const KernelError& e) {
      if (peek().kind == Tok::End && e.span().line == peek().span.line && e.span().column == peek().span.column) {
        fail(s, "unclosed '('");
      }
      throw;
    }
  }

  // --- levels ------------------------------------------------------------

  bool starts_level() const {
    const Token& t = peek();
    if (t.kind == Tok::Number || t.kind == Tok::LParen || t.kind == Tok::LBrace) return true;
    if (t.kind != Tok::Ident) return false;
    return t.text == "lzero" || t.text == "lsuc" || t.text == "lmax" || !is_reserved_word(t.text);
  }

  LevelPtr level() {
    const Token& t = peek();
    Span s = t.span;
    if (t.kind == Tok::Number) {
      std::uint32_t n = 0;
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
      if (ec != std::errc() || n > 1000) fail(s, "level numeral too large");
      next();
      return Level::constant(n);
    }
    if (t.kind == Tok::LParen || t.kind == Tok::LBrace) {
      Tok close = t.kind == Tok::LParen ? Tok::RParen : Tok::RBrace;
      next();
      LevelPtr l = level();
      expect(close, close == Tok::RParen ? "')'" : "'}'");
      return l;
    }
    if (t.kind != Tok::Ident) fail(s, "expected a level, found " + describe(t));
    if (t.text == "lzero") {
      next();
      return Level::zero();
    }
    if (t.text == "lsuc") {
      next();
      return Level::suc(level());
    }
    if (t.text == "lmax") {
      next();
      LevelPtr a = level();
      LevelPtr b = level();
      return Level::max(a, b);
    }
    if (is_reserved_word(t.text) || t.text == "_") fail(s, "expected a level, found " + describe(t));
    return Level::var(next().text);
  }

  static TermPtr shift(const TermPtr& t, std::size_t by) { return shift_from(t, by, 0); }
  static TermPtr shift_from(const TermPtr& t, std::size_t by, std::size_t cutoff);

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> locals_;
};

TermPtr Parser::shift_from(const TermPtr& t, std::size_t by, std::size_t cutoff) {
  Span s = t->span();
  if (const auto* x = t->as<Term::Var>()) return x->index >= cutoff ? var(x->index + by, s) : t;
  if (const auto* x = t->as<Term::Pi>()) {
    return pi(x->hint, shift_from(x->domain, by, cutoff), shift_from(x->codomain, by, cutoff + 1), s);
  }
  if (const auto* x = t->as<Term::Lam>()) return lam(x->hint, shift_from(x->body, by, cutoff + 1), s);
  if (const auto* x = t->as<Term::App>()) return app(shift_from(x->fn, by, cutoff), shift_from(x->arg, by, cutoff), s);
  if (const auto* x = t->as<Term::Sigma>()) {
    return sigma(x->hint, shift_from(x->first, by, cutoff), shift_from(x->second, by, cutoff + 1), s);
  }
  if (const auto* x = t->as<Term::Pair>()) {
    return pair(shift_from(x->first, by, cutoff), shift_from(x->second, by, cutoff), s);
  }
  if (const auto* x = t->as<Term::Fst>()) return fst(shift_from(x->pair, by, cutoff), s);
  if (const auto* x = t->as<Term::Snd>()) return snd(shift_from(x->pair, by, cutoff), s);
  if (const auto* x = t->as<Term::Ascribe>()) {
    return ascribe(shift_from(x->term, by, cutoff), shift_from(x->type, by, cutoff), s);
  }
  return t;
}

}  // namespace

bool is_reserved_word(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end() ||
         builtin_from_name(word).has_value();
}

bool is_identifier(std::string_view word) {
  if (word.empty() || !ident_start(word.front())) return false;
  for (std::size_t i = 1; i < word.size(); ++i) {
    char c = word[i];
    if (ident_char(c)) continue;
    if (c == '-' && i + 1 < word.size() && ident_char(word[i + 1])) continue;
    return false;
  }
  return true;
}

SourceModule parse_module(std::string_view text, std::string path) { return Parser(text).module(std::move(path)); }

TermPtr parse_term(std::string_view text) { return Parser(text).single_term(); }

}  // namespace mltt
