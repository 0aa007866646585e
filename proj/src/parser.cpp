#include "locw/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "locw/errors.hpp"

namespace locw {

namespace {

enum class Tok {
  Ident, Int, LBrace, RBrace, LParen, RParen, Comma, Semi, Slash, Dot,
  Arrow, Iff, Leq, Neq, Eq, Less, Amp, Pipe, Bang, End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_space();
    current_.line = line_;
    current_.column = col_;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      current_.text = "<end of input>";
      return;
    }
    char c = text_[pos_];
    if (std::isalpha(uint8_t(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(uint8_t(text_[pos_])) || text_[pos_] == '_')) {
        bump();
      }
      current_.kind = Tok::Ident;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(uint8_t(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(uint8_t(text_[pos_]))) bump();
      current_.kind = Tok::Int;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    auto two = [&](char a, char b) {
      return c == a && pos_ + 1 < text_.size() && text_[pos_ + 1] == b;
    };
    if (two('-', '>')) { bump(); bump(); set(Tok::Arrow, "->"); return; }
    if (c == '<' && pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' &&
        text_[pos_ + 2] == '>') {
      bump(); bump(); bump();
      set(Tok::Iff, "<->");
      return;
    }
    if (two('<', '=')) { bump(); bump(); set(Tok::Leq, "<="); return; }
    if (two('!', '=')) { bump(); bump(); set(Tok::Neq, "!="); return; }
    bump();
    switch (c) {
      case '{': set(Tok::LBrace, "{"); return;
      case '}': set(Tok::RBrace, "}"); return;
      case '(': set(Tok::LParen, "("); return;
      case ')': set(Tok::RParen, ")"); return;
      case ',': set(Tok::Comma, ","); return;
      case ';': set(Tok::Semi, ";"); return;
      case '/': set(Tok::Slash, "/"); return;
      case '.': set(Tok::Dot, "."); return;
      case '=': set(Tok::Eq, "="); return;
      case '<': set(Tok::Less, "<"); return;
      case '&': set(Tok::Amp, "&"); return;
      case '|': set(Tok::Pipe, "|"); return;
      case '!': set(Tok::Bang, "!"); return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         current_.line, current_.column);
    }
  }

  void set(Tok kind, const char* text) {
    current_.kind = kind;
    current_.text = text;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Sentence parse() {
    if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "sig") {
      lex_.take();
      parse_sig_block();
    }
    Sentence s;
    s.signature = sig_;
    if (lex_.peek().kind == Tok::Ident && lex_.peek().text == "forall") {
      lex_.take();
      parse_binders();
      expect(Tok::Dot, "'.'");
    }
    s.quantifiers = int(vars_.size());
    s.matrix = parse_formula();
    if (lex_.peek().kind != Tok::End) {
      fail("expected end of input, found '" + lex_.peek().text + "'");
    }
    validate_sentence(s);
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, lex_.peek().line, lex_.peek().column);
  }

  Token expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind) {
      fail(std::string("expected ") + what + ", found '" + lex_.peek().text +
           "'");
    }
    return lex_.take();
  }

  std::string expect_ident(const char* what) {
    return expect(Tok::Ident, what).text;
  }

  int expect_arity() {
    expect(Tok::Slash, "'/'");
    Token t = expect(Tok::Int, "an arity");
    return std::stoi(t.text);
  }

  void parse_sig_block() {
    expect(Tok::LBrace, "'{'");
    while (lex_.peek().kind != Tok::RBrace) {
      Token head = lex_.take();
      if (head.kind != Tok::Ident) {
        throw ParseError("expected 'fn', 'rel' or 'const'", head.line,
                         head.column);
      }
      try {
        if (head.text == "fn") {
          std::string name = expect_ident("a function name");
          sig_.add_function(name, expect_arity());
        } else if (head.text == "rel") {
          std::string name = expect_ident("a relation name");
          sig_.add_relation(name, expect_arity());
        } else if (head.text == "const") {
          sig_.add_constant(expect_ident("a constant name"));
        } else {
          throw ParseError("expected 'fn', 'rel' or 'const', found '" +
                               head.text + "'",
                           head.line, head.column);
        }
      } catch (const InvalidInput& e) {
        throw ParseError(e.what(), head.line, head.column);
      }
      expect(Tok::Semi, "';'");
    }
    lex_.take();  // }
  }

  void parse_binders() {
    while (lex_.peek().kind == Tok::Ident) {
      Token t = lex_.take();
      if (vars_.count(t.text)) {
        throw ParseError("duplicate variable '" + t.text + "'", t.line,
                         t.column);
      }
      if (sig_.has_symbol(t.text)) {
        throw ParseError("variable '" + t.text +
                             "' clashes with a declared symbol",
                         t.line, t.column);
      }
      vars_[t.text] = int(vars_.size());
    }
    if (vars_.empty()) fail("expected at least one variable after 'forall'");
  }

  // implication level, right associative; <-> desugars to both directions
  Formula parse_formula() {
    Formula left = parse_disjunction();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      return Formula::implication(std::move(left), parse_formula());
    }
    if (lex_.peek().kind == Tok::Iff) {
      lex_.take();
      return Formula::iff(std::move(left), parse_formula());
    }
    return left;
  }

  Formula parse_disjunction() {
    Formula left = parse_conjunction();
    if (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      return Formula::disjunction(std::move(left), parse_disjunction());
    }
    return left;
  }

  Formula parse_conjunction() {
    Formula left = parse_unary();
    if (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      return Formula::conjunction(std::move(left), parse_conjunction());
    }
    return left;
  }

  Formula parse_unary() {
    if (lex_.peek().kind == Tok::Bang) {
      lex_.take();
      return Formula::negation(parse_unary());
    }
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      Formula f = parse_formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    return parse_atom();
  }

  Formula parse_atom() {
    Token head = lex_.peek();
    if (head.kind == Tok::Ident && head.text == "true") {
      lex_.take();
      return Formula::truth();
    }
    if (head.kind == Tok::Ident && head.text == "false") {
      lex_.take();
      return Formula::falsity();
    }
    // Relation atom?  Only when the leading identifier names a relation.
    if (head.kind == Tok::Ident && sig_.relation_index(head.text)) {
      lex_.take();
      expect(Tok::LParen, "'('");
      std::vector<Term> args = parse_term_list();
      expect(Tok::RParen, "')'");
      return Formula::rel(head.text, std::move(args));
    }
    Term lhs = parse_term();
    Token op = lex_.take();
    switch (op.kind) {
      case Tok::Eq: return Formula::eq(std::move(lhs), parse_term());
      case Tok::Less: return Formula::less(std::move(lhs), parse_term());
      case Tok::Leq: {
        Term rhs = parse_term();
        return Formula::leq(std::move(lhs), std::move(rhs));
      }
      case Tok::Neq: return Formula::neq(std::move(lhs), parse_term());
      default:
        throw ParseError("expected '=', '<', '<=' or '!=', found '" +
                             op.text + "'",
                         op.line, op.column);
    }
  }

  std::vector<Term> parse_term_list() {
    std::vector<Term> out;
    out.push_back(parse_term());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      out.push_back(parse_term());
    }
    return out;
  }

  Term parse_term() {
    Token head = expect(Tok::Ident, "a term");
    if (lex_.peek().kind == Tok::LParen) {
      if (!sig_.function_index(head.text)) {
        throw ParseError("unknown function '" + head.text + "'", head.line,
                         head.column);
      }
      lex_.take();
      std::vector<Term> args = parse_term_list();
      expect(Tok::RParen, "')'");
      Term t = Term::apply(head.text, std::move(args));
      try {
        validate_term(t, sig_, int(vars_.size()));
      } catch (const InvalidInput& e) {
        throw ParseError(e.what(), head.line, head.column);
      }
      return t;
    }
    auto it = vars_.find(head.text);
    if (it != vars_.end()) return Term::variable(it->second);
    if (sig_.constant_index(head.text)) return Term::constant(head.text);
    throw ParseError("unknown symbol '" + head.text + "'", head.line,
                     head.column);
  }

  Lexer lex_;
  Signature sig_;
  std::map<std::string, int> vars_;
};

}  // namespace

Sentence parse_sentence(std::string_view text) { return Parser(text).parse(); }

Sentence load_sentence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open sentence file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sentence(buf.str());
}

}  // namespace locw
