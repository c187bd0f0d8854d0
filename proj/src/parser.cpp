#include "lfdl/parser.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <set>

namespace lfdl {

namespace {

struct Token {
  enum class Kind { Ident, Variable, Integer, LParen, RParen, Comma, Dot, Turnstile, End };
  Kind kind;
  std::string text;
  size_t line;
  size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    const size_t line = line_;
    const size_t col = column_;
    if (pos_ >= text_.size()) return {Token::Kind::End, "", line, col};

    const char c = text_[pos_];
    if (c == '(') return single(Token::Kind::LParen, line, col);
    if (c == ')') return single(Token::Kind::RParen, line, col);
    if (c == ',') return single(Token::Kind::Comma, line, col);
    if (c == '.') return single(Token::Kind::Dot, line, col);
    if (c == ':') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        advance();
        advance();
        return {Token::Kind::Turnstile, ":-", line, col};
      }
      throw ParseError(line, col, "expected ':-'");
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits(1, c);
      advance();
      if (c == '-' && (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))))
        throw ParseError(line, col, "expected digits after '-'");
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits.push_back(text_[pos_]);
        advance();
      }
      return {Token::Kind::Integer, digits, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        word.push_back(text_[pos_]);
        advance();
      }
      const bool is_var = std::isupper(static_cast<unsigned char>(c)) || c == '_';
      return {is_var ? Token::Kind::Variable : Token::Kind::Ident, word, line, col};
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
        advance();
      if (pos_ < text_.size() && text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      return;
    }
  }

  Token single(Token::Kind kind, size_t line, size_t col) {
    std::string text(1, text_[pos_]);
    advance();
    return {kind, text, line, col};
  }

  std::string_view text_;
  size_t pos_ = 0;
  size_t line_ = 1;
  size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Program program() {
    Program prog;
    while (current_.kind != Token::Kind::End) {
      Atom head = atom();
      if (current_.kind == Token::Kind::Dot) {
        shift();
        if (!head.is_ground())
          throw ParseError(head.line, head.column,
                           "fact " + head.predicate + " is not ground");
        prog.facts.push_back(std::move(head));
      } else if (current_.kind == Token::Kind::Turnstile) {
        shift();
        Rule rule;
        rule.head = std::move(head);
        rule.body.push_back(atom());
        while (current_.kind == Token::Kind::Comma) {
          shift();
          rule.body.push_back(atom());
        }
        expect(Token::Kind::Dot, "'.'");
        prog.rules.push_back(std::move(rule));
      } else {
        fail("'.' or ':-'");
      }
    }
    validate(prog);
    return prog;
  }

  std::vector<Atom> body() {
    std::vector<Atom> atoms;
    atoms.push_back(atom());
    while (current_.kind == Token::Kind::Comma) {
      shift();
      atoms.push_back(atom());
    }
    if (current_.kind == Token::Kind::Dot) shift();
    if (current_.kind != Token::Kind::End) fail("end of query");
    check_arities(atoms);
    return atoms;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  void expect(Token::Kind kind, const char* what) {
    if (current_.kind != kind) fail(what);
    shift();
  }

  [[noreturn]] void fail(const std::string& expected) {
    const std::string got = current_.kind == Token::Kind::End
                                ? "end of input"
                                : "'" + current_.text + "'";
    throw ParseError(current_.line, current_.column, "expected " + expected + ", got " + got);
  }

  Atom atom() {
    if (current_.kind != Token::Kind::Ident) fail("predicate name");
    Atom a;
    a.predicate = current_.text;
    a.line = current_.line;
    a.column = current_.column;
    shift();
    expect(Token::Kind::LParen, "'('");
    a.args.push_back(term());
    while (current_.kind == Token::Kind::Comma) {
      shift();
      a.args.push_back(term());
    }
    expect(Token::Kind::RParen, "')'");
    return a;
  }

  Term term() {
    if (current_.kind == Token::Kind::Variable) {
      Term t = Term::variable(current_.text);
      shift();
      return t;
    }
    if (current_.kind == Token::Kind::Ident) {
      Term t = Term::constant_of(Value::symbol(current_.text));
      shift();
      return t;
    }
    if (current_.kind == Token::Kind::Integer) {
      int64_t v = 0;
      const auto [ptr, ec] =
          std::from_chars(current_.text.data(), current_.text.data() + current_.text.size(), v);
      if (ec != std::errc() || ptr != current_.text.data() + current_.text.size())
        throw ParseError(current_.line, current_.column,
                         "integer out of range: " + current_.text);
      Term t = Term::constant_of(Value::integer(v));
      shift();
      return t;
    }
    fail("term");
  }

  void check_arities(const std::vector<Atom>& atoms) {
    for (const Atom& a : atoms) {
      auto [it, inserted] = arities_.try_emplace(a.predicate, a.arity());
      if (!inserted && it->second != a.arity())
        throw ParseError(a.line, a.column,
                         "predicate " + a.predicate + " used with arity " +
                             std::to_string(a.arity()) + ", elsewhere " +
                             std::to_string(it->second));
    }
  }

  void validate(const Program& prog) {
    for (const Atom& f : prog.facts) check_arities({f});
    for (const Rule& r : prog.rules) {
      check_arities({r.head});
      check_arities(r.body);
      std::set<std::string> body_vars;
      for (const Atom& a : r.body)
        for (const Term& t : a.args)
          if (t.is_variable()) body_vars.insert(t.var);
      for (const Term& t : r.head.args) {
        if (t.is_variable() && !body_vars.count(t.var))
          throw ParseError(r.head.line, r.head.column,
                           "head variable " + t.var + " does not occur in the rule body");
      }
    }
  }

  Lexer lexer_;
  Token current_{Token::Kind::End, "", 0, 0};
  std::map<std::string, size_t> arities_;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

std::vector<Atom> parse_body(std::string_view text) { return Parser(text).body(); }

}  // namespace lfdl
