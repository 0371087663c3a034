// Text format parser for models. Grammar sketch:
//
//   model    := decl* process+ "initially" pred ";" "risk" pred ";"
//   decl     := "param" ID ";" | "dense" ID ";"
//             | "discrete" ID "in" INT ".." INT "init" INT ";"
//   process  := "process" ID "{" ("dense" ID ";")* (mode | trans)* "}"
//   mode     := "mode" ID "{" "inv" pred ";" ("rate" ID "in" ival ";")* "}"
//   trans    := "trans" ID "->" ID "{" "guard" pred ";"
//                                      ("set" ID ":=" ival ";")* "}"
//   ival     := ("[" | "(") end "," end ("]" | ")")      end := rat | "inf"
//   pred     := conj ("or" conj)*        conj := atom ("and" atom)*
//   atom     := "true" | "false" | "(" pred ")"
//             | ID "@" ID | ID "!=" INT | ID "=" rat | linear
//   linear   := sum cmp rat              cmp := < | <= | = | >= | >
//   sum      := ["-"] term (("+" | "-") term)*
//   term     := [INT ["*"]] ID
//   rat      := ["-"] INT ["/" INT]
//
// "#" starts a comment running to end of line. Keywords are reserved and
// cannot be used as identifiers.
#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "hrd/model.hpp"

namespace hrd {

namespace detail {

enum class Tok {
  ident,
  number,      // unsigned integer literal
  lbrace, rbrace, lparen, rparen, lbracket, rbracket,
  semi, comma, at, plus, minus, star, slash,
  lt, le, gt, ge, eq, neq, assign, arrow, dotdot,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  Int value;  // for Tok::number
  int line = 1;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::vector<Diagnostic>& diags)
      : src_(src), diags_(&diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) break;
      char c = src_[pos_];
      int line = line_;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          ++pos_;
        }
        out.push_back({Tok::ident, std::string(src_.substr(start, pos_ - start)),
                       Int(0), line});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          ++pos_;
        }
        Token t{Tok::number, std::string(src_.substr(start, pos_ - start)),
                Int(0), line};
        t.value = Int(t.text);
        out.push_back(std::move(t));
        continue;
      }
      ++pos_;
      switch (c) {
        case '{': out.push_back({Tok::lbrace, "{", Int(0), line}); break;
        case '}': out.push_back({Tok::rbrace, "}", Int(0), line}); break;
        case '(': out.push_back({Tok::lparen, "(", Int(0), line}); break;
        case ')': out.push_back({Tok::rparen, ")", Int(0), line}); break;
        case '[': out.push_back({Tok::lbracket, "[", Int(0), line}); break;
        case ']': out.push_back({Tok::rbracket, "]", Int(0), line}); break;
        case ';': out.push_back({Tok::semi, ";", Int(0), line}); break;
        case ',': out.push_back({Tok::comma, ",", Int(0), line}); break;
        case '@': out.push_back({Tok::at, "@", Int(0), line}); break;
        case '+': out.push_back({Tok::plus, "+", Int(0), line}); break;
        case '*': out.push_back({Tok::star, "*", Int(0), line}); break;
        case '/': out.push_back({Tok::slash, "/", Int(0), line}); break;
        case '-':
          if (peek('>')) {
            ++pos_;
            out.push_back({Tok::arrow, "->", Int(0), line});
          } else {
            out.push_back({Tok::minus, "-", Int(0), line});
          }
          break;
        case '<':
          if (peek('=')) {
            ++pos_;
            out.push_back({Tok::le, "<=", Int(0), line});
          } else {
            out.push_back({Tok::lt, "<", Int(0), line});
          }
          break;
        case '>':
          if (peek('=')) {
            ++pos_;
            out.push_back({Tok::ge, ">=", Int(0), line});
          } else {
            out.push_back({Tok::gt, ">", Int(0), line});
          }
          break;
        case '=': out.push_back({Tok::eq, "=", Int(0), line}); break;
        case '!':
          if (peek('=')) {
            ++pos_;
            out.push_back({Tok::neq, "!=", Int(0), line});
          } else {
            diags_->push_back({line, "stray '!' (did you mean '!=')"});
          }
          break;
        case ':':
          if (peek('=')) {
            ++pos_;
            out.push_back({Tok::assign, ":=", Int(0), line});
          } else {
            diags_->push_back({line, "stray ':' (did you mean ':=')"});
          }
          break;
        case '.':
          if (peek('.')) {
            ++pos_;
            out.push_back({Tok::dotdot, "..", Int(0), line});
          } else {
            diags_->push_back({line, "stray '.' (did you mean '..')"});
          }
          break;
        default:
          diags_->push_back(
              {line, std::string("unexpected character '") + c + "'"});
          break;
      }
    }
    out.push_back({Tok::end, "<end of input>", Int(0), line_});
    return out;
  }

 private:
  bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::vector<Diagnostic>* diags_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace detail

// Parses a model. Returns the AST on success; on failure returns nullopt and
// at least one entry in `diags`. The parser stops at the first syntax error.
class Parser {
 public:
  static std::optional<ModelAst> parse(std::string_view text,
                                       std::vector<Diagnostic>& diags) {
    detail::Lexer lexer(text, diags);
    auto tokens = lexer.run();
    if (!diags.empty()) return std::nullopt;
    Parser p(std::move(tokens), diags);
    auto ast = p.model();
    if (!diags.empty()) return std::nullopt;
    return ast;
  }

 private:
  using Tok = detail::Tok;
  using Token = detail::Token;

  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags)
      : tokens_(std::move(tokens)), diags_(&diags) {}

  const Token& cur() const { return tokens_[pos_]; }
  const Token& next() const {
    return tokens_[pos_ + 1 < tokens_.size() ? pos_ + 1 : tokens_.size() - 1];
  }
  void advance() {
    if (pos_ + 1 < tokens_.size()) ++pos_;
  }

  bool at(Tok k) const { return cur().kind == k; }
  bool at_word(const char* w) const {
    return cur().kind == Tok::ident && cur().text == w;
  }

  void fail(const std::string& message) {
    if (!failed_) {
      diags_->push_back({cur().line, message + " (found '" + cur().text + "')"});
    }
    failed_ = true;
  }

  bool expect(Tok k, const char* what) {
    if (failed_) return false;
    if (!at(k)) {
      fail(std::string("expected ") + what);
      return false;
    }
    advance();
    return true;
  }

  bool expect_word(const char* w) {
    if (failed_) return false;
    if (!at_word(w)) {
      fail(std::string("expected '") + w + "'");
      return false;
    }
    advance();
    return true;
  }

  static bool is_keyword(const std::string& s) {
    static const char* const kw[] = {
        "param",  "dense", "discrete", "in",   "init",  "process",
        "mode",   "inv",   "rate",     "trans", "guard", "set",
        "initially", "risk", "and",    "or",    "true",  "false", "inf",
    };
    for (const char* k : kw) {
      if (s == k) return true;
    }
    return false;
  }

  std::string ident(const char* what) {
    if (failed_) return {};
    if (!at(Tok::ident)) {
      fail(std::string("expected ") + what);
      return {};
    }
    if (is_keyword(cur().text)) {
      fail("'" + cur().text + "' is a keyword and cannot be used as " + what);
      return {};
    }
    std::string s = cur().text;
    advance();
    return s;
  }

  std::int64_t signed_int(const char* what) {
    if (failed_) return 0;
    bool neg = false;
    if (at(Tok::minus)) {
      neg = true;
      advance();
    }
    if (!at(Tok::number)) {
      fail(std::string("expected ") + what);
      return 0;
    }
    Int v = cur().value;
    advance();
    if (neg) v = -v;
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max()) {
      fail("integer literal out of range");
      return 0;
    }
    return static_cast<std::int64_t>(v);
  }

  Rational rational(const char* what) {
    if (failed_) return Rational(0);
    bool neg = false;
    if (at(Tok::minus)) {
      neg = true;
      advance();
    }
    if (!at(Tok::number)) {
      fail(std::string("expected ") + what);
      return Rational(0);
    }
    Int num = cur().value;
    advance();
    Int den = 1;
    if (at(Tok::slash)) {
      advance();
      if (!at(Tok::number)) {
        fail("expected denominator after '/'");
        return Rational(0);
      }
      den = cur().value;
      advance();
      if (den == 0) {
        fail("zero denominator");
        return Rational(0);
      }
    }
    Rational r(num, den);
    return neg ? -r : r;
  }

  // ("[" | "(") end "," end ("]" | ")"). An "inf" end is always treated as
  // open; the printer renders it with a round bracket.
  Interval interval() {
    Interval iv;
    bool lo_closed;
    if (at(Tok::lbracket)) {
      lo_closed = true;
      advance();
    } else if (at(Tok::lparen)) {
      lo_closed = false;
      advance();
    } else {
      fail("expected '[' or '(' starting an interval");
      return iv;
    }
    iv.lo_open = !lo_closed;
    if (at_word("inf") || (at(Tok::minus) && next().kind == Tok::ident &&
                           next().text == "inf")) {
      bool neg = at(Tok::minus);
      if (neg) advance();
      advance();  // inf
      if (!neg) {
        fail("lower interval end cannot be +inf");
        return iv;
      }
      iv.lo.reset();
      iv.lo_open = true;
    } else {
      iv.lo = rational("interval lower end");
    }
    expect(Tok::comma, "','");
    if (at_word("inf")) {
      advance();
      iv.hi.reset();
      iv.hi_open = true;
    } else {
      iv.hi = rational("interval upper end");
    }
    if (at(Tok::rbracket)) {
      iv.hi_open = iv.hi_open || false;
      advance();
    } else if (at(Tok::rparen)) {
      iv.hi_open = true;
      advance();
    } else {
      fail("expected ']' or ')' closing an interval");
    }
    if (!iv.hi) iv.hi_open = true;
    return iv;
  }

  // --- predicates -------------------------------------------------------

  PredNode pred() {
    PredNode left = conj();
    if (failed_) return left;
    if (!at_word("or")) return left;
    PredNode d;
    d.kind = PredNode::Kind::disj;
    d.line = left.line;
    d.children.push_back(std::move(left));
    while (at_word("or")) {
      advance();
      d.children.push_back(conj());
      if (failed_) break;
    }
    return d;
  }

  PredNode conj() {
    PredNode left = atom();
    if (failed_) return left;
    if (!at_word("and")) return left;
    PredNode c;
    c.kind = PredNode::Kind::conj;
    c.line = left.line;
    c.children.push_back(std::move(left));
    while (at_word("and")) {
      advance();
      c.children.push_back(atom());
      if (failed_) break;
    }
    return c;
  }

  static bool is_cmp(Tok k) {
    return k == Tok::lt || k == Tok::le || k == Tok::eq || k == Tok::ge ||
           k == Tok::gt;
  }

  PredNode atom() {
    PredNode p;
    p.line = cur().line;
    if (failed_) return p;
    if (at_word("true")) {
      advance();
      p = PredNode::truth(true);
      p.line = cur().line;
      return p;
    }
    if (at_word("false")) {
      advance();
      p = PredNode::truth(false);
      p.line = cur().line;
      return p;
    }
    if (at(Tok::lparen)) {
      advance();
      p = pred();
      expect(Tok::rparen, "')'");
      return p;
    }
    if (at(Tok::ident)) {
      if (next().kind == Tok::at) {
        p.kind = PredNode::Kind::mode_test;
        p.proc_name = ident("a process name");
        advance();  // @
        p.mode_name = ident("a mode name");
        return p;
      }
      if (next().kind == Tok::neq) {
        p.kind = PredNode::Kind::neq_test;
        p.lhs_name = ident("a discrete variable");
        advance();  // !=
        p.int_value = signed_int("an integer value");
        return p;
      }
      if (next().kind == Tok::eq) {
        p.kind = PredNode::Kind::eq_test;
        p.lhs_name = ident("a variable");
        advance();  // =
        p.rhs = rational("a value");
        return p;
      }
    }
    return linear();
  }

  PredNode linear() {
    PredNode p;
    p.kind = PredNode::Kind::linear;
    p.line = cur().line;
    bool first = true;
    while (true) {
      bool neg = false;
      if (at(Tok::minus)) {
        neg = true;
        advance();
      } else if (at(Tok::plus)) {
        if (first) {
          fail("a sum cannot start with '+'");
          return p;
        }
        advance();
      } else if (!first) {
        break;
      }
      Int coeff = 1;
      if (at(Tok::number)) {
        coeff = cur().value;
        advance();
        if (at(Tok::star)) advance();
      }
      std::string name = ident("a dense variable in a linear term");
      if (failed_) return p;
      if (neg) coeff = -coeff;
      p.terms.emplace_back(std::move(name), std::move(coeff));
      first = false;
      if (!at(Tok::plus) && !at(Tok::minus)) break;
    }
    if (!is_cmp(cur().kind)) {
      fail("expected a comparison operator");
      return p;
    }
    switch (cur().kind) {
      case Tok::lt: p.op = CmpOp::lt; break;
      case Tok::le: p.op = CmpOp::le; break;
      case Tok::eq: p.op = CmpOp::eq; break;
      case Tok::ge: p.op = CmpOp::ge; break;
      case Tok::gt: p.op = CmpOp::gt; break;
      default: break;
    }
    advance();
    p.rhs = rational("a rational right-hand side");
    return p;
  }

  // --- declarations and blocks -------------------------------------------

  ModelAst model() {
    ModelAst ast;
    while (!failed_) {
      if (at_word("param")) {
        int line = cur().line;
        advance();
        ast.params.push_back({ident("a parameter name"), line});
        expect(Tok::semi, "';'");
      } else if (at_word("dense")) {
        int line = cur().line;
        advance();
        ast.dense_globals.push_back({ident("a dense variable name"), line});
        expect(Tok::semi, "';'");
      } else if (at_word("discrete")) {
        DiscreteDecl d;
        d.line = cur().line;
        advance();
        d.name = ident("a discrete variable name");
        expect_word("in");
        d.lo = signed_int("a lower domain bound");
        expect(Tok::dotdot, "'..'");
        d.hi = signed_int("an upper domain bound");
        expect_word("init");
        d.init = signed_int("an initial value");
        expect(Tok::semi, "';'");
        ast.discretes.push_back(std::move(d));
      } else {
        break;
      }
    }
    while (!failed_ && at_word("process")) {
      ast.processes.push_back(process());
    }
    if (!failed_ && ast.processes.empty()) {
      fail("a model needs at least one process");
    }
    expect_word("initially");
    ast.initially = pred();
    expect(Tok::semi, "';'");
    expect_word("risk");
    ast.risk = pred();
    expect(Tok::semi, "';'");
    if (!failed_ && !at(Tok::end)) {
      fail("unexpected trailing input after the risk predicate");
    }
    return ast;
  }

  ProcessDecl process() {
    ProcessDecl proc;
    proc.line = cur().line;
    expect_word("process");
    proc.name = ident("a process name");
    expect(Tok::lbrace, "'{'");
    while (!failed_ && at_word("dense")) {
      int line = cur().line;
      advance();
      proc.dense_locals.push_back(ident("a dense variable name"));
      proc.local_lines.push_back(line);
      expect(Tok::semi, "';'");
    }
    while (!failed_ && (at_word("mode") || at_word("trans"))) {
      if (at_word("mode")) {
        proc.modes.push_back(mode());
      } else {
        proc.transitions.push_back(transition());
      }
    }
    expect(Tok::rbrace, "'}' closing the process");
    return proc;
  }

  ModeDecl mode() {
    ModeDecl m;
    m.line = cur().line;
    expect_word("mode");
    m.name = ident("a mode name");
    expect(Tok::lbrace, "'{'");
    expect_word("inv");
    m.invariant = pred();
    expect(Tok::semi, "';'");
    while (!failed_ && at_word("rate")) {
      RateDecl r;
      r.line = cur().line;
      advance();
      r.var = ident("a dense variable name");
      expect_word("in");
      r.range = interval();
      expect(Tok::semi, "';'");
      m.rates.push_back(std::move(r));
    }
    expect(Tok::rbrace, "'}' closing the mode");
    return m;
  }

  TransDecl transition() {
    TransDecl t;
    t.line = cur().line;
    expect_word("trans");
    t.from = ident("a source mode name");
    expect(Tok::arrow, "'->'");
    t.to = ident("a target mode name");
    expect(Tok::lbrace, "'{'");
    expect_word("guard");
    t.guard = pred();
    expect(Tok::semi, "';'");
    while (!failed_ && at_word("set")) {
      AssignDecl a;
      a.line = cur().line;
      advance();
      a.var = ident("a variable name");
      expect(Tok::assign, "':='");
      a.value = interval();
      expect(Tok::semi, "';'");
      t.sets.push_back(std::move(a));
    }
    expect(Tok::rbrace, "'}' closing the transition");
    return t;
  }

  std::vector<Token> tokens_;
  std::vector<Diagnostic>* diags_;
  std::size_t pos_ = 0;
  bool failed_ = false;
};

}  // namespace hrd
