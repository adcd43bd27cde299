#include <cctype>

#include "systemt/syntax.hpp"

namespace systemt {

namespace {

enum class Tok { Ident, Number, Zero, Succ, Rec, Fun, Nat, LParen, RParen, LBrack, RBrack, Colon, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    SourcePos pos{line, col};
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {  // line comment
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      std::string word(src.substr(i, j - i));
      Tok k = Tok::Ident;
      if (word == "zero") k = Tok::Zero;
      else if (word == "succ") k = Tok::Succ;
      else if (word == "rec") k = Tok::Rec;
      else if (word == "fun") k = Tok::Fun;
      else if (word == "nat") k = Tok::Nat;
      out.push_back({k, std::move(word), pos});
      advance(j - i);
      continue;
    }
    if ((c == '-' || c == '=') && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Arrow, std::string(src.substr(i, 2)), pos});
      advance(2);
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBrack; break;
      case ']': k = Tok::RBrack; break;
      case ':': k = Tok::Colon; break;
      default:
        throw ParseError(pos, "a token, found '" + std::string(1, c) + "'");
    }
    out.push_back({k, std::string(1, c), pos});
    advance(1);
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  RawTerm whole_term() {
    RawTerm t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  Ty whole_type() {
    Ty t = type();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  const Token& expect(Tok k, const std::string& what) {
    if (!at(k)) throw ParseError(peek().pos, what);
    return next();
  }

  Ty type() {
    Ty dom = type_atom();
    if (at(Tok::Arrow)) {
      next();
      return Ty::arrow(dom, type());
    }
    return dom;
  }

  Ty type_atom() {
    if (at(Tok::Nat)) {
      next();
      return Ty::nat();
    }
    if (at(Tok::LParen)) {
      next();
      Ty t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    throw ParseError(peek().pos, "a type");
  }

  RawTerm term() {
    if (at(Tok::Fun)) return lambda();
    RawTerm head = atom();
    while (starts_atom() || at(Tok::Fun)) {
      SourcePos p = peek().pos;
      RawTerm arg = at(Tok::Fun) ? lambda() : atom();
      RawTerm app;
      app.kind = RawTerm::Kind::App;
      app.pos = p;
      app.kids.push_back(std::move(head));
      app.kids.push_back(std::move(arg));
      head = std::move(app);
    }
    return head;
  }

  bool starts_atom() const {
    switch (peek().kind) {
      case Tok::Ident:
      case Tok::Number:
      case Tok::Zero:
      case Tok::Succ:
      case Tok::Rec:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  RawTerm lambda() {
    RawTerm t;
    t.kind = RawTerm::Kind::Lam;
    t.pos = expect(Tok::Fun, "'fun'").pos;
    if (at(Tok::LParen)) {
      next();
      t.name = expect(Tok::Ident, "a variable name").text;
      expect(Tok::Colon, "':'");
      t.annot = type();
      expect(Tok::RParen, "')'");
    } else {
      t.name = expect(Tok::Ident, "a variable name or '('").text;
    }
    expect(Tok::Arrow, "'->'");
    t.kids.push_back(term());
    return t;
  }

  RawTerm atom() {
    RawTerm t;
    t.pos = peek().pos;
    switch (peek().kind) {
      case Tok::Ident:
        t.kind = RawTerm::Kind::Var;
        t.name = next().text;
        return t;
      case Tok::Zero:
        next();
        t.kind = RawTerm::Kind::Zero;
        return t;
      case Tok::Number: {
        const std::string& digits = next().text;
        if (digits.size() > 6 || std::stoull(digits) > kMaxNumeralLiteral)
          throw ParseError(t.pos, "a numeral no larger than " + std::to_string(kMaxNumeralLiteral));
        t.kind = RawTerm::Kind::Numeral;
        t.value = std::stoull(digits);
        return t;
      }
      case Tok::Succ:
        next();
        t.kind = RawTerm::Kind::Succ;
        t.kids.push_back(atom());
        return t;
      case Tok::Rec:
        next();
        t.kind = RawTerm::Kind::Rec;
        expect(Tok::LBrack, "'[' after rec");
        t.annot = type();
        expect(Tok::RBrack, "']'");
        for (int k = 0; k < 3; ++k) t.kids.push_back(atom());
        return t;
      case Tok::LParen: {
        next();
        RawTerm inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError(peek().pos, "a term");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

RawTerm parse(std::string_view text) { return Parser(text).whole_term(); }

Ty parse_type(std::string_view text) { return Parser(text).whole_type(); }

}  // namespace systemt
