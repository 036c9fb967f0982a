#include "gpif/session.hpp"

#include <algorithm>
#include <cctype>

namespace gpif {

namespace {

struct Token {
  enum class Kind { Ident, Number, Symbol, End } kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '#')) {
      if (text_[pos_] == '#') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else {
        bump();
      }
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      tok_.text.clear();
      return;
    }
    char c = text_[pos_];
    // a leading '/' opens an identifier only when a path can follow, so the
    // quotient '/' of `Z^2 / [[6,0]]` still lexes as a symbol
    const bool path_start =
        c == '/' && pos_ + 1 < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '_' ||
         text_[pos_ + 1] == '.');
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || path_start) {
      std::string s;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '-' || text_[pos_] == '.' || text_[pos_] == '/')) {
        // '-', '.' and '/' admitted inside identifiers for command verbs and
        // file paths; any of them starting a token stays a symbol
        s += text_[pos_];
        bump();
      }
      tok_ = {Token::Kind::Ident, s, tok_.line, tok_.col};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        s += text_[pos_];
        bump();
      }
      tok_ = {Token::Kind::Number, s, tok_.line, tok_.col};
      return;
    }
    tok_ = {Token::Kind::Symbol, std::string(1, c), tok_.line, tok_.col};
    bump();
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

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& why) {
  throw ParseError(t.line, t.col, why);
}

[[noreturn]] void fail_non_monomial(const Token& t) {
  fail(t, "unsupported: non-monomial input (general polynomial and quotient-ring "
          "inputs such as k[x,y,z]/(x*y - z^2) are out of scope)");
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Session run() {
    Session s;
    while (lex_.peek().kind != Token::Kind::End) {
      Statement st = statement(s);
      if (st.kind != Statement::Kind::Command && st.kind != Statement::Kind::Ring) {
        if (s.names.count(st.name)) fail(lex_.peek(), "name '" + st.name + "' already declared");
        s.names[st.name] = s.statements.size();
      }
      s.statements.push_back(std::move(st));
    }
    return s;
  }

 private:
  Token expect_ident(const std::string& what) {
    if (lex_.peek().kind != Token::Kind::Ident) fail(lex_.peek(), "expected " + what);
    return lex_.next();
  }

  void expect_symbol(const std::string& sym) {
    if (lex_.peek().kind != Token::Kind::Symbol || lex_.peek().text != sym)
      fail(lex_.peek(), "expected '" + sym + "'");
    lex_.next();
  }

  bool eat_symbol(const std::string& sym) {
    if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == sym) {
      lex_.next();
      return true;
    }
    return false;
  }

  long long expect_number() {
    bool neg = eat_symbol("-");
    if (lex_.peek().kind != Token::Kind::Number) fail(lex_.peek(), "expected a number");
    long long v = std::stoll(lex_.next().text);
    return neg ? -v : v;
  }

  int var_index(const Session& s, const Token& t) {
    auto it = std::find(s.ring_vars.begin(), s.ring_vars.end(), t.text);
    if (it == s.ring_vars.end()) {
      if (t.text.find('-') != std::string::npos || t.text.find('+') != std::string::npos)
        fail_non_monomial(t);
      fail(t, "unknown variable '" + t.text + "'");
    }
    return static_cast<int>(it - s.ring_vars.begin());
  }

  // var(^exp)? (* var(^exp)?)* | 1 ; additive operators are rejected
  Monomial monomial(const Session& s) {
    std::vector<int> e(s.ring_vars.size(), 0);
    if (lex_.peek().kind == Token::Kind::Number) {
      Token t = lex_.next();
      if (t.text != "1")
        fail(t, "coefficients are not supported; monomials only");
    } else {
      while (true) {
        Token v = expect_ident("a variable");
        int idx = var_index(s, v);
        int exp = 1;
        if (eat_symbol("^")) exp = static_cast<int>(expect_number());
        if (exp < 0) fail(v, "negative exponent");
        e[static_cast<std::size_t>(idx)] += exp;
        if (!eat_symbol("*")) break;
        if (lex_.peek().kind == Token::Kind::Number) fail(lex_.peek(), "coefficients are not supported");
      }
    }
    if (lex_.peek().kind == Token::Kind::Symbol &&
        (lex_.peek().text == "+" || lex_.peek().text == "-"))
      fail_non_monomial(lex_.peek());
    return Monomial(std::move(e));
  }

  std::vector<Int> int_vector() {
    expect_symbol("[");
    std::vector<Int> v;
    if (!eat_symbol("]")) {
      do {
        v.emplace_back(expect_number());
      } while (eat_symbol(","));
      expect_symbol("]");
    }
    return v;
  }

  // `(x,y)` / `(2)` / `(0)` depending on the ring
  PrimeIdeal prime_literal(const Session& s) {
    expect_symbol("(");
    PrimeIdeal p;
    if (s.ring_is_z) {
      p = PrimeIdeal::integer(expect_number());
    } else {
      std::vector<int> vars;
      do {
        vars.push_back(var_index(s, expect_ident("a variable")));
      } while (eat_symbol(","));
      p = PrimeIdeal::monomial(std::move(vars));
    }
    expect_symbol(")");
    return p;
  }

  Statement statement(Session& s) {
    Token head = expect_ident("a statement");
    Statement st;
    if (head.text == "ring") {
      if (s.has_ring) fail(head, "ring already declared");
      st.kind = Statement::Kind::Ring;
      Token r = expect_ident("a ring");
      if (r.text == "Z") {
        st.ring_is_z = true;
      } else if (r.text == "Q" || r.text == "k") {
        expect_symbol("[");
        do {
          st.ring_vars.push_back(expect_ident("a variable name").text);
        } while (eat_symbol(","));
        expect_symbol("]");
      } else {
        fail(r, "expected 'Z' or 'Q[vars]'");
      }
      expect_symbol(";");
      s.has_ring = true;
      s.ring_is_z = st.ring_is_z;
      s.ring_vars = st.ring_vars;
      return st;
    }
    if (!s.has_ring) fail(head, "declare a ring first");

    if (head.text == "ideal") {
      if (s.ring_is_z) fail(head, "ideal declarations need a polynomial ring");
      st.kind = Statement::Kind::Ideal;
      st.name = expect_ident("an ideal name").text;
      expect_symbol("=");
      do {
        st.ideal_gens.push_back(monomial(s));
      } while (eat_symbol(","));
      expect_symbol(";");
      return st;
    }

    if (head.text == "module") {
      st.kind = Statement::Kind::Module;
      st.name = expect_ident("a module name").text;
      expect_symbol("=");
      Token base = expect_ident("'R' or 'Z'");
      if ((base.text == "R") == s.ring_is_z)
        fail(base, s.ring_is_z ? "use Z^n over the ring Z" : "use R^k over a polynomial ring");
      expect_symbol("^");
      st.rank = static_cast<int>(expect_number());
      if (st.rank < 1) fail(base, "rank must be positive");
      if (eat_symbol("/")) {
        if (!s.ring_is_z) fail(base, "relations are only supported over Z");
        expect_symbol("[");
        do {
          auto col = int_vector();
          if (static_cast<int>(col.size()) != st.rank) fail(base, "relation column length mismatch");
          st.relations.push_back(std::move(col));
        } while (eat_symbol(","));
        expect_symbol("]");
      }
      expect_symbol(";");
      return st;
    }

    if (head.text == "sub") {
      st.kind = Statement::Kind::Sub;
      st.name = expect_ident("a submodule name").text;
      Token of = expect_ident("'of'");
      if (of.text != "of") fail(of, "expected 'of'");
      Token parent = expect_ident("a module name");
      auto it = s.names.find(parent.text);
      if (it == s.names.end() || s.statements[it->second].kind != Statement::Kind::Module)
        fail(parent, "unknown module '" + parent.text + "'");
      st.parent = parent.text;
      int rank = s.statements[it->second].rank;
      expect_symbol("=");
      do {
        if (s.ring_is_z) {
          auto col = int_vector();
          if (static_cast<int>(col.size()) != rank) fail(parent, "generator column length mismatch");
          st.z_columns.push_back(std::move(col));
        } else {
          expect_symbol("[");
          std::vector<std::optional<Monomial>> col;
          do {
            if (lex_.peek().kind == Token::Kind::Number && lex_.peek().text == "0") {
              lex_.next();
              col.push_back(std::nullopt);
            } else {
              col.push_back(monomial(s));
            }
          } while (eat_symbol(","));
          expect_symbol("]");
          if (static_cast<int>(col.size()) != rank) fail(parent, "generator column length mismatch");
          st.mono_columns.push_back(std::move(col));
        }
      } while (eat_symbol(","));
      expect_symbol(";");
      return st;
    }

    // commands
    static const std::vector<std::string> kCommands = {
        "factor", "filtration", "ass",        "colon",       "intersect",
        "ann",    "compare-ann", "compare-intersection", "verify"};
    if (std::find(kCommands.begin(), kCommands.end(), head.text) == kCommands.end())
      fail(head, "unknown statement '" + head.text + "'");
    st.kind = Statement::Kind::Command;
    st.verb = head.text;

    auto object_arg = [&]() {
      Token t = expect_ident("an object name");
      if (!s.names.count(t.text)) fail(t, "unknown name '" + t.text + "'");
      st.args.push_back(t.text);
    };

    if (st.verb == "factor" || st.verb == "filtration" || st.verb == "ass" ||
        st.verb == "ann" || st.verb == "compare-ann") {
      object_arg();
    } else if (st.verb == "intersect" || st.verb == "compare-intersection") {
      object_arg();
      object_arg();
    } else if (st.verb == "colon") {
      object_arg();
      if (lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "(")
        st.prime_arg = prime_literal(s);
      else
        object_arg();
    } else {  // verify <file>
      Token t = expect_ident("a filtration file");
      st.args.push_back(t.text);
    }
    expect_symbol(";");
    return st;
  }

  Lexer lex_;
};

}  // namespace

Session parse_session(const std::string& text) { return Parser(text).run(); }

namespace {

std::string mono_str(const Monomial& m, const std::vector<std::string>& names) {
  return m.to_string(names);
}

}  // namespace

std::string print_session(const Session& s) {
  std::string out;
  for (const auto& st : s.statements) {
    switch (st.kind) {
      case Statement::Kind::Ring:
        if (st.ring_is_z) {
          out += "ring Z;\n";
        } else {
          out += "ring Q[";
          for (std::size_t i = 0; i < st.ring_vars.size(); ++i)
            out += (i ? "," : "") + st.ring_vars[i];
          out += "];\n";
        }
        break;
      case Statement::Kind::Ideal: {
        out += "ideal " + st.name + " = ";
        for (std::size_t i = 0; i < st.ideal_gens.size(); ++i)
          out += (i ? ", " : "") + mono_str(st.ideal_gens[i], s.ring_vars);
        out += ";\n";
        break;
      }
      case Statement::Kind::Module: {
        out += "module " + st.name + " = " + (st.ring_is_z || s.ring_is_z ? "Z" : "R") + "^" +
               std::to_string(st.rank);
        if (!st.relations.empty()) {
          out += " / [";
          for (std::size_t j = 0; j < st.relations.size(); ++j) {
            out += j ? ",[" : "[";
            for (std::size_t i = 0; i < st.relations[j].size(); ++i)
              out += (i ? "," : "") + st.relations[j][i].str();
            out += "]";
          }
          out += "]";
        }
        out += ";\n";
        break;
      }
      case Statement::Kind::Sub: {
        out += "sub " + st.name + " of " + st.parent + " = ";
        if (!st.z_columns.empty() || st.mono_columns.empty()) {
          for (std::size_t j = 0; j < st.z_columns.size(); ++j) {
            out += j ? ", [" : "[";
            for (std::size_t i = 0; i < st.z_columns[j].size(); ++i)
              out += (i ? "," : "") + st.z_columns[j][i].str();
            out += "]";
          }
        }
        for (std::size_t j = 0; j < st.mono_columns.size(); ++j) {
          out += j ? ", [" : "[";
          for (std::size_t i = 0; i < st.mono_columns[j].size(); ++i) {
            if (i) out += ", ";
            out += st.mono_columns[j][i] ? mono_str(*st.mono_columns[j][i], s.ring_vars) : "0";
          }
          out += "]";
        }
        out += ";\n";
        break;
      }
      case Statement::Kind::Command: {
        out += st.verb;
        for (auto& a : st.args) out += " " + a;
        if (st.prime_arg) out += " " + show_prime(*st.prime_arg, s.ring_vars);
        out += ";\n";
        break;
      }
    }
  }
  return out;
}

}  // namespace gpif
