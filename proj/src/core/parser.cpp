#include "parser.hpp"

#include <cctype>
#include <sstream>

namespace regdef {

namespace {

// Literal exponents are capped well below the int64 range so that products
// of any realistic number of generators cannot overflow.
constexpr Exp kMaxLiteral = Exp(1) << 40;

struct Token {
  enum class Kind { plus, star, caret, lparen, rparen, comma, integer, variable, m_ctor, mp_ctor, one, end };
  Kind kind = Kind::end;
  Exp value = 0;  // integer payload or variable index (zero-based)
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) {
      tok.kind = Token::Kind::end;
      return tok;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': advance(); tok.kind = Token::Kind::plus; return tok;
      case '*': advance(); tok.kind = Token::Kind::star; return tok;
      case '^': advance(); tok.kind = Token::Kind::caret; return tok;
      case '(': advance(); tok.kind = Token::Kind::lparen; return tok;
      case ')': advance(); tok.kind = Token::Kind::rparen; return tok;
      case ',': advance(); tok.kind = Token::Kind::comma; return tok;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.kind = Token::Kind::integer;
      tok.value = read_int(tok);
      return tok;
    }
    if (c == 'x') {
      advance();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        error(tok, "expected a variable index after 'x'");
      }
      const Exp index = read_int(tok);
      if (index < 1) error(tok, "variable indices start at 1");
      tok.kind = Token::Kind::variable;
      tok.value = index - 1;
      return tok;
    }
    if (c == 'M') {
      advance();
      if (pos_ < text_.size() && text_[pos_] == 'P') {
        advance();
        tok.kind = Token::Kind::mp_ctor;
      } else {
        tok.kind = Token::Kind::m_ctor;
      }
      return tok;
    }
    error(tok, std::string("unexpected character '") + c + "'");
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

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  Exp read_int(const Token& at) {
    Exp value = 0;
    bool any = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxLiteral) error(at, "integer literal too large");
      advance();
      any = true;
    }
    if (!any) error(at, "expected an integer");
    return value;
  }

  [[noreturn]] void error(const Token& at, const std::string& message) const {
    std::ostringstream out;
    out << "line " << at.line << ", column " << at.column << ": " << message;
    fail(Errc::parse, out.str());
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(const std::string& text, int vars) : lexer_(text), vars_(vars) {
    if (vars < 1) fail(Errc::invalid_argument, "variable count must be positive");
    shift();
  }

  IdealExpr parse() {
    IdealExpr e = expr();
    expect(Token::Kind::end, "expected end of input");
    return e;
  }

 private:
  IdealExpr expr() {
    IdealExpr node;
    node.kind = IdealExpr::Kind::sum;
    node.children.push_back(term());
    while (current_.kind == Token::Kind::plus) {
      shift();
      node.children.push_back(term());
    }
    if (node.children.size() == 1) return std::move(node.children.front());
    return node;
  }

  IdealExpr term() {
    IdealExpr node;
    node.kind = IdealExpr::Kind::prod;
    node.children.push_back(factor());
    while (current_.kind == Token::Kind::star) {
      shift();
      node.children.push_back(factor());
    }
    if (node.children.size() == 1) return std::move(node.children.front());
    return node;
  }

  IdealExpr factor() {
    IdealExpr base = atom();
    if (current_.kind == Token::Kind::caret) {
      shift();
      const Token t = expect(Token::Kind::integer, "expected an exponent");
      if (base.kind == IdealExpr::Kind::var) {
        base.value = t.value;  // variable powers fold into the atom
        return base;
      }
      IdealExpr node;
      node.kind = IdealExpr::Kind::pow;
      node.value = t.value;
      node.children.push_back(std::move(base));
      return node;
    }
    return base;
  }

  IdealExpr atom() {
    switch (current_.kind) {
      case Token::Kind::lparen: {
        shift();
        IdealExpr inner = expr();
        expect(Token::Kind::rparen, "expected ')'");
        return inner;
      }
      case Token::Kind::variable: {
        IdealExpr node;
        node.kind = IdealExpr::Kind::var;
        node.var_index = static_cast<int>(current_.value);
        node.value = 1;
        if (node.var_index >= vars_) {
          error(current_, "undeclared variable x" + std::to_string(node.var_index + 1) +
                              " (ring has " + std::to_string(vars_) + " variables)");
        }
        shift();
        return node;
      }
      case Token::Kind::integer: {
        if (current_.value != 1) {
          error(current_, "only the literal 1 may appear as an atom");
        }
        IdealExpr node;
        node.kind = IdealExpr::Kind::one;
        shift();
        return node;
      }
      case Token::Kind::m_ctor: {
        const Token at = current_;
        shift();
        expect(Token::Kind::lparen, "expected '(' after M");
        const Token q = expect(Token::Kind::integer, "expected an integer in M(...)");
        expect(Token::Kind::rparen, "expected ')'");
        if (q.value < 1) error(at, "M(q) requires q >= 1");
        IdealExpr node;
        node.kind = IdealExpr::Kind::max_power;
        node.value = q.value;
        return node;
      }
      case Token::Kind::mp_ctor: {
        const Token at = current_;
        shift();
        expect(Token::Kind::lparen, "expected '(' after MP");
        IdealExpr node;
        node.kind = IdealExpr::Kind::pure_powers;
        for (;;) {
          const Token e = expect(Token::Kind::integer, "expected an integer in MP(...)");
          if (e.value < 1) error(at, "MP entries must be positive");
          node.entries.push_back(e.value);
          if (current_.kind == Token::Kind::comma) {
            shift();
            continue;
          }
          break;
        }
        expect(Token::Kind::rparen, "expected ')'");
        if (static_cast<int>(node.entries.size()) != vars_) {
          error(at, "MP arity " + std::to_string(node.entries.size()) +
                        " does not match the declared " + std::to_string(vars_) +
                        " variables");
        }
        return node;
      }
      default:
        error(current_, "expected an ideal atom");
    }
  }

  Token expect(Token::Kind kind, const std::string& message) {
    if (current_.kind != kind) error(current_, message);
    Token t = current_;
    shift();
    return t;
  }

  void shift() { current_ = lexer_.next(); }

  [[noreturn]] void error(const Token& at, const std::string& message) const {
    std::ostringstream out;
    out << "line " << at.line << ", column " << at.column << ": " << message;
    fail(Errc::parse, out.str());
  }

  Lexer lexer_;
  Token current_;
  int vars_;
};

void render(const IdealExpr& e, std::ostream& out, bool parenthesize) {
  switch (e.kind) {
    case IdealExpr::Kind::sum: {
      if (parenthesize) out << '(';
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out << " + ";
        render(e.children[i], out, false);
      }
      if (parenthesize) out << ')';
      return;
    }
    case IdealExpr::Kind::prod: {
      if (parenthesize) out << '(';
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out << '*';
        render(e.children[i], out, e.children[i].kind == IdealExpr::Kind::sum);
      }
      if (parenthesize) out << ')';
      return;
    }
    case IdealExpr::Kind::pow: {
      render(e.children.front(), out, true);
      out << '^' << e.value;
      return;
    }
    case IdealExpr::Kind::var: {
      out << 'x' << (e.var_index + 1);
      if (e.value != 1) out << '^' << e.value;
      return;
    }
    case IdealExpr::Kind::one:
      out << '1';
      return;
    case IdealExpr::Kind::max_power:
      out << "M(" << e.value << ')';
      return;
    case IdealExpr::Kind::pure_powers: {
      out << "MP(";
      for (std::size_t i = 0; i < e.entries.size(); ++i) {
        if (i) out << ',';
        out << e.entries[i];
      }
      out << ')';
      return;
    }
  }
}

}  // namespace

IdealExpr parse_expression(const std::string& text, int vars) {
  return Parser(text, vars).parse();
}

MonomialIdeal evaluate(const IdealExpr& expr, int vars) {
  switch (expr.kind) {
    case IdealExpr::Kind::sum: {
      MonomialIdeal acc = MonomialIdeal::zero(vars);
      for (const auto& child : expr.children) acc = sum(acc, evaluate(child, vars));
      return acc;
    }
    case IdealExpr::Kind::prod: {
      MonomialIdeal acc = MonomialIdeal::unit(vars);
      for (const auto& child : expr.children) acc = product(acc, evaluate(child, vars));
      return acc;
    }
    case IdealExpr::Kind::pow: {
      if (expr.value > 512) {
        fail(Errc::invalid_argument, "ideal power exponent too large");
      }
      return power(evaluate(expr.children.front(), vars), static_cast<int>(expr.value));
    }
    case IdealExpr::Kind::var: {
      std::vector<Exp> e(static_cast<std::size_t>(vars), 0);
      e[static_cast<std::size_t>(expr.var_index)] = expr.value;
      return minimalize(vars, {Monomial(std::move(e))});
    }
    case IdealExpr::Kind::one:
      return MonomialIdeal::unit(vars);
    case IdealExpr::Kind::max_power:
      return max_ideal_power(vars, expr.value);
    case IdealExpr::Kind::pure_powers:
      return boxed_ideal(expr.entries);
  }
  fail(Errc::internal, "unhandled expression node");
}

MonomialIdeal parse_ideal(const std::string& text, int vars) {
  return evaluate(parse_expression(text, vars), vars);
}

std::string format(const IdealExpr& expr) {
  std::ostringstream out;
  render(expr, out, false);
  return out.str();
}

}  // namespace regdef
