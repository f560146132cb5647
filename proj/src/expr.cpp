#include "cdscope/expr.hpp"

#include <cctype>
#include <sstream>

#include "cdscope/errors.hpp"

namespace cdscope {

namespace {

struct Token {
  enum class Kind { Int, Ident, LParen, RParen, LBracket, RBracket, Comma, End };
  Kind kind = Kind::End;
  std::string text;
  long long value = 0;
  Span span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
      step();
    Token t;
    t.span = Span{static_cast<int>(pos_), static_cast<int>(pos_), line_, col_};
    if (pos_ >= input_.size()) {
      t.kind = Token::Kind::End;
      current_ = t;
      return;
    }
    char c = input_[pos_];
    if (c == '(') {
      t.kind = Token::Kind::LParen;
      t.text = "(";
      step();
    } else if (c == ')') {
      t.kind = Token::Kind::RParen;
      t.text = ")";
      step();
    } else if (c == '[') {
      t.kind = Token::Kind::LBracket;
      t.text = "[";
      step();
    } else if (c == ']') {
      t.kind = Token::Kind::RBracket;
      t.text = "]";
      step();
    } else if (c == ',') {
      t.kind = Token::Kind::Comma;
      t.text = ",";
      step();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Int;
      while (pos_ < input_.size() &&
             std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
        t.text += input_[pos_];
        step();
      }
      if (t.text.size() > 9)
        throw ParseError("integer literal too large", t.span.line, t.span.col,
                         t.span.begin, static_cast<int>(pos_));
      t.value = std::stoll(t.text);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::Ident;
      while (pos_ < input_.size() &&
             std::isalpha(static_cast<unsigned char>(input_[pos_]))) {
        t.text += input_[pos_];
        step();
      }
    } else {
      std::ostringstream os;
      os << "unexpected character '" << c << "'";
      throw ParseError(os.str(), line_, col_, static_cast<int>(pos_),
                       static_cast<int>(pos_ + 1));
    }
    t.span.end = static_cast<int>(pos_);
    current_ = t;
  }

  void step() {
    if (input_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view input) : lex_(input) {}

  GroupExpr parse_all() {
    GroupExpr e = parse_expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::End)
      throw ParseError("trailing input after expression", t.span.line,
                       t.span.col, t.span.begin, t.span.end);
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.span.line, t.span.col, t.span.begin, t.span.end);
  }

  Token expect(Token::Kind kind, const char* what) {
    const Token& t = lex_.peek();
    if (t.kind != kind) error(std::string("expected ") + what, t);
    return lex_.take();
  }

  GroupExpr parse_expr() {
    GroupExpr left = parse_term();
    while (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "x") {
      lex_.take();
      GroupExpr right = parse_term();
      GroupExpr prod;
      prod.kind = GroupExpr::Kind::Product;
      prod.span = Span{left.span.begin, right.span.end, left.span.line,
                       left.span.col};
      prod.lhs = std::make_unique<GroupExpr>(std::move(left));
      prod.rhs = std::make_unique<GroupExpr>(std::move(right));
      left = std::move(prod);
    }
    return left;
  }

  GroupExpr parse_term() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::LParen) {
      Token open = lex_.take();
      GroupExpr inner = parse_expr();
      Token close = expect(Token::Kind::RParen, "')'");
      inner.span = Span{open.span.begin, close.span.end, open.span.line,
                        open.span.col};
      return inner;
    }
    if (t.kind != Token::Kind::Ident)
      error("expected a group expression", t);
    if (t.text == "Heis") return parse_heis();
    if (t.text == "perm") return parse_perms();
    return parse_named();
  }

  GroupExpr parse_named() {
    Token id = lex_.take();
    Family family;
    if (id.text == "S")
      family = Family::Symmetric;
    else if (id.text == "A")
      family = Family::Alternating;
    else if (id.text == "D")
      family = Family::Dihedral;
    else if (id.text == "Q")
      family = Family::GeneralizedQuaternion;
    else if (id.text == "C")
      family = Family::Cyclic;
    else
      error("unknown family name '" + id.text + "' (expected S, A, D, Q, C, Heis or perm)", id);
    expect(Token::Kind::LParen, "'('");
    Token num = expect(Token::Kind::Int, "an integer parameter");
    if (num.value < 1) error("parameter must be positive", num);
    Token close = expect(Token::Kind::RParen, "')'");
    GroupExpr e;
    e.kind = GroupExpr::Kind::Named;
    e.family = family;
    e.param = static_cast<int>(num.value);
    e.span = Span{id.span.begin, close.span.end, id.span.line, id.span.col};
    return e;
  }

  GroupExpr parse_heis() {
    Token id = lex_.take();
    expect(Token::Kind::LParen, "'('");
    Token pn = expect(Token::Kind::Int, "a prime");
    if (pn.value < 2) error("characteristic must be at least 2", pn);
    expect(Token::Kind::Comma, "','");
    Token nn = expect(Token::Kind::Int, "an extension degree");
    if (nn.value < 1) error("extension degree must be positive", nn);
    Token close = expect(Token::Kind::RParen, "')'");
    GroupExpr e;
    e.kind = GroupExpr::Kind::Heisenberg;
    e.p = static_cast<int>(pn.value);
    e.n = static_cast<int>(nn.value);
    e.span = Span{id.span.begin, close.span.end, id.span.line, id.span.col};
    return e;
  }

  GroupExpr parse_perms() {
    Token id = lex_.take();
    expect(Token::Kind::LBracket, "'['");
    GroupExpr e;
    e.kind = GroupExpr::Kind::Generators;
    while (true) {
      e.perms.push_back(parse_cycleperm());
      if (lex_.peek().kind == Token::Kind::Comma) {
        lex_.take();
        continue;
      }
      break;
    }
    Token close = expect(Token::Kind::RBracket, "']'");
    e.span = Span{id.span.begin, close.span.end, id.span.line, id.span.col};
    return e;
  }

  PermSpec parse_cycleperm() {
    PermSpec spec;
    const Token& first = lex_.peek();
    if (first.kind != Token::Kind::LParen)
      error("expected a cycle", first);
    spec.span = first.span;
    std::vector<bool> seen;
    while (lex_.peek().kind == Token::Kind::LParen) {
      Token open = lex_.take();
      (void)open;
      std::vector<int> cycle;
      while (lex_.peek().kind == Token::Kind::Int) {
        Token num = lex_.take();
        if (num.value < 1) error("cycle points are 1-based", num);
        int point = static_cast<int>(num.value);
        if (static_cast<std::size_t>(point) > seen.size())
          seen.resize(point, false);
        if (seen[point - 1])
          error("point " + num.text + " repeats within one permutation", num);
        seen[point - 1] = true;
        cycle.push_back(point);
        spec.span.end = num.span.end;
      }
      if (cycle.empty()) error("empty cycle", lex_.peek());
      Token close = expect(Token::Kind::RParen, "')'");
      spec.span.end = close.span.end;
      spec.cycles.push_back(std::move(cycle));
    }
    return spec;
  }

  Lexer lex_;
};

void print_expr(std::ostream& os, const GroupExpr& e, bool parenthesize) {
  if (parenthesize) os << "(";
  switch (e.kind) {
    case GroupExpr::Kind::Named:
      os << family_letter(e.family) << "(" << e.param << ")";
      break;
    case GroupExpr::Kind::Heisenberg:
      os << "Heis(" << e.p << "," << e.n << ")";
      break;
    case GroupExpr::Kind::Product:
      // left association prints flat; a product on the right needs parens
      print_expr(os, *e.lhs, false);
      os << " x ";
      print_expr(os, *e.rhs, e.rhs->kind == GroupExpr::Kind::Product);
      break;
    case GroupExpr::Kind::Generators: {
      os << "perm[";
      for (std::size_t i = 0; i < e.perms.size(); ++i) {
        if (i) os << ", ";
        for (const auto& cyc : e.perms[i].cycles) {
          os << "(";
          for (std::size_t j = 0; j < cyc.size(); ++j) {
            if (j) os << " ";
            os << cyc[j];
          }
          os << ")";
        }
      }
      os << "]";
      break;
    }
  }
  if (parenthesize) os << ")";
}

}  // namespace

GroupExpr parse(std::string_view input) {
  bool blank = true;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) throw ParseError("empty expression", 1, 1, 0, 0);
  Parser p(input);
  return p.parse_all();
}

std::string to_string(const GroupExpr& e) {
  std::ostringstream os;
  print_expr(os, e, false);
  return os.str();
}

bool expr_equal(const GroupExpr& a, const GroupExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case GroupExpr::Kind::Named:
      return a.family == b.family && a.param == b.param;
    case GroupExpr::Kind::Heisenberg:
      return a.p == b.p && a.n == b.n;
    case GroupExpr::Kind::Product:
      return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    case GroupExpr::Kind::Generators: {
      if (a.perms.size() != b.perms.size()) return false;
      for (std::size_t i = 0; i < a.perms.size(); ++i)
        if (a.perms[i].cycles != b.perms[i].cycles) return false;
      return true;
    }
  }
  return false;
}

namespace {

[[noreturn]] void rethrow_with_span(const Error& err, const Span& span) {
  std::ostringstream os;
  os << "at " << span.line << ":" << span.col << ": " << err.what();
  if (dynamic_cast<const SizeError*>(&err)) throw SizeError(os.str());
  if (dynamic_cast<const PreconditionError*>(&err))
    throw PreconditionError(os.str());
  throw ValidationError(os.str());
}

}  // namespace

FiniteGroup evaluate(const GroupExpr& e, const Limits& limits) {
  try {
    switch (e.kind) {
      case GroupExpr::Kind::Named:
        return make_named(e.family, e.param, limits);
      case GroupExpr::Kind::Heisenberg:
        return heisenberg(e.p, e.n, limits);
      case GroupExpr::Kind::Product: {
        FiniteGroup lhs = evaluate(*e.lhs, limits);
        FiniteGroup rhs = evaluate(*e.rhs, limits);
        return direct_product(lhs, rhs, limits);
      }
      case GroupExpr::Kind::Generators: {
        int degree = 1;
        for (const auto& spec : e.perms)
          for (const auto& cyc : spec.cycles)
            for (int pt : cyc) degree = std::max(degree, pt);
        std::vector<Permutation> gens;
        gens.reserve(e.perms.size());
        for (const auto& spec : e.perms)
          gens.push_back(Permutation::from_cycles(spec.cycles, degree));
        return close_generators(gens, limits, to_string(e));
      }
    }
    throw ValidationError("unknown expression node");
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    rethrow_with_span(err, e.span);
  }
}

FiniteGroup evaluate_text(std::string_view input, const Limits& limits) {
  GroupExpr e = parse(input);
  return evaluate(e, limits);
}

long long predicted_order(const GroupExpr& e, const Limits& limits) {
  switch (e.kind) {
    case GroupExpr::Kind::Named: {
      switch (e.family) {
        case Family::Cyclic:
        case Family::Dihedral:
        case Family::GeneralizedQuaternion:
          return e.param;
        case Family::Symmetric:
        case Family::Alternating: {
          long long f = 1;
          for (int i = 2; i <= e.param; ++i) {
            f *= i;
            if (f > limits.corpus_order_budget) return f;
          }
          return e.family == Family::Symmetric ? f : std::max<long long>(1, f / 2);
        }
      }
      return limits.max_order;
    }
    case GroupExpr::Kind::Heisenberg: {
      long long q = 1;
      for (int i = 0; i < e.n; ++i) {
        q *= e.p;
        if (q > limits.corpus_order_budget) return q;
      }
      return q * q * q;
    }
    case GroupExpr::Kind::Product:
      return predicted_order(*e.lhs, limits) * predicted_order(*e.rhs, limits);
    case GroupExpr::Kind::Generators:
      return limits.max_order;  // unknowable without closing; charge the cap
  }
  return limits.max_order;
}

}  // namespace cdscope
