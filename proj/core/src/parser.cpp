#include "hmlift/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "hmlift/error.hpp"

namespace hmlift {

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '.')
        throw ParseError(line, col, "decimal literals are not supported; write an exact fraction");
      t.kind = Tok::Number;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      t.kind = Tok::Punct;
      t.text = "->";
      advance(2);
    } else if (std::string_view("(){};:=+-*/^,").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

std::optional<std::size_t> indexed_name(const std::string& ident, std::string_view prefix) {
  if (ident.size() <= prefix.size() || ident.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  std::size_t k = 0;
  for (std::size_t p = prefix.size(); p < ident.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(ident[p]))) return std::nullopt;
    k = k * 10 + static_cast<std::size_t>(ident[p] - '0');
    if (k > 1000000) return std::nullopt;
  }
  if (ident[prefix.size()] == '0') return std::nullopt;
  return k;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  MapSource parse_map() {
    MapSource m;
    expect_ident("map");
    m.name = take_ident("map name");
    expect(":");
    m.domain = parse_space();
    expect("->");
    m.codomain = parse_space();
    if (m.domain.complex != m.codomain.complex)
      fail(prev_, "mixed real/complex declarations are not supported; declare both sides R or both C");
    domain_ = m.domain;
    expect("{");
    std::vector<std::optional<Expr>> comps(m.codomain.dim);
    while (!peek_is("}")) {
      const Token start = peek();
      if (start.kind == Tok::Ident && start.text == "guard") {
        next();
        m.guards.push_back(parse_expr());
        expect(";");
        continue;
      }
      const std::string lhs = take_ident("binding or component name");
      if (is_reserved(lhs)) fail(start, "'" + lhs + "' is reserved and cannot be assigned");
      expect("=");
      Expr rhs = parse_expr();
      expect(";");
      if (bindings_.count(lhs)) fail(start, "'" + lhs + "' is already defined");
      bindings_.emplace(lhs, rhs);
      if (auto k = indexed_name(lhs, m.name); k && *k >= 1 && *k <= m.codomain.dim) comps[*k - 1] = rhs;
    }
    expect("}");
    if (peek().kind != Tok::End) fail(peek(), "trailing input after map definition");
    for (std::size_t k = 0; k < comps.size(); ++k) {
      if (!comps[k])
        fail(prev_, "component " + m.name + std::to_string(k + 1) + " is not defined");
      m.components.push_back(*comps[k]);
    }
    return m;
  }

  Expr parse_standalone(Space domain, bool allow_i = false) {
    domain_ = domain;
    allow_i_ = allow_i;
    Expr e = parse_expr();
    if (peek().kind != Tok::End) fail(peek(), "unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.column, msg);
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() {
    prev_ = toks_[pos_];
    if (toks_[pos_].kind != Tok::End) ++pos_;
    return prev_;
  }
  bool peek_is(std::string_view punct) const {
    return peek().kind == Tok::Punct && peek().text == punct;
  }
  void expect(std::string_view punct) {
    if (!peek_is(punct)) fail(peek(), "expected '" + std::string(punct) + "'" + found());
    next();
  }
  void expect_ident(std::string_view word) {
    if (peek().kind != Tok::Ident || peek().text != word)
      fail(peek(), "expected '" + std::string(word) + "'" + found());
    next();
  }
  std::string take_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(peek(), std::string("expected ") + what + found());
    return next().text;
  }
  std::string found() const {
    if (peek().kind == Tok::End) return ", found end of input";
    return ", found '" + peek().text + "'";
  }

  Space parse_space() {
    const Token t = peek();
    const std::string field = take_ident("R or C");
    if (field != "R" && field != "C") fail(t, "expected R or C");
    if (peek().text != "^") return Space{field == "C", 1};
    next();
    if (peek().kind != Tok::Number) fail(peek(), "expected a dimension" + found());
    const Token n = next();
    Space s;
    s.complex = field == "C";
    s.dim = std::stoul(n.text);
    if (s.dim == 0) fail(n, "dimension must be positive");
    return s;
  }

  bool is_reserved(const std::string& id) const {
    if (id == "sqrt" || id == "conj" || id == "re" || id == "im" || id == "i" || id == "guard" || id == "map")
      return true;
    return indexed_name(id, "x") || indexed_name(id, "z") || indexed_name(id, "zb");
  }

  // expr := term (('+'|'-') term)*
  Expr parse_expr() {
    Expr lhs = parse_term();
    while (peek_is("+") || peek_is("-")) {
      const bool plus = next().text == "+";
      Expr rhs = parse_term();
      lhs = plus ? lhs + rhs : lhs - rhs;
    }
    return lhs;
  }

  // term := unary (('*'|'/') unary)*
  Expr parse_term() {
    Expr lhs = parse_unary();
    while (peek_is("*") || peek_is("/")) {
      const Token op = next();
      Expr rhs = parse_unary();
      if (op.text == "*") {
        lhs = lhs * rhs;
      } else {
        if (rhs.is_zero()) fail(op, "division by zero");
        lhs = lhs / rhs;
      }
    }
    return lhs;
  }

  // unary := '-' unary | power
  Expr parse_unary() {
    if (peek_is("-")) {
      next();
      return -parse_unary();
    }
    return parse_power();
  }

  // power := primary ('^' exponent)?
  Expr parse_power() {
    Expr base = parse_primary();
    if (!peek_is("^")) return base;
    next();
    bool paren = false;
    if (peek_is("(")) {
      paren = true;
      next();
    }
    bool neg = false;
    if (peek_is("-")) {
      neg = true;
      next();
    }
    if (peek().kind != Tok::Number) fail(peek(), "expected an integer exponent" + found());
    const Token n = next();
    if (paren) expect(")");
    long e = std::stol(n.text);
    if (neg) e = -e;
    if (base.is_zero() && e < 0) fail(n, "negative power of zero");
    if (peek_is("^")) fail(peek(), "chained '^' is ambiguous; add parentheses");
    return Expr::pow(base, e);
  }

  Expr parse_primary() {
    const Token t = peek();
    if (t.kind == Tok::Number) {
      next();
      return Expr::constant(GaussianRational(Rational::parse(t.text)));
    }
    if (peek_is("(")) {
      next();
      Expr e = parse_expr();
      expect(")");
      return e;
    }
    if (t.kind != Tok::Ident) fail(t, "expected an expression" + found());
    next();
    const std::string& id = t.text;
    if (id == "sqrt" || id == "conj" || id == "re" || id == "im") {
      if ((id != "sqrt") && !domain_.complex) fail(t, id + "() is complex syntax in a real map");
      expect("(");
      Expr arg = parse_expr();
      expect(")");
      if (id == "sqrt") {
        if (domain_.complex) fail(t, "sqrt() is not supported in complex maps");
        return Expr::sqrt(arg);
      }
      if (id == "conj") return Expr::conj(arg);
      if (id == "re") return Expr::re(arg);
      return Expr::im(arg);
    }
    if (id == "i") {
      if (!domain_.complex && !allow_i_) fail(t, "'i' is complex syntax in a real map");
      return Expr::constant(GaussianRational::i());
    }
    if (auto it = bindings_.find(id); it != bindings_.end()) return it->second;
    if (auto k = indexed_name(id, "x")) {
      if (domain_.complex) fail(t, "real coordinate '" + id + "' in a complex map; use z/zb");
      if (*k > domain_.dim) fail(t, "'" + id + "' exceeds the domain dimension " + std::to_string(domain_.dim));
      return Expr::variable(*k - 1);
    }
    if (auto k = indexed_name(id, "zb")) {
      if (!domain_.complex) fail(t, "complex coordinate '" + id + "' in a real map");
      if (*k > domain_.dim) fail(t, "'" + id + "' exceeds the domain dimension " + std::to_string(domain_.dim));
      return Expr::conj(Expr::variable(*k - 1));
    }
    if (auto k = indexed_name(id, "z")) {
      if (!domain_.complex) fail(t, "complex coordinate '" + id + "' in a real map");
      if (*k > domain_.dim) fail(t, "'" + id + "' exceeds the domain dimension " + std::to_string(domain_.dim));
      return Expr::variable(*k - 1);
    }
    fail(t, "unknown identifier '" + id + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Token prev_;
  Space domain_;
  bool allow_i_ = false;
  std::map<std::string, Expr> bindings_;
};

}  // namespace

MapSource parse_map_source(std::string_view text) { return Parser(text).parse_map(); }

SmoothMap to_smooth(const MapSource& source) {
  if (source.domain.complex) throw Error(ErrorKind::Shape, "complex maps have no closed-form real view");
  SmoothMap s;
  s.name = source.name;
  s.domain_dim = source.domain.dim;
  s.components = source.components;
  s.guards = source.guards;
  s.validate();
  return s;
}

ParsedMap lower_map(const MapSource& source) {
  const std::size_t m = source.domain.dim;
  if (source.domain.complex) {
    std::vector<ComplexPoly> comps;
    for (std::size_t k = 0; k < source.components.size(); ++k) {
      try {
        comps.push_back(lower_to_poly(source.components[k], m, Layout::Complex));
      } catch (const Error& e) {
        throw Error(e.kind(), "component " + source.name + std::to_string(k + 1) + ": " + e.what());
      }
    }
    if (!source.guards.empty()) throw Error(ErrorKind::Shape, "guards are only supported on real maps");
    return ComplexPolyMap(m, std::move(comps));
  }
  if (!source.guards.empty()) return to_smooth(source);
  std::vector<RealPoly> comps;
  for (const auto& c : source.components) {
    ComplexPoly p;
    try {
      p = lower_to_poly(c, m, Layout::Real);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotPolynomial) return to_smooth(source);
      throw;
    }
    if (!has_real_coefficients(p))
      throw Error(ErrorKind::InternalConsistency, "real map lowered to complex coefficients");
    comps.push_back(real_part(p));
  }
  return RealPolyMap(m, std::move(comps));
}

ParsedMap parse_map(std::string_view text) { return lower_map(parse_map_source(text)); }

namespace {

Expr poly_to_expr(const RealPoly& p) {
  Expr acc = Expr::constant(GaussianRational(0));
  for (const auto& [e, c] : p.terms()) {
    Expr term = Expr::constant(GaussianRational(c));
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) term = term * Expr::pow(Expr::variable(k), static_cast<long>(e[k]));
    acc = acc + term;
  }
  return acc;
}

}  // namespace

SmoothMap to_smooth(const RealPolyMap& phi, const std::string& name) {
  SmoothMap s;
  s.name = name;
  s.domain_dim = phi.domain_dim();
  for (const auto& c : phi.components()) s.components.push_back(poly_to_expr(c));
  return s;
}

std::string to_source(const SmoothMap& phi) {
  const auto names = default_variable_names(phi.domain_dim, Layout::Real);
  std::ostringstream os;
  os << "map " << phi.name << ": R^" << phi.domain_dim << " -> R^" << phi.codomain_dim() << " {\n";
  for (std::size_t k = 0; k < phi.components.size(); ++k)
    os << "  " << phi.name << k + 1 << " = " << phi.components[k].to_string(names) << ";\n";
  for (const auto& g : phi.guards) os << "  guard " << g.to_string(names) << ";\n";
  os << "}\n";
  return os.str();
}

ComplexPoly parse_polynomial(std::string_view text, std::size_t domain_dim, Layout layout) {
  Space s;
  s.complex = layout == Layout::Complex;
  s.dim = domain_dim;
  // Real-layout polynomials may carry Gaussian coefficients (complex gradients).
  const Expr e = Parser(text).parse_standalone(s, true);
  return lower_to_poly(e, domain_dim, layout);
}

GaussianRational parse_gaussian(std::string_view text) {
  Space s;
  s.complex = true;
  s.dim = 0;
  const Expr e = Parser(text).parse_standalone(s);
  if (!e.is_constant()) throw Error(ErrorKind::Parse, "not a constant: '" + std::string(text) + "'");
  return e.value();
}

}  // namespace hmlift
