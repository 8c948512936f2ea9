#include "spinhecke/parser.hpp"

#include <cctype>

#include "spinhecke/clifford_family.hpp"
#include "spinhecke/spin_family.hpp"

namespace spinhecke {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const Algebra& a) : s_(s), a_(a) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, p_); }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  static Expr node(Expr::Op op, size_t pos, std::vector<Expr> kids) {
    Expr e;
    e.op = op;
    e.pos = pos;
    e.kids = std::move(kids);
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip();
      size_t at = p_;
      if (eat('+')) lhs = node(Expr::Op::Add, at, {std::move(lhs), term()});
      else if (eat('-')) lhs = node(Expr::Op::Sub, at, {std::move(lhs), term()});
      else return lhs;
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      skip();
      size_t at = p_;
      if (eat('*')) lhs = node(Expr::Op::Mul, at, {std::move(lhs), unary()});
      else if (eat('/')) lhs = node(Expr::Op::Div, at, {std::move(lhs), unary()});
      else return lhs;
    }
  }

  Expr unary() {
    skip();
    size_t at = p_;
    if (eat('-')) return node(Expr::Op::Neg, at, {unary()});
    return power();
  }

  Expr power() {
    Expr base = atom();
    skip();
    size_t at = p_;
    if (!eat('^')) return base;
    skip();
    bool neg = eat('-');
    skip();
    std::string digits = read_digits();
    if (digits.empty()) fail("expected an integer exponent");
    if (digits.size() > 6) fail("exponent too large");
    Expr e = node(Expr::Op::Pow, at, {std::move(base)});
    e.exponent = (neg ? -1 : 1) * std::stoi(digits);
    return e;
  }

  std::string read_digits() {
    std::string d;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) d += s_[p_++];
    return d;
  }

  Expr atom() {
    skip();
    if (p_ >= s_.size()) fail("unexpected end of input");
    size_t at = p_;
    char c = s_[p_];
    if (eat('(')) {
      Expr e = expr();
      expect(')');
      return e;
    }
    if (c == '[' || c == '{') {
      ++p_;
      Expr l = expr();
      expect(',');
      Expr r = expr();
      expect(c == '[' ? ']' : '}');
      return node(c == '[' ? Expr::Op::Commutator : Expr::Op::Anticommutator, at, {std::move(l), std::move(r)});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(Expr::Op::Integer, at, {});
      e.text = read_digits();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return generator(at);
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr generator(size_t at) {
    std::string name;
    while (p_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[p_]))) name += s_[p_++];
    std::vector<int> idx;
    std::string digits = read_digits();
    if (!digits.empty()) {
      // s12, tr13: one digit per index; otherwise a single index.
      if (digits.size() == 2 && (name == "s" || name == "tr")) {
        idx = {digits[0] - '0', digits[1] - '0'};
      } else {
        if (digits.size() > 3) fail("index too large");
        idx = {std::stoi(digits)};
      }
    } else if (p_ < s_.size() && s_[p_] == '(') {
      ++p_;
      do {
        skip();
        std::string d = read_digits();
        if (d.empty()) fail("expected an index");
        if (d.size() > 3) fail("index too large");
        idx.push_back(std::stoi(d));
      } while (eat(','));
      expect(')');
    }
    Expr e;
    e.pos = at;
    if (idx.empty() && (name == "u" || name == "w")) {
      e.op = name == "u" ? Expr::Op::U : Expr::Op::Omega;
      return e;
    }
    if (idx.empty()) throw ParseError("generator '" + name + "' needs an index", at);
    e.op = Expr::Op::Generator;
    e.text = name;
    e.index = std::move(idx);
    // Validate now so errors carry the token position.
    evaluate(e, a_);
    return e;
  }

  const std::string& s_;
  const Algebra& a_;
  size_t p_ = 0;
};

Element resolve(const Expr& e, const Algebra& a) {
  const std::string& n = e.text;
  const std::vector<int>& ix = e.index;
  auto one_index = [&]() {
    if (ix.size() != 1) throw ParseError("'" + n + "' takes one index", e.pos);
    return ix[0];
  };
  auto two_indices = [&]() {
    if (ix.size() != 2) throw ParseError("'" + n + "' takes two indices", e.pos);
    if (ix[0] == ix[1]) throw ParseError("'" + n + "' needs distinct indices", e.pos);
    return std::pair{ix[0], ix[1]};
  };
  bool laurent_left = a.left_kind() == PolyKind::Laurent;
  try {
    if (!laurent_left && a.left_kind() != PolyKind::None && n == a.left_name()) return left_gen(a, one_index());
    if (laurent_left && n == "e") return left_gen(a, one_index(), 1);
    if (laurent_left && n == "einv") return left_gen(a, one_index(), -1);
    if (a.right_kind() != PolyKind::None && n == a.right_name()) return right_gen(a, one_index());
    if (n == "c") return cliff_gen(a, one_index());
    if (n == "C") return ext_gen(a, one_index());
    if (n == "s" && a.group_kind() == GroupKind::Plain) {
      if (ix.size() == 1) return simple_gen(a, ix[0]);
      auto [i, j] = two_indices();
      return transposition(a, i, j);
    }
    if (n == "t" && a.group_kind() == GroupKind::Spin) return simple_gen(a, one_index());
    if (n == "tr" && a.group_kind() == GroupKind::Spin) {
      auto [i, j] = two_indices();
      return odd_transposition(a, i, j);
    }
    if (n == "M") return jucys_murphy(a, one_index());
    if (n == "Ms") return odd_jm(a, one_index());
    if (n == "z") return z_element(a, one_index());
    if (n == "fz") return frak_z(a, one_index());
    if (n == "phi") return intertwiner_phi(a, one_index());
    if (n == "psi") return intertwiner_psi(a, one_index());
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError("'" + n + "': " + ex.what(), e.pos);
  }
  throw ParseError("unknown generator '" + n + "' for " + a.name(), e.pos);
}

bool as_scalar(const Element& e, Scalar& out) {
  if (e.is_zero()) {
    out = Scalar(0);
    return true;
  }
  if (e.terms().size() != 1 || !e.terms().begin()->first.is_identity()) return false;
  out = e.terms().begin()->second;
  return true;
}

// Inverse of a scalar or of c * (monomial in commuting Laurent letters).
Element inverse(const Element& e, size_t pos) {
  const Algebra& a = e.algebra();
  Scalar s;
  if (as_scalar(e, s)) {
    if (s.is_zero()) throw ParseError("negative power of zero", pos);
    return Element(a, s.inverse());
  }
  if (e.terms().size() == 1) {
    auto [m, c] = *e.terms().begin();
    bool left_used = false, right_used = false;
    for (int i = 0; i < a.n(); ++i) {
      left_used |= m.left[i] != 0;
      right_used |= m.right[i] != 0;
    }
    bool ok = m.ext == 0 && m.group == 0 && m.cliff == 0 && !(left_used && right_used) &&
              (!left_used || a.left_kind() == PolyKind::Laurent) && (!right_used || a.right_kind() == PolyKind::Laurent);
    if (ok) {
      Monomial inv = m;
      for (int i = 0; i < a.n(); ++i) {
        inv.left[i] = static_cast<std::int16_t>(-m.left[i]);
        inv.right[i] = static_cast<std::int16_t>(-m.right[i]);
      }
      return Element(a, inv, c.inverse());
    }
  }
  throw ParseError("negative power of a non-invertible element", pos);
}

}  // namespace

std::string Expr::to_string() const {
  auto bin = [&](const char* op) { return "(" + kids[0].to_string() + op + kids[1].to_string() + ")"; };
  switch (op) {
    case Op::Integer: return text;
    case Op::U: return "u";
    case Op::Omega: return "w";
    case Op::Generator: {
      std::string s = text + "(";
      for (size_t i = 0; i < index.size(); ++i) s += (i ? "," : "") + std::to_string(index[i]);
      return s + ")";
    }
    case Op::Neg: return "(-" + kids[0].to_string() + ")";
    case Op::Add: return bin(" + ");
    case Op::Sub: return bin(" - ");
    case Op::Mul: return bin("*");
    case Op::Div: return bin("/");
    case Op::Pow: return "(" + kids[0].to_string() + "^" + std::to_string(exponent) + ")";
    case Op::Commutator: return "[" + kids[0].to_string() + ", " + kids[1].to_string() + "]";
    case Op::Anticommutator: return "{" + kids[0].to_string() + ", " + kids[1].to_string() + "}";
  }
  return {};
}

Expr parse_expression(const std::string& text, const Algebra& a) { return Parser(text, a).parse(); }

Element evaluate(const Expr& e, const Algebra& a) {
  switch (e.op) {
    case Expr::Op::Integer: return Element(a, Scalar(Rational(e.text)));
    case Expr::Op::U: return Element(a, a.u());
    case Expr::Op::Omega: return Element(a, Scalar::omega());
    case Expr::Op::Generator: return resolve(e, a);
    case Expr::Op::Neg: return -evaluate(e.kids[0], a);
    case Expr::Op::Add: return evaluate(e.kids[0], a) + evaluate(e.kids[1], a);
    case Expr::Op::Sub: return evaluate(e.kids[0], a) - evaluate(e.kids[1], a);
    case Expr::Op::Mul: return evaluate(e.kids[0], a) * evaluate(e.kids[1], a);
    case Expr::Op::Div: {
      Scalar s;
      if (!as_scalar(evaluate(e.kids[1], a), s)) throw ParseError("division by a non-scalar", e.pos);
      if (s.is_zero()) throw ParseError("division by zero", e.pos);
      return evaluate(e.kids[0], a) * s.inverse();
    }
    case Expr::Op::Pow: {
      Element b = evaluate(e.kids[0], a);
      if (e.exponent >= 0) return pow(b, e.exponent);
      return pow(inverse(b, e.pos), -e.exponent);
    }
    case Expr::Op::Commutator: {
      Element l = evaluate(e.kids[0], a), r = evaluate(e.kids[1], a);
      return l * r - r * l;
    }
    case Expr::Op::Anticommutator: {
      Element l = evaluate(e.kids[0], a), r = evaluate(e.kids[1], a);
      return l * r + r * l;
    }
  }
  throw ParseError("bad expression node", e.pos);
}

Element parse_element(const std::string& text, const Algebra& a) { return evaluate(parse_expression(text, a), a); }

Scalar parse_scalar(const std::string& text) {
  // Sym at rank 1 has no generators at all.
  const Algebra& a = Algebra::get(Kind::Sym, 1);
  Element e = parse_element(text, a);
  Scalar s;
  if (!as_scalar(e, s)) throw ParseError("not a scalar", 0);
  return s;
}

}  // namespace spinhecke
