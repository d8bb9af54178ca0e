#include "twocyc/textio.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twocyc {

namespace {

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    const uint32_t e = m.exp(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.var(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rat c = t.coeff;
    if (first) {
      if (sgn(c) < 0) {
        out += "-";
        c = -c;
      }
      first = false;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    const std::string mono = monomial_to_string(t.mon, *p.ring());
    if (mono.empty()) {
      out += rat_to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += rat_to_string(c) + "*" + mono;
    }
  }
  return out;
}

namespace {

struct Lexer {
  std::string s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw std::invalid_argument("expected '" + std::string(1, c) + "' at position " +
                                  std::to_string(pos) + " in '" + s + "'");
  }
  std::string number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected number in '" + s + "'");
    return s.substr(start, pos - start);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) throw std::invalid_argument("expected identifier in '" + s + "'");
    return s.substr(start, pos - start);
  }
};

Rat lex_rational(Lexer& lx) {
  std::string num = lx.number();
  if (lx.accept('/')) {
    num += "/" + lx.number();
    return rat_from_string(num);
  }
  // "3^2" style constant powers are not part of the format.
  return rat_from_string(num);
}

// term := [sign] factor ('*' factor)*, factor := rational | var['^' exp]
MultiPoly parse_term(Lexer& lx, const RingPtr& ring, int sign_in) {
  Rat coeff(sign_in);
  Monomial mon(ring->size());
  bool any = false;
  for (;;) {
    const char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= lex_rational(lx);
      any = true;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = lx.ident();
      const int idx = ring->index_of(name);
      if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
      uint32_t e = 1;
      if (lx.accept('^')) e = static_cast<uint32_t>(std::stoul(lx.number()));
      mon.set_exp(idx, mon.exp(idx) + e);
      any = true;
    } else {
      throw std::invalid_argument("unexpected character in polynomial: '" +
                                  std::string(1, c) + "'");
    }
    if (!lx.accept('*')) break;
  }
  if (!any) throw std::invalid_argument("empty term");
  return MultiPoly::from_term(ring, mon, coeff);
}

}  // namespace

MultiPoly parse_poly(const std::string& text, const RingPtr& ring) {
  Lexer lx{text};
  MultiPoly acc = MultiPoly::zero(ring);
  if (lx.eof()) throw std::invalid_argument("empty polynomial text");
  bool first = true;
  while (!lx.eof()) {
    int sign_in = 1;
    if (lx.accept('-'))
      sign_in = -1;
    else if (lx.accept('+'))
      sign_in = 1;
    else if (!first)
      throw std::invalid_argument("expected '+' or '-' between terms");
    if (lx.peek() == '0') {
      // allow a literal zero polynomial
      Lexer probe = lx;
      const Rat r = lex_rational(probe);
      if (sgn(r) == 0) {
        lx = probe;
        first = false;
        continue;
      }
    }
    acc += parse_term(lx, ring, sign_in);
    first = false;
  }
  return acc;
}

std::string to_string(const QuadExt& x) {
  if (x.is_rational()) return rat_to_string(x.rational_part());
  std::string out;
  const Rat& p = x.rational_part();
  const Rat& q = x.radical_part();
  const std::string d = x.discriminant().get_str();
  if (sgn(p) != 0) {
    out += rat_to_string(p);
    out += sgn(q) < 0 ? " - " : " + ";
    const Rat aq = abs(q);
    if (aq == 1)
      out += "sqrt(" + d + ")";
    else
      out += rat_to_string(aq) + "*sqrt(" + d + ")";
  } else {
    if (q == -1)
      out += "-sqrt(" + d + ")";
    else if (q == 1)
      out += "sqrt(" + d + ")";
    else
      out += rat_to_string(q) + "*sqrt(" + d + ")";
  }
  return out;
}

namespace {

QuadExt qe_expr(Lexer& lx);

QuadExt qe_atom(Lexer& lx) {
  if (lx.accept('(')) {
    QuadExt v = qe_expr(lx);
    lx.expect(')');
    return v;
  }
  const char c = lx.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) return QuadExt(lex_rational(lx));
  const std::string name = lx.ident();
  if (name != "sqrt") throw std::invalid_argument("unknown symbol '" + name + "'");
  lx.expect('(');
  const std::string d = lx.number();
  lx.expect(')');
  return QuadExt(Rat(0), Rat(1), Int(d));
}

QuadExt qe_factor(Lexer& lx) {
  int sign_in = 1;
  while (lx.peek() == '-' || lx.peek() == '+') {
    if (lx.accept('-'))
      sign_in = -sign_in;
    else
      lx.accept('+');
  }
  QuadExt v = qe_atom(lx);
  for (;;) {
    if (lx.accept('*')) {
      v = v * qe_atom(lx);
    } else if (lx.accept('/')) {
      v = v / qe_atom(lx);
    } else {
      break;
    }
  }
  return sign_in < 0 ? -v : v;
}

QuadExt qe_expr(Lexer& lx) {
  QuadExt acc = qe_factor(lx);
  for (;;) {
    if (lx.accept('+'))
      acc = acc + qe_factor(lx);
    else if (lx.peek() == '-')
      acc = acc + qe_factor(lx);  // factor consumes the sign
    else
      break;
  }
  return acc;
}

}  // namespace

QuadExt parse_quadext(const std::string& text) {
  Lexer lx{text};
  QuadExt v = qe_expr(lx);
  if (!lx.eof())
    throw std::invalid_argument("trailing characters in '" + text + "'");
  return v;
}

void write_basis(std::ostream& os, const RingPtr& ring,
                 const std::vector<MultiPoly>& gens) {
  os << "ring";
  for (const auto& v : ring->vars()) os << " " << v;
  os << "\n";
  os << "order grevlex\n";
  for (const auto& g : gens) os << to_string(g) << "\n";
}

BasisFile read_basis(std::istream& is) {
  BasisFile out;
  std::string line;
  bool have_ring = false, have_order = false;
  while (std::getline(is, line)) {
    // strip comments
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_ring) {
      if (first != "ring") throw std::invalid_argument("basis file must start with 'ring ...'");
      std::vector<std::string> vars;
      std::string v;
      while (ls >> v) vars.push_back(v);
      out.ring = std::make_shared<Ring>(std::move(vars));
      have_ring = true;
    } else if (!have_order) {
      std::string ord;
      if (first != "order" || !(ls >> ord) || ord != "grevlex")
        throw std::invalid_argument("basis file must declare 'order grevlex'");
      have_order = true;
    } else {
      out.generators.push_back(parse_poly(line, out.ring));
    }
  }
  if (!have_ring || !have_order)
    throw std::invalid_argument("basis file missing ring/order header");
  return out;
}

}  // namespace twocyc
