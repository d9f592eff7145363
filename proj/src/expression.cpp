// Recursive-descent parser and canonical printer for SSPoly expressions.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' exp)?
//   atom   := rational | 'Q' digits | '(' expr ')'
//   exp    := '-'? digits | '(' '-'? digits ('/' '2')? ')'

#include "shiftsym/ssym.hpp"

#include <cctype>
#include <cstdlib>

namespace shiftsym {

namespace {

struct Atom {
  SSPoly value;
  int generator = -1;  // index k when the atom is a bare Q_k
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SSPoly parse_all()
  {
    skip_ws();
    if (at_end()) fail("empty expression");
    SSPoly f = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return f;
  }

 private:
  SSPoly expr()
  {
    SSPoly f = term();
    for (;;) {
      skip_ws();
      if (accept('+')) f += term();
      else if (accept('-')) f -= term();
      else return f;
    }
  }

  SSPoly term()
  {
    SSPoly f = factor();
    for (;;) {
      skip_ws();
      if (!accept('*')) return f;
      f *= factor();
    }
  }

  SSPoly factor()
  {
    skip_ws();
    if (peek() == '-' && !next_is_digit()) {
      ++pos_;
      return -factor();
    }
    const std::size_t atom_pos = pos_;
    Atom a = atom();
    skip_ws();
    if (!accept('^')) return std::move(a.value);
    skip_ws();
    const std::size_t exp_pos = pos_;
    const int twice = exponent();
    if (twice >= 0 && twice % 2 == 0) return a.value.pow(twice / 2);
    if (twice % 2 != 0 && a.generator != 2)
      fail_at("half-integer exponent on a generator other than Q2", exp_pos);
    if (a.generator != 2) fail_at("negative exponent is only allowed on Q2", atom_pos);
    return SSPoly::q2_power(twice);
  }

  Atom atom()
  {
    skip_ws();
    if (accept('(')) {
      Atom a{expr()};
      skip_ws();
      expect(')');
      return a;
    }
    if (peek() == 'Q') {
      ++pos_;
      const std::size_t start = pos_;
      const std::string digits = read_small();
      if (digits.empty()) fail_at("expected generator index after 'Q'", start);
      const int k = std::stoi(digits);
      return Atom{SSPoly::q(k), k};
    }
    if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      std::string literal;
      if (accept('-')) literal += '-';
      const std::string num = read_digits();
      if (num.empty()) fail_at("expected digits", start);
      literal += num;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::string den = read_digits();
        if (den.empty()) fail("expected denominator");
        if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; }))
          fail_at("zero denominator", start);
        literal += '/' + den;
      }
      return Atom{SSPoly(parse_rational(literal))};
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + peek() + "'");
  }

  // Returns the exponent doubled.
  int exponent()
  {
    if (accept('(')) {
      skip_ws();
      const bool negative = accept('-');
      skip_ws();
      const std::string num = read_small();
      if (num.empty()) fail("expected exponent digits");
      int twice = 2 * std::stoi(num);
      skip_ws();
      if (accept('/')) {
        skip_ws();
        const std::size_t den_pos = pos_;
        const std::string den = read_digits();
        if (den != "2") fail_at("fractional exponents must have denominator 2", den_pos);
        twice /= 2;
      }
      skip_ws();
      expect(')');
      return negative ? -twice : twice;
    }
    const bool negative = accept('-');
    skip_ws();
    const std::string num = read_small();
    if (num.empty()) fail("expected exponent digits");
    const int twice = 2 * std::stoi(num);
    return negative ? -twice : twice;
  }

  std::string read_digits()
  {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
    return s;
  }

  // indices and exponents are machine integers; coefficients are not
  std::string read_small()
  {
    const std::size_t start = pos_;
    std::string s = read_digits();
    if (s.size() > 6) fail_at("index or exponent too large", start);
    return s;
  }

  bool next_is_digit() const
  {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  void skip_ws()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool accept(char c)
  {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c)
  {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const { throw ParseError(msg, pos); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_exponent(int twice)
{
  if (twice == 2) return "";
  if (twice % 2 == 0) return "^" + std::to_string(twice / 2);
  return "^(" + std::to_string(twice) + "/2)";
}

}  // namespace

SSPoly parse(std::string_view text)
{
  try {
    return Parser(text).parse_all();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string format(const Monomial& m)
{
  std::string s;
  for (const auto& [k, e2] : m.support()) {
    if (!s.empty()) s += '*';
    s += 'Q' + std::to_string(k) + format_exponent(e2);
  }
  return s.empty() ? "1" : s;
}

std::string format(const SSPoly& f)
{
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    std::string body;
    if (m.is_one()) body = to_string(magnitude);
    else if (magnitude == 1) body = format(m);
    else body = to_string(magnitude) + "*" + format(m);
    if (first) out = (negative ? "-" : "") + body;
    else out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace shiftsym
