#include "prehom/presentation.hpp"

#include "prehom/errors.hpp"

#include <algorithm>
#include <cctype>

namespace prehom {

bool operator==(const Presentation& a, const Presentation& b) {
  return *a.variables == *b.variables && a.generators == b.generators;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    skip_space();
    expect('K');
    std::vector<std::string> names;
    if (peek() == '[') {
      advance();
      names.push_back(identifier());
      while (peek() == ',') {
        advance();
        names.push_back(identifier());
      }
      expect(']');
    }
    Variables vars;
    try {
      vars = make_variables(names);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), pos_);
    }
    Presentation p{vars, {}};
    if (peek() == '/') {
      advance();
      expect('(');
      if (peek() == ')') throw ParseError("empty generator list", pos_);
      p.generators.push_back(nonzero_polynomial(vars));
      while (peek() == ',') {
        advance();
        p.generators.push_back(nonzero_polynomial(vars));
      }
      expect(')');
    }
    expect_end();
    return p;
  }

  Polynomial polynomial_only(const Variables& vars) {
    Polynomial p = polynomial(vars);
    expect_end();
    return p;
  }

 private:
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // Raw character at the cursor, no whitespace skipping.
  char raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() { ++pos_; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    advance();
  }
  void expect_end() {
    if (peek() != '\0') throw ParseError("unexpected trailing input", pos_);
  }
  static bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  std::string identifier() {
    if (!is_letter(peek())) throw ParseError("expected identifier", pos_);
    std::string id(1, raw());
    advance();
    while (is_digit(raw())) {
      id += raw();
      advance();
    }
    return id;
  }

  Integer digits() {
    if (!is_digit(peek())) throw ParseError("expected digits", pos_);
    std::string s;
    while (is_digit(raw())) {
      s += raw();
      advance();
    }
    return Integer(s);
  }

  Polynomial nonzero_polynomial(const Variables& vars) {
    std::size_t start = pos_;
    Polynomial p = polynomial(vars);
    if (p.is_zero()) throw ParseError("zero generator", start);
    return p;
  }

  Polynomial polynomial(const Variables& vars) {
    Polynomial result(vars);
    bool negate = false;
    if (peek() == '-') {
      advance();
      negate = true;
    }
    Polynomial t = term(vars);
    result += negate ? -t : t;
    while (peek() == '+' || peek() == '-') {
      bool minus = peek() == '-';
      advance();
      Polynomial u = term(vars);
      result += minus ? -u : u;
    }
    return result;
  }

  Polynomial term(const Variables& vars) {
    char c = peek();
    if (is_digit(c)) {
      std::size_t start = pos_;
      Integer num = digits();
      Integer den = 1;
      if (peek() == '/') {
        advance();
        den = digits();
        if (den == 0) throw ParseError("zero denominator", start);
      }
      Rational coeff(num, den);
      coeff.canonicalize();
      bool starred = false;
      if (peek() == '*') {
        advance();
        starred = true;
      }
      if (is_letter(peek())) return coeff * monomial(vars);
      if (starred) throw ParseError("expected monomial after '*'", pos_);
      return Polynomial(vars, coeff);
    }
    if (is_letter(c)) return monomial(vars);
    throw ParseError("expected term", pos_);
  }

  Polynomial monomial(const Variables& vars) {
    Monomial m(vars->size());
    factor(vars, m);
    for (;;) {
      char c = peek();
      if (c == '*') {
        advance();
        factor(vars, m);
      } else if (is_letter(c)) {
        factor(vars, m);
      } else {
        break;
      }
    }
    return Polynomial::term(vars, m);
  }

  void factor(const Variables& vars, Monomial& m) {
    std::size_t start = pos_;
    std::string id = identifier();
    auto it = std::find(vars->begin(), vars->end(), id);
    if (it == vars->end()) throw ParseError("unknown variable '" + id + "'", start);
    unsigned e = 1;
    if (peek() == '^') {
      advance();
      if (!is_digit(peek())) throw ParseError("malformed exponent", pos_);
      Integer x = digits();
      if (x <= 0 || !x.fits_uint_p()) throw ParseError("malformed exponent", start);
      e = static_cast<unsigned>(x.get_ui());
    }
    m[static_cast<std::size_t>(it - vars->begin())] += e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

Polynomial parse_polynomial(std::string_view text, const Variables& vars) {
  return Parser(text).polynomial_only(vars);
}

std::string format_presentation(const Presentation& p) {
  std::string out = "K";
  if (!p.variables->empty()) {
    out += "[";
    for (std::size_t i = 0; i < p.variables->size(); ++i) {
      if (i) out += ",";
      out += (*p.variables)[i];
    }
    out += "]";
  }
  if (!p.generators.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      if (i) out += ", ";
      out += p.generators[i].to_string();
    }
    out += ")";
  }
  return out;
}

}  // namespace prehom
