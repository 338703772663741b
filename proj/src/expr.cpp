#include "starfact/expr.hpp"

#include <cctype>

namespace starfact {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

AlgebraElement to_element(const ExprValue& v) {
  if (const auto* p = std::get_if<Polynomial>(&v)) return evaluate(*p);
  return std::get<AlgebraElement>(v);
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  ExprValue parse() {
    ExprValue v = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_ + 1, message); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  int integer() {
    if (!at_digit()) fail("expected an integer");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000000) fail("integer too large");
    }
    return static_cast<int>(v);
  }

  static ExprValue add(ExprValue a, const ExprValue& b, bool negate) {
    if (auto* pa = std::get_if<Polynomial>(&a)) {
      if (const auto* pb = std::get_if<Polynomial>(&b)) return negate ? *pa - *pb : *pa + *pb;
    }
    AlgebraElement x = to_element(a);
    const AlgebraElement y = to_element(b);
    return negate ? x - y : x + y;
  }

  static ExprValue mul(const ExprValue& a, const ExprValue& b) {
    const auto* pa = std::get_if<Polynomial>(&a);
    const auto* pb = std::get_if<Polynomial>(&b);
    if (pa && pb) return *pa * *pb;
    return to_element(a) * to_element(b);
  }

  ExprValue expr() {
    ExprValue v = term();
    for (;;) {
      if (accept('+')) v = add(std::move(v), term(), false);
      else if (accept('-')) v = add(std::move(v), term(), true);
      else return v;
    }
  }

  ExprValue term() {
    ExprValue v = unary();
    while (accept('*')) v = mul(v, unary());
    return v;
  }

  ExprValue unary() {
    if (accept('-')) {
      ExprValue v = unary();
      if (auto* p = std::get_if<Polynomial>(&v)) return *p * Integer(-1);
      return std::get<AlgebraElement>(v) * Integer(-1);
    }
    return power();
  }

  ExprValue power() {
    ExprValue v = primary();
    if (accept('^')) {
      const int k = integer();
      if (auto* p = std::get_if<Polynomial>(&v)) return p->pow(k);
      return std::get<AlgebraElement>(v).pow(k);
    }
    return v;
  }

  Partition parts() {
    expect('[');
    std::vector<int> out;
    if (accept(']')) return Partition(out);
    do {
      const std::size_t at = pos_;
      const int k = integer();
      if (k == 0) {
        pos_ = at;
        skip();
        fail("parts must be positive");
      }
      out.push_back(k);
    } while (accept(','));
    expect(']');
    return Partition(out);
  }

  ExprValue primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(n_, integer());
    if (c == '(') {
      ++pos_;
      ExprValue v = expr();
      expect(')');
      return v;
    }
    if (c == 'J') {
      ++pos_;
      expect('[');
      const std::size_t at = pos_;
      const int k = integer();
      if (k < 1 || k > n_) {
        pos_ = at;
        skip();
        fail("J[" + std::to_string(k) + "] outside 1.." + std::to_string(n_));
      }
      expect(']');
      return Polynomial::variable_power(n_, k, 1);
    }
    if (c == 'e' || c == 'h' || c == 'p') {
      ++pos_;
      const SymmetricBasis b = c == 'e' ? SymmetricBasis::e : c == 'h' ? SymmetricBasis::h : SymmetricBasis::p;
      return expand(SymmetricFunction{b, parts()}, n_);
    }
    if (c == 'T') {
      ++pos_;
      expect('(');
      const std::size_t at = pos_;
      ExprValue inner = expr();
      expect(')');
      const auto* p = std::get_if<Polynomial>(&inner);
      if (!p) {
        pos_ = at;
        skip();
        fail("T(...) applies to polynomials in the J's, not to group algebra elements");
      }
      return transitive_evaluate(*p);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

} // namespace

ExprValue parse_expression(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("expression degree must be positive");
  return Parser(text, n).parse();
}

} // namespace starfact
