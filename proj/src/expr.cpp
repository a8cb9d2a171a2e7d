#include "modpic/expr.hpp"

#include <cctype>
#include <optional>
#include <variant>

#include "modpic/errors.hpp"
#include "modpic/maps.hpp"

namespace modpic {

namespace {

using Value = std::variant<Rational, DivisorClass>;

class Parser {
 public:
  Parser(std::string_view text, const Readings& readings) : s_(text), readings_(readings) {}

  DivisorClass run() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    if (!std::holds_alternative<DivisorClass>(v)) fail("expression is a number, not a class");
    return std::get<DivisorClass>(std::move(v));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  const Readings& readings_;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  long integer() {
    skip();
    bool neg = accept('-');
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  MarkSet mark_set() {
    expect('{');
    std::vector<int> marks;
    if (!accept('}')) {
      do {
        long m = integer();
        if (m < 1 || m > kMaxMarks) fail("mark label out of range");
        marks.push_back(static_cast<int>(m));
      } while (accept(','));
      expect('}');
    }
    MarkSet S(marks);
    if (S.size() != static_cast<int>(marks.size())) fail("repeated mark");
    return S;
  }

  std::vector<long> int_args(std::size_t count) {
    std::vector<long> out;
    expect('(');
    for (std::size_t k = 0; k < count; ++k) {
      if (k > 0) expect(',');
      out.push_back(integer());
    }
    return out;
  }

  static int narrow(long v) {
    if (v < -1000000 || v > 1000000) throw OutOfRange("argument out of range");
    return static_cast<int>(v);
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+'))
        v = add(std::move(v), term(), 1);
      else if (accept('-'))
        v = add(std::move(v), term(), -1);
      else
        return v;
    }
  }

  Value add(Value a, Value b, int sign) {
    if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
      return std::get<Rational>(a) + sign * std::get<Rational>(b);
    if (std::holds_alternative<DivisorClass>(a) && std::holds_alternative<DivisorClass>(b)) {
      auto x = normalize(std::get<DivisorClass>(std::move(a)));
      auto y = normalize(std::get<DivisorClass>(std::move(b)));
      return sign > 0 ? x + y : x - y;
    }
    fail("cannot add a number and a class");
  }

  Value term() {
    if (accept('-')) return multiply(Rational(-1), term());
    Value v = factor();
    while (accept('*')) v = multiply(std::move(v), factor());
    return v;
  }

  Value multiply(Value a, Value b) {
    if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
      return std::get<Rational>(a) * std::get<Rational>(b);
    if (std::holds_alternative<Rational>(a))
      return std::get<Rational>(a) * std::get<DivisorClass>(std::move(b));
    if (std::holds_alternative<Rational>(b))
      return std::get<Rational>(b) * std::get<DivisorClass>(std::move(a));
    fail("cannot multiply two classes");
  }

  Value factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) return number();
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    std::string name = identifier();
    if (name.empty()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    if (auto pb = pullback(name)) return *pb;
    return call(name);
  }

  Value number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  DivisorClass class_operand() {
    expect('(');
    Value v = expr();
    expect(')');
    if (!std::holds_alternative<DivisorClass>(v)) fail("pullback of a number");
    return std::get<DivisorClass>(std::move(v));
  }

  static DivisorClass normalize(DivisorClass d) {
    return d.space().g == 2 ? reduce_genus2(d) : d;
  }

  std::optional<Value> pullback(const std::string& name) {
    if (name == "bubble") {
      auto a = int_args(2);
      expect(')');
      expect('*');
      DivisorClass x = class_operand();
      const SpaceId sp = x.space();
      return normalize(bubble_pullback(sp.g, sp.n - 1, narrow(a[0]), narrow(a[1])).apply(x));
    }
    const bool is_pi = name.size() > 2 && name.starts_with("pi") &&
                       name.find_first_not_of("0123456789", 2) == std::string::npos;
    if (!is_pi && name != "fprime" && name != "gprime") return std::nullopt;
    expect('*');
    DivisorClass x = class_operand();
    const SpaceId sp = x.space();
    if (is_pi) {
      if (name.size() > 11) fail("mark label out of range");
      const int j = std::stoi(name.substr(2));
      return normalize(forgetful_pullback(sp.g, sp.n + 1, j).apply(x));
    }
    if (name == "fprime") {
      if (sp.n != 1) throw SpaceMismatch("fprime* acts on classes of M̄_{g,1}");
      return elliptic_tails_pullback(sp.g, readings_).expanded().apply(x);
    }
    if (sp.n == 0) return reduce_genus2(unpointed_genus2_tail_pullback(sp.g).apply(x));
    return reduce_genus2(genus2_tail_pullback(sp.g, sp.n, readings_).apply(x));
  }

  Value call(const std::string& name) {
    if (name == "w2") return normalize(weierstrass_class(2));
    if (name == "bn") {
      auto a = int_args(1);
      expect(')');
      return bn_class(narrow(a[0]));
    }
    if (name == "w") {
      auto a = int_args(1);
      expect(')');
      return normalize(weierstrass_class(narrow(a[0])));
    }
    if (name == "epsilon") {
      auto a = int_args(2);
      expect(')');
      return epsilon_class(narrow(a[0]), narrow(a[1]));
    }
    if (name == "theta" || name == "delta") {
      auto a = int_args(3);
      expect(',');
      MarkSet S = mark_set();
      expect(')');
      const int g = narrow(a[0]), n = narrow(a[1]), i = narrow(a[2]);
      if (name == "theta") return theta_class(g, n, i, S, readings_);
      SpaceId sp{g, n};
      sp.validate();
      DivisorClass d(sp);
      d.add_boundary(i, S, 1);
      return normalize(d);
    }
    if (name == "lambda" || name == "delta0") {
      auto a = int_args(2);
      expect(')');
      SpaceId sp{narrow(a[0]), narrow(a[1])};
      sp.validate();
      return normalize(DivisorClass::of(
          sp, name == "lambda" ? BasisElement::lambda() : BasisElement::delta_irr()));
    }
    if (name == "omega" || name == "psi") {
      auto a = int_args(3);
      expect(')');
      SpaceId sp{narrow(a[0]), narrow(a[1])};
      sp.validate();
      const int i = narrow(a[2]);
      return normalize(name == "omega" ? DivisorClass::of(sp, BasisElement::omega(i))
                                       : psi_class(sp, i));
    }
    fail("unknown name '" + name + "'");
  }
};

}  // namespace

DivisorClass evaluate_expression(std::string_view text, const Readings& readings) {
  return Parser(text, readings).run();
}

}  // namespace modpic
