#include "l2tor/anomaly/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace l2tor::anomaly {

namespace {

constexpr double kFactorial[] = {1.0, 1.0, 2.0, 6.0};

}  // namespace

Jet Jet::constant(double c) {
  Jet j;
  j.c_[0][0] = c;
  return j;
}

Jet Jet::variable_x(double x0) {
  Jet j = constant(x0);
  j.c_[1][0] = 1.0;
  return j;
}

Jet Jet::variable_u(double u0) {
  Jet j = constant(u0);
  j.c_[0][1] = 1.0;
  return j;
}

double Jet::derivative(int a, int b) const {
  if (a < 0 || a > kX || b < 0 || b > u_order_)
    throw std::out_of_range("jet does not carry d^" + std::to_string(a) + "/dx d^" + std::to_string(b) + "/du");
  return c_[a][b] * kFactorial[a] * kFactorial[b];
}

Jet Jet::du() const {
  if (u_order_ < 1) throw std::logic_error("jet has no u-derivative left");
  Jet j;
  j.u_order_ = 0;
  for (int a = 0; a <= kX; ++a) j.c_[a][0] = c_[a][1];
  return j;
}

Jet Jet::operator-() const {
  Jet j = *this;
  for (auto& row : j.c_)
    for (double& v : row) v = -v;
  return j;
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet j;
  j.u_order_ = std::min(a.u_order_, b.u_order_);
  for (int i = 0; i <= Jet::kX; ++i)
    for (int k = 0; k <= j.u_order_; ++k) j.c_[i][k] = a.c_[i][k] + b.c_[i][k];
  return j;
}

Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

Jet operator*(const Jet& a, const Jet& b) {
  Jet j;
  j.u_order_ = std::min(a.u_order_, b.u_order_);
  for (int i = 0; i <= Jet::kX; ++i)
    for (int k = 0; k <= j.u_order_; ++k) {
      double s = 0.0;
      for (int i1 = 0; i1 <= i; ++i1)
        for (int k1 = 0; k1 <= k; ++k1) s += a.c_[i1][k1] * b.c_[i - i1][k - k1];
      j.c_[i][k] = s;
    }
  return j;
}

Jet Jet::compose(const std::array<double, 4>& g) const {
  Jet delta = *this;
  delta.c_[0][0] = 0.0;
  // delta has no constant term and total degree at most 3, so delta^4 = 0
  Jet out = constant(g[0]);
  out.u_order_ = u_order_;
  Jet power = delta;
  for (int k = 1; k <= 3; ++k) {
    Jet term = power;
    for (auto& row : term.c_)
      for (double& v : row) v *= g[static_cast<std::size_t>(k)] / kFactorial[k];
    out = out + term;
    power = power * delta;
  }
  return out;
}

Jet operator/(const Jet& a, const Jet& b) {
  const double v = b.value();
  if (v == 0.0) throw std::domain_error("division by zero in expression");
  return a * b.compose({1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v), -6.0 / (v * v * v * v)});
}

Jet exp(const Jet& a) {
  const double e = std::exp(a.value());
  return a.compose({e, e, e, e});
}

Jet log(const Jet& a) {
  const double v = a.value();
  if (!(v > 0.0)) throw std::domain_error("log of a nonpositive value in expression");
  return a.compose({std::log(v), 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v)});
}

Jet sqrt(const Jet& a) { return pow(a, 0.5); }

Jet sin(const Jet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose({s, c, -s, -c});
}

Jet cos(const Jet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose({c, -s, -c, s});
}

Jet pow(const Jet& a, double p) {
  if (p == std::round(p) && std::abs(p) <= 64.0) {
    // exact repeated products; no positivity requirement
    const long n = std::lround(std::abs(p));
    Jet r = Jet::constant(1.0);
    for (long i = 0; i < n; ++i) r = r * a;
    return p < 0 ? Jet::constant(1.0) / r : r;
  }
  const double v = a.value();
  if (!(v > 0.0)) throw std::domain_error("non-integer power of a nonpositive value in expression");
  return a.compose({std::pow(v, p), p * std::pow(v, p - 1), p * (p - 1) * std::pow(v, p - 2),
                    p * (p - 1) * (p - 2) * std::pow(v, p - 3)});
}

Jet pow(const Jet& a, const Jet& b) { return exp(b * log(a)); }

struct Expression::Node {
  enum class Kind { Number, X, U, Neg, Add, Sub, Mul, Div, Pow, Func } kind;
  double number = 0.0;
  std::string func;
  std::shared_ptr<const Node> lhs, rhs;

  Jet eval(const Jet& x, const Jet& u) const {
    switch (kind) {
      case Kind::Number:
        return Jet::constant(number);
      case Kind::X:
        return x;
      case Kind::U:
        return u;
      case Kind::Neg:
        return -lhs->eval(x, u);
      case Kind::Add:
        return lhs->eval(x, u) + rhs->eval(x, u);
      case Kind::Sub:
        return lhs->eval(x, u) - rhs->eval(x, u);
      case Kind::Mul:
        return lhs->eval(x, u) * rhs->eval(x, u);
      case Kind::Div:
        return lhs->eval(x, u) / rhs->eval(x, u);
      case Kind::Pow:
        if (rhs->kind == Kind::Number) return pow(lhs->eval(x, u), rhs->number);
        return pow(lhs->eval(x, u), rhs->eval(x, u));
      case Kind::Func: {
        const Jet a = lhs->eval(x, u);
        if (func == "exp") return exp(a);
        if (func == "log") return log(a);
        if (func == "sqrt") return sqrt(a);
        if (func == "sin") return sin(a);
        if (func == "cos") return cos(a);
        if (func == "cosh") return (exp(a) + exp(-a)) * Jet::constant(0.5);
        return (exp(a) - exp(-a)) * Jet::constant(0.5);  // sinh
      }
    }
    return {};
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make(Kind k, NodePtr l = nullptr, NodePtr r = nullptr) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = k;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

NodePtr number(double v) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = Kind::Number;
  n->number = v;
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression \"" + s_ + "\" at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr n = term();
    for (;;) {
      if (accept('+'))
        n = make(Kind::Add, n, term());
      else if (accept('-'))
        n = make(Kind::Sub, n, term());
      else
        return n;
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    for (;;) {
      if (accept('*'))
        n = make(Kind::Mul, n, unary());
      else if (accept('/'))
        n = make(Kind::Div, n, unary());
      else
        return n;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Kind::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) {
      NodePtr exponent = unary();
      // fold a negated literal exponent so integer powers stay exact
      if (exponent->kind == Kind::Neg && exponent->lhs->kind == Kind::Number) exponent = number(-exponent->lhs->number);
      return make(Kind::Pow, base, exponent);
    }
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr n = expr();
      if (!accept(')')) fail("expected ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = s_.c_str() + pos_;
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) fail("malformed number");
      pos_ += static_cast<std::size_t>(end - begin);
      return number(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string id = s_.substr(start, pos_ - start);
      if (id == "x") return make(Kind::X);
      if (id == "u") return make(Kind::U);
      if (id == "pi") return number(3.14159265358979323846);
      if (id == "e") return number(2.71828182845904523536);
      static const std::vector<std::string> funcs = {"exp", "log", "sqrt", "sin", "cos", "cosh", "sinh"};
      for (const auto& f : funcs)
        if (id == f) {
          if (!accept('(')) fail("expected '(' after " + id);
          auto n = std::make_shared<Expression::Node>();
          n->kind = Kind::Func;
          n->func = id;
          n->lhs = expr();
          if (!accept(')')) fail("expected ')'");
          return n;
        }
      pos_ = start;
      fail("unknown identifier '" + id + "' (variables are x and u; write products with '*')");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.text_ = text;
  e.root_ = Parser(text).parse();
  return e;
}

Jet Expression::evaluate(double x, double u) const {
  if (!root_) throw std::logic_error("empty expression");
  return root_->eval(Jet::variable_x(x), Jet::variable_u(u));
}

}  // namespace l2tor::anomaly
