#pragma once

#include <array>
#include <memory>
#include <string>

namespace l2tor::anomaly {

/// Truncated Taylor polynomial in (x, u) around a point: coefficients of dx^a du^b for a <= 2, b <= u_order.
class Jet {
 public:
  static constexpr int kX = 2;

  Jet() = default;
  static Jet constant(double c);
  static Jet variable_x(double x0);
  static Jet variable_u(double u0);

  double value() const { return c_[0][0]; }
  /// d^a/dx^a d^b/du^b at the base point.
  double derivative(int a, int b) const;
  int u_order() const { return u_order_; }
  /// d/du as a jet of u-order 0.
  Jet du() const;

  Jet operator-() const;
  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

  /// g(jet) from g and its first three derivatives at value().
  Jet compose(const std::array<double, 4>& g) const;

 private:
  std::array<std::array<double, 2>, kX + 1> c_{};
  int u_order_ = 1;
};

Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet pow(const Jet& a, double p);
Jet pow(const Jet& a, const Jet& b);

/// Parsed scalar expression in x and u: numbers, x, u, pi, e, + - * / ^, unary minus,
/// exp log sqrt sin cos cosh sinh.
class Expression {
 public:
  static Expression parse(const std::string& text);

  const std::string& text() const { return text_; }
  Jet evaluate(double x, double u) const;
  double operator()(double x, double u) const { return evaluate(x, u).value(); }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace l2tor::anomaly
