#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cuspidal/jet.hpp"

namespace cuspidal {

/// Immutable closed-form expression in the variables s and t.
class Expr {
 public:
  enum class Op { Const, VarS, VarT, Add, Sub, Mul, Div, Neg, Pow, Sin, Cos, Sinh, Cosh, Exp, Log, Sqrt };
  enum class Var { S, T };

  Expr() : Expr(0.0) {}
  Expr(double c);  // NOLINT(google-explicit-constructor)
  Expr(int c) : Expr(static_cast<double>(c)) {}  // NOLINT(google-explicit-constructor)

  static Expr s();
  static Expr t();
  static Expr make(Op op, std::vector<Expr> args);

  Op op() const { return node_->op; }
  double const_value() const { return node_->value; }
  const std::vector<Expr>& args() const { return node_->args; }
  bool is_const() const { return node_->op == Op::Const; }
  bool is_const(double c) const { return is_const() && node_->value == c; }
  bool depends_on(Var v) const;

  double eval(double s, double t = 0.0) const;
  /// Taylor jet at (s0, t0). Throws std::domain_error where the jet is undefined.
  Jet2 lift(double s0, double t0, int order) const;
  Expr diff(Var v) const;
  Expr diff(Var v, int times) const;
  Expr substitute(const Expr& s_repl, const Expr& t_repl) const;

  std::string to_string() const;
  /// Infix syntax: numbers, s, t, pi, + - * / ^, sin cos sinh cosh exp log sqrt.
  static Expr parse(const std::string& text);

  static const char* op_name(Op op);
  static Op op_from_name(const std::string& name);

 private:
  struct Node {
    Op op = Op::Const;
    double value = 0.0;
    std::vector<Expr> args;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& a, const Expr& b);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr sinh(const Expr& a);
Expr cosh(const Expr& a);
Expr exp(const Expr& a);
Expr log(const Expr& a);
Expr sqrt(const Expr& a);

/// The cusp-generating function mu(s,t) = sum_k mu_k(s) t^k / k!, polynomial in t.
class MuSpec {
 public:
  MuSpec() = default;
  /// mu_0(s), mu_1(s), ...; throws std::invalid_argument when empty.
  static MuSpec from_coefficients(std::vector<Expr> coefficients);
  /// Extracts mu_k = d^k mu/dt^k (s,0) for k <= degree and checks that the
  /// next derivative vanishes at sample points.
  static MuSpec from_expr(const Expr& mu, int degree);
  static MuSpec constant(std::vector<double> coefficients);

  const std::vector<Expr>& coefficients() const { return coefficients_; }
  bool empty() const { return coefficients_.empty(); }
  Expr coefficient(int k) const;
  double coefficient_value(int k, double s) const { return coefficient(k).eval(s); }

  Expr mu() const;
  /// lambda(s,t) = integral of mu from 0 to t.
  Expr lambda() const;

 private:
  std::vector<Expr> coefficients_;
};

}  // namespace cuspidal
