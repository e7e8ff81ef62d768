#include "cuspidal/expr.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cuspidal {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Expr::Expr(double c) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = c;
  node_ = std::move(n);
}

Expr Expr::s() {
  auto n = std::make_shared<Node>();
  n->op = Op::VarS;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::t() {
  auto n = std::make_shared<Node>();
  n->op = Op::VarT;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::make(Op op, std::vector<Expr> args) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args = std::move(args);
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

bool Expr::depends_on(Var v) const {
  switch (op()) {
    case Op::Const: return false;
    case Op::VarS: return v == Var::S;
    case Op::VarT: return v == Var::T;
    default:
      for (const Expr& a : args())
        if (a.depends_on(v)) return true;
      return false;
  }
}

double Expr::eval(double s, double t) const {
  const auto& a = args();
  switch (op()) {
    case Op::Const: return const_value();
    case Op::VarS: return s;
    case Op::VarT: return t;
    case Op::Add: return a[0].eval(s, t) + a[1].eval(s, t);
    case Op::Sub: return a[0].eval(s, t) - a[1].eval(s, t);
    case Op::Mul: return a[0].eval(s, t) * a[1].eval(s, t);
    case Op::Div: return a[0].eval(s, t) / a[1].eval(s, t);
    case Op::Neg: return -a[0].eval(s, t);
    case Op::Pow: {
      const double b = a[0].eval(s, t);
      if (a[1].is_const()) {
        const double p = a[1].const_value();
        if (p == std::round(p) && std::abs(p) <= 64.0) {
          int n = static_cast<int>(p);
          double r = 1.0, x = n < 0 ? 1.0 / b : b;
          for (int k = std::abs(n); k > 0; --k) r *= x;
          return r;
        }
        return std::pow(b, p);
      }
      return std::pow(b, a[1].eval(s, t));
    }
    case Op::Sin: return std::sin(a[0].eval(s, t));
    case Op::Cos: return std::cos(a[0].eval(s, t));
    case Op::Sinh: return std::sinh(a[0].eval(s, t));
    case Op::Cosh: return std::cosh(a[0].eval(s, t));
    case Op::Exp: return std::exp(a[0].eval(s, t));
    case Op::Log: return std::log(a[0].eval(s, t));
    case Op::Sqrt: return std::sqrt(a[0].eval(s, t));
  }
  throw std::logic_error("Expr::eval: bad node");
}

Jet2 Expr::lift(double s0, double t0, int order) const {
  const auto& a = args();
  switch (op()) {
    case Op::Const: return Jet2::constant(const_value(), order, s0, t0);
    case Op::VarS: return Jet2::variable_s(order, s0, t0);
    case Op::VarT: return Jet2::variable_t(order, s0, t0);
    case Op::Add: return a[0].lift(s0, t0, order) + a[1].lift(s0, t0, order);
    case Op::Sub: return a[0].lift(s0, t0, order) - a[1].lift(s0, t0, order);
    case Op::Mul:
      if (a[0].is_const()) return a[1].lift(s0, t0, order) * a[0].const_value();
      if (a[1].is_const()) return a[0].lift(s0, t0, order) * a[1].const_value();
      return a[0].lift(s0, t0, order) * a[1].lift(s0, t0, order);
    case Op::Div:
      if (a[1].is_const()) return a[0].lift(s0, t0, order) / a[1].const_value();
      return a[0].lift(s0, t0, order) / a[1].lift(s0, t0, order);
    case Op::Neg: return -a[0].lift(s0, t0, order);
    case Op::Pow:
      if (a[1].is_const()) return pow(a[0].lift(s0, t0, order), a[1].const_value());
      return exp(a[1].lift(s0, t0, order) * log(a[0].lift(s0, t0, order)));
    case Op::Sin: return sin(a[0].lift(s0, t0, order));
    case Op::Cos: return cos(a[0].lift(s0, t0, order));
    case Op::Sinh: return sinh(a[0].lift(s0, t0, order));
    case Op::Cosh: return cosh(a[0].lift(s0, t0, order));
    case Op::Exp: return exp(a[0].lift(s0, t0, order));
    case Op::Log: return log(a[0].lift(s0, t0, order));
    case Op::Sqrt: return sqrt(a[0].lift(s0, t0, order));
  }
  throw std::logic_error("Expr::lift: bad node");
}

Expr Expr::diff(Var v) const {
  const auto& a = args();
  auto d = [&](int i) { return a[i].diff(v); };
  switch (op()) {
    case Op::Const: return 0.0;
    case Op::VarS: return v == Var::S ? 1.0 : 0.0;
    case Op::VarT: return v == Var::T ? 1.0 : 0.0;
    case Op::Add: return d(0) + d(1);
    case Op::Sub: return d(0) - d(1);
    case Op::Mul: return d(0) * a[1] + a[0] * d(1);
    case Op::Div: return (d(0) * a[1] - a[0] * d(1)) / (a[1] * a[1]);
    case Op::Neg: return -d(0);
    case Op::Pow:
      if (!a[1].depends_on(Var::S) && !a[1].depends_on(Var::T))
        return a[1] * cuspidal::pow(a[0], a[1] - 1.0) * d(0);
      return *this * (d(1) * cuspidal::log(a[0]) + a[1] * d(0) / a[0]);
    case Op::Sin: return cuspidal::cos(a[0]) * d(0);
    case Op::Cos: return -cuspidal::sin(a[0]) * d(0);
    case Op::Sinh: return cuspidal::cosh(a[0]) * d(0);
    case Op::Cosh: return cuspidal::sinh(a[0]) * d(0);
    case Op::Exp: return *this * d(0);
    case Op::Log: return d(0) / a[0];
    case Op::Sqrt: return d(0) / (2.0 * *this);
  }
  throw std::logic_error("Expr::diff: bad node");
}

Expr Expr::diff(Var v, int times) const {
  Expr r = *this;
  for (int i = 0; i < times; ++i) r = r.diff(v);
  return r;
}

Expr Expr::substitute(const Expr& s_repl, const Expr& t_repl) const {
  switch (op()) {
    case Op::Const: return *this;
    case Op::VarS: return s_repl;
    case Op::VarT: return t_repl;
    default: {
      std::vector<Expr> na;
      na.reserve(args().size());
      for (const Expr& a : args()) na.push_back(a.substitute(s_repl, t_repl));
      switch (op()) {
        case Op::Add: return na[0] + na[1];
        case Op::Sub: return na[0] - na[1];
        case Op::Mul: return na[0] * na[1];
        case Op::Div: return na[0] / na[1];
        case Op::Neg: return -na[0];
        case Op::Pow: return cuspidal::pow(na[0], na[1]);
        default: return make(op(), std::move(na));
      }
    }
  }
}

const char* Expr::op_name(Op op) {
  switch (op) {
    case Op::Const: return "const";
    case Op::VarS: return "s";
    case Op::VarT: return "t";
    case Op::Add: return "add";
    case Op::Sub: return "sub";
    case Op::Mul: return "mul";
    case Op::Div: return "div";
    case Op::Neg: return "neg";
    case Op::Pow: return "pow";
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Sinh: return "sinh";
    case Op::Cosh: return "cosh";
    case Op::Exp: return "exp";
    case Op::Log: return "log";
    case Op::Sqrt: return "sqrt";
  }
  return "?";
}

Expr::Op Expr::op_from_name(const std::string& name) {
  static const std::pair<const char*, Op> table[] = {
      {"add", Op::Add}, {"+", Op::Add}, {"sub", Op::Sub}, {"-", Op::Sub}, {"mul", Op::Mul},
      {"*", Op::Mul},   {"div", Op::Div}, {"/", Op::Div}, {"neg", Op::Neg}, {"pow", Op::Pow},
      {"^", Op::Pow},   {"sin", Op::Sin}, {"cos", Op::Cos}, {"sinh", Op::Sinh}, {"cosh", Op::Cosh},
      {"exp", Op::Exp}, {"log", Op::Log}, {"sqrt", Op::Sqrt}};
  for (const auto& [n, op] : table)
    if (name == n) return op;
  throw std::invalid_argument("Expr: unknown op '" + name + "'");
}

std::string Expr::to_string() const {
  const auto& a = args();
  switch (op()) {
    case Op::Const: {
      std::ostringstream os;
      os.precision(17);
      os << const_value();
      std::string r = os.str();
      return const_value() < 0 ? "(" + r + ")" : r;
    }
    case Op::VarS: return "s";
    case Op::VarT: return "t";
    case Op::Add: return "(" + a[0].to_string() + " + " + a[1].to_string() + ")";
    case Op::Sub: return "(" + a[0].to_string() + " - " + a[1].to_string() + ")";
    case Op::Mul: return a[0].to_string() + "*" + a[1].to_string();
    case Op::Div: return a[0].to_string() + "/(" + a[1].to_string() + ")";
    case Op::Neg: return "(-" + a[0].to_string() + ")";
    case Op::Pow: return "(" + a[0].to_string() + ")^(" + a[1].to_string() + ")";
    default: return std::string(op_name(op())) + "(" + a[0].to_string() + ")";
  }
}

// Constructors with constant folding and unit/zero elimination.

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_const() && b.is_const()) return a.const_value() + b.const_value();
  if (a.is_const(0.0)) return b;
  if (b.is_const(0.0)) return a;
  return Expr::make(Expr::Op::Add, {a, b});
}

Expr operator-(const Expr& a, const Expr& b) {
  if (a.is_const() && b.is_const()) return a.const_value() - b.const_value();
  if (b.is_const(0.0)) return a;
  if (a.is_const(0.0)) return -b;
  return Expr::make(Expr::Op::Sub, {a, b});
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_const() && b.is_const()) return a.const_value() * b.const_value();
  if (a.is_const(0.0) || b.is_const(0.0)) return 0.0;
  if (a.is_const(1.0)) return b;
  if (b.is_const(1.0)) return a;
  if (a.is_const(-1.0)) return -b;
  if (b.is_const(-1.0)) return -a;
  return Expr::make(Expr::Op::Mul, {a, b});
}

Expr operator/(const Expr& a, const Expr& b) {
  if (a.is_const() && b.is_const() && b.const_value() != 0.0) return a.const_value() / b.const_value();
  if (a.is_const(0.0)) return 0.0;
  if (b.is_const(1.0)) return a;
  return Expr::make(Expr::Op::Div, {a, b});
}

Expr operator-(const Expr& a) {
  if (a.is_const()) return -a.const_value();
  if (a.op() == Expr::Op::Neg) return a.args()[0];
  return Expr::make(Expr::Op::Neg, {a});
}

Expr pow(const Expr& a, const Expr& b) {
  if (b.is_const(0.0)) return 1.0;
  if (b.is_const(1.0)) return a;
  if (a.is_const() && b.is_const()) return std::pow(a.const_value(), b.const_value());
  return Expr::make(Expr::Op::Pow, {a, b});
}

#define CUSPIDAL_UNARY(fn, OP)                                      \
  Expr fn(const Expr& a) {                                          \
    if (a.is_const()) return std::fn(a.const_value());              \
    return Expr::make(Expr::Op::OP, {a});                           \
  }
CUSPIDAL_UNARY(sin, Sin)
CUSPIDAL_UNARY(cos, Cos)
CUSPIDAL_UNARY(sinh, Sinh)
CUSPIDAL_UNARY(cosh, Cosh)
CUSPIDAL_UNARY(exp, Exp)
CUSPIDAL_UNARY(log, Log)
CUSPIDAL_UNARY(sqrt, Sqrt)
#undef CUSPIDAL_UNARY

// Infix parser.

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Expr parse() {
    Expr e = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("Expr::parse: " + msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
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

  Expr expression() {
    Expr e = term();
    for (;;) {
      if (accept('+')) e = e + term();
      else if (accept('-')) e = e - term();
      else return e;
    }
  }
  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) e = e * unary();
      else if (accept('/')) e = e / unary();
      else return e;
    }
  }
  Expr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  Expr power() {
    Expr base = primary();
    if (accept('^')) return cuspidal::pow(base, unary());
    return base;
  }
  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (accept('(')) {
      Expr e = expression();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t used = 0;
      const double v = std::stod(s_.substr(pos_), &used);
      pos_ += used;
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string id = s_.substr(start, pos_ - start);
      if (id == "s") return Expr::s();
      if (id == "t") return Expr::t();
      if (id == "pi") return std::numbers::pi;
      Expr::Op op;
      try {
        op = Expr::op_from_name(id);
      } catch (const std::invalid_argument&) {
        pos_ = start;
        fail("unknown identifier '" + id + "'");
      }
      if (!accept('(')) fail("expected '(' after " + id);
      Expr arg = expression();
      if (!accept(')')) fail("expected ')'");
      switch (op) {
        case Expr::Op::Sin: return cuspidal::sin(arg);
        case Expr::Op::Cos: return cuspidal::cos(arg);
        case Expr::Op::Sinh: return cuspidal::sinh(arg);
        case Expr::Op::Cosh: return cuspidal::cosh(arg);
        case Expr::Op::Exp: return cuspidal::exp(arg);
        case Expr::Op::Log: return cuspidal::log(arg);
        case Expr::Op::Sqrt: return cuspidal::sqrt(arg);
        default: fail("'" + id + "' is not a function");
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr Expr::parse(const std::string& text) { return Parser(text).parse(); }

// MuSpec

MuSpec MuSpec::from_coefficients(std::vector<Expr> coefficients) {
  if (coefficients.empty()) throw std::invalid_argument("MuSpec: mu_0 is required");
  MuSpec m;
  m.coefficients_ = std::move(coefficients);
  return m;
}

MuSpec MuSpec::from_expr(const Expr& mu, int degree) {
  if (degree < 0) throw std::invalid_argument("MuSpec: negative degree");
  std::vector<Expr> c;
  Expr d = mu;
  for (int k = 0; k <= degree; ++k) {
    c.push_back(d.substitute(Expr::s(), 0.0));
    d = d.diff(Expr::Var::T);
  }
  for (double s : {-0.37, 0.0, 0.41})
    for (double t : {-0.29, 0.13, 0.52})
      if (std::abs(d.eval(s, t)) > 1e-12 * (1.0 + std::abs(mu.eval(s, t))))
        throw std::invalid_argument("MuSpec: mu is not a polynomial of degree " + std::to_string(degree) + " in t");
  return from_coefficients(std::move(c));
}

MuSpec MuSpec::constant(std::vector<double> coefficients) {
  std::vector<Expr> c(coefficients.begin(), coefficients.end());
  return from_coefficients(std::move(c));
}

Expr MuSpec::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coefficients_.size())) return 0.0;
  return coefficients_[k];
}

Expr MuSpec::mu() const {
  Expr r = 0.0;
  for (int k = static_cast<int>(coefficients_.size()) - 1; k >= 0; --k)
    r = r + coefficients_[k] * (1.0 / factorial(k)) * pow(Expr::t(), k);
  return r;
}

Expr MuSpec::lambda() const {
  Expr r = 0.0;
  for (int k = static_cast<int>(coefficients_.size()) - 1; k >= 0; --k)
    r = r + coefficients_[k] * (1.0 / factorial(k + 1)) * pow(Expr::t(), k + 1);
  return r;
}

}  // namespace cuspidal
