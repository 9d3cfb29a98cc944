#include "piharmonic/closedform.hpp"

#include <utility>

#include "piharmonic/constants.hpp"
#include "piharmonic/errors.hpp"
#include "piharmonic/special.hpp"

namespace piharmonic {

namespace {
enum class Op {
  kRational,
  kPi,
  kLog2,
  kEulerGamma,
  kGamma,
  kDigamma,
  kTrigamma,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kNeg,
  kPow,
};
}  // namespace

struct ClosedForm::Node {
  Op op;
  Rational value;  // kRational payload, kPow exponent, gamma-family argument
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

ClosedForm::ClosedForm() : ClosedForm(rational(Rational(0))) {}

ClosedForm::ClosedForm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

ClosedForm ClosedForm::rational(const Rational& q) {
  auto n = std::make_shared<Node>();
  n->op = Op::kRational;
  n->value = q;
  return ClosedForm(n);
}

ClosedForm ClosedForm::integer(long v) { return rational(Rational(v)); }

ClosedForm ClosedForm::pi() {
  auto n = std::make_shared<Node>();
  n->op = Op::kPi;
  return ClosedForm(n);
}

ClosedForm ClosedForm::log2() {
  auto n = std::make_shared<Node>();
  n->op = Op::kLog2;
  return ClosedForm(n);
}

ClosedForm ClosedForm::euler_gamma() {
  auto n = std::make_shared<Node>();
  n->op = Op::kEulerGamma;
  return ClosedForm(n);
}

namespace {
void require_positive_arg(const Rational& x, const char* fn) {
  if (x.sign() <= 0)
    throw DomainError(std::string(fn) + " argument must be positive, got " + x.to_string());
}
}  // namespace

ClosedForm ClosedForm::gamma(const Rational& x) {
  require_positive_arg(x, "Gamma");
  auto n = std::make_shared<Node>();
  n->op = Op::kGamma;
  n->value = x;
  return ClosedForm(n);
}

ClosedForm ClosedForm::digamma(const Rational& x) {
  require_positive_arg(x, "digamma");
  auto n = std::make_shared<Node>();
  n->op = Op::kDigamma;
  n->value = x;
  return ClosedForm(n);
}

ClosedForm ClosedForm::trigamma(const Rational& x) {
  require_positive_arg(x, "trigamma");
  auto n = std::make_shared<Node>();
  n->op = Op::kTrigamma;
  n->value = x;
  return ClosedForm(n);
}

ClosedForm ClosedForm::operator+(const ClosedForm& o) const {
  auto n = std::make_shared<Node>();
  n->op = Op::kAdd;
  n->lhs = node_;
  n->rhs = o.node_;
  return ClosedForm(n);
}

ClosedForm ClosedForm::operator-(const ClosedForm& o) const {
  auto n = std::make_shared<Node>();
  n->op = Op::kSub;
  n->lhs = node_;
  n->rhs = o.node_;
  return ClosedForm(n);
}

ClosedForm ClosedForm::operator*(const ClosedForm& o) const {
  auto n = std::make_shared<Node>();
  n->op = Op::kMul;
  n->lhs = node_;
  n->rhs = o.node_;
  return ClosedForm(n);
}

ClosedForm ClosedForm::operator/(const ClosedForm& o) const {
  auto n = std::make_shared<Node>();
  n->op = Op::kDiv;
  n->lhs = node_;
  n->rhs = o.node_;
  return ClosedForm(n);
}

ClosedForm ClosedForm::operator-() const {
  auto n = std::make_shared<Node>();
  n->op = Op::kNeg;
  n->lhs = node_;
  return ClosedForm(n);
}

ClosedForm ClosedForm::pow(const Rational& e) const {
  auto n = std::make_shared<Node>();
  n->op = Op::kPow;
  n->value = e;
  n->lhs = node_;
  return ClosedForm(n);
}

ClosedForm ClosedForm::scaled(const Rational& q) const {
  return rational(q) * *this;
}

BigReal ClosedForm::eval(const PrecisionContext& ctx) const {
  const long bits = ctx.working_bits;
  switch (node_->op) {
    case Op::kRational:
      return BigReal::from_rational(node_->value, bits);
    case Op::kPi:
      return const_pi_bits(bits);
    case Op::kLog2:
      return const_log2_bits(bits);
    case Op::kEulerGamma:
      return const_euler_gamma_bits(bits);
    case Op::kGamma:
      return gamma_value(node_->value, ctx);
    case Op::kDigamma:
      return piharmonic::digamma(node_->value, ctx);
    case Op::kTrigamma:
      return piharmonic::trigamma(node_->value, ctx);
    case Op::kAdd:
      return ClosedForm(node_->lhs).eval(ctx) + ClosedForm(node_->rhs).eval(ctx);
    case Op::kSub:
      return ClosedForm(node_->lhs).eval(ctx) - ClosedForm(node_->rhs).eval(ctx);
    case Op::kMul:
      return ClosedForm(node_->lhs).eval(ctx) * ClosedForm(node_->rhs).eval(ctx);
    case Op::kDiv: {
      BigReal d = ClosedForm(node_->rhs).eval(ctx);
      if (d.is_zero()) throw DomainError("closed form divides by zero");
      return ClosedForm(node_->lhs).eval(ctx) / d;
    }
    case Op::kNeg:
      return -ClosedForm(node_->lhs).eval(ctx);
    case Op::kPow:
      return ClosedForm(node_->lhs).eval(ctx).pow_rational(node_->value);
  }
  throw DomainError("closed form node corrupt");
}

std::string ClosedForm::to_string() const {
  switch (node_->op) {
    case Op::kRational:
      return node_->value.to_string();
    case Op::kPi:
      return "pi";
    case Op::kLog2:
      return "log(2)";
    case Op::kEulerGamma:
      return "euler_gamma";
    case Op::kGamma:
      return "Gamma(" + node_->value.to_string() + ")";
    case Op::kDigamma:
      return "psi(" + node_->value.to_string() + ")";
    case Op::kTrigamma:
      return "psi1(" + node_->value.to_string() + ")";
    case Op::kAdd:
      return "(" + ClosedForm(node_->lhs).to_string() + " + " +
             ClosedForm(node_->rhs).to_string() + ")";
    case Op::kSub:
      return "(" + ClosedForm(node_->lhs).to_string() + " - " +
             ClosedForm(node_->rhs).to_string() + ")";
    case Op::kMul:
      return "(" + ClosedForm(node_->lhs).to_string() + "*" +
             ClosedForm(node_->rhs).to_string() + ")";
    case Op::kDiv:
      return "(" + ClosedForm(node_->lhs).to_string() + "/" +
             ClosedForm(node_->rhs).to_string() + ")";
    case Op::kNeg:
      return "(-" + ClosedForm(node_->lhs).to_string() + ")";
    case Op::kPow:
      return ClosedForm(node_->lhs).to_string() + "^(" +
             node_->value.to_string() + ")";
  }
  return "?";
}

}  // namespace piharmonic
