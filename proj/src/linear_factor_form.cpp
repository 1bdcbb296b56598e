#include "spinspec/linear_factor_form.hpp"

#include <sstream>
#include <stdexcept>

namespace spinspec {

LinearFactorForm LinearFactorForm::constant(const Rational& value) {
  LinearFactorForm f;
  f.scale_ = value;
  return f;
}

LinearFactorForm LinearFactorForm::linear(const Rational& root) {
  LinearFactorForm f;
  f.factors_[root] = 1;
  return f;
}

LinearFactorForm LinearFactorForm::transition_quantity(const Rational& x) {
  // (x + r)/(x - r) = -(r + x)/(r - x): scale -1, roots -x and x.
  LinearFactorForm f;
  f.scale_ = -1;
  if (x != 0) {
    f.factors_[-x] = 1;
    f.factors_[x] = -1;
  }
  return f;
}

LinearFactorForm LinearFactorForm::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of the zero form");
  LinearFactorForm f;
  f.scale_ = Rational(1) / scale_;
  for (const auto& [root, mult] : factors_) f.factors_[root] = -mult;
  return f;
}

LinearFactorForm& LinearFactorForm::operator*=(const LinearFactorForm& other) {
  scale_ *= other.scale_;
  if (scale_ == 0) {
    factors_.clear();
    return *this;
  }
  for (const auto& [root, mult] : other.factors_) {
    auto it = factors_.find(root);
    if (it == factors_.end()) {
      factors_.emplace(root, mult);
    } else {
      it->second += mult;
      if (it->second == 0) factors_.erase(it);
    }
  }
  return *this;
}

EvalResult LinearFactorForm::evaluate(const Rational& r) const {
  if (is_zero()) return Rational(0);
  auto hit = factors_.find(r);
  if (hit != factors_.end()) {
    if (hit->second > 0) return ZeroTag{hit->first, hit->second};
    return PoleTag{hit->first, hit->second};
  }
  Rational acc = scale_;
  for (const auto& [root, mult] : factors_) {
    Rational base = r - root;
    for (int i = 0; i < std::abs(mult); ++i) {
      if (mult > 0) {
        acc *= base;
      } else {
        acc /= base;
      }
    }
  }
  return acc;
}

Rational LinearFactorForm::evaluate_value(const Rational& r) const {
  EvalResult res = evaluate(r);
  if (const Rational* v = std::get_if<Rational>(&res)) return *v;
  if (std::holds_alternative<ZeroTag>(res)) return Rational(0);
  throw std::domain_error("evaluation at a pole, r = " + to_string(r));
}

std::string LinearFactorForm::str() const {
  std::ostringstream os;
  os << to_string(scale_);
  for (const auto& [root, mult] : factors_) {
    os << " * (r";
    if (root > 0) {
      os << " - " << to_string(root);
    } else if (root < 0) {
      os << " + " << to_string(-root);
    }
    os << ")";
    if (mult != 1) os << "^" << mult;
  }
  return os.str();
}

}  // namespace spinspec
