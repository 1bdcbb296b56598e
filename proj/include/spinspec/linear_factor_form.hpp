// Canonical products of linear factors in one variable r:
//
//     f(r) = scale * prod_i (r - root_i)^mult_i
//
// This is the symbolic carrier for eigenvalues as functions of the operator
// order r. Multiplication and reciprocals are exact; zeros and poles of an
// evaluation are reported structurally instead of crashing.

#pragma once

#include "spinspec/rational.hpp"

#include <map>
#include <variant>

namespace spinspec {

// Deterministic root order: (numerator, denominator) lexicographically.
struct NumDenLess {
  bool operator()(const Rational& a, const Rational& b) const {
    const Int& na = numerator(a);
    const Int& nb = numerator(b);
    if (na != nb) return na < nb;
    return denominator(a) < denominator(b);
  }
};

// r hit a root with positive multiplicity: the value is exactly zero.
struct ZeroTag {
  Rational root;
  int multiplicity;
  friend bool operator==(const ZeroTag&, const ZeroTag&) = default;
};

// r hit a root with negative multiplicity: the value blows up.
struct PoleTag {
  Rational root;
  int multiplicity;
  friend bool operator==(const PoleTag&, const PoleTag&) = default;
};

using EvalResult = std::variant<Rational, ZeroTag, PoleTag>;

class LinearFactorForm {
 public:
  using FactorMap = std::map<Rational, int, NumDenLess>;

  // The constant 1.
  LinearFactorForm() : scale_(1) {}

  static LinearFactorForm constant(const Rational& value);
  // The monic factor (r - root).
  static LinearFactorForm linear(const Rational& root);
  // (x + r)/(x - r), the quantity induced by a transition with datum x.
  // For x = 0 the factors cancel and the form is the constant -1.
  static LinearFactorForm transition_quantity(const Rational& x);

  const Rational& scale() const { return scale_; }
  const FactorMap& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }
  bool is_zero() const { return scale_ == 0; }

  // Throws std::domain_error on the zero form.
  LinearFactorForm reciprocal() const;

  EvalResult evaluate(const Rational& r) const;
  // Evaluate where the caller knows r is neither zero nor pole; a tag result
  // throws std::domain_error.
  Rational evaluate_value(const Rational& r) const;

  LinearFactorForm& operator*=(const LinearFactorForm& other);
  friend LinearFactorForm operator*(LinearFactorForm a,
                                    const LinearFactorForm& b) {
    a *= b;
    return a;
  }
  friend LinearFactorForm operator-(LinearFactorForm f) {
    f.scale_ = -f.scale_;
    return f;
  }

  // Canonical representation makes structural equality semantic equality.
  friend bool operator==(const LinearFactorForm&,
                         const LinearFactorForm&) = default;

  std::string str() const;

 private:
  Rational scale_;
  FactorMap factors_;
};

}  // namespace spinspec
