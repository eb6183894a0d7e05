#pragma once

#include <string>

#include "hpade/poly_format.hpp"
#include "hpade/poly_gcd.hpp"
#include "hpade/polynomial.hpp"

namespace hpade {

// Element of Q[a1..am] stored as an integer polynomial over a single shared
// positive denominator, with gcd(content(num), den) = 1.
class RatPoly {
 public:
  RatPoly() : num_(0), den_(1) {}
  explicit RatPoly(IntPoly num) : num_(std::move(num)), den_(1) {}
  RatPoly(IntPoly num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw PreconditionError("RatPoly: zero denominator");
    normalize();
  }
  static RatPoly zero(int arity) { return RatPoly(IntPoly::zero(arity)); }
  static RatPoly constant(int arity, const Rat& q) {
    return RatPoly(IntPoly::constant(arity, q.get_num()), q.get_den());
  }

  const IntPoly& num() const { return num_; }
  const Int& den() const { return den_; }
  int arity() const { return num_.arity(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant(); }

  Rat constant_value() const { return make_rat(num_.constant_value(), den_); }

  RatPoly operator-() const { return RatPoly(-num_, den_, NoNormalize{}); }

  RatPoly operator+(const RatPoly& o) const {
    Int g = int_gcd(den_, o.den_);
    Int l = int_divexact(den_, g) * o.den_;
    return RatPoly(num_ * int_divexact(o.den_, g) +
                       o.num_ * int_divexact(den_, g),
                   l);
  }

  RatPoly operator-(const RatPoly& o) const { return *this + (-o); }

  RatPoly operator*(const RatPoly& o) const {
    return RatPoly(num_ * o.num_, den_ * o.den_);
  }

  RatPoly operator*(const Rat& q) const {
    return RatPoly(num_ * Int(q.get_num()), den_ * q.get_den());
  }

  RatPoly operator*(const Int& c) const { return RatPoly(num_ * c, den_); }

  bool operator==(const RatPoly& o) const {
    return den_ == o.den_ && num_ == o.num_;
  }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  // Exact division; the quotient must again lie in Q[a1..am].  Dividing by
  // the primitive part keeps the computation in Z[a1..am] (Gauss's lemma);
  // the divisor's content moves into the denominator.
  RatPoly divided_by(const RatPoly& o) const {
    if (o.is_zero()) throw PreconditionError("RatPoly: division by zero");
    Int c = o.num_.content();
    IntPoly q = exact_div(num_, o.num_.primitive_part());  // may throw
    return RatPoly(q * o.den_, den_ * c);
  }

  std::string str() const {
    if (den_ == 1) return to_string(num_);
    if (num_.is_constant()) return num_.constant_value().get_str() + "/" + den_.get_str();
    return "(" + to_string(num_) + ")/" + den_.get_str();
  }

 private:
  struct NoNormalize {};
  RatPoly(IntPoly num, Int den, NoNormalize)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    Int g = int_gcd(num_.content(), den_);
    if (g > 1) {
      IntPoly reduced(num_.arity());
      for (const auto& [m, c] : num_.terms())
        reduced.add_term(m, int_divexact(c, g));
      num_ = std::move(reduced);
      den_ = int_divexact(den_, g);
    }
  }

  IntPoly num_;
  Int den_;
};

inline RatPoly operator*(const Rat& q, const RatPoly& p) { return p * q; }
inline RatPoly operator*(const Int& c, const RatPoly& p) { return p * c; }

}  // namespace hpade
