#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hpade/errors.hpp"
#include "hpade/integers.hpp"
#include "hpade/monomial.hpp"

namespace hpade {

// Pairwise distinct nonzero integers a1..a_m used to specialize the
// variables.
class IntegerPoint {
 public:
  explicit IntegerPoint(std::vector<Int> values) : values_(std::move(values)) {
    for (size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] == 0)
        throw PreconditionError("IntegerPoint: zero coordinate");
      for (size_t j = i + 1; j < values_.size(); ++j)
        if (values_[i] == values_[j])
          throw PreconditionError("IntegerPoint: repeated coordinate");
    }
  }

  int arity() const { return static_cast<int>(values_.size()); }
  const Int& value(int i) const { return values_.at(static_cast<size_t>(i)); }
  const std::vector<Int>& values() const { return values_; }

 private:
  std::vector<Int> values_;
};

// Sparse multivariate polynomial over Z.  Terms are kept in a map ordered by
// the canonical monomial order (largest first); no zero coefficient is ever
// stored, so equality is structural.
class IntPoly {
 public:
  using TermMap = std::map<Monomial, Int, MonomialLexGreater>;

  IntPoly() : arity_(0) {}
  explicit IntPoly(int arity) : arity_(arity) {
    if (arity < 0) throw PreconditionError("IntPoly: negative arity");
  }

  static IntPoly zero(int arity) { return IntPoly(arity); }

  static IntPoly constant(int arity, Int c) {
    IntPoly p(arity);
    if (c != 0) p.terms_.emplace(Monomial(arity), std::move(c));
    return p;
  }

  static IntPoly variable(int arity, int var, uint32_t exp = 1) {
    if (var < 0 || var >= arity)
      throw PreconditionError("IntPoly::variable: index out of range");
    IntPoly p(arity);
    if (exp == 0) return constant(arity, 1);
    Monomial m(arity);
    m.set_exp(var, exp);
    p.terms_.emplace(std::move(m), Int(1));
    return p;
  }

  static IntPoly term(Monomial m, Int c) {
    IntPoly p(m.arity());
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
  }

  // Value of a constant polynomial (0 for the zero polynomial).
  Int constant_value() const {
    if (is_zero()) return Int(0);
    if (!is_constant()) throw PreconditionError("IntPoly: not a constant");
    return terms_.begin()->second;
  }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw PreconditionError("IntPoly: zero has no leading term");
    return terms_.begin()->first;
  }

  const Int& leading_coefficient() const {
    if (is_zero()) throw PreconditionError("IntPoly: zero has no leading term");
    return terms_.begin()->second;
  }

  long total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;  // -1 for the zero polynomial
  }

  long degree_in(int var) const {
    long d = -1;
    for (const auto& [m, c] : terms_)
      d = std::max(d, static_cast<long>(m.exp(var)));
    return d;
  }

  // gcd of the coefficients; content(p) >= 1 for p != 0, content(0) = 0.
  Int content() const {
    Int g = 0;
    for (const auto& [m, c] : terms_) {
      g = int_gcd(g, c);
      if (g == 1) break;
    }
    return g;
  }

  // p = content() * primitive_part() exactly; the primitive part keeps the
  // sign of p.
  IntPoly primitive_part() const {
    if (is_zero()) return *this;
    IntPoly r(arity_);
    Int g = content();
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, int_divexact(c, g));
    return r;
  }

  IntPoly operator-() const {
    IntPoly r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, Int(-c));
    return r;
  }

  IntPoly& operator+=(const IntPoly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  IntPoly& operator-=(const IntPoly& o) {
    check_arity(o);
    for (const auto& [m, c] : o.terms_) add_term(m, Int(-c));
    return *this;
  }

  IntPoly operator+(const IntPoly& o) const {
    IntPoly r = *this;
    r += o;
    return r;
  }

  IntPoly operator-(const IntPoly& o) const {
    IntPoly r = *this;
    r -= o;
    return r;
  }

  IntPoly operator*(const IntPoly& o) const {
    check_arity(o);
    IntPoly r(arity_);
    if (is_zero() || o.is_zero()) return r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  IntPoly operator*(const Int& c) const {
    IntPoly r(arity_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }

  bool operator==(const IntPoly& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  // Formal partial derivative with respect to one variable.
  IntPoly derivative(int var) const {
    if (var < 0 || var >= arity_)
      throw PreconditionError("IntPoly::derivative: index out of range");
    IntPoly r(arity_);
    for (const auto& [m, c] : terms_) {
      uint32_t e = m.exp(var);
      if (e == 0) continue;
      Monomial dm = m;
      dm.set_exp(var, e - 1);
      r.add_term(dm, c * Int(e));
    }
    return r;
  }

  // Ring-homomorphic evaluation at an integer point.
  Int eval(const IntegerPoint& point) const {
    if (point.arity() != arity_)
      throw ArityMismatch("IntPoly::eval: point arity mismatch");
    Int acc = 0;
    for (const auto& [m, c] : terms_) {
      Int t = c;
      for (int v = 0; v < arity_; ++v) {
        uint32_t e = m.exp(v);
        if (e != 0) t *= int_pow(point.value(v), e);
      }
      acc += t;
    }
    return acc;
  }

  // Evaluation allowing arbitrary (possibly zero or repeated) values.
  Int eval_at(const std::vector<Int>& values) const {
    if (static_cast<int>(values.size()) != arity_)
      throw ArityMismatch("IntPoly::eval_at: arity mismatch");
    Int acc = 0;
    for (const auto& [m, c] : terms_) {
      Int t = c;
      for (int v = 0; v < arity_; ++v) {
        uint32_t e = m.exp(v);
        if (e != 0) t *= int_pow(values[static_cast<size_t>(v)], e);
      }
      acc += t;
    }
    return acc;
  }

  // Substitution identifying variable `from` with variable `to` (arity is
  // preserved; the `from` slot ends up unused).
  IntPoly identify_vars(int from, int to) const {
    if (from < 0 || from >= arity_ || to < 0 || to >= arity_)
      throw PreconditionError("IntPoly::identify_vars: index out of range");
    IntPoly r(arity_);
    for (const auto& [m, c] : terms_) {
      Monomial nm = m;
      nm.set_exp(to, nm.exp(to) + nm.exp(from));
      nm.set_exp(from, 0);
      r.add_term(nm, c);
    }
    return r;
  }

  // Lift a univariate polynomial into arity `arity` with its variable mapped
  // to slot `var`.
  IntPoly lift_to(int arity, int var) const {
    if (arity_ != 1) throw PreconditionError("IntPoly::lift_to: not univariate");
    if (var < 0 || var >= arity)
      throw PreconditionError("IntPoly::lift_to: index out of range");
    IntPoly r(arity);
    for (const auto& [m, c] : terms_) {
      Monomial nm(arity);
      nm.set_exp(var, m.exp(0));
      r.terms_.emplace(std::move(nm), c);
    }
    return r;
  }

  // Sign-normalized copy: leading coefficient positive under the canonical
  // order.
  IntPoly sign_normalized() const {
    if (is_zero() || leading_coefficient() > 0) return *this;
    return -*this;
  }

  void add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  void check_arity(const IntPoly& o) const {
    if (arity_ != o.arity_) throw ArityMismatch("IntPoly: arity mismatch");
  }

  int arity_;
  TermMap terms_;
};

inline IntPoly operator*(const Int& c, const IntPoly& p) { return p * c; }
inline IntPoly operator*(long c, const IntPoly& p) { return p * Int(c); }
inline IntPoly operator*(const IntPoly& p, long c) { return p * Int(c); }
inline IntPoly operator+(const IntPoly& p, long c) {
  return p + IntPoly::constant(p.arity(), Int(c));
}
inline IntPoly operator+(long c, const IntPoly& p) { return p + c; }
inline IntPoly operator-(const IntPoly& p, long c) { return p + (-c); }
inline IntPoly operator-(long c, const IntPoly& p) {
  return IntPoly::constant(p.arity(), Int(c)) - p;
}

inline IntPoly pow(const IntPoly& p, unsigned long e) {
  IntPoly r = IntPoly::constant(p.arity(), 1);
  IntPoly base = p;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

// Exact quotient p / d in Z[a1..am].  Throws NotDivisible when no polynomial
// quotient exists; a throw out of a certificate routine falsifies the
// corresponding divisibility claim.
inline IntPoly exact_div(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw PreconditionError("exact_div: division by zero");
  if (p.arity() != d.arity()) throw ArityMismatch("exact_div: arity mismatch");
  IntPoly q(p.arity());
  IntPoly r = p;
  const Monomial& dm = d.leading_monomial();
  const Int& dc = d.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial& rm = r.leading_monomial();
    const Int& rc = r.leading_coefficient();
    if (!dm.divides(rm) || !int_divisible(rc, dc))
      throw NotDivisible("exact_div: not divisible");
    IntPoly t = IntPoly::term(dm.quotient_of(rm), int_divexact(rc, dc));
    q += t;
    r -= t * d;
  }
  return q;
}

inline bool divides(const IntPoly& d, const IntPoly& p) {
  if (d.is_zero()) return p.is_zero();
  try {
    exact_div(p, d);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

}  // namespace hpade
