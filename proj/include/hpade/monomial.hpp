#pragma once

#include <cstdint>
#include <vector>

#include "hpade/errors.hpp"

namespace hpade {

// Exponent vector of a power product in variables a1..a_m.  The arity is
// fixed per polynomial; every monomial stored in one polynomial has the same
// arity.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int arity) : exps_(static_cast<size_t>(arity), 0) {
    if (arity < 0) throw PreconditionError("Monomial: negative arity");
  }
  explicit Monomial(std::vector<uint32_t> exps) : exps_(std::move(exps)) {}

  int arity() const { return static_cast<int>(exps_.size()); }
  uint32_t exp(int var) const { return exps_.at(static_cast<size_t>(var)); }
  void set_exp(int var, uint32_t e) { exps_.at(static_cast<size_t>(var)) = e; }

  long total_degree() const {
    long d = 0;
    for (uint32_t e : exps_) d += e;
    return d;
  }

  bool is_unit() const {
    for (uint32_t e : exps_)
      if (e != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    check_arity(o);
    Monomial r = *this;
    for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    check_arity(o);
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  // Quotient o / *this; caller must check divides(o).
  Monomial quotient_of(const Monomial& o) const {
    check_arity(o);
    Monomial r(arity());
    for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = o.exps_[i] - exps_[i];
    return r;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  // Lexicographic order with a1 > a2 > ... > a_m: the first differing
  // exponent decides.  This is the canonical order used everywhere
  // (serialization, leading terms, sign normalization).
  static int lex_cmp(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity())
      throw ArityMismatch("Monomial::lex_cmp: arity mismatch");
    for (size_t i = 0; i < a.exps_.size(); ++i) {
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? -1 : 1;
    }
    return 0;
  }

 private:
  void check_arity(const Monomial& o) const {
    if (arity() != o.arity()) throw ArityMismatch("Monomial: arity mismatch");
  }

  std::vector<uint32_t> exps_;
};

// Comparator placing the lex-largest monomial first, so map iteration yields
// the canonical term order.
struct MonomialLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::lex_cmp(a, b) > 0;
  }
};

}  // namespace hpade
