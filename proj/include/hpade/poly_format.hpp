#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "hpade/polynomial.hpp"

namespace hpade {

// Canonical textual form: terms sorted by the canonical monomial order
// (largest first), decimal coefficients, variables a1..am in index order
// inside a term, e.g. "3*a1^2*a2 - 1".  This exact serialization is used by
// the CLI and the golden files.
inline std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Int a = int_abs(c);
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool coeff_written = false;
    if (a != 1 || m.is_unit()) {
      out << a.get_str();
      coeff_written = true;
    }
    for (int v = 0; v < p.arity(); ++v) {
      uint32_t e = m.exp(v);
      if (e == 0) continue;
      if (coeff_written) out << '*';
      out << 'a' << (v + 1);
      if (e > 1) out << '^' << e;
      coeff_written = true;
    }
  }
  return out.str();
}

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& text, int arity) : s_(text), arity_(arity) {}

  IntPoly parse() {
    IntPoly acc(arity_);
    skip_ws();
    bool neg = consume_sign();
    acc += parse_term(neg);
    skip_ws();
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      acc += parse_term(c == '-');
      skip_ws();
    }
    return acc;
  }

 private:
  IntPoly parse_term(bool negative) {
    Int coeff = 1;
    Monomial mono(arity_);
    bool saw_factor = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = parse_integer();
      saw_factor = true;
    }
    while (true) {
      skip_ws();
      if (saw_factor) {
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          skip_ws();
        } else {
          break;
        }
      }
      if (pos_ >= s_.size() || s_[pos_] != 'a') fail("expected variable");
      ++pos_;
      long idx = parse_long();
      if (idx < 1 || idx > arity_) fail("variable index out of range");
      uint32_t e = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        long ev = parse_long();
        if (ev < 0) fail("negative exponent");
        e = static_cast<uint32_t>(ev);
      }
      mono.set_exp(static_cast<int>(idx - 1), mono.exp(static_cast<int>(idx - 1)) + e);
      saw_factor = true;
    }
    if (!saw_factor) fail("empty term");
    if (negative) coeff = -coeff;
    return IntPoly::term(mono, coeff);
  }

  Int parse_integer() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected integer");
    return Int(s_.substr(start, pos_ - start));
  }

  long parse_long() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected number");
    return std::stol(s_.substr(start, pos_ - start));
  }

  bool consume_sign() {
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      bool neg = s_[pos_] == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("polynomial parse error at position " +
                     std::to_string(pos_) + ": " + why + " in \"" + s_ + "\"");
  }

  const std::string& s_;
  int arity_;
  size_t pos_ = 0;
};

}  // namespace detail

inline IntPoly parse_poly(const std::string& text, int arity) {
  return detail::PolyParser(text, arity).parse();
}

}  // namespace hpade
