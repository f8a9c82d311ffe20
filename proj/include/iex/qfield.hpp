#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iex/errors.hpp"

namespace iex {

using Int = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational num/den with den > 0 and gcd 1.
Rational make_rational(const Int& num, const Int& den);
Rational make_rational(long num, long den);

bool is_square_free(long d);

/// Element p + q*sqrt(d) of the real quadratic field Q[sqrt(d)].
///
/// Canonical form: d is square-free, d >= 1, and q == 0 forces d == 1
/// (d == 1 in turn folds q into p). Equal values therefore have equal
/// components, and componentwise comparison is value comparison.
///
/// Arithmetic between two irrational elements requires the same radicand;
/// a rational operand (d == 1) embeds into the other operand's field.
/// All comparisons are exact; no floating point is used anywhere.
class QuadNum {
public:
  QuadNum() : d_(1) {}
  QuadNum(long v) : p_(v), d_(1) {}  // NOLINT: implicit by design
  explicit QuadNum(Rational p) : p_(std::move(p)), d_(1) { p_.canonicalize(); }
  QuadNum(Rational p, Rational q, long d);

  long radicand() const { return d_; }
  const Rational& rational_part() const { return p_; }
  const Rational& radical_part() const { return q_; }
  bool is_rational() const { return d_ == 1; }
  bool is_zero() const { return d_ == 1 && p_ == 0; }
  bool is_integral() const;

  /// Exact sign in {-1, 0, +1}, decided with integer arithmetic only.
  int sign() const;
  QuadNum abs() const;
  QuadNum operator-() const;

  friend QuadNum operator+(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator-(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator*(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator/(const QuadNum& x, const QuadNum& y);

  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.d_ == y.d_ && x.p_ == y.p_ && x.q_ == y.q_;
  }
  friend bool operator!=(const QuadNum& x, const QuadNum& y) { return !(x == y); }
  friend bool operator<(const QuadNum& x, const QuadNum& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadNum& x, const QuadNum& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const QuadNum& x, const QuadNum& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const QuadNum& x, const QuadNum& y) { return (x - y).sign() >= 0; }

  /// Canonical rendering, e.g. "3/2 - 1/2*sqrt(5)", "-2 + sqrt(5)", "0".
  /// parse() is its exact inverse.
  std::string str() const;

  /// sqrt(d) as a field element.
  static QuadNum sqrt(long d) { return QuadNum(Rational(0), Rational(1), d); }

  /// Parses the expression grammar
  ///   expr   := term (('+'|'-') term)*
  ///   term   := unary (('*'|'/') unary)*
  ///   unary  := '-' unary | primary
  ///   primary := INT | 'sqrt' '(' INT ')' | '(' expr ')'
  /// which covers canonical renderings, plain rationals like "3/2",
  /// and compound length expressions.
  static QuadNum parse(std::string_view text);

private:
  Rational p_, q_;
  long d_;

  static long common_radicand(const QuadNum& x, const QuadNum& y);
};

std::ostream& operator<<(std::ostream& os, const QuadNum& x);

/// max(|m|, |n|) for an integral element m + n*sqrt(d).
Int height_psi(const QuadNum& z);

/// Least positive integer scale making every entry integral, with the
/// scaled entries. Entries must live in compatible fields.
std::pair<std::vector<QuadNum>, Int> clear_denominators(std::span<const QuadNum> values);

/// Largest integer <= z, computed by exact binary search.
Int floor_quad(const QuadNum& z);

}  // namespace iex
