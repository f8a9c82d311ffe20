#include "iex/qfield.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace iex {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Int(num), Int(den)); }

bool is_square_free(long d) {
  if (d < 1) return false;
  for (long f = 2; f * f <= d; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

QuadNum::QuadNum(Rational p, Rational q, long d) : p_(std::move(p)), q_(std::move(q)), d_(d) {
  if (d_ < 1) throw NegativeRadicand("radicand must be >= 1, got " + std::to_string(d_));
  if (!is_square_free(d_))
    throw NonSquareFreeRadicand("radicand must be square-free, got " + std::to_string(d_));
  p_.canonicalize();
  q_.canonicalize();
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
  }
  if (q_ == 0) d_ = 1;
}

bool QuadNum::is_integral() const { return p_.get_den() == 1 && q_.get_den() == 1; }

int QuadNum::sign() const {
  int sp = sgn(p_);
  int sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: |p| vs |q|*sqrt(d) decided by comparing squares.
  // Equality is impossible: it would make sqrt(d) rational.
  Rational lhs = p_ * p_;
  Rational rhs = q_ * q_ * d_;
  int c = cmp(lhs, rhs);
  if (c == 0) throw std::logic_error("square-free radicand produced a rational sqrt");
  return c > 0 ? sp : sq;
}

QuadNum QuadNum::abs() const { return sign() < 0 ? -*this : *this; }

QuadNum QuadNum::operator-() const {
  QuadNum r;
  r.p_ = -p_;
  r.q_ = -q_;
  r.d_ = d_;
  return r;
}

long QuadNum::common_radicand(const QuadNum& x, const QuadNum& y) {
  if (x.d_ == y.d_) return x.d_;
  if (x.d_ == 1) return y.d_;
  if (y.d_ == 1) return x.d_;
  throw RadicandMismatch("operands live in Q[sqrt(" + std::to_string(x.d_) + ")] and Q[sqrt(" +
                         std::to_string(y.d_) + ")]");
}

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
  long d = QuadNum::common_radicand(x, y);
  return QuadNum(x.p_ + y.p_, x.q_ + y.q_, d);
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) {
  long d = QuadNum::common_radicand(x, y);
  return QuadNum(x.p_ - y.p_, x.q_ - y.q_, d);
}

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
  long d = QuadNum::common_radicand(x, y);
  return QuadNum(x.p_ * y.p_ + x.q_ * y.q_ * d, x.p_ * y.q_ + x.q_ * y.p_, d);
}

QuadNum operator/(const QuadNum& x, const QuadNum& y) {
  long d = QuadNum::common_radicand(x, y);
  if (y.is_zero()) throw DivisionByZero("division by zero field element");
  // Multiply by the conjugate; the norm p^2 - q^2 d is a nonzero rational.
  Rational norm = y.p_ * y.p_ - y.q_ * y.q_ * d;
  if (norm == 0) throw std::logic_error("zero norm for nonzero element");
  Rational np = (x.p_ * y.p_ - x.q_ * y.q_ * d) / norm;
  Rational nq = (x.q_ * y.p_ - x.p_ * y.q_) / norm;
  return QuadNum(np, nq, d);
}

namespace {

std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace

std::string QuadNum::str() const {
  if (d_ == 1) return rational_str(p_);
  std::string out;
  Rational qa = q_ < 0 ? Rational(-q_) : q_;
  if (p_ != 0) {
    out = rational_str(p_);
    out += (q_ > 0) ? " + " : " - ";
  } else if (q_ < 0) {
    out = "-";
  }
  if (qa != 1) {
    out += rational_str(qa);
    out += "*";
  }
  out += "sqrt(" + std::to_string(d_) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuadNum& x) { return os << x.str(); }

namespace {

// Recursive-descent parser for the expression grammar in the header.
class ExprParser {
public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  QuadNum run() {
    QuadNum v = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("trailing characters at position " + std::to_string(pos_) + " in '" +
                       std::string(text_) + "'");
    return v;
  }

private:
  std::string_view text_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  QuadNum expr() {
    QuadNum v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  QuadNum term() {
    QuadNum v = unary();
    for (;;) {
      if (eat('*'))
        v = v * unary();
      else if (eat('/'))
        v = v / unary();
      else
        return v;
    }
  }

  QuadNum unary() {
    if (eat('-')) return -unary();
    return primary();
  }

  QuadNum primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return QuadNum(Rational(integer()));
    if (c == '(') {
      ++pos_;
      QuadNum v = expr();
      if (!eat(')')) throw ParseError("expected ')' at position " + std::to_string(pos_));
      return v;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!eat('(')) throw ParseError("expected '(' after sqrt");
      Int d = integer();
      if (!eat(')')) throw ParseError("expected ')' after sqrt radicand");
      if (!d.fits_slong_p()) throw ParseError("radicand too large: " + d.get_str());
      return QuadNum::sqrt(d.get_si());
    }
    throw ParseError(std::string("unexpected character '") + c + "' at position " +
                     std::to_string(pos_));
  }

  Int integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer at position " + std::to_string(start));
    return Int(std::string(text_.substr(start, pos_ - start)), 10);
  }
};

}  // namespace

QuadNum QuadNum::parse(std::string_view text) { return ExprParser(text).run(); }

Int height_psi(const QuadNum& z) {
  if (!z.is_integral())
    throw NonIntegralCoefficients("height is defined on Z[sqrt(d)] elements, got " + z.str());
  Int m = ::abs(z.rational_part().get_num());
  Int n = ::abs(z.radical_part().get_num());
  return m > n ? m : n;
}

std::pair<std::vector<QuadNum>, Int> clear_denominators(std::span<const QuadNum> values) {
  long d = 1;
  for (const QuadNum& v : values) {
    if (v.radicand() == 1) continue;
    if (d == 1)
      d = v.radicand();
    else if (d != v.radicand())
      throw RadicandMismatch("entries live in different quadratic fields");
  }
  Int scale = 1;
  for (const QuadNum& v : values) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.rational_part().get_den().get_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.radical_part().get_den().get_mpz_t());
  }
  QuadNum factor{Rational(scale)};
  std::vector<QuadNum> scaled;
  scaled.reserve(values.size());
  for (const QuadNum& v : values) scaled.push_back(v * factor);
  return {std::move(scaled), scale};
}

Int floor_quad(const QuadNum& z) {
  if (z.is_rational()) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), z.rational_part().get_num().get_mpz_t(),
               z.rational_part().get_den().get_mpz_t());
    return q;
  }
  // |z| <= ceil|p| + ceil|q| * d gives exact search bounds.
  Rational ap = ::abs(z.rational_part());
  Rational aq = ::abs(z.radical_part());
  Int bp, bq;
  mpz_cdiv_q(bp.get_mpz_t(), ap.get_num().get_mpz_t(), ap.get_den().get_mpz_t());
  mpz_cdiv_q(bq.get_mpz_t(), aq.get_num().get_mpz_t(), aq.get_den().get_mpz_t());
  Int bound = bp + bq * z.radicand() + 1;
  Int lo = -bound, hi = bound;  // invariant: lo <= floor(z) < hi
  while (hi - lo > 1) {
    Int mid = (lo + hi) >> 1;
    if ((z - QuadNum(Rational(mid))).sign() >= 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace iex
