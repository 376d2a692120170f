#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lineact {

// All coordinates, slopes and measures in this library are exact rationals.
// mpq_class keeps values canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p/q" etc. Input need not be in lowest terms.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Largest integer <= q.
inline Integer rational_floor(const Rational& q) {
  return floor_div(Integer(q.get_num()), Integer(q.get_den()));
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_power_of_two(const Integer& n) {
  if (n <= 0) return false;
  return mpz_popcount(n.get_mpz_t()) == 1;
}

// True for q = k / 2^h.
inline bool is_dyadic(const Rational& q) {
  Integer den = q.get_den();
  return den == 1 || is_power_of_two(den);
}

// True for q = 2^k, k in Z.
inline bool is_power_of_two(const Rational& q) {
  Integer num = q.get_num(), den = q.get_den();
  return (num == 1 && is_power_of_two(den)) || (den == 1 && is_power_of_two(num));
}

inline Rational pow2(long k) {
  Rational q(1);
  if (k >= 0) {
    Integer n(1);
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    q = Rational(n);
  } else {
    Integer n(1);
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(-k));
    q = Rational(1) / Rational(n);
  }
  return q;
}

/// Dyadic rational m / 2^h, normalized so that m is odd or h = 0.
/// The height h is the minimal n with 2^n x integral, as used by the
/// realization table and its left/right-neighbor checks.
class Dyadic {
 public:
  Dyadic() : mantissa_(0), height_(0) {}
  Dyadic(Integer mantissa, unsigned long height) : mantissa_(std::move(mantissa)), height_(height) {
    normalize();
  }
  explicit Dyadic(long value) : mantissa_(value), height_(0) {}

  static Dyadic from_rational(const Rational& q) {
    if (!is_dyadic(q)) throw std::invalid_argument("not a dyadic rational: " + to_string(q));
    Integer den = q.get_den();
    unsigned long h = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
    return Dyadic(Integer(q.get_num()), h);
  }

  Rational to_rational() const {
    Integer den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), height_);
    Rational q(mantissa_, den);
    q.canonicalize();
    return q;
  }

  const Integer& mantissa() const { return mantissa_; }
  unsigned long height() const { return height_; }

  Dyadic midpoint(const Dyadic& other) const {
    return from_rational((to_rational() + other.to_rational()) / 2);
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.height_ == b.height_ && a.mantissa_ == b.mantissa_;
  }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    return a.to_rational() < b.to_rational();
  }

  std::string str() const { return to_string(to_rational()); }

 private:
  void normalize() {
    while (height_ > 0 && mpz_even_p(mantissa_.get_mpz_t())) {
      mantissa_ >>= 1;
      --height_;
    }
  }

  Integer mantissa_;
  unsigned long height_;
};

// Grid neighbors on (1/2^k) Z: largest grid point <= x, smallest >= x.
inline Rational left_neighbor(const Rational& x, unsigned long k) {
  Integer num = x.get_num(), den = x.get_den();
  Integer scaled_num = num;
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), k);
  Integer fl = floor_div(scaled_num, den);
  Rational q(fl);
  return q / pow2(static_cast<long>(k));
}

inline Rational right_neighbor(const Rational& x, unsigned long k) {
  Rational l = left_neighbor(x, k);
  if (l == x) return x;
  return l + pow2(-static_cast<long>(k));
}

}  // namespace lineact
