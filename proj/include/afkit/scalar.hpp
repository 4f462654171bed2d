#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace afkit {

/// Exact rational. GMP keeps every arithmetic result in lowest terms with a
/// positive denominator.
using Rat = mpq_class;

/// Parses "p/q" or "p". Non-reduced input is canonicalized; a zero or
/// negative denominator is rejected with ParseError.
Rat parse_rat(std::string_view text);

/// Canonical wire form: "p/q" with q > 0 and gcd(|p|, q) = 1, or "p" when q = 1.
std::string format_rat(const Rat& value);

Rat rat_pow(const Rat& base, unsigned exponent);

/// Complex number with rational real and imaginary parts.
struct GaussRat {
  Rat re{0};
  Rat im{0};

  GaussRat() = default;
  GaussRat(Rat real) : re(std::move(real)) {} // NOLINT(google-explicit-constructor)
  GaussRat(Rat real, Rat imag) : re(std::move(real)), im(std::move(imag)) {}
  GaussRat(long real) : re(real) {} // NOLINT(google-explicit-constructor)
  GaussRat(int real) : re(real) {}  // NOLINT(google-explicit-constructor)

  [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  [[nodiscard]] bool is_real() const { return sgn(im) == 0; }
  [[nodiscard]] GaussRat conj() const { return {re, -im}; }
  /// |z|^2 = re^2 + im^2.
  [[nodiscard]] Rat norm2() const { return re * re + im * im; }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussRat& operator*=(const Rat& s) {
    re *= s;
    im *= s;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator*(GaussRat a, const Rat& s) { return a *= s; }
  friend GaussRat operator*(const Rat& s, GaussRat a) { return a *= s; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

/// Field helpers used by the generic matrix routines.
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const GaussRat& z) { return z.is_zero(); }

} // namespace afkit
