#include "afkit/scalar.hpp"

#include "afkit/errors.hpp"

#include <cctype>
#include <ostream>

namespace afkit {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

} // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || den.empty() || den.front() == '-' || den.front() == '+' ||
      !is_integer_literal(den)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& value) { return value.get_str(10); }

Rat rat_pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return result;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw DomainError("division by zero Gaussian rational");
  const Rat d = o.norm2();
  Rat r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
  os << format_rat(z.re);
  if (!z.is_real()) os << (sgn(z.im) > 0 ? "+" : "") << format_rat(z.im) << "i";
  return os;
}

} // namespace afkit
