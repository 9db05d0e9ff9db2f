#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mhecke {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// True when r lies in (1/4)Z, i.e. q^r is a monomial in u = q^{1/4}.
inline bool in_quarter_z(const Rational& r) { return is_integer(r * 4); }

inline long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw std::domain_error("rational " + r.get_str() + " is not a machine integer");
  return r.get_num().get_si();
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace detail

// Parses "p", "-p", "p/q" or "-p/q" with decimal digits only.
inline Rational parse_rational(std::string_view s) {
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den))
    throw std::invalid_argument("not an exact rational: '" + std::string(s) + "'");
  Integer n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  Rational r(n, d);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

// Parses a terminating decimal such as "0.5" or "3" exactly.
inline Rational parse_decimal(std::string_view s) {
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return parse_rational(s);
  std::string whole(s.substr(0, dot));
  std::string frac(s.substr(dot + 1));
  if (!detail::all_digits(frac)) throw std::invalid_argument("bad decimal: '" + std::string(s) + "'");
  bool neg = !whole.empty() && whole[0] == '-';
  if (neg || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
  if (whole.empty()) whole = "0";
  if (!detail::all_digits(whole)) throw std::invalid_argument("bad decimal: '" + std::string(s) + "'");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  Rational r(Integer(whole + frac, 10), scale);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

}  // namespace mhecke
