#pragma once

// Sparse multivariate Laurent polynomials over Q, exact division and GCD.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace mhecke {

using Exponent = std::vector<int>;

inline long total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0L); }

// Graded lexicographic order; the largest key of a map is the leading term.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class NotDivisible : public std::runtime_error {
 public:
  NotDivisible() : std::runtime_error("not divisible") {}
  explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

class MPoly {
 public:
  using Terms = std::map<Exponent, Rational, GrlexLess>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static MPoly monomial(const Exponent& e, const Rational& c = 1) {
    MPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }
  static MPoly variable(int nvars, int var, int power = 1) {
    Exponent e(nvars, 0);
    e[var] = power;
    return monomial(e);
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                                                terms_.begin()->first.end(),
                                                                [](int x) { return x == 0; }));
  }
  bool is_monomial() const { return terms_.size() == 1; }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(Exponent(nvars_, 0)); }

  void add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // this += c * x^shift * other
  void add_scaled(const MPoly& other, const Rational& c, const Exponent& shift) {
    check_compatible(other);
    if (c == 0) return;
    Exponent e(nvars_);
    for (const auto& [oe, oc] : other.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = oe[i] + shift[i];
      add_term(e, oc * c);
    }
  }

  const std::pair<const Exponent, Rational>& leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  Exponent min_exponents() const {
    Exponent m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (int i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }
  Exponent max_exponents() const {
    Exponent m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (int i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
      first = false;
    }
    return m;
  }
  int degree_in(int var) const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      d = first ? e[var] : std::max(d, e[var]);
      first = false;
    }
    return d;
  }
  bool is_polynomial() const {
    for (const auto& [e, c] : terms_)
      for (int x : e)
        if (x < 0) return false;
    return true;
  }

  MPoly shifted(const Exponent& s) const {
    MPoly r(nvars_);
    Exponent e(nvars_);
    for (const auto& [oe, oc] : terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = oe[i] + s[i];
      r.terms_.emplace(e, oc);
    }
    return r;
  }

  // Applies a map on exponent vectors; the map must be injective.
  MPoly map_exponents(const std::function<Exponent(const Exponent&)>& f) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(f(e), c);
    return r;
  }

  // x_var -> x_var^{-1}
  MPoly invert_variable(int var) const {
    return map_exponents([var](const Exponent& e) {
      Exponent r = e;
      r[var] = -r[var];
      return r;
    });
  }

  // Substitutes a nonzero rational (or zero, if only nonnegative powers occur) for x_var.
  MPoly substitute(int var, const Rational& value) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      int k = f[var];
      f[var] = 0;
      if (value == 0 && k < 0) throw std::domain_error("substituting 0 into a negative power");
      Rational p = 1;
      Rational base = k >= 0 ? value : Rational(1 / value);
      for (int j = 0; j < std::abs(k); ++j) p *= base;
      r.add_term(f, c * p);
    }
    return r;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MPoly& operator+=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_compatible(b);
    MPoly r(a.nvars_);
    const MPoly& small = a.size() <= b.size() ? a : b;
    const MPoly& large = a.size() <= b.size() ? b : a;
    for (const auto& [e, c] : small.terms_) r.add_scaled(large, c, e);
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool unit = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
      Rational a = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (unit || a != 1) os << a.get_str();
      bool wrote = unit || a != 1;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (wrote) os << "*";
        os << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
        if (e[i] != 1) os << "^" << e[i];
        wrote = true;
      }
    }
    return os.str();
  }

 private:
  void check_compatible(const MPoly& o) const {
    if (o.nvars_ != nvars_ && !o.is_zero() && !is_zero())
      throw std::invalid_argument("polynomials in different numbers of variables");
  }

  int nvars_ = 0;
  Terms terms_;
};

namespace detail {

inline bool divides_monomial(const Exponent& d, const Exponent& e) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

// Long division of polynomials (nonnegative exponents) under grlex.
// Returns (quotient, remainder) with num = q*den + r.
inline std::pair<MPoly, MPoly> long_divide(const MPoly& num, const MPoly& den) {
  int n = num.nvars() ? num.nvars() : den.nvars();
  MPoly q(n), r(n), p = num;
  const auto& [lde, ldc] = den.leading();
  Exponent m(n);
  while (!p.is_zero()) {
    auto [pe, pc] = p.leading();
    if (divides_monomial(lde, pe)) {
      for (int i = 0; i < n; ++i) m[i] = pe[i] - lde[i];
      Rational c = pc / ldc;
      q.add_term(m, c);
      p.add_scaled(den, -c, m);
    } else {
      r.add_term(pe, pc);
      p.add_term(pe, -pc);
    }
  }
  return {q, r};
}

inline Exponent negated(const Exponent& e) {
  Exponent r(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) r[i] = -e[i];
  return r;
}

}  // namespace detail

// Exact quotient in the Laurent ring, or nullopt when den does not divide num.
inline std::optional<MPoly> divide_exact(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  int n = den.nvars();
  if (num.is_zero()) return MPoly(n);
  Exponent md = den.min_exponents();
  MPoly d0 = den.shifted(detail::negated(md));
  MPoly n1 = num.shifted(detail::negated(md));
  Exponent s = n1.min_exponents();
  for (int& x : s) x = std::min(x, 0);
  MPoly n2 = n1.shifted(detail::negated(s));
  auto [q, r] = detail::long_divide(n2, d0);
  if (!r.is_zero()) return std::nullopt;
  return q.shifted(s);
}

inline MPoly exact_quotient(const MPoly& num, const MPoly& den) {
  auto q = divide_exact(num, den);
  if (!q) throw NotDivisible("no exact quotient of " + num.to_string() + " by " + den.to_string());
  return *q;
}

inline MPoly make_monic(const MPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading().second);
}

namespace detail {

using Univariate = std::map<int, MPoly>;

inline Univariate split(const MPoly& p, int var) {
  Univariate u;
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    int k = f[var];
    f[var] = 0;
    auto it = u.try_emplace(k, MPoly(p.nvars())).first;
    it->second.add_term(f, c);
  }
  return u;
}

inline int main_variable(const MPoly& a, const MPoly& b) {
  for (int v = std::max(a.nvars(), b.nvars()) - 1; v >= 0; --v) {
    if ((!a.is_zero() && a.degree_in(v) > 0) || (!b.is_zero() && b.degree_in(v) > 0)) return v;
  }
  return -1;
}

inline MPoly gcd_rec(const MPoly& a, const MPoly& b);

inline MPoly content(const MPoly& p, int var) {
  MPoly g(p.nvars());
  for (const auto& [k, c] : split(p, var)) {
    g = gcd_rec(g, c);
    if (g.is_constant()) return MPoly::constant(p.nvars(), 1);
  }
  return g;
}

// Pseudo-remainder of a by b with respect to var.
inline MPoly prem(const MPoly& a, const MPoly& b, int var) {
  int n = a.nvars();
  int db = b.degree_in(var);
  Univariate ub = split(b, var);
  const MPoly& lcb = ub.rbegin()->second;
  MPoly r = a;
  Exponent shift(n, 0);
  while (!r.is_zero()) {
    int dr = r.degree_in(var);
    if (dr < db) break;
    Univariate ur = split(r, var);
    const MPoly& lcr = ur.rbegin()->second;
    shift.assign(n, 0);
    shift[var] = dr - db;
    MPoly next = lcb * r;
    next -= (lcr * b).shifted(shift);
    r = std::move(next);
  }
  return r;
}

inline MPoly gcd_rec(const MPoly& a, const MPoly& b) {
  int n = std::max(a.nvars(), b.nvars());
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  int v = main_variable(a, b);
  if (v < 0) return MPoly::constant(n, 1);
  MPoly ca = content(a, v), cb = content(b, v);
  MPoly c = gcd_rec(ca, cb);
  MPoly pa = exact_quotient(a, ca), pb = exact_quotient(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  MPoly g(n);
  while (true) {
    if (pb.degree_in(v) == 0) {
      g = MPoly::constant(n, 1);
      break;
    }
    MPoly r = prem(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    pa = std::move(pb);
    pb = make_monic(exact_quotient(r, content(r, v)));
  }
  return make_monic(c * g);
}

}  // namespace detail

// GCD of polynomials with nonnegative exponents; monic under grlex; gcd(0,0) = 0.
inline MPoly gcd(const MPoly& a, const MPoly& b) {
  if (!a.is_polynomial() || !b.is_polynomial())
    throw std::invalid_argument("gcd expects polynomials without negative exponents");
  if (a.is_zero() && b.is_zero()) return a;
  return detail::gcd_rec(a, b);
}

}  // namespace mhecke
