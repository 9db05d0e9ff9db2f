#pragma once

// Coefficient rings: Laurent polynomials in u = q^{1/4}, lattice group
// algebras over them, and normalised rational functions.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpoly.hpp"
#include "rational.hpp"

namespace mhecke {

class RankMismatch : public std::invalid_argument {
 public:
  RankMismatch() : std::invalid_argument("rank mismatch") {}
};

// Laurent polynomial in u with q = u^4.
class QLaurent {
 public:
  using Terms = std::map<int, Rational>;

  QLaurent() = default;
  QLaurent(const Rational& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)
  QLaurent(long c) : QLaurent(Rational(c)) {}      // NOLINT(google-explicit-constructor)

  static QLaurent u_pow(int k, const Rational& c = 1) {
    QLaurent r;
    r.add_term(k, c);
    return r;
  }
  // q^e; requires e in (1/4)Z.
  static QLaurent q_pow(const Rational& e, const Rational& c = 1) {
    if (!in_quarter_z(e)) throw std::domain_error("q-exponent " + e.get_str() + " is not in (1/4)Z");
    return u_pow(static_cast<int>(to_long(e * 4)), c);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(int k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  QLaurent operator-() const {
    QLaurent r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  QLaurent& operator+=(const QLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  QLaurent& operator-=(const QLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

  // Readable form in q, e.g. "q^(3/2) - 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [k, c] = *it;
      Rational a = abs(c);
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      if (k == 0) {
        os << a.get_str();
        continue;
      }
      if (a != 1) os << a.get_str() << "*";
      Rational e(k, 4);
      e.canonicalize();
      os << "q";
      if (e != 1) os << "^" << (is_integer(e) ? e.get_str() : "(" + e.get_str() + ")");
    }
    return os.str();
  }

 private:
  Terms terms_;
};

inline QLaurent qlp_add(const QLaurent& a, const QLaurent& b) { return a + b; }
inline QLaurent qlp_sub(const QLaurent& a, const QLaurent& b) { return a - b; }
inline QLaurent qlp_mul(const QLaurent& a, const QLaurent& b) { return a * b; }

// Element of Q[u^{+-1}][Lambda] with Lambda = Z^rank.  Stored as a polynomial in
// rank + 1 variables, the last being u.
class GroupAlgebraElement {
 public:
  using Lattice = std::vector<int>;

  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(int rank) : rank_(rank), poly_(rank + 1) {
    if (rank < 0) throw std::invalid_argument("negative rank");
  }
  GroupAlgebraElement(int rank, MPoly p) : rank_(rank), poly_(std::move(p)) {
    if (poly_.nvars() != rank + 1 && !poly_.is_zero()) throw std::invalid_argument("bad polynomial arity");
    if (poly_.is_zero()) poly_ = MPoly(rank + 1);
  }

  static GroupAlgebraElement Z(const Lattice& lambda, const QLaurent& c = QLaurent(1)) {
    GroupAlgebraElement g(static_cast<int>(lambda.size()));
    g.add_term(lambda, c);
    return g;
  }
  static GroupAlgebraElement scalar(int rank, const QLaurent& c) { return Z(Lattice(rank, 0), c); }

  int rank() const { return rank_; }
  const MPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  void add_term(const Lattice& lambda, const QLaurent& c) {
    if (static_cast<int>(lambda.size()) != rank_) throw RankMismatch();
    Exponent e(lambda);
    e.push_back(0);
    for (const auto& [k, v] : c.terms()) {
      e.back() = k;
      poly_.add_term(e, v);
    }
  }

  // Lattice vector -> coefficient, in lattice lexicographic order.
  std::map<Lattice, QLaurent> terms() const {
    std::map<Lattice, QLaurent> out;
    for (const auto& [e, c] : poly_.terms()) {
      Lattice l(e.begin(), e.end() - 1);
      out[l].add_term(e.back(), c);
    }
    return out;
  }
  QLaurent coefficient(const Lattice& lambda) const {
    QLaurent r;
    for (const auto& [e, c] : poly_.terms())
      if (std::equal(lambda.begin(), lambda.end(), e.begin())) r.add_term(e.back(), c);
    return r;
  }

  // Applies a lattice map (assumed bijective) to every exponent.
  template <class F>
  GroupAlgebraElement map_lattice(F&& f) const {
    GroupAlgebraElement r(rank_);
    for (const auto& [e, c] : poly_.terms()) {
      Lattice l(e.begin(), e.end() - 1);
      Exponent ne = f(l);
      ne.push_back(e.back());
      r.poly_.add_term(ne, c);
    }
    return r;
  }

  GroupAlgebraElement operator-() const { return {rank_, -poly_}; }
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    check(o);
    poly_ += o.poly_;
    return *this;
  }
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
    check(o);
    poly_ -= o.poly_;
    return *this;
  }
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check(b);
    return {a.rank_, a.poly_ * b.poly_};
  }
  friend GroupAlgebraElement operator*(const QLaurent& c, const GroupAlgebraElement& g) {
    return GroupAlgebraElement::scalar(g.rank_, c) * g;
  }
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.rank_ == b.rank_ && a.poly_ == b.poly_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms()) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.to_string() << ")*Z[";
      for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
      os << "]";
    }
    return os.str();
  }

 private:
  void check(const GroupAlgebraElement& o) const {
    if (o.rank_ != rank_) throw RankMismatch();
  }

  int rank_ = 0;
  MPoly poly_{1};
};

inline GroupAlgebraElement ga_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y) { return x * y; }

// Returns g with den * g = num; throws NotDivisible otherwise.
inline GroupAlgebraElement exact_div(const GroupAlgebraElement& num, const GroupAlgebraElement& den) {
  if (num.rank() != den.rank()) throw RankMismatch();
  if (den.is_zero()) throw std::domain_error("division by zero");
  auto q = divide_exact(num.poly(), den.poly());
  if (!q) throw NotDivisible("group algebra element is not divisible");
  return {num.rank(), *q};
}

// Quotient of two Laurent polynomials in a fixed set of variables, kept in a
// canonical form: gcd-free, denominator free of monomial factors and monic in
// its grlex leading term.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(const MPoly& num) : num_(num), den_(MPoly::constant(num.nvars(), 1)), canonical_(true) {}
  RationalFunction(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
  }

  // Stores num/den without normalising.
  static RationalFunction raw(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    RationalFunction r;
    r.num_ = num;
    r.den_ = den;
    r.canonical_ = false;
    return r;
  }

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }
  bool canonical() const { return canonical_; }
  bool is_zero() const { return num_.is_zero(); }
  int nvars() const { return den_.nvars(); }

  RationalFunction normalized() const { return RationalFunction(num_, den_); }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.canonical_ && b.canonical_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  RationalFunction invert_variable(int var) const {
    return {num_.invert_variable(var), den_.invert_variable(var)};
  }
  RationalFunction substitute(int var, const Rational& value) const {
    MPoly d = den_.substitute(var, value);
    if (d.is_zero()) throw std::domain_error("pole at substituted value");
    return {num_.substitute(var, value), d};
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    std::string n = num_.to_string(names);
    if (den_.is_constant() && den_.constant_term() == 1) return n;
    return "(" + n + ")/(" + den_.to_string(names) + ")";
  }

 private:
  void normalize() {
    int n = den_.nvars();
    if (num_.is_zero()) {
      num_ = MPoly(n);
      den_ = MPoly::constant(n, 1);
      canonical_ = true;
      return;
    }
    Exponent md = den_.min_exponents();
    for (int& x : md) x = -x;
    MPoly d0 = den_.shifted(md);
    MPoly n1 = num_.shifted(md);
    Exponent s = n1.min_exponents();
    for (int& x : s) x = std::min(x, 0);
    Exponent neg_s = s;
    for (int& x : neg_s) x = -x;
    MPoly n2 = n1.shifted(neg_s);
    MPoly g = gcd(n2, d0);
    if (!g.is_constant()) {
      n2 = exact_quotient(n2, g);
      d0 = exact_quotient(d0, g);
    }
    Rational lc = d0.leading().second;
    num_ = n2.shifted(s) * Rational(1 / lc);
    den_ = d0 * Rational(1 / lc);
    canonical_ = true;
  }

  MPoly num_{0};
  MPoly den_ = MPoly::constant(0, 1);
  bool canonical_ = true;
};

inline RationalFunction rf_normalize(const MPoly& num, const MPoly& den) { return {num, den}; }

inline RationalFunction rf_normalize(const GroupAlgebraElement& num, const GroupAlgebraElement& den) {
  if (num.rank() != den.rank()) throw RankMismatch();
  return {num.poly(), den.poly()};
}

}  // namespace mhecke
