#pragma once

// Rank-one intertwining algebra: the mu-function of a reflection, the algebra
// spanned by 1 and J over rational functions in X, and the element T_s.
// Rational functions live in Q(X, u) with q = u^4; X is variable 0, u is 1.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace mhecke {

class InvalidExponents : public std::invalid_argument {
 public:
  explicit InvalidExponents(const std::string& w) : std::invalid_argument(w) {}
};

class InconsistentSigns : public std::invalid_argument {
 public:
  explicit InconsistentSigns(const std::string& w) : std::invalid_argument(w) {}
};

namespace rankone {

inline constexpr int kX = 0;
inline constexpr int kU = 1;

inline MPoly poly_const(const Rational& c) { return MPoly::constant(2, c); }
inline MPoly poly_X(int power = 1) { return MPoly::variable(2, kX, power); }

// c * q^e; e must lie in (1/4)Z.
inline MPoly poly_q(const Rational& e, const Rational& c = 1) {
  if (!in_quarter_z(e)) throw InvalidExponents("q-exponent " + e.get_str() + " is not in (1/4)Z");
  return MPoly::monomial({0, static_cast<int>(to_long(e * 4))}, c);
}

inline RationalFunction rf(const MPoly& p) { return RationalFunction(p); }
inline RationalFunction rf_const(const Rational& c) { return rf(poly_const(c)); }

}  // namespace rankone

struct MuFunction {
  Rational a;
  Rational b;
  Rational c_prime;
  RationalFunction value;

  bool symmetric() const { return value.invert_variable(rankone::kX) == value; }
};

inline void check_exponents(const Rational& a, const Rational& b) {
  if (b < 0) throw InvalidExponents("a_{s,-} must be nonnegative");
  if (a < b) throw InvalidExponents("a_s must be at least a_{s,-}");
  if (!in_quarter_z(a) || !in_quarter_z(b)) throw InvalidExponents("exponents must lie in (1/4)Z");
}

inline MuFunction mu_build(const Rational& a, const Rational& b, const Rational& c_prime = 1) {
  using namespace rankone;
  check_exponents(a, b);
  if (c_prime <= 0) throw InvalidExponents("c' must be positive");
  MPoly one = poly_const(1), x = poly_X(), xi = poly_X(-1);
  MPoly num = poly_const(c_prime) * (one - x) * (one - xi) * (one + x) * (one + xi);
  MPoly den = (one - x * poly_q(-a)) * (one - xi * poly_q(-a)) * (one + x * poly_q(-b)) * (one + xi * poly_q(-b));
  return {a, b, c_prime, RationalFunction(num, den)};
}

// A point X = sign * q^{q_exp} with its multiplicity.
struct MuPoint {
  int sign;
  Rational q_exp;
  int mult;

  friend bool operator==(const MuPoint&, const MuPoint&) = default;
};

struct MuZerosPoles {
  std::vector<MuPoint> zeros;
  std::vector<MuPoint> poles;
};

namespace detail {

// Multiplicities of the candidate points +-q^e, e in candidates, as roots of p.
inline std::vector<MuPoint> extract_points(MPoly p, const std::set<Rational>& candidates) {
  using namespace rankone;
  std::vector<MuPoint> out;
  for (const auto& e : candidates)
    for (int sign : {1, -1}) {
      int m = static_cast<int>(to_long(e * 4));
      MPoly factor = m >= 0 ? poly_X() - MPoly::monomial({0, m}, sign) : MPoly::monomial({1, -m}) - poly_const(sign);
      int mult = 0;
      while (auto q = divide_exact(p, factor)) {
        p = *q;
        ++mult;
      }
      if (mult > 0) out.push_back({sign, e, mult});
    }
  for (const auto& [exp, c] : p.terms())
    if (exp[kX] != p.terms().begin()->first[kX]) throw std::logic_error("mu has a factor outside the candidate points");
  return out;
}

}  // namespace detail

inline MuZerosPoles mu_zeros_poles(const MuFunction& m) {
  std::set<Rational> candidates{Rational(0), m.a, Rational(-m.a), m.b, Rational(-m.b)};
  return {detail::extract_points(m.value.numerator(), candidates),
          detail::extract_points(m.value.denominator(), candidates)};
}

// f + g J with J h(X) = h(X^{-1}) J.
struct RankOneElement {
  RationalFunction f;
  RationalFunction g;

  friend bool operator==(const RankOneElement&, const RankOneElement&) = default;
  friend RankOneElement operator+(const RankOneElement& x, const RankOneElement& y) { return {x.f + y.f, x.g + y.g}; }
  friend RankOneElement operator-(const RankOneElement& x, const RankOneElement& y) { return {x.f - y.f, x.g - y.g}; }
  bool is_zero() const { return f.is_zero() && g.is_zero(); }
};

// The algebra with J^2 = c_s / mu_0, where mu_0 is mu with c' = 1 and
// c_s = c_half^2.
class RankOneAlgebra {
 public:
  RankOneAlgebra(const Rational& a, const Rational& b, const Rational& c_half = 1)
      : mu0_(mu_build(a, b)), c_half_(c_half) {
    if (c_half <= 0) throw InvalidExponents("c_s^{1/2} must be positive");
    j_square_ = rankone::rf_const(c_half * c_half) / mu0_.value;
  }

  const MuFunction& mu0() const { return mu0_; }
  const Rational& c_half() const { return c_half_; }
  Rational c_s() const { return c_half_ * c_half_; }
  const RationalFunction& j_square() const { return j_square_; }

  RankOneElement scalar(const RationalFunction& f) const { return {f, zero()}; }
  RankOneElement J() const { return {zero(), rankone::rf_const(1)}; }

  RankOneElement mul(const RankOneElement& x, const RankOneElement& y) const {
    RationalFunction f2s = y.f.invert_variable(rankone::kX);
    RationalFunction g2s = y.g.invert_variable(rankone::kX);
    return {x.f * y.f + x.g * g2s * j_square_, x.f * y.g + x.g * f2s};
  }

 private:
  static RationalFunction zero() { return RationalFunction(MPoly(2)); }

  MuFunction mu0_;
  Rational c_half_;
  RationalFunction j_square_{MPoly(2)};
};

inline void check_signs(int eps1, int epsm1) {
  if (eps1 != 1 && eps1 != -1) throw InconsistentSigns("eps1 must be +1 or -1");
  if (epsm1 != 1 && epsm1 != -1) throw InconsistentSigns("eps-1 must be +1 or -1");
}

// T_s = g J + f with g = -eps1 q^{a+b} c_s^{-1/2} (times X when eps1 b = eps-1 b)
// and f = X((Q - 1)X - (q^b - q^a)) / (X^2 - 1), Q = q^{a+b}.
inline RankOneElement build_Ts(const RankOneAlgebra& alg, int eps1, int epsm1) {
  using namespace rankone;
  check_signs(eps1, epsm1);
  const Rational& a = alg.mu0().a;
  const Rational& b = alg.mu0().b;
  if (a + b == 0) throw InvalidExponents("T_s needs a + b > 0");
  MPoly Q = poly_q(a + b);
  MPoly g = poly_q(a + b, Rational(-eps1) / alg.c_half());
  if (eps1 * b == epsm1 * b) g = g * poly_X();
  MPoly one = poly_const(1), x = poly_X();
  MPoly num = x * ((Q - one) * x - (poly_q(b) - poly_q(a)));
  MPoly den = x * x - one;
  return {RationalFunction(num, den), rf(g)};
}

// ((X - 1) J)^2 at X = 1 and ((X + 1) J)^2 at X = -1 against their closed forms.
inline void check_specializations(const RankOneAlgebra& alg) {
  using namespace rankone;
  const Rational& a = alg.mu0().a;
  const Rational& b = alg.mu0().b;
  MPoly one = poly_const(1);
  for (int s : {1, -1}) {
    RankOneElement xj{RationalFunction(MPoly(2)), rf(poly_X() - poly_const(s))};
    RankOneElement sq = alg.mul(xj, xj);
    if (!sq.g.is_zero()) throw InconsistentSigns("square of (X -+ 1) J is not scalar");
    RationalFunction got = sq.f.substitute(kX, s);
    MPoly t1 = s == 1 ? one - poly_q(-a) : one + poly_q(-a);
    MPoly t2 = s == 1 ? one + poly_q(-b) : one - poly_q(-b);
    RationalFunction want = rf(poly_const(alg.c_s() / 4) * t1 * t1 * t2 * t2);
    if (!(got == want))
      throw InconsistentSigns(std::string("specialization at X = ") + (s == 1 ? "1" : "-1") + " does not match");
  }
}

inline bool verify_quadratic(const Rational& a, const Rational& b, int eps1, int epsm1, const Rational& c_half = 1) {
  RankOneAlgebra alg(a, b, c_half);
  check_signs(eps1, epsm1);
  check_specializations(alg);
  RankOneElement t = build_Ts(alg, eps1, epsm1);
  RationalFunction Q = rankone::rf(rankone::poly_q(a + b));
  RankOneElement lhs = alg.mul(t + alg.scalar(rankone::rf_const(1)), t - alg.scalar(Q));
  return lhs.is_zero();
}

inline bool j_square_check(const Rational& a, const Rational& b, const Rational& c_half = 1) {
  RankOneAlgebra alg(a, b, c_half);
  RankOneElement want = alg.scalar(alg.j_square());
  RankOneElement j = alg.J();
  RankOneElement x = alg.scalar(rankone::rf(rankone::poly_X()));
  RankOneElement jx = alg.mul(j, x), xj = alg.mul(x, j);
  return alg.mul(j, j) == want && alg.mul(jx, jx) == want && alg.mul(xj, xj) == want;
}

}  // namespace mhecke
