#pragma once

// Affine Hecke algebras with unequal parameters in Bernstein-Lusztig normal
// form: elements are sums Z_lambda * c * U_w with the lattice part on the left.

#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "rootdata.hpp"

namespace mhecke {

class InvalidParams : public std::invalid_argument {
 public:
  explicit InvalidParams(const std::string& w) : std::invalid_argument(w) {}
};

class DatumMismatch : public std::invalid_argument {
 public:
  DatumMismatch() : std::invalid_argument("elements of different Hecke algebras") {}
};

// q_alpha = q^{alpha_exponents[i]} per simple root; q_i = q^{special[i]} for
// simple roots whose coroot lies in 2 Lambda^vee.
struct HeckeParams {
  std::vector<Rational> alpha_exponents;
  std::map<int, Rational> special;

  friend bool operator==(const HeckeParams&, const HeckeParams&) = default;
};

inline bool same_datum(const BasedRootDatum& a, const BasedRootDatum& b) {
  if (a.rank() != b.rank() || a.base() != b.base() || a.roots().size() != b.roots().size()) return false;
  for (std::size_t i = 0; i < a.roots().size(); ++i)
    if (a.roots()[i].root != b.roots()[i].root || a.roots()[i].coroot != b.roots()[i].coroot) return false;
  return true;
}

inline GroupAlgebraElement act_on(const WeylElement& w, const GroupAlgebraElement& f) {
  return f.map_lattice([&](const Lattice& l) { return act(w, l); });
}

class HeckeAlgebra {
 public:
  HeckeAlgebra(BasedRootDatum d, HeckeParams p) : datum_(std::move(d)), params_(std::move(p)) { validate_and_prepare(); }

  static std::shared_ptr<const HeckeAlgebra> create(BasedRootDatum d, HeckeParams p) {
    return std::make_shared<const HeckeAlgebra>(std::move(d), std::move(p));
  }

  const BasedRootDatum& datum() const { return datum_; }
  const HeckeParams& params() const { return params_; }
  int rank() const { return datum_.rank(); }

  bool two_lambda(int i) const { return two_lambda_.at(i); }
  const QLaurent& q_alpha(int i) const { return q_alpha_.at(i); }
  // Simple roots whose q_i has exponent 0.
  std::vector<int> trivial_qi() const {
    std::vector<int> r;
    for (const auto& [i, b] : params_.special)
      if (params_.alpha_exponents[i] - b == 0) r.push_back(i);
    return r;
  }

  // C_i(f) = factor_i * (f - s_i f) / den_i, the right side of Z_l U_s - U_s Z_{s l}
  // extended linearly.
  GroupAlgebraElement correction(int i, const GroupAlgebraElement& f) const {
    GroupAlgebraElement num = f - act_on(datum_.simple_reflection(i), f);
    if (num.is_zero()) return num;
    return factor_[i] * exact_div(num, den_[i]);
  }

  bool compatible(const HeckeAlgebra& o) const {
    return this == &o || (params_ == o.params_ && same_datum(datum_, o.datum_));
  }

 private:
  void validate_and_prepare() {
    int n = datum_.num_simple();
    if (static_cast<int>(params_.alpha_exponents.size()) != n)
      throw InvalidParams("expected " + std::to_string(n) + " alpha exponents");
    for (const auto& a : params_.alpha_exponents) {
      if (!in_quarter_z(a)) throw InvalidParams("alpha exponent " + a.get_str() + " is not in (1/4)Z");
      if (a <= 0) throw InvalidParams("alpha exponent must be positive");
    }
    // Simple roots joined by a braid of order 3 are conjugate.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (braid_order(i, j, datum_) == 3) parent[find(i)] = find(j);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (find(i) == find(j) && params_.alpha_exponents[i] != params_.alpha_exponents[j])
          throw InvalidParams("conjugate simple roots have different parameters");
    two_lambda_.resize(n);
    q_alpha_.resize(n);
    factor_.resize(n);
    den_.resize(n);
    int r = datum_.rank();
    for (const auto& [i, b] : params_.special)
      if (i < 0 || i >= n) throw InvalidParams("special parameter on unknown simple root " + std::to_string(i));
    for (int i = 0; i < n; ++i) {
      const Lattice& alpha = datum_.simple_root(i);
      two_lambda_[i] = coroot_in_2Lambda(alpha, datum_);
      const Rational& a = params_.alpha_exponents[i];
      q_alpha_[i] = QLaurent::q_pow(a);
      Lattice minus_alpha = alpha;
      for (auto& x : minus_alpha) x = -x;
      GroupAlgebraElement one = GroupAlgebraElement::scalar(r, 1);
      auto it = params_.special.find(i);
      if (!two_lambda_[i]) {
        if (it != params_.special.end())
          throw InvalidParams("q_i given for a simple root whose coroot is not in 2 Lambda^vee");
        factor_[i] = GroupAlgebraElement::scalar(r, q_alpha_[i] - 1);
        den_[i] = one - GroupAlgebraElement::Z(minus_alpha);
      } else {
        if (it == params_.special.end())
          throw InvalidParams("missing q_i for simple root " + std::to_string(i) + " with coroot in 2 Lambda^vee");
        const Rational& b = it->second;
        Rational hp = (a + b) / 2, hm = (a - b) / 2;
        if (!in_quarter_z(hp) || !in_quarter_z(hm))
          throw InvalidParams("(a +- b)/2 is not in (1/4)Z for simple root " + std::to_string(i));
        Lattice minus_2alpha = minus_alpha;
        for (auto& x : minus_2alpha) x *= 2;
        factor_[i] = GroupAlgebraElement::scalar(r, q_alpha_[i] - 1) +
                     GroupAlgebraElement::Z(minus_alpha, QLaurent::q_pow(hp) - QLaurent::q_pow(hm));
        den_[i] = one - GroupAlgebraElement::Z(minus_2alpha);
      }
    }
  }

  BasedRootDatum datum_;
  HeckeParams params_;
  std::vector<bool> two_lambda_;
  std::vector<QLaurent> q_alpha_;
  std::vector<GroupAlgebraElement> factor_;
  std::vector<GroupAlgebraElement> den_;
};

using HeckeAlgebraPtr = std::shared_ptr<const HeckeAlgebra>;

class HeckeElement {
 public:
  using Terms = std::map<WeylElement, GroupAlgebraElement>;

  explicit HeckeElement(HeckeAlgebraPtr alg) : alg_(std::move(alg)) {}

  const HeckeAlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupAlgebraElement coefficient(const WeylElement& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? GroupAlgebraElement(alg_->rank()) : it->second;
  }

  void add_term(const WeylElement& w, const GroupAlgebraElement& g) {
    if (g.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, g);
    if (!inserted) {
      it->second += g;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  HeckeElement operator-() const {
    HeckeElement r(alg_);
    for (const auto& [w, g] : terms_) r.terms_.emplace(w, -g);
    return r;
  }
  HeckeElement& operator+=(const HeckeElement& o) {
    check(o);
    for (const auto& [w, g] : o.terms_) add_term(w, g);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    check(o);
    for (const auto& [w, g] : o.terms_) add_term(w, -g);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    a.check(b);
    return a.terms_ == b.terms_;
  }

  // f * this, with f multiplied into every lattice part from the left.
  HeckeElement left_scaled(const GroupAlgebraElement& f) const {
    HeckeElement r(alg_);
    for (const auto& [w, g] : terms_) r.add_term(w, f * g);
    return r;
  }

  // U_{s_i} * this
  HeckeElement left_mul_simple(int i) const {
    const auto& d = alg_->datum();
    const SignedPerm& s = d.simple_reflection(i);
    const Lattice& alpha = d.simple_root(i);
    GroupAlgebraElement qa = GroupAlgebraElement::scalar(alg_->rank(), alg_->q_alpha(i));
    GroupAlgebraElement qm1 = GroupAlgebraElement::scalar(alg_->rank(), alg_->q_alpha(i) - 1);
    HeckeElement r(alg_);
    for (const auto& [v, g] : terms_) {
      GroupAlgebraElement sg = act_on(s, g);
      WeylElement sv = compose(s, v);
      if (d.is_positive(act(inverse(v), alpha))) {
        r.add_term(sv, sg);
      } else {
        r.add_term(v, qm1 * sg);
        r.add_term(sv, qa * sg);
      }
      r.add_term(v, -alg_->correction(i, sg));
    }
    return r;
  }

  friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
    x.check(y);
    HeckeElement r(x.alg_);
    const auto& d = x.alg_->datum();
    for (const auto& [w, f] : x.terms_) {
      HeckeElement h = y;
      std::vector<int> word = reduced_word(w, d);
      for (auto it = word.rbegin(); it != word.rend(); ++it) h = h.left_mul_simple(*it);
      r += h.left_scaled(f);
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    const auto& d = alg_->datum();
    for (const auto& [w, g] : terms_) {
      if (!s.empty()) s += " + ";
      s += "[" + g.to_string() + "]*U";
      auto word = reduced_word(w, d);
      s += "(";
      for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + std::to_string(word[i]);
      s += ")";
    }
    return s;
  }

 private:
  void check(const HeckeElement& o) const {
    if (!alg_->compatible(*o.alg_)) throw DatumMismatch();
  }

  HeckeAlgebraPtr alg_;
  Terms terms_;
};

inline HeckeElement he_mul(const HeckeElement& x, const HeckeElement& y) { return x * y; }

inline HeckeElement hecke_U(const HeckeAlgebraPtr& a, const WeylElement& w) {
  HeckeElement e(a);
  e.add_term(w, GroupAlgebraElement::scalar(a->rank(), 1));
  return e;
}
inline HeckeElement hecke_Us(const HeckeAlgebraPtr& a, int i) { return hecke_U(a, a->datum().simple_reflection(i)); }
inline HeckeElement hecke_lattice(const HeckeAlgebraPtr& a, const GroupAlgebraElement& g) {
  HeckeElement e(a);
  e.add_term(SignedPerm::identity(a->rank()), g);
  return e;
}
inline HeckeElement hecke_Z(const HeckeAlgebraPtr& a, const Lattice& l, const QLaurent& c = QLaurent(1)) {
  return hecke_lattice(a, GroupAlgebraElement::Z(l, c));
}
inline HeckeElement hecke_scalar(const HeckeAlgebraPtr& a, const QLaurent& c) {
  return hecke_lattice(a, GroupAlgebraElement::scalar(a->rank(), c));
}

// Z_lambda U_s - U_s Z_{s lambda}, as an element of the lattice part.
inline HeckeElement commute_zu(const HeckeAlgebraPtr& a, const Lattice& lambda, int simple) {
  return hecke_lattice(a, a->correction(simple, GroupAlgebraElement::Z(lambda)));
}

// Sum of Z_mu over the W-orbit of lambda.
inline GroupAlgebraElement orbit_sum(const BasedRootDatum& d, const Lattice& lambda) {
  std::set<Lattice> orbit;
  for (const auto& w : weyl_enumerate(d)) orbit.insert(act(w, lambda));
  GroupAlgebraElement g(d.rank());
  for (const auto& mu : orbit) g += GroupAlgebraElement::Z(mu);
  return g;
}

inline bool is_central(const HeckeElement& x) {
  const auto& a = x.algebra();
  const auto& d = a->datum();
  weyl_enumerate(d);  // size guard
  for (int i = 0; i < d.num_simple(); ++i) {
    HeckeElement u = hecke_Us(a, i);
    if (!(x * u == u * x)) return false;
  }
  for (int j = 0; j < d.rank(); ++j) {
    Lattice e(d.rank(), 0);
    e[j] = 1;
    HeckeElement z = hecke_Z(a, e);
    if (!(x * z == z * x)) return false;
  }
  return true;
}

// (U_s + 1)(U_s - q_alpha) = 0 in normal form.
inline bool quadratic_relation_holds(const HeckeAlgebraPtr& a, int i) {
  HeckeElement u = hecke_Us(a, i);
  HeckeElement one = hecke_scalar(a, QLaurent(1));
  HeckeElement q = hecke_scalar(a, a->q_alpha(i));
  return ((u + one) * (u - q)).is_zero();
}

// U_s U_t U_s ... = U_t U_s U_t ... with braid_order(s, t) factors on each side.
inline bool braid_relation_holds(const HeckeAlgebraPtr& a, int i, int j) {
  int m = braid_order(i, j, a->datum());
  HeckeElement l = hecke_scalar(a, QLaurent(1)), r = l;
  for (int k = 0; k < m; ++k) {
    l = l * hecke_Us(a, k % 2 == 0 ? i : j);
    r = r * hecke_Us(a, k % 2 == 0 ? j : i);
  }
  return l == r;
}

}  // namespace mhecke
