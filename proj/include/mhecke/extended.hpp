#pragma once

// Semidirect products of a Hecke algebra with a twisted group algebra of a
// finite group R of diagram automorphisms: sums of h_r * J_r with
// J_r h = (r.h) J_r and J_r J_r' = eta(r, r') J_{r r'}.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hecke.hpp"

namespace mhecke {

class IncompatibleRData : public std::invalid_argument {
 public:
  explicit IncompatibleRData(const std::string& w) : std::invalid_argument(w) {}
};

// r.(Z_l c U_w) = Z_{r l} c U_{r w r^-1}
inline HeckeElement act_diagram(const SignedPerm& r, const HeckeElement& h) {
  HeckeElement out(h.algebra());
  SignedPerm ri = inverse(r);
  for (const auto& [w, g] : h.terms()) out.add_term(compose(compose(r, w), ri), act_on(r, g));
  return out;
}

class ExtendedAlgebra {
 public:
  // Missing cocycle entries default to 1.
  ExtendedAlgebra(HeckeAlgebraPtr hecke, const std::vector<SignedPerm>& generators,
                  std::map<std::pair<SignedPerm, SignedPerm>, Rational> table = {})
      : hecke_(std::move(hecke)) {
    const auto& d = hecke_->datum();
    const auto& p = hecke_->params();
    for (const auto& g : generators) {
      auto a = make_diagram_automorphism(g, d);
      for (int i = 0; i < d.num_simple(); ++i) {
        int j = a.base_perm[i];
        if (p.alpha_exponents[i] != p.alpha_exponents[j]) throw IncompatibleRData("R does not preserve parameters");
        auto si = p.special.find(i), sj = p.special.find(j);
        if ((si == p.special.end()) != (sj == p.special.end()) ||
            (si != p.special.end() && si->second != sj->second))
          throw IncompatibleRData("R does not preserve q_i parameters");
      }
    }
    elements_ = generate_group(generators, d.rank());
    for (const auto& [k, v] : table) {
      if (!index_of(k.first) || !index_of(k.second)) throw IncompatibleRData("cocycle entry outside R");
      if (v == 0) throw IncompatibleRData("cocycle values must be nonzero");
    }
    eta_ = std::move(table);
    for (const auto& r : elements_)
      for (const auto& s : elements_)
        for (const auto& t : elements_)
          if (eta(r, s) * eta(compose(r, s), t) != eta(s, t) * eta(r, compose(s, t)))
            throw IncompatibleRData("eta is not a 2-cocycle");
  }

  static std::shared_ptr<const ExtendedAlgebra> create(HeckeAlgebraPtr hecke, const std::vector<SignedPerm>& gens,
                                                       std::map<std::pair<SignedPerm, SignedPerm>, Rational> eta = {}) {
    return std::make_shared<const ExtendedAlgebra>(std::move(hecke), gens, std::move(eta));
  }

  const HeckeAlgebraPtr& hecke() const { return hecke_; }
  const std::vector<SignedPerm>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  const std::map<std::pair<SignedPerm, SignedPerm>, Rational>& cocycle() const { return eta_; }

  Rational eta(const SignedPerm& r, const SignedPerm& s) const {
    auto it = eta_.find({r, s});
    return it == eta_.end() ? Rational(1) : it->second;
  }

  std::optional<std::size_t> index_of(const SignedPerm& r) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i] == r) return i;
    return std::nullopt;
  }

 private:
  HeckeAlgebraPtr hecke_;
  std::vector<SignedPerm> elements_;
  std::map<std::pair<SignedPerm, SignedPerm>, Rational> eta_;
};

using ExtendedAlgebraPtr = std::shared_ptr<const ExtendedAlgebra>;

class ExtendedHeckeElement {
 public:
  explicit ExtendedHeckeElement(ExtendedAlgebraPtr alg) : alg_(std::move(alg)) {}

  const ExtendedAlgebraPtr& algebra() const { return alg_; }
  const std::map<SignedPerm, HeckeElement>& terms() const { return terms_; }

  void add_term(const SignedPerm& r, const HeckeElement& h) {
    if (!alg_->index_of(r)) throw IncompatibleRData("J_r with r outside R");
    if (h.is_zero()) return;
    auto it = terms_.find(r);
    if (it == terms_.end()) {
      terms_.emplace(r, h);
    } else {
      it->second += h;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ExtendedHeckeElement& operator+=(const ExtendedHeckeElement& o) {
    check(o);
    for (const auto& [r, h] : o.terms_) add_term(r, h);
    return *this;
  }
  friend ExtendedHeckeElement operator+(ExtendedHeckeElement a, const ExtendedHeckeElement& b) { return a += b; }

  friend ExtendedHeckeElement operator*(const ExtendedHeckeElement& x, const ExtendedHeckeElement& y) {
    x.check(y);
    ExtendedHeckeElement out(x.alg_);
    for (const auto& [r, h1] : x.terms_)
      for (const auto& [s, h2] : y.terms_) {
        HeckeElement prod = h1 * act_diagram(r, h2);
        Rational e = x.alg_->eta(r, s);
        if (e != 1) prod = prod.left_scaled(GroupAlgebraElement::scalar(prod.algebra()->rank(), QLaurent(e)));
        out.add_term(compose(r, s), prod);
      }
    return out;
  }

  friend bool operator==(const ExtendedHeckeElement& a, const ExtendedHeckeElement& b) {
    a.check(b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [r, h] : a.terms_) {
      auto it = b.terms_.find(r);
      if (it == b.terms_.end() || !(it->second == h)) return false;
    }
    return true;
  }

 private:
  void check(const ExtendedHeckeElement& o) const {
    if (alg_.get() != o.alg_.get()) throw IncompatibleRData("elements of different extended algebras");
  }

  ExtendedAlgebraPtr alg_;
  std::map<SignedPerm, HeckeElement> terms_;
};

inline ExtendedHeckeElement ext_mul(const ExtendedHeckeElement& x, const ExtendedHeckeElement& y) { return x * y; }

inline ExtendedHeckeElement ext_J(const ExtendedAlgebraPtr& a, const SignedPerm& r) {
  ExtendedHeckeElement e(a);
  e.add_term(r, hecke_scalar(a->hecke(), 1));
  return e;
}

inline ExtendedHeckeElement ext_embed(const ExtendedAlgebraPtr& a, const HeckeElement& h) {
  ExtendedHeckeElement e(a);
  e.add_term(SignedPerm::identity(a->hecke()->rank()), h);
  return e;
}

}  // namespace mhecke
