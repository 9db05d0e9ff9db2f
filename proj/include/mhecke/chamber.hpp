#pragma once

// Tempered and square-integrable criteria for modules given by their
// exponents.  An exponent is the character lambda -> zeta(lambda) q^{<lambda, nu>}
// with zeta a root of unity stored as a rational angle; its real part is -nu.

#include <vector>

#include "linalg.hpp"
#include "rootdata.hpp"

namespace mhecke {

struct ModuleExponent {
  Rational tag;  // zeta = exp(2 pi i tag)
  QVector nu;

  QVector real_part() const {
    QVector r = nu;
    for (auto& x : r) x = -x;
    return r;
  }
};

using ModuleExponents = std::vector<ModuleExponent>;

namespace detail {

inline std::vector<QVector> simple_coroots(const BasedRootDatum& d) {
  std::vector<QVector> v;
  for (int i = 0; i < d.num_simple(); ++i) v.push_back(to_qvector(d.simple_coroot(i)));
  return v;
}

inline void check_length(const ModuleExponent& e, const BasedRootDatum& d) {
  if (static_cast<int>(e.nu.size()) != d.rank()) throw std::invalid_argument("exponent of wrong length");
}

}  // namespace detail

// Every real part is a combination of simple coroots with coefficients <= 0.
inline bool tempered_check(const ModuleExponents& e, const BasedRootDatum& d) {
  auto basis = detail::simple_coroots(d);
  for (const auto& x : e) {
    detail::check_length(x, d);
    auto c = solve_in_span(basis, x.real_part());
    if (!c) return false;
    for (const auto& v : *c)
      if (v > 0) return false;
  }
  return true;
}

// Z together with the simple roots spans a finite-index sublattice, every real
// part has strictly negative coefficients, and nu is orthogonal to Z.
inline bool sqint_check(const ModuleExponents& e, const std::vector<Lattice>& z, const BasedRootDatum& d) {
  QMatrix m;
  for (const auto& g : z) {
    if (static_cast<int>(g.size()) != d.rank()) throw std::invalid_argument("generator of wrong length");
    m.push_back(to_qvector(g));
  }
  for (int i = 0; i < d.num_simple(); ++i) m.push_back(to_qvector(d.simple_root(i)));
  if (matrix_rank(m) != d.rank()) return false;
  auto basis = detail::simple_coroots(d);
  for (const auto& x : e) {
    detail::check_length(x, d);
    auto c = solve_in_span(basis, x.real_part());
    if (!c) return false;
    for (const auto& v : *c)
      if (v >= 0) return false;
    for (const auto& g : z)
      if (pairing(to_qvector(g), x.nu) != 0) return false;
  }
  return true;
}

}  // namespace mhecke
