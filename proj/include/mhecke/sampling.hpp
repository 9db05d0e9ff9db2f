#pragma once

// Seeded random elements for sweeps and property tests.

#include <random>
#include <vector>

#include "hecke.hpp"

namespace mhecke {

struct SampleShape {
  int terms = 2;       // U_w terms per element
  int monomials = 2;   // Z_lambda monomials per lattice part
  int coord = 1;       // lattice coordinates in [-coord, coord]
  int u_degree = 4;    // u-exponents in [-u_degree, u_degree]
  int coeff = 3;       // integer coefficients in [-coeff, coeff]
};

class Sampler {
 public:
  explicit Sampler(unsigned seed, SampleShape shape = {}) : rng_(seed), shape_(shape) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational nonzero_coeff() {
    int c = 0;
    while (c == 0) c = uniform(-shape_.coeff, shape_.coeff);
    return c;
  }

  Lattice lattice(int rank) {
    Lattice v(rank);
    for (auto& x : v) x = uniform(-shape_.coord, shape_.coord);
    return v;
  }

  QLaurent laurent(int terms = 2) {
    QLaurent c;
    for (int i = 0; i < terms; ++i) c.add_term(uniform(-shape_.u_degree, shape_.u_degree), nonzero_coeff());
    return c;
  }

  GroupAlgebraElement group_algebra(int rank) {
    GroupAlgebraElement g(rank);
    for (int i = 0; i < shape_.monomials; ++i) g.add_term(lattice(rank), laurent(1));
    return g;
  }

  HeckeElement hecke(const HeckeAlgebraPtr& alg, const std::vector<WeylElement>& group) {
    HeckeElement h(alg);
    for (int i = 0; i < shape_.terms; ++i) {
      const auto& w = group[uniform(0, static_cast<int>(group.size()) - 1)];
      h.add_term(w, group_algebra(alg->rank()));
    }
    return h;
  }

 private:
  std::mt19937 rng_;
  SampleShape shape_;
};

}  // namespace mhecke
