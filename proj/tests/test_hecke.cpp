#include <gtest/gtest.h>

#include "mhecke/chamber.hpp"
#include "mhecke/extended.hpp"
#include "mhecke/hecke.hpp"
#include "mhecke/sampling.hpp"

using namespace mhecke;

namespace {

QLaurent q(const Rational& e) { return QLaurent::q_pow(e); }
GroupAlgebraElement Zg(const Lattice& l, const QLaurent& c = QLaurent(1)) { return GroupAlgebraElement::Z(l, c); }

HeckeAlgebraPtr gl2() { return HeckeAlgebra::create(classical_datum(ClassicalKind::GL, 2).datum, {{1}, {}}); }
HeckeAlgebraPtr gl3() { return HeckeAlgebra::create(classical_datum(ClassicalKind::GL, 3).datum, {{1, 1}, {}}); }
// Short simple root e_2 has coroot 2 e_2.
HeckeAlgebraPtr b2() { return HeckeAlgebra::create(BasedRootDatum(2, {{"B", 2, 1, 0}}), {{1, 2}, {{1, 1}}}); }
HeckeAlgebraPtr c2() { return HeckeAlgebra::create(BasedRootDatum(2, {{"C", 2, 1, 0}}), {{1, 3}, {}}); }
HeckeAlgebraPtr a1a1() {
  return HeckeAlgebra::create(BasedRootDatum(4, {{"A", 2, 1, 0}, {"A", 2, 1, 2}}), {{1, make_rational(5, 2)}, {}});
}
// Lambda = Z, root 2 with coroot 1.
HeckeAlgebraPtr rank_one_explicit() {
  BasedRootDatum d(1, std::vector<RootPair>{{{2}, {1}}, {{-2}, {-1}}}, std::vector<int>{0});
  return HeckeAlgebra::create(d, {{1}, {}});
}

std::vector<HeckeAlgebraPtr> test_algebras() { return {gl2(), gl3(), b2(), c2(), a1a1()}; }

Lattice scaled(Lattice v, int c) {
  for (auto& x : v) x *= c;
  return v;
}
Lattice plus(Lattice a, const Lattice& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// Right side of Z_l U_s - U_s Z_{s l}, summed as a finite geometric series.
GroupAlgebraElement commutation_oracle(const HeckeAlgebraPtr& a, const Lattice& l, int i) {
  const auto& d = a->datum();
  const Lattice& alpha = d.simple_root(i);
  const Lattice& coroot = d.simple_coroot(i);
  int n = pairing(l, coroot);
  const int r = d.rank();
  const Rational& ea = a->params().alpha_exponents[i];
  GroupAlgebraElement sum(r);
  if (!coroot_in_2Lambda(alpha, d)) {
    // (Z_l - Z_{l - n alpha}) / (1 - Z_{-alpha})
    if (n > 0)
      for (int j = 0; j < n; ++j) sum += Zg(plus(l, scaled(alpha, -j)));
    else
      for (int j = 1; j <= -n; ++j) sum -= Zg(plus(l, scaled(alpha, j)));
    return Zg(Lattice(r, 0), q(ea) - QLaurent(1)) * sum;
  }
  const Rational& eb = a->params().special.at(i);
  int m = n / 2;
  // (Z_l - Z_{l - 2m alpha}) / (1 - Z_{-2 alpha})
  if (m > 0)
    for (int j = 0; j < m; ++j) sum += Zg(plus(l, scaled(alpha, -2 * j)));
  else
    for (int j = 1; j <= -m; ++j) sum -= Zg(plus(l, scaled(alpha, 2 * j)));
  GroupAlgebraElement factor =
      Zg(Lattice(r, 0), q(ea) - QLaurent(1)) + Zg(scaled(alpha, -1), q((ea + eb) / 2) - q((ea - eb) / 2));
  return factor * sum;
}

ModuleExponents one_exponent(QVector nu) { return {{0, std::move(nu)}}; }

}  // namespace

TEST(CommuteZU, GL2FirstBasisVector) {
  auto a = gl2();
  EXPECT_EQ(commute_zu(a, {1, 0}, 0), hecke_lattice(a, Zg({1, 0}, q(1) - QLaurent(1))));
}

TEST(CommuteZU, OrthogonalWeightGivesZero) {
  auto a = gl2();
  EXPECT_TRUE(commute_zu(a, {1, 1}, 0).is_zero());
  auto b = b2();
  EXPECT_TRUE(commute_zu(b, {0, 0}, 1).is_zero());
}

TEST(CommuteZU, RankOneLatticeAtRoot) {
  // (q - 1)(Z_alpha + 1)
  auto a = rank_one_explicit();
  GroupAlgebraElement want = Zg({0}, q(1) - QLaurent(1)) * (Zg({2}) + Zg({0}));
  EXPECT_EQ(commute_zu(a, {2}, 0), hecke_lattice(a, want));
  auto g = gl2();
  GroupAlgebraElement want2 = Zg({0, 0}, q(1) - QLaurent(1)) * (Zg({1, -1}) + Zg({0, 0}));
  EXPECT_EQ(commute_zu(g, {1, -1}, 0), hecke_lattice(g, want2));
}

TEST(CommuteZU, SpecialBranchB2) {
  // lambda = e_2: (q^2 - 1) Z_{e_2} + q^{3/2} - q^{1/2}
  auto a = b2();
  ASSERT_TRUE(a->two_lambda(1));
  GroupAlgebraElement want = Zg({0, 1}, q(2) - QLaurent(1)) + Zg({0, 0}, q(make_rational(3, 2)) - q(make_rational(1, 2)));
  EXPECT_EQ(commute_zu(a, {0, 1}, 1), hecke_lattice(a, want));
}

TEST(CommuteZU, MatchesGeometricSeries) {
  Sampler s(21, {1, 1, 3, 0, 1});
  for (const auto& a : test_algebras())
    for (int i = 0; i < a->datum().num_simple(); ++i)
      for (int k = 0; k < 15; ++k) {
        Lattice l = s.lattice(a->rank());
        EXPECT_EQ(commute_zu(a, l, i), hecke_lattice(a, commutation_oracle(a, l, i)));
      }
}

TEST(Multiplication, BernsteinRelationFromProducts) {
  Sampler s(22, {1, 1, 2, 0, 1});
  for (const auto& a : test_algebras()) {
    const auto& d = a->datum();
    for (int i = 0; i < d.num_simple(); ++i)
      for (int k = 0; k < 10; ++k) {
        Lattice l = s.lattice(a->rank());
        HeckeElement lhs = hecke_Z(a, l) * hecke_Us(a, i) - hecke_Us(a, i) * hecke_Z(a, d.reflect(i, l));
        EXPECT_EQ(lhs, hecke_lattice(a, commutation_oracle(a, l, i)));
      }
  }
}

TEST(Multiplication, QuadraticExample) {
  auto a = gl2();
  HeckeElement u = hecke_Us(a, 0);
  EXPECT_EQ(u * u, hecke_scalar(a, q(1) - QLaurent(1)) * u + hecke_scalar(a, q(1)));
}

TEST(Multiplication, UsZOrthogonal) {
  auto a = gl2();
  EXPECT_EQ(hecke_Us(a, 0) * hecke_Z(a, {2, 2}), hecke_Z(a, {2, 2}) * hecke_Us(a, 0));
  auto h = hecke_Us(a, 0) * hecke_Z(a, {2, 2});
  ASSERT_EQ(h.terms().size(), 1u);
  EXPECT_EQ(h.terms().begin()->second, Zg({2, 2}));
}

TEST(Multiplication, LengthAdditiveProduct) {
  auto a = gl3();
  const auto& d = a->datum();
  SignedPerm w = word_product({0, 1, 0}, d);
  EXPECT_EQ((hecke_Us(a, 0) * hecke_Us(a, 1)) * hecke_Us(a, 0), hecke_U(a, w));
}

TEST(Multiplication, UnitIsNeutral) {
  Sampler s(23);
  for (const auto& a : test_algebras()) {
    auto group = weyl_enumerate(a->datum());
    HeckeElement one = hecke_scalar(a, QLaurent(1));
    for (int k = 0; k < 10; ++k) {
      HeckeElement x = s.hecke(a, group);
      EXPECT_EQ(x * one, x);
      EXPECT_EQ(one * x, x);
    }
  }
}

TEST(Multiplication, BasisProductsStayInNormalForm) {
  auto a = b2();
  auto group = weyl_enumerate(a->datum());
  for (const auto& w : group)
    for (const auto& v : group) {
      HeckeElement p = hecke_U(a, w) * hecke_Z(a, {1, -1}) * hecke_U(a, v);
      for (const auto& [x, g] : p.terms()) {
        EXPECT_FALSE(g.is_zero());
        EXPECT_NE(std::find(group.begin(), group.end(), x), group.end());
      }
    }
}

TEST(Multiplication, Associativity) {
  for (const auto& a : {gl2(), gl3(), b2(), a1a1()}) {
    Sampler s(24);
    auto group = weyl_enumerate(a->datum());
    for (int k = 0; k < 100; ++k) {
      HeckeElement x = s.hecke(a, group), y = s.hecke(a, group), z = s.hecke(a, group);
      ASSERT_EQ((x * y) * z, x * (y * z)) << a->datum().type_label() << " sample " << k;
    }
  }
}

TEST(Multiplication, DatumMismatch) { EXPECT_THROW(hecke_Us(gl2(), 0) * hecke_Us(b2(), 0), DatumMismatch); }

TEST(Relations, Quadratic) {
  for (const auto& a : test_algebras())
    for (int i = 0; i < a->datum().num_simple(); ++i) {
      HeckeElement u = hecke_Us(a, i);
      HeckeElement rel = (u + hecke_scalar(a, QLaurent(1))) * (u - hecke_scalar(a, a->q_alpha(i)));
      EXPECT_TRUE(rel.is_zero()) << a->datum().type_label() << " root " << i;
      EXPECT_TRUE(quadratic_relation_holds(a, i));
    }
}

TEST(Relations, Braid) {
  for (const auto& a : test_algebras()) {
    const auto& d = a->datum();
    for (int i = 0; i < d.num_simple(); ++i)
      for (int j = i + 1; j < d.num_simple(); ++j) {
        int m = braid_order(i, j, d);
        HeckeElement l = hecke_scalar(a, QLaurent(1)), r = l;
        for (int k = 0; k < m; ++k) {
          l = l * hecke_Us(a, k % 2 ? j : i);
          r = r * hecke_Us(a, k % 2 ? i : j);
        }
        EXPECT_EQ(l, r) << d.type_label();
        EXPECT_TRUE(braid_relation_holds(a, i, j));
      }
  }
}

TEST(Params, ConjugateRootsNeedEqualParameters) {
  EXPECT_THROW(HeckeAlgebra::create(classical_datum(ClassicalKind::GL, 3).datum, {{1, 2}, {}}), InvalidParams);
}

TEST(Params, SquareRootsMustBeQuarterPowers) {
  EXPECT_THROW(HeckeAlgebra::create(BasedRootDatum(2, {{"B", 2, 1, 0}}), {{1, make_rational(1, 4)}, {{1, 0}}}),
               InvalidParams);
}

TEST(Params, SpecialParameterPlacement) {
  EXPECT_THROW(HeckeAlgebra::create(BasedRootDatum(2, {{"B", 2, 1, 0}}), {{1, 2}, {}}), InvalidParams);
  EXPECT_THROW(HeckeAlgebra::create(BasedRootDatum(2, {{"C", 2, 1, 0}}), {{1, 2}, {{1, 1}}}), InvalidParams);
}

TEST(Params, TrivialQiIsAcceptedAndReported) {
  auto a = HeckeAlgebra::create(BasedRootDatum(2, {{"B", 2, 1, 0}}), {{1, 1}, {{1, 1}}});
  EXPECT_EQ(a->trivial_qi(), (std::vector<int>{1}));
  EXPECT_TRUE(quadratic_relation_holds(a, 1));
}

TEST(Center, GL2Examples) {
  auto a = gl2();
  EXPECT_TRUE(is_central(hecke_Z(a, {1, 1})));
  EXPECT_FALSE(is_central(hecke_Z(a, {1, 0})));
  EXPECT_TRUE(is_central(hecke_lattice(a, Zg({1, 0}) + Zg({0, 1}))));
}

TEST(Center, OrbitSumsAreCentral) {
  for (const auto& a : {gl2(), b2(), c2()}) {
    const auto& d = a->datum();
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y) {
        Lattice l{x, y};
        EXPECT_TRUE(is_central(hecke_lattice(a, orbit_sum(d, l)))) << d.type_label();
      }
  }
}

TEST(Center, NonInvariantIsNotCentral) {
  for (const auto& a : {gl2(), b2(), c2()}) {
    EXPECT_FALSE(is_central(hecke_Z(a, {2, 1})));
    EXPECT_FALSE(is_central(hecke_Us(a, 0)));
  }
}

TEST(Extended, DFlipConjugation) {
  for (int k : {2, 3}) {
    BasedRootDatum d(k, {{"D", k, 1, 0}});
    std::vector<Rational> ex(d.num_simple(), 1);
    auto h = HeckeAlgebra::create(d, {ex, {}});
    SignedPerm r = d_flip(k, d.components()[0]);
    auto e = ExtendedAlgebra::create(h, {r});
    ASSERT_EQ(e->order(), 2u);
    auto J = ext_J(e, r);
    for (const auto& w : weyl_enumerate(d)) {
      auto lhs = J * ext_embed(e, hecke_U(h, w));
      auto rhs = ext_embed(e, hecke_U(h, compose(compose(r, w), inverse(r)))) * J;
      EXPECT_EQ(lhs, rhs);
    }
    Lattice l(k, 0);
    l[k - 1] = 1;
    l[0] = 2;
    EXPECT_EQ(J * ext_embed(e, hecke_Z(h, l)), ext_embed(e, hecke_Z(h, act(r, l))) * J);
    EXPECT_EQ(J * J, ext_embed(e, hecke_scalar(h, QLaurent(1))));
  }
}

TEST(Extended, Associativity) {
  BasedRootDatum d(3, {{"D", 3, 1, 0}});
  auto h = HeckeAlgebra::create(d, {{1, 1, 1}, {}});
  SignedPerm r = d_flip(3, d.components()[0]);
  auto e = ExtendedAlgebra::create(h, {r});
  auto group = weyl_enumerate(d);
  Sampler s(25, {1, 1, 1, 2, 2});
  for (int k = 0; k < 20; ++k) {
    auto x = ext_embed(e, s.hecke(h, group)) + ext_J(e, r) * ext_embed(e, s.hecke(h, group));
    auto y = ext_J(e, r) * ext_embed(e, s.hecke(h, group));
    auto z = ext_embed(e, s.hecke(h, group)) * ext_J(e, r);
    EXPECT_EQ((x * y) * z, x * (y * z));
  }
}

TEST(Extended, Cocycle) {
  BasedRootDatum d(2, {{"D", 2, 1, 0}});
  auto h = HeckeAlgebra::create(d, {{1, 1}, {}});
  SignedPerm r = d_flip(2, d.components()[0]);
  SignedPerm e = SignedPerm::identity(2);
  auto ext = ExtendedAlgebra::create(h, {r}, {{{r, r}, Rational(-1)}});
  EXPECT_EQ(ext_J(ext, r) * ext_J(ext, r), ext_embed(ext, hecke_scalar(h, QLaurent(-1))));
  EXPECT_THROW(ExtendedAlgebra::create(h, {r}, {{{e, r}, Rational(2)}}), IncompatibleRData);
  EXPECT_THROW(ExtendedAlgebra::create(h, {r}, {{{r, r}, Rational(0)}}), IncompatibleRData);
}

TEST(Extended, RMustPreserveParameters) {
  BasedRootDatum d(4, {{"A", 2, 1, 0}, {"A", 2, 1, 2}});
  SignedPerm swap{{2, 3, 0, 1}, {1, 1, 1, 1}};
  EXPECT_THROW(ExtendedAlgebra::create(HeckeAlgebra::create(d, {{1, 2}, {}}), {swap}), IncompatibleRData);
  EXPECT_NO_THROW(ExtendedAlgebra::create(HeckeAlgebra::create(d, {{1, 1}, {}}), {swap}));
}

TEST(Chamber, TemperedExamples) {
  BasedRootDatum d(2, {{"B", 2, 1, 0}});
  // simple coroots e1 - e2 and 2 e2; real part -nu
  EXPECT_TRUE(tempered_check(one_exponent({1, 1}), d));
  EXPECT_TRUE(tempered_check(one_exponent({0, 0}), d));
  EXPECT_FALSE(tempered_check(one_exponent({-1, 1}), d));
}

TEST(Chamber, SquareIntegrableExamples) {
  BasedRootDatum b(2, {{"B", 2, 1, 0}});
  EXPECT_TRUE(sqint_check(one_exponent({1, 1}), {}, b));
  EXPECT_FALSE(sqint_check(one_exponent({0, 0}), {}, b));
  auto gl = classical_datum(ClassicalKind::GL, 2).datum;
  EXPECT_TRUE(sqint_check(one_exponent({1, -1}), {{1, 1}}, gl));
  EXPECT_FALSE(sqint_check(one_exponent({1, -1}), {}, gl));
}

TEST(Chamber, OutsideSpan) {
  auto gl = classical_datum(ClassicalKind::GL, 2).datum;
  EXPECT_FALSE(tempered_check(one_exponent({1, 0}), gl));
  EXPECT_FALSE(sqint_check(one_exponent({1, 0}), {{1, 1}}, gl));
}
