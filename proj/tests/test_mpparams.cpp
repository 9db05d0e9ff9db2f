#include <gtest/gtest.h>

#include <set>

#include "mhecke/json_io.hpp"
#include "mhecke/mpparams.hpp"

using namespace mhecke;

namespace {

InertialClass chi() { return {"chi", 1, 1, false, false, false}; }
InertialClass triv() { return trivial_class(); }
InertialClass symp() { return {"symp", 2, 1, true, true, false}; }
InertialClass symp_minus() { return {"symp_minus", 2, 2, true, false, true}; }
InertialClass symp_both() { return {"symp_both", 2, 2, true, true, true}; }

int block_sum(int a, int kap) {
  int s = 0;
  for (int k = 1; k <= a; ++k) s += 2 * k - kap;
  return s;
}

NormedParameter load(const std::string& name) {
  Json j = json_io::read_file(std::string(FIXTURE_DIR) + "/" + name);
  return json_io::normed_from(j, "$");
}

// All sign vectors on jord that alternate along each member and start at -1
// on members not of type.
std::set<AltChar> alt_chars_brute(const DiscreteParameter& p, const std::vector<InertialClass>& classes) {
  std::set<AltChar> out;
  const std::size_t n = p.jord.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    AltChar e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = (mask >> i) & 1u ? -1 : 1;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const auto& ji = p.jord[i];
      bool smallest = true;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& jj = p.jord[j];
        if (jj.member != ji.member) continue;
        if (jj.a < ji.a) smallest = false;
        if (jj.a == ji.a + 2 && e[i] * e[j] != -1) ok = false;
      }
      if (smallest && !of_type(classes[ji.member.cls], ji.member.minus) && e[i] != -1) ok = false;
    }
    if (ok) out.insert(e);
  }
  return out;
}

}  // namespace

TEST(Staircase, MatchesSummation) {
  for (int a = 0; a <= 6; ++a)
    for (int kap : {0, 1}) EXPECT_EQ(staircase_size(a, kap), block_sum(a, kap));
}

TEST(Validate, DimensionAndParity) {
  EXPECT_NO_THROW(validate({{triv()}, {4}, 2}));
  EXPECT_THROW(validate({{triv()}, {2}, 2}), InvalidParameter);
  EXPECT_THROW(validate({{triv()}, {3}, 2}), InvalidParameter);
  EXPECT_NO_THROW(validate({{symp()}, {1}, 1}));
  EXPECT_NO_THROW(validate({{chi()}, {2}, 2}));
  EXPECT_THROW(validate({{chi()}, {1, 1}, 1}), InvalidParameter);
  InertialClass bad = chi();
  bad.type_plus = true;
  EXPECT_THROW(validate({{bad}, {1}, 1}), InvalidParameter);
  EXPECT_THROW(validate({{triv()}, {0}, 0}), InvalidParameter);
}

TEST(Validate, FixtureFiles) {
  EXPECT_NO_THROW(validate(load("phi0_trivial.json")));
  EXPECT_NO_THROW(validate(load("phi0_mixed.json")));
  Json j = json_io::read_file(std::string(FIXTURE_DIR) + "/phi0_bad_dimension.json");
  EXPECT_THROW(json_io::normed_from(j, "$"), SchemaError);
}

TEST(SChoices, TrivialClassExample) {
  // m = 4, kappa = 0 on both members: a block 2 costs 2, blocks 2 + 4 cost 6
  auto s = enumerate_S({{triv()}, {4}, 2});
  std::set<std::tuple<int, int, int>> got;
  for (const auto& c : s) got.insert({c[0].a_plus, c[0].a_minus, c[0].m_gl});
  EXPECT_EQ(got, (std::set<std::tuple<int, int, int>>{{0, 0, 2}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}}));
}

TEST(SChoices, MatchBruteForce) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_normed(archetype_pool(), n)) {
      std::set<SChoice> brute{{}};
      for (std::size_t i = 0; i < p.classes.size(); ++i) {
        const auto& c = p.classes[i];
        if (!c.self_dual) continue;
        std::set<SChoice> next;
        int m = p.mult[i];
        for (int ap = 0; ap <= m; ++ap)
          for (int am = 0; am <= m; ++am)
            for (int g = 0; 2 * g <= m; ++g)
              if (m - 2 * g == block_sum(ap, c.type_plus) + block_sum(am, c.type_minus))
                for (auto s : brute) {
                  s.push_back({static_cast<int>(i), ap, am, g});
                  next.insert(s);
                }
        brute = next;
      }
      auto got = enumerate_S(p);
      EXPECT_EQ(std::set<SChoice>(got.begin(), got.end()), brute);
      EXPECT_EQ(got.size(), brute.size());
      for (const auto& s : got) EXPECT_NO_THROW(check_S(p, s));
    }
}

TEST(SChoices, CheckRejectsBadEntries) {
  NormedParameter p{{triv()}, {4}, 2};
  EXPECT_THROW(check_S(p, {}), InvalidParameter);
  EXPECT_THROW(check_S(p, {{0, 1, 1, 1}}), InvalidParameter);
  EXPECT_THROW(check_S(p, {{0, 0, 0, 2}, {0, 0, 0, 2}}), InvalidParameter);
}

TEST(PhiS, HasNoHolesAndRightDimension) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_normed(archetype_pool(), n))
      for (const auto& s : enumerate_S(p)) {
        DiscreteParameter j = phi_S(p, s);
        EXPECT_TRUE(without_holes(j, p.classes));
        int dim = 0, want = 0;
        for (const auto& e : j.jord) dim += e.a * p.classes[e.member.cls].d;
        for (const auto& e : s) want += p.classes[e.cls].d * (p.mult[e.cls] - 2 * e.m_gl);
        EXPECT_EQ(dim, want);
      }
}

TEST(PhiS, Holes) {
  std::vector<InertialClass> cls{triv(), symp()};
  EXPECT_TRUE(without_holes(make_discrete({{{0, false}, 2}, {{0, false}, 4}}), cls));
  EXPECT_FALSE(without_holes(make_discrete({{{0, false}, 4}}), cls));
  EXPECT_FALSE(without_holes(make_discrete({{{0, false}, 1}}), cls));
  EXPECT_TRUE(without_holes(make_discrete({{{1, false}, 1}, {{1, false}, 3}}), cls));
  EXPECT_FALSE(without_holes(make_discrete({{{1, false}, 3}}), cls));
  EXPECT_THROW(enumerate_alt_chars(make_discrete({{{0, false}, 4}}), cls), InvalidParameter);
}

TEST(AltChars, SymplecticExample) {
  // blocks 1, 3 of a type member: first sign is free, then alternate
  std::vector<InertialClass> cls{symp()};
  auto e = enumerate_alt_chars(make_discrete({{{0, false}, 1}, {{0, false}, 3}}), cls);
  EXPECT_EQ(std::set<AltChar>(e.begin(), e.end()), (std::set<AltChar>{{1, -1}, {-1, 1}}));
}

TEST(AltChars, NotOfTypeExample) {
  std::vector<InertialClass> cls{triv()};
  auto e = enumerate_alt_chars(make_discrete({{{0, false}, 2}, {{0, false}, 4}, {{0, true}, 2}}), cls);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], (AltChar{-1, 1, -1}));
  EXPECT_EQ(epsilon_Z(e[0]), 1);
}

TEST(AltChars, MatchBruteForce) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_normed(archetype_pool(), n))
      for (const auto& s : enumerate_S(p)) {
        DiscreteParameter j = phi_S(p, s);
        auto got = enumerate_alt_chars(j, p.classes);
        EXPECT_EQ(std::set<AltChar>(got.begin(), got.end()), alt_chars_brute(j, p.classes));
        for (const auto& e : got) {
          int prod = 1;
          for (int x : e) prod *= x;
          EXPECT_EQ(epsilon_Z(e), prod);
        }
      }
}

TEST(ReducibilityPoints, RoundTrip) {
  std::vector<InertialClass> cls{triv(), symp()};
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a <= 4; ++a) {
      int kap = kappa(cls[c], false);
      std::vector<JordEntry> j;
      for (int k = 1; k <= a; ++k) j.push_back({{c, false}, 2 * k - kap});
      DiscreteParameter p = make_discrete(j);
      Rational x = x_from_jord({c, false}, p, cls);
      auto back = jord_from_x({c, false}, x);
      EXPECT_EQ(make_discrete(back).jord, p.jord) << c << " " << a;
    }
}

TEST(ReducibilityPoints, Examples) {
  std::vector<InertialClass> cls{triv(), symp(), chi()};
  EXPECT_EQ(x_from_jord({0, false}, make_discrete({}), cls), make_rational(1, 2));
  EXPECT_EQ(x_from_jord({1, false}, make_discrete({}), cls), 0);
  EXPECT_EQ(x_from_jord({0, false}, make_discrete({{{0, false}, 2}, {{0, false}, 4}}), cls), make_rational(5, 2));
  EXPECT_THROW(x_from_jord({2, false}, make_discrete({}), cls), InvalidParameter);
  EXPECT_TRUE(jord_from_x({0, false}, make_rational(1, 2)).empty());
  EXPECT_THROW(jord_from_x({0, false}, make_rational(1, 3)), InvalidParameter);
  EXPECT_THROW(jord_from_x({0, false}, -1), InvalidParameter);
}

TEST(ReducibilityPoints, FirstOccurrence) {
  EXPECT_EQ(first_occurrence_x(2, 1), make_rational(5, 2));
  EXPECT_EQ(first_occurrence_x(2, 5), make_rational(1, 2));
  EXPECT_EQ(first_occurrence_x(2, 7), make_rational(1, 2));
  EXPECT_THROW(first_occurrence_x(2, 2), InvalidParameter);
}

TEST(HeckeForBlock, TrivialClass) {
  NormedParameter p{{triv()}, {4}, 2};
  auto h0 = hecke_for_block(p, {{0, 0, 0, 2}}, 0);
  EXPECT_EQ(h0.datum_kind, "SO_odd");
  EXPECT_EQ(render(h0), "q, q; q^0");
  auto h1 = hecke_for_block(p, {{0, 1, 0, 1}}, 0);
  EXPECT_EQ(render(h1), "q^2; q");
  auto h2 = hecke_for_block(p, {{0, 0, 1, 1}}, 0);
  EXPECT_EQ(render(h2), "q^2; q");
}

TEST(HeckeForBlock, BothTypesAtOrigin) {
  NormedParameter p{{symp_both()}, {2}, 2};
  auto h = hecke_for_block(p, {{0, 0, 0, 1}}, 0);
  EXPECT_TRUE(h.extended());
  EXPECT_EQ(h.rank, 1);
  EXPECT_TRUE(h.param_exponents.empty());
  EXPECT_EQ(h.scale, 2);
}

TEST(HeckeForBlock, NonSelfDualIsGL) {
  NormedParameter p{{chi()}, {3}, 3};
  auto h = hecke_for_block(p, {}, 0);
  EXPECT_EQ(h.datum_label(), "GL_3");
  EXPECT_EQ(h.param_exponents, (std::vector<Rational>{1, 1}));
}

TEST(HeckeForBlock, ScaledSymplecticMinus) {
  // t = 2, kappa_- = 1; (0, 1) leaves an odd remainder
  NormedParameter p{{symp_minus()}, {2}, 2};
  auto all = enumerate_S(p);
  ASSERT_EQ(all.size(), 2u);
  for (const auto& s : all) EXPECT_EQ(s[0].a_minus, 0);
  auto h = hecke_for_block(p, {{0, 0, 0, 1}}, 0);
  EXPECT_EQ(h.rank, 1);
  EXPECT_EQ(h.param_exponents, (std::vector<Rational>{1}));
  EXPECT_EQ(*h.qi_exponent, 1);
}

TEST(Classical, Examples) {
  auto so5 = classical_hecke(ClassicalGroup::SO_odd, 2, 0, 0);
  EXPECT_EQ(render(so5), "q, q; q^0");
  auto sp4 = classical_hecke(ClassicalGroup::Sp, 2, 1, 0);
  EXPECT_EQ(so5.rank, 2);
  EXPECT_EQ(render(sp4), "q, q; q");
  auto o4 = classical_hecke(ClassicalGroup::O_even, 2, 0, 0);
  EXPECT_TRUE(o4.extended());
  EXPECT_THROW(classical_hecke(ClassicalGroup::SO_odd, 1, 2, 0), InvalidParameter);
  EXPECT_THROW(classical_hecke(ClassicalGroup::Sp, 1, 0, 0), InvalidParameter);
}

TEST(Classical, MatchAssignment) {
  EXPECT_EQ(classical_match(chi(), 3).label(), "GL_3");
  EXPECT_EQ(classical_match(triv(), 4).label(), "SO_5");
  EXPECT_EQ(classical_match(symp(), 3).label(), "U_3");
  EXPECT_EQ(classical_match(symp_both(), 4).label(), "O_4");
  EXPECT_EQ(classical_match(symp_both(), 3).label(), "Sp_2");
  EXPECT_THROW(classical_match(triv(), 3), InvalidParameter);
}

TEST(Classical, UnitarySwap) {
  EXPECT_FALSE(u_swap(symp(), 3));
  EXPECT_TRUE(u_swap(symp(), 2));
  EXPECT_TRUE(u_swap(symp_minus(), 3));
  EXPECT_FALSE(u_swap(symp_minus(), 2));
}

TEST(Match, AllParametersUpToRankThree) {
  std::size_t total = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_normed(archetype_pool(), n)) {
      auto r = verify_match(p);
      total += r.comparisons;
      for (const auto& m : r.mismatches)
        ADD_FAILURE() << "class " << p.classes[m.cls].label << ": " << render(m.mp) << " vs " << render(m.classical);
    }
  EXPECT_GT(total, 100u);
}

TEST(EnumerateNormed, MatchesBruteForce) {
  auto pool = archetype_pool();
  for (int n = 1; n <= 3; ++n) {
    std::size_t brute = 0;
    std::vector<int> m(pool.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == pool.size()) {
        NormedParameter p{{}, {}, n};
        for (std::size_t j = 0; j < pool.size(); ++j)
          if (m[j] > 0) p.classes.push_back(pool[j]), p.mult.push_back(m[j]);
        try {
          validate(p);
          ++brute;
        } catch (const InvalidParameter&) {
        }
        return;
      }
      for (m[i] = 0; m[i] <= 2 * n; ++m[i]) self(self, i + 1);
      m[i] = 0;
    };
    rec(rec, 0);
    EXPECT_EQ(enumerate_normed(pool, n).size(), brute) << n;
  }
}

TEST(Split, MixedFixture) {
  auto split = split_so(load("phi0_mixed.json"));
  EXPECT_EQ(split.plus.size(), 2u);
  EXPECT_EQ(split.minus.size(), 2u);
  for (const auto& b : split.plus) EXPECT_EQ(b.epsilon_z, 1);
  for (const auto& b : split.minus) EXPECT_EQ(b.epsilon_z, -1);
}

TEST(Split, CountsMatchBlocks) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_normed(archetype_pool(), n)) {
      auto split = split_so(p);
      EXPECT_EQ(split.plus.size() + split.minus.size(), enumerate_blocks(p).size());
    }
}

TEST(Weil, BothBlocks) {
  for (int n = 1; n <= 4; ++n) {
    auto [plus, minus] = weil_example(n);
    EXPECT_EQ(plus.hecke.rank, n);
    EXPECT_FALSE(plus.discrepancy);
    EXPECT_EQ(minus.hecke.rank, n - 1);
    ASSERT_EQ(minus.jord.jord.size(), 1u);
    EXPECT_EQ(minus.jord.jord[0].a, 2);
    EXPECT_TRUE(plus.jord.jord.empty());
  }
  auto [plus, minus] = weil_example(2);
  EXPECT_EQ(render(plus.hecke), "q, q; q^0");
  EXPECT_EQ(render(minus.hecke), "q^2; q");
  EXPECT_TRUE(minus.discrepancy);
  EXPECT_THROW(weil_example(0), InvalidParameter);
}
