#pragma once

// Langlands-Deligne parameter calculus for Mp_{2n}: Jordan blocks,
// alternating characters, the set S(phi_0), Hecke presentations of the blocks
// and their comparison with classical groups.
//
// A self-dual class rho has two members, rho itself ("base") and rho_- =
// rho (x) unramified quadratic character ("minus"); kappa of a member is 1 if
// it is of symplectic type and 0 otherwise, and its Jordan blocks are
// sp(2k - kappa), k = 1, 2, ...

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace mhecke {

class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& w) : std::invalid_argument(w) {}
};

struct InertialClass {
  std::string label;
  int d = 1;
  int t = 1;
  bool self_dual = false;
  bool type_plus = false;
  bool type_minus = false;

  friend bool operator==(const InertialClass&, const InertialClass&) = default;
};

struct Member {
  int cls = 0;
  bool minus = false;

  friend auto operator<=>(const Member&, const Member&) = default;
};

inline bool of_type(const InertialClass& c, bool minus) { return minus ? c.type_minus : c.type_plus; }
inline int kappa(const InertialClass& c, bool minus) { return of_type(c, minus) ? 1 : 0; }

// sum_{k=1}^{a} (2k - kappa)
inline int staircase_size(int a, int kap) { return a * (a + 1) - kap * a; }

struct NormedParameter {
  std::vector<InertialClass> classes;
  std::vector<int> mult;
  int n = 0;
};

inline void validate(const NormedParameter& p) {
  if (p.classes.size() != p.mult.size()) throw InvalidParameter("classes: one multiplicity per class expected");
  if (p.n < 0) throw InvalidParameter("n: must be nonnegative");
  long dim = 0;
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    const auto& c = p.classes[i];
    std::string at = "classes[" + std::to_string(i) + "]";
    if (c.d < 1) throw InvalidParameter(at + ".d: must be positive");
    if (c.t < 1) throw InvalidParameter(at + ".t: must be positive");
    if (p.mult[i] < 1) throw InvalidParameter(at + ".multiplicity: must be positive");
    if (!c.self_dual && (c.type_plus || c.type_minus))
      throw InvalidParameter(at + ": type flags require a self-dual class");
    if (c.self_dual && !c.type_plus && p.mult[i] % 2 != 0)
      throw InvalidParameter(at + ".multiplicity: a self-dual class not of symplectic type needs even multiplicity");
    dim += static_cast<long>(c.d) * p.mult[i] * (c.self_dual ? 1 : 2);
  }
  if (dim != 2L * p.n)
    throw InvalidParameter("dimension identity fails: sum of d * m is " + std::to_string(dim) + ", expected 2n = " +
                           std::to_string(2L * p.n));
}

struct JordEntry {
  Member member;
  int a = 0;

  friend auto operator<=>(const JordEntry&, const JordEntry&) = default;
};

struct DiscreteParameter {
  std::vector<JordEntry> jord;  // kept sorted
};

inline DiscreteParameter make_discrete(std::vector<JordEntry> jord) {
  std::sort(jord.begin(), jord.end());
  return {std::move(jord)};
}

inline std::map<Member, std::vector<int>> blocks_by_member(const DiscreteParameter& p) {
  std::map<Member, std::vector<int>> m;
  for (const auto& e : p.jord) m[e.member].push_back(e.a);
  for (auto& [k, v] : m) std::sort(v.begin(), v.end());
  return m;
}

// Every member carries exactly the blocks 2k - kappa, k = 1 .. a_member.
inline bool without_holes(const DiscreteParameter& p, const std::vector<InertialClass>& classes) {
  for (const auto& [m, as] : blocks_by_member(p)) {
    if (m.cls < 0 || m.cls >= static_cast<int>(classes.size())) return false;
    const auto& c = classes[m.cls];
    if (!c.self_dual) return false;
    int kap = kappa(c, m.minus);
    for (std::size_t k = 1; k <= as.size(); ++k)
      if (as[k - 1] != 2 * static_cast<int>(k) - kap) return false;
  }
  return true;
}

// Signs aligned with the (sorted) jord entries.
using AltChar = std::vector<int>;

inline std::vector<AltChar> enumerate_alt_chars(const DiscreteParameter& p, const std::vector<InertialClass>& classes) {
  if (!without_holes(p, classes)) throw InvalidParameter("parameter has holes");
  auto by = blocks_by_member(p);
  std::vector<Member> free_members;
  for (const auto& [m, as] : by)
    if (of_type(classes[m.cls], m.minus)) free_members.push_back(m);
  std::vector<AltChar> out;
  for (unsigned mask = 0; mask < (1u << free_members.size()); ++mask) {
    std::map<Member, int> first;
    for (std::size_t i = 0; i < free_members.size(); ++i) first[free_members[i]] = (mask >> i) & 1u ? -1 : 1;
    AltChar e;
    for (const auto& j : p.jord) {
      auto it = first.find(j.member);
      int s1 = it == first.end() ? -1 : it->second;
      int k = (j.a + kappa(classes[j.member.cls], j.member.minus)) / 2;
      e.push_back(k % 2 == 1 ? s1 : -s1);
    }
    out.push_back(e);
  }
  return out;
}

inline int epsilon_Z(const AltChar& e) {
  int s = 1;
  for (int x : e) s *= x;
  return s;
}

// Blocks (rho, 2x + 1 - 2l), l = 1 .. floor(x).
inline std::vector<JordEntry> jord_from_x(const Member& m, const Rational& x) {
  if (!is_integer(x * 2)) throw InvalidParameter("2x must be an integer");
  if (x < 0) throw InvalidParameter("x must be nonnegative");
  Rational f = x;
  long fl = to_long(Rational(f.get_num() / f.get_den()));
  std::vector<JordEntry> out;
  for (long l = 1; l <= fl; ++l) out.push_back({m, static_cast<int>(to_long(2 * x + 1 - 2 * l))});
  return out;
}

// (a + 1)/2 with a the largest block of m, or 0 / -1 when m has no block and
// is not / is of type.
inline Rational x_from_jord(const Member& m, const DiscreteParameter& p, const std::vector<InertialClass>& classes) {
  const auto& c = classes.at(m.cls);
  if (!c.self_dual) throw InvalidParameter("reducibility point needs a self-dual class");
  int a = of_type(c, m.minus) ? -1 : 0;
  for (const auto& e : p.jord)
    if (e.member == m) a = std::max(a, e.a);
  return make_rational(a + 1, 2);
}

inline Rational first_occurrence_x(int n, int m_zeta) {
  if (m_zeta <= 0 || m_zeta % 2 == 0) throw InvalidParameter("m^zeta must be odd and positive");
  Rational x = make_rational(2 * n - (m_zeta - 1) + 1, 2);
  if (x < 0) x = -x;
  if (!is_integer(x - make_rational(1, 2))) throw std::logic_error("first occurrence point is not a half integer");
  return x;
}

struct SEntry {
  int cls = 0;
  int a_plus = 0;
  int a_minus = 0;
  int m_gl = 0;

  friend auto operator<=>(const SEntry&, const SEntry&) = default;
};

using SChoice = std::vector<SEntry>;  // one entry per self-dual class, in class order

inline int m_O(const InertialClass& c, int a_plus, int a_minus) {
  return staircase_size(a_plus, kappa(c, false)) + staircase_size(a_minus, kappa(c, true));
}

inline std::vector<SEntry> s_entries(const InertialClass& c, int cls, int m) {
  std::vector<SEntry> out;
  for (int ap = 0; staircase_size(ap, kappa(c, false)) <= m; ++ap)
    for (int am = 0; staircase_size(am, kappa(c, true)) <= m; ++am) {
      int rest = m - m_O(c, ap, am);
      if (rest >= 0 && rest % 2 == 0) out.push_back({cls, ap, am, rest / 2});
    }
  return out;
}

inline std::vector<SChoice> enumerate_S(const NormedParameter& p0) {
  validate(p0);
  std::vector<SChoice> out{{}};
  for (std::size_t i = 0; i < p0.classes.size(); ++i) {
    if (!p0.classes[i].self_dual) continue;
    auto entries = s_entries(p0.classes[i], static_cast<int>(i), p0.mult[i]);
    std::vector<SChoice> next;
    for (const auto& s : out)
      for (const auto& e : entries) {
        SChoice t = s;
        t.push_back(e);
        next.push_back(t);
      }
    out = std::move(next);
  }
  return out;
}

inline void check_S(const NormedParameter& p0, const SChoice& s) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < p0.classes.size(); ++i) {
    if (!p0.classes[i].self_dual) continue;
    if (j >= s.size() || s[j].cls != static_cast<int>(i)) throw InvalidParameter("S: missing entry for a self-dual class");
    const auto& e = s[j++];
    if (e.a_plus < 0 || e.a_minus < 0 || e.m_gl < 0) throw InvalidParameter("S: entries must be nonnegative");
    if (p0.mult[i] - 2 * e.m_gl != m_O(p0.classes[i], e.a_plus, e.a_minus))
      throw InvalidParameter("S: size identity fails for class " + p0.classes[i].label);
  }
  if (j != s.size()) throw InvalidParameter("S: entry for a class that is not self-dual");
}

// Jord(phi^S): sp(2k - kappa) for k <= a_+ on rho and k <= a_- on rho_-.
inline DiscreteParameter phi_S(const NormedParameter& p0, const SChoice& s) {
  std::vector<JordEntry> j;
  for (const auto& e : s) {
    const auto& c = p0.classes[e.cls];
    for (int k = 1; k <= e.a_plus; ++k) j.push_back({{e.cls, false}, 2 * k - kappa(c, false)});
    for (int k = 1; k <= e.a_minus; ++k) j.push_back({{e.cls, true}, 2 * k - kappa(c, true)});
  }
  return make_discrete(std::move(j));
}

// An affine Hecke algebra described by its root datum and parameter exponents:
// GL (type A_{rank-1}), SO_odd (type B_rank, last exponent on the short root,
// plus q_i) or SO_even_extended (type D_rank extended by Z/2).
struct HeckePresentation {
  std::string datum_kind;
  int rank = 0;
  std::vector<Rational> param_exponents;
  std::optional<Rational> qi_exponent;
  int scale = 1;
  std::string case_tag;

  bool extended() const { return datum_kind == "SO_even_extended"; }
  std::string datum_label() const {
    if (datum_kind == "GL") return "GL_" + std::to_string(rank);
    if (datum_kind == "SO_odd") return "SO_" + std::to_string(2 * rank + 1);
    return "SO_" + std::to_string(2 * rank);
  }

  friend bool operator==(const HeckePresentation& a, const HeckePresentation& b) {
    return a.datum_kind == b.datum_kind && a.rank == b.rank && a.param_exponents == b.param_exponents &&
           a.qi_exponent == b.qi_exponent;
  }
  friend bool operator<(const HeckePresentation& a, const HeckePresentation& b) {
    return std::tie(a.datum_kind, a.rank, a.param_exponents, a.qi_exponent) <
           std::tie(b.datum_kind, b.rank, b.param_exponents, b.qi_exponent);
  }
};

inline std::string q_power(const Rational& e) {
  if (e == 1) return "q";
  return "q^" + e.get_str();
}

// "q, q, q^2; q" style rendering: simple-root parameters, then q_i.
inline std::string render(const HeckePresentation& h) {
  std::string s;
  for (std::size_t i = 0; i < h.param_exponents.size(); ++i) s += (i ? ", " : "") + q_power(h.param_exponents[i]);
  if (h.qi_exponent) s += "; " + q_power(*h.qi_exponent);
  return s;
}

namespace detail {

inline int d_simple(int rank) { return rank >= 2 ? rank : 0; }

inline HeckePresentation gl_presentation(int m, const Rational& t, const std::string& tag) {
  HeckePresentation h{"GL", m, std::vector<Rational>(std::max(m - 1, 0), t), std::nullopt, 1, tag};
  return h;
}

inline HeckePresentation so_even_extended(int rank, const Rational& t, const std::string& tag) {
  return {"SO_even_extended", rank, std::vector<Rational>(d_simple(rank), t), std::nullopt, 1, tag};
}

inline HeckePresentation so_odd(int rank, const Rational& t, const Rational& special, const Rational& qi,
                                const std::string& tag) {
  HeckePresentation h{"SO_odd", rank, {}, std::nullopt, 1, tag};
  if (rank == 0) return h;
  h.param_exponents.assign(rank - 1, t);
  h.param_exponents.push_back(special);
  h.qi_exponent = qi;
  return h;
}

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace detail

inline HeckePresentation hecke_for_block(const NormedParameter& p0, const SChoice& s, int cls) {
  check_S(p0, s);
  const auto& c = p0.classes.at(cls);
  const int m = p0.mult.at(cls);
  Rational t = c.t;
  HeckePresentation h;
  if (!c.self_dual) {
    h = detail::gl_presentation(m, t, "gl");
  } else {
    const SEntry* e = nullptr;
    for (const auto& x : s)
      if (x.cls == cls) e = &x;
    int kp = kappa(c, false), km = kappa(c, true);
    if (c.type_plus && c.type_minus && e->a_plus == 0 && e->a_minus == 0) {
      h = detail::so_even_extended(m / 2, t, "even-orthogonal-extended");
    } else {
      Rational special = t * (Rational(e->a_plus + e->a_minus + 1) - make_rational(kp + km, 2));
      Rational qi = detail::abs(t * (Rational(e->a_plus - e->a_minus) + make_rational(km - kp, 2)));
      h = detail::so_odd(e->m_gl, t, special, qi, "odd-orthogonal");
    }
  }
  h.scale = c.t;
  return h;
}

enum class ClassicalGroup { SO_odd, O_even, Sp, U, GL };

inline std::string group_label(ClassicalGroup g, int n) {
  switch (g) {
    case ClassicalGroup::SO_odd: return "SO_" + std::to_string(2 * n + 1);
    case ClassicalGroup::O_even: return "O_" + std::to_string(2 * n);
    case ClassicalGroup::Sp: return "Sp_" + std::to_string(2 * n);
    case ClassicalGroup::U: return "U_" + std::to_string(n);
    case ClassicalGroup::GL: return "GL_" + std::to_string(n);
  }
  return "?";
}

// Hecke algebra of the block of the group (SO_{2n+1}, O_{2n}, Sp_{2n}, U_n or
// GL_n) attached to the trivial class and S = (a_+, a_-).
inline HeckePresentation classical_hecke(ClassicalGroup g, int n, int a_plus, int a_minus) {
  if (n < 0 || a_plus < 0 || a_minus < 0) throw InvalidParameter("negative size or exponent");
  if (g == ClassicalGroup::GL) return detail::gl_presentation(n, 1, "GL");
  int mult = 0, kp = 0, km = 0;
  switch (g) {
    case ClassicalGroup::SO_odd: mult = 2 * n; break;
    case ClassicalGroup::O_even: mult = 2 * n, kp = km = 1; break;
    case ClassicalGroup::Sp: mult = 2 * n + 1, kp = km = 1; break;
    case ClassicalGroup::U: mult = n, kp = n % 2, km = 1 - n % 2; break;
    case ClassicalGroup::GL: break;
  }
  int mo = staircase_size(a_plus, kp) + staircase_size(a_minus, km);
  if (mo > mult || (mult - mo) % 2 != 0)
    throw InvalidParameter("(a_+, a_-) = (" + std::to_string(a_plus) + ", " + std::to_string(a_minus) +
                           ") is inconsistent with " + group_label(g, n));
  int rank = (mult - mo) / 2;
  Rational ap = a_plus, am = a_minus;
  std::string tag = group_label(g, n);
  switch (g) {
    case ClassicalGroup::SO_odd: return detail::so_odd(rank, 1, ap + am + 1, detail::abs(ap - am), tag);
    case ClassicalGroup::O_even:
      if (a_plus == 0 && a_minus == 0) return detail::so_even_extended(n, 1, tag);
      return detail::so_odd(rank, 1, ap + am, detail::abs(ap - am), tag);
    case ClassicalGroup::Sp: return detail::so_odd(rank, 1, ap + am, detail::abs(ap - am), tag);
    case ClassicalGroup::U: {
      Rational sgn = n % 2 == 0 ? make_rational(1, 2) : make_rational(-1, 2);
      return detail::so_odd(rank, 1, ap + am + make_rational(1, 2), detail::abs(ap - am + sgn), tag);
    }
    case ClassicalGroup::GL: break;
  }
  throw std::logic_error("unreachable");
}

inline HeckePresentation scaled(HeckePresentation h, int t) {
  for (auto& e : h.param_exponents) e *= t;
  if (h.qi_exponent) *h.qi_exponent *= t;
  h.scale = t;
  return h;
}

struct MatchedGroup {
  ClassicalGroup group;
  int n;  // index as in classical_hecke

  std::string label() const { return group_label(group, n); }
  friend bool operator==(const MatchedGroup&, const MatchedGroup&) = default;
};

// H_rho(m)
inline MatchedGroup classical_match(const InertialClass& c, int m) {
  if (!c.self_dual) return {ClassicalGroup::GL, m};
  if (!c.type_plus && !c.type_minus) {
    if (m % 2 != 0) throw InvalidParameter("m must be even for a class of neither type");
    return {ClassicalGroup::SO_odd, m / 2};
  }
  if (c.type_plus != c.type_minus) return {ClassicalGroup::U, m};
  if (m % 2 == 0) return {ClassicalGroup::O_even, m / 2};
  return {ClassicalGroup::Sp, (m - 1) / 2};
}

// In the U case the arguments are exchanged when the type of rho differs from
// the type of the trivial class of U_m (of type iff m is odd).
inline bool u_swap(const InertialClass& c, int m) { return c.type_plus != (m % 2 == 1); }

inline HeckePresentation classical_side(const NormedParameter& p0, const SChoice& s, int cls) {
  const auto& c = p0.classes.at(cls);
  int m = p0.mult.at(cls);
  MatchedGroup g = classical_match(c, m);
  int ap = 0, am = 0;
  for (const auto& e : s)
    if (e.cls == cls) ap = e.a_plus, am = e.a_minus;
  if (g.group == ClassicalGroup::U && u_swap(c, m)) std::swap(ap, am);
  return scaled(classical_hecke(g.group, g.n, ap, am), c.t);
}

struct Mismatch {
  SChoice s;
  int cls;
  HeckePresentation mp;
  HeckePresentation classical;
};

struct MatchReport {
  std::size_t comparisons = 0;
  std::vector<Mismatch> mismatches;
};

inline MatchReport verify_match(const NormedParameter& p0) {
  MatchReport r;
  for (const auto& s : enumerate_S(p0))
    for (int i = 0; i < static_cast<int>(p0.classes.size()); ++i) {
      HeckePresentation mp = hecke_for_block(p0, s, i);
      HeckePresentation cl = classical_side(p0, s, i);
      ++r.comparisons;
      if (!(mp == cl)) r.mismatches.push_back({s, i, mp, cl});
    }
  return r;
}

struct BlockReport {
  SChoice s;
  DiscreteParameter jord;
  AltChar epsilon;
  int epsilon_z = 1;
  std::vector<HeckePresentation> hecke;  // one per class
  std::vector<MatchedGroup> matches;
};

inline std::vector<BlockReport> enumerate_blocks(const NormedParameter& p0) {
  std::vector<BlockReport> out;
  for (const auto& s : enumerate_S(p0)) {
    DiscreteParameter j = phi_S(p0, s);
    std::vector<HeckePresentation> hs;
    std::vector<MatchedGroup> ms;
    for (int i = 0; i < static_cast<int>(p0.classes.size()); ++i) {
      hs.push_back(hecke_for_block(p0, s, i));
      ms.push_back(classical_match(p0.classes[i], p0.mult[i]));
    }
    for (const auto& e : enumerate_alt_chars(j, p0.classes)) out.push_back({s, j, e, epsilon_Z(e), hs, ms});
  }
  return out;
}

struct SoSplit {
  std::vector<BlockReport> plus;
  std::vector<BlockReport> minus;
};

inline SoSplit split_so(const NormedParameter& p0) {
  SoSplit r;
  for (auto& b : enumerate_blocks(p0)) (b.epsilon_z == 1 ? r.plus : r.minus).push_back(std::move(b));
  return r;
}

struct WeilBlock {
  std::string name;
  SChoice s;
  DiscreteParameter jord;
  HeckePresentation hecke;
  HeckePresentation displayed;
  std::string displayed_text;
  bool discrepancy = false;
};

inline InertialClass trivial_class() { return {"1", 1, 1, true, false, false}; }

inline std::pair<WeilBlock, WeilBlock> weil_example(int n) {
  if (n < 1) throw InvalidParameter("n must be at least 1");
  NormedParameter p0{{trivial_class()}, {2 * n}, n};
  auto block = [&](const std::string& name, int ap, const HeckePresentation& shown, const std::string& text) {
    SChoice s{{0, ap, 0, (2 * n - m_O(p0.classes[0], ap, 0)) / 2}};
    HeckePresentation h = hecke_for_block(p0, s, 0);
    return WeilBlock{name, s, phi_S(p0, s), h, shown, text, !(h == shown)};
  };
  std::string k = std::to_string(n), k1 = std::to_string(n - 1);
  HeckePresentation plus_shown = detail::so_odd(n, 1, 1, 0, "displayed");
  HeckePresentation minus_shown{"SO_odd", n - 1, std::vector<Rational>(n - 1, Rational(1)), Rational(2), 1, "displayed"};
  return {block("omega+", 0, plus_shown, "q, ..., q (" + k + "-times); q^0"),
          block("omega-", 1, minus_shown, "q, ..., q (" + k1 + "-times); q^2")};
}

// Six archetypes: non-self-dual, trivial, symplectic, type of rho_- only,
// both types, orthogonal of dimension 2.
inline std::vector<InertialClass> archetype_pool() {
  return {{"chi", 1, 1, false, false, false},      {"triv", 1, 1, true, false, false},
          {"symp", 2, 1, true, true, false},       {"symp_minus", 2, 2, true, false, true},
          {"symp_both", 2, 2, true, true, true},   {"orth2", 2, 2, true, false, false}};
}

// All normed parameters of Mp_{2n} supported on the pool.
inline std::vector<NormedParameter> enumerate_normed(const std::vector<InertialClass>& pool, int n) {
  std::vector<NormedParameter> out;
  std::vector<int> mult(pool.size(), 0);
  auto weight = [&](std::size_t i) { return pool[i].d * (pool[i].self_dual ? 1 : 2); };
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == pool.size()) {
      if (left != 0) return;
      NormedParameter p{{}, {}, n};
      for (std::size_t j = 0; j < pool.size(); ++j)
        if (mult[j] > 0) p.classes.push_back(pool[j]), p.mult.push_back(mult[j]);
      out.push_back(p);
      return;
    }
    int step = pool[i].self_dual && !pool[i].type_plus ? 2 : 1;
    for (int m = 0; m * weight(i) <= left; m += step) {
      mult[i] = m;
      self(self, i + 1, left - m * weight(i));
    }
    mult[i] = 0;
  };
  rec(rec, 0, 2 * n);
  return out;
}

}  // namespace mhecke
