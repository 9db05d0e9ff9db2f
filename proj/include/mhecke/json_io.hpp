#pragma once

// JSON encoding of the library types.  Rationals are integers or "p/q"
// strings; floating-point literals are rejected.  Objects use sorted keys.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "blocks.hpp"
#include "chamber.hpp"
#include "mpparams.hpp"
#include "rankone.hpp"

namespace mhecke {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "v1";

class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::invalid_argument(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

namespace json_io {

// ---- scalars ----

inline Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline Json to_json(const Rational& r) {
  if (r.get_den() == 1) return integer_json(r.get_num());
  return r.get_str();
}

inline Rational rational_from(const Json& j, const std::string& path) {
  if (j.is_number_float()) throw SchemaError(path, "floating-point literal " + j.dump() + " is not exact");
  if (j.is_number_integer()) return j.is_number_unsigned() ? Rational(j.get<unsigned long>()) : Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected an integer or a \"p/q\" string");
}

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing field");
  return *it;
}

inline int int_from(const Json& j, const std::string& path) {
  if (j.is_number_float()) throw SchemaError(path, "floating-point literal " + j.dump() + " is not exact");
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  long v = j.get<long>();
  if (v < INT32_MIN || v > INT32_MAX) throw SchemaError(path, "integer out of range");
  return static_cast<int>(v);
}

inline bool bool_from(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
  return j.get<bool>();
}

inline std::string string_from(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

inline const Json& array_from(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

inline std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline int int_field(const Json& j, const std::string& key, const std::string& path) {
  return int_from(field(j, key, path), path + "." + key);
}
inline bool bool_field(const Json& j, const std::string& key, const std::string& path, bool def) {
  return j.contains(key) ? bool_from(j[key], path + "." + key) : def;
}

inline Lattice lattice_from(const Json& j, const std::string& path) {
  Lattice v;
  const auto& a = array_from(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(int_from(a[i], at(path, i)));
  return v;
}

inline QVector qvector_from(const Json& j, const std::string& path) {
  QVector v;
  const auto& a = array_from(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(rational_from(a[i], at(path, i)));
  return v;
}

inline Json to_json(const QVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

// ---- polynomials ----

// [[u-exponent, num, den], ...]
inline Json to_json(const QLaurent& c) {
  Json a = Json::array();
  for (const auto& [k, v] : c.terms()) a.push_back({k, integer_json(v.get_num()), integer_json(v.get_den())});
  return a;
}

inline Json to_json(const GroupAlgebraElement& g) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : g.terms()) terms.push_back({{"exp", lambda}, {"coeffs", to_json(c)}});
  return {{"rank", g.rank()}, {"terms", terms}};
}

inline QLaurent qlaurent_from(const Json& j, const std::string& path) {
  QLaurent c;
  const auto& a = array_from(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& t = array_from(a[i], at(path, i));
    if (t.size() != 3) throw SchemaError(at(path, i), "expected [u-exponent, num, den]");
    Rational num = rational_from(t[1], at(path, i) + "[1]"), den = rational_from(t[2], at(path, i) + "[2]");
    if (!is_integer(num) || !is_integer(den) || den == 0) throw SchemaError(at(path, i), "bad coefficient");
    c.add_term(int_from(t[0], at(path, i) + "[0]"), num / den);
  }
  return c;
}

inline GroupAlgebraElement group_algebra_from(const Json& j, const std::string& path) {
  int rank = int_field(j, "rank", path);
  if (rank <= 0) throw SchemaError(path + ".rank", "must be positive");
  GroupAlgebraElement g(rank);
  const auto& terms = array_from(field(j, "terms", path), path + ".terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string p = at(path + ".terms", i);
    Lattice l = lattice_from(field(terms[i], "exp", p), p + ".exp");
    if (static_cast<int>(l.size()) != rank) throw SchemaError(p + ".exp", "length differs from rank");
    g.add_term(l, qlaurent_from(field(terms[i], "coeffs", p), p + ".coeffs"));
  }
  return g;
}

inline Json to_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return terms;
}

// Variables of rank-one rational functions are X and u (q = u^4).
inline Json to_json(const RationalFunction& f) {
  return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}, {"text", f.to_string({"X", "u"})}};
}

// ---- root data ----

inline Json to_json(const SignedPerm& w) { return {{"perm", w.perm}, {"sign", w.sign}}; }

inline SignedPerm signed_perm_from(const Json& j, const std::string& path, int rank) {
  SignedPerm w{lattice_from(field(j, "perm", path), path + ".perm"), lattice_from(field(j, "sign", path), path + ".sign")};
  if (w.rank() != rank || static_cast<int>(w.sign.size()) != rank)
    throw SchemaError(path, "expected length " + std::to_string(rank));
  std::vector<bool> seen(rank, false);
  for (int i = 0; i < rank; ++i) {
    if (w.perm[i] < 0 || w.perm[i] >= rank || seen[w.perm[i]]) throw SchemaError(path + ".perm", "not a permutation");
    seen[w.perm[i]] = true;
    if (w.sign[i] != 1 && w.sign[i] != -1) throw SchemaError(path + ".sign", "signs must be +1 or -1");
  }
  return w;
}

inline Json to_json(const Component& c) {
  return {{"type", c.type}, {"size", c.size}, {"t", c.t}, {"offset", c.offset}, {"label", c.label()}};
}

inline Json to_json(const BasedRootDatum& d) {
  Json comps = Json::array();
  for (const auto& c : d.components()) comps.push_back(to_json(c));
  Json simple = Json::array();
  for (int i = 0; i < d.num_simple(); ++i)
    simple.push_back({{"root", d.simple_root(i)}, {"coroot", d.simple_coroot(i)}});
  Json j{{"rank", d.rank()}, {"components", comps}, {"type_label", d.type_label()}, {"simple", simple}};
  if (d.explicit_roots()) {
    Json roots = Json::array();
    for (const auto& r : d.roots()) roots.push_back({{"root", r.root}, {"coroot", r.coroot}});
    j["roots"] = {{"roots", roots}, {"base", d.base()}};
  }
  return j;
}

inline std::vector<Component> components_from(const Json& j, const std::string& path) {
  std::vector<Component> out;
  const auto& a = array_from(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string p = at(path, i);
    Component c{string_from(field(a[i], "type", p), p + ".type"), int_field(a[i], "size", p), 1, -1};
    if (a[i].contains("t")) c.t = int_field(a[i], "t", p);
    if (a[i].contains("offset")) c.offset = int_field(a[i], "offset", p);
    out.push_back(c);
  }
  return out;
}

inline BasedRootDatum datum_from(const Json& j, const std::string& path) {
  int rank = int_field(j, "rank", path);
  std::vector<Component> comps;
  if (j.contains("components")) comps = components_from(j["components"], path + ".components");
  try {
    if (j.contains("roots")) {
      std::string p = path + ".roots";
      const auto& rs = array_from(field(j["roots"], "roots", p), p + ".roots");
      std::vector<RootPair> roots;
      for (std::size_t i = 0; i < rs.size(); ++i) {
        std::string q = at(p + ".roots", i);
        roots.push_back({lattice_from(field(rs[i], "root", q), q + ".root"),
                         lattice_from(field(rs[i], "coroot", q), q + ".coroot")});
      }
      Lattice base = lattice_from(field(j["roots"], "base", p), p + ".base");
      return BasedRootDatum(rank, roots, base, comps);
    }
    return BasedRootDatum(rank, comps);
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

// ---- Hecke algebras ----

inline Json to_json(const HeckeParams& p) {
  Json special = Json::array();
  for (const auto& [i, e] : p.special) special.push_back({{"index", i}, {"exponent", to_json(e)}});
  Json alpha = Json::array();
  for (const auto& a : p.alpha_exponents) alpha.push_back(to_json(a));
  return {{"alpha_exponents", alpha}, {"special", special}};
}

inline HeckeParams params_from(const Json& j, const std::string& path) {
  HeckeParams p;
  p.alpha_exponents = qvector_from(field(j, "alpha_exponents", path), path + ".alpha_exponents");
  if (j.contains("special")) {
    const auto& s = array_from(j["special"], path + ".special");
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::string q = at(path + ".special", i);
      p.special[int_field(s[i], "index", q)] = rational_from(field(s[i], "exponent", q), q + ".exponent");
    }
  }
  return p;
}

inline Json to_json(const HeckeElement& h) {
  Json terms = Json::array();
  for (const auto& [w, g] : h.terms()) terms.push_back({{"w", to_json(w)}, {"z", to_json(g)}});
  return {{"terms", terms}};
}

inline Json to_json(const ExtendedAlgebra& e) {
  Json r = Json::array();
  for (const auto& x : e.elements()) r.push_back(to_json(x));
  Json cocycle = Json::array();
  for (const auto& [k, v] : e.cocycle())
    cocycle.push_back({{"r", to_json(k.first)}, {"s", to_json(k.second)}, {"value", to_json(v)}});
  return {{"r_group", r}, {"cocycle", cocycle}};
}

inline Json to_json(const BlockHecke& b) {
  Json j{{"datum", to_json(b.hecke->datum())}, {"params", to_json(b.hecke->params())}};
  if (b.extended) j["extended"] = to_json(*b.extended);
  std::vector<int> trivial = b.hecke->trivial_qi();
  if (!trivial.empty()) j["qi_trivial"] = trivial;
  return j;
}

// ---- chamber ----

inline ModuleExponents exponents_from(const Json& j, const std::string& path) {
  ModuleExponents out;
  const auto& a = array_from(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string p = at(path, i);
    ModuleExponent e{0, qvector_from(field(a[i], "nu", p), p + ".nu")};
    if (a[i].contains("tag")) e.tag = rational_from(a[i]["tag"], p + ".tag");
    out.push_back(e);
  }
  return out;
}

// ---- rank one ----

inline Json to_json(const MuPoint& m) { return {{"sign", m.sign}, {"q_exp", to_json(m.q_exp)}, {"mult", m.mult}}; }

inline Json to_json(const std::vector<MuPoint>& v) {
  Json a = Json::array();
  for (const auto& m : v) a.push_back(to_json(m));
  return a;
}

// ---- blocks ----

inline CuspidalLine line_from(const Json& j, const std::string& path) {
  CuspidalLine l;
  l.d = int_field(j, "d", path);
  l.k = int_field(j, "k", path);
  l.gl_singular = bool_field(j, "gl_singular", path, false);
  l.boundary_pole = bool_field(j, "boundary_pole", path, false);
  l.self_dual_T = bool_field(j, "self_dual_T", path, false);
  l.tau_T = bool_field(j, "tau_T", path, false);
  return l;
}

inline BlockDescriptor descriptor_from(const Json& j, const std::string& path) {
  BlockDescriptor bd;
  try {
    bd.ambient = parse_ambient(string_from(field(j, "ambient", path), path + ".ambient"));
  } catch (const InvalidDescriptor& e) {
    throw SchemaError(path + ".ambient", e.what());
  }
  bd.h_rank = int_field(j, "h_rank", path);
  const auto& lines = array_from(field(j, "lines", path), path + ".lines");
  for (std::size_t i = 0; i < lines.size(); ++i) bd.lines.push_back(line_from(lines[i], at(path + ".lines", i)));
  if (j.contains("r_extra")) {
    const auto& r = array_from(j["r_extra"], path + ".r_extra");
    for (std::size_t i = 0; i < r.size(); ++i) bd.r_extra.push_back(signed_perm_from(r[i], at(path + ".r_extra", i), bd.rank()));
  }
  return bd;
}

inline Json to_json(const CuspidalLine& l) {
  return {{"d", l.d},
          {"k", l.k},
          {"gl_singular", l.gl_singular},
          {"boundary_pole", l.boundary_pole},
          {"self_dual_T", l.self_dual_T},
          {"tau_T", l.tau_T}};
}

inline Json to_json(const BlockDescriptor& bd) {
  Json lines = Json::array();
  for (const auto& l : bd.lines) lines.push_back(to_json(l));
  Json j{{"ambient", ambient_name(bd.ambient)}, {"h_rank", bd.h_rank}, {"lines", lines}};
  if (!bd.r_extra.empty()) {
    Json r = Json::array();
    for (const auto& w : bd.r_extra) r.push_back(to_json(w));
    j["r_extra"] = r;
  }
  return j;
}

inline Json to_json(const ClassifiedBlock& cb) {
  Json comps = Json::array();
  for (const auto& c : cb.components)
    comps.push_back({{"line", c.line}, {"type_label", c.component.label()}, {"base", c.base_labels}, {"roots", c.base}});
  Json gens = Json::array();
  for (const auto& r : cb.r_generators) gens.push_back(to_json(r));
  return {{"descriptor", to_json(cb.descriptor)},
          {"components", comps},
          {"r_generators", gens},
          {"r_extra_supplied", cb.r_extra_supplied},
          {"W_O_order", cb.w_o_order},
          {"R_order", cb.r_order},
          {"WMO_order", cb.wmo_order}};
}

inline std::vector<RootInvariants> invariants_from(const Json& j, const std::string& path) {
  std::vector<RootInvariants> out;
  const auto& a = array_from(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string p = at(path, i);
    RootInvariants r{rational_from(field(a[i], "a", p), p + ".a"), 0};
    if (a[i].contains("b")) r.b = rational_from(a[i]["b"], p + ".b");
    out.push_back(r);
  }
  return out;
}

// ---- metaplectic parameters ----

inline NormedParameter normed_from(const Json& j, const std::string& path) {
  NormedParameter p;
  p.n = int_field(j, "n", path);
  const auto& cs = array_from(field(j, "classes", path), path + ".classes");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string q = at(path + ".classes", i);
    InertialClass c;
    c.label = cs[i].contains("label") ? string_from(cs[i]["label"], q + ".label") : "rho" + std::to_string(i + 1);
    c.d = int_field(cs[i], "d", q);
    c.t = cs[i].contains("t") ? int_field(cs[i], "t", q) : 1;
    c.self_dual = bool_field(cs[i], "self_dual", q, false);
    c.type_plus = bool_field(cs[i], "type_plus", q, false);
    c.type_minus = bool_field(cs[i], "type_minus", q, false);
    p.classes.push_back(c);
    p.mult.push_back(int_field(cs[i], "multiplicity", q));
  }
  try {
    validate(p);
  } catch (const InvalidParameter& e) {
    throw SchemaError(path, e.what());
  }
  return p;
}

inline Json to_json(const InertialClass& c) {
  return {{"label", c.label},       {"d", c.d},
          {"t", c.t},               {"self_dual", c.self_dual},
          {"type_plus", c.type_plus}, {"type_minus", c.type_minus}};
}

inline Json to_json(const NormedParameter& p) {
  Json cs = Json::array();
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    Json c = to_json(p.classes[i]);
    c["multiplicity"] = p.mult[i];
    cs.push_back(c);
  }
  return {{"n", p.n}, {"classes", cs}};
}

inline Json to_json(const HeckePresentation& h) {
  Json e = Json::array();
  for (const auto& x : h.param_exponents) e.push_back(to_json(x));
  Json j{{"datum_kind", h.datum_kind},
         {"datum", h.datum_label()},
         {"rank", h.rank},
         {"param_exponents", e},
         {"scale", h.scale},
         {"case", h.case_tag},
         {"extended", h.extended()},
         {"rendered", render(h)}};
  j["qi_exponent"] = h.qi_exponent ? to_json(*h.qi_exponent) : Json(nullptr);
  if (h.qi_exponent && *h.qi_exponent == 0) j["qi_trivial"] = true;
  return j;
}

inline Json s_to_json(const SChoice& s, const NormedParameter& p0) {
  Json a = Json::array();
  for (const auto& e : s)
    a.push_back({{"class", p0.classes.at(e.cls).label}, {"a_plus", e.a_plus}, {"a_minus", e.a_minus}, {"m_gl", e.m_gl}});
  return a;
}

inline Json jord_to_json(const DiscreteParameter& p, const std::vector<InertialClass>& classes) {
  Json a = Json::array();
  for (const auto& e : p.jord)
    a.push_back({{"class", classes.at(e.member.cls).label}, {"member", e.member.minus ? "minus" : "base"}, {"a", e.a}});
  return a;
}

inline Json to_json(const BlockReport& b, const NormedParameter& p0) {
  Json hs = Json::array(), ms = Json::array();
  for (const auto& h : b.hecke) hs.push_back(to_json(h));
  for (const auto& m : b.matches) ms.push_back(m.label());
  return {{"S", s_to_json(b.s, p0)},
          {"jord", jord_to_json(b.jord, p0.classes)},
          {"epsilon", b.epsilon},
          {"epsilon_Z", b.epsilon_z},
          {"hecke", hs},
          {"classical_match", ms}};
}

inline Json to_json(const MatchReport& r, const NormedParameter& p0) {
  Json mm = Json::array();
  for (const auto& m : r.mismatches)
    mm.push_back({{"S", s_to_json(m.s, p0)},
                  {"class", p0.classes.at(m.cls).label},
                  {"mp", to_json(m.mp)},
                  {"classical", to_json(m.classical)}});
  return {{"parameter", to_json(p0)}, {"comparisons", r.comparisons}, {"mismatches", mm}};
}

inline Json to_json(const WeilBlock& w, const NormedParameter& p0) {
  return {{"name", w.name},
          {"S", s_to_json(w.s, p0)},
          {"jord", jord_to_json(w.jord, p0.classes)},
          {"hecke", to_json(w.hecke)},
          {"displayed", w.displayed_text},
          {"discrepancy", w.discrepancy}};
}

// ---- files ----

inline Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path, std::string("malformed JSON: ") + e.what());
  }
}

inline void check_schema(const Json& j, const std::string& path) {
  if (j.contains("schema") && j["schema"] != kSchema)
    throw SchemaError(path + ".schema", "unsupported schema " + j["schema"].dump());
}

}  // namespace json_io
}  // namespace mhecke
