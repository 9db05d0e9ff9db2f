#pragma once

// Command-line driver.  Every verb writes one JSON document; exit status is
// 0 when all checks pass, 1 on a verification failure and 2 on bad input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "sampling.hpp"

namespace mhecke::cli {

enum ExitCode { kOk = 0, kFailed = 1, kBadInput = 2 };

struct Options {
  std::string out_path;
  bool pretty = false;
  int max_rank = 8;
};

class VerbResult {
 public:
  VerbResult(Json j, bool ok) : json(std::move(j)), passed(ok) {}
  Json json;
  bool passed;
};

// ---- grids ----

// "a,b,c" or "lo..hi" (steps of 1/2); entries are integers, p/q or decimals.
inline std::vector<Rational> parse_grid(const std::string& text) {
  auto value = [](std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s.find('/') != std::string::npos ? parse_rational(s) : parse_decimal(s);
  };
  std::vector<Rational> out;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    Rational lo = value(text.substr(0, dots)), hi = value(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("grid: empty range '" + text + "'");
    for (Rational x = lo; x <= hi; x += make_rational(1, 2)) out.push_back(x);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(value(item));
  if (out.empty()) throw std::invalid_argument("grid: no values");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- hecke-check ----

struct HeckeCase {
  std::string label;
  BasedRootDatum datum;
  HeckeParams params;
};

inline std::vector<HeckeCase> default_hecke_cases() {
  return {
      {"A1", BasedRootDatum(2, {{"A", 2, 1, 0}}), {{1}, {}}},
      {"A2", BasedRootDatum(3, {{"A", 3, 1, 0}}), {{1, 1}, {}}},
      {"B2", BasedRootDatum(2, {{"B", 2, 1, 0}}), {{1, 2}, {{1, 1}}}},
      {"C2", BasedRootDatum(2, {{"C", 2, 1, 0}}), {{1, 2}, {}}},
      {"A1xA1", BasedRootDatum(4, {{"A", 2, 1, 0}, {"A", 2, 1, 2}}), {{1, 2}, {}}},
  };
}

inline Json check_hecke_case(const HeckeCase& c, int samples, unsigned seed, bool& ok) {
  auto alg = HeckeAlgebra::create(c.datum, c.params);
  const auto& d = alg->datum();
  Json quad = Json::array();
  for (int i = 0; i < d.num_simple(); ++i) {
    bool q = quadratic_relation_holds(alg, i);
    ok = ok && q;
    quad.push_back(q);
  }
  Json braid = Json::array();
  for (int i = 0; i < d.num_simple(); ++i)
    for (int j = i + 1; j < d.num_simple(); ++j) {
      bool b = braid_relation_holds(alg, i, j);
      ok = ok && b;
      braid.push_back({{"i", i}, {"j", j}, {"order", braid_order(i, j, d)}, {"ok", b}});
    }
  auto group = weyl_enumerate(d);
  Sampler s(seed);
  int failures = 0;
  for (int k = 0; k < samples; ++k) {
    HeckeElement x = s.hecke(alg, group), y = s.hecke(alg, group), z = s.hecke(alg, group);
    if (!((x * y) * z == x * (y * z))) ++failures;
  }
  ok = ok && failures == 0;
  Json center = Json::array();
  std::set<Lattice> seen;
  Lattice lambda(d.rank(), -1);
  while (true) {
    GroupAlgebraElement o = orbit_sum(d, lambda);
    Lattice key = o.terms().begin()->first;
    if (seen.insert(key).second) {
      bool central = is_central(hecke_lattice(alg, o));
      ok = ok && central;
      center.push_back({{"lambda", lambda}, {"central", central}});
    }
    int i = 0;
    while (i < d.rank() && lambda[i] == 1) lambda[i++] = -1;
    if (i == d.rank()) break;
    ++lambda[i];
  }
  Json j{{"label", c.label},
         {"datum", json_io::to_json(d)},
         {"params", json_io::to_json(c.params)},
         {"quadratic", quad},
         {"braid", braid},
         {"associativity", {{"samples", samples}, {"seed", seed}, {"failures", failures}}},
         {"center", center}};
  if (d.num_simple() > 0) {
    Lattice e(d.rank(), 0);
    e[0] = 1;
    bool witness = !is_central(hecke_Z(alg, e));
    ok = ok && witness;
    j["noncentral_witness"] = {{"lambda", e}, {"detected", witness}};
  }
  return j;
}

inline VerbResult hecke_check(const std::string& input, const Options&) {
  std::vector<HeckeCase> cases;
  int samples = 100;
  unsigned seed = 1;
  if (input.empty()) {
    cases = default_hecke_cases();
  } else {
    Json j = json_io::read_file(input);
    json_io::check_schema(j, "$");
    if (j.contains("samples")) samples = json_io::int_from(j["samples"], "$.samples");
    if (j.contains("seed")) seed = static_cast<unsigned>(json_io::int_from(j["seed"], "$.seed"));
    BasedRootDatum d = json_io::datum_from(json_io::field(j, "datum", "$"), "$.datum");
    HeckeParams p = json_io::params_from(json_io::field(j, "params", "$"), "$.params");
    cases.push_back({j.contains("label") ? json_io::string_from(j["label"], "$.label") : d.type_label(), d, p});
  }
  bool ok = true;
  Json results = Json::array();
  for (const auto& c : cases) {
    try {
      results.push_back(check_hecke_case(c, samples, seed, ok));
    } catch (const InvalidParams& e) {
      throw SchemaError("$.params", e.what());
    }
  }
  return {{{"schema", kSchema}, {"verb", "hecke-check"}, {"cases", results}, {"ok", ok}}, ok};
}

// ---- rankone-verify ----

inline VerbResult rankone_verify(const std::string& grid_spec, const Options&) {
  std::vector<Rational> grid = parse_grid(grid_spec.empty() ? "1/2,1,3/2,2,3" : grid_spec);
  Json results = Json::array();
  bool ok = true;
  for (const auto& a : grid)
    for (const auto& b : grid) {
      if (b > a || a + b == 0 || b < 0) continue;
      MuFunction mu = mu_build(a, b);
      auto zp = mu_zeros_poles(mu);
      for (int e1 : {1, -1})
        for (int em1 : {1, -1}) {
          bool q = verify_quadratic(a, b, e1, em1);
          ok = ok && q;
          results.push_back({{"a", json_io::to_json(a)},
                             {"b", json_io::to_json(b)},
                             {"eps1", e1},
                             {"epsm1", em1},
                             {"quadratic_ok", q},
                             {"mu_zeros", json_io::to_json(zp.zeros)},
                             {"mu_poles", json_io::to_json(zp.poles)}});
        }
    }
  return {{{"schema", kSchema}, {"verb", "rankone-verify"}, {"results", results}, {"ok", ok}}, ok};
}

// ---- blocks-classify ----

inline VerbResult blocks_classify(const std::string& input, const Options& opt) {
  if (input.empty()) throw SchemaError("$", "an input descriptor file is required");
  Json j = json_io::read_file(input);
  json_io::check_schema(j, "$");
  const bool nested = j.contains("descriptor");
  const Json& dj = nested ? j["descriptor"] : j;
  std::string path = nested ? "$.descriptor" : "$";
  BlockDescriptor bd = json_io::descriptor_from(dj, path);
  if (bd.rank() > opt.max_rank)
    throw SchemaError(path + ".lines", "rank " + std::to_string(bd.rank()) + " exceeds --max-rank");
  ClassifiedBlock cb;
  try {
    cb = classify_full(bd);
  } catch (const InvalidDescriptor& e) {
    throw SchemaError(path, std::string("descriptor invariant violated: ") + e.what());
  }
  Json out{{"schema", kSchema}, {"verb", "blocks-classify"}, {"block", json_io::to_json(cb)}};
  bool ok = cb.wmo_order == cb.w_o_order * cb.r_order;
  if (j.contains("invariants")) {
    auto inv = json_io::invariants_from(j["invariants"], "$.invariants");
    std::vector<int> t;
    if (j.contains("t")) t = json_io::lattice_from(j["t"], "$.t");
    try {
      out["hecke"] = json_io::to_json(hecke_from_block(cb, inv, t));
    } catch (const InvalidInvariants& e) {
      throw SchemaError("$.invariants", e.what());
    }
  }
  out["ok"] = ok;
  return {out, ok};
}

// ---- metaplectic verbs ----

inline NormedParameter read_normed(const std::string& input, const Options& opt) {
  Json j = json_io::read_file(input);
  json_io::check_schema(j, "$");
  NormedParameter p = json_io::normed_from(j, "$");
  if (p.n > opt.max_rank) throw SchemaError("$.n", "n exceeds --max-rank");
  return p;
}

inline VerbResult mp_enumerate(const std::string& input, const Options& opt) {
  if (input.empty()) throw SchemaError("$", "an input parameter file is required");
  NormedParameter p0 = read_normed(input, opt);
  SoSplit split = split_so(p0);
  Json blocks = Json::array();
  for (const auto* part : {&split.plus, &split.minus})
    for (const auto& b : *part) blocks.push_back(json_io::to_json(b, p0));
  Json out{{"schema", kSchema},
           {"verb", "mp-enumerate"},
           {"parameter", json_io::to_json(p0)},
           {"s_choices", enumerate_S(p0).size()},
           {"blocks", blocks},
           {"split", {{"SO+", split.plus.size()}, {"SO-", split.minus.size()}, {"total", blocks.size()}}},
           {"ok", true}};
  return {out, true};
}

inline VerbResult mp_match(const std::string& input, const Options& opt) {
  std::vector<NormedParameter> params;
  if (!input.empty()) {
    params.push_back(read_normed(input, opt));
  } else {
    int top = std::min(opt.max_rank, 3);
    for (int n = 1; n <= top; ++n)
      for (auto& p : enumerate_normed(archetype_pool(), n)) params.push_back(std::move(p));
  }
  std::size_t comparisons = 0;
  Json mismatches = Json::array();
  for (const auto& p : params) {
    MatchReport r = verify_match(p);
    comparisons += r.comparisons;
    if (!r.mismatches.empty()) mismatches.push_back(json_io::to_json(r, p));
  }
  bool ok = mismatches.empty();
  return {{{"schema", kSchema},
           {"verb", "mp-match"},
           {"parameters", params.size()},
           {"comparisons", comparisons},
           {"mismatches", mismatches},
           {"ok", ok}},
          ok};
}

inline VerbResult weil(int n, const Options&) {
  if (n < 1) throw SchemaError("--n", "must be at least 1");
  auto [plus, minus] = weil_example(n);
  NormedParameter p0{{trivial_class()}, {2 * n}, n};
  return {{{"schema", kSchema},
           {"verb", "weil-example"},
           {"n", n},
           {"blocks", {json_io::to_json(plus, p0), json_io::to_json(minus, p0)}},
           {"ok", true}},
          true};
}

// ---- dispatch ----

inline int emit(const VerbResult& r, const Options& opt, std::ostream& out, std::ostream& err) {
  std::string text = r.json.dump(opt.pretty ? 2 : -1) + "\n";
  if (opt.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(opt.out_path);
    if (!f) {
      err << "error: cannot write " << opt.out_path << "\n";
      return kBadInput;
    }
    f << text;
  }
  return r.passed ? kOk : kFailed;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hecke algebra and metaplectic parameter toolkit", "mhecke"};
  app.require_subcommand(1);
  Options opt;
  std::string input, grid;
  int n = 2;
  app.add_option("--out", opt.out_path, "Write the JSON report to this path");
  app.add_flag("--pretty", opt.pretty, "Indent the JSON report");
  app.add_option("--max-rank", opt.max_rank, "Largest rank accepted from input files")->check(CLI::PositiveNumber);

  auto* hc = app.add_subcommand("hecke-check", "Relations, associativity and center on Hecke algebras");
  hc->add_option("input", input, "Datum and parameter JSON (default: built-in A1, A2, B2, C2, A1xA1)");
  auto* rv = app.add_subcommand("rankone-verify", "Quadratic relation of T_s over a grid of (a, b)");
  rv->add_option("--grid", grid, "Comma list or lo..hi in steps of 1/2");
  auto* bc = app.add_subcommand("blocks-classify", "Classify a block descriptor");
  bc->add_option("input", input, "Block descriptor JSON")->required();
  auto* me = app.add_subcommand("mp-enumerate", "Blocks of a normed parameter of Mp_2n");
  me->add_option("input", input, "Normed parameter JSON")->required();
  auto* mm = app.add_subcommand("mp-match", "Compare metaplectic and classical Hecke algebras");
  mm->add_option("input", input, "Normed parameter JSON (default: sweep the archetype pool)");
  auto* we = app.add_subcommand("weil-example", "Blocks of the even and odd Weil representations");
  we->add_option("--n", n, "Metaplectic rank")->default_val(2);
  for (auto* s : {hc, rv, bc, me, mm, we}) s->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (hc->parsed()) return emit(hecke_check(input, opt), opt, out, err);
    if (rv->parsed()) return emit(rankone_verify(grid, opt), opt, out, err);
    if (bc->parsed()) return emit(blocks_classify(input, opt), opt, out, err);
    if (me->parsed()) return emit(mp_enumerate(input, opt), opt, out, err);
    if (mm->parsed()) return emit(mp_match(input, opt), opt, out, err);
    if (we->parsed()) return emit(weil(n, opt), opt, out, err);
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace mhecke::cli
