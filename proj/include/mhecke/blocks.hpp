#pragma once

// Root systems Sigma_{O,mu}, W_O and R(O) of a Bernstein block, computed from
// the classification flags of its cuspidal lines.  Line i occupies k_i
// consecutive coordinates; alpha_{i,j} = e_j - e_{j+1} for j < k_i and
// alpha_{i,k_i} is e_{k_i} (or 2 e_{k_i} in type C).

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "extended.hpp"

namespace mhecke {

class InvalidDescriptor : public std::invalid_argument {
 public:
  explicit InvalidDescriptor(const std::string& w) : std::invalid_argument(w) {}
};

class InvalidInvariants : public std::invalid_argument {
 public:
  explicit InvalidInvariants(const std::string& w) : std::invalid_argument(w) {}
};

enum class Ambient { Mp, SO_odd, SO_even, O_even, U, GL };

inline std::string ambient_name(Ambient a) {
  switch (a) {
    case Ambient::Mp: return "Mp";
    case Ambient::SO_odd: return "SO_odd";
    case Ambient::SO_even: return "SO_even";
    case Ambient::O_even: return "O_even";
    case Ambient::U: return "U";
    case Ambient::GL: return "GL";
  }
  return "?";
}

inline Ambient parse_ambient(const std::string& s) {
  for (Ambient a : {Ambient::Mp, Ambient::SO_odd, Ambient::SO_even, Ambient::O_even, Ambient::U, Ambient::GL})
    if (ambient_name(a) == s) return a;
  throw InvalidDescriptor("unknown ambient '" + s + "'");
}

struct CuspidalLine {
  int d = 1;
  int k = 1;
  bool gl_singular = false;
  bool boundary_pole = false;
  bool self_dual_T = false;
  bool tau_T = false;

  friend bool operator==(const CuspidalLine&, const CuspidalLine&) = default;
};

struct BlockDescriptor {
  Ambient ambient = Ambient::Mp;
  int h_rank = 0;
  std::vector<CuspidalLine> lines;
  std::vector<SignedPerm> r_extra;  // caller-supplied generators of R(O)_J

  int rank() const {
    int r = 0;
    for (const auto& l : lines) r += l.k;
    return r;
  }
  int offset(std::size_t line) const {
    int o = 0;
    for (std::size_t i = 0; i < line; ++i) o += lines[i].k;
    return o;
  }
};

// Lines whose last-coordinate flip enters R(O)_{I'} (even orthogonal, special).
inline bool in_i_prime(const BlockDescriptor& bd, const CuspidalLine& l) {
  return bd.ambient == Ambient::SO_even && l.d % 2 == 1 && (bd.h_rank > 0 || l.d != 1) && l.self_dual_T && !l.tau_T;
}

inline void validate(const BlockDescriptor& bd) {
  if (bd.lines.empty()) throw InvalidDescriptor("lines: at least one cuspidal line is required");
  if (bd.h_rank < 0) throw InvalidDescriptor("h_rank: must be nonnegative");
  if (bd.ambient == Ambient::SO_even && bd.h_rank == 1) throw InvalidDescriptor("h_rank: d = 1 is excluded for SO_even");
  if (bd.ambient == Ambient::GL && bd.h_rank != 0) throw InvalidDescriptor("h_rank: GL ambient has no H factor");
  for (std::size_t i = 0; i < bd.lines.size(); ++i) {
    const auto& l = bd.lines[i];
    std::string at = "lines[" + std::to_string(i) + "]";
    if (l.d < 1) throw InvalidDescriptor(at + ".d: must be positive");
    if (l.k < 1) throw InvalidDescriptor(at + ".k: must be positive");
    if (l.boundary_pole && !l.self_dual_T) throw InvalidDescriptor(at + ": boundary_pole requires self_dual_T");
    if (bd.ambient == Ambient::GL && l.boundary_pole) throw InvalidDescriptor(at + ": GL ambient has no boundary root");
  }
  for (const auto& r : bd.r_extra)
    if (r.rank() != bd.rank()) throw InvalidDescriptor("r_extra: generator of wrong rank");
  // An even product of last-coordinate flips would move the simple root
  // e_{k-1} - e_k of a singular A-type line to e_{k-1} + e_k.
  int i_prime = 0;
  bool singular_a = false;
  for (const auto& l : bd.lines)
    if (in_i_prime(bd, l)) {
      ++i_prime;
      singular_a = singular_a || (l.gl_singular && l.k >= 2);
    }
  if (i_prime >= 2 && singular_a)
    throw InvalidDescriptor("lines: a gl_singular line with k >= 2 cannot carry the even flips of R(O)_{I'}");
}

struct BlockComponent {
  int line;
  Component component;  // type, size and coordinates
  std::vector<std::string> base_labels;
  std::vector<Lattice> base;
};

struct ClassifiedBlock {
  BlockDescriptor descriptor;
  std::vector<BlockComponent> components;
  std::vector<SignedPerm> r_generators;
  bool r_extra_supplied = false;
  long long w_o_order = 1;
  long long r_order = 1;
  long long wmo_order = 1;

  BasedRootDatum datum() const {
    std::vector<Component> cs;
    for (const auto& c : components) cs.push_back(c.component);
    return BasedRootDatum(descriptor.rank(), cs);
  }
};

namespace detail {

inline std::string alpha_label(int line, int j) {
  return "a[" + std::to_string(line + 1) + "," + std::to_string(j) + "]";
}

inline Lattice e_vec(int rank, int i, int c = 1) {
  Lattice v(rank, 0);
  v[i] = c;
  return v;
}

inline BlockComponent make_component(int line, const std::string& type, int size, int offset, int rank) {
  BlockComponent bc{line, {type, size, 1, offset}, {}, {}};
  if (type == "empty" || (type == "D" && size == 1)) return bc;
  int last = offset + size - 1;
  for (int j = 0; j + 1 < size; ++j) {
    Lattice v(rank, 0);
    v[offset + j] = 1;
    v[offset + j + 1] = -1;
    bc.base.push_back(v);
    bc.base_labels.push_back(alpha_label(line, j + 1));
  }
  if (type == "B") {
    bc.base.push_back(e_vec(rank, last));
    bc.base_labels.push_back(alpha_label(line, size));
  } else if (type == "C") {
    bc.base.push_back(e_vec(rank, last, 2));
    bc.base_labels.push_back("2" + alpha_label(line, size));
  } else if (type == "D") {
    Lattice v(rank, 0);
    v[last - 1] = 1;
    v[last] = 1;
    bc.base.push_back(v);
    bc.base_labels.push_back(alpha_label(line, size - 1) + "+2" + alpha_label(line, size));
  }
  return bc;
}

// Transposition of coordinates i and i+1.
inline SignedPerm swap_next(int rank, int i) {
  SignedPerm w = SignedPerm::identity(rank);
  w.perm[i] = i + 1;
  w.perm[i + 1] = i;
  return w;
}

inline SignedPerm flip(int rank, int i) {
  SignedPerm w = SignedPerm::identity(rank);
  w.sign[i] = -1;
  return w;
}

inline bool even_orthogonal(Ambient a) { return a == Ambient::SO_even || a == Ambient::O_even; }

// tau^T ~ tau enters only for even orthogonal ambients with d > 0 and d_i odd.
inline bool tau_consulted(const BlockDescriptor& bd, const CuspidalLine& l) {
  return even_orthogonal(bd.ambient) && bd.h_rank > 0 && l.d % 2 == 1;
}

inline bool long_boundary(const BlockDescriptor& bd) { return bd.h_rank > 0 || bd.ambient == Ambient::SO_odd; }

}  // namespace detail

inline ClassifiedBlock classify(const BlockDescriptor& bd) {
  using namespace detail;
  validate(bd);
  ClassifiedBlock cb;
  cb.descriptor = bd;
  const int n = bd.rank();
  for (std::size_t li = 0; li < bd.lines.size(); ++li) {
    const auto& l = bd.lines[li];
    const int line = static_cast<int>(li), o = bd.offset(li), k = l.k;
    const std::string bc_type = long_boundary(bd) ? "B" : "C";
    if (bd.ambient == Ambient::GL) {
      if (l.gl_singular && k >= 2) cb.components.push_back(make_component(line, "A", k, o, n));
      continue;
    }
    bool singular = l.gl_singular || k == 1;
    bool dual = l.self_dual_T && (!tau_consulted(bd, l) || l.tau_T);
    if (singular) {
      if (l.boundary_pole)
        cb.components.push_back(make_component(line, bc_type, k, o, n));
      else if (dual)
        cb.components.push_back(make_component(line, "D", k, o, n));
      else if (k >= 2)
        cb.components.push_back(make_component(line, "A", k, o, n));
    } else if (l.boundary_pole) {
      for (int j = 0; j < k; ++j) {
        BlockComponent c = make_component(line, bc_type, 1, o + j, n);
        std::string lab = alpha_label(line, j + 1);
        c.base_labels = {bc_type == "C" ? "2" + lab : lab};
        cb.components.push_back(c);
      }
    }
  }
  return cb;
}

// Generators of R(O); the caller-supplied r_extra generators are appended.
inline std::vector<SignedPerm> r_group(const ClassifiedBlock& cb) {
  using namespace detail;
  const auto& bd = cb.descriptor;
  const int n = bd.rank();
  std::vector<SignedPerm> gens;
  std::vector<int> i_prime;
  for (std::size_t li = 0; li < bd.lines.size(); ++li) {
    const auto& l = bd.lines[li];
    const int o = bd.offset(li), k = l.k, last = o + k - 1;
    bool singular = l.gl_singular || k == 1;
    if (bd.ambient == Ambient::GL) {
      if (!l.gl_singular)
        for (int j = 0; j + 1 < k; ++j) gens.push_back(swap_next(n, o + j));
      continue;
    }
    bool dual = l.self_dual_T && (!tau_consulted(bd, l) || l.tau_T);
    if (singular) {
      if (!l.boundary_pole && dual) gens.push_back(flip(n, last));
    } else {
      for (int j = 0; j + 1 < k; ++j) gens.push_back(swap_next(n, o + j));
      if (l.self_dual_T && !l.boundary_pole) {
        gens.push_back(compose(compose(flip(n, last), swap_next(n, last - 1)), flip(n, last)));
        if (dual) gens.push_back(flip(n, last));
      }
    }
    if (in_i_prime(bd, l)) i_prime.push_back(last);
  }
  for (std::size_t j = 0; j + 1 < i_prime.size(); ++j)
    gens.push_back(compose(flip(n, i_prime[j]), flip(n, i_prime[j + 1])));
  for (const auto& r : bd.r_extra) gens.push_back(r);
  return gens;
}

struct SemidirectOrders {
  long long w_o;
  long long r;
  long long wmo;
};

inline SemidirectOrders semidirect_orders(const ClassifiedBlock& cb, std::size_t guard = 10000) {
  long long w = 1;
  for (const auto& c : cb.components) {
    w *= weyl_order(c.component);
    if (w > static_cast<long long>(guard)) throw GuardExceeded("|W_O| exceeds the enumeration guard");
  }
  long long r = static_cast<long long>(generate_group(cb.r_generators, cb.descriptor.rank(), guard).size());
  return {w, r, w * r};
}

// classify, r_group and semidirect_orders in one step.
inline ClassifiedBlock classify_full(const BlockDescriptor& bd, std::size_t guard = 10000) {
  ClassifiedBlock cb = classify(bd);
  cb.r_generators = r_group(cb);
  cb.r_extra_supplied = !bd.r_extra.empty();
  auto o = semidirect_orders(cb, guard);
  cb.w_o_order = o.w_o;
  cb.r_order = o.r;
  cb.wmo_order = o.wmo;
  return cb;
}

// Invariants (a_s, a_{s,-}) of one simple root of Sigma_O.
struct RootInvariants {
  Rational a;
  Rational b = 0;
};

struct BlockHecke {
  HeckeAlgebraPtr hecke;
  ExtendedAlgebraPtr extended;
};

// Hecke algebra of the block: q_alpha = q^{a+b}, and q_i = q^{a-b} on the
// short root of each type-B component (type C is converted to B).
inline BlockHecke hecke_from_block(const ClassifiedBlock& cb, const std::vector<RootInvariants>& inv,
                                   const std::vector<int>& t_per_line = {}) {
  const auto& bd = cb.descriptor;
  if (!t_per_line.empty() && t_per_line.size() != bd.lines.size())
    throw InvalidInvariants("t: one value per line expected");
  std::vector<Component> comps;
  for (const auto& c : cb.components) {
    Component x = c.component;
    if (!t_per_line.empty()) x.t = t_per_line.at(c.line);
    comps.push_back(x);
  }
  BasedRootDatum d = build_O_datum(comps, bd.rank());
  if (static_cast<int>(inv.size()) != d.num_simple())
    throw InvalidInvariants("expected " + std::to_string(d.num_simple()) + " root invariants");
  HeckeParams p;
  for (int i = 0; i < d.num_simple(); ++i) {
    const auto& [a, b] = inv[i];
    if (b < 0 || a < b) throw InvalidInvariants("need a_s >= a_{s,-} >= 0 at simple root " + std::to_string(i));
    bool special = coroot_in_2Lambda(d.simple_root(i), d);
    if (b != 0 && !special)
      throw InvalidInvariants("a_{s,-} must vanish outside the short root of a type-B component (simple root " +
                              std::to_string(i) + ")");
    p.alpha_exponents.push_back(a + b);
    if (special) p.special[i] = a - b;
  }
  try {
    auto h = HeckeAlgebra::create(d, p);
    auto e = ExtendedAlgebra::create(h, cb.r_generators);
    return {h, e};
  } catch (const InvalidParams& e) {
    throw InvalidInvariants(e.what());
  }
}

}  // namespace mhecke
