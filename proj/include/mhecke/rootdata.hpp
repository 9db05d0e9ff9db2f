#pragma once

// Based root data of classical type and Weyl groups as signed permutations.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace mhecke {

using Lattice = std::vector<int>;

// w(e_i) = sign[i] * e_{perm[i]}.
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPerm identity(int n) {
    SignedPerm w;
    w.perm.resize(n);
    for (int i = 0; i < n; ++i) w.perm[i] = i;
    w.sign.assign(n, 1);
    return w;
  }
  int rank() const { return static_cast<int>(perm.size()); }
  bool is_identity() const { return *this == identity(rank()); }
  int negative_signs() const { return static_cast<int>(std::count(sign.begin(), sign.end(), -1)); }

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) = default;
  friend auto operator<=>(const SignedPerm& a, const SignedPerm& b) = default;
};

using WeylElement = SignedPerm;

// (w v)(x) = w(v(x))
inline SignedPerm compose(const SignedPerm& w, const SignedPerm& v) {
  if (w.rank() != v.rank()) throw std::invalid_argument("signed permutations of different rank");
  SignedPerm r;
  int n = w.rank();
  r.perm.resize(n);
  r.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    r.perm[i] = w.perm[v.perm[i]];
    r.sign[i] = v.sign[i] * w.sign[v.perm[i]];
  }
  return r;
}

inline SignedPerm inverse(const SignedPerm& w) {
  SignedPerm r;
  int n = w.rank();
  r.perm.resize(n);
  r.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    r.perm[w.perm[i]] = i;
    r.sign[w.perm[i]] = w.sign[i];
  }
  return r;
}

template <class T>
std::vector<T> act(const SignedPerm& w, const std::vector<T>& v) {
  if (static_cast<int>(v.size()) != w.rank()) throw std::invalid_argument("dimension mismatch in act");
  std::vector<T> r(v.size(), T(0));
  for (int i = 0; i < w.rank(); ++i) r[w.perm[i]] = w.sign[i] * v[i];
  return r;
}

template <class A, class B, class R = std::conditional_t<std::is_same_v<A, int> && std::is_same_v<B, int>, int, Rational>>
R pairing(const std::vector<A>& x, const std::vector<B>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch in pairing");
  R s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// One irreducible (or empty) block of a root datum, supported on the
// coordinates offset .. offset + size - 1.  type is one of A, B, C, D, empty;
// for A the rank is size - 1.
struct Component {
  std::string type;
  int size = 0;
  int t = 1;
  int offset = -1;

  int root_rank() const {
    if (type == "A") return size - 1;
    if (type == "empty" || (type == "D" && size == 1)) return 0;
    return size;
  }
  std::string label() const {
    if (type == "empty") return "empty";
    return type + std::to_string(type == "A" ? size - 1 : size);
  }
  friend bool operator==(const Component&, const Component&) = default;
};

struct RootPair {
  Lattice root;
  Lattice coroot;
};

class BasedRootDatum {
 public:
  BasedRootDatum() = default;

  // Standard roots for each component, placed on the lattice Z^rank.
  BasedRootDatum(int rank, std::vector<Component> components) : rank_(rank), components_(std::move(components)) {
    if (rank_ <= 0) throw std::invalid_argument("rank must be positive");
    place_components();
    for (const auto& c : components_) add_standard_roots(c);
    finish();
  }

  // Explicit roots, coroots and base (indices into roots).
  BasedRootDatum(int rank, std::vector<RootPair> roots, std::vector<int> base, std::vector<Component> components = {})
      : rank_(rank), components_(std::move(components)), roots_(std::move(roots)), base_(std::move(base)), explicit_(true) {
    if (rank_ <= 0) throw std::invalid_argument("rank must be positive");
    for (const auto& r : roots_)
      if (static_cast<int>(r.root.size()) != rank_ || static_cast<int>(r.coroot.size()) != rank_)
        throw std::invalid_argument("root of wrong length");
    for (int b : base_)
      if (b < 0 || b >= static_cast<int>(roots_.size())) throw std::invalid_argument("base index out of range");
    finish();
  }

  int rank() const { return rank_; }
  const std::vector<Component>& components() const { return components_; }
  const std::vector<RootPair>& roots() const { return roots_; }
  const std::vector<int>& base() const { return base_; }
  bool explicit_roots() const { return explicit_; }
  int num_simple() const { return static_cast<int>(base_.size()); }
  const Lattice& simple_root(int i) const { return roots_.at(base_.at(i)).root; }
  const Lattice& simple_coroot(int i) const { return roots_.at(base_.at(i)).coroot; }
  const SignedPerm& simple_reflection(int i) const { return reflections_.at(i); }
  const std::vector<int>& positive_roots() const { return positive_; }

  std::optional<int> find_root(const Lattice& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_positive(const Lattice& v) const {
    auto i = find_root(v);
    if (!i) throw std::invalid_argument("vector is not a root");
    return is_positive_[*i];
  }
  const QVector& base_coefficients(int root_index) const { return coeffs_.at(root_index); }

  // Index of the component containing the support of a root, or -1.
  int component_of(const Lattice& v) const {
    for (std::size_t c = 0; c < components_.size(); ++c) {
      const auto& comp = components_[c];
      bool inside = true, touches = false;
      for (int i = 0; i < rank_; ++i) {
        if (v[i] == 0) continue;
        touches = true;
        if (i < comp.offset || i >= comp.offset + comp.size) inside = false;
      }
      if (touches && inside) return static_cast<int>(c);
    }
    return -1;
  }

  // Root and coroot in ambient coordinates, rescaled by the component's t.
  QVector scaled_root(int root_index) const {
    QVector r = to_qvector(roots_.at(root_index).root);
    Rational t = scale_of(roots_[root_index].root);
    for (auto& x : r) x *= t;
    return r;
  }
  QVector scaled_coroot(int root_index) const {
    QVector r = to_qvector(roots_.at(root_index).coroot);
    Rational t = scale_of(roots_[root_index].root);
    for (auto& x : r) x /= t;
    return r;
  }

  std::string type_label() const {
    std::string s;
    for (const auto& c : components_) {
      if (!s.empty()) s += "x";
      s += c.label();
    }
    return s.empty() ? "empty" : s;
  }

  Lattice reflect(int simple, const Lattice& v) const {
    const Lattice& a = simple_root(simple);
    int p = pairing(v, simple_coroot(simple));
    Lattice r = v;
    for (int i = 0; i < rank_; ++i) r[i] -= p * a[i];
    return r;
  }

 private:
  Rational scale_of(const Lattice& root) const {
    int c = component_of(root);
    return c < 0 ? Rational(1) : Rational(components_[c].t);
  }

  void place_components() {
    int next = 0;
    std::vector<bool> used(rank_, false);
    for (auto& c : components_) {
      if (c.type != "A" && c.type != "B" && c.type != "C" && c.type != "D" && c.type != "empty")
        throw std::invalid_argument("unknown component type '" + c.type + "'");
      if (c.size <= 0) throw std::invalid_argument("component size must be positive");
      if (c.t <= 0) throw std::invalid_argument("component scale must be positive");
      if (c.offset < 0) c.offset = next;
      if (c.offset + c.size > rank_) throw std::invalid_argument("component does not fit in the ambient rank");
      for (int i = c.offset; i < c.offset + c.size; ++i) {
        if (used[i]) throw std::invalid_argument("overlapping component supports");
        used[i] = true;
      }
      next = c.offset + c.size;
    }
  }

  Lattice unit(int i, int scale = 1) const {
    Lattice v(rank_, 0);
    v[i] = scale;
    return v;
  }

  void add_root(const Lattice& r, const Lattice& cr) { roots_.push_back({r, cr}); }
  void add_pm(const Lattice& r, const Lattice& cr) {
    add_root(r, cr);
    Lattice nr = r, ncr = cr;
    for (auto& x : nr) x = -x;
    for (auto& x : ncr) x = -x;
    add_root(nr, ncr);
  }

  void add_standard_roots(const Component& c) {
    const int o = c.offset, k = c.size;
    auto diff = [&](int i, int j) {
      Lattice v(rank_, 0);
      v[i] = 1;
      v[j] = -1;
      return v;
    };
    auto sum = [&](int i, int j) {
      Lattice v(rank_, 0);
      v[i] = 1;
      v[j] = 1;
      return v;
    };
    if (c.type == "empty" || c.root_rank() == 0) return;
    std::size_t first = roots_.size();
    for (int i = o; i < o + k; ++i)
      for (int j = i + 1; j < o + k; ++j) add_pm(diff(i, j), diff(i, j));
    if (c.type == "B" || c.type == "C" || c.type == "D") {
      for (int i = o; i < o + k; ++i)
        for (int j = i + 1; j < o + k; ++j) add_pm(sum(i, j), sum(i, j));
    }
    if (c.type == "B")
      for (int i = o; i < o + k; ++i) add_pm(unit(i), unit(i, 2));
    if (c.type == "C")
      for (int i = o; i < o + k; ++i) add_pm(unit(i, 2), unit(i));
    auto idx = [&](const Lattice& v) {
      for (std::size_t r = first; r < roots_.size(); ++r)
        if (roots_[r].root == v) return static_cast<int>(r);
      throw std::logic_error("missing standard root");
    };
    for (int i = o; i + 1 < o + k; ++i) base_.push_back(idx(diff(i, i + 1)));
    if (c.type == "B") base_.push_back(idx(unit(o + k - 1)));
    if (c.type == "C") base_.push_back(idx(unit(o + k - 1, 2)));
    if (c.type == "D") base_.push_back(idx(sum(o + k - 2, o + k - 1)));
  }

  void finish() {
    index_.clear();
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      const auto& [r, cr] = roots_[i];
      if (pairing(r, cr) != 2) throw std::invalid_argument("root/coroot pairing is not 2");
      if (!index_.emplace(r, static_cast<int>(i)).second) throw std::invalid_argument("duplicate root");
    }
    for (const auto& [r, cr] : roots_) {
      Lattice d = r;
      for (auto& x : d) x *= 2;
      if (index_.count(d)) throw std::invalid_argument("root system is not reduced");
    }
    std::vector<QVector> basis;
    for (int b : base_) basis.push_back(to_qvector(roots_[b].root));
    if (matrix_rank(basis) != static_cast<int>(base_.size()))
      throw std::invalid_argument("base is not linearly independent");
    coeffs_.clear();
    is_positive_.clear();
    positive_.clear();
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      auto c = solve_in_span(basis, to_qvector(roots_[i].root));
      if (!c) throw std::invalid_argument("root outside the span of the base");
      bool nonneg = true, nonpos = true;
      for (const auto& x : *c) {
        if (!is_integer(x)) throw std::invalid_argument("root is not an integral combination of the base");
        if (x < 0) nonneg = false;
        if (x > 0) nonpos = false;
      }
      if (!nonneg && !nonpos) throw std::invalid_argument("root has mixed-sign base coefficients");
      coeffs_.push_back(*c);
      is_positive_.push_back(nonneg);
      if (nonneg) positive_.push_back(static_cast<int>(i));
    }
    reflections_.clear();
    for (int s = 0; s < num_simple(); ++s) {
      SignedPerm w = SignedPerm::identity(rank_);
      for (int i = 0; i < rank_; ++i) {
        Lattice img = reflect(s, unit(i));
        int nz = -1;
        for (int j = 0; j < rank_; ++j) {
          if (img[j] == 0) continue;
          if (nz >= 0 || (img[j] != 1 && img[j] != -1))
            throw std::invalid_argument("simple reflection is not a signed permutation");
          nz = j;
        }
        w.perm[i] = nz;
        w.sign[i] = img[nz];
      }
      reflections_.push_back(w);
      for (const auto& [r, cr] : roots_)
        if (!index_.count(reflect(s, r))) throw std::invalid_argument("roots not stable under a simple reflection");
    }
  }

  int rank_ = 0;
  std::vector<Component> components_;
  std::vector<RootPair> roots_;
  std::vector<int> base_;
  bool explicit_ = false;
  std::map<Lattice, int> index_;
  std::vector<QVector> coeffs_;
  std::vector<bool> is_positive_;
  std::vector<int> positive_;
  std::vector<SignedPerm> reflections_;
};

// A signed permutation preserving the base, with the induced permutation of simple roots.
struct DiagramAutomorphism {
  SignedPerm map;
  std::vector<int> base_perm;
};

inline DiagramAutomorphism make_diagram_automorphism(const SignedPerm& w, const BasedRootDatum& d) {
  DiagramAutomorphism a{w, {}};
  for (int i = 0; i < d.num_simple(); ++i) {
    Lattice img = act(w, d.simple_root(i));
    Lattice cimg = act(w, d.simple_coroot(i));
    int found = -1;
    for (int j = 0; j < d.num_simple(); ++j)
      if (d.simple_root(j) == img && d.simple_coroot(j) == cimg) found = j;
    if (found < 0) throw std::invalid_argument("map does not preserve the base");
    a.base_perm.push_back(found);
  }
  return a;
}

// The outer flip of a type-D component: negate its last coordinate.
inline SignedPerm d_flip(int rank, const Component& c) {
  SignedPerm w = SignedPerm::identity(rank);
  w.sign[c.offset + c.size - 1] = -1;
  return w;
}

enum class ClassicalKind { GL, SO_odd, Sp, SO_even, O_even };

struct ClassicalDatum {
  BasedRootDatum datum;
  std::optional<DiagramAutomorphism> outer;
};

inline ClassicalDatum classical_datum(ClassicalKind kind, int size) {
  auto bad = [&] { return std::invalid_argument("invalid size " + std::to_string(size) + " for classical group"); };
  switch (kind) {
    case ClassicalKind::GL:
      if (size < 1) throw bad();
      return {BasedRootDatum(size, {{"A", size, 1, 0}}), std::nullopt};
    case ClassicalKind::SO_odd:
      if (size < 3 || size % 2 == 0) throw bad();
      return {BasedRootDatum(size / 2, {{"B", size / 2, 1, 0}}), std::nullopt};
    case ClassicalKind::Sp:
      if (size < 2 || size % 2 != 0) throw bad();
      return {BasedRootDatum(size / 2, {{"C", size / 2, 1, 0}}), std::nullopt};
    case ClassicalKind::SO_even:
    case ClassicalKind::O_even: {
      if (size < 2 || size % 2 != 0) throw bad();
      BasedRootDatum d(size / 2, {{"D", size / 2, 1, 0}});
      if (kind == ClassicalKind::SO_even) return {d, std::nullopt};
      auto flip = make_diagram_automorphism(d_flip(d.rank(), d.components()[0]), d);
      return {d, flip};
    }
  }
  throw bad();
}

// Sigma_O from (type, size, t) components: type C is emitted as B.
inline BasedRootDatum build_O_datum(std::vector<Component> components, int ambient_rank) {
  for (auto& c : components)
    if (c.type == "C") c.type = "B";
  return BasedRootDatum(ambient_rank, std::move(components));
}

inline bool is_negative_image(const SignedPerm& w, const Lattice& root, const BasedRootDatum& d) {
  return !d.is_positive(act(w, root));
}

inline int weyl_length(const WeylElement& w, const BasedRootDatum& d) {
  int n = 0;
  for (int i : d.positive_roots())
    if (is_negative_image(w, d.roots()[i].root, d)) ++n;
  return n;
}

inline std::vector<int> reduced_word(const WeylElement& w, const BasedRootDatum& d) {
  std::vector<int> word;
  SignedPerm cur = w;
  while (!cur.is_identity()) {
    int found = -1;
    for (int i = 0; i < d.num_simple() && found < 0; ++i)
      if (is_negative_image(cur, d.simple_root(i), d)) found = i;
    if (found < 0) throw std::invalid_argument("element is not in the Weyl group");
    word.push_back(found);
    cur = compose(cur, d.simple_reflection(found));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

inline WeylElement word_product(const std::vector<int>& word, const BasedRootDatum& d) {
  SignedPerm w = SignedPerm::identity(d.rank());
  for (int i : word) w = compose(w, d.simple_reflection(i));
  return w;
}

inline int braid_order(int i, int j, const BasedRootDatum& d) {
  if (i == j) throw std::invalid_argument("braid order needs two distinct simple roots");
  SignedPerm st = compose(d.simple_reflection(i), d.simple_reflection(j));
  SignedPerm p = st;
  for (int m = 1; m <= 6; ++m) {
    if (p.is_identity()) return m;
    p = compose(p, st);
  }
  throw std::logic_error("braid order exceeds 6");
}

inline bool coroot_in_2Lambda(const Lattice& root, const BasedRootDatum& d) {
  auto i = d.find_root(root);
  if (!i) throw std::invalid_argument("vector is not a root");
  for (int x : d.roots()[*i].coroot)
    if (x % 2 != 0) return false;
  return true;
}

class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& w) : std::runtime_error(w) {}
};

// Closure of a set of generators under composition.
inline std::vector<SignedPerm> generate_group(const std::vector<SignedPerm>& gens, int rank, std::size_t guard = 10000) {
  std::set<SignedPerm> seen{SignedPerm::identity(rank)};
  std::deque<SignedPerm> todo{SignedPerm::identity(rank)};
  while (!todo.empty()) {
    SignedPerm w = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      SignedPerm v = compose(w, g);
      if (seen.insert(v).second) {
        if (seen.size() > guard) throw GuardExceeded("group larger than " + std::to_string(guard));
        todo.push_back(v);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<WeylElement> weyl_enumerate(const BasedRootDatum& d, std::size_t guard = 10000) {
  std::vector<SignedPerm> gens;
  for (int i = 0; i < d.num_simple(); ++i) gens.push_back(d.simple_reflection(i));
  return generate_group(gens, d.rank(), guard);
}

inline long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// |W| of one component from its label.
inline long long weyl_order(const Component& c) {
  int k = c.size;
  if (c.type == "empty") return 1;
  if (c.type == "A") return factorial(k);
  if (c.type == "B" || c.type == "C") return (1LL << k) * factorial(k);
  if (c.type == "D") return k == 1 ? 1 : (1LL << (k - 1)) * factorial(k);
  throw std::invalid_argument("unknown component type");
}

}  // namespace mhecke
