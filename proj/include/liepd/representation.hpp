#ifndef LIEPD_REPRESENTATION_HPP
#define LIEPD_REPRESENTATION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "freeassoc.hpp"
#include "freelie.hpp"
#include "linalg.hpp"
#include "scalar.hpp"
#include "word.hpp"

namespace liepd {

/// Free 2-sorted representation W(X,Y) = (L(X), A(X)Y). X and Y are drawn
/// from separate generator pools, so they never collide.
struct FreeRep {
  Alphabet X;
  Alphabet Y;

  bool is_balanced() const { return X.size() == Y.size(); }

  std::string to_string() const {
    std::string s = "W(";
    for (std::size_t i = 0; i < X.size(); ++i)
      s += (i ? "," : "") + letter_name('x', X[i]);
    s += ";";
    for (std::size_t i = 0; i < Y.size(); ++i)
      s += (i ? "," : "") + letter_name('y', Y[i]);
    return s + ")";
  }

  bool contains(const FreeRep &sub) const { return sub.X.is_subset_of(X) && sub.Y.is_subset_of(Y); }

  LieElement zero_l() const { return LieElement(X); }
  ModuleElement zero_v() const { return ModuleElement(X, Y); }
  LieElement x(Letter l) const {
    if (!X.contains(l))
      throw ContextError(letter_name('x', l) + " is not a generator of " + to_string());
    return LieElement::generator(X, l);
  }
  ModuleElement y(Letter l) const {
    if (!Y.contains(l))
      throw ContextError(letter_name('y', l) + " is not a generator of " + to_string());
    return ModuleElement::generator(X, Y, l);
  }

  friend bool operator==(const FreeRep &, const FreeRep &) = default;
};

enum class Sort { L, V };

/// A value of one of the two sorts of a free representation.
using RepElement = std::variant<LieElement, ModuleElement>;

inline Sort sort_of(const RepElement &e) { return e.index() == 0 ? Sort::L : Sort::V; }

inline std::string to_string(const RepElement &e) {
  return std::visit([](const auto &v) { return v.to_string(); }, e);
}

/// l∘v: the associative image of l acting on the free module.
inline ModuleElement act(const LieElement &l, const ModuleElement &v) {
  if (!(l.alphabet() == v.x_alphabet()))
    throw ContextError("act: Lie element and module element over different alphabets");
  return module_mul(embed_assoc(l), v);
}

/// Finite-dimensional representation (L,V) over F. L has basis e_1..e_n with
/// [e_i,e_j] = sum_k c(i,j,k) e_k; e_i acts on V = F^m by the matrix act[i].
template <class F> class FinRep {
public:
  using Field = F;
  using Vec = std::vector<F>;
  using Matrix = std::vector<Vec>;

  FinRep() = default;

  /// Validates antisymmetry, the Jacobi identity and that act is a Lie
  /// homomorphism into gl(V); throws ValidationError otherwise.
  FinRep(std::size_t n, std::vector<F> c, std::size_t m, std::vector<Matrix> act)
      : n_(n), m_(m), c_(std::move(c)), act_(std::move(act)) {
    validate();
  }

  /// Zero structure constants, with one action matrix per basis vector.
  static FinRep abelian(std::size_t n, std::size_t m, std::vector<Matrix> act) {
    return FinRep(n, std::vector<F>(n * n * n, F::zero()), m, std::move(act));
  }

  std::size_t lie_dim() const { return n_; }
  std::size_t module_dim() const { return m_; }
  const F &c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  const Matrix &action(std::size_t i) const { return act_[i]; }

  Vec zero_l() const { return zeros<F>(n_); }
  Vec zero_v() const { return zeros<F>(m_); }
  Vec e(std::size_t i) const {
    Vec v = zero_l();
    v.at(i) = F::one();
    return v;
  }
  Vec f(std::size_t i) const {
    Vec v = zero_v();
    v.at(i) = F::one();
    return v;
  }

  Vec bracket(const Vec &a, const Vec &b) const {
    Vec out = zero_l();
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i].is_zero())
        continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (b[j].is_zero())
          continue;
        F ab = a[i] * b[j];
        for (std::size_t k = 0; k < n_; ++k)
          out[k] += ab * c(i, j, k);
      }
    }
    return out;
  }

  Matrix act_matrix(const Vec &l) const {
    Matrix out(m_, zeros<F>(m_));
    for (std::size_t i = 0; i < n_; ++i) {
      if (l[i].is_zero())
        continue;
      for (std::size_t r = 0; r < m_; ++r)
        for (std::size_t s = 0; s < m_; ++s)
          out[r][s] += l[i] * act_[i][r][s];
    }
    return out;
  }

  Vec act(const Vec &l, const Vec &v) const {
    Matrix a = act_matrix(l);
    Vec out = zero_v();
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t s = 0; s < m_; ++s)
        out[r] += a[r][s] * v[s];
    return out;
  }

  /// H1 ⊕ H2 with block-diagonal structure.
  FinRep direct_sum(const FinRep &o) const {
    const std::size_t n = n_ + o.n_, m = m_ + o.m_;
    std::vector<F> c(n * n * n, F::zero());
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> F & { return c[(i * n + j) * n + k]; };
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          at(i, j, k) = this->c(i, j, k);
    for (std::size_t i = 0; i < o.n_; ++i)
      for (std::size_t j = 0; j < o.n_; ++j)
        for (std::size_t k = 0; k < o.n_; ++k)
          at(n_ + i, n_ + j, n_ + k) = o.c(i, j, k);
    std::vector<Matrix> act(n, Matrix(m, zeros<F>(m)));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t r = 0; r < m_; ++r)
        for (std::size_t s = 0; s < m_; ++s)
          act[i][r][s] = act_[i][r][s];
    for (std::size_t i = 0; i < o.n_; ++i)
      for (std::size_t r = 0; r < o.m_; ++r)
        for (std::size_t s = 0; s < o.m_; ++s)
          act[n_ + i][m_ + r][m_ + s] = o.act_[i][r][s];
    return FinRep(n, std::move(c), m, std::move(act));
  }

  friend bool operator==(const FinRep &a, const FinRep &b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.c_ == b.c_ && a.act_ == b.act_;
  }

private:
  void validate() const {
    if (c_.size() != n_ * n_ * n_)
      throw ValidationError("structure constants must have n^3 entries");
    if (act_.size() != n_)
      throw ValidationError("need one action matrix per Lie basis vector");
    for (const auto &a : act_) {
      if (a.size() != m_)
        throw ValidationError("action matrix has wrong number of rows");
      for (const auto &row : a)
        if (row.size() != m_)
          throw ValidationError("action matrix has wrong number of columns");
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (!(c(i, j, k) + c(j, i, k)).is_zero())
            throw ValidationError("structure constants are not antisymmetric at (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                  std::to_string(k + 1) + ")");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) {
          Vec s = bracket(bracket(e(i), e(j)), e(k));
          add_into(s, F::one(), bracket(bracket(e(j), e(k)), e(i)));
          add_into(s, F::one(), bracket(bracket(e(k), e(i)), e(j)));
          if (!all_zero(s))
            throw ValidationError("Jacobi identity fails for (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        Matrix lhs = act_matrix(bracket(e(i), e(j)));
        for (std::size_t r = 0; r < m_; ++r)
          for (std::size_t s = 0; s < m_; ++s) {
            F comm = F::zero();
            for (std::size_t t = 0; t < m_; ++t)
              comm += act_[i][r][t] * act_[j][t][s] - act_[j][r][t] * act_[i][t][s];
            if (!(lhs[r][s] - comm).is_zero())
              throw ValidationError("action is not a Lie homomorphism at (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
          }
      }
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<F> c_;
  std::vector<Matrix> act_;
};

template <class F> std::string vec_to_string(const std::vector<F> &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

/// Uniform access to the two kinds of homomorphism targets.
template <class Target> struct rep_traits;

template <> struct rep_traits<FreeRep> {
  using L = LieElement;
  using V = ModuleElement;

  static L zero_l(const FreeRep &t) { return t.zero_l(); }
  static V zero_v(const FreeRep &t) { return t.zero_v(); }
  static L bracket(const FreeRep &, const L &a, const L &b) { return lie_bracket(a, b); }
  static V act(const FreeRep &, const L &l, const V &v) { return liepd::act(l, v); }
  static void add_l(L &acc, const Scalar &c, const L &x) { acc += c * x; }
  static void add_v(V &acc, const Scalar &c, const V &x) { acc += c * x; }
  static bool is_zero_l(const L &x) { return x.is_zero(); }
  static bool is_zero_v(const V &x) { return x.is_zero(); }
  static bool fits_l(const FreeRep &t, const L &x) { return x.alphabet() == t.X; }
  static bool fits_v(const FreeRep &t, const V &x) {
    return x.x_alphabet() == t.X && x.y_alphabet() == t.Y;
  }
  static std::string str_l(const L &x) { return x.to_string(); }
  static std::string str_v(const V &x) { return x.to_string(); }
};

template <class F> struct rep_traits<FinRep<F>> {
  using L = std::vector<F>;
  using V = std::vector<F>;

  static L zero_l(const FinRep<F> &t) { return t.zero_l(); }
  static V zero_v(const FinRep<F> &t) { return t.zero_v(); }
  static L bracket(const FinRep<F> &t, const L &a, const L &b) { return t.bracket(a, b); }
  static V act(const FinRep<F> &t, const L &l, const V &v) { return t.act(l, v); }
  static void add_l(L &acc, const Scalar &c, const L &x) { add_into(acc, F::from_scalar(c), x); }
  static void add_v(V &acc, const Scalar &c, const V &x) { add_into(acc, F::from_scalar(c), x); }
  static bool is_zero_l(const L &x) { return all_zero(x); }
  static bool is_zero_v(const V &x) { return all_zero(x); }
  static bool fits_l(const FinRep<F> &t, const L &x) { return x.size() == t.lie_dim(); }
  static bool fits_v(const FinRep<F> &t, const V &x) { return x.size() == t.module_dim(); }
  static std::string str_l(const L &x) { return vec_to_string(x); }
  static std::string str_v(const V &x) { return vec_to_string(x); }
};

/// Homomorphism (φ,ψ) out of a free representation, given on generators.
/// The override tables replace the images of specific basis elements; they
/// exist to build deliberately broken pairs for the checker.
template <class Target> struct RepHom {
  using Traits = rep_traits<Target>;
  using L = typename Traits::L;
  using V = typename Traits::V;

  FreeRep source;
  Target target;
  std::map<Letter, L> phi;
  std::map<Letter, V> psi;
  std::map<Word, L, GradedLex> override_l;
  std::map<ModuleKey, V, ModuleKeyLess> override_v;

  void validate() const {
    for (Letter x : source.X) {
      auto it = phi.find(x);
      if (it == phi.end())
        throw ValidationError("no image for " + letter_name('x', x));
      if (!Traits::fits_l(target, it->second))
        throw SortError("image of " + letter_name('x', x) + " is not an L-sort value of the target");
    }
    for (Letter y : source.Y) {
      auto it = psi.find(y);
      if (it == psi.end())
        throw ValidationError("no image for " + letter_name('y', y));
      if (!Traits::fits_v(target, it->second))
        throw SortError("image of " + letter_name('y', y) + " is not a V-sort value of the target");
    }
    if (phi.size() != source.X.size() || psi.size() != source.Y.size())
      throw ValidationError("images given for generators outside the source");
  }
};

/// Identity of a free representation.
inline RepHom<FreeRep> identity_hom(const FreeRep &w) {
  RepHom<FreeRep> h{w, w, {}, {}, {}, {}};
  for (Letter x : w.X)
    h.phi.emplace(x, w.x(x));
  for (Letter y : w.Y)
    h.psi.emplace(y, w.y(y));
  return h;
}

/// Extends a generator assignment to all of W(X,Y), memoizing basis images.
template <class Target> class HomEvaluator {
public:
  using Traits = rep_traits<Target>;
  using L = typename Traits::L;
  using V = typename Traits::V;

  explicit HomEvaluator(const RepHom<Target> &h) : h_(h) { h_.validate(); }

  const L &basis(const Word &w) {
    if (auto it = memo_l_.find(w); it != memo_l_.end())
      return it->second;
    L out;
    if (auto ov = h_.override_l.find(w); ov != h_.override_l.end())
      out = ov->second;
    else if (w.size() == 1)
      out = h_.phi.at(w[0]);
    else {
      auto [u, v] = standard_factorization(w);
      L a = basis(u);
      L b = basis(v);
      out = Traits::bracket(h_.target, a, b);
    }
    return memo_l_.emplace(w, std::move(out)).first->second;
  }

  const V &basis(const ModuleKey &k) {
    if (auto it = memo_v_.find(k); it != memo_v_.end())
      return it->second;
    V out;
    if (auto ov = h_.override_v.find(k); ov != h_.override_v.end())
      out = ov->second;
    else if (k.word.empty())
      out = h_.psi.at(k.y);
    else {
      ModuleKey tail{Word(k.word.begin() + 1, k.word.end()), k.y};
      V t = basis(tail);
      out = Traits::act(h_.target, h_.phi.at(k.word[0]), t);
    }
    return memo_v_.emplace(k, std::move(out)).first->second;
  }

  L operator()(const LieElement &l) {
    if (!(l.alphabet() == h_.source.X))
      throw ContextError("element is not in the source of the homomorphism");
    L out = Traits::zero_l(h_.target);
    for (const auto &[w, c] : l.terms())
      Traits::add_l(out, c, basis(w));
    return out;
  }

  V operator()(const ModuleElement &v) {
    if (!(v.x_alphabet() == h_.source.X) || !(v.y_alphabet() == h_.source.Y))
      throw ContextError("element is not in the source of the homomorphism");
    V out = Traits::zero_v(h_.target);
    for (const auto &[k, c] : v.terms())
      Traits::add_v(out, c, basis(k));
    return out;
  }

  const RepHom<Target> &hom() const { return h_; }

private:
  const RepHom<Target> &h_;
  std::map<Word, L, GradedLex> memo_l_;
  std::map<ModuleKey, V, ModuleKeyLess> memo_v_;
};

template <class Target>
typename rep_traits<Target>::L hom_eval(const RepHom<Target> &h, const LieElement &l) {
  return HomEvaluator<Target>(h)(l);
}

template <class Target>
typename rep_traits<Target>::V hom_eval(const RepHom<Target> &h, const ModuleElement &v) {
  return HomEvaluator<Target>(h)(v);
}

struct HomCheckReport {
  bool pass = true;
  std::size_t degree = 0;
  /// "lie (a,b)" or "action (a,v)" for each violated basis pair, graded order.
  std::vector<std::string> violations;

  std::string to_string() const {
    std::string s = std::string(pass ? "pass" : "fail") + " (verified up to degree " +
                    std::to_string(degree) + ")";
    for (const auto &v : violations)
      s += "\nviolation " + v;
    return s;
  }
};

/// Checks φ([a,b]) = [φa,φb] and φ(a)∘ψ(v) = ψ(a∘v) on basis pairs of total
/// degree <= d.
template <class Target> HomCheckReport hom_check(const RepHom<Target> &h, std::size_t d) {
  using Traits = rep_traits<Target>;
  HomEvaluator<Target> ev(h);
  HomCheckReport rep;
  rep.degree = d;
  const auto &lb = lyndon_basis_words(h.source.X, d);
  for (std::size_t i = 0; i < lb.size(); ++i)
    for (std::size_t j = i + 1; j < lb.size(); ++j) {
      const Word &a = lb[i], &b = lb[j];
      if (a.size() + b.size() > d)
        continue;
      LieElement ab = lie_bracket(LieElement::basis(h.source.X, a), LieElement::basis(h.source.X, b));
      auto lhs = ev(ab);
      auto rhs = Traits::bracket(h.target, ev.basis(a), ev.basis(b));
      Traits::add_l(lhs, Scalar(-1), rhs);
      if (!Traits::is_zero_l(lhs)) {
        rep.pass = false;
        rep.violations.push_back("lie (" + LyndonBasisElement::bracketing(a) + "," +
                                 LyndonBasisElement::bracketing(b) + ")");
      }
    }
  for (const auto &a : lb)
    for (const auto &k : module_basis(h.source.X, h.source.Y, d)) {
      if (a.size() + k.degree() > d)
        continue;
      ModuleElement av = act(LieElement::basis(h.source.X, a),
                             ModuleElement::basis(h.source.X, h.source.Y, k));
      auto lhs = ev(av);
      auto rhs = Traits::act(h.target, ev.basis(a), ev.basis(k));
      Traits::add_v(lhs, Scalar(-1), rhs);
      if (!Traits::is_zero_v(lhs)) {
        rep.pass = false;
        rep.violations.push_back("action (" + LyndonBasisElement::bracketing(a) + "," +
                                 module_key_to_string(k) + ")");
      }
    }
  return rep;
}

/// g∘f for f between free representations.
template <class Target> RepHom<Target> compose(const RepHom<Target> &g, const RepHom<FreeRep> &f) {
  if (!(f.target == g.source))
    throw ContextError("compose: target of the first map is not the source of the second");
  HomEvaluator<Target> ev(g);
  RepHom<Target> out{f.source, g.target, {}, {}, {}, {}};
  for (const auto &[x, img] : f.phi)
    out.phi.emplace(x, ev(img));
  for (const auto &[y, img] : f.psi)
    out.psi.emplace(y, ev(img));
  return out;
}

/// Equality of two homomorphisms with the same source, on generators.
template <class Target> bool same_on_generators(const RepHom<Target> &a, const RepHom<Target> &b) {
  return a.source == b.source && a.phi == b.phi && a.psi == b.psi;
}

/// W1 ⊔ W2 with its two injections. Generators of W2 that collide with
/// those of W1 are renamed to fresh indices above every index in use.
struct Coproduct {
  FreeRep sum;
  RepHom<FreeRep> inj1;
  RepHom<FreeRep> inj2;
  std::map<Letter, Letter> rename_x;
  std::map<Letter, Letter> rename_y;
};

inline Coproduct coproduct(const FreeRep &w1, const FreeRep &w2) {
  auto fresh = [](const Alphabet &a, const Alphabet &b, std::map<Letter, Letter> &rename) {
    Letter next = std::max(a.max_letter(), b.max_letter());
    std::vector<Letter> out(a.begin(), a.end());
    for (Letter l : b) {
      Letter target = l;
      if (a.contains(l))
        target = ++next;
      rename.emplace(l, target);
      out.push_back(target);
    }
    return Alphabet(std::move(out));
  };
  Coproduct cp;
  cp.sum.X = fresh(w1.X, w2.X, cp.rename_x);
  cp.sum.Y = fresh(w1.Y, w2.Y, cp.rename_y);
  cp.inj1 = RepHom<FreeRep>{w1, cp.sum, {}, {}, {}, {}};
  for (Letter x : w1.X)
    cp.inj1.phi.emplace(x, cp.sum.x(x));
  for (Letter y : w1.Y)
    cp.inj1.psi.emplace(y, cp.sum.y(y));
  cp.inj2 = RepHom<FreeRep>{w2, cp.sum, {}, {}, {}, {}};
  for (Letter x : w2.X)
    cp.inj2.phi.emplace(x, cp.sum.x(cp.rename_x.at(x)));
  for (Letter y : w2.Y)
    cp.inj2.psi.emplace(y, cp.sum.y(cp.rename_y.at(y)));
  return cp;
}

/// The unique map W1 ⊔ W2 → H restricting to a1 and a2.
template <class Target>
RepHom<Target> mediating(const Coproduct &cp, const RepHom<Target> &a1, const RepHom<Target> &a2) {
  if (!(a1.source == cp.inj1.source) || !(a2.source == cp.inj2.source))
    throw ContextError("mediating: maps do not start at the coproduct factors");
  RepHom<Target> out{cp.sum, a1.target, a1.phi, a1.psi, {}, {}};
  for (const auto &[x, img] : a2.phi)
    out.phi.insert_or_assign(cp.rename_x.at(x), img);
  for (const auto &[y, img] : a2.psi)
    out.psi.insert_or_assign(cp.rename_y.at(y), img);
  return out;
}

namespace detail {

inline std::pair<std::size_t, std::size_t>
quotient_dims(const std::vector<LieElement> &l_all, const std::vector<LieElement> &l_sq,
              const std::vector<ModuleElement> &v_all, const std::vector<ModuleElement> &v_xv) {
  using LS = Subspace<Word, Scalar, GradedLex>;
  using VS = Subspace<ModuleKey, Scalar, ModuleKeyLess>;
  LS la, ls;
  for (const auto &l : l_all)
    la.insert(l.terms());
  for (const auto &l : l_sq)
    ls.insert(l.terms());
  VS va, vs;
  for (const auto &v : v_all)
    va.insert(v.terms());
  for (const auto &v : v_xv)
    vs.insert(v.terms());
  return {la.dim() - ls.dim(), va.dim() - vs.dim()};
}

} // namespace detail

/// Same invariants read through an isomorphism h: W → W': the spans are
/// those of the images of the degree <= d basis of W.
inline std::pair<std::size_t, std::size_t> rank_invariants(const RepHom<FreeRep> &h, std::size_t d) {
  if (d < 1)
    throw std::invalid_argument("rank_invariants needs d >= 1");
  HomEvaluator<FreeRep> ev(h);
  const FreeRep &w = h.source;
  const auto &lb = lyndon_basis_words(w.X, d);
  std::vector<LieElement> l_all, l_sq;
  for (const auto &a : lb)
    l_all.push_back(ev.basis(a));
  for (const auto &a : lb)
    for (const auto &b : lb)
      if (a.size() + b.size() <= d)
        l_sq.push_back(ev(lie_bracket(LieElement::basis(w.X, a), LieElement::basis(w.X, b))));
  std::vector<ModuleElement> v_all, v_xv;
  for (const auto &k : module_basis(w.X, w.Y, d)) {
    v_all.push_back(ev.basis(k));
    if (k.degree() + 1 <= d)
      for (Letter x : w.X)
        v_xv.push_back(ev(module_mul(AssocElement::letter(w.X, x),
                                     ModuleElement::basis(w.X, w.Y, k))));
  }
  return detail::quotient_dims(l_all, l_sq, v_all, v_xv);
}

/// (dim L/[L,L], dim V/⟨X⟩V) computed on the degree <= d slices.
inline std::pair<std::size_t, std::size_t> rank_invariants(const FreeRep &w, std::size_t d) {
  return rank_invariants(identity_hom(w), d);
}

/// Degree <= d slice of a pair of subspaces (T1 ⊆ L(X), T2 ⊆ A(X)Y) over F.
template <class F> struct RepSlice {
  using LSpace = Subspace<Word, F, GradedLex>;
  using VSpace = Subspace<ModuleKey, F, ModuleKeyLess>;
  LSpace l;
  VSpace v;

  bool contains(const RepSlice &o) const { return l.contains(o.l) && v.contains(o.v); }
  friend bool operator==(const RepSlice &a, const RepSlice &b) { return a.l == b.l && a.v == b.v; }

  std::string to_string() const {
    std::string s = "L:";
    for (const auto &row : l.basis()) {
      std::string t;
      for (const auto &[w, c] : row)
        t += (t.empty() ? "" : " + ") + c.to_string() + "*" + LyndonBasisElement::bracketing(w);
      s += " {" + t + "}";
    }
    s += "\nV:";
    for (const auto &row : v.basis()) {
      std::string t;
      for (const auto &[k, c] : row)
        t += (t.empty() ? "" : " + ") + c.to_string() + "*" + module_key_to_string(k);
      s += " {" + t + "}";
    }
    return s;
  }
};

/// Rational sparse vector read in F.
template <class F, class Key, class Compare>
SparseVec<Key, F, Compare> to_field(const SparseVec<Key, Scalar, Compare> &v) {
  SparseVec<Key, F, Compare> out;
  for (const auto &[k, c] : v) {
    F f = F::from_scalar(c);
    if (!f.is_zero())
      out.emplace(k, f);
  }
  return out;
}

/// Whole degree <= d slice of W(X,Y).
template <class F> RepSlice<F> full_slice(const FreeRep &w, std::size_t d) {
  return RepSlice<F>{coordinate_span<Word, F, GradedLex>(lyndon_basis_words(w.X, d)),
                     coordinate_span<ModuleKey, F, ModuleKeyLess>(module_basis(w.X, w.Y, d))};
}

/// (ker φ, ker ψ) restricted to degree <= d.
template <class F> RepSlice<F> kernel_slice(const RepHom<FinRep<F>> &h, std::size_t d) {
  HomEvaluator<FinRep<F>> ev(h);
  std::vector<std::pair<Word, SparseVec<std::size_t, F>>> limg;
  for (const auto &w : lyndon_basis_words(h.source.X, d)) {
    SparseVec<std::size_t, F> img;
    const auto &val = ev.basis(w);
    for (std::size_t i = 0; i < val.size(); ++i)
      if (!val[i].is_zero())
        img.emplace(i, val[i]);
    limg.emplace_back(w, std::move(img));
  }
  std::vector<std::pair<ModuleKey, SparseVec<std::size_t, F>>> vimg;
  for (const auto &k : module_basis(h.source.X, h.source.Y, d)) {
    SparseVec<std::size_t, F> img;
    const auto &val = ev.basis(k);
    for (std::size_t i = 0; i < val.size(); ++i)
      if (!val[i].is_zero())
        img.emplace(i, val[i]);
    vimg.emplace_back(k, std::move(img));
  }
  return RepSlice<F>{kernel_of<Word, GradedLex>(limg), kernel_of<ModuleKey, ModuleKeyLess>(vimg)};
}

} // namespace liepd

#endif
