#ifndef LIEPD_PROJDER_HPP
#define LIEPD_PROJDER_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "freelie.hpp"
#include "linalg.hpp"
#include "representation.hpp"

namespace liepd {

/// Element l + v of M = L ⊕ V for the free case, kept split.
struct PDElement {
  FreeRep ctx;
  LieElement l;
  ModuleElement v;

  static PDElement zero(const FreeRep &ctx) { return {ctx, ctx.zero_l(), ctx.zero_v()}; }
  static PDElement from_l(const FreeRep &ctx, LieElement l) {
    PDElement u{ctx, std::move(l), ctx.zero_v()};
    u.validate();
    return u;
  }
  static PDElement from_v(const FreeRep &ctx, ModuleElement v) {
    PDElement u{ctx, ctx.zero_l(), std::move(v)};
    u.validate();
    return u;
  }

  void validate() const {
    if (!(l.alphabet() == ctx.X) || !(v.x_alphabet() == ctx.X) || !(v.y_alphabet() == ctx.Y))
      throw ContextError("PD element components do not match the context " + ctx.to_string());
  }

  bool is_zero() const { return l.is_zero() && v.is_zero(); }
  int degree() const { return std::max(l.degree(), v.degree()); }

  PDElement component(std::size_t k) const {
    ModuleElement::Terms vt;
    for (const auto &[key, c] : v.terms())
      if (key.degree() == k)
        vt.emplace(key, c);
    return {ctx, l.component(k), ModuleElement(ctx.X, ctx.Y, std::move(vt))};
  }

  /// Drops every term of degree > d.
  PDElement truncated(std::size_t d) const {
    PDElement out = zero(ctx);
    for (std::size_t k = 1; k <= d; ++k)
      out += component(k);
    return out;
  }

  PDElement &operator+=(const PDElement &o) {
    check(o);
    l += o.l;
    v += o.v;
    return *this;
  }
  PDElement &operator-=(const PDElement &o) {
    check(o);
    l -= o.l;
    v -= o.v;
    return *this;
  }
  PDElement &operator*=(const Scalar &c) {
    l *= c;
    v *= c;
    return *this;
  }
  friend PDElement operator+(PDElement a, const PDElement &b) { return a += b; }
  friend PDElement operator-(PDElement a, const PDElement &b) { return a -= b; }
  friend PDElement operator*(const Scalar &c, PDElement a) { return a *= c; }
  friend PDElement operator-(PDElement a) { return a *= Scalar(-1); }
  friend bool operator==(const PDElement &a, const PDElement &b) {
    return a.ctx == b.ctx && a.l == b.l && a.v == b.v;
  }

  /// L terms first, then V terms, in one signed sum.
  std::string to_string() const {
    std::string out;
    for (const auto &[w, c] : l.terms())
      detail::append_term(out, c, LyndonBasisElement::bracketing(w));
    for (const auto &[k, c] : v.terms())
      detail::append_term(out, c, module_key_to_string(k));
    return out.empty() ? "0" : out;
  }

  void check(const PDElement &o) const {
    if (!(ctx == o.ctx))
      throw ContextError("PD elements over different contexts");
  }
};

/// [l1+v1, l2+v2] = [l1,l2] + l1∘v2 − l2∘v1.
inline PDElement pd_bracket(const PDElement &a, const PDElement &b) {
  a.check(b);
  return {a.ctx, lie_bracket(a.l, b.l), act(a.l, b.v) - act(b.l, a.v)};
}

inline PDElement pd_p(const PDElement &u) { return {u.ctx, u.ctx.zero_l(), u.v}; }
inline PDElement pd_r(const PDElement &u) { return {u.ctx, u.l, u.ctx.zero_v()}; }

/// Element of F(H) = (L ⊕ V, p_V) for a finite representation H.
template <class F> struct FinPDElement {
  std::vector<F> l;
  std::vector<F> v;

  bool is_zero() const { return all_zero(l) && all_zero(v); }
  friend bool operator==(const FinPDElement &, const FinPDElement &) = default;
  std::string to_string() const { return vec_to_string(l) + "+" + vec_to_string(v); }
};

template <class F>
FinPDElement<F> pd_bracket(const FinRep<F> &h, const FinPDElement<F> &a, const FinPDElement<F> &b) {
  FinPDElement<F> out{h.bracket(a.l, b.l), h.act(a.l, b.v)};
  add_into(out.v, -F::one(), h.act(b.l, a.v));
  return out;
}

/// A free object of the PD variety: generators m_i = x_i + y_i pairing the
/// i-th letters of X and Y.
struct FreePD {
  FreeRep rep;

  static FreePD on(std::size_t n) { return FreePD{FreeRep{Alphabet::first(n), Alphabet::first(n)}}; }

  std::size_t rank() const { return rep.X.size(); }
  /// m_i, 1-based position.
  PDElement m(std::size_t i) const {
    return {rep, rep.x(rep.X[i - 1]), rep.y(rep.Y[i - 1])};
  }
  std::vector<PDElement> generators() const {
    std::vector<PDElement> out;
    for (std::size_t i = 1; i <= rank(); ++i)
      out.push_back(m(i));
    return out;
  }

  std::string to_string() const {
    std::string s = "F(";
    for (std::size_t i = 1; i <= rank(); ++i)
      s += (i > 1 ? "," : "") + std::string("m") + std::to_string(rep.X[i - 1]);
    return s + ")";
  }

  friend bool operator==(const FreePD &, const FreePD &) = default;
};

/// F on objects. A free representation becomes a free PD algebra only when
/// |X| = |Y|.
inline FreePD functor_F(const FreeRep &w) {
  if (!w.is_balanced())
    throw RankError("F(W) is free in the PD variety only when |X| = |Y|; got " + w.to_string());
  return FreePD{w};
}

/// Plain PD context of a free representation, no rank condition.
inline FreeRep pd_context(const FreeRep &w) { return w; }

inline FreeRep functor_Finv(const FreePD &f) { return f.rep; }

/// Finite PD model F(H); the ker p / im p split is the stored coordinates.
template <class F> FinRep<F> functor_F(const FinRep<F> &h) { return h; }
template <class F> FinRep<F> functor_Finv(const FinRep<F> &h) { return h; }

template <class Target> struct pd_traits;

template <> struct pd_traits<FreeRep> {
  using Elem = PDElement;
  using Rep = rep_traits<FreeRep>;
  static Elem make(const FreeRep &t, LieElement l, ModuleElement v) { return {t, std::move(l), std::move(v)}; }
  static Elem zero(const FreeRep &t) { return PDElement::zero(t); }
  static Elem bracket(const FreeRep &, const Elem &a, const Elem &b) { return pd_bracket(a, b); }
  static const LieElement &l(const Elem &e) { return e.l; }
  static const ModuleElement &v(const Elem &e) { return e.v; }
  static void add(Elem &acc, const Scalar &c, const Elem &x) { acc += c * x; }
  static bool fits(const FreeRep &t, const Elem &e) { return e.ctx == t; }
};

template <class F> struct pd_traits<FinRep<F>> {
  using Elem = FinPDElement<F>;
  using Rep = rep_traits<FinRep<F>>;
  static Elem make(const FinRep<F> &, std::vector<F> l, std::vector<F> v) { return {std::move(l), std::move(v)}; }
  static Elem zero(const FinRep<F> &t) { return {t.zero_l(), t.zero_v()}; }
  static Elem bracket(const FinRep<F> &t, const Elem &a, const Elem &b) { return pd_bracket(t, a, b); }
  static const std::vector<F> &l(const Elem &e) { return e.l; }
  static const std::vector<F> &v(const Elem &e) { return e.v; }
  static void add(Elem &acc, const Scalar &c, const Elem &x) {
    F f = F::from_scalar(c);
    add_into(acc.l, f, x.l);
    add_into(acc.v, f, x.v);
  }
  static bool fits(const FinRep<F> &t, const Elem &e) {
    return e.l.size() == t.lie_dim() && e.v.size() == t.module_dim();
  }
};

/// PD homomorphism out of a free PD algebra: one image per generator.
template <class Target> struct PDHom {
  using Elem = typename pd_traits<Target>::Elem;
  FreePD source;
  Target target;
  std::vector<Elem> images;

  void validate() const {
    if (images.size() != source.rank())
      throw ArityError("PD homomorphism needs one image per generator");
    for (const auto &e : images)
      if (!pd_traits<Target>::fits(target, e))
        throw ContextError("PD image outside the target");
  }
};

inline PDHom<FreeRep> identity_pd_hom(const FreePD &f) {
  return PDHom<FreeRep>{f, f.rep, f.generators()};
}

/// F on morphisms: m_i ↦ φ(x_i) + ψ(y_i).
template <class Target> PDHom<Target> functor_F_hom(const RepHom<Target> &h) {
  h.validate();
  FreePD src = functor_F(h.source);
  PDHom<Target> out{src, h.target, {}};
  for (std::size_t i = 0; i < src.rank(); ++i)
    out.images.push_back(pd_traits<Target>::make(h.target, h.phi.at(h.source.X[i]),
                                                 h.psi.at(h.source.Y[i])));
  return out;
}

/// F⁻¹ on morphisms: x_i ↦ r(f(m_i)), y_i ↦ p(f(m_i)).
template <class Target> RepHom<Target> functor_Finv_hom(const PDHom<Target> &f) {
  f.validate();
  using T = pd_traits<Target>;
  RepHom<Target> out{f.source.rep, f.target, {}, {}, {}, {}};
  for (std::size_t i = 0; i < f.source.rank(); ++i) {
    out.phi.emplace(f.source.rep.X[i], T::l(f.images[i]));
    out.psi.emplace(f.source.rep.Y[i], T::v(f.images[i]));
  }
  return out;
}

/// Extends a PD generator assignment using only PD operations: the basis of
/// F(M) is reached from r(m_i), p(m_i) by iterated brackets.
template <class Target> class PDEvaluator {
public:
  using T = pd_traits<Target>;
  using Elem = typename T::Elem;

  explicit PDEvaluator(const PDHom<Target> &f) : f_(f) {
    f_.validate();
    for (std::size_t i = 0; i < f.source.rank(); ++i) {
      const Elem &img = f.images[i];
      Elem r = T::make(f.target, T::l(img), T::Rep::zero_v(f.target));
      Elem p = T::make(f.target, T::Rep::zero_l(f.target), T::v(img));
      rx_.emplace(f.source.rep.X[i], std::move(r));
      py_.emplace(f.source.rep.Y[i], std::move(p));
    }
  }

  const Elem &basis(const Word &w) {
    if (auto it = memo_l_.find(w); it != memo_l_.end())
      return it->second;
    Elem out = w.size() == 1 ? rx_.at(w[0]) : [&] {
      auto [u, v] = standard_factorization(w);
      Elem a = basis(u);
      Elem b = basis(v);
      return T::bracket(f_.target, a, b);
    }();
    return memo_l_.emplace(w, std::move(out)).first->second;
  }

  const Elem &basis(const ModuleKey &k) {
    if (auto it = memo_v_.find(k); it != memo_v_.end())
      return it->second;
    Elem out = k.word.empty() ? py_.at(k.y) : [&] {
      Elem t = basis(ModuleKey{Word(k.word.begin() + 1, k.word.end()), k.y});
      return T::bracket(f_.target, rx_.at(k.word[0]), t);
    }();
    return memo_v_.emplace(k, std::move(out)).first->second;
  }

  Elem operator()(const PDElement &u) {
    if (!(u.ctx == f_.source.rep))
      throw ContextError("element is not in the source of the PD homomorphism");
    Elem out = T::zero(f_.target);
    for (const auto &[w, c] : u.l.terms())
      T::add(out, c, basis(w));
    for (const auto &[k, c] : u.v.terms())
      T::add(out, c, basis(k));
    return out;
  }

private:
  const PDHom<Target> &f_;
  std::map<Letter, Elem> rx_;
  std::map<Letter, Elem> py_;
  std::map<Word, Elem, GradedLex> memo_l_;
  std::map<ModuleKey, Elem, ModuleKeyLess> memo_v_;
};

template <class Target>
typename pd_traits<Target>::Elem pd_eval(const PDHom<Target> &f, const PDElement &u) {
  return PDEvaluator<Target>(f)(u);
}

/// (X, Y) = ([r(m_1)..r(m_n)], [p(m_1)..p(m_n)]).
inline std::pair<std::vector<PDElement>, std::vector<PDElement>> free_gen_transform(const FreePD &f) {
  std::pair<std::vector<PDElement>, std::vector<PDElement>> out;
  for (const auto &m : f.generators()) {
    out.first.push_back(pd_r(m));
    out.second.push_back(pd_p(m));
  }
  return out;
}

/// Basis key of a free PD algebra slice: L keys precede V keys.
struct PDKey {
  bool is_v = false;
  Word word;
  Letter y = 0;

  std::size_t degree() const { return word.size() + (is_v ? 1 : 0); }
  friend bool operator==(const PDKey &, const PDKey &) = default;
};

struct PDKeyLess {
  bool operator()(const PDKey &a, const PDKey &b) const {
    if (a.is_v != b.is_v)
      return !a.is_v;
    if (!a.is_v)
      return GradedLex{}(a.word, b.word);
    return ModuleKeyLess{}(ModuleKey{a.word, a.y}, ModuleKey{b.word, b.y});
  }
};

inline PDKey pd_key(const Word &w) { return PDKey{false, w, 0}; }
inline PDKey pd_key(const ModuleKey &k) { return PDKey{true, k.word, k.y}; }

template <class F> using PDSpace = Subspace<PDKey, F, PDKeyLess>;

/// All basis keys of F(W) with degree <= d.
inline std::vector<PDKey> pd_basis(const FreeRep &w, std::size_t d) {
  std::vector<PDKey> out;
  for (const auto &a : lyndon_basis_words(w.X, d))
    out.push_back(pd_key(a));
  for (const auto &k : module_basis(w.X, w.Y, d))
    out.push_back(pd_key(k));
  return out;
}

/// ker f ∩ (degree <= d) for a PD hom into F(H), computed from PD evaluation.
template <class F> PDSpace<F> pd_kernel_slice(const PDHom<FinRep<F>> &f, std::size_t d) {
  PDEvaluator<FinRep<F>> ev(f);
  using Dst = std::pair<int, std::size_t>;
  std::vector<std::pair<PDKey, SparseVec<Dst, F>>> images;
  auto coords = [](const FinPDElement<F> &e) {
    SparseVec<Dst, F> out;
    for (std::size_t i = 0; i < e.l.size(); ++i)
      if (!e.l[i].is_zero())
        out.emplace(Dst{0, i}, e.l[i]);
    for (std::size_t i = 0; i < e.v.size(); ++i)
      if (!e.v[i].is_zero())
        out.emplace(Dst{1, i}, e.v[i]);
    return out;
  };
  for (const auto &a : lyndon_basis_words(f.source.rep.X, d))
    images.emplace_back(pd_key(a), coords(ev.basis(a)));
  for (const auto &k : module_basis(f.source.rep.X, f.source.rep.Y, d))
    images.emplace_back(pd_key(k), coords(ev.basis(k)));
  return kernel_of<PDKey, PDKeyLess>(images);
}

/// T1 ⊕ T2 as a subspace of the PD slice.
template <class F> PDSpace<F> direct_sum(const RepSlice<F> &s) {
  PDSpace<F> out;
  for (const auto &row : s.l.basis()) {
    SparseVec<PDKey, F, PDKeyLess> r;
    for (const auto &[w, c] : row)
      r.emplace(pd_key(w), c);
    out.insert(r);
  }
  for (const auto &row : s.v.basis()) {
    SparseVec<PDKey, F, PDKeyLess> r;
    for (const auto &[k, c] : row)
      r.emplace(pd_key(k), c);
    out.insert(r);
  }
  return out;
}

/// (S ∩ ker p, S ∩ im p), read back as a pair of subspaces.
template <class F> RepSlice<F> split(const PDSpace<F> &s, const FreeRep &w, std::size_t d) {
  std::vector<PDKey> lkeys, vkeys;
  for (const auto &k : pd_basis(w, d))
    (k.is_v ? vkeys : lkeys).push_back(k);
  auto lpart = intersect(s, coordinate_span<PDKey, F, PDKeyLess>(lkeys));
  auto vpart = intersect(s, coordinate_span<PDKey, F, PDKeyLess>(vkeys));
  RepSlice<F> out;
  for (const auto &row : lpart.basis()) {
    SparseVec<Word, F, GradedLex> r;
    for (const auto &[k, c] : row)
      r.emplace(k.word, c);
    out.l.insert(r);
  }
  for (const auto &row : vpart.basis()) {
    SparseVec<ModuleKey, F, ModuleKeyLess> r;
    for (const auto &[k, c] : row)
      r.emplace(ModuleKey{k.word, k.y}, c);
    out.v.insert(r);
  }
  return out;
}

} // namespace liepd

#endif
