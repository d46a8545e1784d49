#ifndef LIEPD_CONGRUENCE_HPP
#define LIEPD_CONGRUENCE_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "projder.hpp"
#include "representation.hpp"

namespace liepd {

inline constexpr const char *kFiniteModelCaveat =
    "finite-model oracle: Hom(W,H) enumerated over a finite field; the char-0 setting is not covered";

template <class F> using LVec = SparseVec<Word, F, GradedLex>;
template <class F> using VVec = SparseVec<ModuleKey, F, ModuleKeyLess>;

namespace detail {

template <class F> int max_degree(const LVec<F> &v) {
  return v.empty() ? -1 : static_cast<int>(v.rbegin()->first.size());
}
template <class F> int min_degree(const LVec<F> &v) {
  return v.empty() ? -1 : static_cast<int>(v.begin()->first.size());
}
template <class F> int max_degree(const VVec<F> &v) {
  return v.empty() ? -1 : static_cast<int>(v.rbegin()->first.degree());
}
template <class F> int min_degree(const VVec<F> &v) {
  return v.empty() ? -1 : static_cast<int>(v.begin()->first.degree());
}

template <class F> LVec<F> bracket_basis(const LVec<F> &u, const Word &b) {
  LVec<F> out;
  for (const auto &[w, c] : u)
    axpy(out, c, to_field<F>(basis_bracket(w, b)));
  return out;
}

template <class F> VVec<F> act_basis(const LVec<F> &u, const ModuleKey &k) {
  VVec<F> out;
  for (const auto &[w, c] : u)
    for (const auto &[word, e] : lyndon_expansion(w)) {
      F f = c * F::from_scalar(e);
      if (f.is_zero())
        continue;
      ModuleKey nk{word, k.y};
      nk.word.insert(nk.word.end(), k.word.begin(), k.word.end());
      auto [it, inserted] = out.try_emplace(std::move(nk), F::zero());
      it->second += f;
      if (it->second.is_zero())
        out.erase(it);
    }
  return out;
}

template <class F> VVec<F> letter_times(Letter x, const VVec<F> &v) {
  VVec<F> out;
  for (const auto &[k, c] : v) {
    ModuleKey nk{Word{x}, k.y};
    nk.word.insert(nk.word.end(), k.word.begin(), k.word.end());
    out.emplace(std::move(nk), c);
  }
  return out;
}

} // namespace detail

/// Finitely generated pair (T1,T2) ⊆ W(X,Y) with truncation degree d. The
/// closed slice (congruence generated, restricted to degree <= d) is
/// computed once on first use.
template <class F> class CongruencePair {
public:
  CongruencePair(FreeRep ctx, std::vector<LVec<F>> gens_l, std::vector<VVec<F>> gens_v, std::size_t d)
      : ctx_(std::move(ctx)), gens_l_(std::move(gens_l)), gens_v_(std::move(gens_v)), d_(d),
        state_(std::make_shared<State>()) {
    if (d_ < 1)
      throw std::invalid_argument("truncation degree must be >= 1");
    for (const auto &g : gens_l_) {
      for (const auto &[w, c] : g)
        if (!ctx_.X.contains(w))
          throw ContextError("generator outside " + ctx_.to_string());
      if (detail::max_degree(g) > static_cast<int>(d_))
        throw IndeterminateError("generator degree exceeds truncation " + std::to_string(d_));
    }
    for (const auto &g : gens_v_) {
      for (const auto &[k, c] : g)
        if (!ctx_.X.contains(k.word) || !ctx_.Y.contains(k.y))
          throw ContextError("generator outside " + ctx_.to_string());
      if (detail::max_degree(g) > static_cast<int>(d_))
        throw IndeterminateError("generator degree exceeds truncation " + std::to_string(d_));
    }
  }

  static CongruencePair from_elements(FreeRep ctx, const std::vector<LieElement> &gl,
                                      const std::vector<ModuleElement> &gv, std::size_t d) {
    std::vector<LVec<F>> l;
    std::vector<VVec<F>> v;
    for (const auto &g : gl)
      l.push_back(to_field<F>(g.terms()));
    for (const auto &g : gv)
      v.push_back(to_field<F>(g.terms()));
    return CongruencePair(std::move(ctx), std::move(l), std::move(v), d);
  }

  /// The pair generated by the basis of an already closed slice.
  static CongruencePair from_slice(FreeRep ctx, const RepSlice<F> &s, std::size_t d) {
    return CongruencePair(std::move(ctx), s.l.basis(), s.v.basis(), d);
  }

  static CongruencePair zero(FreeRep ctx, std::size_t d) { return CongruencePair(std::move(ctx), {}, {}, d); }
  static CongruencePair full(FreeRep ctx, std::size_t d) {
    return from_slice(ctx, full_slice<F>(ctx, d), d);
  }

  const FreeRep &context() const { return ctx_; }
  std::size_t degree() const { return d_; }
  const std::vector<LVec<F>> &gens_l() const { return gens_l_; }
  const std::vector<VVec<F>> &gens_v() const { return gens_v_; }

  /// Closed slice: fixed point of linear span, brackets with L(X) basis
  /// elements, A(X)-multiples, and the action of T1 on the module basis.
  /// Products whose degree exceeds d are dropped.
  const RepSlice<F> &slice() const {
    std::call_once(state_->once, [this] { state_->slice = close(); });
    return state_->slice;
  }

  bool contains(const CongruencePair &o) const { return slice().contains(o.slice()); }
  friend bool operator==(const CongruencePair &a, const CongruencePair &b) {
    return a.ctx_ == b.ctx_ && a.d_ == b.d_ && a.slice() == b.slice();
  }

  std::string to_string() const {
    return ctx_.to_string() + " closed slice (verified up to degree " + std::to_string(d_) + ")\n" +
           slice().to_string();
  }

private:
  struct State {
    std::once_flag once;
    RepSlice<F> slice;
  };

  RepSlice<F> close() const {
    const int d = static_cast<int>(d_);
    RepSlice<F> s;
    std::vector<LVec<F>> ql;
    std::vector<VVec<F>> qv;
    auto put_l = [&](LVec<F> v) {
      if (detail::max_degree(v) > d)
        return;
      if (s.l.insert(v))
        ql.push_back(std::move(v));
    };
    auto put_v = [&](VVec<F> v) {
      if (detail::max_degree(v) > d)
        return;
      if (s.v.insert(v))
        qv.push_back(std::move(v));
    };
    for (const auto &g : gens_l_)
      put_l(g);
    for (const auto &g : gens_v_)
      put_v(g);
    const auto &lb = lyndon_basis_words(ctx_.X, d_);
    const auto mb = module_basis(ctx_.X, ctx_.Y, d_);
    while (!ql.empty() || !qv.empty()) {
      if (!ql.empty()) {
        LVec<F> u = std::move(ql.back());
        ql.pop_back();
        const int lo = detail::min_degree(u);
        for (const auto &b : lb)
          if (lo + static_cast<int>(b.size()) <= d)
            put_l(detail::bracket_basis(u, b));
        for (const auto &k : mb)
          if (lo + static_cast<int>(k.degree()) <= d)
            put_v(detail::act_basis(u, k));
        continue;
      }
      VVec<F> v = std::move(qv.back());
      qv.pop_back();
      if (detail::min_degree(v) + 1 > d)
        continue;
      for (Letter x : ctx_.X)
        put_v(detail::letter_times(x, v));
    }
    return s;
  }

  FreeRep ctx_;
  std::vector<LVec<F>> gens_l_;
  std::vector<VVec<F>> gens_v_;
  std::size_t d_;
  std::shared_ptr<State> state_;
};

template <class F> CongruencePair<F> congruence_close(const CongruencePair<F> &t) {
  return CongruencePair<F>::from_slice(t.context(), t.slice(), t.degree());
}

namespace detail {

template <class F> std::vector<F> field_elements() { return F::elements(); }

template <class F>
std::vector<F> eval_l(HomEvaluator<FinRep<F>> &ev, const FinRep<F> &h, const LVec<F> &v) {
  std::vector<F> out = h.zero_l();
  for (const auto &[w, c] : v)
    add_into(out, c, ev.basis(w));
  return out;
}

template <class F>
std::vector<F> eval_v(HomEvaluator<FinRep<F>> &ev, const FinRep<F> &h, const VVec<F> &v) {
  std::vector<F> out = h.zero_v();
  for (const auto &[k, c] : v)
    add_into(out, c, ev.basis(k));
  return out;
}

} // namespace detail

/// Every (φ,ψ) ∈ Hom(W(X,Y),H), in lexicographic order of the coordinate
/// tuple (x-images first, then y-images).
template <class F>
std::vector<RepHom<FinRep<F>>> all_homs(const FreeRep &w, const FinRep<F> &h, std::uint64_t budget = 1u << 16) {
  static_assert(is_finite_field<F>::value, "Hom-set enumeration needs a finite field");
  const std::size_t coords = h.lie_dim() * w.X.size() + h.module_dim() * w.Y.size();
  const auto elems = detail::field_elements<F>();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < coords; ++i) {
    count *= elems.size();
    if (count > budget)
      throw BudgetError("Hom(W,H) has more than " + std::to_string(budget) + " elements");
  }
  std::vector<RepHom<FinRep<F>>> out;
  std::vector<std::size_t> digits(coords, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    RepHom<FinRep<F>> hom{w, h, {}, {}, {}, {}};
    std::size_t pos = 0;
    for (Letter x : w.X) {
      std::vector<F> v(h.lie_dim());
      for (auto &c : v)
        c = elems[digits[pos++]];
      hom.phi.emplace(x, std::move(v));
    }
    for (Letter y : w.Y) {
      std::vector<F> v(h.module_dim());
      for (auto &c : v)
        c = elems[digits[pos++]];
      hom.psi.emplace(y, std::move(v));
    }
    out.push_back(std::move(hom));
    for (std::size_t i = coords; i-- > 0;) {
      if (++digits[i] < elems.size())
        break;
      digits[i] = 0;
    }
  }
  return out;
}

/// T′_H: homomorphisms whose kernels contain the generators of T. Kernels
/// are congruences, so killing the generators kills T.
template <class F>
std::vector<RepHom<FinRep<F>>> solutions_of(const CongruencePair<F> &t, const FinRep<F> &h,
                                            std::uint64_t budget = 1u << 16) {
  std::vector<RepHom<FinRep<F>>> out;
  for (auto &hom : all_homs(t.context(), h, budget)) {
    HomEvaluator<FinRep<F>> ev(hom);
    bool ok = true;
    for (const auto &g : t.gens_l())
      if (!all_zero(detail::eval_l(ev, h, g))) {
        ok = false;
        break;
      }
    if (ok)
      for (const auto &g : t.gens_v())
        if (!all_zero(detail::eval_v(ev, h, g))) {
          ok = false;
          break;
        }
    if (ok)
      out.push_back(std::move(hom));
  }
  return out;
}

/// A′ for a finite explicit set A of homomorphisms: (∩ ker φ, ∩ ker ψ) at
/// degree <= d. The empty set gives the whole slice.
template <class F>
RepSlice<F> prime_of_homs(const std::vector<RepHom<FinRep<F>>> &homs, const FreeRep &w, std::size_t d) {
  RepSlice<F> acc = full_slice<F>(w, d);
  for (const auto &h : homs) {
    RepSlice<F> k = kernel_slice(h, d);
    acc.l = intersect(acc.l, k.l);
    acc.v = intersect(acc.v, k.v);
  }
  return acc;
}

template <class F> struct ClosureReport {
  std::vector<RepHom<FinRep<F>>> primal;
  CongruencePair<F> dbl;
  bool is_closed;
  std::string caveat = kFiniteModelCaveat;

  std::string to_string() const {
    return "solutions: " + std::to_string(primal.size()) + "\nclosed: " + (is_closed ? "yes" : "no") +
           "\nT'' " + dbl.to_string() + "\nnote: " + caveat;
  }
};

template <class F> ClosureReport<F> double_prime(const CongruencePair<F> &t, const FinRep<F> &h,
                                                 std::uint64_t budget = 1u << 16) {
  auto sols = solutions_of(t, h, budget);
  auto dbl = CongruencePair<F>::from_slice(t.context(), prime_of_homs(sols, t.context(), t.degree()), t.degree());
  bool closed = dbl.slice() == t.slice();
  return ClosureReport<F>{std::move(sols), std::move(dbl), closed};
}

/// Cl_H(W) truncated at d: all intersections of kernel slices, including
/// the empty intersection (the whole slice).
template <class F> std::vector<RepSlice<F>> closed_lattice(const FreeRep &w, const FinRep<F> &h, std::size_t d) {
  std::vector<RepSlice<F>> out{full_slice<F>(w, d)};
  std::set<std::string> seen{out[0].to_string()};
  std::vector<RepSlice<F>> kernels;
  std::set<std::string> seen_kernels;
  for (const auto &hom : all_homs(w, h)) {
    RepSlice<F> k = kernel_slice(hom, d);
    if (seen_kernels.insert(k.to_string()).second)
      kernels.push_back(std::move(k));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto &k : kernels) {
      RepSlice<F> m{intersect(out[i].l, k.l), intersect(out[i].v, k.v)};
      if (seen.insert(m.to_string()).second)
        out.push_back(std::move(m));
    }
  return out;
}

template <class F> bool same_lattice(const std::vector<RepSlice<F>> &a, const std::vector<RepSlice<F>> &b) {
  auto in = [](const RepSlice<F> &s, const std::vector<RepSlice<F>> &v) {
    for (const auto &o : v)
      if (o == s)
        return true;
    return false;
  };
  for (const auto &s : a)
    if (!in(s, b))
      return false;
  for (const auto &s : b)
    if (!in(s, a))
      return false;
  return true;
}

/// φ1(x) − φ2(x) ∈ T1 and ψ1(y) − ψ2(y) ∈ T2 for every generator.
template <class F>
bool beta_related(const RepHom<FreeRep> &h1, const RepHom<FreeRep> &h2, const CongruencePair<F> &t) {
  if (!(h1.source == h2.source) || !(h1.target == h2.target))
    throw ContextError("beta_related: homomorphisms with different source or target");
  if (!(h1.target == t.context()))
    throw ContextError("beta_related: congruence is not on the common target");
  const int d = static_cast<int>(t.degree());
  for (Letter x : h1.source.X) {
    LieElement diff = h1.phi.at(x) - h2.phi.at(x);
    if (diff.degree() > d)
      throw IndeterminateError("image difference on " + letter_name('x', x) + " has degree above " +
                               std::to_string(d));
    if (!t.slice().l.contains(to_field<F>(diff.terms())))
      return false;
  }
  for (Letter y : h1.source.Y) {
    ModuleElement diff = h1.psi.at(y) - h2.psi.at(y);
    if (diff.degree() > d)
      throw IndeterminateError("image difference on " + letter_name('y', y) + " has degree above " +
                               std::to_string(d));
    if (!t.slice().v.contains(to_field<F>(diff.terms())))
      return false;
  }
  return true;
}

/// The same relation tested on every basis element of the source whose
/// image difference stays within degree d.
template <class F>
bool beta_related_spanning(const RepHom<FreeRep> &h1, const RepHom<FreeRep> &h2, const CongruencePair<F> &t) {
  const int d = static_cast<int>(t.degree());
  HomEvaluator<FreeRep> e1(h1), e2(h2);
  for (const auto &w : lyndon_basis_words(h1.source.X, t.degree())) {
    LieElement diff = e1.basis(w) - e2.basis(w);
    if (diff.degree() <= d && !t.slice().l.contains(to_field<F>(diff.terms())))
      return false;
  }
  for (const auto &k : module_basis(h1.source.X, h1.source.Y, t.degree())) {
    ModuleElement diff = e1.basis(k) - e2.basis(k);
    if (diff.degree() <= d && !t.slice().v.contains(to_field<F>(diff.terms())))
      return false;
  }
  return true;
}

/// (T1 ∩ L(X1), T2 ∩ A(X1)Y1) for W1 ⊆ W2.
template <class F> CongruencePair<F> restrict_congruence(const CongruencePair<F> &t, const FreeRep &w1) {
  if (!t.context().contains(w1))
    throw ContextError(w1.to_string() + " is not contained in " + t.context().to_string());
  RepSlice<F> sub = full_slice<F>(w1, t.degree());
  RepSlice<F> s{intersect(t.slice().l, sub.l), intersect(t.slice().v, sub.v)};
  return CongruencePair<F>::from_slice(w1, s, t.degree());
}

/// The pair on W2 ⊇ W1 generated by the closed slice of T.
template <class F> CongruencePair<F> extend_to(const CongruencePair<F> &t, const FreeRep &w2) {
  if (!w2.contains(t.context()))
    throw ContextError(t.context().to_string() + " is not contained in " + w2.to_string());
  return CongruencePair<F>(w2, t.slice().l.basis(), t.slice().v.basis(), t.degree());
}

/// T1 ⊕ T2 as a PD-side subspace of F(W).
template <class F> PDSpace<F> transport_F(const CongruencePair<F> &t) {
  functor_F(t.context());
  return direct_sum(t.slice());
}

/// (S ∩ ker p, S ∩ im p) back on W.
template <class F> CongruencePair<F> transport_Finv(const PDSpace<F> &s, const FreeRep &w, std::size_t d) {
  return CongruencePair<F>::from_slice(w, split(s, w, d), d);
}

/// f1(m_i) − f2(m_i) ∈ S for every generator m_i.
template <class F>
bool pd_beta_related(const PDHom<FreeRep> &f1, const PDHom<FreeRep> &f2, const PDSpace<F> &s, std::size_t d) {
  if (!(f1.source == f2.source) || !(f1.target == f2.target))
    throw ContextError("pd_beta_related: homomorphisms with different source or target");
  for (std::size_t i = 0; i < f1.images.size(); ++i) {
    PDElement diff = f1.images[i] - f2.images[i];
    if (diff.degree() > static_cast<int>(d))
      throw IndeterminateError("image difference has degree above " + std::to_string(d));
    SparseVec<PDKey, F, PDKeyLess> v;
    for (const auto &[w, c] : diff.l.terms())
      if (F f = F::from_scalar(c); !f.is_zero())
        v.emplace(pd_key(w), f);
    for (const auto &[k, c] : diff.v.terms())
      if (F f = F::from_scalar(c); !f.is_zero())
        v.emplace(pd_key(k), f);
    if (!s.contains(v))
      return false;
  }
  return true;
}

} // namespace liepd

#endif
