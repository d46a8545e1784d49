#ifndef LIEPD_WORDS_HPP
#define LIEPD_WORDS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "projder.hpp"

namespace liepd {

/// A map k → k given by a name and an evaluator; only ever probed on
/// finitely many rationals.
struct ScalarDescriptor {
  std::string name;
  std::function<Scalar(const Scalar &)> f;

  Scalar operator()(const Scalar &s) const { return f(s); }
};

inline ScalarDescriptor scalar_id() {
  return {"id", [](const Scalar &s) { return s; }};
}

/// Candidate descriptors offered to the scalar-word solver.
inline std::vector<ScalarDescriptor> scalar_candidates() {
  return {
      scalar_id(),
      {"zero", [](const Scalar &) { return Scalar::zero(); }},
      {"double", [](const Scalar &s) { return Scalar(2) * s; }},
      {"square", [](const Scalar &s) { return s * s; }},
      {"neg", [](const Scalar &s) { return -s; }},
  };
}

inline std::vector<Scalar> scalar_probes() {
  return {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(1, 2), Scalar(1, 3)};
}

/// Free PD algebra on m1..mn with X = Y = {1..n}.
inline const FreeRep &free_pd_rep(std::size_t n) {
  static const std::vector<FreeRep> reps = [] {
    std::vector<FreeRep> v;
    for (std::size_t k = 0; k <= 4; ++k)
      v.push_back(FreePD::on(k).rep);
    return v;
  }();
  return reps.at(n);
}

/// α[r(m1),r(m2)] + β[r(m2),p(m1)] + γ[r(m1),p(m2)]
struct BracketWordFamily {
  Scalar alpha, beta, gamma;

  PDElement word() const {
    const FreeRep &w = free_pd_rep(2);
    PDElement out = PDElement::from_l(w, alpha * lie_bracket(w.x(1), w.x(2)));
    out.v = beta * act(w.x(2), w.y(1)) + gamma * act(w.x(1), w.y(2));
    return out;
  }
  std::string to_string() const {
    return "(" + alpha.to_string() + "," + beta.to_string() + "," + gamma.to_string() + ")";
  }
};

/// δ r(m) + ε p(m)
struct ProjWordFamily {
  Scalar delta, eps;

  PDElement word() const {
    const FreeRep &w = free_pd_rep(1);
    return PDElement{w, delta * w.x(1), eps * w.y(1)};
  }
  std::string to_string() const { return "(" + delta.to_string() + "," + eps.to_string() + ")"; }
};

/// a1 r(m1) + a2 p(m1) + b1 r(m2) + b2 p(m2)
struct PlusWordFamily {
  Scalar a1, a2, b1, b2;

  PDElement word() const {
    const FreeRep &w = free_pd_rep(2);
    return PDElement{w, a1 * w.x(1) + b1 * w.x(2), a2 * w.y(1) + b2 * w.y(2)};
  }
  std::string to_string() const {
    return "(" + a1.to_string() + "," + a2.to_string() + "," + b1.to_string() + "," +
           b2.to_string() + ")";
  }
};

/// {w0, w_λ, w+, w[,], w_p}. w0 is always 0 in F(∅); w_λ is
/// φ(λ) r(m1) + ψ(λ) p(m1).
struct WordSystem {
  ScalarDescriptor phi = scalar_id();
  ScalarDescriptor psi = scalar_id();
  PDElement plus = PlusWordFamily{1, 1, 1, 1}.word();
  PDElement bracket = BracketWordFamily{1, -1, 1}.word();
  PDElement proj = ProjWordFamily{0, 1}.word();

  static WordSystem identity() { return WordSystem{}; }

  PDElement scalar_word(const Scalar &lambda) const {
    const FreeRep &w = free_pd_rep(1);
    return PDElement{w, phi(lambda) * w.x(1), psi(lambda) * w.y(1)};
  }

  std::string describe() const {
    return "scalar=(" + phi.name + "," + psi.name + ") plus=" + plus.to_string() +
           " bracket=" + bracket.to_string() + " proj=" + proj.to_string();
  }
};

enum class Op { Zero, Scalar, Plus, Bracket, Proj };

inline std::size_t arity(Op op) {
  switch (op) {
  case Op::Zero:
    return 0;
  case Op::Scalar:
  case Op::Proj:
    return 1;
  default:
    return 2;
  }
}

/// ω*(h1,…,hn) = w_ω(h1,…,hn): substitute the arguments for m1..mn.
inline PDElement word_apply(const WordSystem &ws, Op op, const std::vector<PDElement> &args,
                            const Scalar &lambda = Scalar::one()) {
  if (args.size() != arity(op))
    throw ArityError("operation expects " + std::to_string(arity(op)) + " arguments, got " +
                     std::to_string(args.size()));
  if (op == Op::Zero)
    return PDElement::zero(FreeRep{});
  for (const auto &a : args)
    a.check(args.front());
  const PDElement *word = nullptr;
  PDElement scalar_w;
  switch (op) {
  case Op::Scalar:
    scalar_w = ws.scalar_word(lambda);
    word = &scalar_w;
    break;
  case Op::Plus:
    word = &ws.plus;
    break;
  case Op::Bracket:
    word = &ws.bracket;
    break;
  default:
    word = &ws.proj;
  }
  PDHom<FreeRep> sub{FreePD::on(args.size()), args.front().ctx, args};
  return pd_eval(sub, *word);
}

/// The starred operations of a word system on one fixed free PD algebra.
class Starred {
public:
  Starred(const WordSystem &ws, FreeRep ctx) : ws_(ws), ctx_(std::move(ctx)) {}

  PDElement zero() const { return PDElement::zero(ctx_); }
  PDElement plus(const PDElement &a, const PDElement &b) const { return word_apply(ws_, Op::Plus, {a, b}); }
  PDElement scal(const Scalar &l, const PDElement &a) const { return word_apply(ws_, Op::Scalar, {a}, l); }
  PDElement bracket(const PDElement &a, const PDElement &b) const {
    return word_apply(ws_, Op::Bracket, {a, b});
  }
  PDElement proj(const PDElement &a) const { return word_apply(ws_, Op::Proj, {a}); }
  /// r*(m) = m ⊥ (−1)∗𝔭(m)
  PDElement retr(const PDElement &a) const { return plus(a, scal(Scalar(-1), proj(a))); }

  const FreeRep &ctx() const { return ctx_; }

private:
  const WordSystem &ws_;
  FreeRep ctx_;
};

/// Evaluates the PD term of basis element `key` (an iterated bracket of
/// r(m_i) and p(m_i)) with starred operations at the given arguments.
class StarredBasisEval {
public:
  StarredBasisEval(const Starred &s, std::vector<PDElement> args) : s_(s), args_(std::move(args)) {}

  const PDElement &operator()(const PDKey &k) {
    if (auto it = memo_.find(k); it != memo_.end())
      return it->second;
    PDElement out;
    if (!k.is_v) {
      if (k.word.size() == 1)
        out = s_.retr(args_.at(k.word[0] - 1));
      else {
        auto [u, v] = standard_factorization(k.word);
        PDElement a = (*this)(pd_key(u));
        PDElement b = (*this)(pd_key(v));
        out = s_.bracket(a, b);
      }
    } else if (k.word.empty()) {
      out = s_.proj(args_.at(k.y - 1));
    } else {
      PDElement a = (*this)(pd_key(Word{k.word[0]}));
      PDElement b = (*this)(PDKey{true, Word(k.word.begin() + 1, k.word.end()), k.y});
      out = s_.bracket(a, b);
    }
    return memo_.emplace(k, std::move(out)).first->second;
  }

private:
  const Starred &s_;
  std::vector<PDElement> args_;
  std::map<PDKey, PDElement, PDKeyLess> memo_;
};

inline SparseVec<PDKey, Scalar, PDKeyLess> pd_coords(const PDElement &u) {
  SparseVec<PDKey, Scalar, PDKeyLess> out;
  for (const auto &[w, c] : u.l.terms())
    out.emplace(pd_key(w), c);
  for (const auto &[k, c] : u.v.terms())
    out.emplace(pd_key(k), c);
  return out;
}

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  std::string witness;
};

struct AxiomReport {
  std::size_t degree = 0;
  std::vector<AxiomResult> results;

  bool pass() const {
    for (const auto &r : results)
      if (!r.pass)
        return false;
    return true;
  }
  std::optional<AxiomResult> first_failure() const {
    for (const auto &r : results)
      if (!r.pass)
        return r;
    return std::nullopt;
  }
  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto &r : results)
      if (!r.pass)
        out.push_back(r.axiom);
    return out;
  }
  const AxiomResult *find(const std::string &axiom) const {
    for (const auto &r : results)
      if (r.axiom == axiom)
        return &r;
    return nullptr;
  }

  std::string to_string() const {
    std::string s = "starred axioms (verified up to degree " + std::to_string(degree) + ")";
    for (const auto &r : results)
      s += "\n" + r.axiom + ": " + (r.pass ? "pass" : "fail " + r.witness);
    return s;
  }
};

/// Checks the PD-variety axioms for the starred operations at the free
/// generators of F(m1,m2,m3), comparing degree <= d truncations, followed
/// by the σ_F proxy: the generator-fixing map F → F*_W, read on the
/// degree <= d basis, must have full rank.
inline AxiomReport starred_axiom_check(const WordSystem &ws, std::size_t d, bool stop_at_first = false) {
  const FreeRep &g = free_pd_rep(3);
  Starred s(ws, g);
  const PDElement a = FreePD{g}.m(1), b = FreePD{g}.m(2), c = FreePD{g}.m(3);
  AxiomReport rep;
  rep.degree = d;
  bool stop = false;

  auto record = [&](const std::string &name, const std::function<std::optional<std::string>()> &check) {
    if (stop)
      return;
    auto bad = check();
    rep.results.push_back({name, !bad.has_value(), bad.value_or("")});
    if (bad && stop_at_first)
      stop = true;
  };
  auto differ = [&](const PDElement &lhs, const PDElement &rhs) -> std::optional<std::string> {
    PDElement diff = (lhs - rhs).truncated(d);
    if (diff.is_zero())
      return std::nullopt;
    return diff.to_string();
  };
  auto probes = scalar_probes();
  auto each_pair = [&](const std::function<std::optional<std::string>(const Scalar &, const Scalar &)> &f)
      -> std::optional<std::string> {
    for (const auto &l : probes)
      for (const auto &m : probes)
        if (auto bad = f(l, m))
          return "at lambda=" + l.to_string() + " mu=" + m.to_string() + ": " + *bad;
    return std::nullopt;
  };
  auto each = [&](const std::function<std::optional<std::string>(const Scalar &)> &f)
      -> std::optional<std::string> {
    for (const auto &l : probes)
      if (auto bad = f(l))
        return "at lambda=" + l.to_string() + ": " + *bad;
    return std::nullopt;
  };

  record("plus commutative", [&] { return differ(s.plus(a, b), s.plus(b, a)); });
  record("plus associative", [&] { return differ(s.plus(s.plus(a, b), c), s.plus(a, s.plus(b, c))); });
  record("plus zero", [&] { return differ(s.plus(a, s.zero()), a); });
  record("plus inverse", [&] { return differ(s.plus(a, s.scal(Scalar(-1), a)), s.zero()); });
  record("scalar unit", [&] { return differ(s.scal(Scalar(1), a), a); });
  record("scalar compatible", [&] {
    return each_pair([&](const Scalar &l, const Scalar &m) { return differ(s.scal(l, s.scal(m, a)), s.scal(l * m, a)); });
  });
  record("scalar distributive", [&] {
    return each_pair([&](const Scalar &l, const Scalar &m) {
      return differ(s.scal(l + m, a), s.plus(s.scal(l, a), s.scal(m, a)));
    });
  });
  record("scalar linear", [&] {
    return each([&](const Scalar &l) { return differ(s.scal(l, s.plus(a, b)), s.plus(s.scal(l, a), s.scal(l, b))); });
  });
  record("bracket additive left", [&] {
    return differ(s.bracket(s.plus(a, b), c), s.plus(s.bracket(a, c), s.bracket(b, c)));
  });
  record("bracket additive right", [&] {
    return differ(s.bracket(a, s.plus(b, c)), s.plus(s.bracket(a, b), s.bracket(a, c)));
  });
  record("bracket homogeneous", [&] {
    return each([&](const Scalar &l) {
      if (auto bad = differ(s.bracket(s.scal(l, a), b), s.scal(l, s.bracket(a, b))))
        return bad;
      return differ(s.bracket(a, s.scal(l, b)), s.scal(l, s.bracket(a, b)));
    });
  });
  record("alternating", [&] {
    if (auto bad = differ(s.bracket(a, a), s.zero()))
      return bad;
    return differ(s.plus(s.bracket(a, b), s.bracket(b, a)), s.zero());
  });
  record("Jacobi", [&] {
    PDElement j = s.plus(s.plus(s.bracket(s.bracket(a, b), c), s.bracket(s.bracket(b, c), a)),
                         s.bracket(s.bracket(c, a), b));
    return differ(j, s.zero());
  });
  record("proj linear", [&] {
    if (auto bad = differ(s.proj(s.plus(a, b)), s.plus(s.proj(a), s.proj(b))))
      return bad;
    return each([&](const Scalar &l) { return differ(s.proj(s.scal(l, a)), s.scal(l, s.proj(a))); });
  });
  record("proj idempotent", [&] { return differ(s.proj(s.proj(a)), s.proj(a)); });
  record("proj derivation", [&] {
    return differ(s.proj(s.bracket(a, b)), s.plus(s.bracket(s.proj(a), b), s.bracket(a, s.proj(b))));
  });
  record("iso proxy", [&]() -> std::optional<std::string> {
    StarredBasisEval sigma(s, {a, b, c});
    Subspace<PDKey, Scalar, PDKeyLess> span;
    auto basis = pd_basis(g, d);
    for (const auto &k : basis)
      if (!span.insert(pd_coords(sigma(k).truncated(d))))
        return "image of the degree <= " + std::to_string(d) + " basis has rank " +
               std::to_string(span.dim()) + " < " + std::to_string(basis.size()) + " (first dependent " +
               (k.is_v ? module_key_to_string(ModuleKey{k.word, k.y}) : LyndonBasisElement::bracketing(k.word)) +
               ")";
    return std::nullopt;
  });
  return rep;
}

struct ScalarReport {
  bool pass = true;
  std::string failure;
};

/// φ(μ)φ(λ) = φ(μλ), φ(λ+μ) = φ(λ)+φ(μ) (and the same for ψ) on the
/// probe set, then φ(1) = ψ(1) = 1.
inline ScalarReport scalar_word_constraints(const ScalarDescriptor &phi, const ScalarDescriptor &psi) {
  auto probes = scalar_probes();
  for (const auto &l : probes)
    for (const auto &m : probes)
      for (const auto *f : {&phi, &psi}) {
        const std::string which = f == &phi ? "phi" : "psi";
        const std::string at = " at lambda=" + l.to_string() + " mu=" + m.to_string();
        if (!((*f)(m) * (*f)(l) == (*f)(m * l)))
          return {false, "mult_hom (" + which + ")" + at};
        if (!((*f)(l + m) == (*f)(l) + (*f)(m)))
          return {false, "add_hom (" + which + ")" + at};
      }
  if (!phi(Scalar(1)).is_one() || !psi(Scalar(1)).is_one())
    return {false, "unit"};
  return {true, ""};
}

struct Candidate {
  std::string component;
  std::string params;
  std::string verdict;
};

/// Bracket words over R³ with w_p = p; survivors are the α[m1,m2], α ≠ 0.
inline std::vector<BracketWordFamily> bracket_word_solve(const std::vector<Scalar> &range, std::size_t d = 3,
                                                         std::vector<Candidate> *table = nullptr) {
  std::vector<BracketWordFamily> out;
  for (const auto &al : range)
    for (const auto &be : range)
      for (const auto &ga : range) {
        BracketWordFamily fam{al, be, ga};
        WordSystem ws;
        ws.bracket = fam.word();
        auto rep = starred_axiom_check(ws, d, true);
        auto fail = rep.first_failure();
        if (!fail)
          out.push_back(fam);
        if (table)
          table->push_back({"bracket", fam.to_string(), fail ? fail->axiom : "survivor"});
      }
  return out;
}

/// The four idempotent candidates (δ,ε) ∈ {0,1}² with w[,] = [m1,m2].
inline std::vector<ProjWordFamily> proj_word_solve(std::size_t d = 3, std::vector<Candidate> *table = nullptr) {
  std::vector<ProjWordFamily> out;
  for (int de : {0, 1})
    for (int ep : {0, 1}) {
      ProjWordFamily fam{de, ep};
      WordSystem ws;
      ws.proj = fam.word();
      auto fail = starred_axiom_check(ws, d, true).first_failure();
      if (!fail)
        out.push_back(fam);
      if (table)
        table->push_back({"proj", fam.to_string(), fail ? fail->axiom : "survivor"});
    }
  return out;
}

/// Addition words a1 r(m1) + a2 p(m1) + b1 r(m2) + b2 p(m2) over R⁴.
inline std::vector<PlusWordFamily> plus_word_solve(const std::vector<Scalar> &range, std::size_t d = 3,
                                                   std::vector<Candidate> *table = nullptr) {
  std::vector<PlusWordFamily> out;
  for (const auto &a1 : range)
    for (const auto &a2 : range)
      for (const auto &b1 : range)
        for (const auto &b2 : range) {
          PlusWordFamily fam{a1, a2, b1, b2};
          WordSystem ws;
          ws.plus = fam.word();
          auto fail = starred_axiom_check(ws, d, true).first_failure();
          if (!fail)
            out.push_back(fam);
          if (table)
            table->push_back({"plus", fam.to_string(), fail ? fail->axiom : "survivor"});
        }
  return out;
}

inline std::vector<std::pair<ScalarDescriptor, ScalarDescriptor>>
scalar_word_solve(std::vector<Candidate> *table = nullptr) {
  std::vector<std::pair<ScalarDescriptor, ScalarDescriptor>> out;
  for (const auto &phi : scalar_candidates())
    for (const auto &psi : scalar_candidates()) {
      auto r = scalar_word_constraints(phi, psi);
      if (r.pass)
        out.emplace_back(phi, psi);
      if (table)
        table->push_back({"scalar", "(" + phi.name + "," + psi.name + ")", r.pass ? "survivor" : r.failure});
    }
  return out;
}

/// σ_F on F(m1..mn): the degree-k component is scaled by α^(k−1).
inline PDElement alpha_scaling(const PDElement &u, const Scalar &alpha, bool inverse = false) {
  PDElement out = PDElement::zero(u.ctx);
  const int top = u.degree();
  for (int k = 1; k <= top; ++k) {
    Scalar f = alpha.pow(static_cast<unsigned>(k - 1));
    out += (inverse ? f.inv() : f) * u.component(static_cast<std::size_t>(k));
  }
  return out;
}

struct InnerReport {
  bool sigma_hom = true;
  bool sigma_natural = true;
  bool criterion = true;
  bool b1 = true;
  std::vector<std::string> notes;

  bool pass() const { return sigma_hom && sigma_natural && criterion && b1; }
};

/// Sample endomorphisms of F(m1,m2) used by the inner-witness checks.
inline std::vector<PDHom<FreeRep>> sample_pd_homs() {
  const FreeRep &g = free_pd_rep(2);
  FreePD f{g};
  auto m1 = f.m(1), m2 = f.m(2);
  std::vector<PDHom<FreeRep>> out;
  out.push_back({f, g, {pd_bracket(m1, m2), m2}});
  out.push_back({f, g, {m2, m1}});
  out.push_back({f, g, {m1 + Scalar(2) * pd_p(m2), pd_bracket(pd_r(m1), m2)}});
  out.push_back({f, g, {PDElement::zero(g), pd_r(m1) + pd_p(m2)}});
  out.push_back({f, g, {Scalar(1, 2) * m1 - m2, pd_bracket(m1, pd_bracket(m1, m2))}});
  return out;
}

/// For a survivor with w[,] = α[m1,m2]:
///  * σ_F (α^(k−1) on degree k) is a generator-fixing homomorphism F → F*_W
///    and is natural: σ_F(h(u)) equals the starred evaluation of u's term at
///    the arguments σ_F(h(m_i)), for every sampled h and basis element u;
///  * c_F = α⁻¹·id is an isomorphism F → F*_W with c_F h = h c_D;
///  * σ_F h σ_D⁻¹ passes hom_check for every sampled h.
inline InnerReport inner_witness_check(const WordSystem &ws, const Scalar &alpha,
                                       const std::vector<PDHom<FreeRep>> &homs, std::size_t d = 4) {
  InnerReport rep;
  if (alpha.is_zero()) {
    rep.sigma_hom = rep.criterion = false;
    rep.notes.push_back("alpha = 0 has no inverse");
    return rep;
  }
  auto check_hom_into_starred = [&](const FreeRep &ctx, const std::function<PDElement(const PDElement &)> &map,
                                    const std::string &label) {
    Starred s(ws, ctx);
    auto basis = pd_basis(ctx, d);
    auto elem = [&](const PDKey &k) {
      return k.is_v ? PDElement::from_v(ctx, ModuleElement::basis(ctx.X, ctx.Y, ModuleKey{k.word, k.y}))
                    : PDElement::from_l(ctx, LieElement::basis(ctx.X, k.word));
    };
    bool ok = true;
    for (const auto &ka : basis) {
      PDElement ua = elem(ka);
      if (!(map(pd_p(ua)).truncated(d) == s.proj(map(ua)).truncated(d))) {
        ok = false;
        rep.notes.push_back(label + ": p fails on " + ua.to_string());
      }
      for (const auto &kb : basis) {
        if (ka.degree() + kb.degree() > d)
          continue;
        PDElement ub = elem(kb);
        if (!(map(pd_bracket(ua, ub)).truncated(d) == s.bracket(map(ua), map(ub)).truncated(d))) {
          ok = false;
          rep.notes.push_back(label + ": bracket fails on (" + ua.to_string() + "," + ub.to_string() + ")");
        }
        if (!(map(ua + ub).truncated(d) == s.plus(map(ua), map(ub)).truncated(d))) {
          ok = false;
          rep.notes.push_back(label + ": plus fails");
        }
      }
      for (const auto &l : scalar_probes())
        if (!(map(l * ua).truncated(d) == s.scal(l, map(ua)).truncated(d))) {
          ok = false;
          rep.notes.push_back(label + ": scalar fails");
          break;
        }
    }
    return ok;
  };

  const FreeRep &g2 = free_pd_rep(2);
  auto sigma = [&](const PDElement &u) { return alpha_scaling(u, alpha); };
  auto sigma_inv = [&](const PDElement &u) { return alpha_scaling(u, alpha, true); };
  auto c_map = [&](const PDElement &u) { return alpha.inv() * u; };

  rep.sigma_hom = check_hom_into_starred(g2, sigma, "sigma");
  for (const auto &m : FreePD{g2}.generators())
    if (!(sigma(m) == m))
      rep.sigma_hom = false;
  rep.criterion = check_hom_into_starred(g2, c_map, "alpha^-1");

  for (const auto &h : homs) {
    PDEvaluator<FreeRep> ev(h);
    Starred s(ws, h.target);
    std::vector<PDElement> args;
    for (const auto &m : h.source.generators())
      args.push_back(sigma(ev(m)));
    StarredBasisEval star(s, args);
    for (const auto &k : pd_basis(h.source.rep, d)) {
      PDElement u = k.is_v ? PDElement::from_v(h.source.rep, ModuleElement::basis(h.source.rep.X, h.source.rep.Y,
                                                                                  ModuleKey{k.word, k.y}))
                           : PDElement::from_l(h.source.rep, LieElement::basis(h.source.rep.X, k.word));
      if (!(sigma(ev(u)) == star(k))) {
        rep.sigma_natural = false;
        rep.notes.push_back("sigma not natural on " + u.to_string());
      }
      if (!(c_map(ev(u)) == ev(c_map(u)))) {
        rep.criterion = false;
        rep.notes.push_back("alpha^-1 not natural on " + u.to_string());
      }
    }
    // B1: g = σ h σ⁻¹ must be an ordinary homomorphism.
    RepHom<FreeRep> gh{h.source.rep, h.target, {}, {}, {}, {}};
    auto g = [&](const PDElement &u) { return sigma(ev(sigma_inv(u))); };
    for (const auto &k : pd_basis(h.source.rep, d)) {
      if (!k.is_v) {
        PDElement img = g(PDElement::from_l(h.source.rep, LieElement::basis(h.source.rep.X, k.word)));
        if (!img.v.is_zero())
          rep.b1 = false;
        if (k.word.size() == 1)
          gh.phi.emplace(k.word[0], img.l);
        gh.override_l.emplace(k.word, img.l);
      } else {
        ModuleKey mk{k.word, k.y};
        PDElement img = g(PDElement::from_v(h.source.rep, ModuleElement::basis(h.source.rep.X, h.source.rep.Y, mk)));
        if (!img.l.is_zero())
          rep.b1 = false;
        if (k.word.empty())
          gh.psi.emplace(k.y, img.v);
        gh.override_v.emplace(mk, img.v);
      }
    }
    if (!hom_check(gh, d).pass) {
      rep.b1 = false;
      rep.notes.push_back("sigma h sigma^-1 is not a homomorphism");
    }
  }
  return rep;
}

struct Classification {
  std::vector<Candidate> table;
  std::vector<WordSystem> survivors;
  std::vector<Scalar> survivor_alpha;
  std::vector<bool> inner;
};

/// Runs every solver, then re-checks the full cross product of partial
/// survivors and the inner witness for each.
inline Classification word_classify(const std::vector<Scalar> &range, std::size_t d = 3) {
  Classification out;
  auto scal = scalar_word_solve(&out.table);
  auto plus = plus_word_solve(range, d, &out.table);
  auto brk = bracket_word_solve(range, d, &out.table);
  auto proj = proj_word_solve(d, &out.table);
  auto homs = sample_pd_homs();
  for (const auto &[phi, psi] : scal)
    for (const auto &pl : plus)
      for (const auto &br : brk)
        for (const auto &pr : proj) {
          WordSystem ws{phi, psi, pl.word(), br.word(), pr.word()};
          if (!starred_axiom_check(ws, d, true).pass())
            continue;
          out.survivors.push_back(ws);
          out.survivor_alpha.push_back(br.alpha);
          out.inner.push_back(inner_witness_check(ws, br.alpha, homs, d).pass());
        }
  return out;
}

} // namespace liepd

#endif
