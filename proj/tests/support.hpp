#ifndef LIEPD_TESTS_SUPPORT_HPP
#define LIEPD_TESTS_SUPPORT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "liepd/liepd.hpp"

namespace support {

using namespace liepd;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Nonzero scalar from a small fixed menu.
  Scalar nonzero() {
    static const Scalar menu[] = {Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(3), Scalar(1, 2), Scalar(-1, 3)};
    return menu[uniform(0, 6)];
  }
  Scalar small_int(int r) { return Scalar(uniform(-r, r)); }
  Scalar rational() { return Scalar(uniform(-9, 9), uniform(1, 7)); }

  template <class T> const T &pick(const std::vector<T> &v) { return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))]; }

private:
  std::mt19937_64 g_;
};

/// Witt's formula (1/d) Σ_{e|d} μ(e) n^{d/e}, from scratch.
inline long witt_count(long n, long d) {
  auto mobius = [](long e) {
    int sign = 1;
    for (long p = 2; p * p <= e; ++p)
      if (e % p == 0) {
        e /= p;
        if (e % p == 0)
          return 0;
        sign = -sign;
      }
    if (e > 1)
      sign = -sign;
    return sign;
  };
  auto ipow = [](long b, long e) {
    long r = 1;
    while (e-- > 0)
      r *= b;
    return r;
  };
  long sum = 0;
  for (long e = 1; e <= d; ++e)
    if (d % e == 0)
      sum += mobius(e) * ipow(n, d / e);
  return sum / d;
}

/// Independent noncommutative polynomial type used as the expansion oracle.
using Poly = std::map<std::vector<Letter>, mpq_class>;

inline void poly_add(Poly &a, const Poly &b, const mpq_class &s = 1) {
  for (const auto &[w, c] : b) {
    mpq_class &t = a[w];
    t += s * c;
    if (t == 0)
      a.erase(w);
  }
}

inline Poly poly_mul(const Poly &a, const Poly &b) {
  Poly out;
  for (const auto &[u, c] : a)
    for (const auto &[v, d] : b) {
      std::vector<Letter> w = u;
      w.insert(w.end(), v.begin(), v.end());
      Poly t{{w, c * d}};
      poly_add(out, t);
    }
  return out;
}

inline Poly commutator(const Poly &a, const Poly &b) {
  Poly out = poly_mul(a, b);
  poly_add(out, poly_mul(b, a), -1);
  return out;
}

inline mpq_class to_mpq(const Scalar &s) { return mpq_class(s.to_string()); }

inline Poly oracle_expand(const LieExpr &e) {
  return std::visit(
      [](const auto &n) -> Poly {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LieExpr::Gen>)
          return Poly{{{n.x}, 1}};
        else if constexpr (std::is_same_v<T, LieExpr::Scaled>) {
          Poly out;
          poly_add(out, oracle_expand(*n.e), to_mpq(n.c));
          return out;
        } else if constexpr (std::is_same_v<T, LieExpr::Sum>) {
          Poly out = oracle_expand(*n.a);
          poly_add(out, oracle_expand(*n.b));
          return out;
        } else
          return commutator(oracle_expand(*n.a), oracle_expand(*n.b));
      },
      e.node);
}

inline Poly to_poly(const AssocElement &a) {
  Poly out;
  for (const auto &[w, c] : a.terms())
    out.emplace(w, to_mpq(c));
  return out;
}

using ExprPtr = std::shared_ptr<const LieExpr>;

/// Random bracket expression of degree <= max_deg over x1..xn.
inline ExprPtr random_expr(Rng &r, int n, int max_deg) {
  if (max_deg <= 1)
    return LieExpr::gen(static_cast<Letter>(r.uniform(1, n)));
  switch (r.uniform(0, 5)) {
  case 0:
    return LieExpr::gen(static_cast<Letter>(r.uniform(1, n)));
  case 1:
    return LieExpr::scaled(r.nonzero(), random_expr(r, n, max_deg));
  case 2:
    return LieExpr::sum(random_expr(r, n, max_deg), random_expr(r, n, max_deg));
  default: {
    int left = r.uniform(1, max_deg - 1);
    return LieExpr::bracket(random_expr(r, n, left), random_expr(r, n, max_deg - left));
  }
  }
}

inline LieElement random_lie(Rng &r, const Alphabet &x, std::size_t max_deg, int terms) {
  LieElement out(x);
  if (x.empty())
    return out;
  const auto &basis = lyndon_basis_words(x, max_deg);
  for (int i = 0; i < terms; ++i)
    out += LieElement::basis(x, r.pick(basis), r.nonzero());
  return out;
}

inline AssocElement random_assoc(Rng &r, const Alphabet &x, std::size_t max_deg, int terms) {
  AssocElement out(x);
  for (int i = 0; i < terms; ++i) {
    std::size_t len = static_cast<std::size_t>(r.uniform(0, static_cast<int>(max_deg)));
    Word w;
    for (std::size_t k = 0; k < len && !x.empty(); ++k)
      w.push_back(x.begin()[r.uniform(0, static_cast<int>(x.size()) - 1)]);
    out += AssocElement::monomial(x, w, r.nonzero());
  }
  return out;
}

inline ModuleElement random_module(Rng &r, const Alphabet &x, const Alphabet &y, std::size_t max_deg, int terms) {
  ModuleElement out(x, y);
  if (y.empty())
    return out;
  const auto keys = module_basis(x, y, max_deg);
  for (int i = 0; i < terms; ++i)
    out += ModuleElement::basis(x, y, r.pick(keys), r.nonzero());
  return out;
}

inline PDElement random_pd(Rng &r, const FreeRep &w, std::size_t max_deg) {
  return PDElement{w, random_lie(r, w.X, max_deg, r.uniform(0, 3)), random_module(r, w.X, w.Y, max_deg, r.uniform(0, 3))};
}

inline FreeRep random_rep(Rng &r, int max_x, int max_y) {
  return FreeRep{Alphabet::first(static_cast<std::size_t>(r.uniform(0, max_x))),
                 Alphabet::first(static_cast<std::size_t>(r.uniform(0, max_y)))};
}

inline FreeRep random_balanced(Rng &r, int max_n) {
  Alphabet a = Alphabet::first(static_cast<std::size_t>(r.uniform(1, max_n)));
  return FreeRep{a, a};
}

/// Homomorphism between free representations with low-degree images.
inline RepHom<FreeRep> random_free_hom(Rng &r, const FreeRep &src, const FreeRep &tgt) {
  RepHom<FreeRep> h{src, tgt, {}, {}, {}, {}};
  for (Letter x : src.X)
    h.phi.emplace(x, random_lie(r, tgt.X, 2, r.uniform(0, 2)));
  for (Letter y : src.Y)
    h.psi.emplace(y, random_module(r, tgt.X, tgt.Y, 2, r.uniform(0, 2)));
  return h;
}

inline PDHom<FreeRep> random_pd_hom(Rng &r, const FreePD &src, const FreeRep &tgt) {
  PDHom<FreeRep> f{src, tgt, {}};
  for (std::size_t i = 0; i < src.rank(); ++i)
    f.images.push_back(random_pd(r, tgt, 2));
  return f;
}

using QRep = FinRep<Scalar>;
using QMat = QRep::Matrix;

/// Valid rational representations with n, m <= 2 drawn from a few families.
inline QRep random_qrep(Rng &r) {
  auto si = [&](int k) { return Scalar(r.uniform(-k, k)); };
  switch (r.uniform(0, 3)) {
  case 0: {
    // abelian, commuting action matrices a_i M + b_i I
    std::size_t n = static_cast<std::size_t>(r.uniform(1, 2)), m = static_cast<std::size_t>(r.uniform(1, 2));
    QMat base(m, std::vector<Scalar>(m));
    for (auto &row : base)
      for (auto &c : row)
        c = si(2);
    std::vector<QMat> act;
    for (std::size_t i = 0; i < n; ++i) {
      Scalar a = si(2), b = si(1);
      QMat mat = base;
      for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
          mat[s][t] = a * base[s][t] + (s == t ? b : Scalar(0));
      act.push_back(mat);
    }
    return QRep::abelian(n, m, act);
  }
  case 1: {
    // [e1,e2] = e2 with a one-dimensional module: e1 acts by λ, e2 by 0
    std::vector<Scalar> c(8, Scalar(0));
    c[(0 * 2 + 1) * 2 + 1] = 1;
    c[(1 * 2 + 0) * 2 + 1] = -1;
    return QRep(2, c, 1, {QMat{{si(3)}}, QMat{{Scalar(0)}}});
  }
  case 2: {
    // [e1,e2] = e2 acting on itself
    std::vector<Scalar> c(8, Scalar(0));
    c[(0 * 2 + 1) * 2 + 1] = 1;
    c[(1 * 2 + 0) * 2 + 1] = -1;
    QMat a1{{0, 0}, {0, 1}}, a2{{0, 0}, {-1, 0}};
    return QRep(2, c, 2, {a1, a2});
  }
  default: {
    // one-dimensional Lie algebra acting by a random 2x2 matrix
    QMat a{{si(2), si(2)}, {si(2), si(2)}};
    return QRep::abelian(1, 2, {a});
  }
  }
}

template <class F> std::vector<F> random_vec(Rng &r, std::size_t n) {
  std::vector<F> v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(F::from_scalar(Scalar(r.uniform(-2, 2))));
  return v;
}

template <class F> RepHom<FinRep<F>> random_fin_hom(Rng &r, const FreeRep &src, const FinRep<F> &h) {
  RepHom<FinRep<F>> out{src, h, {}, {}, {}, {}};
  for (Letter x : src.X)
    out.phi.emplace(x, random_vec<F>(r, h.lie_dim()));
  for (Letter y : src.Y)
    out.psi.emplace(y, random_vec<F>(r, h.module_dim()));
  return out;
}

/// Random term AST in the shapes the parser produces.
inline TermPtr random_term(Rng &r, bool pd, int depth) {
  auto t = std::make_shared<Term>();
  auto gen = [&] {
    t->kind = Term::Kind::Gen;
    const int p = r.uniform(0, pd ? 2 : 1);
    t->pool = p == 0 ? 'x' : p == 1 ? 'y' : 'm';
    t->index = static_cast<Letter>(r.uniform(1, 3));
  };
  if (depth <= 0) {
    gen();
    return t;
  }
  switch (r.uniform(0, pd ? 7 : 5)) {
  case 0:
    gen();
    break;
  case 1: {
    t->kind = Term::Kind::Sum;
    const int k = r.uniform(1, 3);
    for (int i = 0; i < k; ++i) {
      t->kids.push_back(random_term(r, pd, depth - 1));
      t->neg.push_back(r.coin());
    }
    if (k == 1)
      t->neg[0] = true;
    break;
  }
  case 2: {
    t->kind = Term::Kind::Product;
    auto num = std::make_shared<Term>();
    num->kind = Term::Kind::Num;
    num->num = Scalar(r.uniform(0, 9), r.uniform(1, 4));
    t->kids.push_back(num);
    t->kids.push_back(random_term(r, pd, depth - 1));
    break;
  }
  case 3:
    t->kind = Term::Kind::Action;
    t->kids = {random_term(r, pd, depth - 1), random_term(r, pd, depth - 1)};
    break;
  case 4:
  case 5:
    t->kind = Term::Kind::Bracket;
    t->kids = {random_term(r, pd, depth - 1), random_term(r, pd, depth - 1)};
    break;
  case 6:
    t->kind = Term::Kind::Proj;
    t->kids = {random_term(r, pd, depth - 1)};
    break;
  default:
    t->kind = Term::Kind::Retr;
    t->kids = {random_term(r, pd, depth - 1)};
    break;
  }
  return t;
}

} // namespace support

#endif
