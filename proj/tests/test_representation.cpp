#include <gtest/gtest.h>

#include "support.hpp"

using namespace liepd;
using support::QMat;
using support::QRep;
using support::Rng;

namespace {
const FreeRep W21{Alphabet::first(2), Alphabet::first(1)};
}

TEST(Representation, ActionExamples) {
  EXPECT_EQ(act(W21.x(1), W21.y(1)).to_string(), "x1*y1");
  EXPECT_EQ(act(lie_bracket(W21.x(1), W21.x(2)), W21.y(1)).to_string(), "x1*x2*y1 - x2*x1*y1");
  EXPECT_TRUE(act(W21.zero_l(), W21.y(1)).is_zero());
  EXPECT_THROW(W21.x(3), ContextError);
  EXPECT_THROW(W21.y(2), ContextError);
}

TEST(Representation, ActionIsCompatibleWithBracket) {
  Rng r(41);
  const FreeRep w{Alphabet::first(3), Alphabet::first(2)};
  for (int i = 0; i < 150; ++i) {
    LieElement a = support::random_lie(r, w.X, 2, 2), b = support::random_lie(r, w.X, 2, 2);
    ModuleElement v = support::random_module(r, w.X, w.Y, 1, 2);
    EXPECT_EQ(act(lie_bracket(a, b), v), act(a, act(b, v)) - act(b, act(a, v)));
  }
}

TEST(Representation, EvaluationExamples) {
  const FreeRep src{Alphabet{1}, Alphabet{1}}, tgt{Alphabet{2}, Alphabet{1}};
  RepHom<FreeRep> h{src, tgt, {{1, tgt.x(2)}}, {{1, tgt.y(1)}}, {}, {}};
  EXPECT_TRUE(hom_eval(h, lie_bracket(src.x(1), src.x(1))).is_zero());
  EXPECT_EQ(hom_eval(h, act(src.x(1), src.y(1))).to_string(), "x2*y1");

  RepHom<FreeRep> z{src, src, {{1, src.zero_l()}}, {{1, src.y(1)}}, {}, {}};
  EXPECT_TRUE(hom_eval(z, act(src.x(1), src.y(1))).is_zero());

  for (int mu : {-2, 0, 3}) {
    QRep hq = QRep::abelian(1, 1, {QMat{{Scalar(mu)}}});
    RepHom<QRep> e{src, hq, {{1, hq.e(0)}}, {{1, hq.f(0)}}, {}, {}};
    ModuleElement xxy = act(src.x(1), act(src.x(1), src.y(1)));
    EXPECT_EQ(hom_eval(e, xxy), std::vector<Scalar>{Scalar(mu * mu)});
  }
}

TEST(Representation, EvaluationRejectsMissingOrMisSortedImages) {
  RepHom<FreeRep> h{W21, W21, {{1, W21.x(1)}}, {{1, W21.y(1)}}, {}, {}};
  EXPECT_THROW(h.validate(), ValidationError);
  const FreeRep other{Alphabet::first(3), Alphabet::first(1)};
  RepHom<FreeRep> bad{W21, W21, {{1, W21.x(1)}, {2, other.x(3)}}, {{1, W21.y(1)}}, {}, {}};
  EXPECT_THROW(bad.validate(), SortError);
}

TEST(Representation, HomCheckExamples) {
  Rng r(42);
  auto ext = support::random_free_hom(r, W21, W21);
  EXPECT_TRUE(hom_check(ext, 3).pass);
  EXPECT_TRUE(hom_check(identity_hom(W21), 3).pass);
  EXPECT_EQ(hom_check(identity_hom(W21), 3).to_string(), "pass (verified up to degree 3)");

  RepHom<FreeRep> planted = identity_hom(W21);
  planted.override_v.emplace(ModuleKey{{1}, 1}, W21.zero_v());
  auto rep = hom_check(planted, 3);
  EXPECT_FALSE(rep.pass);
  ASSERT_FALSE(rep.violations.empty());
  EXPECT_EQ(rep.violations.front(), "action (x1,y1)");

  RepHom<FreeRep> planted_l = identity_hom(W21);
  planted_l.override_l.emplace(Word{1, 2}, W21.zero_l());
  auto rl = hom_check(planted_l, 2);
  EXPECT_FALSE(rl.pass);
  EXPECT_EQ(rl.violations.front(), "lie (x1,x2)");
}

TEST(Representation, EvaluationRespectsAllOperations) {
  Rng r(43);
  const FreeRep src{Alphabet::first(2), Alphabet::first(2)};
  for (int i = 0; i < 60; ++i) {
    const FreeRep tgt = FreeRep{Alphabet::first(static_cast<std::size_t>(r.uniform(1, 3))), Alphabet::first(2)};
    auto h = support::random_free_hom(r, src, tgt);
    QRep q = support::random_qrep(r);
    auto hq = support::random_fin_hom<Scalar>(r, src, q);
    HomEvaluator<FreeRep> ev(h);
    HomEvaluator<QRep> eq(hq);
    LieElement a = support::random_lie(r, src.X, 3, 2), b = support::random_lie(r, src.X, 2, 2);
    ModuleElement v = support::random_module(r, src.X, src.Y, 2, 2), u = support::random_module(r, src.X, src.Y, 2, 2);
    Scalar c = r.rational();

    EXPECT_TRUE(ev(src.zero_l()).is_zero());
    EXPECT_EQ(ev(a + b), ev(a) + ev(b));
    EXPECT_EQ(ev(c * a), c * ev(a));
    EXPECT_EQ(ev(lie_bracket(a, b)), lie_bracket(ev(a), ev(b)));
    EXPECT_EQ(ev(u + c * v), ev(u) + c * ev(v));
    EXPECT_EQ(ev(act(a, v)), act(ev(a), ev(v)));

    auto sum = eq(a);
    add_into(sum, Scalar(1), eq(b));
    EXPECT_EQ(eq(a + b), sum);
    EXPECT_EQ(eq(lie_bracket(a, b)), q.bracket(eq(a), eq(b)));
    EXPECT_EQ(eq(act(a, v)), q.act(eq(a), eq(v)));
    EXPECT_TRUE(hom_check(hq, 3).pass);
  }
}

TEST(Representation, CompositionEvaluatesInOrder) {
  Rng r(44);
  for (int i = 0; i < 40; ++i) {
    auto f = support::random_free_hom(r, W21, W21);
    auto g = support::random_free_hom(r, W21, W21);
    auto gf = compose(g, f);
    LieElement a = support::random_lie(r, W21.X, 3, 2);
    ModuleElement v = support::random_module(r, W21.X, W21.Y, 2, 2);
    EXPECT_EQ(hom_eval(gf, a), hom_eval(g, hom_eval(f, a)));
    EXPECT_EQ(hom_eval(gf, v), hom_eval(g, hom_eval(f, v)));
  }
}

TEST(Representation, FinRepValidation) {
  std::vector<Scalar> not_antisym(8, Scalar(0));
  not_antisym[(0 * 2 + 1) * 2 + 1] = 1;
  EXPECT_THROW(QRep(2, not_antisym, 0, {QMat{}, QMat{}}), ValidationError);

  std::vector<Scalar> c(27, Scalar(0));
  auto set = [&](int i, int j, int k, int v) {
    c[static_cast<std::size_t>((i * 3 + j) * 3 + k)] = v;
    c[static_cast<std::size_t>((j * 3 + i) * 3 + k)] = -v;
  };
  set(0, 1, 0, 1);
  set(1, 2, 1, 1);
  EXPECT_THROW(QRep(3, c, 0, {QMat{}, QMat{}, QMat{}}), ValidationError);

  std::vector<Scalar> b(8, Scalar(0));
  b[(0 * 2 + 1) * 2 + 1] = 1;
  b[(1 * 2 + 0) * 2 + 1] = -1;
  EXPECT_THROW(QRep(2, b, 1, {QMat{{Scalar(0)}}, QMat{{Scalar(1)}}}), ValidationError);
  EXPECT_NO_THROW(QRep(2, b, 1, {QMat{{Scalar(5)}}, QMat{{Scalar(0)}}}));
  EXPECT_THROW(QRep::abelian(1, 2, {QMat{{Scalar(1)}}}), ValidationError);
}

TEST(Representation, RandomFamiliesAreValidAndCloseUnderDirectSum) {
  Rng r(45);
  for (int i = 0; i < 30; ++i) {
    QRep a = support::random_qrep(r), b = support::random_qrep(r);
    QRep s = a.direct_sum(b);
    EXPECT_EQ(s.lie_dim(), a.lie_dim() + b.lie_dim());
    EXPECT_EQ(s.module_dim(), a.module_dim() + b.module_dim());
  }
}

TEST(Representation, CoproductExamples) {
  auto cp = coproduct(FreeRep{Alphabet{1}, Alphabet{1}}, FreeRep{Alphabet{2}, Alphabet{2}});
  EXPECT_EQ(cp.sum.to_string(), "W(x1,x2;y1,y2)");
  auto empty = coproduct(FreeRep{}, FreeRep{});
  EXPECT_EQ(empty.sum, FreeRep{});
  auto clash = coproduct(FreeRep{Alphabet{1}, Alphabet{1}}, FreeRep{Alphabet{1}, Alphabet{1}});
  EXPECT_EQ(clash.sum.to_string(), "W(x1,x2;y1,y2)");
  EXPECT_EQ(clash.rename_x.at(1), 2u);
  EXPECT_EQ(clash.inj2.phi.at(1), clash.sum.x(2));
}

TEST(Representation, CoproductUniversalProperty) {
  Rng r(46);
  for (int i = 0; i < 30; ++i) {
    FreeRep w1 = support::random_rep(r, 2, 2), w2 = support::random_rep(r, 2, 2);
    auto cp = coproduct(w1, w2);
    EXPECT_EQ(cp.sum.X.size(), w1.X.size() + w2.X.size());
    EXPECT_EQ(cp.sum.Y.size(), w1.Y.size() + w2.Y.size());
    const FreeRep h{Alphabet::first(2), Alphabet::first(1)};
    auto a1 = support::random_free_hom(r, w1, h), a2 = support::random_free_hom(r, w2, h);
    auto med = mediating(cp, a1, a2);
    EXPECT_TRUE(same_on_generators(compose(med, cp.inj1), a1));
    EXPECT_TRUE(same_on_generators(compose(med, cp.inj2), a2));
    // every generator of the sum is hit by one of the injections
    std::set<Letter> hx, hy;
    for (const auto *inj : {&cp.inj1, &cp.inj2}) {
      for (const auto &[x, img] : inj->phi)
        hx.insert(img.terms().begin()->first[0]);
      for (const auto &[y, img] : inj->psi)
        hy.insert(img.terms().begin()->first.y);
    }
    EXPECT_EQ(hx.size(), cp.sum.X.size());
    EXPECT_EQ(hy.size(), cp.sum.Y.size());
  }
}

TEST(Representation, RankExamples) {
  EXPECT_EQ(rank_invariants(W21, 3), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(rank_invariants(FreeRep{Alphabet{}, Alphabet{1}}, 2), (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_EQ(rank_invariants(FreeRep{Alphabet{1}, Alphabet{}}, 2), (std::pair<std::size_t, std::size_t>{1, 0}));
  EXPECT_THROW(rank_invariants(W21, 0), std::invalid_argument);
}

TEST(Representation, RankIsInvariantUnderPermutations) {
  for (std::size_t nx = 1; nx <= 3; ++nx)
    for (std::size_t ny = 1; ny <= 3; ++ny) {
      FreeRep w{Alphabet::first(nx), Alphabet::first(ny)};
      RepHom<FreeRep> perm{w, w, {}, {}, {}, {}};
      for (Letter x : w.X)
        perm.phi.emplace(x, w.x(x % nx + 1));
      for (Letter y : w.Y)
        perm.psi.emplace(y, w.y(ny + 1 - y));
      EXPECT_EQ(rank_invariants(perm, 3), rank_invariants(w, 3));
      EXPECT_EQ(rank_invariants(w, 3), (std::pair<std::size_t, std::size_t>{nx, ny}));
    }
}
