#include <gtest/gtest.h>

#include "support.hpp"

using namespace liepd;
using support::QRep;
using support::Rng;

namespace {
const FreeRep W22 = FreePD::on(2).rep;
PDElement L(const LieElement &l) { return PDElement::from_l(W22, l); }
PDElement V(const ModuleElement &v) { return PDElement::from_v(W22, v); }
} // namespace

TEST(ProjDer, BracketExamples) {
  PDElement u = L(W22.x(1)) + V(W22.y(1));
  EXPECT_EQ(pd_bracket(u, L(W22.x(2))).to_string(), "[x1,x2] - x2*y1");
  EXPECT_TRUE(pd_bracket(V(W22.y(1)), V(W22.y(2))).is_zero());
  EXPECT_TRUE(pd_bracket(u, u).is_zero());
}

TEST(ProjDer, ProjectionExamples) {
  PDElement u = L(W22.x(1)) + V(W22.y(1));
  EXPECT_EQ(pd_p(u).to_string(), "y1");
  EXPECT_EQ(pd_r(u).to_string(), "x1");
  EXPECT_EQ(pd_p(pd_p(u)), pd_p(u));
  EXPECT_EQ(pd_r(u) + pd_p(u), u);
}

TEST(ProjDer, AxiomsOnRandomElements) {
  Rng r(51);
  const FreeRep w = FreePD::on(3).rep;
  for (int i = 0; i < 150; ++i) {
    PDElement a = support::random_pd(r, w, 2), b = support::random_pd(r, w, 2), c = support::random_pd(r, w, 2);
    EXPECT_EQ(pd_p(pd_p(a)), pd_p(a));
    EXPECT_EQ(pd_p(pd_bracket(a, b)), pd_bracket(pd_p(a), b) + pd_bracket(a, pd_p(b)));
    EXPECT_TRUE((pd_bracket(pd_bracket(a, b), c) + pd_bracket(pd_bracket(b, c), a) + pd_bracket(pd_bracket(c, a), b)).is_zero());
    EXPECT_TRUE(pd_bracket(pd_p(a), pd_p(b)).is_zero());
    EXPECT_EQ(pd_bracket(a, b), -pd_bracket(b, a));
  }
}

TEST(ProjDer, KernelOfPIsASubalgebraAndImageIsAModule) {
  Rng r(52);
  const FreeRep w = FreePD::on(2).rep;
  for (int i = 0; i < 100; ++i) {
    PDElement a = pd_r(support::random_pd(r, w, 2)), b = pd_r(support::random_pd(r, w, 2));
    PDElement v = pd_p(support::random_pd(r, w, 2));
    EXPECT_TRUE(pd_p(pd_bracket(a, b)).is_zero());
    EXPECT_TRUE(pd_r(pd_bracket(a, v)).is_zero());
    EXPECT_EQ(pd_bracket(a, v).v, act(a.l, v.v));
  }
}

TEST(ProjDer, FreeGeneratorsAndFunctorOnObjects) {
  FreePD f1 = functor_F(FreeRep{Alphabet{1}, Alphabet{1}});
  EXPECT_EQ(f1.to_string(), "F(m1)");
  EXPECT_EQ(f1.m(1).to_string(), "x1 + y1");
  EXPECT_THROW(functor_F(FreeRep{Alphabet::first(2), Alphabet::first(1)}), RankError);
  auto [xs, ys] = free_gen_transform(f1);
  ASSERT_EQ(xs.size(), 1u);
  EXPECT_EQ(xs[0].to_string(), "x1");
  EXPECT_EQ(ys[0].to_string(), "y1");
  auto [x2, y2] = free_gen_transform(FreePD::on(2));
  EXPECT_EQ(x2.size(), 2u);
  EXPECT_EQ(y2.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(x2[i], pd_r(FreePD::on(2).m(i + 1)));
    EXPECT_EQ(y2[i], pd_p(FreePD::on(2).m(i + 1)));
  }
  EXPECT_EQ(functor_Finv(functor_F(W22)), W22);
  EXPECT_EQ(functor_F(functor_Finv(FreePD::on(3))).rep, FreePD::on(3).rep);
}

TEST(ProjDer, FunctorOnHomomorphisms) {
  const FreeRep w{Alphabet{1, 2}, Alphabet{1, 2}};
  RepHom<FreeRep> h{w, w, {}, {}, {}, {}};
  h.phi = {{1, lie_bracket(w.x(1), w.x(2))}, {2, w.x(2)}};
  h.psi = {{1, act(w.x(2), w.y(1))}, {2, w.y(2)}};
  auto f = functor_F_hom(h);
  EXPECT_EQ(pd_eval(f, f.source.m(1)).to_string(), "[x1,x2] + x2*y1");

  auto id = functor_F_hom(identity_hom(w));
  for (std::size_t i = 1; i <= 2; ++i)
    EXPECT_EQ(id.images[i - 1], identity_pd_hom(FreePD{w}).images[i - 1]);
  EXPECT_TRUE(same_on_generators(functor_Finv_hom(identity_pd_hom(FreePD{w})), identity_hom(w)));
}

TEST(ProjDer, FunctorRoundTripsOnRandomHoms) {
  Rng r(53);
  for (int i = 0; i < 60; ++i) {
    FreeRep src = support::random_balanced(r, 2), tgt = support::random_rep(r, 2, 2);
    auto h = support::random_free_hom(r, src, tgt);
    EXPECT_TRUE(same_on_generators(functor_Finv_hom(functor_F_hom(h)), h));

    FreePD s = FreePD::on(static_cast<std::size_t>(r.uniform(1, 2)));
    auto f = support::random_pd_hom(r, s, FreePD::on(2).rep);
    auto back = functor_F_hom(functor_Finv_hom(f));
    EXPECT_EQ(back.images, f.images);
  }
}

TEST(ProjDer, FunctorImageIsAPDHomomorphism) {
  Rng r(54);
  for (int i = 0; i < 40; ++i) {
    FreeRep src = support::random_balanced(r, 2), tgt = FreePD::on(2).rep;
    auto f = functor_F_hom(support::random_free_hom(r, src, tgt));
    PDEvaluator<FreeRep> ev(f);
    PDElement a = support::random_pd(r, src, 2), b = support::random_pd(r, src, 2);
    EXPECT_EQ(ev(pd_bracket(a, b)), pd_bracket(ev(a), ev(b)));
    EXPECT_EQ(ev(pd_p(a)), pd_p(ev(a)));
    // evaluation of a PD hom given only on m_i: it commutes with p
    auto g = support::random_pd_hom(r, FreePD{src}, tgt);
    PDEvaluator<FreeRep> eg(g);
    EXPECT_EQ(eg(pd_p(a)), pd_p(eg(a)));
    EXPECT_EQ(eg(pd_bracket(a, b)), pd_bracket(eg(a), eg(b)));
    EXPECT_EQ(eg(a + b), eg(a) + eg(b));
  }
}

TEST(ProjDer, KernelTransportIntoFinReps) {
  Rng r(55);
  for (int i = 0; i < 20; ++i) {
    FreeRep src = support::random_balanced(r, 2);
    QRep q = support::random_qrep(r);
    auto h = support::random_fin_hom<Scalar>(r, src, q);
    auto lhs = pd_kernel_slice(functor_F_hom(h), 3);
    auto rhs = direct_sum(kernel_slice(h, 3));
    EXPECT_TRUE(lhs == rhs);
    EXPECT_TRUE(split(lhs, src, 3) == kernel_slice(h, 3));
  }
}

TEST(ProjDer, FinitePDBracketMatchesFormula) {
  std::vector<Scalar> c(8, Scalar(0));
  c[(0 * 2 + 1) * 2 + 1] = 1;
  c[(1 * 2 + 0) * 2 + 1] = -1;
  QRep q(2, c, 2, {support::QMat{{0, 0}, {0, 1}}, support::QMat{{0, 0}, {-1, 0}}});
  FinPDElement<Scalar> a{q.e(0), q.f(1)}, b{q.e(1), q.f(0)};
  auto br = pd_bracket(q, a, b);
  EXPECT_EQ(br.l, q.bracket(q.e(0), q.e(1)));
  auto expect_v = q.act(q.e(0), q.f(0));
  add_into(expect_v, Scalar(-1), q.act(q.e(1), q.f(1)));
  EXPECT_EQ(br.v, expect_v);
}
