#include <gtest/gtest.h>

#include "support.hpp"

using namespace liepd;
using support::Rng;

namespace {
const Alphabet X2 = Alphabet::first(2);
AssocElement x(Letter l) { return AssocElement::letter(X2, l); }
} // namespace

TEST(FreeAssoc, ConcatenatesBasisWords) { EXPECT_EQ(assoc_mul(x(1), x(2)).to_string(), "x1*x2"); }

TEST(FreeAssoc, Distributes) { EXPECT_EQ(assoc_mul(x(1) + x(2), x(1)).to_string(), "x1*x1 + x2*x1"); }

TEST(FreeAssoc, UnitLaw) {
  AssocElement a = AssocElement::monomial(X2, {1, 2}, Scalar(3, 2));
  EXPECT_EQ(assoc_mul(AssocElement::unit(X2), a), a);
  EXPECT_EQ(assoc_mul(AssocElement::unit(X2), a).to_string(), "3/2*x1*x2");
}

TEST(FreeAssoc, ContextMismatchThrows) {
  AssocElement a = AssocElement::letter(Alphabet::first(1), 1);
  EXPECT_THROW(assoc_mul(a, x(2)), ContextError);
  EXPECT_THROW(AssocElement::letter(Alphabet::first(1), 3), ContextError);
}

TEST(FreeAssoc, CanonicalPrinting) {
  AssocElement a = AssocElement::monomial(X2, {1, 2}, Scalar(-3, 2)) + AssocElement::unit(X2) - x(2);
  EXPECT_EQ(a.to_string(), "1 - x2 - 3/2*x1*x2");
  EXPECT_EQ(AssocElement(X2).to_string(), "0");
}

TEST(FreeAssoc, ModuleActionExamples) {
  const Alphabet Y1 = Alphabet::first(1);
  ModuleElement y1 = ModuleElement::generator(X2, Y1, 1);
  EXPECT_EQ(module_mul(x(1), y1).to_string(), "x1*y1");
  ModuleElement v = ModuleElement::basis(X2, Y1, ModuleKey{{1}, 1}, Scalar(3, 2)) + y1;
  EXPECT_EQ(module_mul(AssocElement::unit(X2), v), v);
  EXPECT_EQ(v.to_string(), "y1 + 3/2*x1*y1");
  EXPECT_EQ(module_mul(x(1) + x(2), module_mul(x(1), y1)).to_string(), "x1*x1*y1 + x2*x1*y1");
  EXPECT_THROW(module_mul(AssocElement::letter(Alphabet::first(1), 1), y1), ContextError);
}

TEST(FreeAssoc, ModuleDegreeCountsTheGenerator) {
  const Alphabet Y1 = Alphabet::first(1);
  EXPECT_EQ(ModuleElement::generator(X2, Y1, 1).degree(), 1);
  EXPECT_EQ(ModuleElement::basis(X2, Y1, ModuleKey{{1, 2}, 1}).degree(), 3);
  EXPECT_EQ(module_basis(X2, Y1, 3).size(), 1u + 2u + 4u);
}

TEST(FreeAssoc, AssociativityAndModuleAxiomRandomized) {
  Rng r(21);
  const Alphabet X3 = Alphabet::first(3), Y2 = Alphabet::first(2);
  for (int i = 0; i < 200; ++i) {
    AssocElement a = support::random_assoc(r, X3, 3, 3), b = support::random_assoc(r, X3, 3, 3),
                 c = support::random_assoc(r, X3, 2, 3);
    EXPECT_EQ(assoc_mul(assoc_mul(a, b), c), assoc_mul(a, assoc_mul(b, c)));
    EXPECT_EQ(assoc_mul(a, b + c), assoc_mul(a, b) + assoc_mul(a, c));
    ModuleElement v = support::random_module(r, X3, Y2, 3, 3);
    EXPECT_EQ(module_mul(assoc_mul(a, b), v), module_mul(a, module_mul(b, v)));
  }
}

TEST(FreeAssoc, GradingIsAdditive) {
  Rng r(22);
  const Alphabet X3 = Alphabet::first(3);
  for (int i = 0; i < 200; ++i) {
    AssocElement a = support::random_assoc(r, X3, 3, 2), b = support::random_assoc(r, X3, 3, 2);
    int da = r.uniform(0, 3), db = r.uniform(0, 3);
    AssocElement ha(X3), hb(X3);
    for (const auto &[w, c] : a.terms())
      if (static_cast<int>(w.size()) == da)
        ha.add_term(w, c);
    for (const auto &[w, c] : b.terms())
      if (static_cast<int>(w.size()) == db)
        hb.add_term(w, c);
    if (ha.is_zero() || hb.is_zero())
      continue;
    EXPECT_EQ(assoc_mul(ha, hb).degree(), da + db);
  }
}

TEST(FreeAssoc, GradedLexOrder) {
  GradedLex lt;
  EXPECT_TRUE(lt(Word{2}, Word{1, 1}));
  EXPECT_TRUE(lt(Word{1, 2}, Word{2, 1}));
  EXPECT_FALSE(lt(Word{1}, Word{1}));
  ModuleKeyLess mk;
  EXPECT_TRUE(mk(ModuleKey{{}, 2}, ModuleKey{{1}, 1}));
  EXPECT_TRUE(mk(ModuleKey{{1}, 2}, ModuleKey{{2}, 1}));
}
