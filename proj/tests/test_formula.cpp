#include <doctest.h>

#include <algorithm>

#include "ordkit/arith.hpp"
#include "ordkit/formula.hpp"
#include "ordkit/gen.hpp"

using namespace ordkit;
using namespace ordkit::arith;

namespace {
bool hasTerm(const std::vector<Term>& v, Term t) {
  return std::find(v.begin(), v.end(), t) != v.end();
}
FTerm c(Term t) { return FTerm::mk(t); }
}  // namespace

TEST_CASE("coefficient sets") {
  Formula r = litR("b", omega1(), c(zero()));
  auto kr = kR(r);
  CHECK(kr.size() == 2);
  CHECK(hasTerm(kr, zero()));
  CHECK(hasTerm(kr, omega1()));

  Formula in = litIn(c(one()), c(nat(2)));
  auto kr2 = kR(in);
  CHECK(kr2.size() == 1);
  CHECK(hasTerm(kr2, zero()));

  Formula ex = exB(bigK(), litIn(FTerm::mkVar(0), c(one())));
  auto ke = kE(ex);
  CHECK(hasTerm(ke, bigK()));
  CHECK(hasTerm(ke, one()));
  CHECK(hasTerm(ke, zero()));

  // unbounded bounds are not collected
  Formula exI = exB(bigI(), litIn(FTerm::mkVar(0), c(one())));
  CHECK_FALSE(hasTerm(kE(exI), bigI()));
}

TEST_CASE("rank of the reflection shapes") {
  CHECK(rank(samplePInShape(one())) == bigI());
  CHECK(rank(fneg(samplePInShape(bigK()))) == bigI());

  Term kp = mkRegSucc(bigK());
  Formula pr = samplePRegShape(kp, bigK());
  CHECK(rank(pr) == add(kp, one()));
  CHECK(rank(fneg(pr)) == add(kp, one()));
  CHECK(rankExemptShape(pr));
  CHECK_FALSE(rankExemptShape(samplePInShape(one())));
}

TEST_CASE("rank of literals and predicate quantifiers") {
  Formula r = litR("b", bigK(), c(wexp(wexp(one()))));
  CHECK(rank(r) == bigK());
  Formula q = ex2(bigK(), litR("", bigK(), c(zero())));
  CHECK(rank(q) == add(bigK(), one()));
}

TEST_CASE("rank of bounded quantifiers uses omega rk_L of the bound") {
  Formula f = exB(one(), litIn(FTerm::mkVar(0), c(zero())));
  CHECK(rank(f) == wexp(one()));  // max{w.1, 1}
  Formula g = exB(bigK(), litIn(FTerm::mkVar(0), c(zero())));
  CHECK(rank(g) == bigK());       // w.K = K
  Formula h = exB(bigI(), litIn(c(zero()), c(one())));
  CHECK(rank(h) == bigI());       // unbounded, not the P_I shape
}

TEST_CASE("classification basics") {
  Formula lit = litIn(c(zero()), c(one()));
  CHECK(classify(lit, omega1(), 1).isDelta0Lambda);

  Formula unb = exB(bigI(), litIn(FTerm::mkVar(0), c(one())));
  CHECK_FALSE(classify(unb, bigK(), 1).isDelta0Lambda);

  Term kap = mkPsiK(1, {add(bigI(), one()), add(bigI(), one())}, {}, add(bigI(), one()));
  Formula ex = ex2(kap, litX(0, c(zero())));
  ClassifyResult cr = classify(ex, bigK(), 1);
  CHECK(cr.isSigmaSigma);       // kappa < K and the body closes to an R-literal
  CHECK(cr.isDelta0Lambda);     // predicate quantifiers below lambda may occur
  CHECK(cr.pi1Level.has_value());
  CHECK(*cr.pi1Level == 0);

  Formula atK = all2(bigK(), litX(0, c(zero())));
  auto lv = classify(atK, bigK(), 1).pi1Level;
  REQUIRE(lv.has_value());
  CHECK(*lv == 1);
  auto lvEx = classify(ex2(bigK(), litX(0, c(zero()))), bigK(), 1).pi1Level;
  REQUIRE(lvEx.has_value());
  CHECK(*lvEx == 2);  // Sigma^1_1 sits inside Pi^1_2
}

TEST_CASE("sigma-m shapes") {
  Formula mat = litIn(c(zero()), c(one()));
  CHECK(isSigmaM(mat, 0));
  Formula ex1 = exB(bigI(), litIn(FTerm::mkVar(0), c(one())));
  CHECK(isSigmaM(ex1, 1));
  CHECK_FALSE(isSigmaM(ex1, 0));
  CHECK_FALSE(isPiM(ex1, 1));
  Formula pi1 = allB(bigI(), litIn(FTerm::mkVar(0), c(one())));
  CHECK(isPiM(pi1, 1));
  CHECK(isSigmaM(pi1, 2));
  Formula withP = exB(bigI(), litPI(FTerm::mkVar(0), 1));
  CHECK_FALSE(isSigmaM(withP, 3));  // special predicates never occur in Sigma_m
}

TEST_CASE("relativization") {
  Term kap = mkPsiK(1, {add(bigI(), one()), add(bigI(), one())}, {}, add(bigI(), one()));
  Formula a = all2(bigK(), litX(0, c(zero())));
  Formula b = relativize(a, kap, bigK());
  CHECK(b->kind == FKind::All2);
  CHECK(b->kappa == kap);

  Formula lit = litIn(c(zero()), c(one()));
  CHECK(formulaEq(relativize(lit, kap, bigK()), lit));

  Formula free = litR("b", omega1(), c(zero()));
  CHECK(formulaEq(relativize(free, kap, bigK()), free));

  CHECK_THROWS_AS((void)relativize(a, bigK(), kap), Error);  // kappa >= lambda
  CHECK_THROWS_AS((void)relativize(exB(bigI(), litIn(FTerm::mkVar(0), c(one()))), kap, bigK()),
                  Error);
}

TEST_CASE("disjunction/conjunction assignment") {
  Formula t = litIn(c(zero()), c(one()));
  AssignShape s1 = assignShape(t, 1);
  CHECK(s1.dir == Direction::Conj);
  CHECK(s1.index.tag == IndexDescriptor::Tag::Finite);
  CHECK(s1.index.finiteCount == 0);

  AssignShape s2 = assignShape(litIn(c(one()), c(zero())), 1);
  CHECK(s2.dir == Direction::Disj);

  AssignShape s3 = assignShape(fOr(t, t), 1);
  CHECK(s3.dir == Direction::Disj);
  CHECK(s3.index.finiteCount == 2);

  AssignShape s4 = assignShape(ex2(bigK(), litX(0, c(zero()))), 1);
  CHECK(s4.dir == Direction::Disj);
  CHECK(s4.index.tag == IndexDescriptor::Tag::SymbolicPowerset);

  // pure Sigma_1 bounded existential gets the symbolic mu witness
  Formula mu = exB(one(), litIn(FTerm::mkVar(0), c(one())));
  AssignShape s5 = assignShape(mu, 1);
  CHECK(s5.index.tag == IndexDescriptor::Tag::SymbolicMu);

  Formula elems = exB(one(), litPI(FTerm::mkVar(0), 1));
  AssignShape s6 = assignShape(elems, 1);
  CHECK(s6.index.tag == IndexDescriptor::Tag::ElementsBelow);
  CHECK(s6.index.bound == one());

  CHECK(assignShape(litReg(c(omega1())), 1).dir == Direction::Conj);
  CHECK(assignShape(litReg(c(bigK())), 1).dir == Direction::Disj);
  CHECK_THROWS_AS((void)assignShape(litR("b", omega1(), c(zero())), 1), Error);
  CHECK_THROWS_AS((void)assignShape(litPI(c(zero()), 1), 1), Error);
}

TEST_CASE("negation is involutive and swaps shapes") {
  GenOpts go;
  go.count = 300;
  for (const Formula& f : generateFormulas(go)) {
    CHECK(formulaEq(fneg(fneg(f)), f));
  }
  CHECK(fneg(fOr(litIn(c(zero()), c(one())), litIn(c(one()), c(zero()))))->kind == FKind::And);
}

TEST_CASE("formula validation catches out-of-range pieces") {
  CHECK_FALSE(validateFormula(litIn(c(bigI()), c(zero()))).ok);     // constant not in L_I
  CHECK_FALSE(validateFormula(litX(0, c(zero()))).ok);              // unbound predicate var
  CHECK_FALSE(validateFormula(litIn(FTerm::mkVar(0), c(zero()))).ok);
  CHECK_FALSE(validateFormula(ex2(omega1(), litX(0, c(zero())))).ok);  // kappa must exceed w1
  CHECK(validateFormula(ex2(bigK(), litX(0, c(zero())))).ok);
}
