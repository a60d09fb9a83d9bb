#include <doctest.h>

#include "ordkit/arith.hpp"
#include "ordkit/hull.hpp"

using namespace ordkit;
using namespace ordkit::arith;

TEST_CASE("constants are always in the hull") {
  HullQuery q{zero(), 1, Term(), {}, std::nullopt};
  CHECK(inHull(bigK(), q));
  CHECK(inHull(zero(), q));
  CHECK(inHull(omega1(), q));
  CHECK(inHull(bigI(), q));
}

TEST_CASE("collapse clauses need the stage") {
  Term psi = mkPsiReg(omega1(), 1, zero());
  HullQuery empty{zero(), 1, Term(), {}, std::nullopt};
  CHECK_FALSE(inHull(psi, empty));
  HullQuery one1{one(), 1, zero(), {}, std::nullopt};
  CHECK(inHull(psi, one1));
}

TEST_CASE("threshold admits smaller terms wholesale") {
  HullQuery q{zero(), 1, omega1(), {}, std::nullopt};
  CHECK(inHull(wexp(wexp(one())), q));
  CHECK(inHull(mkPsiReg(omega1(), 2, zero()), q));  // below threshold, wrong subscript is fine
  CHECK(inHull(mkSum({bigK(), omega1()}), q));      // sum of hull members
}

TEST_CASE("subscript gates the generative clauses") {
  Term psi2 = mkPsiReg(omega1(), 2, zero());
  HullQuery q{one(), 1, Term(), {}, std::nullopt};
  CHECK_FALSE(inHull(psi2, q));
  q.n = 2;
  CHECK(inHull(psi2, q));
}

TEST_CASE("theta and kappa context are members") {
  Term kp = mkRegSucc(bigK());
  HullQuery q{zero(), 1, Term(), ThetaSet({wexp(wexp(one()))}), kp};
  CHECK(inHull(wexp(wexp(one())), q));
  CHECK(inHull(kp, q));
  CHECK(inHull(mkRegSucc(kp), q));  // closure under the successor clause
}

TEST_CASE("normal form condition on collapses") {
  CHECK(nfValid(mkPsiReg(omega1(), 1, zero())));
  CHECK_FALSE(nfValid(mkPsiReg(omega1(), 1, mkPsiReg(omega1(), 1, zero()))));
  // a sum argument built from a smaller collapse is fine
  Term eps0 = mkPsiReg(omega1(), 1, zero());
  CHECK(nfValid(mkPsiReg(omega1(), 1, mkSum({eps0, one()}))));
  CHECK_THROWS_AS((void)nfValid(omega1()), Error);
}

TEST_CASE("the theorem PsiK term is hull-valid") {
  AbgamTable tb = abgam(1, 2);
  Term psiK = mkPsiK(1, tb.alphaVec[0].items(), {}, tb.gamma[0]);
  CHECK(nfValid(psiK));
  CHECK(validate(psiK, {2, 8}).ok);
  // component above the argument breaks the side condition
  Term bad = mkPsiK(1, {add(tb.gamma[0], one()), tb.gamma[1]}, {}, tb.gamma[0]);
  CHECK_FALSE(nfValid(bad));
}

TEST_CASE("resolvent descriptor instantiation") {
  OrdSeq seq({nat(10), nat(20)}), nu({nat(5), nat(7)});
  ResolventDescriptor rd = resolventDescriptor(0, seq, nu, zero(), ThetaSet{}, 1);
  REQUIRE(rd.classes.size() == 2);
  CHECK(rd.classes[0].k == 0);
  CHECK(rd.classes[0].seq == OrdSeq({nat(5), nat(20)}));
  CHECK(rd.classes[1].k == 1);
  CHECK(rd.classes[1].seq == OrdSeq({nat(7)}));
  CHECK(rd.classes[0].systemN() == 2);
  CHECK(rd.classes[1].systemN() == 2);

  CHECK_THROWS_AS((void)resolventDescriptor(0, seq, OrdSeq({nat(5)}), zero(), ThetaSet{}, 1),
                  Error);
  CHECK_THROWS_AS(
      (void)resolventDescriptor(0, seq, OrdSeq({nat(11), nat(7)}), zero(), ThetaSet{}, 1),
      Error);
}

TEST_CASE("hull is monotone in alpha and theta on a small pool") {
  auto pool = enumerateBelow(bigI(), 3);
  HullQuery lo{one(), 1, Term(), {}, std::nullopt};
  HullQuery hi{omega1(), 1, Term(), {}, std::nullopt};
  HullQuery wide{one(), 1, Term(), ThetaSet({mkRegSucc(bigK())}), std::nullopt};
  for (Term t : pool) {
    if (inHull(t, lo)) {
      CHECK(inHull(t, hi));
      CHECK(inHull(t, wide));
    }
  }
}
