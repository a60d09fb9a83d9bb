#include <doctest.h>

#include "ordkit/arith.hpp"
#include "ordkit/bounds.hpp"
#include "ordkit/hull.hpp"

using namespace ordkit;
using namespace ordkit::arith;

TEST_CASE("embedding bounds") {
  BoundState s = embeddingBound(0, 0, 2, 3);
  CHECK(s.height == mulNat(bigI(), 2));
  CHECK(s.cutRank == bigI());
  CHECK(s.hullStage == zero());
  CHECK(s.theory == 2);

  BoundState t = embeddingBound(3, 1, 2, 6);
  CHECK(t.cutRank == add(bigI(), nat(3)));
  CHECK(t.height == add(mulNat(bigI(), 2), one()));
  CHECK(t.allChecksHold());
}

TEST_CASE("predicative elimination steps") {
  // crossing I pays the hull stage and exponentiates the height
  BoundState s = embeddingBound(1, 0, 2, 4);
  BoundState e = predicativeElim(s, zero(), bigI());
  CHECK(e.height == wexp(mulNat(bigI(), 2)));
  CHECK(e.cutRank == bigI());
  CHECK(e.hullStage == mulNat(bigI(), 2));

  // m-fold iteration from I+m produces the omega tower
  for (int m = 1; m <= 3; ++m) {
    BoundState a = embeddingBound(m, 1, 2, m + 3);
    for (int j = m - 1; j >= 1; --j) a = predicativeElim(a, zero(), add(bigI(), nat(j)));
    a = predicativeElim(a, zero(), bigI());
    CHECK(a.height == omegaTower(m, add(mulNat(bigI(), 2), one())));
    CHECK(a.hullStage == omegaTower(m - 1, add(mulNat(bigI(), 2), one())));
  }

  CHECK_THROWS_AS((void)predicativeElim(s, one(), bigI()), Error);  // I+1 != I + w^1
}

TEST_CASE("collapse step at K+ reproduces b_n") {
  int m = 1, N = 2, n = m + 3;
  AbgamTable tb = abgam(n, N);
  BoundState a = embeddingBound(m, 0, N, n);
  a = predicativeElim(a, zero(), bigI());
  BoundState c = collapseStep(a, bigI(), mkRegSucc(bigK()), n);
  CHECK(c.height.kind() == Kind::PsiReg);
  CHECK(c.height.kids()[0] == mkRegSucc(bigK()));
  CHECK(cmp(c.height, mkRegSucc(bigK())) == Ord::LT);
  CHECK(c.height == c.cutRank);
  // the raw collapse stage sits below the clean c = w_{n-1}(I+1)
  CHECK(cmp(c.hullStage, tb.gamma[N]) != Ord::GT);
  CHECK(c.allChecksHold());
}

TEST_CASE("omega_1 endgame lands exactly on w_{m+1}(I.2+w)") {
  Term i2w = add(mulNat(bigI(), 2), wexp(one()));
  for (int m = 2; m <= 4; ++m) {
    BoundState s;
    s.height = omegaTower(m, i2w);
    s.cutRank = omega1();
    s.hullStage = omegaTower(m - 1, i2w);
    s.theory = -2;
    s.n = m + 3;
    s.N = 2;
    BoundState c = collapseStep(s, omega1(), omega1(), m + 3);
    CHECK(c.height == mkPsiReg(omega1(), m + 3, omegaTower(m + 1, i2w)));
    CHECK(c.allChecksHold());
  }
}

TEST_CASE("lowering trades theory levels for stage bookkeeping") {
  for (int n = 1; n <= 4; ++n)
    for (int N = 1; N <= 3; ++N) {
      AbgamTable tb = abgam(n, N);
      BoundState s;
      s.height = tb.a;
      s.cutRank = bigK();
      s.hullStage = tb.gamma[N];
      s.theory = N;
      s.n = n;
      s.N = N;
      for (int k = N; k >= 1; --k) {
        s = lowerMahlo(s, bigK());
        CHECK(s.theory == k - 1);
        CHECK(s.height == tb.a);  // K + w.a_n = a_n keeps the height fixed
        CHECK(s.cutRank == bigK());
        CHECK(s.hullStage == tb.gamma[k - 1]);
      }
      CHECK_THROWS_AS((void)lowerMahlo(s, bigK()), Error);  // theory floor

      BoundState bad = s;
      bad.theory = 1;
      bad.height = add(tb.a, one());
      CHECK_THROWS_AS((void)lowerMahlo(bad, bigK()), Error);  // height above a_n
    }
}

TEST_CASE("theorem 1 pipeline") {
  auto tr = theorem1Trace(1, 0, 2);
  int n = 4;
  AbgamTable tb = abgam(n, 2);
  REQUIRE(tr.size() == 4 + 2);
  const BoundState& fin = tr.back();
  CHECK(fin.theory == 0);
  CHECK(fin.cutRank == bigK());
  CHECK(fin.height == tb.a);
  CHECK(fin.hullStage == tb.gamma[0]);
  for (auto& s : tr) CHECK(s.allChecksHold());
  // composition coherence: hull stage after k lowerings is gamma_{N-k,n}
  for (int k = 0; k <= 2; ++k) CHECK(tr[3 + k].hullStage == tb.gamma[2 - k]);
}

TEST_CASE("theorem 2 pipeline ends at an omega_1 collapse") {
  for (int N = 1; N <= 3; ++N) {
    auto tr = theorem2Trace(0, 1, N);
    const BoundState& fin = tr.back();
    CHECK(fin.height.kind() == Kind::PsiReg);
    CHECK(fin.height.kids()[0] == omega1());
    CHECK(fin.theory == -2);
    for (auto& s : tr) CHECK(s.allChecksHold());
    // the sub-K lowering step carries the PsiK collapse as its cut rank
    bool sawPsiK = false;
    for (auto& s : tr) sawPsiK = sawPsiK || s.cutRank.kind() == Kind::PsiK;
    CHECK(sawPsiK);
  }
}

TEST_CASE("pipelines stay coherent beyond the small parameter box") {
  for (int m : {3, 4})
    for (int p : {0, 4})
      for (int N : {1, 3}) {
        auto tr = theorem1Trace(m, p, N);
        REQUIRE(static_cast<int>(tr.size()) == 4 + N);
        AbgamTable tb = abgam(m + 3, N);
        CHECK(tr.back().height == tb.a);
        CHECK(tr.back().hullStage == tb.gamma[0]);
        for (auto& s : tr) CHECK(s.allChecksHold());
        auto tr2 = theorem2Trace(m, p, N);
        CHECK(tr2.back().height.kids()[0] == omega1());
        for (auto& s : tr2) CHECK(s.allChecksHold());
      }
}

TEST_CASE("bigvee side condition") {
  CHECK(sideConditionVee(zero(), omega1(), one()));
  CHECK(sideConditionVee(bigK(), omega1(), one()));   // premise fails, vacuously true
  CHECK_FALSE(sideConditionVee(one(), omega1(), one()));
}

TEST_CASE("weakening only moves annotations upward") {
  BoundState s = embeddingBound(0, 0, 1, 3);
  BoundState w = weakenTo(s, add(s.height, one()), add(s.cutRank, one()), s.hullStage, "test");
  CHECK(w.allChecksHold());
  BoundState bad = weakenTo(s, zero(), s.cutRank, s.hullStage, "down");
  CHECK_FALSE(bad.allChecksHold());
}
