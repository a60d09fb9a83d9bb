#include <doctest.h>

#include "ordkit/arith.hpp"
#include "ordkit/mahlo.hpp"

using namespace ordkit;
using namespace ordkit::arith;

TEST_CASE("addition basics") {
  Term w = wexp(one());
  CHECK(add(w, zero()) == w);
  CHECK(add(zero(), w) == w);
  CHECK(add(one(), w) == w);                       // 1 + w = w
  CHECK(add(w, one()) == mkSum({w, one()}));       // w + 1 stays
  CHECK(add(nat(2), nat(3)) == nat(5));
}

TEST_CASE("gamma identities at n=1, N=2") {
  AbgamTable tb = abgam(1, 2);
  CHECK(add(tb.gamma[1], tb.a) == tb.gamma[0]);
  CHECK(add(bigK(), omegaMul(tb.a)) == tb.a);
  // gamma_{2,1} = (I+1)+1 with zero copies of a_1
  CHECK(tb.gamma[2] == add(add(omegaTower(0, add(bigI(), one())), one()), mulNat(tb.a, 0)));
  CHECK(tb.gamma[2] == add(bigI(), nat(2)));
}

TEST_CASE("natural multiples") {
  Term t = add(bigI(), one());
  CHECK(mulNat(t, 0) == zero());
  CHECK(mulNat(t, 1) == t);
  CHECK(mulNat(t, 2) == add(mulNat(bigI(), 2), one()));  // (I+1).2 = I.2+1
}

TEST_CASE("omega towers") {
  CHECK(omegaTower(0, bigI()) == bigI());
  CHECK(omegaTower(1, add(bigI(), one())) == mkWExp(mkSum({bigI(), one()})));
  CHECK(cmp(omegaTower(1, one()), omegaTower(2, one())) == Ord::LT);
}

TEST_CASE("veblen normalization") {
  Term b = wexp(wexp(one()));
  CHECK(veblen(zero(), b) == wexp(b));
  CHECK(veblen(one(), zero()) == mkVeblen(one(), zero()));
  CHECK(veblen(one(), omega1()) == omega1());                       // fixed point
  CHECK(veblen(one(), mkVeblen(nat(2), zero())) == mkVeblen(nat(2), zero()));
  CHECK(veblen(nat(2), mkVeblen(one(), zero())) ==
        mkVeblen(nat(2), mkVeblen(one(), zero())));                 // no collapse upward
}

TEST_CASE("a_n is additively principal above K") {
  AbgamTable tb = abgam(2, 2);
  CHECK(cmp(veblen(tb.b, tb.b), tb.b) == Ord::GT);
  CHECK(add(bigK(), veblen(tb.b, tb.b)) == veblen(tb.b, tb.b));
  // principality oracle: every smaller left summand is absorbed, and a_n
  // stays below the next regular
  for (Term x : {one(), omega1(), bigK(), tb.b, add(tb.b, one())}) {
    REQUIRE(cmp(x, tb.a) == Ord::LT);
    CHECK(add(x, tb.a) == tb.a);
  }
  CHECK(cmp(tb.a, mkRegSucc(bigK())) == Ord::LT);
}

TEST_CASE("veblen is strictly increasing in the argument") {
  auto pool = enumerateBelow(omega1(), 3);
  for (Term a : {zero(), one(), nat(2)})
    for (Term b : pool)
      for (Term c : pool) {
        if (cmp(b, c) != Ord::LT) continue;
        CHECK(cmp(veblen(a, b), veblen(a, c)) == Ord::LT);
      }
}

TEST_CASE("epsilon_0 tops every finite omega tower") {
  Term eps0 = veblen(one(), zero());
  Term t = one();
  for (int k = 1; k <= 6; ++k) {
    t = wexp(t);
    CHECK(cmp(t, eps0) == Ord::LT);
  }
  CHECK(cmp(eps0, wexp(add(eps0, one()))) == Ord::LT);
}

TEST_CASE("arith laws over the enumerated pool") {
  auto pool = enumerateBelow(bigI(), 3);
  for (Term a : pool)
    for (Term b : pool) {
      // associativity probe with a fixed third summand
      Term c = one();
      CHECK(add(add(a, b), c) == add(a, add(b, c)));
      // strict monotonicity in the right argument
      if (cmp(b, c) == Ord::LT) CHECK(cmp(add(a, b), add(a, c)) == Ord::LT);
    }
  for (Term t : pool) {
    if (t == zero()) continue;
    // towers grow strictly until the base is an epsilon fixed point
    if (!isEpsDesignated(t)) CHECK(cmp(omegaTower(1, t), omegaTower(2, t)) == Ord::LT);
    CHECK(cmp(t, omegaTower(1, t)) != Ord::GT);
    // omega absorption on big principal terms
    if (isPrincipal(t) && cmp(t, wexp(wexp(one()))) == Ord::GT) CHECK(omegaMul(t) == t);
  }
}

TEST_CASE("ceiling is enforced") {
  CHECK_THROWS_AS((void)omegaTower(8, add(bigI(), one())), Error);
  CHECK_THROWS_AS((void)veblen(one(), omegaTower(7, add(bigI(), one()))), Error);
}
