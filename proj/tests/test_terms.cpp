#include <doctest.h>

#include <algorithm>

#include "ordkit/arith.hpp"
#include "ordkit/order.hpp"
#include "ordkit/term.hpp"

using namespace ordkit;
using namespace ordkit::arith;

TEST_CASE("constants validate") {
  CHECK(validate(zero()).ok);
  CHECK(validate(one()).ok);
  CHECK(validate(omega1()).ok);
  CHECK(validate(bigK()).ok);
  CHECK(validate(bigI()).ok);
}

TEST_CASE("sum ordering violations are reported") {
  ValidityReport rep = validate(mkSum({one(), omega1()}));
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.violations.empty());
  CHECK(rep.violations.front() == "parts not non-increasing");
}

TEST_CASE("PsiK sequence length must be N") {
  Term t = mkPsiK(1, {add(bigI(), one())}, {}, add(bigI(), one()));
  ValidityReport rep = validate(t, {2, 8});
  CHECK_FALSE(rep.ok);
  CHECK(rep.violations.front().find("lh(seq)!=N") == 0);
  CHECK(validate(t, {1, 8}).ok);  // N=1 accepts the same term
}

TEST_CASE("kset collects parameters including the term itself") {
  auto has = [](const std::vector<Term>& v, Term t) {
    return std::find(v.begin(), v.end(), t) != v.end();
  };
  auto k0 = kset(zero());
  CHECK(k0.size() == 1);
  CHECK(has(k0, zero()));

  Term w = mkWExp(bigI());
  auto k1 = kset(w);
  CHECK(k1.size() == 2);
  CHECK(has(k1, bigI()));
  CHECK(has(k1, w));

  Term psi = mkPsiReg(omega1(), 1, bigI());
  auto k2 = kset(psi);
  CHECK(k2.size() == 3);
  CHECK(has(k2, omega1()));
  CHECK(has(k2, bigI()));
  CHECK(has(k2, psi));
}

TEST_CASE("regular designation is the syntactic closure") {
  CHECK(regularDesignated(omega1()));
  CHECK_FALSE(regularDesignated(bigK()));
  CHECK_FALSE(regularDesignated(bigI()));
  CHECK(regularDesignated(mkRegSucc(bigK())));
  CHECK(regularDesignated(mkRegSucc(mkRegSucc(bigK()))));
  CHECK(regularDesignated(mkRegSucc(mkPsiI(1, zero()))));
  CHECK_FALSE(regularDesignated(mkPsiI(1, zero())));
  CHECK_FALSE(regularDesignated(mkPsiReg(omega1(), 1, zero())));
}

TEST_CASE("rebuilding a term from its parts is the identity") {
  Term t = arith::add(arith::omegaTower(2, add(bigI(), one())), arith::nat(3));
  Term u = mkSum(summands(t));
  CHECK(t == u);
  Term w = mkWExp(mkWExp(one()));
  CHECK(mkWExp(w.kids()[0]) == w);
}

TEST_CASE("ThetaSet sorts and deduplicates") {
  ThetaSet th({bigK(), omega1(), bigK(), one()});
  REQUIRE(th.size() == 3);
  CHECK(th.elems()[0] == one());
  CHECK(th.elems()[1] == omega1());
  CHECK(th.elems()[2] == bigK());
  CHECK(th.contains(omega1()));
  CHECK_FALSE(th.contains(zero()));
  CHECK(ThetaSet({omega1()}).subsetOf(th));
  CHECK_FALSE(th.subsetOf(ThetaSet({omega1()})));
}

TEST_CASE("ceiling rejects towers at maxTower") {
  Term tall = mkWExp(mkWExp(mkWExp(mkWExp(mkWExp(mkWExp(mkWExp(mkWExp(mkSum({bigI(), one()})))))))));
  CHECK_FALSE(validate(tall).ok);
  ValidateOpts big;
  big.maxTower = 9;
  CHECK(validate(tall, big).ok);
}
