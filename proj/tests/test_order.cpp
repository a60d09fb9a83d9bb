#include <doctest.h>

#include <atomic>
#include <thread>

#include "ordkit/arith.hpp"
#include "ordkit/order.hpp"

using namespace ordkit;
using namespace ordkit::arith;

TEST_CASE("constant spine") {
  CHECK(cmp(zero(), omega1()) == Ord::LT);
  CHECK(cmp(one(), omega1()) == Ord::LT);
  CHECK(cmp(omega1(), bigK()) == Ord::LT);
  CHECK(cmp(bigK(), mkRegSucc(bigK())) == Ord::LT);
  CHECK(cmp(mkRegSucc(bigK()), bigI()) == Ord::LT);
  CHECK(cmp(bigI(), wexp(add(bigI(), one()))) == Ord::LT);
}

TEST_CASE("theorem tower inequality") {
  Term lhs = omegaTower(2, add(bigI(), one()));
  Term rhs = omegaTower(1, mulNat(bigI(), 2));
  CHECK(cmp(lhs, rhs) == Ord::GT);
}

TEST_CASE("epsilon_0 dominates finite omega towers") {
  CHECK(cmp(mkVeblen(one(), zero()), wexp(wexp(wexp(one())))) == Ord::GT);
}

TEST_CASE("collapses sit between their neighbouring constants") {
  Term psiW1 = mkPsiReg(omega1(), 1, zero());
  CHECK(cmp(psiW1, omega1()) == Ord::LT);
  CHECK(cmp(wexp(wexp(one())), psiW1) == Ord::LT);

  Term psiKp = mkPsiReg(mkRegSucc(bigK()), 1, zero());
  CHECK(cmp(bigK(), psiKp) == Ord::LT);
  CHECK(cmp(psiKp, mkRegSucc(bigK())) == Ord::LT);

  Term psiI = mkPsiI(1, zero());
  CHECK(cmp(mkRegSucc(mkRegSucc(bigK())), psiI) == Ord::LT);
  CHECK(cmp(psiI, mkRegSucc(psiI)) == Ord::LT);
  CHECK(cmp(mkRegSucc(psiI), mkPsiI(1, one())) == Ord::LT);
  CHECK(cmp(mkPsiI(1, one()), bigI()) == Ord::LT);
}

TEST_CASE("same-kappa collapses compare by argument") {
  CHECK(cmp(mkPsiReg(omega1(), 1, zero()), mkPsiReg(omega1(), 1, one())) == Ord::LT);
  CHECK(cmp(mkPsiReg(omega1(), 1, bigK()), mkPsiReg(omega1(), 1, one())) == Ord::GT);
}

TEST_CASE("cross-subscript monotonicity and incomparability") {
  CHECK(cmp(mkPsiReg(omega1(), 1, zero()), mkPsiReg(omega1(), 2, zero())) == Ord::LT);
  CHECK(cmp(mkPsiReg(omega1(), 2, one()), mkPsiReg(omega1(), 1, zero())) == Ord::GT);
  CHECK_THROWS_AS((void)cmp(mkPsiReg(omega1(), 2, zero()), mkPsiReg(omega1(), 1, one())),
                  Error);
}

TEST_CASE("normal form checks") {
  CHECK_FALSE(isNormalForm(mkWExp(zero())));
  CHECK(isNormalForm(mkSum({omega1(), one()})));
  CHECK(isNormalForm(mkSum({one(), one(), one()})));
  CHECK_FALSE(isNormalForm(mkVeblen(zero(), one())));
  CHECK_FALSE(isNormalForm(mkWExp(omega1())));
  CHECK_FALSE(isNormalForm(mkVeblen(one(), mkVeblen(mkSum({one(), one()}), zero()))));
}

TEST_CASE("enumeration below omega gives exactly the small naturals") {
  auto nats = enumerateBelow(wexp(one()), 4);
  REQUIRE(nats.size() == 4);
  for (unsigned i = 0; i < 4; ++i) CHECK(nats[i] == nat(i));
}

TEST_CASE("single-node terms below omega_1") {
  auto pool = enumerateBelow(omega1(), 1);
  REQUIRE(pool.size() == 2);
  CHECK(pool[0] == zero());
  CHECK(pool[1] == one());
}

TEST_CASE("regression: pool size below I at term size 5") {
  CHECK(enumerateBelow(bigI(), 5).size() == 1138);
}

TEST_CASE("enumeration is strictly sorted") {
  auto pool = enumerateBelow(bigI(), 4);
  for (size_t i = 0; i + 1 < pool.size(); ++i) CHECK(cmp(pool[i], pool[i + 1]) == Ord::LT);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS((void)enumerateBelow(bigI(), 10), Error);
  EnumOpts tiny;
  tiny.cap = 10;
  CHECK_THROWS_AS((void)enumerateBelow(bigI(), 4, tiny), Error);
}

TEST_CASE("comparison is safe to share across threads") {
  auto pool = enumerateBelow(bigI(), 4);
  std::atomic<long> bad{0};
  auto worker = [&](size_t offset) {
    for (size_t i = offset; i < pool.size(); i += 4)
      for (size_t j = 0; j < pool.size(); ++j) {
        Ord o = cmp(pool[i], pool[j]);
        Ord r = cmp(pool[j], pool[i]);
        if (static_cast<int>(o) != -static_cast<int>(r)) ++bad;
      }
  };
  std::vector<std::thread> threads;
  for (size_t k = 0; k < 4; ++k) threads.emplace_back(worker, k);
  for (auto& t : threads) t.join();
  CHECK(bad.load() == 0);
}
