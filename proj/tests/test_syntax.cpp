#include <doctest.h>

#include "ordkit/arith.hpp"
#include "ordkit/gen.hpp"
#include "ordkit/mahlo.hpp"
#include "ordkit/syntax.hpp"

using namespace ordkit;
using namespace ordkit::arith;

TEST_CASE("term parsing") {
  CHECK(parseTerm("0") == zero());
  CHECK(parseTerm("1") == one());
  CHECK(parseTerm("w1") == omega1());
  CHECK(parseTerm("K + 1") == mkSum({bigK(), one()}));
  CHECK(parseTerm("w^1") == wexp(one()));
  CHECK(parseTerm("w^(I + 1)") == mkWExp(mkSum({bigI(), one()})));
  CHECK(parseTerm("tower(2, I+1)") == omegaTower(2, add(bigI(), one())));
  CHECK(parseTerm("I * 2") == mulNat(bigI(), 2));
  CHECK(parseTerm("w*(K + 1)") == omegaMul(add(bigK(), one())));
  CHECK(parseTerm("phi(1, 0)") == mkVeblen(one(), zero()));
  CHECK(parseTerm("reg+(K)") == mkRegSucc(bigK()));
  CHECK(parseTerm("psiI(1; 0)") == mkPsiI(1, zero()));
}

TEST_CASE("the b_1 collapse expression parses") {
  Term b1 = parseTerm("psi(K+; 1; tower(0, I+1))");
  AbgamTable tb = abgam(1, 2);
  CHECK(b1 == tb.b);
  CHECK(parseTerm("psi(reg+(K); 1; tower(0, I+1))") == b1);
}

TEST_CASE("psiK surface syntax") {
  AbgamTable tb = abgam(1, 2);
  std::string g1 = printTerm(tb.gamma[1]);
  std::string g0 = printTerm(tb.gamma[0]);
  Term t = parseTerm("psiK(1; [" + g0 + ", " + g1 + "]; {}; " + g0 + ")");
  CHECK(t == mkPsiK(1, tb.alphaVec[0].items(), {}, tb.gamma[0]));
}

TEST_CASE("validation failures surface as positioned parse errors") {
  CHECK_THROWS_AS((void)parseTerm("phi(w1, 0) + K"), Error);
  try {
    (void)parseTerm("phi(w1, 0) + K");
  } catch (const Error& e) {
    CHECK(e.kind() == Err::ParseError);
    CHECK(std::string(e.what()).find("parts not non-increasing") != std::string::npos);
    CHECK(std::string(e.what()).find("1:1") != std::string::npos);
  }
  CHECK_THROWS_AS((void)parseTerm("w^0"), Error);
  CHECK_THROWS_AS((void)parseTerm("psi(K; 1; 0)"), Error);  // K is not in Reg
  CHECK_THROWS_AS((void)parseTerm("1 +"), Error);
  CHECK_THROWS_AS((void)parseTerm("(1"), Error);
  CHECK_THROWS_AS((void)parseTerm("1 2"), Error);
}

TEST_CASE("round trip on enumerated terms") {
  for (Term t : enumerateBelow(bigI(), 4)) {
    CHECK(parseTerm(printTerm(t)) == t);
    CHECK(termFromJson(termToJson(t)) == t);
  }
}

TEST_CASE("naturals print as unit sums") {
  CHECK(printTerm(nat(3)) == "1 + 1 + 1");
  CHECK(parseTerm("1 + 1 + 1") == nat(3));
  CHECK(parseTerm("3") == nat(3));
}

TEST_CASE("formula parsing and printing") {
  Formula f = parseFormula("in(0, 1)");
  CHECK(f->kind == FKind::LitIn);
  CHECK(printFormula(f) == "in(0, 1)");

  Formula g = parseFormula("~in(0, 1) | Reg(w1) & PI(2; K)");
  CHECK(g->kind == FKind::Or);
  CHECK(parseFormula(printFormula(g)) != nullptr);
  CHECK(formulaEq(parseFormula(printFormula(g)), g));

  Formula q = parseFormula("ex x0<I. in(1, x0) & PI(1; x0)");
  CHECK(q->kind == FKind::ExB);
  CHECK(q->bound == bigI());
  CHECK(rank(q) == bigI());

  Formula r = parseFormula("R(b#foo, w1; 0)");
  CHECK(r->kind == FKind::LitR);
  CHECK(r->tag == "foo");
  CHECK(formulaEq(parseFormula(printFormula(r)), r));

  Formula x = parseFormula("EX X<K. X(0; 1) & ALL Y<K. X(1; 0)");
  CHECK(x->kind == FKind::Ex2);
  CHECK(formulaEq(parseFormula(printFormula(x)), x));

  CHECK_THROWS_AS((void)parseFormula("in(x, 0)"), Error);   // unbound variable
  CHECK_THROWS_AS((void)parseFormula("in(0, I)"), Error);   // I is not in L_I
  CHECK_THROWS_AS((void)parseFormula("EX X<w1. X(0; 0)"), Error);
}

TEST_CASE("formula corpus round trips") {
  GenOpts go;
  go.count = 400;
  for (const Formula& f : generateFormulas(go)) {
    Formula g = parseFormula(printFormula(f));
    CHECK(formulaEq(f, g));
    CHECK(formulaEq(formulaFromJson(formulaToJson(f)), f));
  }
}
