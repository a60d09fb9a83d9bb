#include "ordkit/gen.hpp"

#include "ordkit/arith.hpp"

namespace ordkit {

namespace {

struct Gen {
  std::mt19937_64 rng;
  GenOpts opts;
  std::vector<Term> consts;       // literal constants, < I
  std::vector<Term> bounds;       // quantifier bounds, <= I
  std::vector<Term> kappas2;      // predicate-quantifier kappas in (w1, K]
  Term psiKSample;

  explicit Gen(const GenOpts& o) : rng(o.seed), opts(o) {
    Term kp = mkRegSucc(bigK());
    consts = {zero(), one(), omega1(), bigK(), kp};
    bounds = {one(), omega1(), bigK(), kp, bigI()};
    Term ip1 = arith::add(bigI(), one());
    psiKSample = mkPsiK(1, {ip1, ip1}, {}, ip1);  // K-collapse sample, a regular in (w1, K)
    kappas2 = {bigK(), psiKSample};
  }

  size_t pick(size_t n) { return rng() % n; }
  bool coin() { return rng() & 1; }

  FTerm slot(uint32_t indDepth) {
    if (indDepth > 0 && pick(3) == 0) return FTerm::mkVar(static_cast<uint32_t>(pick(indDepth)));
    return FTerm::mk(consts[pick(consts.size())]);
  }

  Formula literal(uint32_t ind, uint32_t pred) {
    bool pos = coin();
    switch (pick(pred > 0 ? 6 : 5)) {
      case 0: return litIn(slot(ind), slot(ind), pos);
      case 1: return litP(slot(ind), slot(ind), slot(ind), pos);
      case 2: return litPI(slot(ind), opts.n, pos);
      case 3: return litReg(slot(ind), pos);
      case 4: {
        Term kap = coin() ? omega1() : kappas2[pick(kappas2.size())];
        return litR(coin() ? "" : "b", kap, slot(ind), pos);
      }
      default: return litX(static_cast<uint32_t>(pick(pred)), slot(ind), pos);
    }
  }

  Formula go(int depth, uint32_t ind, uint32_t pred) {
    if (depth <= 0 || pick(4) == 0) return literal(ind, pred);
    switch (pick(6)) {
      case 0: return fOr(go(depth - 1, ind, pred), go(depth - 1, ind, pred));
      case 1: return fAnd(go(depth - 1, ind, pred), go(depth - 1, ind, pred));
      case 2: return exB(bounds[pick(bounds.size())], go(depth - 1, ind + 1, pred));
      case 3: return allB(bounds[pick(bounds.size())], go(depth - 1, ind + 1, pred));
      case 4: return ex2(kappas2[pick(kappas2.size())], go(depth - 1, ind, pred + 1));
      default: return all2(kappas2[pick(kappas2.size())], go(depth - 1, ind, pred + 1));
    }
  }
};

}  // namespace

Formula samplePInShape(Term b) {
  return exB(bigI(), fAnd(litIn(FTerm::mk(b), FTerm::mkVar(0)), litPI(FTerm::mkVar(0), 1)));
}

Formula samplePRegShape(Term lambda, Term b) {
  return exB(lambda,
             exB(lambda, fAnd(litIn(FTerm::mk(b), FTerm::mkVar(1)),
                              litP(FTerm::mk(lambda), FTerm::mkVar(1), FTerm::mkVar(0)))));
}

std::vector<Formula> generateFormulas(const GenOpts& opts) {
  Gen g(opts);
  std::vector<Formula> out;
  out.reserve(opts.count + 8);
  // targeted shapes first
  out.push_back(samplePInShape(one()));
  out.push_back(samplePInShape(bigK()));
  out.push_back(fneg(samplePInShape(omega1())));
  out.push_back(samplePRegShape(omega1(), zero()));
  out.push_back(samplePRegShape(mkRegSucc(bigK()), bigK()));
  out.push_back(fneg(samplePRegShape(omega1(), one())));
  while (out.size() < opts.count) {
    Formula f = g.go(opts.maxDepth, 0, 0);
    if (validateFormula(f).ok) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace ordkit
