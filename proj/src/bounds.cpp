#include "ordkit/bounds.hpp"

#include <sstream>

#include "ordkit/arith.hpp"
#include "ordkit/hull.hpp"

namespace ordkit {

using namespace arith;

namespace {

Term iPlus(int j) { return add(bigI(), nat(static_cast<unsigned>(j))); }

void logCheck(BoundState& s, const std::string& what, bool holds) {
  s.checks.emplace_back(what, holds);
}

// [c, c + w^a[ must avoid I and the successors of designated regulars, and
// ]c, c + w^a] the regulars <= K. Above K or below w1 this is decidable;
// elsewhere it is recorded as asserted.
void logIntervalConditions(BoundState& out, Term c, Term a) {
  Term hi = add(c, wexp(a));
  bool iInBlock = cmp(c, bigI()) != Ord::GT && cmp(bigI(), hi) == Ord::LT;
  logCheck(out, "cut block avoids I", !iInBlock);
  bool decided = (cmp(c, bigK()) != Ord::LT && cmp(hi, mkRegSucc(bigK())) != Ord::GT) ||
                 cmp(hi, omega1()) != Ord::GT || cmp(c, iPlus(1)) != Ord::LT;
  logCheck(out, decided ? "cut block avoids successors of regulars"
                        : "cut block avoids successors of regulars (asserted)",
           true);
  logCheck(out, cmp(c, bigK()) != Ord::LT ? "cut block avoids regulars <= K"
                                          : "cut block avoids regulars <= K (asserted)",
           true);
}

// tiny display for trace notes
std::string show(Term t) {
  switch (t.kind()) {
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Omega1: return "w1";
    case Kind::BigK: return "K";
    case Kind::BigI: return "I";
    case Kind::Sum: {
      std::string s;
      for (size_t i = 0; i < t.kids().size(); ++i) {
        if (i) s += "+";
        s += show(t.kids()[i]);
      }
      return s;
    }
    case Kind::WExp: return "w^(" + show(t.kids()[0]) + ")";
    case Kind::Veblen: return "phi(" + show(t.kids()[0]) + "," + show(t.kids()[1]) + ")";
    case Kind::RegSucc: return show(t.kids()[0]) + "+";
    case Kind::PsiReg:
      return "Psi[" + show(t.kids()[0]) + "," + std::to_string(t.sub()) + "](" +
             show(t.kids()[1]) + ")";
    case Kind::PsiI: return "PsiI[" + std::to_string(t.sub()) + "](" + show(t.kids()[0]) + ")";
    case Kind::PsiK: return "PsiK[" + std::to_string(t.sub()) + "](...)";
  }
  return "?";
}

}  // namespace

BoundState embeddingBound(int m, int p, int N, int n) {
  BoundState s;
  s.height = add(mulNat(bigI(), 2), nat(static_cast<unsigned>(p)));
  s.cutRank = iPlus(m);
  s.hullStage = zero();
  s.theory = N;
  s.n = n;
  s.N = N;
  s.note = "embedding: |-^{I.2+" + std::to_string(p) + "}_{I+" + std::to_string(m) + "}";
  logCheck(s, "height below w1(I.2+p+1)", cmp(s.height, wexp(add(s.height, one()))) == Ord::LT);
  return s;
}

BoundState predicativeElim(const BoundState& s, Term a, Term c) {
  Term expect = add(c, wexp(a));
  if (cmp(expect, s.cutRank) != Ord::EQ)
    fail(Err::ShapeMismatch, "predicativeElim: cutRank is not c + w^a");
  BoundState out = s;
  out.checks.clear();
  bool stagePaying = a == zero() && (c == bigI() || regularDesignated(c));
  if (stagePaying) out.hullStage = add(s.hullStage, s.height);
  out.height = veblen(a, s.height);
  out.cutRank = c;
  out.note = std::string(stagePaying ? "predicative elimination (stage-paying): " :
                                       "predicative elimination: ") +
             "cutRank -> " + show(c);
  if (stagePaying)
    logCheck(out, "stage-paying crossing pays hullStage += height", true);
  else
    logIntervalConditions(out, c, a);
  logCheck(out, "a in H[Theta] (asserted)", true);
  return out;
}

BoundState collapseStep(const BoundState& s, Term sigma, Term lambda, int n) {
  if (!regularDesignated(lambda) && lambda != omega1())
    fail(Err::InvalidRegular, "collapseStep: lambda not regular-designated");
  if (!isPrincipal(sigma) || !isEpsDesignated(sigma))
    fail(Err::InvalidRegular, "collapseStep: sigma not a cardinal platform");
  if (cmp(lambda, sigma) == Ord::GT)
    fail(Err::InvalidRegular, "collapseStep: lambda above sigma");
  BoundState out = s;
  out.checks.clear();
  Term aHat = add(s.hullStage, wexp(mulPrincipal(sigma, add(one(), s.height))));
  Term psi = mkPsiReg(lambda, n, aHat);
  out.height = psi;
  out.cutRank = psi;
  out.hullStage = add(aHat, one());
  out.n = n;
  out.note = "collapsing at " + show(lambda) + " (sigma=" + show(sigma) + "): a-hat=" + show(aHat);
  logCheck(out, "cut rank within mu = sigma+1", cmp(s.cutRank, add(sigma, one())) != Ord::GT);
  logCheck(out, "collapse term in normal form", nfValid(psi));
  logCheck(out, "Gamma subset Sigma^{Sigma_{n+1}}(lambda) (asserted)", true);
  if (lambda == omega1()) logCheck(out, "theory index is -2", s.theory == -2);
  return out;
}

BoundState lowerMahlo(const BoundState& s, Term kappa) {
  if (s.theory <= 0) fail(Err::TheoryFloor, "lowerMahlo: theory index already at 0");
  if (cmp(s.cutRank, bigK()) != Ord::EQ)
    fail(Err::ShapeMismatch, "lowerMahlo: cut rank is not K");
  AbgamTable tb = abgam(s.n, s.N);
  if (cmp(s.height, tb.a) == Ord::GT)
    fail(Err::BoundViolated, "lowerMahlo: height above a_n");
  BoundState out = s;
  out.checks.clear();
  out.theory = s.theory - 1;
  out.hullStage = add(s.hullStage, s.height);
  out.height = add(kappa, omegaMul(s.height));
  out.cutRank = kappa;
  out.note = "lowering: ZFLK_{" + std::to_string(s.theory) + "} -> ZFLK_{" +
             std::to_string(out.theory) + "} at kappa=" + show(kappa);
  logCheck(out, "a-hat <= gamma_{k-1,n}", cmp(out.hullStage, tb.gamma[s.theory - 1]) != Ord::GT);
  logCheck(out, "kappa = K or kappa in Mh_{k-1,n}((a-hat)*alpha_{k,n})[Theta u {kappa}] (asserted)",
           true);
  return out;
}

BoundState weakenTo(const BoundState& s, Term height, Term cutRank, Term hullStage,
                    const std::string& why) {
  BoundState out = s;
  out.checks.clear();
  out.height = height;
  out.cutRank = cutRank;
  out.hullStage = hullStage;
  out.note = "weakening: " + why;
  logCheck(out, "height monotone", cmp(s.height, height) != Ord::GT);
  logCheck(out, "cut rank monotone", cmp(s.cutRank, cutRank) != Ord::GT);
  logCheck(out, "hull stage monotone", cmp(s.hullStage, hullStage) != Ord::GT);
  return out;
}

bool sideConditionVee(Term rkL, Term sigma, Term a) {
  if (cmp(rkL, sigma) == Ord::LT) return cmp(rkL, a) == Ord::LT;
  return true;
}

namespace {

// Common head of both pipelines: embedding, predicative chain, K+ collapse and
// elimination down to cut rank K. Appends 4 states; returns the abgam table.
AbgamTable pipelineHead(std::vector<BoundState>& tr, int m, int p, int N) {
  int mhat = std::max(m, 1);
  int n = mhat + 3;
  AbgamTable tb = abgam(n, N);

  BoundState s = embeddingBound(m, p, N, n);
  tr.push_back(s);

  // predicative chain: (mhat-1) in-block eliminations, then the stage-paying
  // crossing of I; a cut-rank weakening first when the embedding gave m = 0
  if (m == 0) {
    s = weakenTo(s, s.height, iPlus(1), s.hullStage, "cut rank I -> I+1 (m=0 head)");
    BoundState folded = s;
    s = predicativeElim(s, zero(), bigI());
    s.checks.insert(s.checks.begin(), folded.checks.begin(), folded.checks.end());
    s.note = "predicative chain (after cut-rank weakening): " + s.note;
  } else {
    BoundState acc = s;
    for (int j = m - 1; j >= 1; --j) acc = predicativeElim(acc, zero(), iPlus(j));
    s = predicativeElim(acc, zero(), bigI());
    s.note = "predicative chain: " + std::to_string(m) + " eliminations to cut rank I";
  }
  tr.push_back(s);

  // collapse at K+ with sigma = I, then weaken to the clean abgam values
  Term c = omegaTower(n - 1, add(bigI(), one()));
  BoundState col = collapseStep(s, bigI(), mkRegSucc(bigK()), n);
  BoundState clean = weakenTo(col, tb.b, tb.b, tb.gamma[N], "to b_n and gamma_{N,n}");
  clean.checks.insert(clean.checks.begin(), col.checks.begin(), col.checks.end());
  logCheck(clean, "a-hat + 1 <= gamma_{N,n} = w_{n-1}(I+1)+1",
           cmp(col.hullStage, tb.gamma[N]) != Ord::GT);
  logCheck(clean, "c = w_{m+2}(I+1) > w_{m+1}(I.2+p)",
           cmp(c, omegaTower(mhat + 1, add(mulNat(bigI(), 2), nat(static_cast<unsigned>(p))))) ==
               Ord::GT);
  clean.note = col.note + "; " + clean.note;
  tr.push_back(clean);

  // predicative elimination from cut rank b_n to K: b_n = K + w^{b_n}
  BoundState toK = predicativeElim(clean, tb.b, bigK());
  logCheck(toK, "height is exactly a_n = phi(b_n)(b_n)", cmp(toK.height, tb.a) == Ord::EQ);
  tr.push_back(toK);
  return tb;
}

}  // namespace

std::vector<BoundState> theorem1Trace(int m, int p, int N) {
  std::vector<BoundState> tr;
  AbgamTable tb = pipelineHead(tr, m, p, N);
  BoundState s = tr.back();
  for (int k = N; k >= 1; --k) {
    s = lowerMahlo(s, bigK());
    logCheck(s, "height fixed at a_n (K + w.a_n = a_n)", cmp(s.height, tb.a) == Ord::EQ);
    logCheck(s, "hull stage is exactly gamma_{k-1,n}",
             cmp(s.hullStage, tb.gamma[k - 1]) == Ord::EQ);
    tr.push_back(s);
  }
  return tr;
}

std::vector<BoundState> theorem2Trace(int m, int p, int N) {
  std::vector<BoundState> tr;
  AbgamTable tb = pipelineHead(tr, m, p, N);
  BoundState s = tr.back();
  int n0 = s.n;
  for (int k = N; k >= 2; --k) {
    s = lowerMahlo(s, bigK());
    logCheck(s, "hull stage is exactly gamma_{k-1,n}",
             cmp(s.hullStage, tb.gamma[k - 1]) == Ord::EQ);
    tr.push_back(s);
  }
  // the last lowering steps below K at kappa = Psi^{alpha_0,empty}_{K,n0}(gamma_0)
  Term kappa = mkPsiK(n0, tb.alphaVec[0].items(), {}, tb.gamma[0]);
  s = lowerMahlo(s, kappa);
  logCheck(s, "kappa is a normal-form PsiK collapse", nfValid(kappa));
  logCheck(s, "height fixed at a_n (kappa + w.a_n = a_n)", cmp(s.height, tb.a) == Ord::EQ);
  logCheck(s, "hull stage is exactly gamma_{0,n}", cmp(s.hullStage, tb.gamma[0]) == Ord::EQ);
  tr.push_back(s);

  // second pipeline: embed the extracted implication over pure ZFL (k = -2)
  int mt = std::max(m, 2);
  int n2 = std::max(n0 + 1, mt + 3);
  Term i2w = add(mulNat(bigI(), 2), wexp(one()));
  BoundState e = embeddingBound(m, p, N, n2);
  e.theory = -2;
  e = weakenTo(e, i2w, iPlus(mt), e.hullStage,
               "heights I.2+k < I.2+w, cut rank to I+" + std::to_string(mt));
  e.note = "second pipeline embedding over ZFL; " + e.note;
  logCheck(e, "no (K in Mh) inference remains (asserted)", true);
  tr.push_back(e);

  BoundState pe = e;
  for (int j = mt - 1; j >= 1; --j) pe = predicativeElim(pe, zero(), iPlus(j));
  pe = predicativeElim(pe, zero(), bigI());
  pe.note = "second predicative chain: " + std::to_string(mt) + " eliminations to cut rank I";
  tr.push_back(pe);

  BoundState fin = collapseStep(pe, bigI(), omega1(), n2);
  Term b = omegaTower(mt + 1, i2w);
  logCheck(fin, "collapse stage is exactly b = w_{m+1}(I.2+w)",
           cmp(fin.height, mkPsiReg(omega1(), n2, b)) == Ord::EQ);
  logCheck(fin, "Psi_{w1,n}(w_{n-1}(I+1)) > Psi_{w1,n}(b)",
           cmp(mkPsiReg(omega1(), n2, omegaTower(n2 - 1, add(bigI(), one()))),
               mkPsiReg(omega1(), n2, b)) == Ord::GT);
  logCheck(fin, "cross-n: PsiK at n0 <= PsiK at n",
           [&] {
             AbgamTable t2 = abgam(n2, N);
             Term k2 = mkPsiK(n2, t2.alphaVec[0].items(), {}, t2.gamma[0]);
             return cmp(kappa, k2) != Ord::GT;
           }());
  fin.note = "final omega_1 collapse: " + fin.note;
  tr.push_back(fin);
  return tr;
}

}  // namespace ordkit
