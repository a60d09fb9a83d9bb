#include "ordkit/hull.hpp"

#include "ordkit/arith.hpp"

namespace ordkit {

namespace {

Term towerRaw(int m, Term t) {
  for (int i = 0; i < m; ++i) t = mkWExp(t);
  return t;
}

// w_n(I+1), built without the arith ceiling so hull queries work at any n
Term stageBound(int n) { return towerRaw(n, mkSum({bigI(), one()})); }

bool isCollapse(Term t) {
  return t.kind() == Kind::PsiReg || t.kind() == Kind::PsiI || t.kind() == Kind::PsiK;
}

}  // namespace

bool inHull(Term t, const HullQuery& q) {
  // base clauses: constants, theta, the kappa context, and everything < threshold
  switch (t.kind()) {
    case Kind::Zero:
    case Kind::One:
    case Kind::Omega1:
    case Kind::BigK:
    case Kind::BigI:
      return true;
    default:
      break;
  }
  if (q.theta.contains(t)) return true;
  if (q.kappaCtx && *q.kappaCtx == t) return true;
  if (q.threshold.valid() && cmp(t, q.threshold) == Ord::LT) return true;

  switch (t.kind()) {
    case Kind::Sum: {
      for (Term p : t.kids())
        if (!inHull(p, q)) return false;
      return true;
    }
    case Kind::WExp: {
      Term e = t.kids()[0];
      return cmp(e, stageBound(q.n)) == Ord::LT && inHull(e, q);
    }
    case Kind::Veblen:
      return inHull(t.kids()[0], q) && inHull(t.kids()[1], q);
    case Kind::RegSucc:
      return inHull(t.kids()[0], q);
    case Kind::PsiI:
      return t.sub() == q.n && cmp(t.kids()[0], q.alpha) == Ord::LT && inHull(t.kids()[0], q);
    case Kind::PsiReg:
      return t.sub() == q.n && inHull(t.kids()[0], q) &&
             cmp(t.kids()[1], q.alpha) == Ord::LT && inHull(t.kids()[1], q);
    case Kind::PsiK: {
      if (t.sub() != q.n) return false;
      if (cmp(psiKArg(t), q.alpha) != Ord::LT) return false;
      for (Term c : psiKSeq(t))
        if (!inHull(c, q)) return false;
      for (Term c : psiKTheta(t))
        if (!inHull(c, q)) return false;
      return inHull(psiKArg(t), q);
    }
    default:
      return false;
  }
}

bool nfValid(Term t) {
  if (!isCollapse(t)) fail(Err::NotACollapse, "nfValid: not a collapse term");
  Term arg = t.kind() == Kind::PsiK ? psiKArg(t) : t.kids().back();

  // uniqueness: a collapse whose argument is itself a collapse below the
  // collapse value denotes a value already named with a smaller argument
  if (isCollapse(arg) && cmp(arg, t) == Ord::LT) return false;

  HullQuery q;
  q.alpha = arg;
  q.n = t.sub();
  q.threshold = t;
  if (t.kind() == Kind::PsiReg) q.kappaCtx = t.kids()[0];
  if (t.kind() == Kind::PsiK) {
    q.theta = ThetaSet(psiKTheta(t));
    OrdSeq seq{psiKSeq(t)};
    if (!seqLeqOrd(seq, arg)) return false;
  }
  return inHull(arg, q);
}

ResolventDescriptor resolventDescriptor(int i, const OrdSeq& seq, const OrdSeq& nu, Term gamma,
                                        const ThetaSet& theta, int n) {
  if (seq.lh() != nu.lh()) fail(Err::LengthMismatch, "resolvent: lh(nu) != lh(seq)");
  if (!seqLess(nu, seq)) fail(Err::NotComponentwiseLess, "resolvent: nu not componentwise < seq");
  ResolventDescriptor rd;
  rd.gamma = gamma;
  rd.theta = theta;
  for (size_t j = 0; j < seq.lh(); ++j) {
    MhDescriptor d;
    d.k = i + static_cast<int>(j);
    d.n = n;
    d.seq = bulletSub(nu, seq, j);
    d.theta = theta;
    rd.classes.push_back(std::move(d));
  }
  rd.condition = "H_{gamma,n}[Theta u {pi}](rho) cap pi subset rho";
  return rd;
}

}  // namespace ordkit
