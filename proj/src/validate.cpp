#include <sstream>

#include "ordkit/hull.hpp"
#include "ordkit/order.hpp"
#include "ordkit/term.hpp"

namespace ordkit {

namespace {

Term towerRaw(int m, Term t) {
  for (int i = 0; i < m; ++i) t = mkWExp(t);
  return t;
}

struct Validator {
  const ValidateOpts& opts;
  std::vector<std::string>& out;

  void violation(const std::string& msg) { out.push_back(msg); }

  bool regSuccBaseOk(Term b) {
    if (b == bigK() || b.kind() == Kind::PsiI) return true;
    if (b.kind() == Kind::RegSucc) return regSuccBaseOk(b.kids()[0]);
    return false;
  }

  void checkCollapseArgBound(Term t, Term arg) {
    Term bound = towerRaw(t.sub() + 1, mkSum({bigI(), one()}));
    if (cmp(arg, bound) != Ord::LT) violation("collapse arg not < w_{n+1}(I+1)");
  }

  void check(Term t) {
    switch (t.kind()) {
      case Kind::Zero:
      case Kind::One:
      case Kind::Omega1:
      case Kind::BigK:
      case Kind::BigI:
        return;
      case Kind::Sum: {
        const auto& ps = t.kids();
        if (ps.size() < 2) violation("Sum with fewer than 2 parts");
        for (Term p : ps)
          if (!isPrincipal(p)) violation("Sum part not additively principal");
        for (size_t i = 0; i + 1 < ps.size(); ++i)
          if (cmp(ps[i], ps[i + 1]) == Ord::LT) violation("parts not non-increasing");
        break;
      }
      case Kind::WExp: {
        Term e = t.kids()[0];
        if (e == zero()) violation("WExp(Zero) must be One");
        else if (isEpsDesignated(e)) violation("WExp of an epsilon fixed point");
        break;
      }
      case Kind::Veblen: {
        Term a = t.kids()[0], b = t.kids()[1];
        if (a == zero()) violation("Veblen(Zero,b) must be WExp(b)");
        if (b.kind() == Kind::Veblen && cmp(a, b.kids()[0]) == Ord::LT)
          violation("collapsible Veblen index");
        if (isPlatform(b) && cmp(a, b) == Ord::LT)
          violation("Veblen fixed point at a platform constant");
        break;
      }
      case Kind::RegSucc: {
        if (!regSuccBaseOk(t.kids()[0])) violation("RegSucc base not K, a RegSucc chain or Psi_I");
        break;
      }
      case Kind::PsiReg: {
        if (t.sub() < 1) violation("collapse subscript must be >= 1");
        if (!regularDesignated(t.kids()[0])) violation("PsiReg kappa not regular-designated");
        checkCollapseArgBound(t, t.kids()[1]);
        if (out.empty() && !nfValid(t)) violation("collapse argument fails the hull normal-form condition");
        break;
      }
      case Kind::PsiI: {
        if (t.sub() < 1) violation("collapse subscript must be >= 1");
        checkCollapseArgBound(t, t.kids()[0]);
        if (out.empty() && !nfValid(t)) violation("collapse argument fails the hull normal-form condition");
        break;
      }
      case Kind::PsiK: {
        if (t.sub() < 1) violation("collapse subscript must be >= 1");
        const auto seq = psiKSeq(t);
        if (static_cast<int>(seq.size()) != opts.N) {
          std::ostringstream os;
          os << "lh(seq)!=N (lh=" << seq.size() << ", N=" << opts.N << ")";
          violation(os.str());
        }
        Term arg = psiKArg(t);
        for (Term c : seq)
          if (cmp(c, arg) == Ord::GT) violation("PsiK sequence component above arg");
        const auto th = psiKTheta(t);
        for (size_t i = 0; i + 1 < th.size(); ++i)
          if (cmp(th[i], th[i + 1]) != Ord::LT) violation("theta not sorted/deduplicated");
        for (Term e : th)
          if (cmp(e, bigK()) == Ord::GT) violation("theta element above K");
        checkCollapseArgBound(t, arg);
        if (out.empty() && !nfValid(t)) violation("collapse argument fails the hull normal-form condition");
        break;
      }
    }
    for (Term k : t.kids()) check(k);
  }
};

}  // namespace

ValidityReport validate(Term t, const ValidateOpts& opts) {
  ValidityReport rep;
  if (!t.valid()) {
    rep.ok = false;
    rep.violations.push_back("null term");
    return rep;
  }
  Validator v{opts, rep.violations};
  v.check(t);
  if (rep.violations.empty()) {
    Term ceil = towerRaw(opts.maxTower, mkSum({bigI(), one()}));
    if (cmp(t, ceil) != Ord::LT) rep.violations.push_back("term reaches the w_maxTower(I+1) ceiling");
  }
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace ordkit
