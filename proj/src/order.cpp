#include "ordkit/order.hpp"

#include <mutex>
#include <unordered_map>

#include "ordkit/arith.hpp"
#include "ordkit/hull.hpp"

namespace ordkit {

const char* ordName(Ord o) {
  switch (o) {
    case Ord::LT: return "LT";
    case Ord::EQ: return "EQ";
    case Ord::GT: return "GT";
  }
  return "?";
}

namespace {

inline Ord inv(Ord o) { return static_cast<Ord>(-static_cast<int8_t>(o)); }

struct PairHash {
  size_t operator()(const std::pair<const TermNode*, const TermNode*>& p) const {
    size_t a = std::hash<const TermNode*>()(p.first);
    size_t b = std::hash<const TermNode*>()(p.second);
    return a ^ (b * 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  }
};

std::mutex memoMu;
std::unordered_map<std::pair<const TermNode*, const TermNode*>, Ord, PairHash> memo;

// Subterm pairs repeat massively across a property sweep; top-level pairs are
// mostly unique, so caching them only burns memory.
inline bool memoizable(Term s, Term t) { return s.size() + t.size() <= 9; }

Ord cmpRec(Term s, Term t);

// exponent of a non-eps principal term viewed as w^e
Term expOf(Term t) {
  if (t.kind() == Kind::One) return zero();
  return t.kids()[0];  // WExp
}

// w^e vs an eps-designated term E: decided by e vs E (w^E = E; raw ties break
// toward the applied term being larger).
Ord cmpWexpVsEps(Term e, Term E) {
  Ord c = cmpRec(e, E);
  return c == Ord::EQ ? Ord::GT : c;
}

Ord cmpVeblen(Term s, Term t) {
  Term a1 = s.kids()[0], b1 = s.kids()[1];
  Term a2 = t.kids()[0], b2 = t.kids()[1];
  Ord ca = cmpRec(a1, a2);
  if (ca == Ord::EQ) return cmpRec(b1, b2);
  if (ca == Ord::LT) {
    Ord d = cmpRec(b1, t);
    return d == Ord::EQ ? Ord::GT : d;  // phi(a1)(t) sits just above the fixed point
  }
  Ord d = cmpRec(s, b2);
  return d == Ord::EQ ? Ord::LT : d;
}

// s = Veblen, t = platform: phi(a)(b) < P iff both components are < P.
Ord cmpVeblenVsPlatform(Term s, Term t) {
  if (cmpRec(s.kids()[0], t) == Ord::LT && cmpRec(s.kids()[1], t) == Ord::LT) return Ord::LT;
  return Ord::GT;
}

// Same-kappa collapse rule: equal n compares args; across n only the
// monotonicity direction is defined.
Ord cmpSameKappaCollapse(int n1, Term a1, int n2, Term a2, const char* what) {
  if (n1 == n2) return cmpRec(a1, a2);
  if (n1 < n2) {
    if (cmpRec(a1, a2) != Ord::GT) return Ord::LT;
    fail(Err::IncomparableSubscript, std::string(what) + ": subscripts differ and arguments are not aligned");
  }
  if (cmpRec(a2, a1) != Ord::GT) return Ord::GT;
  fail(Err::IncomparableSubscript, std::string(what) + ": subscripts differ and arguments are not aligned");
}

Ord lexSeq(const std::vector<Term>& a, const std::vector<Term>& b) {
  size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i < m; ++i) {
    Ord c = cmpRec(a[i], b[i]);
    if (c != Ord::EQ) return c;
  }
  if (a.size() == b.size()) return Ord::EQ;
  return a.size() < b.size() ? Ord::LT : Ord::GT;
}

bool seqCwLeq(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (cmpRec(a[i], b[i]) == Ord::GT) return false;
  return true;
}

Ord cmpPsiK(Term s, Term t) {
  int n1 = s.sub(), n2 = t.sub();
  if (n1 == n2) {
    Ord c = cmpRec(psiKArg(s), psiKArg(t));
    if (c != Ord::EQ) return c;
    c = lexSeq(psiKSeq(s), psiKSeq(t));
    if (c != Ord::EQ) return c;
    return lexSeq(psiKTheta(s), psiKTheta(t));
  }
  if (n1 < n2) {
    if (cmpRec(psiKArg(s), psiKArg(t)) != Ord::GT && seqCwLeq(psiKSeq(s), psiKSeq(t)) &&
        psiKTheta(s) == psiKTheta(t))
      return Ord::LT;
    fail(Err::IncomparableSubscript, "PsiK: subscripts differ and components are not aligned");
  }
  return inv(cmpPsiK(t, s));
}

// Coarse position of a platform term in the constant spine
//   Psi_{w1} < w1 < PsiK < K < (above-K area) < I.
int band(Term t) {
  switch (t.kind()) {
    case Kind::PsiReg: return t.kids()[0] == omega1() ? 0 : 4;
    case Kind::Omega1: return 1;
    case Kind::PsiK: return 2;
    case Kind::BigK: return 3;
    case Kind::RegSucc:
    case Kind::PsiI: return 4;
    case Kind::BigI: return 5;
    default: fail(Err::Internal, "band: not a platform");
  }
}

// Above K the platforms are RegSucc towers over a core (K or a PsiI term) with
// the collapses Psi_{kappa,n} interleaved just below their kappa:
//   K < Psi_{K+} < K+ < Psi_{K++} < K++ < ... < PsiI < PsiI+ < ... < I.
struct AboveKPos {
  Term core;   // bigK() or a PsiI term
  long slot;   // RegSucc^d(core) at 2d, Psi_{RegSucc^d(core)} at 2d-1
  Term self;
};

AboveKPos aboveKPos(Term t) {
  AboveKPos pos;
  pos.self = t;
  Term base = t;
  long depth = 0;
  bool collapse = false;
  if (t.kind() == Kind::PsiReg) {
    collapse = true;
    base = t.kids()[0];
  }
  while (base.kind() == Kind::RegSucc) {
    ++depth;
    base = base.kids()[0];
  }
  pos.core = base;  // BigK or PsiI
  pos.slot = collapse ? 2 * depth - 1 : 2 * depth;
  return pos;
}

Ord cmpAboveK(Term s, Term t) {
  AboveKPos ps = aboveKPos(s), pt = aboveKPos(t);
  bool sIsI = ps.core.kind() == Kind::PsiI, tIsI = pt.core.kind() == Kind::PsiI;
  if (sIsI != tIsI) return sIsI ? Ord::GT : Ord::LT;
  if (sIsI) {
    Ord c = cmpSameKappaCollapse(ps.core.sub(), ps.core.kids()[0], pt.core.sub(),
                                 pt.core.kids()[0], "PsiI");
    if (c != Ord::EQ) return c;
  }
  if (ps.slot != pt.slot) return ps.slot < pt.slot ? Ord::LT : Ord::GT;
  // same slot: both collapses into the same kappa
  return cmpSameKappaCollapse(s.sub(), s.kids()[1], t.sub(), t.kids()[1], "PsiReg");
}

Ord cmpPlatform(Term s, Term t) {
  int bs = band(s), bt = band(t);
  if (bs != bt) return bs < bt ? Ord::LT : Ord::GT;
  switch (bs) {
    case 0:
      return cmpSameKappaCollapse(s.sub(), s.kids()[1], t.sub(), t.kids()[1], "PsiReg");
    case 2:
      return cmpPsiK(s, t);
    case 4:
      return cmpAboveK(s, t);
    default:
      fail(Err::Internal, "cmpPlatform: distinct terms in singleton band");
  }
}

Ord cmpPrincipal(Term s, Term t) {
  bool es = isEpsDesignated(s), et = isEpsDesignated(t);
  if (!es && !et) {
    Ord c = cmpRec(expOf(s), expOf(t));
    if (c == Ord::EQ) return s.kind() == Kind::One ? Ord::LT : Ord::GT;  // raw 1 vs w^0
    return c;
  }
  if (!es) return cmpWexpVsEps(expOf(s), t);
  if (!et) return inv(cmpWexpVsEps(expOf(t), s));
  bool vs = s.kind() == Kind::Veblen, vt = t.kind() == Kind::Veblen;
  if (vs && vt) return cmpVeblen(s, t);
  if (vs) return cmpVeblenVsPlatform(s, t);
  if (vt) return inv(cmpVeblenVsPlatform(t, s));
  return cmpPlatform(s, t);
}

Ord cmpRec(Term s, Term t) {
  if (s == t) return Ord::EQ;
  if (s.kind() == Kind::Zero) return Ord::LT;
  if (t.kind() == Kind::Zero) return Ord::GT;

  const bool cache = memoizable(s, t);
  if (cache) {
    std::lock_guard<std::mutex> lock(memoMu);
    auto it = memo.find({s.node(), t.node()});
    if (it != memo.end()) return it->second;
  }

  Ord r;
  if (s.kind() == Kind::Sum || t.kind() == Kind::Sum) {
    const std::vector<Term> sp = summands(s), tp = summands(t);
    r = lexSeq(sp, tp);
  } else {
    r = cmpPrincipal(s, t);
  }

  if (cache) {
    std::lock_guard<std::mutex> lock(memoMu);
    memo.emplace(std::make_pair(s.node(), t.node()), r);
    memo.emplace(std::make_pair(t.node(), s.node()), inv(r));
  }
  return r;
}

}  // namespace

Ord cmp(Term s, Term t) { return cmpRec(s, t); }

bool isNormalForm(Term t, const ValidateOpts& opts) { return validate(t, opts).ok; }

namespace {

// Exhaustive generator of raw candidates by node count, normal-form filtered.
class Enumerator {
 public:
  Enumerator(int maxSize, const EnumOpts& opts) : maxSize_(maxSize), opts_(opts) {
    vopts_.N = opts.N;
    vopts_.maxTower = opts.maxTower;
  }

  std::vector<Term> run() {
    bySize_.assign(maxSize_ + 1, {});
    for (int s = 1; s <= maxSize_; ++s) buildSize(s);
    std::vector<Term> all;
    for (auto& v : bySize_) all.insert(all.end(), v.begin(), v.end());
    return all;
  }

 private:
  void emit(Term t) {
    if (static_cast<long>(++candidates_) > opts_.cap)
      fail(Err::SizeLimitExceeded, "enumeration candidate pool exceeds cap");
    int s = static_cast<int>(t.size());
    if (s > maxSize_) return;
    if (!validate(t, vopts_).ok) return;
    bySize_[s].push_back(t);
  }

  void buildSize(int s) {
    if (s == 1) {
      for (Term c : {zero(), one(), omega1(), bigK(), bigI()}) emit(c);
      return;
    }
    // WExp, RegSucc, PsiI: one child of size s-1
    for (Term e : bySize_[s - 1]) {
      emit(mkWExp(e));
      emit(mkRegSucc(e));
      emit(mkPsiI(opts_.collapseSub, e));
    }
    // Veblen, PsiReg: two children
    for (int sa = 1; sa <= s - 2; ++sa) {
      int sb = s - 1 - sa;
      for (Term a : bySize_[sa])
        for (Term b : bySize_[sb]) {
          emit(mkVeblen(a, b));
          emit(mkPsiReg(a, opts_.collapseSub, b));
        }
    }
    // Sum: non-increasing sequences of >= 2 principal parts, total size s-1
    std::vector<Term> acc;
    sums(s - 1, acc);
    // PsiK: seq of N parts, theta with <= 1 element, arg
    psiKs(s - 1);
  }

  void sums(int remaining, std::vector<Term>& acc) {
    if (remaining == 0) {
      if (acc.size() >= 2) emit(mkSum(acc));
      return;
    }
    for (int ps = 1; ps <= remaining; ++ps)
      for (Term p : bySize_[ps]) {
        if (!isPrincipal(p)) continue;
        if (!acc.empty() && cmp(acc.back(), p) == Ord::LT) continue;  // pruning; re-checked
        acc.push_back(p);
        sums(remaining - ps, acc);
        acc.pop_back();
      }
  }

  void psiKs(int budget) {
    const int N = opts_.N;
    if (budget < N + 1) return;
    std::vector<Term> seq;
    buildSeq(budget, N, seq);
  }

  void buildSeq(int budget, int remaining, std::vector<Term>& seq) {
    if (remaining == 0) {
      // theta empty
      for (int az = 1; az <= budget; ++az)
        if (az == budget)
          for (Term arg : bySize_[az]) emit(mkPsiK(opts_.collapseSub, seq, {}, arg));
      // theta with one element
      for (int ts = 1; ts < budget; ++ts)
        for (Term th : bySize_[ts])
          for (Term arg : bySize_[budget - ts])
            emit(mkPsiK(opts_.collapseSub, seq, {th}, arg));
      return;
    }
    for (int ps = 1; ps + (remaining - 1) + 1 <= budget; ++ps)
      for (Term p : bySize_[ps]) {
        seq.push_back(p);
        buildSeq(budget - ps, remaining - 1, seq);
        seq.pop_back();
      }
  }

  int maxSize_;
  EnumOpts opts_;
  ValidateOpts vopts_;
  std::vector<std::vector<Term>> bySize_;
  long candidates_ = 0;
};

}  // namespace

std::vector<Term> enumerateAll(int maxSize, const EnumOpts& opts) {
  if (maxSize > 9) fail(Err::SizeLimitExceeded, "maxSize > 9");
  Enumerator en(maxSize, opts);
  return en.run();
}

std::vector<Term> enumerateBelow(Term bound, int maxSize, const EnumOpts& opts) {
  std::vector<Term> all = enumerateAll(maxSize, opts);
  std::vector<Term> out;
  for (Term t : all)
    if (cmp(t, bound) == Ord::LT) out.push_back(t);
  std::sort(out.begin(), out.end(), [](Term a, Term b) { return cmp(a, b) == Ord::LT; });
  return out;
}

}  // namespace ordkit
