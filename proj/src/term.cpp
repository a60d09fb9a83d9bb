#include "ordkit/term.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "ordkit/order.hpp"

namespace ordkit {

const char* errName(Err e) {
  switch (e) {
    case Err::CeilingExceeded: return "CeilingExceeded";
    case Err::IncomparableSubscript: return "IncomparableSubscript";
    case Err::SizeLimitExceeded: return "SizeLimitExceeded";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::NotComponentwiseLess: return "NotComponentwiseLess";
    case Err::NotACollapse: return "NotACollapse";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::TheoryFloor: return "TheoryFloor";
    case Err::BoundViolated: return "BoundViolated";
    case Err::InvalidRegular: return "InvalidRegular";
    case Err::NotRelativizable: return "NotRelativizable";
    case Err::UndecidableLiteral: return "UndecidableLiteral";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "?";
}

namespace {

size_t nodeHash(const TermNode& n) {
  size_t h = static_cast<size_t>(n.kind) * 0x9e3779b97f4a7c15ull;
  h ^= static_cast<size_t>(n.sub) + 0x517cc1b727220a95ull + (h << 6) + (h >> 2);
  h ^= static_cast<size_t>(n.seqLen) * 0x2545f4914f6cdd1dull;
  h ^= static_cast<size_t>(n.thetaLen) * 0x27d4eb2f165667c5ull;
  for (Term k : n.kids) h ^= std::hash<const TermNode*>()(k.node()) + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h;
}

struct NodeEq {
  bool operator()(const TermNode* a, const TermNode* b) const {
    return a->kind == b->kind && a->sub == b->sub && a->seqLen == b->seqLen &&
           a->thetaLen == b->thetaLen && a->kids == b->kids;
  }
};
struct NodeHashFn {
  size_t operator()(const TermNode* n) const { return n->hash; }
};

class Interner {
 public:
  Term intern(TermNode proto) {
    proto.hash = nodeHash(proto);
    uint32_t sz = 1;
    for (Term k : proto.kids) sz += k.size();
    proto.size = sz;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(&proto);
    if (it != table_.end()) return Term(*it);
    auto* owned = new TermNode(std::move(proto));
    table_.insert(owned);
    return Term(owned);
  }

  static Interner& instance() {
    static Interner in;
    return in;
  }

 private:
  std::mutex mu_;
  std::unordered_set<const TermNode*, NodeHashFn, NodeEq> table_;
};

Term mkConst(Kind k) {
  TermNode n;
  n.kind = k;
  return Interner::instance().intern(std::move(n));
}

}  // namespace

Term zero() { static Term t = mkConst(Kind::Zero); return t; }
Term one() { static Term t = mkConst(Kind::One); return t; }
Term omega1() { static Term t = mkConst(Kind::Omega1); return t; }
Term bigK() { static Term t = mkConst(Kind::BigK); return t; }
Term bigI() { static Term t = mkConst(Kind::BigI); return t; }

Term mkSum(std::vector<Term> parts) {
  TermNode n;
  n.kind = Kind::Sum;
  n.kids = std::move(parts);
  return Interner::instance().intern(std::move(n));
}

Term mkWExp(Term e) {
  TermNode n;
  n.kind = Kind::WExp;
  n.kids = {e};
  return Interner::instance().intern(std::move(n));
}

Term mkVeblen(Term a, Term b) {
  TermNode n;
  n.kind = Kind::Veblen;
  n.kids = {a, b};
  return Interner::instance().intern(std::move(n));
}

Term mkRegSucc(Term base) {
  TermNode n;
  n.kind = Kind::RegSucc;
  n.kids = {base};
  return Interner::instance().intern(std::move(n));
}

Term mkPsiReg(Term kappa, int nn, Term arg) {
  TermNode n;
  n.kind = Kind::PsiReg;
  n.sub = nn;
  n.kids = {kappa, arg};
  return Interner::instance().intern(std::move(n));
}

Term mkPsiI(int nn, Term arg) {
  TermNode n;
  n.kind = Kind::PsiI;
  n.sub = nn;
  n.kids = {arg};
  return Interner::instance().intern(std::move(n));
}

Term mkPsiK(int nn, const std::vector<Term>& seq, const std::vector<Term>& theta, Term arg) {
  TermNode n;
  n.kind = Kind::PsiK;
  n.sub = nn;
  n.seqLen = static_cast<uint16_t>(seq.size());
  n.thetaLen = static_cast<uint16_t>(theta.size());
  n.kids = seq;
  n.kids.insert(n.kids.end(), theta.begin(), theta.end());
  n.kids.push_back(arg);
  return Interner::instance().intern(std::move(n));
}

bool isPrincipal(Term t) {
  return t.valid() && t.kind() != Kind::Zero && t.kind() != Kind::Sum;
}

bool isPlatform(Term t) {
  switch (t.kind()) {
    case Kind::Omega1:
    case Kind::BigK:
    case Kind::BigI:
    case Kind::RegSucc:
    case Kind::PsiReg:
    case Kind::PsiI:
    case Kind::PsiK:
      return true;
    default:
      return false;
  }
}

bool isEpsDesignated(Term t) { return isPlatform(t) || t.kind() == Kind::Veblen; }

bool regularDesignated(Term t) {
  if (t == omega1()) return true;
  if (t.kind() == Kind::RegSucc) {
    Term b = t.kids()[0];
    return b == bigK() || b.kind() == Kind::RegSucc || b.kind() == Kind::PsiI;
  }
  return false;
}

std::vector<Term> psiKSeq(Term t) {
  const TermNode* n = t.node();
  return std::vector<Term>(n->kids.begin(), n->kids.begin() + n->seqLen);
}

std::vector<Term> psiKTheta(Term t) {
  const TermNode* n = t.node();
  return std::vector<Term>(n->kids.begin() + n->seqLen, n->kids.begin() + n->seqLen + n->thetaLen);
}

Term psiKArg(Term t) { return t.kids().back(); }

std::vector<Term> summands(Term t) {
  if (t.kind() == Kind::Sum) return t.kids();
  return {t};
}

namespace {
void ksetInto(Term t, std::vector<Term>& out, std::unordered_set<const TermNode*>& seen) {
  if (!seen.insert(t.node()).second) return;
  out.push_back(t);
  for (Term k : t.kids()) ksetInto(k, out, seen);
}
}  // namespace

std::vector<Term> kset(Term t) {
  std::vector<Term> out;
  std::unordered_set<const TermNode*> seen;
  ksetInto(t, out, seen);
  return out;
}

ThetaSet::ThetaSet(std::vector<Term> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end(), [](Term a, Term b) { return lt(a, b); });
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool ThetaSet::contains(Term t) const {
  return std::find(elems_.begin(), elems_.end(), t) != elems_.end();
}

bool ThetaSet::subsetOf(const ThetaSet& other) const {
  for (Term t : elems_)
    if (!other.contains(t)) return false;
  return true;
}

}  // namespace ordkit
