#include "ordkit/mahlo.hpp"

#include <algorithm>

#include "ordkit/arith.hpp"

namespace ordkit {

Term OrdSeq::component(size_t i) const {
  if (i >= items_.size()) fail(Err::IndexOutOfRange, "sequence component out of range");
  return items_[i];
}

OrdSeq OrdSeq::endSegment(size_t i) const {
  if (i > items_.size()) fail(Err::IndexOutOfRange, "end segment index out of range");
  return OrdSeq(std::vector<Term>(items_.begin() + i, items_.end()));
}

std::vector<Term> OrdSeq::ksetSeq() const {
  std::vector<Term> out = items_;
  std::sort(out.begin(), out.end(), [](Term a, Term b) { return lt(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Term OrdSeq::unlift() const {
  if (items_.size() != 1) fail(Err::LengthMismatch, "unlift needs a singleton sequence");
  return items_[0];
}

OrdSeq bulletSub(const OrdSeq& nu, const OrdSeq& alpha, size_t i) {
  if (nu.lh() != alpha.lh()) fail(Err::LengthMismatch, "bulletSub: lh(nu) != lh(alpha)");
  if (i >= alpha.lh()) fail(Err::IndexOutOfRange, "bulletSub: index out of range");
  std::vector<Term> items;
  items.push_back(nu.component(i));
  OrdSeq tail = alpha.endSegment(i + 1);
  items.insert(items.end(), tail.items().begin(), tail.items().end());
  return OrdSeq(std::move(items));
}

bool seqLess(const OrdSeq& nu, const OrdSeq& alpha) {
  if (nu.lh() != alpha.lh()) fail(Err::LengthMismatch, "seqLess: unequal lengths");
  for (size_t i = 0; i < alpha.lh(); ++i)
    if (!lt(nu.component(i), alpha.component(i))) return false;
  return true;
}

bool seqLeqOrd(const OrdSeq& alpha, Term beta) {
  for (Term a : alpha.items())
    if (!leq(a, beta)) return false;
  return true;
}

bool mhSubsumes(const MhDescriptor& d1, const MhDescriptor& d2) {
  if (d1.k != d2.k || d1.n != d2.n) return false;
  if (!(d1.theta == d2.theta)) return false;
  if (d1.seq.lh() != d2.seq.lh()) return false;
  for (size_t i = 0; i < d1.seq.lh(); ++i)
    if (!leq(d2.seq.component(i), d1.seq.component(i))) return false;
  return true;
}

AbgamTable abgam(int n, int N) {
  if (n < 1 || N < 1) fail(Err::IndexOutOfRange, "abgam needs n >= 1, N >= 1");
  using namespace arith;
  AbgamTable tb;
  tb.n = n;
  tb.N = N;
  Term stage = omegaTower(n - 1, add(bigI(), one()));  // w_{n-1}(I+1)
  tb.b = mkPsiReg(mkRegSucc(bigK()), n, stage);
  tb.a = veblen(tb.b, tb.b);
  for (int k = -1; k <= N; ++k)
    tb.gamma[k] = add(add(stage, one()), mulNat(tb.a, static_cast<unsigned>(N - k)));
  for (int k = 0; k <= N; ++k) {
    std::vector<Term> items;
    for (int i = 0; i < N - k; ++i) items.push_back(tb.gamma[k + i]);
    tb.alphaVec[k] = OrdSeq(std::move(items));
  }
  return tb;
}

}  // namespace ordkit
