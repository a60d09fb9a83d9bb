#include "ordkit/arith.hpp"

#include <atomic>

namespace ordkit {
namespace arith {

namespace {

std::atomic<int> gMaxTower{8};

Term towerRaw(int m, Term t) {
  for (int i = 0; i < m; ++i) t = mkWExp(t);
  return t;
}

void checkCeiling(Term t) {
  Term ceil = ceilingTerm();
  if (cmp(t, ceil) != Ord::LT)
    fail(Err::CeilingExceeded, "term reaches w_" + std::to_string(maxTower()) + "(I+1)");
}

// exponent of a principal term viewed as w^e (eps terms are their own exponent)
Term logOf(Term t) {
  if (t.kind() == Kind::One) return zero();
  if (t.kind() == Kind::WExp) return t.kids()[0];
  return t;  // eps-designated
}

}  // namespace

int maxTower() { return gMaxTower.load(); }
void setMaxTower(int m) { gMaxTower.store(m); }

Term ceilingTerm() {
  thread_local int cachedFor = -1;
  thread_local Term cached;
  int m = maxTower();
  if (cachedFor != m) {
    cached = towerRaw(m, mkSum({bigI(), one()}));
    cachedFor = m;
  }
  return cached;
}

Term nat(unsigned m) {
  if (m == 0) return zero();
  if (m == 1) return one();
  return mkSum(std::vector<Term>(m, one()));
}

std::optional<unsigned> asNat(Term t) {
  if (t == zero()) return 0u;
  if (t == one()) return 1u;
  if (t.kind() == Kind::Sum) {
    for (Term p : t.kids())
      if (p != one()) return std::nullopt;
    return static_cast<unsigned>(t.kids().size());
  }
  return std::nullopt;
}

Term add(Term s, Term t) {
  if (t == zero()) return s;
  if (s == zero()) return t;
  std::vector<Term> sp = summands(s);
  const std::vector<Term> tp = summands(t);
  Term lead = tp.front();
  // left absorption: drop trailing parts of s below t's leading part
  while (!sp.empty() && cmp(sp.back(), lead) == Ord::LT) sp.pop_back();
  sp.insert(sp.end(), tp.begin(), tp.end());
  Term r = sp.size() == 1 ? sp.front() : mkSum(std::move(sp));
  checkCeiling(r);
  return r;
}

Term mulNat(Term t, unsigned m) {
  if (m == 0 || t == zero()) return zero();
  Term r = t;
  for (unsigned i = 1; i < m; ++i) r = add(r, t);
  return r;
}

Term wexp(Term t) {
  if (t == zero()) return one();
  if (isEpsDesignated(t)) return t;
  Term r = mkWExp(t);
  checkCeiling(r);
  return r;
}

Term mulPrincipal(Term s, Term t) {
  if (!isPrincipal(s)) fail(Err::Internal, "mulPrincipal: left factor not additively principal");
  if (t == zero()) return zero();
  if (t == one()) return s;
  if (s == one()) return t;
  if (t.kind() == Kind::Sum) {
    Term acc = zero();
    for (Term p : t.kids()) acc = add(acc, mulPrincipal(s, p));
    return acc;
  }
  if (t.kind() == Kind::One) return s;
  // s * w^e = w^(log s + e)
  return wexp(add(logOf(s), logOf(t)));
}

Term omegaMul(Term t) { return mulPrincipal(wexp(one()), t); }

Term omegaTower(int m, Term t) {
  Term r = t;
  for (int i = 0; i < m; ++i) r = wexp(r);
  return r;
}

Term veblen(Term a, Term b) {
  if (a == zero()) return wexp(b);
  // fixed points: phi(a)(b) = b for b = phi(a')(.) with a < a', and for
  // platform constants above a
  if (b.kind() == Kind::Veblen && cmp(a, b.kids()[0]) == Ord::LT) return b;
  if (isPlatform(b) && cmp(a, b) == Ord::LT) return b;
  Term r = mkVeblen(a, b);
  checkCeiling(r);
  return r;
}

}  // namespace arith
}  // namespace ordkit
