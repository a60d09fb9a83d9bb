#include "ordkit/formula.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ordkit/arith.hpp"

namespace ordkit {

namespace {

Formula node(FormulaNode n) { return std::make_shared<const FormulaNode>(std::move(n)); }

bool isQuant(FKind k) { return k == FKind::ExB || k == FKind::AllB; }
bool isQuant2(FKind k) { return k == FKind::Ex2 || k == FKind::All2; }

}  // namespace

Formula litIn(FTerm a, FTerm b, bool pos) {
  FormulaNode n;
  n.kind = FKind::LitIn;
  n.positive = pos;
  n.t1 = a;
  n.t2 = b;
  return node(std::move(n));
}
Formula litP(FTerm a, FTerm b, FTerm c, bool pos) {
  FormulaNode n;
  n.kind = FKind::LitP;
  n.positive = pos;
  n.t1 = a;
  n.t2 = b;
  n.t3 = c;
  return node(std::move(n));
}
Formula litPI(FTerm t, int sub, bool pos) {
  FormulaNode n;
  n.kind = FKind::LitPI;
  n.positive = pos;
  n.sub = sub;
  n.t1 = t;
  return node(std::move(n));
}
Formula litReg(FTerm t, bool pos) {
  FormulaNode n;
  n.kind = FKind::LitReg;
  n.positive = pos;
  n.t1 = t;
  return node(std::move(n));
}
Formula litR(std::string tag, Term kappa, FTerm t, bool pos) {
  FormulaNode n;
  n.kind = FKind::LitR;
  n.positive = pos;
  n.tag = std::move(tag);
  n.kappa = kappa;
  n.t1 = t;
  return node(std::move(n));
}
Formula litX(uint32_t ix, FTerm t, bool pos) {
  FormulaNode n;
  n.kind = FKind::LitX;
  n.positive = pos;
  n.predIx = ix;
  n.t1 = t;
  return node(std::move(n));
}
Formula fOr(Formula a, Formula b) {
  FormulaNode n;
  n.kind = FKind::Or;
  n.a = std::move(a);
  n.b = std::move(b);
  return node(std::move(n));
}
Formula fAnd(Formula a, Formula b) {
  FormulaNode n;
  n.kind = FKind::And;
  n.a = std::move(a);
  n.b = std::move(b);
  return node(std::move(n));
}
Formula exB(Term bound, Formula body) {
  FormulaNode n;
  n.kind = FKind::ExB;
  n.bound = bound;
  n.a = std::move(body);
  return node(std::move(n));
}
Formula allB(Term bound, Formula body) {
  FormulaNode n;
  n.kind = FKind::AllB;
  n.bound = bound;
  n.a = std::move(body);
  return node(std::move(n));
}
Formula ex2(Term kappa, Formula body) {
  FormulaNode n;
  n.kind = FKind::Ex2;
  n.kappa = kappa;
  n.a = std::move(body);
  return node(std::move(n));
}
Formula all2(Term kappa, Formula body) {
  FormulaNode n;
  n.kind = FKind::All2;
  n.kappa = kappa;
  n.a = std::move(body);
  return node(std::move(n));
}

bool isLiteral(const Formula& f) {
  switch (f->kind) {
    case FKind::LitIn:
    case FKind::LitP:
    case FKind::LitPI:
    case FKind::LitReg:
    case FKind::LitR:
    case FKind::LitX:
      return true;
    default:
      return false;
  }
}

Formula fneg(const Formula& f) {
  FormulaNode n = *f;
  if (isLiteral(f)) {
    n.positive = !n.positive;
    return node(std::move(n));
  }
  switch (f->kind) {
    case FKind::Or: n.kind = FKind::And; break;
    case FKind::And: n.kind = FKind::Or; break;
    case FKind::ExB: n.kind = FKind::AllB; break;
    case FKind::AllB: n.kind = FKind::ExB; break;
    case FKind::Ex2: n.kind = FKind::All2; break;
    case FKind::All2: n.kind = FKind::Ex2; break;
    default: break;
  }
  if (n.a) n.a = fneg(n.a);
  if (n.b) n.b = fneg(n.b);
  return node(std::move(n));
}

bool formulaEq(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->positive != b->positive) return false;
  if (a->sub != b->sub || a->predIx != b->predIx || a->tag != b->tag) return false;
  if (a->kappa != b->kappa || a->bound != b->bound) return false;
  if (!(a->t1 == b->t1 && a->t2 == b->t2 && a->t3 == b->t3)) return false;
  if (static_cast<bool>(a->a) != static_cast<bool>(b->a)) return false;
  if (static_cast<bool>(a->b) != static_cast<bool>(b->b)) return false;
  if (a->a && !formulaEq(a->a, b->a)) return false;
  if (a->b && !formulaEq(a->b, b->b)) return false;
  return true;
}

namespace {

void literalSlots(const FormulaNode& f, std::vector<const FTerm*>& out) {
  switch (f.kind) {
    case FKind::LitIn: out = {&f.t1, &f.t2}; break;
    case FKind::LitP: out = {&f.t1, &f.t2, &f.t3}; break;
    case FKind::LitPI:
    case FKind::LitReg:
    case FKind::LitR:
    case FKind::LitX: out = {&f.t1}; break;
    default: out.clear();
  }
}

void checkClosed(const Formula& f, uint32_t ind, uint32_t pred, std::vector<std::string>& out) {
  std::vector<const FTerm*> slots;
  literalSlots(*f, slots);
  for (const FTerm* s : slots)
    if (s->isVar && s->var >= ind) out.push_back("unbound individual variable");
  if (f->kind == FKind::LitX && f->predIx >= pred) out.push_back("unbound predicate variable");
  if (f->a)
    checkClosed(f->a, ind + (isQuant(f->kind) ? 1 : 0), pred + (isQuant2(f->kind) ? 1 : 0), out);
  if (f->b) checkClosed(f->b, ind, pred, out);
}

bool isRegularLeqK(Term t) { return t == omega1() || t == bigK() || t.kind() == Kind::PsiK; }

void checkNode(const Formula& f, const ValidateOpts& opts, std::vector<std::string>& out) {
  std::vector<const FTerm*> slots;
  literalSlots(*f, slots);
  for (const FTerm* s : slots)
    if (!s->isVar) {
      if (!validate(s->c, opts).ok) out.push_back("invalid constant in literal");
      else if (cmp(s->c, bigI()) != Ord::LT) out.push_back("literal constant not in L_I");
    }
  if (f->kind == FKind::LitR && !isRegularLeqK(f->kappa))
    out.push_back("R-literal kappa not a regular <= K");
  if (isQuant2(f->kind)) {
    if (!isRegularLeqK(f->kappa) || cmp(omega1(), f->kappa) != Ord::LT)
      out.push_back("predicate quantifier kappa not a regular in (w1, K]");
  }
  if (isQuant(f->kind)) {
    if (!validate(f->bound, opts).ok) out.push_back("invalid quantifier bound");
    else if (cmp(f->bound, bigI()) == Ord::GT) out.push_back("quantifier bound above I");
  }
  if (f->a) checkNode(f->a, opts, out);
  if (f->b) checkNode(f->b, opts, out);
}

}  // namespace

ValidityReport validateFormula(const Formula& f, const ValidateOpts& opts) {
  ValidityReport rep;
  if (!f) {
    rep.ok = false;
    rep.violations.push_back("null formula");
    return rep;
  }
  checkClosed(f, 0, 0, rep.violations);
  checkNode(f, opts, rep.violations);
  rep.ok = rep.violations.empty();
  return rep;
}

namespace {

FTerm substSlot(const FTerm& s, uint32_t depth, Term value) {
  if (s.isVar) {
    if (s.var == depth) return FTerm::mk(value);
    if (s.var > depth) return FTerm::mkVar(s.var - 1);  // one binder consumed
  }
  return s;
}

Formula substIndiv(const Formula& f, uint32_t depth, Term value) {
  FormulaNode n = *f;
  if (isLiteral(f)) {
    n.t1 = substSlot(n.t1, depth, value);
    n.t2 = substSlot(n.t2, depth, value);
    n.t3 = substSlot(n.t3, depth, value);
    return node(std::move(n));
  }
  uint32_t d2 = depth + (isQuant(f->kind) ? 1 : 0);
  if (n.a) n.a = substIndiv(n.a, d2, value);
  if (n.b) n.b = substIndiv(n.b, depth, value);
  return node(std::move(n));
}

Formula substPred(const Formula& f, uint32_t depth, const std::string& tag, Term kappa) {
  if (f->kind == FKind::LitX) {
    if (f->predIx == depth) return litR(tag, kappa, f->t1, f->positive);
    if (f->predIx > depth) return litX(f->predIx - 1, f->t1, f->positive);
    return f;
  }
  FormulaNode n = *f;
  uint32_t d2 = depth + (isQuant2(f->kind) ? 1 : 0);
  if (n.a) n.a = substPred(n.a, d2, tag, kappa);
  if (n.b) n.b = substPred(n.b, depth, tag, kappa);
  return node(std::move(n));
}

}  // namespace

Formula instIndiv(const Formula& body, Term value) { return substIndiv(body, 0, value); }
Formula instPred(const Formula& body, const std::string& tag, Term kappa) {
  return substPred(body, 0, tag, kappa);
}

namespace {

struct TermSet {
  std::set<const TermNode*> seen;
  std::vector<Term> items;
  void add(Term t) {
    if (seen.insert(t.node()).second) items.push_back(t);
  }
  void addAll(const TermSet& o) {
    for (Term t : o.items) add(t);
  }
};

void collectK(const Formula& f, TermSet& e, TermSet& r) {
  e.add(zero());
  r.add(zero());
  if (isLiteral(f)) {
    std::vector<const FTerm*> slots;
    literalSlots(*f, slots);
    for (const FTerm* s : slots)
      if (!s->isVar && cmp(s->c, bigI()) == Ord::LT) e.add(s->c);
    if (f->kind == FKind::LitR) r.add(f->kappa);
    return;
  }
  switch (f->kind) {
    case FKind::Or:
    case FKind::And:
      collectK(f->a, e, r);
      collectK(f->b, e, r);
      return;
    case FKind::ExB:
    case FKind::AllB:
      if (cmp(f->bound, bigI()) == Ord::LT) e.add(f->bound);
      collectK(f->a, e, r);
      return;
    case FKind::Ex2:
    case FKind::All2:
      e.add(f->kappa);
      collectK(f->a, e, r);
      return;
    default:
      return;
  }
}

std::vector<Term> sortedItems(TermSet s) {
  std::sort(s.items.begin(), s.items.end(), [](Term a, Term b) { return lt(a, b); });
  return s.items;
}

}  // namespace

std::vector<Term> kE(const Formula& f) {
  TermSet e, r;
  collectK(f, e, r);
  return sortedItems(std::move(e));
}

std::vector<Term> kR(const Formula& f) {
  TermSet e, r;
  collectK(f, e, r);
  return sortedItems(std::move(r));
}

std::vector<Term> kAll(const Formula& f) {
  TermSet e, r;
  collectK(f, e, r);
  e.addAll(r);
  return sortedItems(std::move(e));
}

namespace {

Term maxOf(const std::vector<Term>& ts) {
  Term m = zero();
  for (Term t : ts) m = maxTerm(m, t);
  return m;
}

// b < x matcher: LitIn(Const b, Var v) with the given polarity
bool isLess(const Formula& f, uint32_t v, bool pos, Term* b) {
  if (f->kind != FKind::LitIn || f->positive != pos) return false;
  if (f->t1.isVar || !f->t2.isVar || f->t2.var != v) return false;
  *b = f->t1.c;
  return true;
}

// ex x < I . (b < x & P_{I,n}(x)), or its De Morgan dual
bool shapePIn(const Formula& f, Term* outB) {
  if (!isQuant(f->kind) || f->bound != bigI()) return false;
  bool pos = f->kind == FKind::ExB;
  const Formula& body = f->a;
  if (!body || body->kind != (pos ? FKind::And : FKind::Or)) return false;
  auto match = [&](const Formula& l, const Formula& pi) {
    Term b;
    return isLess(l, 0, pos, &b) && pi->kind == FKind::LitPI && pi->positive == pos &&
           pi->t1.isVar && pi->t1.var == 0 && (*outB = b, true);
  };
  return match(body->a, body->b) || match(body->b, body->a);
}

// ex x < lam . ex y < lam . (b < x & P(lam, x, y)), lam regular, or its dual
bool shapePReg(const Formula& f, Term* outLam, Term* outB) {
  if (!isQuant(f->kind)) return false;
  bool pos = f->kind == FKind::ExB;
  Term lam = f->bound;
  if (!regularDesignated(lam)) return false;
  const Formula& inner = f->a;
  if (!inner || inner->kind != (pos ? FKind::ExB : FKind::AllB) || inner->bound != lam)
    return false;
  const Formula& body = inner->a;
  if (!body || body->kind != (pos ? FKind::And : FKind::Or)) return false;
  auto matchP = [&](const Formula& p) {
    return p->kind == FKind::LitP && p->positive == pos && !p->t1.isVar && p->t1.c == lam &&
           p->t2.isVar && p->t2.var == 1 && p->t3.isVar && p->t3.var == 0;
  };
  auto match = [&](const Formula& l, const Formula& p) {
    Term b;
    return isLess(l, 1, pos, &b) && matchP(p) && (*outB = b, true);
  };
  if (match(body->a, body->b) || match(body->b, body->a)) {
    *outLam = lam;
    return true;
  }
  return false;
}

}  // namespace

Term rank(const Formula& f) {
  using namespace arith;
  if (isLiteral(f)) return maxOf(kAll(f));
  switch (f->kind) {
    case FKind::Or:
    case FKind::And:
      return add(maxTerm(rank(f->a), rank(f->b)), one());
    case FKind::ExB:
    case FKind::AllB: {
      Term b, lam;
      if (shapePIn(f, &b)) return bigI();
      if (shapePReg(f, &lam, &b)) return maxTerm(add(lam, one()), b);
      Term boundRank = omegaMul(f->bound);  // rk_L of an ordinal bound is the bound
      return maxTerm(boundRank, add(rank(instIndiv(f->a, zero())), one()));
    }
    case FKind::Ex2:
    case FKind::All2:
      return maxTerm(f->kappa, add(rank(instPred(f->a, "", f->kappa)), one()));
    default:
      fail(Err::Internal, "rank: unreachable");
  }
}

bool rankExemptShape(const Formula& f) {
  Term lam, b;
  return shapePReg(f, &lam, &b);
}

bool mentionsSpecialPredicate(const Formula& f) {
  switch (f->kind) {
    case FKind::LitP:
    case FKind::LitPI:
    case FKind::LitReg:
    case FKind::LitR:
    case FKind::LitX:
    case FKind::Ex2:
    case FKind::All2:
      return true;
    default:
      break;
  }
  if (f->a && mentionsSpecialPredicate(f->a)) return true;
  if (f->b && mentionsSpecialPredicate(f->b)) return true;
  return false;
}

namespace {

// Delta_0 of the pure in-language: in-literals, connectives, and individual
// quantifiers bounded by a set in L_I.
bool isDelta0Plain(const Formula& f) {
  if (isLiteral(f)) return f->kind == FKind::LitIn;
  switch (f->kind) {
    case FKind::Or:
    case FKind::And:
      return isDelta0Plain(f->a) && isDelta0Plain(f->b);
    case FKind::ExB:
    case FKind::AllB:
      return cmp(f->bound, bigI()) == Ord::LT && isDelta0Plain(f->a);
    default:
      return false;
  }
}

// Alternating unbounded-quantifier prefix over a Delta_0 matrix.
std::optional<std::pair<int, bool>> prenexShape(const Formula& f) {
  const Formula* cur = &f;
  int blocks = 0;
  bool leadingEx = false;
  std::optional<bool> currentEx;
  while (((*cur)->kind == FKind::ExB || (*cur)->kind == FKind::AllB) && (*cur)->bound == bigI()) {
    bool ex = (*cur)->kind == FKind::ExB;
    if (!currentEx || *currentEx != ex) {
      ++blocks;
      if (blocks == 1) leadingEx = ex;
      currentEx = ex;
    }
    cur = &(*cur)->a;
  }
  if (!isDelta0Plain(*cur)) return std::nullopt;
  return std::make_pair(blocks, leadingEx);
}

}  // namespace

bool isSigmaM(const Formula& f, int m) {
  auto shape = prenexShape(f);
  if (!shape) return false;
  auto [blocks, leadingEx] = *shape;
  if (blocks < m) return true;
  return blocks == m && (m == 0 || leadingEx);
}

bool isPiM(const Formula& f, int m) {
  auto shape = prenexShape(f);
  if (!shape) return false;
  auto [blocks, leadingEx] = *shape;
  if (blocks < m) return true;
  return blocks == m && (m == 0 || !leadingEx);
}

namespace {

bool hasUnboundedQuant(const Formula& f) {
  if (isQuant(f->kind) && cmp(f->bound, bigI()) != Ord::LT) return true;
  if (f->a && hasUnboundedQuant(f->a)) return true;
  if (f->b && hasUnboundedQuant(f->b)) return true;
  return false;
}

bool delta0Lambda(const Formula& f, Term lambda) {
  if (hasUnboundedQuant(f)) return false;
  for (Term t : kE(f))
    if (cmp(t, lambda) != Ord::LT) return false;
  for (Term t : kR(f))
    if (cmp(t, lambda) == Ord::GT) return false;
  return true;
}

bool sigmaSigma(const Formula& f, Term lambda, int n) {
  if (isSigmaM(f, n + 1)) return true;
  if (isLiteral(f)) {
    if (f->kind == FKind::LitR) return cmp(f->kappa, lambda) == Ord::LT;
    return true;
  }
  switch (f->kind) {
    case FKind::Or:
    case FKind::And:
      return sigmaSigma(f->a, lambda, n) && sigmaSigma(f->b, lambda, n);
    case FKind::AllB:
      return cmp(f->bound, lambda) == Ord::LT && sigmaSigma(instIndiv(f->a, zero()), lambda, n);
    case FKind::ExB:
      return cmp(f->bound, lambda) != Ord::GT && sigmaSigma(instIndiv(f->a, zero()), lambda, n);
    case FKind::Ex2:
    case FKind::All2:
      return cmp(f->kappa, lambda) == Ord::LT &&
             sigmaSigma(instPred(f->a, "", f->kappa), lambda, n);
    default:
      return false;
  }
}

// matrix of Pi^1_0(lambda): lambda-bounded individual quantifiers over a
// Delta_0(lambda) core, no predicate quantifiers bound at lambda itself
bool pi10Matrix(const Formula& f, Term lambda) {
  if (isQuant(f->kind) && f->bound == lambda) return pi10Matrix(f->a, lambda);
  if (isQuant2(f->kind) && f->kappa == lambda) return false;
  if (f->kind == FKind::Or || f->kind == FKind::And)
    return pi10Matrix(f->a, lambda) && pi10Matrix(f->b, lambda);
  return delta0Lambda(f, lambda);
}

std::optional<int> pi1LevelOf(const Formula& f, Term lambda) {
  Formula cur = f;
  int blocks = 0;
  bool leadingEx = false;
  std::optional<bool> currentEx;
  while (isQuant2(cur->kind) && cur->kappa == lambda) {
    bool ex = cur->kind == FKind::Ex2;
    if (!currentEx || *currentEx != ex) {
      ++blocks;
      if (blocks == 1) leadingEx = ex;
      currentEx = ex;
    }
    cur = instPred(cur->a, "", lambda);  // close the bound predicate variable
  }
  if (!pi10Matrix(cur, lambda)) return std::nullopt;
  if (blocks == 0) return 0;
  return leadingEx ? blocks + 1 : blocks;
}

}  // namespace

ClassifyResult classify(const Formula& f, Term lambda, int n) {
  ClassifyResult r;
  r.isDelta0Lambda = delta0Lambda(f, lambda);
  r.isSigmaSigma = sigmaSigma(f, lambda, n);
  r.pi1Level = pi1LevelOf(f, lambda);
  r.pi20 = r.pi1Level.has_value();
  return r;
}

Formula relativize(const Formula& f, Term kappa, Term lambda) {
  if (cmp(kappa, lambda) != Ord::LT || cmp(omega1(), kappa) != Ord::LT)
    fail(Err::NotRelativizable, "need w1 < kappa < lambda");
  if (hasUnboundedQuant(f)) fail(Err::NotRelativizable, "formula has unbounded quantifiers");
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    FormulaNode nn = *g;
    if (g->kind == FKind::LitR && g->kappa == lambda) nn.kappa = kappa;
    if (isQuant(g->kind) && g->bound == lambda) nn.bound = kappa;
    if (isQuant2(g->kind) && g->kappa == lambda) nn.kappa = kappa;
    if (nn.a) nn.a = go(nn.a);
    if (nn.b) nn.b = go(nn.b);
    return node(std::move(nn));
  };
  return go(f);
}

AssignShape assignShape(const Formula& f, int n) {
  if (isLiteral(f)) {
    bool truth;
    switch (f->kind) {
      case FKind::LitIn: {
        if (f->t1.isVar || f->t2.isVar) fail(Err::UndecidableLiteral, "open in-literal");
        truth = cmp(f->t1.c, f->t2.c) == Ord::LT;  // membership between ordinals is <
        break;
      }
      case FKind::LitReg: {
        if (f->t1.isVar) fail(Err::UndecidableLiteral, "open Reg-literal");
        truth = regularDesignated(f->t1.c);
        break;
      }
      default:
        fail(Err::UndecidableLiteral, "literal truth needs set semantics");
    }
    if (!f->positive) truth = !truth;
    return {truth ? Direction::Conj : Direction::Disj,
            {IndexDescriptor::Tag::Finite, 0, Term()}};
  }
  switch (f->kind) {
    case FKind::Or:
      return {Direction::Disj, {IndexDescriptor::Tag::Finite, 2, Term()}};
    case FKind::And:
      return {Direction::Conj, {IndexDescriptor::Tag::Finite, 2, Term()}};
    case FKind::Ex2:
      return {Direction::Disj, {IndexDescriptor::Tag::SymbolicPowerset, 0, Term()}};
    case FKind::All2:
      return {Direction::Conj, {IndexDescriptor::Tag::SymbolicPowerset, 0, Term()}};
    case FKind::ExB:
      if (!mentionsSpecialPredicate(f) && isSigmaM(f, n))
        return {Direction::Disj, {IndexDescriptor::Tag::SymbolicMu, 0, Term()}};
      return {Direction::Disj, {IndexDescriptor::Tag::ElementsBelow, 0, f->bound}};
    case FKind::AllB:
      if (!mentionsSpecialPredicate(f) && isPiM(f, n))
        return {Direction::Conj, {IndexDescriptor::Tag::SymbolicMu, 0, Term()}};
      return {Direction::Conj, {IndexDescriptor::Tag::ElementsBelow, 0, f->bound}};
    default:
      fail(Err::Internal, "assignShape: unreachable");
  }
}

}  // namespace ordkit
