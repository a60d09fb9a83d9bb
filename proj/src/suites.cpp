#include "ordkit/suites.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "ordkit/arith.hpp"
#include "ordkit/bounds.hpp"
#include "ordkit/gen.hpp"
#include "ordkit/hull.hpp"
#include "ordkit/syntax.hpp"

namespace ordkit {

using namespace arith;

namespace {

using Clock = std::chrono::steady_clock;

struct Recorder {
  CriterionResult r;
  Clock::time_point start = Clock::now();

  explicit Recorder(int id, std::string name, double budget) {
    r.id = id;
    r.name = std::move(name);
    r.budgetSeconds = budget;
  }

  void check(bool ok, const std::string& what) {
    ++r.checked;
    if (!ok) {
      ++r.violations;
      if (r.failures.size() < 8) r.failures.push_back(what);
    }
  }

  CriterionResult finish() {
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    r.passed = r.violations == 0;
    return r;
  }
};

std::string tstr(Term t) { return printTerm(t); }

CriterionResult orderAxioms(const SuiteOpts& o) {
  Recorder rec(1, "order-axioms", 120);
  EnumOpts eo;
  eo.cap = o.enumCap;
  int size = o.quick ? 5 : o.orderSize;
  std::vector<Term> pool = enumerateBelow(bigI(), size, eo);

  // irreflexivity
  for (Term t : pool) rec.check(cmp(t, t) == Ord::EQ, "cmp(t,t)!=EQ for " + tstr(t));

  // sorted-output property
  for (size_t i = 0; i + 1 < pool.size(); ++i)
    rec.check(cmp(pool[i], pool[i + 1]) == Ord::LT,
              "pool not strictly sorted at " + tstr(pool[i]));

  // pairwise trichotomy + antisymmetry; pinning cmp to the sorted index order
  // over every pair also establishes transitivity on the whole pool
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) {
      bool ok = cmp(pool[i], pool[j]) == Ord::LT && cmp(pool[j], pool[i]) == Ord::GT;
      rec.check(ok, "trichotomy fails: " + tstr(pool[i]) + " vs " + tstr(pool[j]));
    }

  // transitivity: exhaustive on the small subpool, randomized on the full pool
  std::vector<Term> small = enumerateBelow(bigI(), 4, eo);
  for (Term a : small)
    for (Term b : small)
      for (Term c : small)
        if (cmp(a, b) == Ord::LT && cmp(b, c) == Ord::LT)
          rec.check(cmp(a, c) == Ord::LT,
                    "transitivity fails: " + tstr(a) + " < " + tstr(b) + " < " + tstr(c));
  std::mt19937_64 rng(0x5eed);
  long triples = o.quick ? 100000 : o.randomTriples;
  for (long k = 0; k < triples; ++k) {
    Term a = pool[rng() % pool.size()], b = pool[rng() % pool.size()],
         c = pool[rng() % pool.size()];
    if (cmp(a, b) == Ord::LT && cmp(b, c) == Ord::LT)
      rec.check(cmp(a, c) == Ord::LT,
                "transitivity fails: " + tstr(a) + " < " + tstr(b) + " < " + tstr(c));
    else
      ++rec.r.checked;
  }

  // well-foundedness probe: random strictly descending walks stay within the
  // pool size
  for (int w = 0; w < 64; ++w) {
    Term cur = pool[rng() % pool.size()];
    long steps = 0;
    for (size_t attempt = 0; attempt < 4 * pool.size(); ++attempt) {
      size_t i = rng() % pool.size();
      if (cmp(pool[i], cur) == Ord::LT) {
        cur = pool[i];
        ++steps;
      }
      if (cur == zero() || steps > static_cast<long>(pool.size())) break;
    }
    rec.check(steps <= static_cast<long>(pool.size()),
              "descending chain longer than the pool");
  }
  return rec.finish();
}

CriterionResult collapseIdentities(const SuiteOpts&) {
  Recorder rec(2, "collapse-identities", 5);
  for (int n = 1; n <= 4; ++n)
    for (int N = 1; N <= 3; ++N) {
      AbgamTable tb = abgam(n, N);
      std::string ctx = " (n=" + std::to_string(n) + ",N=" + std::to_string(N) + ")";
      rec.check(cmp(add(bigK(), omegaMul(tb.a)), tb.a) == Ord::EQ, "K+w.a_n != a_n" + ctx);
      for (int k = 1; k <= N; ++k)
        rec.check(cmp(add(tb.gamma[k], tb.a), tb.gamma[k - 1]) == Ord::EQ,
                  "gamma_k+a != gamma_{k-1}" + ctx);
      for (int k = 0; k < N; ++k)
        for (size_t i = 0; i < tb.alphaVec[k].lh(); ++i)
          rec.check(tb.alphaVec[k].component(i) == tb.gamma[k + static_cast<int>(i)],
                    "alphaVec component mismatch" + ctx);
      for (int k = 1; k <= N; ++k)
        rec.check(cmp(tb.gamma[k], tb.gamma[k - 1]) == Ord::LT, "gamma not decreasing" + ctx);
    }
  return rec.finish();
}

CriterionResult ordinalInequalities(const SuiteOpts&) {
  Recorder rec(3, "ordinal-inequalities", 5);
  Term ip1 = add(bigI(), one());
  for (int m = 0; m <= 4; ++m)
    for (int p = 0; p <= 4; ++p) {
      Term lhs = omegaTower(m + 2, ip1);
      Term rhs = omegaTower(m + 1, add(mulNat(bigI(), 2), nat(static_cast<unsigned>(p))));
      rec.check(cmp(lhs, rhs) == Ord::GT,
                "w_{m+2}(I+1) > w_{m+1}(I.2+p) fails at m=" + std::to_string(m) +
                    ",p=" + std::to_string(p));
    }
  Term i2w = add(mulNat(bigI(), 2), wexp(one()));
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m + 2 < n; ++m) {
      Term lhs = mkPsiReg(omega1(), n, omegaTower(n - 1, ip1));
      Term rhs = mkPsiReg(omega1(), n, omegaTower(m + 1, i2w));
      rec.check(cmp(lhs, rhs) == Ord::GT,
                "Psi_{w1,n} inequality fails at n=" + std::to_string(n) +
                    ",m=" + std::to_string(m));
    }
  for (int N = 1; N <= 3; ++N)
    for (int n0 = 1; n0 <= 4; ++n0)
      for (int n = n0 + 1; n <= 4; ++n) {
        AbgamTable t0 = abgam(n0, N), t1 = abgam(n, N);
        Term p0 = mkPsiK(n0, t0.alphaVec[0].items(), {}, t0.gamma[0]);
        Term p1 = mkPsiK(n, t1.alphaVec[0].items(), {}, t1.gamma[0]);
        rec.check(cmp(p0, p1) != Ord::GT, "cross-n PsiK monotonicity fails at n0=" +
                                              std::to_string(n0) + ",n=" + std::to_string(n));
      }
  return rec.finish();
}

CriterionResult rankSuite(const SuiteOpts& o) {
  Recorder rec(4, "formula-rank", 60);
  GenOpts go;
  go.count = o.quick ? 1500 : o.rankCorpus;
  std::vector<Formula> corpus = generateFormulas(go);
  Term rankCeil = add(bigI(), nat(40));  // I + finite bound for depth <= 4
  std::vector<Term> lambdas = {omega1(), bigK(), bigI()};
  Term kapRel = mkPsiK(1, {add(bigI(), one()), add(bigI(), one())}, {}, add(bigI(), one()));

  for (const Formula& A : corpus) {
    Term rk = rank(A);
    rec.check(cmp(rk, rankCeil) == Ord::LT, "rk(A) >= I+w for " + printFormula(A));

    Term kmax = zero();
    for (Term t : kAll(A)) kmax = maxTerm(kmax, t);
    rec.check(cmp(kmax, rk) != Ord::GT, "max rk_L(k(A)) > rk(A) for " + printFormula(A));

    // component rank descent (Prop 4.8(5)), exempting the P-lambda shape
    if (!rankExemptShape(A)) {
      try {
        AssignShape sh = assignShape(A, 1);
        std::vector<Formula> comps;
        if (sh.index.tag == IndexDescriptor::Tag::Finite && sh.index.finiteCount == 2)
          comps = {A->a, A->b};
        else if (sh.index.tag == IndexDescriptor::Tag::ElementsBelow) {
          for (Term d : {zero(), one()})
            if (cmp(d, sh.index.bound) == Ord::LT) comps.push_back(instIndiv(A->a, d));
        }
        for (const Formula& c : comps)
          rec.check(cmp(rank(c), rk) == Ord::LT, "component rank not below rk(A) for " +
                                                     printFormula(A));
      } catch (const Error& e) {
        if (e.kind() != Err::UndecidableLiteral) throw;
        ++rec.r.checked;
      }
    }

    for (Term lam : lambdas) {
      if (cmp(rk, lam) == Ord::LT) {
        ClassifyResult cls = classify(A, lam, 1);
        rec.check(cls.isDelta0Lambda, "rk(A)<lambda but not Delta_0(lambda) for " +
                                          printFormula(A) + " at " + tstr(lam));
        rec.check(cls.isSigmaSigma, "rk(A)<lambda but not Sigma^Sigma(lambda) for " +
                                        printFormula(A) + " at " + tstr(lam));
      } else {
        ++rec.r.checked;
      }
    }

    // component stability of Sigma^{Sigma_{n+1}}(lambda)
    ClassifyResult ck = classify(A, bigK(), 1);
    if (ck.isSigmaSigma) {
      std::vector<Formula> comps;
      if (A->kind == FKind::Or || A->kind == FKind::And) comps = {A->a, A->b};
      if (A->kind == FKind::ExB || A->kind == FKind::AllB) comps = {instIndiv(A->a, zero())};
      if (A->kind == FKind::Ex2 || A->kind == FKind::All2)
        comps = {instPred(A->a, "", A->kappa)};
      for (const Formula& c : comps)
        rec.check(classify(c, bigK(), 1).isSigmaSigma,
                  "Sigma^Sigma component stability fails for " + printFormula(A));
    }

    // relativization preserves the Pi^1 level under the Def 4.3(9) side conditions
    ClassifyResult cK = classify(A, bigK(), 1);
    if (cK.pi1Level) {
      bool condR = true, condE = true;
      for (Term t : kR(A))
        if (cmp(t, bigK()) == Ord::LT && cmp(t, kapRel) == Ord::GT) condR = false;
      for (Term t : kE(A))
        if (cmp(t, kapRel) != Ord::LT) condE = false;
      if (condR && condE) {
        Formula B = relativize(A, kapRel, bigK());
        auto lv = classify(B, kapRel, 1).pi1Level;
        rec.check(lv && *lv == *cK.pi1Level,
                  "relativization changes Pi^1 level for " + printFormula(A));
      } else {
        ++rec.r.checked;
      }
    }
  }
  return rec.finish();
}

CriterionResult hullSuite(const SuiteOpts& o) {
  Recorder rec(5, "hull-collapse", 60);
  EnumOpts eo;
  eo.cap = o.enumCap;
  std::vector<Term> pool = enumerateBelow(bigI(), o.quick ? 4 : o.hullSize, eo);
  std::vector<Term> alphas = enumerateBelow(bigI(), 3, eo);

  // monotonicity in alpha over the alpha pool
  for (size_t i = 0; i < alphas.size(); ++i)
    for (size_t j = 0; j < alphas.size(); ++j) {
      if (cmp(alphas[i], alphas[j]) == Ord::GT) continue;
      HullQuery q1{alphas[i], 1, Term(), {}, std::nullopt};
      HullQuery q2{alphas[j], 1, Term(), {}, std::nullopt};
      for (Term t : pool)
        rec.check(!inHull(t, q1) || inHull(t, q2),
                  "hull not monotone in alpha for " + tstr(t) + " at " + tstr(alphas[i]) +
                      " <= " + tstr(alphas[j]));
    }

  // monotonicity in Theta along a chain
  {
    ThetaSet t0, t1({omega1()}), t2({omega1(), bigK()});
    Term alpha = one();
    HullQuery q0{alpha, 1, Term(), t0, std::nullopt};
    HullQuery q1{alpha, 1, Term(), t1, std::nullopt};
    HullQuery q2{alpha, 1, Term(), t2, std::nullopt};
    for (Term t : pool) {
      rec.check(!inHull(t, q0) || inHull(t, q1), "hull not monotone in Theta for " + tstr(t));
      rec.check(!inHull(t, q1) || inHull(t, q2), "hull not monotone in Theta for " + tstr(t));
    }
  }

  // collapse bounds and argument monotonicity
  std::vector<Term> psiRegs;
  for (Term t : pool) {
    if (t.kind() == Kind::PsiReg) {
      rec.check(cmp(t, t.kids()[0]) == Ord::LT, "Psi not below its kappa: " + tstr(t));
      psiRegs.push_back(t);
    }
    if (t.kind() == Kind::PsiK) {
      rec.check(cmp(t, bigK()) == Ord::LT && cmp(omega1(), t) == Ord::LT,
                "PsiK not strictly between w1 and K: " + tstr(t));
    }
    if (t.kind() == Kind::PsiI)
      rec.check(cmp(t, bigI()) == Ord::LT, "PsiI not below I: " + tstr(t));
  }
  for (Term s : psiRegs)
    for (Term t : psiRegs)
      if (s.kids()[0] == t.kids()[0] && s.sub() == t.sub() &&
          cmp(s.kids()[1], t.kids()[1]) == Ord::LT)
        rec.check(cmp(s, t) != Ord::GT, "Psi argument monotonicity fails: " + tstr(s));

  // subterm coherence: generative acceptance implies components in hull
  {
    HullQuery q{wexp(one()), 1, one(), ThetaSet({omega1()}), std::nullopt};
    for (Term t : pool) {
      if (!inHull(t, q)) {
        ++rec.r.checked;
        continue;
      }
      bool base = q.theta.contains(t) || (q.threshold.valid() && cmp(t, q.threshold) == Ord::LT) ||
                  !isPrincipal(t) || t.size() == 1;
      if (base || t.kind() == Kind::Sum) {
        ++rec.r.checked;
        continue;
      }
      bool kidsIn = true;
      for (Term k : t.kids()) kidsIn = kidsIn && inHull(k, q);
      rec.check(kidsIn, "accepted term with component outside hull: " + tstr(t));
    }
  }

  // kset closure: s in kset(t) => kset(s) subset kset(t)
  for (Term t : pool) {
    auto ks = kset(t);
    std::set<const TermNode*> seen;
    for (Term s : ks) seen.insert(s.node());
    bool closed = true;
    for (Term s : ks)
      for (Term u : kset(s)) closed = closed && seen.count(u.node()) > 0;
    rec.check(closed, "kset not subterm-closed for " + tstr(t));
  }
  return rec.finish();
}

CriterionResult pipelineSuite(const SuiteOpts&) {
  Recorder rec(6, "bound-pipelines", 5);
  for (int m = 0; m <= 2; ++m)
    for (int p = 0; p <= 2; ++p)
      for (int N = 1; N <= 3; ++N) {
        std::string ctx = " (m=" + std::to_string(m) + ",p=" + std::to_string(p) +
                          ",N=" + std::to_string(N) + ")";
        auto tr = theorem1Trace(m, p, N);
        rec.check(static_cast<int>(tr.size()) == 4 + N, "trace length != 4+N" + ctx);
        const BoundState& fin = tr.back();
        int n = std::max(m, 1) + 3;
        AbgamTable tb = abgam(n, N);
        rec.check(fin.theory == 0, "final theory != 0" + ctx);
        rec.check(cmp(fin.cutRank, bigK()) == Ord::EQ, "final cut rank != K" + ctx);
        rec.check(cmp(fin.hullStage, tb.gamma[0]) == Ord::EQ,
                  "final hull stage != gamma_{0,n}" + ctx);
        rec.check(cmp(fin.height, tb.a) == Ord::EQ, "final height != a_n" + ctx);
        for (const BoundState& s : tr)
          rec.check(s.allChecksHold(), "side condition fails in thm1 at '" + s.note + "'" + ctx);

        auto tr2 = theorem2Trace(m, p, N);
        const BoundState& f2 = tr2.back();
        rec.check(f2.height.kind() == Kind::PsiReg && f2.height.kids()[0] == omega1(),
                  "thm2 does not end at a Psi_{w1,n} height" + ctx);
        rec.check(f2.theory == -2, "thm2 final theory != -2" + ctx);
        for (const BoundState& s : tr2)
          rec.check(s.allChecksHold(), "side condition fails in thm2 at '" + s.note + "'" + ctx);
      }
  // eq. (bigveebnd) side condition on sample instances
  rec.check(sideConditionVee(zero(), omega1(), one()), "bigveebnd sample 1");
  rec.check(sideConditionVee(bigK(), omega1(), one()), "bigveebnd vacuous case");
  rec.check(!sideConditionVee(one(), omega1(), one()), "bigveebnd failing case");
  return rec.finish();
}

CriterionResult syntaxSuite(const SuiteOpts& o) {
  Recorder rec(7, "syntax-roundtrip", 60);
  EnumOpts eo;
  eo.cap = o.enumCap;
  std::vector<Term> pool = enumerateAll(o.quick ? 5 : 6, eo);  // includes terms above I
  for (Term t : pool) {
    std::string s = printTerm(t);
    try {
      Term u = parseTerm(s);
      rec.check(u == t, "parse(print) != id for " + s);
    } catch (const Error& e) {
      rec.check(false, "parse(print) throws for " + s + ": " + e.what());
    }
    Term v = termFromJson(termToJson(t));
    rec.check(v == t, "JSON reimport != id for " + s);
  }

  // formula round-trip over a corpus slice
  GenOpts go;
  go.count = o.quick ? 200 : 2000;
  for (const Formula& f : generateFormulas(go)) {
    std::string s = printFormula(f);
    try {
      Formula g = parseFormula(s);
      rec.check(formulaEq(f, g), "formula parse(print) != id for " + s);
    } catch (const Error& e) {
      rec.check(false, "formula parse(print) throws for " + s + ": " + e.what());
    }
    Formula h = formulaFromJson(formulaToJson(f));
    rec.check(formulaEq(f, h), "formula JSON reimport != id for " + s);
  }

  // rendering determinism of the trace and abgam surfaces
  auto render = [] {
    std::ostringstream os;
    os << boundsTraceToJson(theorem1Trace(1, 0, 2)).dump(2);
    os << boundsTraceToJson(theorem2Trace(0, 1, 2)).dump(2);
    AbgamTable tb = abgam(2, 2);
    os << printTerm(tb.a) << printTerm(tb.b) << printTerm(tb.gamma[0]);
    return os.str();
  };
  rec.check(render() == render(), "rendering not deterministic across two runs");
  return rec.finish();
}

}  // namespace

std::vector<CriterionResult> runAllSuites(const SuiteOpts& opts) {
  std::vector<CriterionResult> out;
  out.push_back(orderAxioms(opts));
  out.push_back(collapseIdentities(opts));
  out.push_back(ordinalInequalities(opts));
  out.push_back(rankSuite(opts));
  out.push_back(hullSuite(opts));
  out.push_back(pipelineSuite(opts));
  out.push_back(syntaxSuite(opts));
  return out;
}

std::string formatResult(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " criterion-" << r.id << " " << r.name << " (checked "
     << r.checked << ", violations " << r.violations << ", " << std::fixed;
  os.precision(1);
  os << r.seconds << "s <= " << r.budgetSeconds << "s)";
  for (const std::string& f : r.failures) os << "\n  first failures: " << f;
  return os.str();
}

}  // namespace ordkit
