#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordkit/arith.hpp"
#include "ordkit/bounds.hpp"
#include "ordkit/hull.hpp"
#include "ordkit/suites.hpp"
#include "ordkit/syntax.hpp"

using namespace ordkit;
using nlohmann::json;

namespace {

int exitCodeFor(Err kind) {
  switch (kind) {
    case Err::SizeLimitExceeded:
    case Err::CeilingExceeded:
      return 3;
    default:
      return 1;
  }
}

long envLong(const char* name, long dflt) {
  const char* v = std::getenv(name);
  if (!v) return dflt;
  try {
    return std::stol(v);
  } catch (...) {
    return dflt;
  }
}

struct Ctx {
  ValidateOpts vopts;
  EnumOpts eopts;
  bool jsonOut = false;
};

void emit(const Ctx& ctx, const json& j, const std::string& text) {
  if (ctx.jsonOut)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

json abgamJson(const AbgamTable& tb) {
  json g = json::object(), av = json::object();
  for (auto& [k, t] : tb.gamma) g[std::to_string(k)] = printTerm(t);
  for (auto& [k, s] : tb.alphaVec) {
    json items = json::array();
    for (Term t : s.items()) items.push_back(printTerm(t));
    av[std::to_string(k)] = items;
  }
  return json{{"n", tb.n},       {"N", tb.N},       {"b", printTerm(tb.b)},
              {"a", printTerm(tb.a)}, {"gamma", g}, {"alphaVec", av}};
}

std::string traceText(const std::vector<BoundState>& tr) {
  std::string out;
  for (size_t i = 0; i < tr.size(); ++i) {
    const BoundState& s = tr[i];
    out += "[" + std::to_string(i) + "] k=" + std::to_string(s.theory) +
           " height=" + printTerm(s.height) + " cutRank=" + printTerm(s.cutRank) +
           " stage=" + printTerm(s.hullStage) + "\n    " + s.note + "\n";
    for (auto& c : s.checks)
      out += "    [" + std::string(c.second ? "ok" : "FAIL") + "] " + c.first + "\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordkit: ordinal notations below eps_{I+1} with collapsing functions"};
  app.require_subcommand(1);
  app.fallthrough();

  Ctx ctx;
  ctx.vopts.maxTower = static_cast<int>(envLong("ORDKIT_MAX_TOWER", 8));
  ctx.eopts.cap = envLong("ORDKIT_ENUM_CAP", 200000);
  arith::setMaxTower(ctx.vopts.maxTower);

  int bigN = 2;
  app.add_option("--N", bigN, "system level count N (PsiK sequence length)")
      ->default_val(2);
  app.add_flag("--json", ctx.jsonOut, "machine-readable output");

  std::string e1, e2, fml, lambdaS, alphaS, betaS, thetaS, kappaS, which;
  int n = 1, m = 0, p = 0, sz = 4;
  bool quick = false;

  auto* cCmp = app.add_subcommand("cmp", "compare two terms");
  cCmp->add_option("lhs", e1)->required();
  cCmp->add_option("rhs", e2)->required();

  auto* cNf = app.add_subcommand("nf", "check a term for normal form");
  cNf->add_option("term", e1)->required();

  auto* cRank = app.add_subcommand("rank", "rank of a formula");
  cRank->add_option("formula", fml)->required();

  auto* cClassify = app.add_subcommand("classify", "formula class flags");
  cClassify->add_option("formula", fml)->required();
  cClassify->add_option("--lambda", lambdaS)->required();
  cClassify->add_option("--n", n)->default_val(1);

  auto* cHull = app.add_subcommand("hull", "Skolem-hull membership");
  cHull->add_option("term", e1)->required();
  cHull->add_option("--alpha", alphaS)->required();
  cHull->add_option("--beta", betaS);
  cHull->add_option("--theta", thetaS, "comma-separated terms");
  cHull->add_option("--kappa", kappaS);
  cHull->add_option("--n", n)->default_val(1);

  auto* cAbgam = app.add_subcommand("abgam", "the b_n/a_n/gamma/alpha-bar package");
  cAbgam->add_option("--n", n)->required();

  auto* cEnum = app.add_subcommand("enum", "enumerate normal forms below a bound");
  cEnum->add_option("--below", e1)->required();
  cEnum->add_option("--size", sz)->required();

  auto* cTrace = app.add_subcommand("trace", "theorem bookkeeping chains");
  cTrace->add_option("which", which, "thm1 or thm2")->required();
  cTrace->add_option("--m", m)->default_val(0);
  cTrace->add_option("--p", p)->default_val(0);

  auto* cCheck = app.add_subcommand("check", "run the full property suite");
  cCheck->add_flag("--quick", quick, "smaller pools");

  CLI11_PARSE(app, argc, argv);
  ctx.vopts.N = bigN;
  ctx.eopts.N = bigN;

  try {
    if (cCmp->parsed()) {
      Term a = parseTerm(e1, ctx.vopts), b = parseTerm(e2, ctx.vopts);
      Ord o = cmp(a, b);
      emit(ctx, json{{"result", ordName(o)}}, ordName(o));
      return 0;
    }
    if (cNf->parsed()) {
      Term t = parseTerm(e1, ctx.vopts);  // parse already validates
      emit(ctx, json{{"ok", true}, {"term", printTerm(t)}}, "ok");
      return 0;
    }
    if (cRank->parsed()) {
      Formula f = parseFormula(fml, ctx.vopts);
      Term r = rank(f);
      emit(ctx, json{{"rank", printTerm(r)}}, printTerm(r));
      return 0;
    }
    if (cClassify->parsed()) {
      Formula f = parseFormula(fml, ctx.vopts);
      Term lam = parseTerm(lambdaS, ctx.vopts);
      ClassifyResult r = classify(f, lam, n);
      json j{{"isDelta0Lambda", r.isDelta0Lambda},
             {"isSigmaSigma", r.isSigmaSigma},
             {"pi20", r.pi20}};
      std::string txt = std::string("Delta0(lambda)=") + (r.isDelta0Lambda ? "yes" : "no") +
                        " SigmaSigma=" + (r.isSigmaSigma ? "yes" : "no");
      if (r.pi1Level) {
        j["pi1Level"] = *r.pi1Level;
        txt += " pi1Level=" + std::to_string(*r.pi1Level);
      } else {
        j["pi1Level"] = nullptr;
        txt += " pi1Level=none";
      }
      emit(ctx, j, txt);
      return 0;
    }
    if (cHull->parsed()) {
      HullQuery q;
      q.alpha = parseTerm(alphaS, ctx.vopts);
      q.n = n;
      if (!betaS.empty()) q.threshold = parseTerm(betaS, ctx.vopts);
      if (!kappaS.empty()) q.kappaCtx = parseTerm(kappaS, ctx.vopts);
      std::vector<Term> th;
      if (!thetaS.empty()) {
        std::stringstream ss(thetaS);
        std::string item;
        while (std::getline(ss, item, ',')) th.push_back(parseTerm(item, ctx.vopts));
      }
      q.theta = ThetaSet(th);
      Term t = parseTerm(e1, ctx.vopts);
      bool in = inHull(t, q);
      emit(ctx, json{{"inHull", in}}, in ? "true" : "false");
      return 0;
    }
    if (cAbgam->parsed()) {
      AbgamTable tb = abgam(n, bigN);
      std::string txt = "b_n = " + printTerm(tb.b) + "\na_n = " + printTerm(tb.a);
      for (int k = 0; k <= tb.N; ++k)
        txt += "\ngamma_{" + std::to_string(k) + "} = " + printTerm(tb.gamma[k]);
      emit(ctx, abgamJson(tb), txt);
      return 0;
    }
    if (cEnum->parsed()) {
      Term bound = parseTerm(e1, ctx.vopts);
      EnumOpts eo = ctx.eopts;
      eo.maxTower = ctx.vopts.maxTower;
      std::vector<Term> pool = enumerateBelow(bound, sz, eo);
      json arr = json::array();
      std::string txt;
      for (Term t : pool) {
        arr.push_back(printTerm(t));
        txt += printTerm(t) + "\n";
      }
      txt += "count: " + std::to_string(pool.size());
      emit(ctx, json{{"count", pool.size()}, {"terms", arr}}, txt);
      return 0;
    }
    if (cTrace->parsed()) {
      if (which != "thm1" && which != "thm2") {
        std::cerr << "trace: expected thm1 or thm2\n";
        return 1;
      }
      auto tr = which == "thm1" ? theorem1Trace(m, p, bigN) : theorem2Trace(m, p, bigN);
      bool allOk = true;
      for (auto& s : tr) allOk = allOk && s.allChecksHold();
      emit(ctx, boundsTraceToJson(tr), traceText(tr));
      return allOk ? 0 : 2;
    }
    if (cCheck->parsed()) {
      SuiteOpts so;
      so.quick = quick;
      so.enumCap = ctx.eopts.cap;
      auto results = runAllSuites(so);
      bool allOk = true;
      json arr = json::array();
      for (auto& r : results) {
        allOk = allOk && r.passed;
        if (ctx.jsonOut)
          arr.push_back({{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"checked", r.checked},
                         {"violations", r.violations},
                         {"seconds", r.seconds}});
        else
          std::cout << formatResult(r) << "\n";
      }
      if (ctx.jsonOut) std::cout << arr.dump(2) << "\n";
      return allOk ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cerr << errName(e.kind()) << ": " << e.what() << "\n";
    return exitCodeFor(e.kind());
  }
  return 0;
}
