#include "ordkit/syntax.hpp"
#include <functional>

#include <cctype>
#include <sstream>

#include "ordkit/arith.hpp"
#include "ordkit/bounds.hpp"

namespace ordkit {

namespace {

struct Tok {
  enum Type { Num, Ident, Sym, End } type;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { next(); }

  const Tok& peek() const { return tok_; }

  Tok take() {
    Tok t = tok_;
    next();
    return t;
  }

  [[noreturn]] void err(const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at " << tok_.line << ":" << tok_.col << ": " << msg;
    if (tok_.type != Tok::End) os << " (at '" << tok_.text << "')";
    fail(Err::ParseError, os.str());
  }

  void expect(const std::string& sym) {
    if (tok_.type == Tok::Sym && tok_.text == sym) {
      next();
      return;
    }
    err("expected '" + sym + "'");
  }

  bool accept(const std::string& sym) {
    if (tok_.type == Tok::Sym && tok_.text == sym) {
      next();
      return true;
    }
    return false;
  }

 private:
  void next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) advance();
    tok_.line = line_;
    tok_.col = col_;
    if (i_ >= s_.size()) {
      tok_ = {Tok::End, "", line_, col_};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        num += s_[i_];
        advance();
      }
      tok_ = {Tok::Num, num, tok_.line, tok_.col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
        id += s_[i_];
        advance();
      }
      // reg+ is a single token
      if (id == "reg" && i_ < s_.size() && s_[i_] == '+') {
        id += '+';
        advance();
      }
      tok_ = {Tok::Ident, id, tok_.line, tok_.col};
      return;
    }
    std::string sym(1, c);
    advance();
    tok_ = {Tok::Sym, sym, tok_.line, tok_.col};
  }

  void advance() {
    if (s_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  const std::string& s_;
  size_t i_ = 0;
  int line_ = 1, col_ = 1;
  Tok tok_;
};

class TermParser {
 public:
  TermParser(Lexer& lx, const ValidateOpts& opts) : lx_(lx), opts_(opts) {}

  Term expr() {
    Tok at = lx_.peek();
    std::vector<Term> parts = {atomOrMul()};
    while (lx_.accept("+")) {
      if (!startsTerm()) {
        // postfix successor: K+ abbreviates reg+(K)
        parts.back() = checked(mkRegSucc(parts.back()), at);
        continue;
      }
      parts.push_back(atomOrMul());
    }
    if (parts.size() == 1) return parts[0];
    std::vector<Term> flat;
    for (Term p : parts) {
      auto ps = summands(p);
      flat.insert(flat.end(), ps.begin(), ps.end());
    }
    return checked(mkSum(std::move(flat)), at);
  }

  unsigned number() {
    if (lx_.peek().type != Tok::Num) lx_.err("expected a number");
    return static_cast<unsigned>(std::stoul(lx_.take().text));
  }

  bool startsTerm() const {
    const Tok& t = lx_.peek();
    return t.type == Tok::Num || t.type == Tok::Ident ||
           (t.type == Tok::Sym && t.text == "(");
  }

 private:
  Term checked(Term t, const Tok& at) {
    ValidityReport rep = validate(t, opts_);
    if (!rep.ok) {
      std::ostringstream os;
      os << "parse error at " << at.line << ":" << at.col << ": " << rep.violations.front();
      fail(Err::ParseError, os.str());
    }
    return t;
  }

  Term compute(const std::function<Term()>& f, const Tok& at) {
    try {
      return f();
    } catch (const Error& e) {
      // cap overflows keep their kind so the CLI can report exit code 3
      if (e.kind() == Err::ParseError || e.kind() == Err::CeilingExceeded ||
          e.kind() == Err::SizeLimitExceeded)
        throw;
      std::ostringstream os;
      os << "parse error at " << at.line << ":" << at.col << ": " << e.what();
      fail(Err::ParseError, os.str());
    }
  }

  Term atomOrMul() {
    Tok at = lx_.peek();
    Term t = primary();
    while (lx_.accept("*")) {
      unsigned m = number();
      t = compute([&] { return arith::mulNat(t, m); }, at);
    }
    return t;
  }

  Term primary() {
    Tok t = lx_.peek();
    if (t.type == Tok::Num) {
      lx_.take();
      return arith::nat(static_cast<unsigned>(std::stoul(t.text)));
    }
    if (t.type == Tok::Sym && t.text == "(") {
      lx_.take();
      Term e = expr();
      lx_.expect(")");
      return e;
    }
    if (t.type != Tok::Ident) lx_.err("expected a term");
    lx_.take();
    const std::string& id = t.text;
    if (id == "w1") return omega1();
    if (id == "K") return bigK();
    if (id == "I") return bigI();
    if (id == "w") {
      if (lx_.accept("^")) return checked(mkWExp(primary()), t);
      if (lx_.accept("*")) {
        Term arg = primary();
        return compute([&] { return arith::omegaMul(arg); }, t);
      }
      lx_.err("'w' must be followed by '^' or '*'");
    }
    if (id == "phi") {
      lx_.expect("(");
      Term a = expr();
      lx_.expect(",");
      Term b = expr();
      lx_.expect(")");
      return checked(mkVeblen(a, b), t);
    }
    if (id == "reg+") {
      lx_.expect("(");
      Term b = expr();
      lx_.expect(")");
      return checked(mkRegSucc(b), t);
    }
    if (id == "tower") {
      lx_.expect("(");
      unsigned m = number();
      lx_.expect(",");
      Term b = expr();
      lx_.expect(")");
      return compute([&] { return arith::omegaTower(static_cast<int>(m), b); }, t);
    }
    if (id == "psi") {
      lx_.expect("(");
      Term kap = expr();
      lx_.expect(";");
      unsigned n = number();
      lx_.expect(";");
      Term arg = expr();
      lx_.expect(")");
      return checked(mkPsiReg(kap, static_cast<int>(n), arg), t);
    }
    if (id == "psiI") {
      lx_.expect("(");
      unsigned n = number();
      lx_.expect(";");
      Term arg = expr();
      lx_.expect(")");
      return checked(mkPsiI(static_cast<int>(n), arg), t);
    }
    if (id == "psiK") {
      lx_.expect("(");
      unsigned n = number();
      lx_.expect(";");
      lx_.expect("[");
      std::vector<Term> seq;
      if (!lx_.accept("]")) {
        seq.push_back(expr());
        while (lx_.accept(",")) seq.push_back(expr());
        lx_.expect("]");
      }
      lx_.expect(";");
      lx_.expect("{");
      std::vector<Term> theta;
      if (!lx_.accept("}")) {
        theta.push_back(expr());
        while (lx_.accept(",")) theta.push_back(expr());
        lx_.expect("}");
      }
      lx_.expect(";");
      Term arg = expr();
      lx_.expect(")");
      ThetaSet th(theta);
      return checked(mkPsiK(static_cast<int>(n), seq, th.elems(), arg), t);
    }
    lx_.err("unknown term head '" + id + "'");
  }

  Lexer& lx_;
  const ValidateOpts& opts_;
};

std::string printPrimary(Term t);

std::string printExpr(Term t) {
  if (t.kind() == Kind::Sum) {
    std::string s;
    for (size_t i = 0; i < t.kids().size(); ++i) {
      if (i) s += " + ";
      s += printPrimary(t.kids()[i]);
    }
    return s;
  }
  return printPrimary(t);
}

std::string printPrimary(Term t) {
  switch (t.kind()) {
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Omega1: return "w1";
    case Kind::BigK: return "K";
    case Kind::BigI: return "I";
    case Kind::Sum: return "(" + printExpr(t) + ")";
    case Kind::WExp: {
      Term e = t.kids()[0];
      if (e.kind() == Kind::Sum) return "w^(" + printExpr(e) + ")";
      return "w^" + printPrimary(e);
    }
    case Kind::Veblen:
      return "phi(" + printExpr(t.kids()[0]) + ", " + printExpr(t.kids()[1]) + ")";
    case Kind::RegSucc: return "reg+(" + printExpr(t.kids()[0]) + ")";
    case Kind::PsiReg:
      return "psi(" + printExpr(t.kids()[0]) + "; " + std::to_string(t.sub()) + "; " +
             printExpr(t.kids()[1]) + ")";
    case Kind::PsiI:
      return "psiI(" + std::to_string(t.sub()) + "; " + printExpr(t.kids()[0]) + ")";
    case Kind::PsiK: {
      std::string s = "psiK(" + std::to_string(t.sub()) + "; [";
      auto seq = psiKSeq(t);
      for (size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ", ";
        s += printExpr(seq[i]);
      }
      s += "]; {";
      auto th = psiKTheta(t);
      for (size_t i = 0; i < th.size(); ++i) {
        if (i) s += ", ";
        s += printExpr(th[i]);
      }
      s += "}; " + printExpr(psiKArg(t)) + ")";
      return s;
    }
  }
  return "?";
}

}  // namespace

Term parseTerm(const std::string& text, const ValidateOpts& opts) {
  Lexer lx(text);
  TermParser p(lx, opts);
  Term t = p.expr();
  if (lx.peek().type != Tok::End) lx.err("trailing input");
  return t;
}

std::string printTerm(Term t) { return printExpr(t); }

namespace {

class FormulaParser {
 public:
  FormulaParser(Lexer& lx, const ValidateOpts& opts) : lx_(lx), opts_(opts), tp_(lx, opts) {}

  Formula formula() { return disj(); }

 private:
  Formula disj() {
    Formula f = conj();
    while (lx_.accept("|")) f = fOr(f, conj());
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (lx_.accept("&")) f = fAnd(f, unary());
    return f;
  }

  Formula unary() {
    if (lx_.accept("~")) return fneg(unary());
    const Tok& t = lx_.peek();
    if (t.type == Tok::Sym && t.text == "(") {
      lx_.take();
      Formula f = disj();
      lx_.expect(")");
      return f;
    }
    if (t.type != Tok::Ident) lx_.err("expected a formula");
    if (t.text == "ex" || t.text == "all") return quant(t.text == "ex");
    if (t.text == "EX" || t.text == "ALL") return quant2(t.text == "EX");
    return atom();
  }

  Formula quant(bool ex) {
    lx_.take();
    Tok name = lx_.take();
    if (name.type != Tok::Ident) lx_.err("expected a variable name");
    lx_.expect("<");
    Term bound = tp_.expr();
    lx_.expect(".");
    indiv_.push_back(name.text);
    Formula body = disj();
    indiv_.pop_back();
    return ex ? exB(bound, body) : allB(bound, body);
  }

  Formula quant2(bool ex) {
    lx_.take();
    Tok name = lx_.take();
    if (name.type != Tok::Ident) lx_.err("expected a predicate variable name");
    lx_.expect("<");
    Term kap = tp_.expr();
    lx_.expect(".");
    Formula body = disj();
    return ex ? ex2(kap, body) : all2(kap, body);
  }

  FTerm fterm() {
    const Tok& t = lx_.peek();
    if (t.type == Tok::Ident) {
      for (size_t i = 0; i < indiv_.size(); ++i)
        if (indiv_[indiv_.size() - 1 - i] == t.text) {
          lx_.take();
          return FTerm::mkVar(static_cast<uint32_t>(i));
        }
    }
    return FTerm::mk(tp_.expr());
  }

  Formula atom() {
    Tok t = lx_.take();
    const std::string& id = t.text;
    if (id == "in") {
      lx_.expect("(");
      FTerm a = fterm();
      lx_.expect(",");
      FTerm b = fterm();
      lx_.expect(")");
      return litIn(a, b);
    }
    if (id == "P") {
      lx_.expect("(");
      FTerm a = fterm();
      lx_.expect(",");
      FTerm b = fterm();
      lx_.expect(",");
      FTerm c = fterm();
      lx_.expect(")");
      return litP(a, b, c);
    }
    if (id == "PI") {
      lx_.expect("(");
      unsigned n = tp_.number();
      lx_.expect(";");
      FTerm a = fterm();
      lx_.expect(")");
      return litPI(a, static_cast<int>(n));
    }
    if (id == "Reg") {
      lx_.expect("(");
      FTerm a = fterm();
      lx_.expect(")");
      return litReg(a);
    }
    if (id == "R") {
      lx_.expect("(");
      Tok b = lx_.take();
      if (b.type != Tok::Ident || b.text != "b") lx_.err("expected subset label 'b#tag'");
      lx_.expect("#");
      std::string tag;
      if (lx_.peek().type == Tok::Ident || lx_.peek().type == Tok::Num) tag = lx_.take().text;
      lx_.expect(",");
      Term kap = tp_.expr();
      lx_.expect(";");
      FTerm a = fterm();
      lx_.expect(")");
      return litR(tag, kap, a);
    }
    if (id == "X") {
      lx_.expect("(");
      unsigned i = tp_.number();
      lx_.expect(";");
      FTerm a = fterm();
      lx_.expect(")");
      return litX(i, a);
    }
    lx_.err("unknown formula head '" + id + "'");
  }

  Lexer& lx_;
  const ValidateOpts& opts_;
  TermParser tp_;
  std::vector<std::string> indiv_;
};

std::string printFTerm(const FTerm& s, int depth) {
  if (s.isVar) return "x" + std::to_string(depth - 1 - static_cast<int>(s.var));
  return printExpr(s.c);
}

// precedence: quantifiers 0 (maximal scope), | is 1, & is 2, atoms 3
int precOf(const Formula& f) {
  switch (f->kind) {
    case FKind::ExB:
    case FKind::AllB:
    case FKind::Ex2:
    case FKind::All2:
      return 0;
    case FKind::Or: return 1;
    case FKind::And: return 2;
    default: return 3;
  }
}

std::string printF(const Formula& f, int parent, int depth) {
  int prec = precOf(f);
  std::string s;
  switch (f->kind) {
    case FKind::LitIn:
      s = "in(" + printFTerm(f->t1, depth) + ", " + printFTerm(f->t2, depth) + ")";
      break;
    case FKind::LitP:
      s = "P(" + printFTerm(f->t1, depth) + ", " + printFTerm(f->t2, depth) + ", " +
          printFTerm(f->t3, depth) + ")";
      break;
    case FKind::LitPI:
      s = "PI(" + std::to_string(f->sub) + "; " + printFTerm(f->t1, depth) + ")";
      break;
    case FKind::LitReg:
      s = "Reg(" + printFTerm(f->t1, depth) + ")";
      break;
    case FKind::LitR:
      s = "R(b#" + f->tag + ", " + printExpr(f->kappa) + "; " + printFTerm(f->t1, depth) + ")";
      break;
    case FKind::LitX:
      s = "X(" + std::to_string(f->predIx) + "; " + printFTerm(f->t1, depth) + ")";
      break;
    case FKind::Or:
      s = printF(f->a, 1, depth) + " | " + printF(f->b, 2, depth);
      break;
    case FKind::And:
      s = printF(f->a, 2, depth) + " & " + printF(f->b, 3, depth);
      break;
    case FKind::ExB:
    case FKind::AllB:
      s = std::string(f->kind == FKind::ExB ? "ex" : "all") + " x" + std::to_string(depth) +
          "<" + printExpr(f->bound) + ". " + printF(f->a, 0, depth + 1);
      break;
    case FKind::Ex2:
    case FKind::All2:
      s = std::string(f->kind == FKind::Ex2 ? "EX" : "ALL") + " X<" + printExpr(f->kappa) +
          ". " + printF(f->a, 0, depth);
      break;
  }
  if (isLiteral(f) && !f->positive) {
    s = "~" + s;
    prec = 3;
  }
  if (prec < parent) s = "(" + s + ")";
  return s;
}

}  // namespace

Formula parseFormula(const std::string& text, const ValidateOpts& opts) {
  Lexer lx(text);
  FormulaParser p(lx, opts);
  Formula f = p.formula();
  if (lx.peek().type != Tok::End) lx.err("trailing input");
  ValidityReport rep = validateFormula(f, opts);
  if (!rep.ok) fail(Err::ParseError, "parse error at 1:1: " + rep.violations.front());
  return f;
}

std::string printFormula(const Formula& f) { return printF(f, 0, 0); }

using nlohmann::json;

json termToJson(Term t) {
  switch (t.kind()) {
    case Kind::Zero: return json{{"t", "Zero"}};
    case Kind::One: return json{{"t", "One"}};
    case Kind::Omega1: return json{{"t", "Omega1"}};
    case Kind::BigK: return json{{"t", "BigK"}};
    case Kind::BigI: return json{{"t", "BigI"}};
    case Kind::Sum: {
      json parts = json::array();
      for (Term p : t.kids()) parts.push_back(termToJson(p));
      return json{{"t", "Sum"}, {"parts", parts}};
    }
    case Kind::WExp: return json{{"t", "WExp"}, {"exp", termToJson(t.kids()[0])}};
    case Kind::Veblen:
      return json{{"t", "Veblen"},
                  {"index", termToJson(t.kids()[0])},
                  {"arg", termToJson(t.kids()[1])}};
    case Kind::RegSucc: return json{{"t", "RegSucc"}, {"base", termToJson(t.kids()[0])}};
    case Kind::PsiReg:
      return json{{"t", "PsiReg"},
                  {"kappa", termToJson(t.kids()[0])},
                  {"n", t.sub()},
                  {"arg", termToJson(t.kids()[1])}};
    case Kind::PsiI:
      return json{{"t", "PsiI"}, {"n", t.sub()}, {"arg", termToJson(t.kids()[0])}};
    case Kind::PsiK: {
      json seq = json::array(), theta = json::array();
      for (Term p : psiKSeq(t)) seq.push_back(termToJson(p));
      for (Term p : psiKTheta(t)) theta.push_back(termToJson(p));
      return json{{"t", "PsiK"},
                  {"n", t.sub()},
                  {"seq", seq},
                  {"theta", theta},
                  {"arg", termToJson(psiKArg(t))}};
    }
  }
  fail(Err::Internal, "termToJson: unreachable");
}

Term termFromJson(const json& j) {
  const std::string k = j.at("t").get<std::string>();
  if (k == "Zero") return zero();
  if (k == "One") return one();
  if (k == "Omega1") return omega1();
  if (k == "BigK") return bigK();
  if (k == "BigI") return bigI();
  if (k == "Sum") {
    std::vector<Term> parts;
    for (const auto& p : j.at("parts")) parts.push_back(termFromJson(p));
    return mkSum(std::move(parts));
  }
  if (k == "WExp") return mkWExp(termFromJson(j.at("exp")));
  if (k == "Veblen") return mkVeblen(termFromJson(j.at("index")), termFromJson(j.at("arg")));
  if (k == "RegSucc") return mkRegSucc(termFromJson(j.at("base")));
  if (k == "PsiReg")
    return mkPsiReg(termFromJson(j.at("kappa")), j.at("n").get<int>(),
                    termFromJson(j.at("arg")));
  if (k == "PsiI") return mkPsiI(j.at("n").get<int>(), termFromJson(j.at("arg")));
  if (k == "PsiK") {
    std::vector<Term> seq, theta;
    for (const auto& p : j.at("seq")) seq.push_back(termFromJson(p));
    for (const auto& p : j.at("theta")) theta.push_back(termFromJson(p));
    return mkPsiK(j.at("n").get<int>(), seq, theta, termFromJson(j.at("arg")));
  }
  fail(Err::ParseError, "unknown term tag '" + k + "' in JSON");
}

namespace {

json ftermToJson(const FTerm& s) {
  if (s.isVar) return json{{"var", s.var}};
  return termToJson(s.c);
}

FTerm ftermFromJson(const json& j) {
  if (j.contains("var")) return FTerm::mkVar(j.at("var").get<uint32_t>());
  return FTerm::mk(termFromJson(j));
}

}  // namespace

json formulaToJson(const Formula& f) {
  json j;
  switch (f->kind) {
    case FKind::LitIn:
      j = {{"f", "In"}, {"a", ftermToJson(f->t1)}, {"b", ftermToJson(f->t2)}};
      break;
    case FKind::LitP:
      j = {{"f", "P"},
           {"a", ftermToJson(f->t1)},
           {"b", ftermToJson(f->t2)},
           {"c", ftermToJson(f->t3)}};
      break;
    case FKind::LitPI: j = {{"f", "PI"}, {"n", f->sub}, {"a", ftermToJson(f->t1)}}; break;
    case FKind::LitReg: j = {{"f", "Reg"}, {"a", ftermToJson(f->t1)}}; break;
    case FKind::LitR:
      j = {{"f", "R"}, {"tag", f->tag}, {"kappa", termToJson(f->kappa)},
           {"a", ftermToJson(f->t1)}};
      break;
    case FKind::LitX: j = {{"f", "X"}, {"i", f->predIx}, {"a", ftermToJson(f->t1)}}; break;
    case FKind::Or:
      j = {{"f", "Or"}, {"a", formulaToJson(f->a)}, {"b", formulaToJson(f->b)}};
      break;
    case FKind::And:
      j = {{"f", "And"}, {"a", formulaToJson(f->a)}, {"b", formulaToJson(f->b)}};
      break;
    case FKind::ExB:
      j = {{"f", "ExB"}, {"bound", termToJson(f->bound)}, {"body", formulaToJson(f->a)}};
      break;
    case FKind::AllB:
      j = {{"f", "AllB"}, {"bound", termToJson(f->bound)}, {"body", formulaToJson(f->a)}};
      break;
    case FKind::Ex2:
      j = {{"f", "Ex2"}, {"kappa", termToJson(f->kappa)}, {"body", formulaToJson(f->a)}};
      break;
    case FKind::All2:
      j = {{"f", "All2"}, {"kappa", termToJson(f->kappa)}, {"body", formulaToJson(f->a)}};
      break;
  }
  if (isLiteral(f)) j["pos"] = f->positive;
  return j;
}

Formula formulaFromJson(const json& j) {
  const std::string k = j.at("f").get<std::string>();
  bool pos = j.value("pos", true);
  if (k == "In") return litIn(ftermFromJson(j.at("a")), ftermFromJson(j.at("b")), pos);
  if (k == "P")
    return litP(ftermFromJson(j.at("a")), ftermFromJson(j.at("b")), ftermFromJson(j.at("c")),
                pos);
  if (k == "PI") return litPI(ftermFromJson(j.at("a")), j.at("n").get<int>(), pos);
  if (k == "Reg") return litReg(ftermFromJson(j.at("a")), pos);
  if (k == "R")
    return litR(j.at("tag").get<std::string>(), termFromJson(j.at("kappa")),
                ftermFromJson(j.at("a")), pos);
  if (k == "X") return litX(j.at("i").get<uint32_t>(), ftermFromJson(j.at("a")), pos);
  if (k == "Or") return fOr(formulaFromJson(j.at("a")), formulaFromJson(j.at("b")));
  if (k == "And") return fAnd(formulaFromJson(j.at("a")), formulaFromJson(j.at("b")));
  if (k == "ExB") return exB(termFromJson(j.at("bound")), formulaFromJson(j.at("body")));
  if (k == "AllB") return allB(termFromJson(j.at("bound")), formulaFromJson(j.at("body")));
  if (k == "Ex2") return ex2(termFromJson(j.at("kappa")), formulaFromJson(j.at("body")));
  if (k == "All2") return all2(termFromJson(j.at("kappa")), formulaFromJson(j.at("body")));
  fail(Err::ParseError, "unknown formula tag '" + k + "' in JSON");
}

json boundsTraceToJson(const std::vector<BoundState>& tr) {
  json arr = json::array();
  for (const BoundState& s : tr) {
    json checks = json::array();
    for (auto& c : s.checks) checks.push_back({{"check", c.first}, {"holds", c.second}});
    arr.push_back({{"height", printTerm(s.height)},
                   {"cutRank", printTerm(s.cutRank)},
                   {"hullStage", printTerm(s.hullStage)},
                   {"theory", s.theory},
                   {"n", s.n},
                   {"note", s.note},
                   {"checks", checks}});
  }
  return arr;
}

}  // namespace ordkit
