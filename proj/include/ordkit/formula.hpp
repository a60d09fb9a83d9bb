#ifndef ORDKIT_FORMULA_HPP
#define ORDKIT_FORMULA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordkit/order.hpp"
#include "ordkit/term.hpp"

namespace ordkit {

// Literal argument slot: an ordinal constant or a bound individual variable
// (de Bruijn index into the enclosing ex/all binders). rk_L of a variable is 0.
struct FTerm {
  bool isVar = false;
  uint32_t var = 0;
  Term c;

  static FTerm mk(Term t) { return FTerm{false, 0, t}; }
  static FTerm mkVar(uint32_t i) { return FTerm{true, i, Term()}; }

  friend bool operator==(const FTerm& a, const FTerm& b) {
    return a.isVar == b.isVar && (a.isVar ? a.var == b.var : a.c == b.c);
  }
};

enum class FKind : uint8_t {
  LitIn,   // t1 in t2 (< on ordinal constants)
  LitP,    // P(t1, t2, t3)
  LitPI,   // P_{I,n}(t1)
  LitReg,  // Reg(t1)
  LitR,    // R_{B,kappa}(t1), B an opaque subset tag
  LitX,    // X_i(t1), predicate variable (de Bruijn over EX/ALL binders)
  Or,
  And,
  ExB,     // ex x < bound . body      (bound = BigI reads as unbounded / L_I)
  AllB,
  Ex2,     // EX X < kappa . body
  All2,
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  FKind kind = FKind::LitIn;
  bool positive = true;   // literal polarity
  int sub = 1;            // n of LitPI
  uint32_t predIx = 0;    // LitX
  std::string tag;        // LitR subset label ("" is the empty set)
  Term kappa;             // LitR / Ex2 / All2
  Term bound;             // ExB / AllB
  FTerm t1, t2, t3;
  Formula a, b;           // children (quantifier body in a)
};

Formula litIn(FTerm a, FTerm b, bool pos = true);
Formula litP(FTerm a, FTerm b, FTerm c, bool pos = true);
Formula litPI(FTerm t, int n, bool pos = true);
Formula litReg(FTerm t, bool pos = true);
Formula litR(std::string tag, Term kappa, FTerm t, bool pos = true);
Formula litX(uint32_t ix, FTerm t, bool pos = true);
Formula fOr(Formula a, Formula b);
Formula fAnd(Formula a, Formula b);
Formula exB(Term bound, Formula body);
Formula allB(Term bound, Formula body);
Formula ex2(Term kappa, Formula body);
Formula all2(Term kappa, Formula body);

// De Morgan negation (literals flip polarity; no Not node exists).
Formula fneg(const Formula& f);

bool isLiteral(const Formula& f);
bool formulaEq(const Formula& a, const Formula& b);

// Structural validity: closed, literal constants < I, LitR/Ex2 kappas in range.
ValidityReport validateFormula(const Formula& f, const ValidateOpts& opts = {});

// instantiate the outermost individual binder's variable with an ordinal
Formula instIndiv(const Formula& body, Term value);
// instantiate the outermost predicate binder's variable with R_{tag,kappa}
Formula instPred(const Formula& body, const std::string& tag, Term kappa);

// Coefficient sets. Zero is a member of both by definition; only constants
// inside L_I (terms < I) are collected.
std::vector<Term> kE(const Formula& f);
std::vector<Term> kR(const Formula& f);
std::vector<Term> kAll(const Formula& f);

// Rank of a sentence: the ordinal measuring its cut complexity.
Term rank(const Formula& f);

struct ClassifyResult {
  bool isDelta0Lambda = false;
  bool isSigmaSigma = false;             // Sigma^{Sigma_{n+1}}(lambda)
  std::optional<int> pi1Level;           // least k with a Pi^1_k(lambda) shape
  bool pi20 = false;
};

ClassifyResult classify(const Formula& f, Term lambda, int n);

// A^{(kappa,lambda)}: rebind every lambda-bounded quantifier and R-predicate to kappa.
Formula relativize(const Formula& f, Term kappa, Term lambda);

enum class Direction : uint8_t { Disj, Conj };

struct IndexDescriptor {
  enum class Tag : uint8_t { Finite, SymbolicMu, SymbolicPowerset, ElementsBelow } tag;
  size_t finiteCount = 0;  // Finite
  Term bound;              // ElementsBelow
};

struct AssignShape {
  Direction dir;
  IndexDescriptor index;
};

// Disjunction/conjunction assignment of a sentence. Throws Err::UndecidableLiteral
// for literals whose truth needs set semantics.
AssignShape assignShape(const Formula& f, int n);

// rank/class helpers shared with the suites
bool isSigmaM(const Formula& f, int m);   // Sigma_m in the pure in-language
bool isPiM(const Formula& f, int m);
bool mentionsSpecialPredicate(const Formula& f);  // P, P_I, Reg, R, X anywhere
bool rankExemptShape(const Formula& f);   // the P-lambda shape exempt from rank descent

}  // namespace ordkit

#endif
