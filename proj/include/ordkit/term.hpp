#ifndef ORDKIT_TERM_HPP
#define ORDKIT_TERM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordkit/errors.hpp"

namespace ordkit {

// Term constructors of the notation system below eps_{I+1}.
//
//   Zero, One, Omega1 (w1), BigK (K), BigI (I)   -- constants
//   Sum      -- a1 + ... + ak, k >= 2, parts additively principal, non-increasing
//   WExp     -- w^e
//   Veblen   -- phi(a)(b), a >= 1 (phi(0)(b) is stored as WExp(b))
//   RegSucc  -- kappa^+ for kappa in {K} u RegSucc-chains u PsiI-terms
//   PsiReg   -- Psi_{kappa,n}(arg), kappa regular-designated
//   PsiI     -- Psi_{I,n}(arg)
//   PsiK     -- Psi^{seq,theta}_{K,n}(arg), lh(seq) = N
enum class Kind : uint8_t {
  Zero,
  One,
  Omega1,
  BigK,
  BigI,
  Sum,
  WExp,
  Veblen,
  RegSucc,
  PsiReg,
  PsiI,
  PsiK,
};

struct TermNode;

// Immutable handle to an interned node. Structural equality is pointer equality.
class Term {
 public:
  Term() : p_(nullptr) {}
  explicit Term(const TermNode* p) : p_(p) {}

  const TermNode* node() const { return p_; }
  const TermNode* operator->() const { return p_; }
  bool valid() const { return p_ != nullptr; }

  Kind kind() const;
  int sub() const;  // collapse subscript n
  uint32_t size() const;
  const std::vector<Term>& kids() const;

  bool is(Kind k) const { return kind() == k; }

  friend bool operator==(Term a, Term b) { return a.p_ == b.p_; }
  friend bool operator!=(Term a, Term b) { return a.p_ != b.p_; }

 private:
  const TermNode* p_;
};

struct TermNode {
  Kind kind;
  int sub = 0;            // n for PsiReg/PsiI/PsiK
  uint16_t seqLen = 0;    // PsiK: kids = seq items, theta items, arg
  uint16_t thetaLen = 0;
  uint32_t size = 1;      // node count (constants are 1 node)
  size_t hash = 0;
  std::vector<Term> kids;
};

inline Kind Term::kind() const { return p_->kind; }
inline int Term::sub() const { return p_->sub; }
inline uint32_t Term::size() const { return p_->size; }
inline const std::vector<Term>& Term::kids() const { return p_->kids; }

struct TermHash {
  size_t operator()(Term t) const { return std::hash<const TermNode*>()(t.node()); }
};

// Constants.
Term zero();
Term one();
Term omega1();
Term bigK();
Term bigI();

// Raw node builders. These intern the requested shape verbatim; they do not
// normalize. validate() decides whether the result is a legal normal form.
Term mkSum(std::vector<Term> parts);
Term mkWExp(Term e);
Term mkVeblen(Term a, Term b);
Term mkRegSucc(Term base);
Term mkPsiReg(Term kappa, int n, Term arg);
Term mkPsiI(int n, Term arg);
Term mkPsiK(int n, const std::vector<Term>& seq, const std::vector<Term>& theta, Term arg);

// Additively principal = any non-Zero, non-Sum term.
bool isPrincipal(Term t);

// Epsilon-designated terms absorb w^x: platforms and Veblen values.
bool isEpsDesignated(Term t);

// Platform terms: the strongly-critical constants and collapses
// (Omega1, BigK, BigI, RegSucc chains, PsiReg, PsiI, PsiK).
bool isPlatform(Term t);

// Reg = {w1} u {kappa < I : K < kappa regular}: w1 and RegSucc chains over
// K or PsiI terms. K itself is excluded (it is the collapse target).
bool regularDesignated(Term t);

// PsiK accessors.
std::vector<Term> psiKSeq(Term t);
std::vector<Term> psiKTheta(Term t);
Term psiKArg(Term t);

// parts of a Sum, or the term itself as a singleton
std::vector<Term> summands(Term t);

// all ordinal parameters occurring in t, including t itself and its constants
std::vector<Term> kset(Term t);

struct ValidateOpts {
  int N = 2;         // required PsiK sequence length
  int maxTower = 8;  // terms >= w_maxTower(I+1) are rejected
};

struct ValidityReport {
  bool ok = true;
  std::vector<std::string> violations;
  explicit operator bool() const { return ok; }
};

// Checks every structural invariant and the collapse normal-form conditions.
// Total on raw terms; reports the first failing clause (and any siblings found
// on the same pass).
ValidityReport validate(Term t, const ValidateOpts& opts = {});

// Finite, sorted, duplicate-free set of terms <= K. Canonicalizes on build.
class ThetaSet {
 public:
  ThetaSet() = default;
  explicit ThetaSet(std::vector<Term> elems);  // sorts and dedups

  const std::vector<Term>& elems() const { return elems_; }
  bool contains(Term t) const;
  bool subsetOf(const ThetaSet& other) const;
  size_t size() const { return elems_.size(); }

  friend bool operator==(const ThetaSet& a, const ThetaSet& b) { return a.elems_ == b.elems_; }

 private:
  std::vector<Term> elems_;
};

}  // namespace ordkit

#endif
