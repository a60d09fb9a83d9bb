#ifndef ORDKIT_MAHLO_HPP
#define ORDKIT_MAHLO_HPP

#include <map>
#include <vector>

#include "ordkit/order.hpp"
#include "ordkit/term.hpp"

namespace ordkit {

// Finite sequence of terms (alpha-bar, nu-bar of the sequence calculus).
class OrdSeq {
 public:
  OrdSeq() = default;
  explicit OrdSeq(std::vector<Term> items) : items_(std::move(items)) {}

  size_t lh() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Term>& items() const { return items_; }

  Term component(size_t i) const;      // s(i); IndexOutOfRange on bad i
  OrdSeq endSegment(size_t i) const;   // (s(i), ..., s(m-1)); i == lh gives empty
  std::vector<Term> ksetSeq() const;   // set of components, sorted, deduped

  // singleton/ordinal identification
  static OrdSeq lift(Term t) { return OrdSeq({t}); }
  Term unlift() const;                 // LengthMismatch unless lh == 1

  friend bool operator==(const OrdSeq& a, const OrdSeq& b) { return a.items_ == b.items_; }

 private:
  std::vector<Term> items_;
};

// (nu . alpha)[i] = (nu(i)) * alpha[i+1]
OrdSeq bulletSub(const OrdSeq& nu, const OrdSeq& alpha, size_t i);

// componentwise strict: forall i (nu(i) < alpha(i)); LengthMismatch on unequal lengths
bool seqLess(const OrdSeq& nu, const OrdSeq& alpha);

// forall components a of alpha (a <= beta)
bool seqLeqOrd(const OrdSeq& alpha, Term beta);

// Symbolic Mh_{k,n}(seq)[theta]; lh(seq) = N - k with the system N implied by
// k + lh(seq).
struct MhDescriptor {
  int k = 0;
  int n = 1;
  OrdSeq seq;
  ThetaSet theta;

  int systemN() const { return k + static_cast<int>(seq.lh()); }
};

// The hypothesis of Prop. 2.1(1): same k, n, theta, equal lengths and
// d2.seq componentwise <= d1.seq. Checks the hypothesis only.
bool mhSubsumes(const MhDescriptor& d1, const MhDescriptor& d2);

// The eq. (abgam) package for a fixed n and N.
struct AbgamTable {
  int n = 1;
  int N = 1;
  Term b;                      // b_n = Psi_{K+,n}(w_{n-1}(I+1))
  Term a;                      // a_n = phi(b_n)(b_n)
  std::map<int, Term> gamma;   // k -> gamma_{k,n}, for -1 <= k <= N
  std::map<int, OrdSeq> alphaVec;  // k -> alpha-bar_{k,n}, 0 <= k <= N
};

AbgamTable abgam(int n, int N);

}  // namespace ordkit

#endif
