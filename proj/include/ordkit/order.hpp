#ifndef ORDKIT_ORDER_HPP
#define ORDKIT_ORDER_HPP

#include <vector>

#include "ordkit/term.hpp"

namespace ordkit {

enum class Ord : int8_t { LT = -1, EQ = 0, GT = 1 };

const char* ordName(Ord o);

// Total strict order on terms; EQ iff structural identity. Throws
// Err::IncomparableSubscript for collapse pairs that differ in n outside the
// monotonicity rule. Memoized internally; safe to call concurrently.
Ord cmp(Term s, Term t);

inline bool lt(Term s, Term t) { return cmp(s, t) == Ord::LT; }
inline bool leq(Term s, Term t) { return cmp(s, t) != Ord::GT; }
inline Term maxTerm(Term s, Term t) { return lt(s, t) ? t : s; }

// validate(t).ok under the given context (canonical-form checks included).
bool isNormalForm(Term t, const ValidateOpts& opts = {});

struct EnumOpts {
  int N = 2;           // PsiK length for generated collapse terms
  int collapseSub = 1; // fixed subscript n used for generated collapses
  long cap = 200000;   // candidate-pool cap; exceeding it throws SizeLimitExceeded
  int maxTower = 8;
};

// All normal-form terms of node count <= maxSize that are < bound, sorted
// ascending under cmp. Brute-force oracle for the property suites.
std::vector<Term> enumerateBelow(Term bound, int maxSize, const EnumOpts& opts = {});

// Same pool before the < bound filter (used by suites that need terms >= bound).
std::vector<Term> enumerateAll(int maxSize, const EnumOpts& opts = {});

}  // namespace ordkit

#endif
