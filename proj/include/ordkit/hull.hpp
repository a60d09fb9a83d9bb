#ifndef ORDKIT_HULL_HPP
#define ORDKIT_HULL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ordkit/mahlo.hpp"
#include "ordkit/term.hpp"

namespace ordkit {

// Term-level H_{alpha,n}[theta u {kappaCtx}](threshold): the set X is the
// class of all terms < threshold.
struct HullQuery {
  Term alpha;                    // stage bound
  int n = 1;                     // fixed subscript of the hull
  Term threshold;                // beta: every term < beta is in
  ThetaSet theta;                // extra parameters
  std::optional<Term> kappaCtx;  // the {kappa} of H[{kappa}]
};

// Recursive membership decision for the Skolem-hull clauses.
bool inHull(Term t, const HullQuery& q);

// Normal-form condition for collapse terms: the argument is reconstructible
// inside H_{arg,n}[{kappa} / theta](the collapse term itself), and the
// argument is not itself a collapse below the collapse value (uniqueness).
// Throws Err::NotACollapse on non-collapse input.
bool nfValid(Term t);

struct ResolventDescriptor {
  std::vector<MhDescriptor> classes;  // Mh_{i+j,n}((nu . seq)[j])[theta], j < lh(seq)
  Term gamma;                         // hull-threshold stage of the condition
  ThetaSet theta;
  std::string condition;              // displayed hull condition, no membership decided
};

// Symbolic record of the resolvent class of eq. (Hdfk); lengths and the
// componentwise bound nu < seq are enforced, nothing else is decided.
ResolventDescriptor resolventDescriptor(int i, const OrdSeq& seq, const OrdSeq& nu, Term gamma,
                                        const ThetaSet& theta, int n = 1);

}  // namespace ordkit

#endif
