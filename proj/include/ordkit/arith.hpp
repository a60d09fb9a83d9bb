#ifndef ORDKIT_ARITH_HPP
#define ORDKIT_ARITH_HPP

#include "ordkit/order.hpp"
#include "ordkit/term.hpp"

namespace ordkit {
namespace arith {

// The w_maxTower(I+1) ceiling; results >= it throw Err::CeilingExceeded.
// Overridable per call for the CLI's ORDKIT_MAX_TOWER.
int maxTower();
void setMaxTower(int m);
Term ceilingTerm();

Term nat(unsigned m);                 // 0, 1, 1+1, ...
std::optional<unsigned> asNat(Term t);

Term add(Term s, Term t);             // normal form of s + t
Term mulNat(Term t, unsigned m);      // t * m (right natural multiple)
Term wexp(Term t);                    // w^t, normalizing w^0 = 1 and eps fixed points
Term omegaMul(Term t);                // w * t
Term mulPrincipal(Term s, Term t);    // s * t for additively principal s
Term omegaTower(int m, Term t);       // w_m(t)
Term veblen(Term a, Term b);          // phi(a)(b), normalizing phi(0)(b) and fixed points

}  // namespace arith
}  // namespace ordkit

#endif
