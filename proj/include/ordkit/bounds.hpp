#ifndef ORDKIT_BOUNDS_HPP
#define ORDKIT_BOUNDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "ordkit/mahlo.hpp"
#include "ordkit/term.hpp"

namespace ordkit {

// Quantitative annotations of a controlled derivation
// (H_{hullStage,n}, Theta, ., ZFLK_{theory,n}) |-^{height}_{cutRank} Gamma.
// Carries the fixed subscript n and the level count N of its pipeline.
struct BoundState {
  Term height;
  Term cutRank;
  Term hullStage;
  int theory = 0;  // k, -2 <= k <= N
  int n = 1;
  int N = 1;
  std::string note;
  std::vector<std::pair<std::string, bool>> checks;  // logged side conditions

  bool allChecksHold() const {
    for (auto& c : checks)
      if (!c.second) return false;
    return true;
  }
};

// (H,Theta,I,ZFLK_{N,n}) |-^{I.2+p}_{I+m}: the axiom-embedding bounds.
BoundState embeddingBound(int m, int p, int N, int n);

// Predicative cut elimination: consumes the cut block cutRank = c + w^a,
// height becomes phi(a)(height). Crossing I (c = I, a = 0) pays the hull
// stage: hullStage += old height. ShapeMismatch if cutRank does not decompose.
BoundState predicativeElim(const BoundState& s, Term a, Term c);

// Collapsing at lambda: a-hat = hullStage + w^{sigma.(1+height)},
// height = cutRank = Psi_{lambda,n}(a-hat), hullStage = a-hat + 1.
BoundState collapseStep(const BoundState& s, Term sigma, Term lambda, int n);

// One Mahlo lowering: theory k -> k-1, hullStage += height,
// height = kappa + w.height, cutRank = kappa.
BoundState lowerMahlo(const BoundState& s, Term kappa);

// Monotone weakening of the annotations (each component may only grow).
BoundState weakenTo(const BoundState& s, Term height, Term cutRank, Term hullStage,
                    const std::string& why);

// eq. (bigveebnd): rk_L(iota) < sigma  =>  rk_L(iota) < a.
bool sideConditionVee(Term rkL, Term sigma, Term a);

// Full bookkeeping chains of the two conservativity pipelines.
// theorem1Trace: embedding -> predicative chain -> K+ collapse -> elimination
// to cut rank K -> N lowerings at K. Exactly 4 + N states.
std::vector<BoundState> theorem1Trace(int m, int p, int N);

// theorem2Trace: as above but the last lowering steps below K at the PsiK
// collapse, then a second pipeline ends in an omega_1 collapse.
std::vector<BoundState> theorem2Trace(int m, int p, int N);

}  // namespace ordkit

#endif
