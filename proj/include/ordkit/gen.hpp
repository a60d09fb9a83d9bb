#ifndef ORDKIT_GEN_HPP
#define ORDKIT_GEN_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ordkit/formula.hpp"

namespace ordkit {

// Deterministic formula corpus over the constant pool {0, 1, w1, K, K+, I}
// (I only as a quantifier bound), depth-bounded, closed by construction.
struct GenOpts {
  int maxDepth = 4;
  size_t count = 10000;
  uint64_t seed = 0xC0FFEE;
  int n = 1;  // LitPI subscript
};

std::vector<Formula> generateFormulas(const GenOpts& opts = {});

// The P-shapes of the rank clauses, for targeted coverage.
Formula samplePInShape(Term b);
Formula samplePRegShape(Term lambda, Term b);

}  // namespace ordkit

#endif
