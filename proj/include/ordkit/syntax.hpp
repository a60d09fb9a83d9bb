#ifndef ORDKIT_SYNTAX_HPP
#define ORDKIT_SYNTAX_HPP

#include <string>

#include <json.hpp>

#include "ordkit/formula.hpp"
#include "ordkit/term.hpp"

namespace ordkit {

// Term grammar:
//   0  1  w1  K  I  E + E  w^E  w*E  E * n  phi(E, E)  reg+(E)
//   tower(n, E)  psi(E; n; E)  psiI(n; E)  psiK(n; [E,...]; {E,...}; E)
// + is left-associative, ^ binds tightest; whitespace insensitive.
// Parse errors and post-parse validation failures throw Err::ParseError with
// line/column context.
Term parseTerm(const std::string& text, const ValidateOpts& opts = {});
std::string printTerm(Term t);

// Formula grammar:
//   in(E,E)  P(E,E,E)  PI(n;E)  Reg(E)  R(b#tag, E; E)  X(i; E)
//   ~F  F | F  F & F  ex x<E. F  all x<E. F  EX X<E. F  ALL X<E. F
Formula parseFormula(const std::string& text, const ValidateOpts& opts = {});
std::string printFormula(const Formula& f);

nlohmann::json termToJson(Term t);
Term termFromJson(const nlohmann::json& j);
nlohmann::json formulaToJson(const Formula& f);
Formula formulaFromJson(const nlohmann::json& j);

nlohmann::json boundsTraceToJson(const std::vector<struct BoundState>& tr);

}  // namespace ordkit

#endif
