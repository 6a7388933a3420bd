#pragma once

// Expression surface over the set algebra and the topological / ideal
// operators.  Prefix grammar with comma-separated arguments:
//
//   literals      R Q I Z N empty
//   constructors  interval(a,b,o|c,o|c)  points(q,...)  prog(a,d[,up|down])
//                 qtrace(e)  itrace(e)
//   set algebra   union(e,...)  inter(e,...)  setminus(e,e)  compl(e)
//   topological   int[T](e)  cl[T](e)  fr[T](e)  D[T](e)
//   ideal         intC[T; J](e)  clC[T; J](e)  DC[T; J](e)  BdC[T; J](e)
//                 FrC[T; J](e)  ExtC[T; J](e)  isCopen[T; J](e)
//                 isCclosed[T; J](e)
//   other         card(e)
//
// with topology selectors T: usual | particular:<q> | excluded:I |
// excluded:Q | cocountable | overlap, ideal selectors J: finite | countable,
// rational literals p/q or decimals, and inf / -inf endpoints.

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ctopo/ideal.hpp"
#include "ctopo/real_set.hpp"
#include "ctopo/topology.hpp"

namespace ctopo {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t column)
      : std::runtime_error(message + " at column " + std::to_string(column)),
        column(column) {}
  std::size_t column;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  // Head symbol: a literal name or an operator/constructor name from the
  // grammar above.
  std::string head;
  std::vector<ExprPtr> args;
  std::vector<ExtRational> numbers;  // interval / points / prog parameters
  std::vector<bool> closedFlags;     // interval endpoint flags
  std::string progKind;              // "", "up" or "down"
  std::string topologySelector;      // context clause, empty when absent
  std::string idealSelector;
};

struct Expression {
  ExprPtr root;
};

// Parses source text into an AST; throws ParseError with a column number on
// malformed input, unknown names, bad arity, or a missing context clause.
Expression parseExpression(const std::string& src);

struct EvalResult {
  std::variant<RealSet, bool, Cardinality> value;
  // Canonical text: re-parses and re-evaluates to an equal value.
  std::string rendered;
};

// Evaluates an AST exactly.  Topology domain violations propagate as
// std::domain_error.
EvalResult evaluate(const Expression& e);

// Canonical renderings.
std::string renderSet(const RealSet& s);
std::string renderValue(const std::variant<RealSet, bool, Cardinality>& v);

// Shared selector helpers (also used by the command-line front end).
Topology topologyFromSelector(const std::string& selector);
IdealKind idealFromSelector(const std::string& selector);

// Parses bracket interval notation for cover lists, e.g. "[-1,0.5)" or
// "(-0.5,1]".  Throws ParseError.
RealSet parseBracketInterval(const std::string& text);

}  // namespace ctopo
