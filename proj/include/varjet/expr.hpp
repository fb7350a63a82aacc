#pragma once

#include "varjet/diffpoly.hpp"

namespace varjet {

/// Syntax error carrying the 1-based byte offset of the offending token.
struct ParseError : std::runtime_error {
	size_t offset;
	ParseError(size_t zero_based, const std::string& msg)
	    : std::runtime_error(msg + " at offset " + std::to_string(zero_based + 1)),
	      offset(zero_based + 1)
	{
	}
};

/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := rational | var | '(' expr ')'
///   var    := ('t'|'th') uint '_' uint      (index, order)
///   rational := uint ('/' uint)?
/// Variable indices are validated against the context. Powers of odd
/// variables parse and normalize (square = 0).
DiffPoly parse(const std::string& text, const JetContext& ctx);

/// Canonical sorted-monomial form; parse(print(u)) == u.
std::string print(const DiffPoly& u);

/// Smallest context containing every variable mentioned in the text, with
/// m = n = max index (at least 1); used when the CLI gets no --context.
JetContext infer_context(const std::string& text);

} // namespace varjet
