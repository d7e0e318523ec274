#pragma once

#include <string>
#include <string_view>

#include "darboux/poly.hpp"

namespace darboux {

// Expression grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | identifier | '(' expr ')'
//
// Multiplication is always explicit. Identifiers must name context
// variables; for Cyc8 coefficients the identifier z8 additionally denotes
// the primitive eighth root of unity when it is not a context variable.
template <class K>
Poly<K> parse(std::string_view text, const ContextPtr& ctx);

// Canonical printing: terms in descending grevlex order, coefficient first,
// unit coefficients omitted. parse(format(p)) == p.
template <class K>
std::string format(const Poly<K>& p);

extern template QPoly parse<Rational>(std::string_view, const ContextPtr&);
extern template CPoly parse<Cyc8>(std::string_view, const ContextPtr&);
extern template std::string format<Rational>(const QPoly&);
extern template std::string format<Cyc8>(const CPoly&);

}  // namespace darboux
