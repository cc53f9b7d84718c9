#pragma once

// Canonical text rendering. The output is the inverse image of the parser:
// parse(format(P)) == P for every operator.

#include "schsym/diffop.hpp"

#include <string>

namespace schsym {

std::string format_rational(const Rational& r);
std::string format_monomial_term(const MonomialTerm& mt, const SymbolTable& table);
std::string format_exp_arg(const ExpArg& arg, const SymbolTable& table);
std::string format_ring(const RingElement& e, const SymbolTable& table);
std::string format_expr(const DiffOp& p, const SymbolTable& table);

}  // namespace schsym
