#pragma once

// Fixture constructors: the three Schrodinger-equation symmetry
// representations (constant, linear, quadratic potential), their extension by
// the second-order anticommutator operators, and the evolution operators.

#include "schsym/basis.hpp"

#include <optional>
#include <string>

namespace schsym {

enum class RepCase { constant, linear, quadratic };

std::optional<RepCase> rep_case_from_string(const std::string& s);  // const|lin|quad
std::string rep_case_name(RepCase c);

// The symbol table the fixtures are built over (a, nu, omega, u, b).
const SymbolTable& rep_symbols();

// Indices of the named symbols in rep_symbols().
namespace sym {
inline constexpr std::size_t a = 0;
inline constexpr std::size_t nu = 1;
inline constexpr std::size_t omega = 2;
inline constexpr std::size_t u = 3;
inline constexpr std::size_t b = 4;
}  // namespace sym

// Six generators z_p1, z_0, z_m1, w_p, w_m, c; w_p and w_m are odd in the
// super assignment, everything else even.
NamedBasis build_rep(RepCase c);

// Appends w_p1 = {w_p, w_p}, w_0s = {w_p, w_m}, w_m1 = {w_m, w_m}, all even.
NamedBasis extend_rep(const NamedBasis& basis);

// d_t + a d_x^2 - a V(x) with the case's potential.
DiffOp build_omega(RepCase c);

// The evolution operator re-expressed inside the enlarged generator set:
// constant: z_p1 + (a/2) w_p1; linear: z_m1 + (a/2) w_m1;
// quadratic: z_0 + (a/2) w_0s.
bool omega_identity_check(RepCase c);

// Eigenvalue grading by the Cartan generator: [z_0, g] = mu g, normalized by
// 4 a nu (the quadratic case keeps nu symbolic; the other two sit at the
// substituted value where 4 a nu = -1). Nullopt when g is not an eigenvector.
std::optional<Rational> z0_grade(const DiffOp& g, const NamedBasis& basis, RepCase c);

}  // namespace schsym
