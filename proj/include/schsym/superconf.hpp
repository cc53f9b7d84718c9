#pragma once

// Graded 2x2 matrix operators over the (phi, psi) field column, the five
// hyperbolic osp(1|2) generators, their closure, equations-of-motion
// symmetry checks, and the square-root search certificate.

#include "schsym/closure.hpp"

#include <array>
#include <string>
#include <vector>

namespace schsym {

// Entries are operators in t only. Parity fixes the shape: even matrices are
// diagonal, odd ones antidiagonal; both are enforced on construction and
// re-checked after every composition.
class MatrixOp {
  public:
    MatrixOp() = default;  // zero, even

    static MatrixOp diagonal(DiffOp phi_phi, DiffOp psi_psi);
    // phi_from_psi sits in the phi row, psi_from_phi in the psi row.
    static MatrixOp antidiagonal(DiffOp phi_from_psi, DiffOp psi_from_phi);

    const DiffOp& entry(int row, int col) const { return e_.at(row * 2 + col); }
    Parity parity() const { return parity_; }
    bool is_zero() const;

    MatrixOp operator+(const MatrixOp& o) const;
    MatrixOp operator-(const MatrixOp& o) const;
    MatrixOp operator-() const;
    MatrixOp operator*(const MatrixOp& o) const;  // composition
    MatrixOp scaled(const Rational& c) const;

    bool operator==(const MatrixOp& o) const;

  private:
    MatrixOp(std::array<DiffOp, 4> e, Parity p);

    std::array<DiffOp, 4> e_;
    Parity parity_ = Parity::even;
};

// Anticommutator when both arguments are odd, commutator otherwise.
MatrixOp graded_matrix_bracket(const MatrixOp& a, const MatrixOp& b);

struct SigmaModel {
    std::vector<std::string> names;
    std::vector<MatrixOp> ops;

    std::optional<std::size_t> index_of(const std::string& name) const;
    const MatrixOp& op(const std::string& name) const;
};

// Generators Qp, Qm, Zp, Zm, H of the hyperbolic (1,1) multiplet.
SigmaModel build_n1_hyperbolic();

Coords coords_of(const MatrixOp& m);

// Complete graded bracket table of the model over itself.
StructureTable sigma_closure_table(const SigmaModel& model);

// Euler-Lagrange operator diag(d_t^2 - eps, d_t).
MatrixOp eom_operator(const Rational& eps);

// True when E*G vanishes once the equations of motion are used: entries in
// the phi column reduce by d_t^2 -> eps, entries in the psi column by
// d_t -> 0.
bool eom_onshell_check(const MatrixOp& g, const Rational& eps);

struct SquareCertificate {
    std::string target;
    bool expressible = false;  // 2*target lies in the span of the Q brackets
    // Demanded values of alpha^2, 2*alpha*beta, beta^2.
    Rational u, v, w;
    std::string equations;
    bool satisfiable = false;
    Rational alpha, beta;  // a solution, when one exists
};

// Solves {alpha*Qp + beta*Qm, alpha*Qp + beta*Qm} = 2*target over the
// rationals and reports either a solution or the contradictory equations.
SquareCertificate square_search(const SigmaModel& model, const MatrixOp& target,
                                const std::string& target_name);

SquareCertificate hamiltonian_square_search(const SigmaModel& model);

}  // namespace schsym
