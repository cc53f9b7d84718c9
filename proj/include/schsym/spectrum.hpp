#pragma once

// Oscillator spectrum built from an exact Gaussian vacuum: ansatz roots,
// Fock-branch selection, ladder states, eigenvalue extraction, and a numeric
// residual oracle independent of the symbolic engine.

#include "schsym/diffop.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace schsym {

// One root of the Gaussian ansatz psi = exp(lambda*t + beta*x^2).
struct GaussianRoot {
    MonomialTerm lambda;
    MonomialTerm beta;
};

// Substitutes the ansatz into omega*psi = 0 and solves the x-degree-0 and
// x-degree-2 conditions lambda + 2*A*beta = 0 and 4*A*beta^2 + W2 = 0, where
// omega = d_t + A*d_x^2 + W2*x^2. Roots come back with the +sqrt branch
// first; a vanishing potential collapses both roots to (0, 0).
std::vector<GaussianRoot> gaussian_vacuum_ansatz(const DiffOp& omega);

struct VacuumSolution {
    MonomialTerm lambda;
    MonomialTerm beta;
    WaveFunction psi;
    DiffOp annihilator;
    DiffOp ladder;
};

// Picks the root annihilated by w_plus. Zero or two annihilated branches
// signal a mismatch between the representation and omega.
VacuumSolution select_fock_branch(const std::vector<GaussianRoot>& roots,
                                  const DiffOp& w_plus, const DiffOp& w_minus);

struct LadderState {
    unsigned n = 0;
    WaveFunction psi;
    MonomialTerm z0_eigen;
};

// States psi_n = ladder^n applied to the vacuum, n = 0..n_max, each checked
// to satisfy omega*psi_n = 0 exactly and to be a z0 eigenfunction.
std::vector<LadderState> ladder_states(const VacuumSolution& vac, const DiffOp& omega,
                                       const DiffOp& z0, unsigned n_max);

// Exact scalar mu with p(psi) = mu*psi, or nullopt.
std::optional<MonomialTerm> eigenvalue_of(const DiffOp& p, const WaveFunction& psi);

// Sample values for the symbol table used by the numeric oracle: a = -1,
// nu = 1/2, and generic nonzero values for the remaining symbols.
std::vector<double> default_instantiation();

// Max over random sample points of |central-difference omega(psi)| divided
// by max(|psi|, 1). Points are drawn with |t| <= 1, |x| <= 2; the
// differencing step is 1e-3.
double numeric_residual(const WaveFunction& psi, const DiffOp& omega, int samples,
                        std::uint64_t seed, const std::vector<double>& symvals);

}  // namespace schsym
