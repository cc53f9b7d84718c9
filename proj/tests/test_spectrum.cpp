#include "doctest.h"

#include "schsym/reps.hpp"
#include "schsym/spectrum.hpp"

#include <stdexcept>

using namespace schsym;

namespace {

Monomial a_nu() { return Monomial::sym(sym::a) * Monomial::sym(sym::nu); }

VacuumSolution quad_vacuum() {
    NamedBasis rep = build_rep(RepCase::quadratic);
    auto roots = gaussian_vacuum_ansatz(build_omega(RepCase::quadratic));
    return select_fock_branch(roots, rep.op("w_p"), rep.op("w_m"));
}

}  // namespace

TEST_CASE("gaussian ansatz roots of the oscillator operator") {
    auto roots = gaussian_vacuum_ansatz(build_omega(RepCase::quadratic));
    REQUIRE(roots.size() == 2);

    // beta = nu/2, lambda = -a*nu on the positive branch; mirrored signs on
    // the other.
    CHECK(roots[0].beta == MonomialTerm{Rational(1, 2), Monomial::sym(sym::nu)});
    CHECK(roots[0].lambda == MonomialTerm{Rational(-1), a_nu()});
    CHECK(roots[1].beta == MonomialTerm{Rational(-1, 2), Monomial::sym(sym::nu)});
    CHECK(roots[1].lambda == MonomialTerm{Rational(1), a_nu()});
}

TEST_CASE("vanishing potential collapses the ansatz") {
    auto roots = gaussian_vacuum_ansatz(build_omega(RepCase::constant));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].beta.is_zero());
    CHECK(roots[0].lambda.is_zero());
}

TEST_CASE("ansatz validation") {
    CHECK_THROWS_AS(gaussian_vacuum_ansatz(DiffOp::d_x()), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_vacuum_ansatz(DiffOp::d_t().scaled(Rational(2))),
                    std::invalid_argument);
    // Linear potential: not a multiple of x^2.
    CHECK_THROWS_AS(gaussian_vacuum_ansatz(build_omega(RepCase::linear)),
                    std::invalid_argument);

    // -W2/(4A) must be an exact square: Dt + a*Dx^2 - 2*a*nu^2*x^2 gives
    // beta^2 = nu^2/2.
    DiffOp omega = DiffOp::d_t() + DiffOp::term(RingElement::symbol(sym::a), 0, 2) -
                   DiffOp::from_ring(RingElement::term(
                       Rational(2), Monomial::sym(sym::a) * Monomial::sym(sym::nu).pow(2),
                       0, 2));
    CHECK_THROWS_AS(gaussian_vacuum_ansatz(omega), std::domain_error);
}

TEST_CASE("fock branch is the one annihilated by w_p") {
    NamedBasis rep = build_rep(RepCase::quadratic);
    auto roots = gaussian_vacuum_ansatz(build_omega(RepCase::quadratic));

    VacuumSolution vac = select_fock_branch(roots, rep.op("w_p"), rep.op("w_m"));
    CHECK(vac.lambda == MonomialTerm{Rational(-1), a_nu()});
    CHECK(vac.beta == MonomialTerm{Rational(1, 2), Monomial::sym(sym::nu)});
    CHECK(vac.annihilator == rep.op("w_p"));
    CHECK(vac.ladder == rep.op("w_m"));
    CHECK(rep.op("w_p").apply(vac.psi).is_zero());
    CHECK_FALSE(rep.op("w_m").apply(vac.psi).is_zero());

    // Swapping the ladder pair lands on the mirrored branch.
    VacuumSolution anti = select_fock_branch(roots, rep.op("w_m"), rep.op("w_p"));
    CHECK(anti.lambda == MonomialTerm{Rational(1), a_nu()});

    // An operator that annihilates nothing leaves no branch to pick.
    CHECK_THROWS_AS(select_fock_branch(roots, DiffOp::identity(), rep.op("w_m")),
                    std::domain_error);
    // The zero operator annihilates both.
    CHECK_THROWS_AS(select_fock_branch(roots, DiffOp::zero(), rep.op("w_m")),
                    std::domain_error);
}

TEST_CASE("eigenvalue extraction") {
    VacuumSolution vac = quad_vacuum();
    DiffOp z0 = build_rep(RepCase::quadratic).op("z_0");

    CHECK(eigenvalue_of(z0, vac.psi) == MonomialTerm{Rational(-1), a_nu()});
    CHECK(eigenvalue_of(DiffOp::zero(), vac.psi) ==
          MonomialTerm{Rational(0), Monomial::unit()});
    CHECK_FALSE(eigenvalue_of(DiffOp::d_x(), vac.psi).has_value());
    CHECK_THROWS_AS(eigenvalue_of(z0, RingElement::zero()), std::invalid_argument);
}

TEST_CASE("ladder states stay solutions and step the eigenvalue by -2*a*nu") {
    VacuumSolution vac = quad_vacuum();
    DiffOp omega = build_omega(RepCase::quadratic);
    DiffOp z0 = build_rep(RepCase::quadratic).op("z_0");

    auto states = ladder_states(vac, omega, z0, 10);
    REQUIRE(states.size() == 11);
    for (unsigned n = 0; n <= 10; ++n) {
        const LadderState& s = states[n];
        CHECK(s.n == n);
        CHECK_FALSE(s.psi.is_zero());
        // z_0 eigenvalue -(2n+1)*a*nu.
        CHECK(s.z0_eigen == MonomialTerm{Rational(-(2 * int(n) + 1)), a_nu()});
        if (n > 0) {
            CHECK(s.z0_eigen.coeff - states[n - 1].z0_eigen.coeff == Rational(-2));
            CHECK(s.z0_eigen.mono == a_nu());
        }
    }

    // A mismatched evolution operator is rejected immediately.
    CHECK_THROWS_AS(ladder_states(vac, build_omega(RepCase::constant), z0, 1),
                    std::logic_error);
}

TEST_CASE("ladder states are hermite-like polynomials over the vacuum") {
    VacuumSolution vac = quad_vacuum();
    DiffOp omega = build_omega(RepCase::quadratic);
    DiffOp z0 = build_rep(RepCase::quadratic).op("z_0");
    auto states = ladder_states(vac, omega, z0, 6);

    // psi_1 = 2*nu*x * exp(-3*a*nu*t + (nu/2)*x^2).
    ExpArg e1 = ExpArg::single(Rational(-3), a_nu(), ExpBase::t) +
                ExpArg::single(Rational(1, 2), Monomial::sym(sym::nu), ExpBase::x2);
    CHECK(states[1].psi ==
          RingElement::term(Rational(2), Monomial::sym(sym::nu), 0, 1, e1));

    // psi_2 = (2*nu + 4*nu^2*x^2) * exp(-5*a*nu*t + (nu/2)*x^2).
    ExpArg e2 = ExpArg::single(Rational(-5), a_nu(), ExpBase::t) +
                ExpArg::single(Rational(1, 2), Monomial::sym(sym::nu), ExpBase::x2);
    CHECK(states[2].psi ==
          RingElement::term(Rational(2), Monomial::sym(sym::nu), 0, 0, e2) +
              RingElement::term(Rational(4), Monomial::sym(sym::nu).pow(2), 0, 2, e2));

    for (const LadderState& s : states) {
        ExpArg expected_exp =
            ExpArg::single(Rational(-(2 * int(s.n) + 1)), a_nu(), ExpBase::t) +
            ExpArg::single(Rational(1, 2), Monomial::sym(sym::nu), ExpBase::x2);
        int max_x = 0;
        bool leading_found = false;
        for (const RingTerm& term : s.psi.terms()) {
            // Pure polynomial in x times the shifted gaussian: no bare t
            // factors, degree parity matching n.
            CHECK(term.tdeg == 0);
            CHECK(term.exp == expected_exp);
            CHECK(term.xdeg % 2 == int(s.n) % 2);
            if (term.xdeg > max_x) max_x = term.xdeg;
            // Leading coefficient (2*nu)^n.
            if (term.xdeg == int(s.n)) {
                leading_found = true;
                CHECK(term.coeff == Rational(2).pow(int(s.n)));
                CHECK(term.mono == Monomial::sym(sym::nu).pow(int(s.n)));
            }
        }
        CHECK(max_x == int(s.n));
        CHECK(leading_found);
    }
}

TEST_CASE("numeric oracle confirms solutions and flags non-solutions") {
    VacuumSolution vac = quad_vacuum();
    DiffOp omega = build_omega(RepCase::quadratic);
    DiffOp z0 = build_rep(RepCase::quadratic).op("z_0");
    auto states = ladder_states(vac, omega, z0, 3);

    std::vector<double> vals = default_instantiation();
    REQUIRE(vals.size() == rep_symbols().size());
    CHECK(vals[sym::a] == -1.0);
    CHECK(vals[sym::nu] == 0.5);

    for (const LadderState& s : states) {
        double r = numeric_residual(s.psi, omega, 20, 42, vals);
        CHECK(r <= 1e-4);
    }

    // Flipping the time exponent breaks the equation; the oracle must see it.
    ExpArg wrong = ExpArg::single(Rational(1), a_nu(), ExpBase::t) +
                   ExpArg::single(Rational(1, 2), Monomial::sym(sym::nu), ExpBase::x2);
    double bad = numeric_residual(RingElement::exponential(wrong), omega, 20, 42, vals);
    CHECK(bad > 1e-2);

    // Determinism: same seed, same residual.
    CHECK(numeric_residual(vac.psi, omega, 20, 7, vals) ==
          numeric_residual(vac.psi, omega, 20, 7, vals));
}
