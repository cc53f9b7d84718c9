#include "doctest.h"

#include "schsym/diffop.hpp"

#include "support/gen.hpp"
#include "support/numfn.hpp"

#include <stdexcept>

using namespace schsym;

namespace {

DiffOp x_mult() { return DiffOp::from_ring(RingElement::x_pow(1)); }
DiffOp t_mult() { return DiffOp::from_ring(RingElement::t_pow(1)); }

}  // namespace

TEST_CASE("composition keeps coefficients on the left") {
    // Dx * x = x*Dx + 1, Dt * t = t*Dt + 1.
    CHECK(DiffOp::d_x() * x_mult() ==
          DiffOp::term(RingElement::x_pow(1), 0, 1) + DiffOp::identity());
    CHECK(DiffOp::d_t() * t_mult() ==
          DiffOp::term(RingElement::t_pow(1), 1, 0) + DiffOp::identity());

    // Second order: [Dx^2, x^2] = 4x*Dx + 2.
    DiffOp dx2 = DiffOp::d_x() * DiffOp::d_x();
    DiffOp x2 = DiffOp::from_ring(RingElement::x_pow(2));
    CHECK(commutator(dx2, x2) ==
          DiffOp::term(RingElement::x_pow(1).scaled(Rational(4)), 0, 1) +
              DiffOp::from_ring(RingElement::constant(Rational(2))));
}

TEST_CASE("brackets") {
    CHECK(commutator(DiffOp::d_t(), t_mult()) == DiffOp::identity());
    CHECK(commutator(DiffOp::d_t(), DiffOp::d_x()).is_zero());
    CHECK(anticommutator(DiffOp::d_x(), DiffOp::d_x()) ==
          (DiffOp::d_x() * DiffOp::d_x()).scaled(Rational(2)));
}

TEST_CASE("composition is associative and acts like function application") {
    gen::Gen g(11);
    numfn::Values vals = numfn::standard_values();
    for (int k = 0; k < 30; ++k) {
        DiffOp p = g.op(2, 2, 2);
        DiffOp q = g.op(2, 2, 2);
        DiffOp r = g.op(2, 1, 1);
        CHECK((p * q) * r == p * (q * r));

        RingElement f = g.ring(2);
        CHECK((p * q).apply(f) == p.apply(q.apply(f)));
    }
}

TEST_CASE("apply agrees with an independent model") {
    gen::Gen g(12);
    numfn::Values vals = numfn::standard_values();
    for (int k = 0; k < 50; ++k) {
        DiffOp p = g.op(3, 2, 2);
        RingElement f = g.ring(2);
        CHECK(numfn::from_ring(p.apply(f), vals) ==
              numfn::apply(p, numfn::from_ring(f, vals), vals));
    }
}

TEST_CASE("coefficient lookup and dt ceiling") {
    DiffOp p = DiffOp::term(RingElement::t_pow(1), 2, 0) +
               DiffOp::term(RingElement::x_pow(1), 0, 1) + DiffOp::identity();
    CHECK(p.coefficient(2, 0) == RingElement::t_pow(1));
    CHECK(p.coefficient(0, 1) == RingElement::x_pow(1));
    CHECK(p.coefficient(1, 1).is_zero());
    CHECK(p.max_dt() == 2);
    CHECK(DiffOp::zero().max_dt() == 0);
}

TEST_CASE("grading adds derivative weights to coefficient weights") {
    SymbolTable table = SymbolTable::standard();
    CHECK(DiffOp::d_t().grading(table) == Rational(1));
    CHECK(DiffOp::d_x().grading(table) == Rational(1, 2));

    // Dt + a*Dx^2 is homogeneous of grade 1 ([a] = 0).
    DiffOp omega = DiffOp::d_t() + DiffOp::term(RingElement::symbol(0), 0, 2);
    CHECK(omega.grading(table) == Rational(1));

    // t*Dt is grade 0; adding Dx breaks homogeneity.
    DiffOp tdt = DiffOp::term(RingElement::t_pow(1), 1, 0);
    CHECK(tdt.grading(table) == Rational(0));
    CHECK_FALSE((tdt + DiffOp::d_x()).grading(table).has_value());
}

TEST_CASE("exponential conjugation is the similarity transform") {
    gen::Gen g(31);

    // For g in the ring with exp(g) also in the ring, the transform can be
    // checked directly: conj(P) h = exp(g) * P(exp(-g) * h).
    ExpArg nu_t = ExpArg::single(Rational(2), Monomial::sym(1), ExpBase::t);
    ExpArg nu_x2 = ExpArg::single(Rational(-1), Monomial::sym(1), ExpBase::x2);
    for (const ExpArg& arg : {nu_t, nu_x2}) {
        RingElement gfun = RingElement::zero();
        for (const auto& e : arg.entries())
            gfun = gfun + RingElement::term(e.coeff, e.mono,
                                            e.base == ExpBase::t ? 1 : 0,
                                            e.base == ExpBase::t ? 0 : 2);
        RingElement eg = RingElement::exponential(arg);
        RingElement eg_inv = RingElement::exponential(-arg);
        for (int k = 0; k < 20; ++k) {
            DiffOp p = g.op(2, 2, 2, /*with_exp=*/false);
            RingElement h = g.ring(2, /*with_exp=*/false);
            CHECK(p.conjugate_exp(gfun).apply(h) == eg * p.apply(eg_inv * h));
        }
    }
}

TEST_CASE("exponential conjugation is an algebra homomorphism") {
    gen::Gen g(32);
    RingElement gfun = RingElement::t_pow(2).scaled(Rational(1, 3)) +
                       RingElement::x_pow(1) * RingElement::symbol(1);
    for (int k = 0; k < 25; ++k) {
        DiffOp p = g.op(2, 2, 2);
        DiffOp q = g.op(2, 2, 2);
        CHECK((p * q).conjugate_exp(gfun) ==
              p.conjugate_exp(gfun) * q.conjugate_exp(gfun));
        CHECK((p + q).conjugate_exp(gfun) ==
              p.conjugate_exp(gfun) + q.conjugate_exp(gfun));
    }
    CHECK(DiffOp::identity().conjugate_exp(gfun) == DiffOp::identity());
}

TEST_CASE("x-shift substitutes and refuses gaussian coefficients") {
    MonomialTerm shift{Rational(1), Monomial::sym(4)};  // x -> x + b

    // Coefficient x^2 becomes (x + b)^2.
    DiffOp p = DiffOp::term(RingElement::x_pow(2), 0, 1);
    RingElement xb = RingElement::x_pow(1) + RingElement::symbol(4);
    CHECK(p.shift_x(shift) == DiffOp::term(xb * xb, 0, 1));

    // Derivatives are unchanged by a constant shift.
    CHECK(DiffOp::d_x().shift_x(shift) == DiffOp::d_x());
    CHECK(DiffOp::d_t().shift_x(shift) == DiffOp::d_t());

    // The shift respects composition.
    gen::Gen g(33);
    for (int k = 0; k < 20; ++k) {
        DiffOp u = g.op(2, 1, 2, /*with_exp=*/false);
        DiffOp v = g.op(2, 1, 2, /*with_exp=*/false);
        CHECK((u * v).shift_x(shift) == u.shift_x(shift) * v.shift_x(shift));
    }

    ExpArg gauss = ExpArg::single(Rational(1), Monomial::sym(1), ExpBase::x2);
    DiffOp gp = DiffOp::from_ring(RingElement::exponential(gauss));
    CHECK_THROWS_AS(gp.shift_x(shift), std::domain_error);
}

TEST_CASE("left division by the evolution operator") {
    DiffOp omega = DiffOp::d_t() + DiffOp::term(RingElement::symbol(0), 0, 2);

    gen::Gen g(34);
    for (int k = 0; k < 30; ++k) {
        DiffOp p = g.op(3, 2, 2);
        Reduction red = reduce_mod(p, omega);
        CHECK(p == red.quotient * omega + red.remainder);
        CHECK(red.remainder.coefficient(1, 0).is_zero());
        CHECK(red.remainder.max_dt() == 0);
    }

    // Members of the left ideal reduce to zero.
    DiffOp member = g.op(2, 1, 1) * omega;
    CHECK(reduce_mod(member, omega).remainder.is_zero());
    CHECK(reduce_mod(member, omega).quotient * omega == member);

    // The divisor must be d_t plus d_t-free terms with unit leading coefficient.
    CHECK_THROWS_AS(reduce_mod(DiffOp::d_x(), DiffOp::d_t().scaled(Rational(2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(reduce_mod(DiffOp::d_x(), DiffOp::d_x()), std::invalid_argument);
}
