#include "schsym/reps.hpp"

namespace schsym {

namespace {

using R = Rational;

Monomial M(int a_e, int nu_e = 0, int om_e = 0) {
    Monomial m;
    if (a_e != 0) m = m * Monomial::sym(sym::a, a_e);
    if (nu_e != 0) m = m * Monomial::sym(sym::nu, nu_e);
    if (om_e != 0) m = m * Monomial::sym(sym::omega, om_e);
    return m;
}

RingElement rt(R c, Monomial m, int td, int xd, ExpArg e = ExpArg()) {
    return RingElement::term(std::move(c), std::move(m), td, xd, std::move(e));
}

DiffOp dt_term(RingElement c, int dt, int dx) {
    return DiffOp::term(std::move(c), dt, dx);
}

ExpArg et(R c, Monomial m) { return ExpArg::single(std::move(c), std::move(m), ExpBase::t); }

NamedBasis constant_rep() {
    NamedBasis b;
    b.add("z_p1", DiffOp::d_t());
    b.add("z_0", dt_term(rt(R(1), M(0), 1, 0), 1, 0) +
                     dt_term(rt(R(1, 2), M(0), 0, 1), 0, 1) +
                     dt_term(rt(R(1, 4), M(0), 0, 0), 0, 0));
    b.add("z_m1", dt_term(rt(R(1), M(0), 2, 0), 1, 0) +
                      dt_term(rt(R(1), M(0), 1, 1), 0, 1) +
                      dt_term(rt(R(-1, 4), M(-1), 0, 2) + rt(R(1, 2), M(0), 1, 0), 0, 0));
    b.add("w_p", DiffOp::d_x(), Parity::odd);
    b.add("w_m", dt_term(rt(R(1), M(0), 1, 0), 0, 1) +
                     dt_term(rt(R(-1, 2), M(-1), 0, 1), 0, 0),
          Parity::odd);
    b.add("c", DiffOp::identity());
    return b;
}

NamedBasis linear_rep() {
    NamedBasis b;
    b.add("z_p1",
          dt_term(rt(R(1), M(0), 2, 0), 1, 0) +
              dt_term(rt(R(1), M(2, 0, 1), 3, 0) + rt(R(1), M(0), 1, 1), 0, 1) +
              dt_term(rt(R(1, 2), M(0), 1, 0) + rt(R(-1, 4), M(3, 0, 2), 4, 0) +
                          rt(R(-3, 2), M(1, 0, 1), 2, 1) + rt(R(-1, 4), M(-1), 0, 2),
                      0, 0));
    b.add("z_0", dt_term(rt(R(-1), M(0), 1, 0), 1, 0) +
                     dt_term(rt(R(-3, 2), M(2, 0, 1), 2, 0) + rt(R(-1, 2), M(0), 0, 1), 0, 1) +
                     dt_term(rt(R(1, 2), M(3, 0, 2), 3, 0) + rt(R(3, 2), M(1, 0, 1), 1, 1) +
                                 rt(R(-1, 4), M(0), 0, 0),
                             0, 0));
    b.add("z_m1", DiffOp::d_t() + dt_term(rt(R(2), M(2, 0, 1), 1, 0), 0, 1) +
                      dt_term(rt(R(-1), M(3, 0, 2), 2, 0) + rt(R(-1), M(1, 0, 1), 0, 1), 0, 0));
    b.add("w_p", dt_term(rt(R(-1), M(0), 1, 0), 0, 1) +
                     dt_term(rt(R(1, 2), M(-1), 0, 1) + rt(R(1, 2), M(1, 0, 1), 2, 0), 0, 0),
          Parity::odd);
    b.add("w_m", DiffOp::d_x() + dt_term(rt(R(-1), M(1, 0, 1), 1, 0), 0, 0), Parity::odd);
    b.add("c", DiffOp::identity());
    return b;
}

NamedBasis quadratic_rep() {
    NamedBasis b;
    ExpArg e4 = et(R(4), M(1, 1));
    ExpArg e4m = et(R(-4), M(1, 1));
    ExpArg e2 = et(R(2), M(1, 1));
    ExpArg e2m = et(R(-2), M(1, 1));
    b.add("z_p1", dt_term(rt(R(1), M(0), 0, 0, e4), 1, 0) +
                      dt_term(rt(R(2), M(1, 1), 0, 1, e4), 0, 1) +
                      dt_term(rt(R(1), M(1, 1), 0, 0, e4) + rt(R(-2), M(1, 2), 0, 2, e4), 0, 0));
    b.add("z_0", DiffOp::d_t());
    b.add("z_m1", dt_term(rt(R(1), M(0), 0, 0, e4m), 1, 0) +
                      dt_term(rt(R(-2), M(1, 1), 0, 1, e4m), 0, 1) +
                      dt_term(rt(R(-1), M(1, 1), 0, 0, e4m) + rt(R(-2), M(1, 2), 0, 2, e4m),
                              0, 0));
    b.add("w_p", dt_term(rt(R(1), M(0), 0, 0, e2), 0, 1) +
                     dt_term(rt(R(-1), M(0, 1), 0, 1, e2), 0, 0),
          Parity::odd);
    b.add("w_m", dt_term(rt(R(1), M(0), 0, 0, e2m), 0, 1) +
                     dt_term(rt(R(1), M(0, 1), 0, 1, e2m), 0, 0),
          Parity::odd);
    b.add("c", DiffOp::identity());
    return b;
}

}  // namespace

std::optional<RepCase> rep_case_from_string(const std::string& s) {
    if (s == "const") return RepCase::constant;
    if (s == "lin") return RepCase::linear;
    if (s == "quad") return RepCase::quadratic;
    return std::nullopt;
}

std::string rep_case_name(RepCase c) {
    switch (c) {
        case RepCase::constant: return "const";
        case RepCase::linear: return "lin";
        case RepCase::quadratic: return "quad";
    }
    return "?";
}

const SymbolTable& rep_symbols() {
    static const SymbolTable table = SymbolTable::standard();
    return table;
}

NamedBasis build_rep(RepCase c) {
    switch (c) {
        case RepCase::constant: return constant_rep();
        case RepCase::linear: return linear_rep();
        case RepCase::quadratic: return quadratic_rep();
    }
    throw std::logic_error("reps: bad case");
}

NamedBasis extend_rep(const NamedBasis& basis) {
    const DiffOp& wp = basis.op("w_p");
    const DiffOp& wm = basis.op("w_m");
    NamedBasis out = basis;
    out.add("w_p1", anticommutator(wp, wp));
    out.add("w_0s", anticommutator(wp, wm));
    out.add("w_m1", anticommutator(wm, wm));
    return out;
}

DiffOp build_omega(RepCase c) {
    DiffOp base = DiffOp::d_t() + dt_term(RingElement::symbol(sym::a), 0, 2);
    switch (c) {
        case RepCase::constant: return base;
        case RepCase::linear:
            return base + dt_term(rt(R(-1), M(1, 0, 1), 0, 1), 0, 0);
        case RepCase::quadratic:
            return base + dt_term(rt(R(-1), M(1, 2), 0, 2), 0, 0);
    }
    throw std::logic_error("reps: bad case");
}

bool omega_identity_check(RepCase c) {
    NamedBasis b = extend_rep(build_rep(c));
    RingElement half_a = RingElement::symbol(sym::a).scaled(R(1, 2));
    DiffOp omega = build_omega(c);
    switch (c) {
        case RepCase::constant:
            return omega == b.op("z_p1") + b.op("w_p1").scaled(half_a);
        case RepCase::linear:
            return omega == b.op("z_m1") + b.op("w_m1").scaled(half_a);
        case RepCase::quadratic:
            return omega == b.op("z_0") + b.op("w_0s").scaled(half_a);
    }
    return false;
}

namespace {

// mu with lhs = mu * rhs for a scaled symbol monomial mu; nullopt otherwise.
std::optional<MonomialTerm> monomial_ratio(const DiffOp& lhs, const DiffOp& rhs) {
    if (lhs.is_zero()) return MonomialTerm{R(0), Monomial::unit()};
    if (rhs.is_zero()) return std::nullopt;
    const DiffTerm& lt = lhs.terms().front();
    const DiffTerm& rt_ = rhs.terms().front();
    if (lt.dt != rt_.dt || lt.dx != rt_.dx) return std::nullopt;
    const RingTerm& l0 = lt.coeff.terms().front();
    const RingTerm& r0 = rt_.coeff.terms().front();
    if (l0.tdeg != r0.tdeg || l0.xdeg != r0.xdeg || !(l0.exp == r0.exp)) return std::nullopt;
    MonomialTerm mu{l0.coeff / r0.coeff, l0.mono * r0.mono.inverse()};
    if (rhs.scaled(RingElement::monomial(mu)) == lhs) return mu;
    return std::nullopt;
}

}  // namespace

std::optional<Rational> z0_grade(const DiffOp& g, const NamedBasis& basis, RepCase c) {
    auto mu = monomial_ratio(commutator(basis.op("z_0"), g), g);
    if (!mu) return std::nullopt;
    if (c == RepCase::quadratic) {
        // Normalizer 4 a nu stays symbolic.
        if (mu->coeff.is_zero()) return R(0);
        Monomial anu = M(1, 1);
        if (!(mu->mono == anu)) return std::nullopt;
        return mu->coeff / R(4);
    }
    // Constant and linear reps sit at the substituted point 4 a nu = -1.
    if (!mu->mono.is_unit()) return std::nullopt;
    return -mu->coeff;
}

}  // namespace schsym
