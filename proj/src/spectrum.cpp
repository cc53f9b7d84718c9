#include "schsym/spectrum.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace schsym {

namespace {

std::optional<Monomial> mono_sqrt(const Monomial& m) {
    Monomial out;
    for (std::size_t i = 0; i < m.width(); ++i) {
        int e = m.exponent(i);
        if (e % 2 != 0) return std::nullopt;
        if (e != 0) out = out * Monomial::sym(i, e / 2);
    }
    return out;
}

// Single-term coefficient of x^2 with no t, x, or exp factors left over.
std::optional<MonomialTerm> as_x2_term(const RingElement& e) {
    if (e.is_zero()) return MonomialTerm{Rational(0), Monomial::unit()};
    if (e.terms().size() != 1) return std::nullopt;
    const RingTerm& t = e.terms().front();
    if (t.tdeg != 0 || t.xdeg != 2 || !t.exp.empty()) return std::nullopt;
    return MonomialTerm{t.coeff, t.mono};
}

}  // namespace

std::vector<GaussianRoot> gaussian_vacuum_ansatz(const DiffOp& omega) {
    for (const DiffTerm& d : omega.terms()) {
        bool allowed = (d.dt == 1 && d.dx == 0) || (d.dt == 0 && d.dx == 2) ||
                       (d.dt == 0 && d.dx == 0);
        if (!allowed)
            throw std::invalid_argument("spectrum: operator is not d_t + A*d_x^2 + W(x)");
    }
    if (!omega.coefficient(1, 0).is_one())
        throw std::invalid_argument("spectrum: d_t coefficient must be 1");
    auto A = omega.coefficient(0, 2).as_monomial_term();
    if (!A || A->is_zero())
        throw std::invalid_argument("spectrum: d_x^2 coefficient must be a scalar monomial");
    auto W2 = as_x2_term(omega.coefficient(0, 0));
    if (!W2)
        throw std::invalid_argument("spectrum: potential must be a multiple of x^2");

    if (W2->is_zero()) {
        return {GaussianRoot{MonomialTerm{Rational(0), Monomial::unit()},
                             MonomialTerm{Rational(0), Monomial::unit()}}};
    }

    // beta^2 = -W2 / (4A)
    Rational bsq_coeff = -(W2->coeff / (A->coeff * Rational(4)));
    Monomial bsq_mono = W2->mono * A->mono.inverse();
    auto coeff_root = bsq_coeff.sqrt_exact();
    auto mono_root = mono_sqrt(bsq_mono);
    if (!coeff_root || !mono_root)
        throw std::domain_error("spectrum: vacuum exponent is not an exact square");

    std::vector<GaussianRoot> roots;
    for (int s : {+1, -1}) {
        MonomialTerm beta{*coeff_root * Rational(s), *mono_root};
        MonomialTerm lambda{Rational(-2) * A->coeff * beta.coeff, A->mono * beta.mono};
        roots.push_back(GaussianRoot{lambda, beta});
    }
    return roots;
}

namespace {

WaveFunction gaussian_state(const GaussianRoot& r) {
    ExpArg arg = ExpArg::single(r.lambda.coeff, r.lambda.mono, ExpBase::t) +
                 ExpArg::single(r.beta.coeff, r.beta.mono, ExpBase::x2);
    return RingElement::exponential(arg);
}

}  // namespace

VacuumSolution select_fock_branch(const std::vector<GaussianRoot>& roots,
                                  const DiffOp& w_plus, const DiffOp& w_minus) {
    std::optional<VacuumSolution> picked;
    for (const GaussianRoot& r : roots) {
        WaveFunction psi = gaussian_state(r);
        if (!w_plus.apply(psi).is_zero()) continue;
        if (picked)
            throw std::domain_error("spectrum: both ansatz branches are annihilated");
        picked = VacuumSolution{r.lambda, r.beta, std::move(psi), w_plus, w_minus};
    }
    if (!picked)
        throw std::domain_error("spectrum: no ansatz branch is annihilated");
    return *std::move(picked);
}

std::optional<MonomialTerm> eigenvalue_of(const DiffOp& p, const WaveFunction& psi) {
    if (psi.is_zero()) throw std::invalid_argument("spectrum: zero state");
    WaveFunction image = p.apply(psi);
    if (image.is_zero()) return MonomialTerm{Rational(0), Monomial::unit()};
    const RingTerm& lhs = image.terms().front();
    const RingTerm& rhs = psi.terms().front();
    if (lhs.tdeg != rhs.tdeg || lhs.xdeg != rhs.xdeg || !(lhs.exp == rhs.exp))
        return std::nullopt;
    MonomialTerm mu{lhs.coeff / rhs.coeff, lhs.mono * rhs.mono.inverse()};
    if (RingElement::monomial(mu) * psi == image) return mu;
    return std::nullopt;
}

std::vector<LadderState> ladder_states(const VacuumSolution& vac, const DiffOp& omega,
                                       const DiffOp& z0, unsigned n_max) {
    std::vector<LadderState> states;
    WaveFunction psi = vac.psi;
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n > 0) psi = vac.ladder.apply(psi);
        if (!omega.apply(psi).is_zero())
            throw std::logic_error("spectrum: ladder left the kernel of omega");
        auto mu = eigenvalue_of(z0, psi);
        if (!mu) throw std::logic_error("spectrum: ladder state is not a z0 eigenfunction");
        states.push_back(LadderState{n, psi, *mu});
    }
    return states;
}

std::vector<double> default_instantiation() { return {-1.0, 0.5, 3.0, 2.0, 0.2}; }

namespace {

double central_diff(const WaveFunction& f, int i, int j, double t, double x,
                    const std::vector<double>& symvals) {
    constexpr double h = 1e-3;
    if (i > 0)
        return (central_diff(f, i - 1, j, t + h, x, symvals) -
                central_diff(f, i - 1, j, t - h, x, symvals)) /
               (2 * h);
    if (j > 0)
        return (central_diff(f, i, j - 1, t, x + h, symvals) -
                central_diff(f, i, j - 1, t, x - h, symvals)) /
               (2 * h);
    return f.eval(t, x, symvals);
}

}  // namespace

double numeric_residual(const WaveFunction& psi, const DiffOp& omega, int samples,
                        std::uint64_t seed, const std::vector<double>& symvals) {
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() {
        // 53 uniform mantissa bits mapped into [0, 1).
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        double t = 2.0 * unit() - 1.0;
        double x = 4.0 * unit() - 2.0;
        double acc = 0.0;
        for (const DiffTerm& d : omega.terms())
            acc += d.coeff.eval(t, x, symvals) * central_diff(psi, d.dt, d.dx, t, x, symvals);
        double scale = std::max(std::abs(psi.eval(t, x, symvals)), 1.0);
        worst = std::max(worst, std::abs(acc) / scale);
    }
    return worst;
}

}  // namespace schsym
