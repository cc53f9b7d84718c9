#include "schsym/diffop.hpp"

#include <algorithm>
#include <stdexcept>

namespace schsym {

namespace {

bool term_desc(const DiffTerm& a, const DiffTerm& b) {
    if (a.dt != b.dt) return a.dt > b.dt;
    return a.dx > b.dx;
}

Rational binomial(int n, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
    return r;
}

}  // namespace

DiffOp::DiffOp(std::vector<DiffTerm> terms) {
    for (const DiffTerm& t : terms) {
        if (t.dt < 0 || t.dx < 0)
            throw std::invalid_argument("diffop: negative derivative order");
    }
    std::sort(terms.begin(), terms.end(), term_desc);
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().dt == t.dt && terms_.back().dx == t.dx)
            terms_.back().coeff = terms_.back().coeff + t.coeff;
        else
            terms_.push_back(std::move(t));
    }
    std::erase_if(terms_, [](const DiffTerm& t) { return t.coeff.is_zero(); });
}

DiffOp DiffOp::from_ring(RingElement c) {
    return DiffOp({DiffTerm{std::move(c), 0, 0}});
}

DiffOp DiffOp::term(RingElement coeff, int dt, int dx) {
    return DiffOp({DiffTerm{std::move(coeff), dt, dx}});
}

int DiffOp::max_dt() const {
    return terms_.empty() ? 0 : terms_.front().dt;
}

RingElement DiffOp::coefficient(int dt, int dx) const {
    for (const DiffTerm& t : terms_) {
        if (t.dt == dt && t.dx == dx) return t.coeff;
    }
    return RingElement::zero();
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    std::vector<DiffTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return DiffOp(std::move(all));
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::operator-() const {
    DiffOp out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

DiffOp DiffOp::operator*(const DiffOp& o) const {
    // d_t^i d_x^j f = sum_{r<=i, s<=j} C(i,r) C(j,s) (f's mixed derivative)
    // shifted to the right; the Leibniz expansion keeps coefficients left.
    std::vector<DiffTerm> out;
    for (const DiffTerm& p : terms_) {
        for (const DiffTerm& q : o.terms_) {
            for (int r = 0; r <= p.dt; ++r) {
                RingElement dr = q.coeff;
                for (int k = 0; k < r; ++k) dr = dr.derive(Var::t);
                if (dr.is_zero()) continue;
                for (int s = 0; s <= p.dx; ++s) {
                    RingElement drs = dr;
                    for (int k = 0; k < s; ++k) drs = drs.derive(Var::x);
                    if (drs.is_zero()) continue;
                    Rational c = binomial(p.dt, r) * binomial(p.dx, s);
                    out.push_back(DiffTerm{(p.coeff * drs).scaled(c),
                                           p.dt - r + q.dt, p.dx - s + q.dx});
                }
            }
        }
    }
    return DiffOp(std::move(out));
}

DiffOp DiffOp::scaled(const Rational& c) const {
    DiffOp out = *this;
    for (auto& t : out.terms_) t.coeff = t.coeff.scaled(c);
    std::erase_if(out.terms_, [](const DiffTerm& t) { return t.coeff.is_zero(); });
    return out;
}

DiffOp DiffOp::scaled(const RingElement& c) const {
    std::vector<DiffTerm> out;
    for (const DiffTerm& t : terms_) out.push_back(DiffTerm{c * t.coeff, t.dt, t.dx});
    return DiffOp(std::move(out));
}

DiffOp DiffOp::pow(unsigned k) const {
    DiffOp out = identity();
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
}

WaveFunction DiffOp::apply(const WaveFunction& f) const {
    RingElement sum;
    for (const DiffTerm& t : terms_) {
        RingElement d = f;
        for (int k = 0; k < t.dt; ++k) d = d.derive(Var::t);
        for (int k = 0; k < t.dx; ++k) d = d.derive(Var::x);
        sum = sum + t.coeff * d;
    }
    return sum;
}

DiffOp DiffOp::substitute(std::size_t sym, const MonomialTerm& value) const {
    std::vector<DiffTerm> out;
    for (const DiffTerm& t : terms_)
        out.push_back(DiffTerm{t.coeff.substitute(sym, value), t.dt, t.dx});
    return DiffOp(std::move(out));
}

std::optional<Rational> DiffOp::grading(const SymbolTable& table) const {
    if (terms_.empty()) return std::nullopt;
    std::optional<Rational> g;
    for (const DiffTerm& t : terms_) {
        auto w = t.coeff.weight(table);
        if (!w) return std::nullopt;
        Rational tg = *w + Rational(t.dt) + Rational(t.dx, 2);
        if (g && *g != tg) return std::nullopt;
        g = tg;
    }
    return g;
}

DiffOp DiffOp::conjugate_exp(const RingElement& g) const {
    DiffOp st = d_t() - from_ring(g.derive(Var::t));
    DiffOp sx = d_x() - from_ring(g.derive(Var::x));
    DiffOp out;
    for (const DiffTerm& t : terms_) {
        out = out + (from_ring(t.coeff) * st.pow(t.dt) * sx.pow(t.dx));
    }
    return out;
}

DiffOp DiffOp::shift_x(const MonomialTerm& s) const {
    if (s.is_zero()) return *this;
    std::vector<DiffTerm> out;
    for (const DiffTerm& t : terms_) {
        std::vector<RingTerm> shifted;
        for (const RingTerm& rt : t.coeff.terms()) {
            for (const ExpEntry& e : rt.exp.entries()) {
                if (e.base == ExpBase::x2)
                    throw std::domain_error(
                        "diffop: x-shift of a Gaussian coefficient leaves the ring");
            }
            for (int k = 0; k <= rt.xdeg; ++k) {
                int j = rt.xdeg - k;
                Rational c = binomial(rt.xdeg, k) * rt.coeff * s.coeff.pow(j);
                shifted.push_back(RingTerm{c, rt.mono * s.mono.pow(j), rt.tdeg, k, rt.exp});
            }
        }
        out.push_back(DiffTerm{RingElement(std::move(shifted)), t.dt, t.dx});
    }
    return DiffOp(std::move(out));
}

DiffOp bracket(const DiffOp& a, const DiffOp& b, BracketKind kind) {
    DiffOp ab = a * b;
    DiffOp ba = b * a;
    return kind == BracketKind::commutator ? ab - ba : ab + ba;
}

Reduction reduce_mod(const DiffOp& p, const DiffOp& omega) {
    if (omega.is_zero() || omega.terms().front().dt != 1 ||
        omega.terms().front().dx != 0 || !omega.terms().front().coeff.is_one())
        throw std::invalid_argument("reduce: divisor must be d_t + (d_t-free terms)");
    for (std::size_t i = 1; i < omega.terms().size(); ++i) {
        if (omega.terms()[i].dt != 0)
            throw std::invalid_argument("reduce: divisor must be d_t + (d_t-free terms)");
    }

    Reduction red;
    DiffOp r = p;
    while (!r.is_zero() && r.terms().front().dt >= 1) {
        const DiffTerm& lead = r.terms().front();
        DiffOp q = DiffOp::term(lead.coeff, lead.dt - 1, lead.dx);
        red.quotient = red.quotient + q;
        r = r - q * omega;
    }
    red.remainder = r;
    return red;
}

}  // namespace schsym
