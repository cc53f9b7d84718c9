#include "schsym/ring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schsym {

// ---------------------------------------------------------------- ExpArg ---

namespace {

bool entry_key_less(const ExpEntry& a, const ExpEntry& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.mono < b.mono;
}

}  // namespace

ExpArg ExpArg::single(Rational coeff, Monomial mono, ExpBase base) {
    return merged({ExpEntry{std::move(coeff), std::move(mono), base}});
}

ExpArg ExpArg::merged(std::vector<ExpEntry> entries) {
    std::sort(entries.begin(), entries.end(), entry_key_less);
    ExpArg out;
    for (auto& e : entries) {
        if (!out.entries_.empty() && out.entries_.back().base == e.base &&
            out.entries_.back().mono == e.mono) {
            out.entries_.back().coeff += e.coeff;
        } else {
            out.entries_.push_back(std::move(e));
        }
    }
    std::erase_if(out.entries_, [](const ExpEntry& e) { return e.coeff.is_zero(); });
    return out;
}

ExpArg ExpArg::operator+(const ExpArg& o) const {
    std::vector<ExpEntry> all = entries_;
    all.insert(all.end(), o.entries_.begin(), o.entries_.end());
    return merged(std::move(all));
}

ExpArg ExpArg::operator-() const {
    ExpArg out = *this;
    for (auto& e : out.entries_) e.coeff = -e.coeff;
    return out;
}

bool ExpArg::operator<(const ExpArg& o) const {
    std::size_t n = std::min(entries_.size(), o.entries_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const ExpEntry& a = entries_[i];
        const ExpEntry& b = o.entries_[i];
        if (a.base != b.base) return a.base < b.base;
        if (a.mono != b.mono) return a.mono < b.mono;
        if (a.coeff != b.coeff) return a.coeff < b.coeff;
    }
    return entries_.size() < o.entries_.size();
}

// -------------------------------------------------------------- RingTerm ---

bool RingTerm::key_less(const RingTerm& o) const {
    if (mono != o.mono) return mono < o.mono;
    if (tdeg != o.tdeg) return tdeg < o.tdeg;
    if (xdeg != o.xdeg) return xdeg < o.xdeg;
    return exp < o.exp;
}

std::optional<Rational> term_weight(const RingTerm& term, const SymbolTable& table) {
    // Both admissible exponential bases (t and x^2) carry weight -1, so an
    // entry is neutral exactly when its symbol monomial has weight +1.
    for (const ExpEntry& e : term.exp.entries()) {
        if (table.weight_of(e.mono) != Rational(1)) return std::nullopt;
    }
    return table.weight_of(term.mono) - Rational(term.tdeg) - Rational(term.xdeg, 2);
}

// ----------------------------------------------------------- RingElement ---

RingElement::RingElement(std::vector<RingTerm> terms) {
    for (const RingTerm& t : terms) {
        if (t.tdeg < 0 || t.xdeg < 0)
            throw std::invalid_argument("ring: negative t or x degree");
    }
    std::sort(terms.begin(), terms.end(),
              [](const RingTerm& a, const RingTerm& b) { return a.key_less(b); });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().same_key(t))
            terms_.back().coeff += t.coeff;
        else
            terms_.push_back(std::move(t));
    }
    std::erase_if(terms_, [](const RingTerm& t) { return t.coeff.is_zero(); });
}

RingElement RingElement::constant(Rational c) {
    return RingElement({RingTerm{std::move(c), Monomial::unit(), 0, 0, ExpArg()}});
}

RingElement RingElement::symbol(std::size_t index, int exp) {
    return RingElement({RingTerm{Rational(1), Monomial::sym(index, exp), 0, 0, ExpArg()}});
}

RingElement RingElement::monomial(const MonomialTerm& mt) {
    return RingElement({RingTerm{mt.coeff, mt.mono, 0, 0, ExpArg()}});
}

RingElement RingElement::t_pow(int k) {
    if (k < 0) throw std::invalid_argument("ring: negative power of t");
    return RingElement({RingTerm{Rational(1), Monomial::unit(), k, 0, ExpArg()}});
}

RingElement RingElement::x_pow(int k) {
    if (k < 0) throw std::invalid_argument("ring: negative power of x");
    return RingElement({RingTerm{Rational(1), Monomial::unit(), 0, k, ExpArg()}});
}

RingElement RingElement::exponential(const ExpArg& arg) {
    return RingElement({RingTerm{Rational(1), Monomial::unit(), 0, 0, arg}});
}

RingElement RingElement::term(Rational coeff, Monomial mono, int tdeg, int xdeg, ExpArg exp) {
    return RingElement({RingTerm{std::move(coeff), std::move(mono), tdeg, xdeg, std::move(exp)}});
}

bool RingElement::is_one() const {
    return terms_.size() == 1 && terms_[0].coeff.is_one() && terms_[0].mono.is_unit() &&
           terms_[0].tdeg == 0 && terms_[0].xdeg == 0 && terms_[0].exp.empty();
}

std::optional<Rational> RingElement::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].mono.is_unit() && terms_[0].tdeg == 0 &&
        terms_[0].xdeg == 0 && terms_[0].exp.empty())
        return terms_[0].coeff;
    return std::nullopt;
}

std::optional<MonomialTerm> RingElement::as_monomial_term() const {
    if (terms_.empty()) return MonomialTerm{Rational(0), Monomial::unit()};
    if (terms_.size() == 1 && terms_[0].tdeg == 0 && terms_[0].xdeg == 0 &&
        terms_[0].exp.empty())
        return MonomialTerm{terms_[0].coeff, terms_[0].mono};
    return std::nullopt;
}

std::optional<RingElement> RingElement::inverse_term() const {
    auto mt = as_monomial_term();
    if (!mt || mt->coeff.is_zero()) return std::nullopt;
    return monomial(MonomialTerm{Rational(1) / mt->coeff, mt->mono.inverse()});
}

RingElement RingElement::operator+(const RingElement& o) const {
    std::vector<RingTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return RingElement(std::move(all));
}

RingElement RingElement::operator-(const RingElement& o) const {
    return *this + (-o);
}

RingElement RingElement::operator-() const {
    RingElement out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

RingElement RingElement::operator*(const RingElement& o) const {
    std::vector<RingTerm> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const RingTerm& p : terms_) {
        for (const RingTerm& q : o.terms_) {
            prod.push_back(RingTerm{p.coeff * q.coeff, p.mono * q.mono,
                                    p.tdeg + q.tdeg, p.xdeg + q.xdeg, p.exp + q.exp});
        }
    }
    return RingElement(std::move(prod));
}

RingElement RingElement::scaled(const Rational& c) const {
    if (c.is_zero()) return zero();
    RingElement out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

RingElement RingElement::pow(unsigned k) const {
    RingElement out = one();
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
}

RingElement RingElement::derive(Var v) const {
    std::vector<RingTerm> out;
    for (const RingTerm& t : terms_) {
        if (v == Var::t) {
            if (t.tdeg > 0)
                out.push_back(RingTerm{t.coeff * Rational(t.tdeg), t.mono,
                                       t.tdeg - 1, t.xdeg, t.exp});
            for (const ExpEntry& e : t.exp.entries()) {
                if (e.base != ExpBase::t) continue;
                out.push_back(RingTerm{t.coeff * e.coeff, t.mono * e.mono,
                                       t.tdeg, t.xdeg, t.exp});
            }
        } else {
            if (t.xdeg > 0)
                out.push_back(RingTerm{t.coeff * Rational(t.xdeg), t.mono,
                                       t.tdeg, t.xdeg - 1, t.exp});
            for (const ExpEntry& e : t.exp.entries()) {
                if (e.base != ExpBase::x2) continue;
                out.push_back(RingTerm{t.coeff * e.coeff * Rational(2), t.mono * e.mono,
                                       t.tdeg, t.xdeg + 1, t.exp});
            }
        }
    }
    return RingElement(std::move(out));
}

RingElement RingElement::substitute(std::size_t sym, const MonomialTerm& value) const {
    if (value.mono.exponent(sym) != 0)
        throw std::invalid_argument("ring: substitution value mentions the substituted symbol");

    auto rewrite_mono = [&](const Rational& c, const Monomial& m) -> MonomialTerm {
        int e = m.exponent(sym);
        if (e == 0) return MonomialTerm{c, m};
        if (value.coeff.is_zero() && e < 0)
            throw std::domain_error("ring: zero substituted into a negative power");
        return MonomialTerm{c * value.coeff.pow(e),
                            m * Monomial::sym(sym, -e) * value.mono.pow(e)};
    };

    std::vector<RingTerm> out;
    for (const RingTerm& t : terms_) {
        MonomialTerm head = rewrite_mono(t.coeff, t.mono);
        std::vector<ExpEntry> entries;
        for (const ExpEntry& e : t.exp.entries()) {
            MonomialTerm sub = rewrite_mono(e.coeff, e.mono);
            if (!sub.coeff.is_zero())
                entries.push_back(ExpEntry{sub.coeff, sub.mono, e.base});
        }
        out.push_back(RingTerm{head.coeff, head.mono, t.tdeg, t.xdeg,
                               ExpArg::merged(std::move(entries))});
    }
    return RingElement(std::move(out));
}

std::optional<Rational> RingElement::weight(const SymbolTable& table) const {
    if (terms_.empty()) return std::nullopt;
    std::optional<Rational> w;
    for (const RingTerm& t : terms_) {
        auto tw = term_weight(t, table);
        if (!tw) return std::nullopt;
        if (w && *w != *tw) return std::nullopt;
        w = tw;
    }
    return w;
}

namespace {

double mono_eval(const Monomial& m, const std::vector<double>& symvals) {
    double v = 1.0;
    for (std::size_t i = 0; i < m.width(); ++i) {
        if (m.exponent(i) == 0) continue;
        if (i >= symvals.size())
            throw std::invalid_argument("ring: eval is missing a symbol value");
        v *= std::pow(symvals[i], m.exponent(i));
    }
    return v;
}

}  // namespace

double RingElement::eval(double t, double x, const std::vector<double>& symvals) const {
    double sum = 0.0;
    for (const RingTerm& term : terms_) {
        double v = term.coeff.to_double() * mono_eval(term.mono, symvals);
        v *= std::pow(t, term.tdeg) * std::pow(x, term.xdeg);
        double arg = 0.0;
        for (const ExpEntry& e : term.exp.entries()) {
            double base = e.base == ExpBase::t ? t : x * x;
            arg += e.coeff.to_double() * mono_eval(e.mono, symvals) * base;
        }
        sum += v * std::exp(arg);
    }
    return sum;
}

}  // namespace schsym
