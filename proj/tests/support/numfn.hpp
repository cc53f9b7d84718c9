#pragma once

// Independent cross-check model for the operator algebra. Functions of (t, x)
// of the shape
//
//     sum_k  c_k * t^i * x^j * exp(g*x^2 + d*t)
//
// with rational c, g, d are closed under d/dt, d/dx and products, and every
// ring coefficient evaluates into the family exactly once the symbols are
// pinned to rational values. The derivative rules here are written from
// scratch so the model shares no code path with RingElement::derive or
// DiffOp composition.

#include "schsym/diffop.hpp"
#include "schsym/ring.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace numfn {

using schsym::Rational;

// Pinned rational values, indexed like the symbol table in use. All values
// must be nonzero so Laurent monomials evaluate.
using Values = std::vector<Rational>;

// a, nu, omega, u, b for SymbolTable::standard().
inline Values standard_values() {
    return {Rational(-1), Rational(1, 2), Rational(3), Rational(2), Rational(1, 5)};
}

inline Rational eval_monomial(const schsym::Monomial& m, const Values& vals) {
    Rational r(1);
    for (std::size_t i = 0; i < m.width(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (i >= vals.size()) throw std::invalid_argument("numfn: symbol has no pinned value");
        if (vals[i].is_zero()) throw std::invalid_argument("numfn: pinned value must be nonzero");
        Rational base = vals[i];
        if (e < 0) {
            base = Rational(1) / base;
            e = -e;
        }
        for (int k = 0; k < e; ++k) r *= base;
    }
    return r;
}

class Fn {
public:
    // t^i * x^j * exp(g*x^2 + d*t) identified by (i, j, g, d).
    struct Key {
        int i = 0;
        int j = 0;
        Rational g;
        Rational d;

        bool operator<(const Key& o) const {
            if (i != o.i) return i < o.i;
            if (j != o.j) return j < o.j;
            if (g != o.g) return g < o.g;
            return d < o.d;
        }
        bool operator==(const Key& o) const {
            return i == o.i && j == o.j && g == o.g && d == o.d;
        }
    };

    Fn() = default;

    static Fn term(Rational c, int i, int j, Rational g = Rational(0),
                   Rational d = Rational(0)) {
        if (i < 0 || j < 0) throw std::invalid_argument("numfn: negative power");
        Fn f;
        f.add_term(Key{i, j, std::move(g), std::move(d)}, std::move(c));
        return f;
    }

    static Fn one() { return term(Rational(1), 0, 0); }

    bool is_zero() const { return terms_.empty(); }

    bool operator==(const Fn& o) const { return terms_ == o.terms_; }
    bool operator!=(const Fn& o) const { return !(*this == o); }

    Fn operator+(const Fn& o) const {
        Fn r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }

    Fn operator-(const Fn& o) const {
        Fn r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
        return r;
    }

    Fn scaled(const Rational& c) const {
        Fn r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
        return r;
    }

    Fn operator*(const Fn& o) const {
        Fn r;
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_)
                r.add_term(Key{ka.i + kb.i, ka.j + kb.j, ka.g + kb.g, ka.d + kb.d},
                           ca * cb);
        return r;
    }

    Fn dt() const {
        Fn r;
        for (const auto& [k, c] : terms_) {
            if (k.i > 0) r.add_term(Key{k.i - 1, k.j, k.g, k.d}, c * Rational(k.i));
            if (!k.d.is_zero()) r.add_term(k, c * k.d);
        }
        return r;
    }

    Fn dx() const {
        Fn r;
        for (const auto& [k, c] : terms_) {
            if (k.j > 0) r.add_term(Key{k.i, k.j - 1, k.g, k.d}, c * Rational(k.j));
            if (!k.g.is_zero())
                r.add_term(Key{k.i, k.j + 1, k.g, k.d}, c * k.g * Rational(2));
        }
        return r;
    }

    double eval(double t, double x) const {
        double acc = 0.0;
        for (const auto& [k, c] : terms_) {
            double v = c.to_double();
            for (int n = 0; n < k.i; ++n) v *= t;
            for (int n = 0; n < k.j; ++n) v *= x;
            v *= std::exp(k.g.to_double() * x * x + k.d.to_double() * t);
            acc += v;
        }
        return acc;
    }

private:
    void add_term(const Key& k, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Key, Rational> terms_;
};

// Evaluates a ring element into the family at pinned symbol values.
inline Fn from_ring(const schsym::RingElement& e, const Values& vals) {
    Fn out;
    for (const auto& term : e.terms()) {
        Rational g(0), d(0);
        for (const auto& entry : term.exp.entries()) {
            Rational c = entry.coeff * eval_monomial(entry.mono, vals);
            if (entry.base == schsym::ExpBase::x2)
                g += c;
            else
                d += c;
        }
        out = out + Fn::term(term.coeff * eval_monomial(term.mono, vals),
                             term.tdeg, term.xdeg, g, d);
    }
    return out;
}

// Applies an operator to a model function, coefficients evaluated at the
// pinned symbol values: sum over terms of coeff * (d/dt)^dt (d/dx)^dx f.
inline Fn apply(const schsym::DiffOp& op, const Fn& f, const Values& vals) {
    Fn out;
    for (const auto& term : op.terms()) {
        Fn g = f;
        for (int n = 0; n < term.dt; ++n) g = g.dt();
        for (int n = 0; n < term.dx; ++n) g = g.dx();
        out = out + from_ring(term.coeff, vals) * g;
    }
    return out;
}

}  // namespace numfn
