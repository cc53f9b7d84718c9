#pragma once

// Coefficient ring for the operator algebra: finite sums of
//
//     rational * symbol-monomial * t^a * x^b * exp(argument)
//
// where the exponential argument is a sum of symbol-monomial multiples of t
// and of x^2. Elements are kept in a canonical sorted-term normal form, so
// equality is term-by-term comparison.

#include "schsym/rational.hpp"
#include "schsym/symbols.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace schsym {

enum class Var : std::uint8_t { t, x };

// One additive piece of an exponential argument: coeff * mono * t, or
// coeff * mono * x^2.
enum class ExpBase : std::uint8_t { t, x2 };

struct ExpEntry {
    Rational coeff;
    Monomial mono;
    ExpBase base = ExpBase::t;

    bool operator==(const ExpEntry& o) const {
        return base == o.base && mono == o.mono && coeff == o.coeff;
    }
};

// Exponential argument in merged form: entries sorted by (base, mono), one
// entry per key, zero coefficients dropped. Empty means exp(0) = 1.
class ExpArg {
public:
    ExpArg() = default;
    static ExpArg single(Rational coeff, Monomial mono, ExpBase base);
    static ExpArg merged(std::vector<ExpEntry> entries);

    bool empty() const { return entries_.empty(); }
    const std::vector<ExpEntry>& entries() const { return entries_; }

    ExpArg operator+(const ExpArg& o) const;
    ExpArg operator-() const;

    bool operator==(const ExpArg& o) const { return entries_ == o.entries_; }
    bool operator!=(const ExpArg& o) const { return !(*this == o); }
    bool operator<(const ExpArg& o) const;

private:
    std::vector<ExpEntry> entries_;
};

struct RingTerm {
    Rational coeff;
    Monomial mono;
    int tdeg = 0;   // >= 0
    int xdeg = 0;   // >= 0
    ExpArg exp;

    // Key identity: everything but the rational coefficient.
    bool same_key(const RingTerm& o) const {
        return tdeg == o.tdeg && xdeg == o.xdeg && mono == o.mono && exp == o.exp;
    }
    bool key_less(const RingTerm& o) const;
};

class RingElement {
public:
    RingElement() = default;

    // Normalizes: sorts by term key, merges equal keys, drops zeros.
    explicit RingElement(std::vector<RingTerm> terms);

    static RingElement zero() { return RingElement(); }
    static RingElement one() { return constant(Rational(1)); }
    static RingElement constant(Rational c);
    static RingElement symbol(std::size_t index, int exp = 1);
    static RingElement monomial(const MonomialTerm& mt);
    static RingElement t_pow(int k);
    static RingElement x_pow(int k);
    static RingElement exponential(const ExpArg& arg);
    static RingElement term(Rational coeff, Monomial mono, int tdeg, int xdeg,
                            ExpArg exp = ExpArg());

    const std::vector<RingTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // True when the element is a single rational with no other factors.
    std::optional<Rational> as_rational() const;

    // Inverse of a one-term element carrying no t, x, or exponential factor;
    // nullopt when no such inverse exists in the ring.
    std::optional<RingElement> inverse_term() const;

    // The coefficient/monomial pair of a one-term element with no t, x, or
    // exponential factor; nullopt otherwise.
    std::optional<MonomialTerm> as_monomial_term() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement& o) const;
    RingElement scaled(const Rational& c) const;
    RingElement pow(unsigned k) const;

    RingElement derive(Var v) const;

    // Replaces a symbol by coeff*mono everywhere, including inside
    // exponential arguments. The value must not mention the substituted
    // symbol; a zero value is rejected if the symbol occurs with a negative
    // exponent anywhere.
    RingElement substitute(std::size_t sym, const MonomialTerm& value) const;

    // Scaling weight of the element, when every term carries the same one.
    // Terms inside exp() must be weight-neutral for a weight to exist at all.
    std::optional<Rational> weight(const SymbolTable& table) const;

    double eval(double t, double x, const std::vector<double>& symvals) const;

    bool operator==(const RingElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

private:
    std::vector<RingTerm> terms_;
};

inline bool operator==(const RingTerm& a, const RingTerm& b) {
    return a.coeff == b.coeff && a.same_key(b);
}

// Weight of a single term under the table's symbol weights, nullopt when an
// exponential entry is not weight-neutral. Shared with the operator grading.
std::optional<Rational> term_weight(const RingTerm& term, const SymbolTable& table);

}  // namespace schsym
