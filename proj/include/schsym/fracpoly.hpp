#pragma once

#include <map>
#include <optional>
#include <string>

#include "schsym/symbols.hpp"

namespace schsym {

// Multivariate polynomial in the declared symbols with rational coefficients.
// Exponents are non-negative; the zero polynomial has an empty term map.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(Rational c);
    explicit Poly(const MonomialTerm& t);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly symbol(std::size_t index);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // Throws unless the polynomial is constant.
    Rational constant_value() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& c) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // Leading term under the padded-lexicographic monomial order.
    const std::pair<const Monomial, Rational>& leading() const;

    // gcd of the coefficients, with the sign of the leading coefficient.
    Rational content() const;
    // Componentwise minimum of the exponent vectors over all terms.
    Monomial monomial_content() const;

    void insert(const Monomial& m, const Rational& c);

  private:
    TermMap terms_;
};

// Exact quotient p / q, or nullopt when q does not divide p.
std::optional<Poly> try_divexact(const Poly& p, const Poly& q);

std::string format_poly(const Poly& p, const SymbolTable& table);

// Ratio of two polynomials kept in a lightly reduced canonical form: the
// denominator has content one and positive leading coefficient, shared
// monomial factors are cancelled, and exact divisibility collapses the
// denominator entirely.
class FracPoly {
  public:
    FracPoly() : num_(), den_(Poly::one()) {}
    explicit FracPoly(Rational c) : num_(Poly(std::move(c))), den_(Poly::one()) {}
    explicit FracPoly(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    FracPoly(Poly num, Poly den);

    static FracPoly zero() { return FracPoly(); }
    static FracPoly one() { return FracPoly(Rational(1)); }
    static FracPoly symbol(std::size_t index) { return FracPoly(Poly::symbol(index)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational as_rational() const;

    FracPoly operator+(const FracPoly& o) const;
    FracPoly operator-(const FracPoly& o) const;
    FracPoly operator-() const;
    FracPoly operator*(const FracPoly& o) const;
    // Throws on division by zero.
    FracPoly operator/(const FracPoly& o) const;
    bool operator==(const FracPoly& o) const;
    bool operator!=(const FracPoly& o) const { return !(*this == o); }

    // Replaces one symbol by a rational function everywhere it occurs.
    FracPoly substitute(std::size_t index, const FracPoly& value) const;

  private:
    void reduce();

    Poly num_;
    Poly den_;
};

FracPoly substitute(const Poly& p, std::size_t index, const FracPoly& value);

std::string format_frac(const FracPoly& f, const SymbolTable& table);

}  // namespace schsym
