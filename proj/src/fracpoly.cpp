#include "schsym/fracpoly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace schsym {

Poly::Poly(Rational c) {
    if (!c.is_zero()) terms_.emplace(Monomial::unit(), std::move(c));
}

Poly::Poly(const MonomialTerm& t) {
    if (!t.coeff.is_zero()) {
        if (!t.mono.nonnegative())
            throw std::invalid_argument("poly: negative exponent");
        terms_.emplace(t.mono, t.coeff);
    }
}

Poly Poly::symbol(std::size_t index) {
    Poly p;
    p.terms_.emplace(Monomial::sym(index), Rational(1));
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
           terms_.begin()->second.is_one();
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("poly: not constant");
    return terms_.begin()->second;
}

void Poly::insert(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.insert(m, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.insert(m, -c);
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.insert(m1 * m2, c1 * c2);
    return out;
}

Poly Poly::scaled(const Rational& c) const {
    Poly out;
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

const std::pair<const Monomial, Rational>& Poly::leading() const {
    if (terms_.empty()) throw std::domain_error("poly: leading term of zero");
    return *terms_.rbegin();
}

Rational Poly::content() const {
    if (terms_.empty()) return Rational(0);
    Rational g(0);
    for (const auto& [m, c] : terms_) g = Rational::gcd(g, c);
    if (leading().second.is_negative()) g = -g;
    return g;
}

Monomial Poly::monomial_content() const {
    if (terms_.empty()) return Monomial::unit();
    std::size_t w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, m.width());
    Monomial g;
    for (std::size_t i = 0; i < w; ++i) {
        int e = terms_.begin()->first.exponent(i);
        for (const auto& [m, c] : terms_) e = std::min(e, m.exponent(i));
        if (e > 0) g = g * Monomial::sym(i, e);
    }
    return g;
}

namespace {

std::optional<Monomial> mono_quotient(const Monomial& p, const Monomial& q) {
    Monomial r = p * q.inverse();
    if (!r.nonnegative()) return std::nullopt;
    return r;
}

Poly divide_monomial(const Poly& p, const Monomial& g) {
    Poly out;
    Monomial inv = g.inverse();
    for (const auto& [m, c] : p.terms()) out.insert(m * inv, c);
    return out;
}

}  // namespace

std::optional<Poly> try_divexact(const Poly& p, const Poly& q) {
    if (q.is_zero()) return std::nullopt;
    Poly rem = p;
    Poly quot;
    // Leading-term elimination under the lex order; strictly decreasing
    // leading monomials guarantee termination.
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        const auto& [qm, qc] = q.leading();
        auto m = mono_quotient(rm, qm);
        if (!m) return std::nullopt;
        Rational c = rc / qc;
        quot.insert(*m, c);
        Poly piece;
        piece.insert(*m, c);
        rem = rem - piece * q;
    }
    return quot;
}

namespace {

void append_power(std::vector<std::string>& factors, const std::string& base, int e) {
    if (e == 0) return;
    if (e == 1)
        factors.push_back(base);
    else
        factors.push_back(base + "^" + std::to_string(e));
}

std::string render_term(const Rational& mag, const Monomial& m, const SymbolTable& table) {
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.width(); ++i) append_power(factors, table.name(i), m.exponent(i));
    std::string s;
    if (!mag.is_one() || factors.empty()) s = mag.str();
    for (const auto& f : factors) {
        if (!s.empty()) s += "*";
        s += f;
    }
    return s;
}

}  // namespace

std::string format_poly(const Poly& p, const SymbolTable& table) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (first)
            out += c.is_negative() ? "-" : "";
        else
            out += c.is_negative() ? " - " : " + ";
        out += render_term(c.abs(), m, table);
        first = false;
    }
    return out;
}

FracPoly::FracPoly(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("fracpoly: zero denominator");
    reduce();
}

void FracPoly::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Monomial gn = num_.monomial_content();
    Monomial gd = den_.monomial_content();
    std::size_t w = std::max(gn.width(), gd.width());
    Monomial shared;
    for (std::size_t i = 0; i < w; ++i) {
        int e = std::min(gn.exponent(i), gd.exponent(i));
        if (e > 0) shared = shared * Monomial::sym(i, e);
    }
    if (!shared.is_unit()) {
        num_ = divide_monomial(num_, shared);
        den_ = divide_monomial(den_, shared);
    }
    if (auto q = try_divexact(num_, den_)) {
        num_ = std::move(*q);
        den_ = Poly::one();
    } else if (auto r = try_divexact(den_, num_)) {
        num_ = Poly::one();
        den_ = std::move(*r);
    }
    Rational cd = den_.content();
    if (!cd.is_one()) {
        Rational inv = Rational(1) / cd;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational FracPoly::as_rational() const {
    if (!is_rational()) throw std::domain_error("fracpoly: not a rational constant");
    return num_.constant_value() / den_.constant_value();
}

FracPoly FracPoly::operator+(const FracPoly& o) const {
    return FracPoly(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FracPoly FracPoly::operator-(const FracPoly& o) const {
    return FracPoly(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FracPoly FracPoly::operator-() const { return FracPoly(-num_, den_); }

FracPoly FracPoly::operator*(const FracPoly& o) const {
    return FracPoly(num_ * o.num_, den_ * o.den_);
}

FracPoly FracPoly::operator/(const FracPoly& o) const {
    if (o.is_zero()) throw std::domain_error("fracpoly: division by zero");
    return FracPoly(num_ * o.den_, den_ * o.num_);
}

bool FracPoly::operator==(const FracPoly& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

namespace {

FracPoly frac_pow(const FracPoly& base, int k) {
    FracPoly out = FracPoly::one();
    for (int i = 0; i < k; ++i) out = out * base;
    return out;
}

}  // namespace

FracPoly substitute(const Poly& p, std::size_t index, const FracPoly& value) {
    FracPoly out = FracPoly::zero();
    for (const auto& [m, c] : p.terms()) {
        FracPoly term{c};
        for (std::size_t i = 0; i < m.width(); ++i) {
            int e = m.exponent(i);
            if (e == 0) continue;
            FracPoly base = (i == index) ? value : FracPoly::symbol(i);
            term = term * frac_pow(base, e);
        }
        out = out + term;
    }
    return out;
}

FracPoly FracPoly::substitute(std::size_t index, const FracPoly& value) const {
    FracPoly n = schsym::substitute(num_, index, value);
    FracPoly d = schsym::substitute(den_, index, value);
    return n / d;
}

std::string format_frac(const FracPoly& f, const SymbolTable& table) {
    if (f.den().is_one()) return format_poly(f.num(), table);
    if (f.num().terms().size() == 1 && f.den().terms().size() == 1) {
        const auto& [nm, nc] = *f.num().terms().begin();
        const auto& [dm, dc] = *f.den().terms().begin();
        // Reduced form keeps the denominator with content one, so dc == 1
        // and the rational part of the value lives entirely in nc.
        Rational mag = (nc / dc).abs();
        std::string numerator = render_term(Rational(mag.numerator()), nm, table);
        std::string denominator = render_term(Rational(mag.denominator()), dm, table);
        std::string out = nc.is_negative() ? "-" : "";
        out += numerator + "/";
        if (denominator.find('*') != std::string::npos)
            out += "(" + denominator + ")";
        else
            out += denominator;
        return out;
    }
    return "(" + format_poly(f.num(), table) + ")/(" + format_poly(f.den(), table) + ")";
}

}  // namespace schsym
