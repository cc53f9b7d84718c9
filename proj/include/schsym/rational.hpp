#pragma once

// Exact rational arithmetic. Thin value wrapper over GMP's mpq_class so the
// rest of the library never sees expression templates or raw mpq_t.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace schsym {

// Always canonical: denominator positive, gcd(|num|, den) == 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        v_.canonicalize();
    }
    static Rational from_string(const std::string& s) {
        Rational r;
        if (r.v_.set_str(s, 10) != 0)
            throw std::domain_error("rational: cannot parse '" + s + "'");
        if (r.v_.get_den() == 0)
            throw std::domain_error("rational: zero denominator in '" + s + "'");
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational numerator() const { return Rational(mpq_class(v_.get_num())); }
    Rational denominator() const { return Rational(mpq_class(v_.get_den())); }

    // Integer exponent; negative exponents require a nonzero base.
    Rational pow(int e) const {
        if (e == 0) return Rational(1);
        if (is_zero() && e < 0) throw std::domain_error("rational: 0 to negative power");
        mpq_class base = e > 0 ? v_ : mpq_class(1 / v_);
        auto k = static_cast<unsigned long>(e > 0 ? e : -static_cast<long>(e));
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), k);
        mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), k);
        mpq_class out(n, d);
        out.canonicalize();
        return Rational(std::move(out));
    }

    // Exact square root when the value is a perfect square of a rational.
    std::optional<Rational> sqrt_exact() const {
        if (is_negative()) return std::nullopt;
        if (!mpz_perfect_square_p(v_.get_num_mpz_t()) ||
            !mpz_perfect_square_p(v_.get_den_mpz_t()))
            return std::nullopt;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), v_.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), v_.get_den_mpz_t());
        mpq_class out(n, d);
        out.canonicalize();
        return Rational(std::move(out));
    }

    // gcd of absolute values over Q: result r such that p/r and q/r are
    // coprime integers. gcd(0, x) = |x|; used for content extraction.
    static Rational gcd(const Rational& p, const Rational& q) {
        mpz_class n, d;
        mpz_gcd(n.get_mpz_t(), p.v_.get_num_mpz_t(), q.v_.get_num_mpz_t());
        mpz_lcm(d.get_mpz_t(), p.v_.get_den_mpz_t(), q.v_.get_den_mpz_t());
        if (d == 0) return Rational(0);
        mpq_class out(n, d);
        out.canonicalize();
        return Rational(std::move(out));
    }

    double to_double() const { return v_.get_d(); }

    std::string str() const { return v_.get_str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

}  // namespace schsym
