#pragma once

// Symbolic constants and their Laurent monomials. Symbols are identified by
// index into a SymbolTable; a Monomial is the exponent vector over that table.

#include "schsym/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schsym {

// Exponent vector over the declared symbols; negative exponents are allowed.
// Trailing zeros are trimmed so equal monomials compare equal regardless of
// how many symbols were touched while building them.
class Monomial {
public:
    Monomial() = default;

    static Monomial unit() { return Monomial(); }

    static Monomial sym(std::size_t index, int exp = 1) {
        Monomial m;
        if (exp != 0) {
            m.e_.assign(index + 1, 0);
            m.e_[index] = exp;
        }
        return m;
    }

    int exponent(std::size_t i) const {
        return i < e_.size() ? e_[i] : 0;
    }

    std::size_t width() const { return e_.size(); }
    bool is_unit() const { return e_.empty(); }

    Monomial operator*(const Monomial& o) const {
        Monomial m;
        m.e_.resize(std::max(e_.size(), o.e_.size()), 0);
        for (std::size_t i = 0; i < m.e_.size(); ++i)
            m.e_[i] = exponent(i) + o.exponent(i);
        m.trim();
        return m;
    }

    Monomial pow(int k) const {
        Monomial m;
        if (k != 0) {
            m.e_ = e_;
            for (int& e : m.e_) e *= k;
        }
        return m;
    }

    Monomial inverse() const { return pow(-1); }

    bool nonnegative() const {
        return std::all_of(e_.begin(), e_.end(), [](int e) { return e >= 0; });
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    // Lexicographic over the padded exponent vectors.
    bool operator<(const Monomial& o) const {
        std::size_t n = std::max(e_.size(), o.e_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (exponent(i) != o.exponent(i)) return exponent(i) < o.exponent(i);
        }
        return false;
    }

private:
    void trim() {
        while (!e_.empty() && e_.back() == 0) e_.pop_back();
    }

    std::vector<int> e_;
};

// A scaled monomial c * m. Small enough to pass around by value; several
// interfaces (substitution values, eigenvalues, shift amounts) use it.
struct MonomialTerm {
    Rational coeff;
    Monomial mono;

    bool is_zero() const { return coeff.is_zero(); }
    bool operator==(const MonomialTerm& o) const {
        return coeff == o.coeff && mono == o.mono;
    }
};

// Declared symbols, in order, each with a scaling weight used by the operator
// grading. Names must be unique identifiers and must avoid the reserved
// lexical names t, x, Dt, Dx, exp.
class SymbolTable {
public:
    SymbolTable() = default;

    SymbolTable(std::vector<std::string> names, std::vector<Rational> weights)
        : names_(std::move(names)), weights_(std::move(weights)) {
        if (names_.size() != weights_.size())
            throw std::invalid_argument("symbol table: names/weights size mismatch");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (reserved(names_[i]))
                throw std::invalid_argument("symbol table: reserved name '" + names_[i] + "'");
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("symbol table: duplicate name '" + names_[i] + "'");
        }
    }

    // Symbols used by the bundled operator families, with the weights that
    // make each family member scale homogeneously.
    static SymbolTable standard() {
        return SymbolTable(
            {"a", "nu", "omega", "u", "b"},
            {Rational(0), Rational(1), Rational(3, 2), Rational(1), Rational(-1, 2)});
    }

    // Builds a table from names alone, attaching known weights where the
    // name matches a standard symbol and weight 0 otherwise.
    static SymbolTable from_names(const std::vector<std::string>& names) {
        SymbolTable std_table = standard();
        std::vector<Rational> weights;
        weights.reserve(names.size());
        for (const auto& n : names) {
            auto i = std_table.index(n);
            weights.push_back(i ? std_table.weight(*i) : Rational(0));
        }
        return SymbolTable(names, weights);
    }

    static bool reserved(std::string_view name) {
        return name == "t" || name == "x" || name == "Dt" || name == "Dx" || name == "exp";
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const Rational& weight(std::size_t i) const { return weights_.at(i); }

    std::optional<std::size_t> index(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    // Sum of exponent * weight over the table.
    Rational weight_of(const Monomial& m) const {
        Rational w(0);
        for (std::size_t i = 0; i < m.width(); ++i) {
            if (m.exponent(i) == 0) continue;
            if (i >= names_.size())
                throw std::invalid_argument("symbol table: monomial refers to undeclared symbol");
            w += weights_[i] * Rational(m.exponent(i));
        }
        return w;
    }

    bool operator==(const SymbolTable& o) const {
        return names_ == o.names_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Rational> weights_;
};

}  // namespace schsym
