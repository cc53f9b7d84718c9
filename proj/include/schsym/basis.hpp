#pragma once

// Named generator sets with Z2 parity tags, shared by the closure machinery
// and the fixture constructors.

#include "schsym/diffop.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace schsym {

enum class Parity : std::uint8_t { even, odd };

inline Parity operator+(Parity a, Parity b) {
    return a == b ? Parity::even : Parity::odd;
}

struct BasisElement {
    std::string name;
    DiffOp op;
    Parity parity = Parity::even;
};

class NamedBasis {
public:
    NamedBasis() = default;

    void add(std::string name, DiffOp op, Parity parity = Parity::even) {
        if (index_of(name))
            throw std::invalid_argument("basis: duplicate generator '" + name + "'");
        elems_.push_back(BasisElement{std::move(name), std::move(op), parity});
    }

    std::size_t size() const { return elems_.size(); }
    const BasisElement& operator[](std::size_t i) const { return elems_.at(i); }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (elems_[i].name == name) return i;
        return std::nullopt;
    }

    const DiffOp& op(const std::string& name) const {
        auto i = index_of(name);
        if (!i) throw std::invalid_argument("basis: no generator '" + name + "'");
        return elems_[*i].op;
    }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

private:
    std::vector<BasisElement> elems_;
};

}  // namespace schsym
