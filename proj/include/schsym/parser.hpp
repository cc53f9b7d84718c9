#pragma once

// Expression front-end: text -> syntax tree -> DiffOp. `*` is operator
// composition (left-associative), precedence ^ > unary - > * and / > + and -.

#include "schsym/diffop.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schsym {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t token_index, std::size_t offset)
        : std::runtime_error(msg), token_(token_index), offset_(offset) {}

    std::size_t token_index() const { return token_; }  // 1-based
    std::size_t offset() const { return offset_; }      // byte offset in the input

private:
    std::size_t token_;
    std::size_t offset_;
};

struct ExprAst {
    enum class Kind {
        number, symbol, t_var, x_var, dt_op, dx_op, exp_fn,
        add, sub, mul, div, pow, neg
    };

    Kind kind;
    Rational value;     // number
    std::string name;   // symbol
    int exponent = 0;   // pow
    std::unique_ptr<ExprAst> lhs, rhs;

    std::size_t token = 0;   // 1-based position of the defining token
    std::size_t offset = 0;  // byte offset of that token
};

ExprAst parse_ast(const std::string& text);
DiffOp lower_ast(const ExprAst& ast, const SymbolTable& table);
DiffOp parse_expr(const std::string& text, const SymbolTable& table);

// Line-oriented definition files: optional leading "symbols: ..." header,
// then "name = expression" entries; '#' starts a comment.
struct DefFile {
    SymbolTable symbols;
    std::vector<std::pair<std::string, DiffOp>> entries;

    const DiffOp* find(const std::string& name) const;
};

DefFile parse_defs(const std::string& text);
DefFile load_defs(const std::string& path);

}  // namespace schsym
