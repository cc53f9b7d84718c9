#include "schsym/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace schsym {

namespace {

struct Token {
    enum class Kind { integer, ident, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t offset = 0;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Kind::integer, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Token::Kind::ident, s.substr(start, i - start), start});
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::plus; break;
            case '-': k = Token::Kind::minus; break;
            case '*': k = Token::Kind::star; break;
            case '/': k = Token::Kind::slash; break;
            case '^': k = Token::Kind::caret; break;
            case '(': k = Token::Kind::lparen; break;
            case ')': k = Token::Kind::rparen; break;
            default:
                throw ParseError("syntax error at offset " + std::to_string(start) +
                                     ": stray character '" + std::string(1, c) + "'",
                                 out.size() + 1, start);
        }
        out.push_back({k, std::string(1, c), start});
        ++i;
    }
    out.push_back({Token::Kind::end, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprAst run() {
        ExprAst e = expression();
        if (peek().kind != Token::Kind::end) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("syntax error at token " + std::to_string(pos_ + 1) +
                             " (offset " + std::to_string(peek().offset) + "): " + what,
                         pos_ + 1, peek().offset);
    }

    ExprAst node(ExprAst::Kind kind, std::size_t token_pos) const {
        ExprAst n;
        n.kind = kind;
        n.token = token_pos + 1;
        n.offset = tokens_[token_pos].offset;
        return n;
    }

    ExprAst binary(ExprAst::Kind kind, ExprAst a, ExprAst b, std::size_t token_pos) {
        ExprAst n = node(kind, token_pos);
        n.lhs = std::make_unique<ExprAst>(std::move(a));
        n.rhs = std::make_unique<ExprAst>(std::move(b));
        return n;
    }

    ExprAst expression() {
        ExprAst e = term();
        while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
            std::size_t at = pos_;
            bool add = advance().kind == Token::Kind::plus;
            e = binary(add ? ExprAst::Kind::add : ExprAst::Kind::sub, std::move(e), term(), at);
        }
        return e;
    }

    ExprAst term() {
        ExprAst e = unary();
        while (peek().kind == Token::Kind::star || peek().kind == Token::Kind::slash) {
            std::size_t at = pos_;
            bool mul = advance().kind == Token::Kind::star;
            e = binary(mul ? ExprAst::Kind::mul : ExprAst::Kind::div, std::move(e), unary(), at);
        }
        return e;
    }

    ExprAst unary() {
        if (peek().kind == Token::Kind::minus) {
            std::size_t at = pos_;
            advance();
            ExprAst n = node(ExprAst::Kind::neg, at);
            n.lhs = std::make_unique<ExprAst>(unary());
            return n;
        }
        return power();
    }

    ExprAst power() {
        ExprAst base = primary();
        if (peek().kind != Token::Kind::caret) return base;
        std::size_t at = pos_;
        advance();
        int sign = 1;
        if (peek().kind == Token::Kind::minus) {
            advance();
            sign = -1;
        }
        if (peek().kind != Token::Kind::integer) fail("expected integer exponent");
        const Token& t = advance();
        int e;
        try {
            e = std::stoi(t.text);
        } catch (const std::out_of_range&) {
            throw ParseError("syntax error at token " + std::to_string(at + 2) +
                                 " (offset " + std::to_string(t.offset) +
                                 "): exponent out of range",
                             at + 2, t.offset);
        }
        ExprAst n = node(ExprAst::Kind::pow, at);
        n.exponent = sign * e;
        n.lhs = std::make_unique<ExprAst>(std::move(base));
        return n;
    }

    ExprAst primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::integer: {
                std::size_t at = pos_;
                advance();
                ExprAst n = node(ExprAst::Kind::number, at);
                n.value = Rational::from_string(t.text);
                return n;
            }
            case Token::Kind::ident: {
                std::size_t at = pos_;
                advance();
                if (t.text == "t") return node(ExprAst::Kind::t_var, at);
                if (t.text == "x") return node(ExprAst::Kind::x_var, at);
                if (t.text == "Dt") return node(ExprAst::Kind::dt_op, at);
                if (t.text == "Dx") return node(ExprAst::Kind::dx_op, at);
                if (t.text == "exp") {
                    if (peek().kind != Token::Kind::lparen) fail("expected '(' after exp");
                    advance();
                    ExprAst n = node(ExprAst::Kind::exp_fn, at);
                    n.lhs = std::make_unique<ExprAst>(expression());
                    if (peek().kind != Token::Kind::rparen) fail("expected ')'");
                    advance();
                    return n;
                }
                ExprAst n = node(ExprAst::Kind::symbol, at);
                n.name = t.text;
                return n;
            }
            case Token::Kind::lparen: {
                advance();
                ExprAst e = expression();
                if (peek().kind != Token::Kind::rparen) fail("expected ')'");
                advance();
                return e;
            }
            default:
                fail(t.kind == Token::Kind::end ? "unexpected end of input"
                                                : "unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

[[noreturn]] void lower_fail(const ExprAst& n, const std::string& what) {
    throw ParseError("error at token " + std::to_string(n.token) + " (offset " +
                         std::to_string(n.offset) + "): " + what,
                     n.token, n.offset);
}

// The operator is a plain ring element (no Dt, Dx) or nothing.
std::optional<RingElement> as_pure_ring(const DiffOp& p) {
    for (const DiffTerm& t : p.terms())
        if (t.dt != 0 || t.dx != 0) return std::nullopt;
    return p.coefficient(0, 0);
}

ExpArg to_exp_arg(const ExprAst& n, const DiffOp& inner) {
    auto ring = as_pure_ring(inner);
    if (!ring) lower_fail(n, "exp argument must not contain Dt or Dx");
    std::vector<ExpEntry> entries;
    for (const RingTerm& t : ring->terms()) {
        if (!t.exp.empty()) lower_fail(n, "nested exponentials are not representable");
        if (t.tdeg == 1 && t.xdeg == 0)
            entries.push_back(ExpEntry{t.coeff, t.mono, ExpBase::t});
        else if (t.tdeg == 0 && t.xdeg == 2)
            entries.push_back(ExpEntry{t.coeff, t.mono, ExpBase::x2});
        else
            lower_fail(n, "exp argument outside the t / x^2 span");
    }
    return ExpArg::merged(std::move(entries));
}

}  // namespace

ExprAst parse_ast(const std::string& text) { return Parser(tokenize(text)).run(); }

DiffOp lower_ast(const ExprAst& ast, const SymbolTable& table) {
    switch (ast.kind) {
        case ExprAst::Kind::number:
            return DiffOp::from_ring(RingElement::constant(ast.value));
        case ExprAst::Kind::symbol: {
            auto idx = table.index(ast.name);
            if (!idx) lower_fail(ast, "unknown symbol '" + ast.name + "'");
            return DiffOp::from_ring(RingElement::symbol(*idx));
        }
        case ExprAst::Kind::t_var:
            return DiffOp::from_ring(RingElement::t_pow(1));
        case ExprAst::Kind::x_var:
            return DiffOp::from_ring(RingElement::x_pow(1));
        case ExprAst::Kind::dt_op:
            return DiffOp::d_t();
        case ExprAst::Kind::dx_op:
            return DiffOp::d_x();
        case ExprAst::Kind::exp_fn:
            return DiffOp::from_ring(
                RingElement::exponential(to_exp_arg(ast, lower_ast(*ast.lhs, table))));
        case ExprAst::Kind::add:
            return lower_ast(*ast.lhs, table) + lower_ast(*ast.rhs, table);
        case ExprAst::Kind::sub:
            return lower_ast(*ast.lhs, table) - lower_ast(*ast.rhs, table);
        case ExprAst::Kind::mul:
            return lower_ast(*ast.lhs, table) * lower_ast(*ast.rhs, table);
        case ExprAst::Kind::div: {
            DiffOp denom = lower_ast(*ast.rhs, table);
            auto ring = as_pure_ring(denom);
            std::optional<RingElement> inv = ring ? ring->inverse_term() : std::nullopt;
            if (!inv)
                lower_fail(ast, "division only by a nonzero rational or symbol monomial");
            return lower_ast(*ast.lhs, table) * DiffOp::from_ring(*inv);
        }
        case ExprAst::Kind::pow: {
            DiffOp base = lower_ast(*ast.lhs, table);
            if (ast.exponent >= 0) return base.pow(static_cast<unsigned>(ast.exponent));
            auto ring = as_pure_ring(base);
            std::optional<RingElement> inv = ring ? ring->inverse_term() : std::nullopt;
            if (!inv)
                lower_fail(ast, "negative power of a non-invertible expression");
            return DiffOp::from_ring(inv->pow(static_cast<unsigned>(-ast.exponent)));
        }
        case ExprAst::Kind::neg:
            return -lower_ast(*ast.lhs, table);
    }
    throw std::logic_error("parser: unhandled node kind");
}

DiffOp parse_expr(const std::string& text, const SymbolTable& table) {
    return lower_ast(parse_ast(text), table);
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

const DiffOp* DefFile::find(const std::string& name) const {
    for (const auto& [n, op] : entries)
        if (n == name) return &op;
    return nullptr;
}

DefFile parse_defs(const std::string& text) {
    DefFile out;
    out.symbols = SymbolTable::standard();
    bool saw_content = false;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::size_t hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;

        auto fail = [&](const std::string& what) -> void {
            throw std::runtime_error("defs line " + std::to_string(lineno) + ": " + what);
        };

        if (!saw_content && line.rfind("symbols:", 0) == 0) {
            saw_content = true;
            std::istringstream names(line.substr(8));
            std::vector<std::string> list;
            std::string n;
            while (names >> n) list.push_back(n);
            try {
                out.symbols = SymbolTable::from_names(list);
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
            continue;
        }
        saw_content = true;

        std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'name = expression'");
        std::string name = trim(line.substr(0, eq));
        if (!valid_identifier(name)) fail("bad name '" + name + "'");
        if (SymbolTable::reserved(name)) fail("name '" + name + "' is reserved");
        for (const auto& [n, op] : out.entries)
            if (n == name) fail("duplicate name '" + name + "'");

        try {
            out.entries.emplace_back(name, parse_expr(line.substr(eq + 1), out.symbols));
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }
    return out;
}

DefFile load_defs(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open definitions file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_defs(ss.str());
}

}  // namespace schsym
