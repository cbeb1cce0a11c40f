#include <cctype>
#include <optional>
#include <variant>

#include "moyal/io.hpp"

namespace moyal {

namespace {

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        const int tcol = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            tokens.push_back({TokKind::Number, text.substr(i, j - i), line, tcol});
            col += int(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            tokens.push_back({TokKind::Ident, text.substr(i, j - i), line, tcol});
            col += int(j - i);
            i = j;
            continue;
        }
        TokKind kind;
        switch (c) {
            case '+': kind = TokKind::Plus; break;
            case '-': kind = TokKind::Minus; break;
            case '*': kind = TokKind::Star; break;
            case '/': kind = TokKind::Slash; break;
            case '^': kind = TokKind::Caret; break;
            case '(': kind = TokKind::LParen; break;
            case ')': kind = TokKind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, tcol);
        }
        tokens.push_back({kind, std::string(1, c), line, tcol});
        ++col;
        ++i;
    }
    tokens.push_back({TokKind::End, "", line, col});
    return tokens;
}

struct Ast {
    enum class Kind { Number, Imaginary, Parameter, Variable, OperatorGen, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    std::string name;            // Parameter / Variable / OperatorGen
    Integer number;              // Number
    std::uint32_t exponent = 0;  // Pow
    std::vector<Ast> children;
    int line = 1, column = 1;
};

bool is_parameter_name(const std::string& n) { return n == "hbar" || n == "s" || n == "sp"; }
bool is_variable_name(const std::string& n) {
    return n == "q" || n == "p" || n == "xi" || n == "eta";
}
bool is_operator_name(const std::string& n) {
    return n == "qh" || n == "ph" || n == "dq" || n == "dp" || n == "dxi" || n == "deta";
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

    Ast parse() {
        Ast e = parse_expr();
        expect(TokKind::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }
    void expect(TokKind kind, const std::string& what) {
        if (peek().kind != kind)
            throw ParseError("expected " + what + ", found '" + peek().text + "'", peek().line,
                             peek().column);
        ++pos_;
    }

    Ast parse_expr() {
        Ast left = parse_term();
        while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
            const Token op = next();
            Ast right = parse_term();
            Ast node;
            node.kind = op.kind == TokKind::Plus ? Ast::Kind::Add : Ast::Kind::Sub;
            node.line = op.line;
            node.column = op.column;
            node.children = {std::move(left), std::move(right)};
            left = std::move(node);
        }
        return left;
    }

    Ast parse_term() {
        Ast left = parse_factor();
        while (peek().kind == TokKind::Star || peek().kind == TokKind::Slash) {
            const Token op = next();
            Ast right = parse_factor();
            Ast node;
            node.kind = op.kind == TokKind::Star ? Ast::Kind::Mul : Ast::Kind::Div;
            node.line = op.line;
            node.column = op.column;
            node.children = {std::move(left), std::move(right)};
            left = std::move(node);
        }
        return left;
    }

    Ast parse_factor() {
        if (peek().kind == TokKind::Minus) {
            const Token op = next();
            Ast node;
            node.kind = Ast::Kind::Neg;
            node.line = op.line;
            node.column = op.column;
            node.children = {parse_factor()};
            return node;
        }
        Ast base = parse_primary();
        if (peek().kind == TokKind::Caret) {
            const Token op = next();
            if (peek().kind == TokKind::Minus)
                throw ParseError("negative exponent", peek().line, peek().column);
            if (peek().kind != TokKind::Number)
                throw ParseError("exponent must be a non-negative integer literal", peek().line,
                                 peek().column);
            const Token num = next();
            Ast node;
            node.kind = Ast::Kind::Pow;
            node.exponent = static_cast<std::uint32_t>(std::stoul(num.text));
            node.line = op.line;
            node.column = op.column;
            node.children = {std::move(base)};
            if (peek().kind == TokKind::Caret)
                throw ParseError("'^' is not associative; parenthesize", peek().line, peek().column);
            return node;
        }
        return base;
    }

    Ast parse_primary() {
        const Token tok = peek();
        if (tok.kind == TokKind::Number) {
            next();
            Ast node;
            node.kind = Ast::Kind::Number;
            node.number = Integer(tok.text);
            node.line = tok.line;
            node.column = tok.column;
            return node;
        }
        if (tok.kind == TokKind::Ident) {
            next();
            Ast node;
            node.line = tok.line;
            node.column = tok.column;
            if (tok.text == "i") {
                node.kind = Ast::Kind::Imaginary;
            } else if (is_parameter_name(tok.text)) {
                node.kind = Ast::Kind::Parameter;
                node.name = tok.text;
            } else if (is_variable_name(tok.text)) {
                node.kind = Ast::Kind::Variable;
                node.name = tok.text;
            } else if (is_operator_name(tok.text)) {
                node.kind = Ast::Kind::OperatorGen;
                node.name = tok.text;
            } else {
                throw ParseError("unknown identifier '" + tok.text + "'", tok.line, tok.column);
            }
            return node;
        }
        if (tok.kind == TokKind::LParen) {
            next();
            Ast inner = parse_expr();
            expect(TokKind::RParen, "')'");
            return inner;
        }
        throw ParseError("expected a number, name or '('", tok.line, tok.column);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

/// Constant subexpressions (divisors, --s values): numbers and i only.
GaussianRational eval_constant(const Ast& node) {
    switch (node.kind) {
        case Ast::Kind::Number:
            return GaussianRational(Rational(node.number));
        case Ast::Kind::Imaginary:
            return GaussianRational::i();
        case Ast::Kind::Neg:
            return -eval_constant(node.children[0]);
        case Ast::Kind::Add:
            return eval_constant(node.children[0]) + eval_constant(node.children[1]);
        case Ast::Kind::Sub:
            return eval_constant(node.children[0]) - eval_constant(node.children[1]);
        case Ast::Kind::Mul:
            return eval_constant(node.children[0]) * eval_constant(node.children[1]);
        case Ast::Kind::Div: {
            const GaussianRational d = eval_constant(node.children[1]);
            if (d.is_zero()) throw ParseError("division by zero", node.line, node.column);
            return eval_constant(node.children[0]) * d.inverse();
        }
        case Ast::Kind::Pow:
            return eval_constant(node.children[0]).pow(node.exponent);
        default:
            throw ParseError("expected a rational constant", node.line, node.column);
    }
}

/// Evaluation over any of the three value algebras. Ops must provide
/// make_scalar, make_variable, make_operator, add, sub, neg, mul, scale.
template <typename Ops>
typename Ops::Value eval(const Ast& node, Ops& ops) {
    using V = typename Ops::Value;
    switch (node.kind) {
        case Ast::Kind::Number:
            return ops.make_scalar(Coefficient::constant(ops.reg, GaussianRational(Rational(node.number))));
        case Ast::Kind::Imaginary:
            return ops.make_scalar(Coefficient::imaginary_unit(ops.reg));
        case Ast::Kind::Parameter:
            return ops.make_scalar(Coefficient::parameter(ops.reg, node.name));
        case Ast::Kind::Variable:
            return ops.make_variable(node);
        case Ast::Kind::OperatorGen:
            return ops.make_operator(node);
        case Ast::Kind::Neg:
            return ops.neg(eval(node.children[0], ops));
        case Ast::Kind::Add:
            return ops.add(eval(node.children[0], ops), eval(node.children[1], ops));
        case Ast::Kind::Sub:
            return ops.sub(eval(node.children[0], ops), eval(node.children[1], ops));
        case Ast::Kind::Mul:
            return ops.mul(eval(node.children[0], ops), eval(node.children[1], ops));
        case Ast::Kind::Div: {
            GaussianRational d;
            try {
                d = eval_constant(node.children[1]);
            } catch (const ParseError&) {
                throw ParseError("division is only defined by nonzero rational constants",
                                 node.line, node.column);
            }
            if (d.is_zero()) throw ParseError("division by zero", node.line, node.column);
            return ops.scale(eval(node.children[0], ops), d.inverse());
        }
        case Ast::Kind::Pow: {
            V base = eval(node.children[0], ops);
            V result = ops.make_scalar(Coefficient::one(ops.reg));
            for (std::uint32_t k = 0; k < node.exponent; ++k) result = ops.mul(result, base);
            return result;
        }
    }
    throw ParseError("malformed expression", node.line, node.column);
}

struct SymbolOps {
    using Value = Symbol;
    RegistryPtr reg;
    std::optional<PhaseSpaceVars> vars;

    PhaseSpaceVars vars_or_default() const { return vars.value_or(PhaseSpaceVars::QP); }

    Value retag(const Value& v) const {
        if (v.terms().empty() || !vars) return v;
        return v;
    }
    Value make_scalar(Coefficient c) {
        return Symbol::constant(reg, std::move(c), vars_or_default());
    }
    Value make_variable(const Ast& node) {
        const PhaseSpaceVars want =
            (node.name == "q" || node.name == "p") ? PhaseSpaceVars::QP : PhaseSpaceVars::XiEta;
        if (vars && *vars != want)
            throw ParseError("cannot mix (q,p) and (xi,eta) variables", node.line, node.column);
        vars = want;
        const std::uint32_t e0 = (node.name == "q" || node.name == "xi") ? 1 : 0;
        return Symbol::power(reg, e0, 1 - e0, want);
    }
    Value make_operator(const Ast& node) {
        throw ParseError("operator generator '" + node.name + "' in a commutative symbol", node.line,
                         node.column);
    }
    Value add(Value a, const Value& b) { return align(a) + align(b); }
    Value sub(Value a, const Value& b) { return align(a) - align(b); }
    Value neg(Value a) { return -a; }
    Value mul(Value a, const Value& b) { return align(a) * align(b); }
    Value scale(Value a, const GaussianRational& c) { return a.scaled(c); }

    /// Constants parsed before the first variable default to (q,p); align
    /// them once the pair is known.
    Value align(const Value& v) const {
        if (!vars || v.vars() == *vars) return v;
        if (!v.terms().empty() && v.total_degree() > 0)
            throw ParseError("cannot mix (q,p) and (xi,eta) variables", 1, 1);
        Symbol moved(reg, *vars);
        for (const auto& [e, c] : v.terms()) moved.add_term(e, c);
        return moved;
    }
};

struct WeylOps {
    using Value = CanonicalElement;
    RegistryPtr reg;
    SignaturePtr sig;

    Value make_scalar(Coefficient c) { return CanonicalElement::scalar(sig, std::move(c)); }
    Value make_variable(const Ast& node) {
        throw ParseError("commutative variable '" + node.name + "' in an operator expression",
                         node.line, node.column);
    }
    Value make_operator(const Ast& node) {
        if (node.name != "qh" && node.name != "ph")
            throw ParseError("derivative generator '" + node.name + "' in a Weyl-algebra expression",
                             node.line, node.column);
        return CanonicalElement::generator(sig, node.name);
    }
    Value add(Value a, const Value& b) { return a + b; }
    Value sub(Value a, const Value& b) { return a - b; }
    Value neg(Value a) { return -a; }
    Value mul(const Value& a, const Value& b) { return multiply(a, b); }
    Value scale(Value a, const GaussianRational& c) { return a.scaled(c); }
};

struct DiffOps {
    using Value = CanonicalElement;
    RegistryPtr reg;
    std::optional<PhaseSpaceVars> vars;
    SignaturePtr sig_qp, sig_xieta;

    const SignaturePtr& sig() const {
        return vars.value_or(PhaseSpaceVars::QP) == PhaseSpaceVars::QP ? sig_qp : sig_xieta;
    }
    Value make_scalar(Coefficient c) { return CanonicalElement::scalar(sig(), std::move(c)); }
    Value make_variable(const Ast& node) { return named(node, node.name); }
    Value make_operator(const Ast& node) {
        if (node.name == "qh" || node.name == "ph")
            throw ParseError("Weyl generator '" + node.name + "' in a differential operator",
                             node.line, node.column);
        return named(node, node.name);
    }
    Value named(const Ast& node, const std::string& name) {
        const bool qp = name == "q" || name == "p" || name == "dq" || name == "dp";
        const PhaseSpaceVars want = qp ? PhaseSpaceVars::QP : PhaseSpaceVars::XiEta;
        if (vars && *vars != want)
            throw ParseError("cannot mix (q,p) and (xi,eta) operators", node.line, node.column);
        vars = want;
        return CanonicalElement::generator(sig(), name);
    }
    Value add(Value a, const Value& b) { return align(a) + align(b); }
    Value sub(Value a, const Value& b) { return align(a) - align(b); }
    Value neg(Value a) { return -a; }
    Value mul(const Value& a, const Value& b) { return multiply(align(a), align(b)); }
    Value scale(Value a, const GaussianRational& c) { return a.scaled(c); }

    Value align(const Value& v) const {
        if (!vars || *v.signature() == *sig()) return v;
        if (v.total_degree() > 0) throw ParseError("cannot mix (q,p) and (xi,eta) operators", 1, 1);
        CanonicalElement moved(sig());
        for (const auto& [e, c] : v.terms()) moved.add_term(e, c);
        return moved;
    }
};

}  // namespace

Symbol parse_symbol(const std::string& text, const RegistryPtr& reg) {
    Parser parser(text);
    const Ast ast = parser.parse();
    SymbolOps ops{reg, std::nullopt};
    Symbol v = eval(ast, ops);
    return ops.align(v);
}

CanonicalElement parse_weyl(const std::string& text, const SignaturePtr& weyl_sig) {
    Parser parser(text);
    const Ast ast = parser.parse();
    WeylOps ops{weyl_sig->registry(), weyl_sig};
    return eval(ast, ops);
}

DiffOp parse_diffop(const std::string& text, const RegistryPtr& reg) {
    Parser parser(text);
    const Ast ast = parser.parse();
    DiffOps ops{reg, std::nullopt, diffop_signature_qp(reg), diffop_signature_xieta(reg)};
    CanonicalElement v = eval(ast, ops);
    return ops.align(v);
}

GaussianRational parse_gaussian(const std::string& text) {
    Parser parser(text);
    return eval_constant(parser.parse());
}

}  // namespace moyal
