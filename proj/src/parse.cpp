#include "crsym/parse.hpp"

#include <cctype>

namespace crsym {

namespace {

enum class Tok {
    End,
    Number,  // integer literal
    Imag,    // i
    Variable, // z1 z2 zb1 zb2 u w
    DerivZ1,
    DerivZ2,
    DerivW,
    Re,
    Im,
    Conj,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::End: return "end of input";
        case Tok::Number: return "number";
        case Tok::Imag: return "i";
        case Tok::Variable: return "variable";
        case Tok::DerivZ1: return "d/dz1";
        case Tok::DerivZ2: return "d/dz2";
        case Tok::DerivW: return "d/dw";
        case Tok::Re: return "Re";
        case Tok::Im: return "Im";
        case Tok::Conj: return "conj";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
    }
    return "?";
}

struct Token {
    Tok kind = Tok::End;
    std::size_t offset = 0;
    std::string text; // number literal or variable name
};

/// A parsed value: either a scalar polynomial, or a vector field.
struct Value {
    bool is_field = false;
    Poly scalar;
    Poly df[3]; // d/dz1, d/dz2, d/dw coefficients
};

class Parser {
public:
    Parser(const std::string& src, bool field_mode)
        : src_(src), field_mode_(field_mode) {
        advance();
    }

    Value parse_toplevel() {
        Value v = parse_expr();
        expect(Tok::End);
        return v;
    }

    [[noreturn]] void fail(std::size_t offset, const std::string& msg,
                           std::vector<std::string> expected = {},
                           Errc code = Errc::syntax_error) const {
        ParseDiagnostic d;
        d.offset = offset;
        d.line = 1;
        d.column = 1;
        for (std::size_t k = 0; k < offset && k < src_.size(); ++k) {
            if (src_[k] == '\n') {
                ++d.line;
                d.column = 1;
            } else {
                ++d.column;
            }
        }
        d.message = msg;
        d.expected = std::move(expected);
        throw ParseError(code, std::move(d));
    }

private:
    const std::string& src_;
    bool field_mode_;
    std::size_t pos_ = 0;
    Token cur_;

    void advance() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        cur_ = Token{};
        cur_.offset = pos_;
        if (pos_ >= src_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            cur_.kind = Tok::Number;
            cur_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            // derivative markers first: d/dz1, d/dz2, d/dw
            if (c == 'd' && src_.compare(pos_, 5, "d/dz1") == 0) {
                cur_.kind = Tok::DerivZ1;
                pos_ += 5;
                return;
            }
            if (c == 'd' && src_.compare(pos_, 5, "d/dz2") == 0) {
                cur_.kind = Tok::DerivZ2;
                pos_ += 5;
                return;
            }
            if (c == 'd' && src_.compare(pos_, 4, "d/dw") == 0) {
                cur_.kind = Tok::DerivW;
                pos_ += 4;
                return;
            }
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isalnum(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            std::string word = src_.substr(start, pos_ - start);
            if (word == "i") {
                cur_.kind = Tok::Imag;
            } else if (word == "Re") {
                cur_.kind = Tok::Re;
            } else if (word == "Im") {
                cur_.kind = Tok::Im;
            } else if (word == "conj") {
                cur_.kind = Tok::Conj;
            } else if (word == "z1" || word == "z2" || word == "zb1" || word == "zb2" ||
                       word == "u" || word == "w") {
                cur_.kind = Tok::Variable;
                cur_.text = word;
            } else {
                fail(start, "unknown name '" + word + "'");
            }
            return;
        }
        switch (c) {
            case '+': cur_.kind = Tok::Plus; break;
            case '-': cur_.kind = Tok::Minus; break;
            case '*':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
                    cur_.kind = Tok::Caret;
                    ++pos_;
                } else {
                    cur_.kind = Tok::Star;
                }
                break;
            case '/': cur_.kind = Tok::Slash; break;
            case '^': cur_.kind = Tok::Caret; break;
            case '(': cur_.kind = Tok::LParen; break;
            case ')': cur_.kind = Tok::RParen; break;
            default:
                fail(pos_, std::string("unexpected character '") + c + "'");
        }
        ++pos_;
    }

    void expect(Tok t) {
        if (cur_.kind != t)
            fail(cur_.offset, std::string("unexpected ") + tok_name(cur_.kind),
                 {tok_name(t)});
        if (t != Tok::End) advance();
    }

    Value as_scalar(const Value& v, std::size_t offset, const char* what) {
        if (v.is_field) fail(offset, std::string(what) + " requires a scalar operand");
        return v;
    }

    Value parse_expr() {
        Value acc = parse_term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            advance();
            std::size_t off2 = cur_.offset;
            Value rhs = parse_term();
            if (acc.is_field != rhs.is_field) {
                // adding 0 to a field (or a field to 0) is fine
                if (!acc.is_field && acc.scalar.is_zero()) {
                    acc.is_field = true;
                } else if (!rhs.is_field && rhs.scalar.is_zero()) {
                    rhs.is_field = true;
                } else {
                    fail(off2, "cannot add a scalar and a vector field");
                }
            }
            if (acc.is_field) {
                for (int k = 0; k < 3; ++k)
                    acc.df[k] = minus ? acc.df[k] - rhs.df[k] : acc.df[k] + rhs.df[k];
            } else {
                acc.scalar = minus ? acc.scalar - rhs.scalar : acc.scalar + rhs.scalar;
            }
        }
        return acc;
    }

    Value parse_term() {
        Value acc = parse_unary();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            bool divide = cur_.kind == Tok::Slash;
            advance();
            std::size_t off = cur_.offset;
            Value rhs = parse_unary();
            if (divide) {
                if (rhs.is_field || !rhs.scalar.is_constant())
                    fail(off, "division is only defined by a nonzero constant");
                if (rhs.scalar.is_zero()) fail(off, "division by zero");
                Gauss inv = Gauss(1) / rhs.scalar.leading().coef;
                if (acc.is_field) {
                    for (auto& p : acc.df) p = p.scaled(inv);
                } else {
                    acc.scalar = acc.scalar.scaled(inv);
                }
                continue;
            }
            if (acc.is_field && rhs.is_field)
                fail(off, "cannot multiply two vector fields");
            if (acc.is_field || rhs.is_field) {
                const Value& f = acc.is_field ? acc : rhs;
                const Value& s = acc.is_field ? rhs : acc;
                Value out;
                out.is_field = true;
                for (int k = 0; k < 3; ++k) out.df[k] = s.scalar * f.df[k];
                acc = std::move(out);
            } else {
                acc.scalar = acc.scalar * rhs.scalar;
            }
        }
        return acc;
    }

    Value parse_unary() {
        if (cur_.kind == Tok::Plus) {
            advance();
            return parse_unary();
        }
        if (cur_.kind == Tok::Minus) {
            advance();
            Value v = parse_unary();
            if (v.is_field) {
                for (auto& p : v.df) p = -p;
            } else {
                v.scalar = -v.scalar;
            }
            return v;
        }
        return parse_power();
    }

    Value parse_power() {
        std::size_t off = cur_.offset;
        Value base = parse_atom();
        if (cur_.kind == Tok::Caret) {
            advance();
            if (cur_.kind != Tok::Number)
                fail(cur_.offset, "exponent must be a nonnegative integer literal",
                     {"number"});
            if (cur_.text.size() > 6) fail(cur_.offset, "exponent is out of range");
            unsigned long e = std::stoul(cur_.text);
            advance();
            as_scalar(base, off, "exponentiation");
            base.scalar = base.scalar.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Value parse_atom() {
        Value v;
        std::size_t off = cur_.offset;
        switch (cur_.kind) {
            case Tok::Number: {
                v.scalar = Poly::constant(Gauss(rat_parse(cur_.text)));
                advance();
                return v;
            }
            case Tok::Imag:
                v.scalar = Poly::constant(Gauss::i());
                advance();
                return v;
            case Tok::Variable: {
                std::string name = cur_.text;
                if (!field_mode_ && (name == "w" || name == "u"))
                    fail(cur_.offset, name + " is not allowed in a model polynomial", {},
                         Errc::w_illegal);
                if (field_mode_ && (name == "zb1" || name == "zb2" || name == "u"))
                    fail(cur_.offset, name + " is not allowed in a field coefficient", {},
                         Errc::antiholomorphic_coefficient);
                advance();
                Var var = Var::z1;
                if (name == "z1") var = Var::z1;
                else if (name == "z2") var = Var::z2;
                else if (name == "zb1") var = Var::zb1;
                else if (name == "zb2") var = Var::zb2;
                else if (name == "u") var = Var::u;
                else var = Var::w;
                v.scalar = Poly::variable(var);
                return v;
            }
            case Tok::DerivZ1:
            case Tok::DerivZ2:
            case Tok::DerivW: {
                int idx = cur_.kind == Tok::DerivZ1 ? 0 : cur_.kind == Tok::DerivZ2 ? 1 : 2;
                advance();
                v.is_field = true;
                v.df[idx] = Poly::constant(Gauss(1));
                return v;
            }
            case Tok::Re:
            case Tok::Im:
            case Tok::Conj: {
                Tok fn = cur_.kind;
                advance();
                expect(Tok::LParen);
                Value inner = parse_expr();
                expect(Tok::RParen);
                as_scalar(inner, off, "function application");
                if (inner.scalar.depends_on(Var::w))
                    fail(off, "Re/Im/conj of a w-dependent expression");
                v.scalar = fn == Tok::Conj  ? inner.scalar.conjugate()
                           : fn == Tok::Re ? inner.scalar.re_part()
                                           : inner.scalar.im_part();
                if (field_mode_ && !v.scalar.is_holomorphic(true))
                    fail(off, "antiholomorphic part in a field coefficient", {},
                         Errc::antiholomorphic_coefficient);
                return v;
            }
            case Tok::LParen: {
                advance();
                Value inner = parse_expr();
                expect(Tok::RParen);
                return inner;
            }
            default:
                fail(off, std::string("unexpected ") + tok_name(cur_.kind),
                     {"number", "variable", "'('"});
        }
    }
};

} // namespace

Poly parse_real_poly(const std::string& src) {
    Parser p(src, false);
    Value v = p.parse_toplevel();
    if (v.is_field)
        throw Error(Errc::syntax_error, "expected a polynomial, found a vector field");
    if (v.scalar.depends_on(Var::w) || v.scalar.depends_on(Var::u))
        throw Error(Errc::w_illegal, "w and u are not allowed in a model polynomial");
    if (!v.scalar.is_real()) {
        ParseDiagnostic d;
        d.message = "expression is not real-valued";
        throw ParseError(Errc::not_real, std::move(d));
    }
    return v.scalar;
}

VectorField parse_field(const std::string& src) {
    Parser p(src, true);
    Value v = p.parse_toplevel();
    if (!v.is_field) {
        if (v.scalar.is_zero()) return VectorField{};
        throw Error(Errc::syntax_error, "expected a vector field (no d/dz or d/dw marker)");
    }
    VectorField x{v.df[0], v.df[1], v.df[2]};
    if (!x.f1.is_holomorphic(true) || !x.f2.is_holomorphic(true) || !x.g.is_holomorphic(true))
        throw Error(Errc::antiholomorphic_coefficient,
                    "field coefficients must be holomorphic in z and w");
    return x;
}

ModelFile parse_model_file(const std::string& text) {
    ModelFile out;
    std::string body = text;
    // optional leading "weights:" line (blank lines before it allowed)
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t eol = body.find('\n', pos);
        std::string line = body.substr(pos, eol == std::string::npos ? std::string::npos
                                                                     : eol - pos);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            pos = eol == std::string::npos ? body.size() : eol + 1;
            continue;
        }
        if (line.compare(first, 8, "weights:") == 0) {
            out.weight = weight_parse(line.substr(first + 8));
            pos = eol == std::string::npos ? body.size() : eol + 1;
        }
        break;
    }
    out.poly = parse_real_poly(body.substr(pos));
    return out;
}

} // namespace crsym
