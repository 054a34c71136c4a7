#include "leavitt/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

constexpr long kExponentBound = 10000;

enum class Tok { Num, Letter, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };

struct Token {
    Tok kind;
    std::string text;  // digits for Num, letter spelling for Letter
    std::size_t col;   // 1-based
};

enum class LetterMode { Graph, TwoGen, Var };

class Lexer {
  public:
    Lexer(const std::string& s, LetterMode mode, char var) : s_(s), mode_(mode), var_(var) {
        scan();
    }

    const std::vector<Token>& tokens() const { return toks_; }

  private:
    void scan() {
        std::size_t i = 0;
        while (i < s_.size()) {
            char ch = s_[i];
            std::size_t col = i + 1;
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::size_t j = i;
                while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
                toks_.push_back({Tok::Num, s_.substr(i, j - i), col});
                i = j;
                continue;
            }
            switch (ch) {
                case '+': toks_.push_back({Tok::Plus, "+", col}); ++i; continue;
                case '-': toks_.push_back({Tok::Minus, "-", col}); ++i; continue;
                case '^': toks_.push_back({Tok::Caret, "^", col}); ++i; continue;
                case '(': toks_.push_back({Tok::LParen, "(", col}); ++i; continue;
                case ')': toks_.push_back({Tok::RParen, ")", col}); ++i; continue;
                case '/': toks_.push_back({Tok::Slash, "/", col}); ++i; continue;
                case '*':
                    // A star riding directly on c or d is consumed by the
                    // letter branch below; anywhere else it is an explicit
                    // multiplication sign.
                    toks_.push_back({Tok::Star, "*", col});
                    ++i;
                    continue;
                default: break;
            }
            if (letter(ch)) {
                std::string spelling(1, ch);
                ++i;
                // The star binds with no intervening space.
                if (mode_ == LetterMode::Graph && (ch == 'c' || ch == 'd') && i < s_.size() &&
                    s_[i] == '*') {
                    spelling += '*';
                    ++i;
                }
                toks_.push_back({Tok::Letter, spelling, col});
                continue;
            }
            throw parse_error(std::string("unexpected character '") + ch + "'", col);
        }
        toks_.push_back({Tok::End, "", s_.size() + 1});
    }

    bool letter(char ch) const {
        switch (mode_) {
            case LetterMode::Graph: return ch == 'v' || ch == 'w' || ch == 'c' || ch == 'd';
            case LetterMode::TwoGen: return ch == 'X' || ch == 'Y';
            case LetterMode::Var: return ch == var_;
        }
        return false;
    }

    const std::string& s_;
    LetterMode mode_;
    char var_;
    std::vector<Token> toks_;
};

// The element builders give the shared parser core a uniform way to make
// scalars and letters and to exponentiate in each target type.
struct GraphBuilder {
    using Value = AlgebraElement;
    Field f;
    bool allow_negative_exp = false;
    Value from_scalar(const Scalar& k) const { return AlgebraElement::one(f).scaled(k); }
    Value from_letter(const Token& t, long exp) const {
        if (exp < 0) throw parse_error("negative exponents are not allowed here", t.col);
        if (exp == 0) return AlgebraElement::one(f);
        auto e = static_cast<std::uint32_t>(exp);
        if (t.text == "v") return AlgebraElement::generator(f, Gen::V);
        if (t.text == "w") return AlgebraElement::generator(f, Gen::W);
        if (t.text == "c") return AlgebraElement::word(f, BasisWord::c_pow(e));
        if (t.text == "c*") return AlgebraElement::word(f, BasisWord::cstar_pow(e));
        if (t.text == "d") return AlgebraElement::generator(f, Gen::D).pow(e);
        return AlgebraElement::generator(f, Gen::Dstar).pow(e);
    }
    Value pow(const Value& base, const Token& at, long exp) const {
        if (exp < 0) throw parse_error("negative exponents are not allowed here", at.col);
        return base.pow(static_cast<std::uint32_t>(exp));
    }
};

struct TwoGenBuilder {
    using Value = JacobsonElement;
    Field f;
    bool allow_negative_exp = false;
    Value from_scalar(const Scalar& k) const { return JacobsonElement::one(f).scaled(k); }
    Value from_letter(const Token& t, long exp) const {
        if (exp < 0) throw parse_error("negative exponents are not allowed here", t.col);
        auto e = static_cast<std::uint32_t>(exp);
        if (t.text == "X") return JacobsonElement::mono(f, {0, e});
        return JacobsonElement::mono(f, {e, 0});
    }
    Value pow(const Value& base, const Token& at, long exp) const {
        if (exp < 0) throw parse_error("negative exponents are not allowed here", at.col);
        return base.pow(static_cast<std::uint32_t>(exp));
    }
};

struct PolyBuilder {
    using Value = Poly;
    Field f;
    bool allow_negative_exp = false;
    Value from_scalar(const Scalar& k) const { return Poly::constant(k); }
    Value from_letter(const Token& t, long exp) const {
        if (exp < 0) throw parse_error("negative exponents are not allowed here", t.col);
        return Poly::x(f).pow(static_cast<std::uint32_t>(exp));
    }
    Value pow(const Value& base, const Token& at, long exp) const {
        if (exp < 0) throw parse_error("negative exponents are not allowed here", at.col);
        return base.pow(static_cast<std::uint32_t>(exp));
    }
};

struct LaurentBuilder {
    using Value = LaurentPoly;
    Field f;
    bool allow_negative_exp = true;
    Value from_scalar(const Scalar& k) const {
        LaurentPoly p = LaurentPoly::zero(f);
        p.add_term(0, k);
        return p;
    }
    Value from_letter(const Token& t, long exp) const {
        (void)t;
        return LaurentPoly::mono(f, exp, Scalar::one(f));
    }
    Value pow(const Value& base, const Token& at, long exp) const {
        if (exp < 0)
            throw parse_error("negative exponents only apply directly to the variable", at.col);
        LaurentPoly acc = LaurentPoly::one(f);
        for (long k = 0; k < exp; ++k) acc = acc * base;
        return acc;
    }
};

template <class Builder>
class Parser {
  public:
    Parser(const std::vector<Token>& toks, Builder b) : toks_(toks), b_(std::move(b)) {}

    typename Builder::Value parse() {
        if (peek().kind == Tok::End) throw parse_error("empty expression", peek().col);
        auto v = expr();
        if (peek().kind != Tok::End)
            throw parse_error("unexpected trailing input", peek().col);
        return v;
    }

  private:
    using Value = typename Builder::Value;

    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    Value expr() {
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            take();
            neg = true;
        } else if (peek().kind == Tok::Plus) {
            take();
        }
        Value acc = product();
        if (neg) acc = -acc;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = take().kind == Tok::Minus;
            Value t = product();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Value product() {
        Value acc = factor();
        for (;;) {
            if (peek().kind == Tok::Star) {
                take();
                acc = acc * factor();
                continue;
            }
            if (peek().kind == Tok::Num || peek().kind == Tok::Letter ||
                peek().kind == Tok::LParen) {
                acc = acc * factor();
                continue;
            }
            break;
        }
        return acc;
    }

    Value factor() {
        const Token& t = peek();
        if (t.kind == Tok::Num) {
            take();
            Scalar k = scalar_from(t);
            return b_.from_scalar(k);
        }
        if (t.kind == Tok::Letter) {
            take();
            long exp = 1;
            if (peek().kind == Tok::Caret) exp = exponent();
            return b_.from_letter(t, exp);
        }
        if (t.kind == Tok::LParen) {
            take();
            Value v = expr();
            if (peek().kind != Tok::RParen) throw parse_error("expected ')'", peek().col);
            take();
            if (peek().kind == Tok::Caret) {
                const Token& at = peek();
                long exp = exponent();
                v = b_.pow(v, at, exp);
            }
            return v;
        }
        throw parse_error("expected a number, letter, or '('", t.col);
    }

    // Consumes '^' and the following (possibly negative) integer.
    long exponent() {
        take();  // caret
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            if (!b_.allow_negative_exp)
                throw parse_error("negative exponents are not allowed here", peek().col);
            take();
            neg = true;
        }
        if (peek().kind != Tok::Num) throw parse_error("expected an exponent", peek().col);
        const Token& n = take();
        if (n.text.size() > 5) throw parse_error("exponent exceeds the bound 10^4", n.col);
        long val = std::stol(n.text);
        if (val > kExponentBound) throw parse_error("exponent exceeds the bound 10^4", n.col);
        return neg ? -val : val;
    }

    // A number, optionally followed by / number, read as one scalar.
    Scalar scalar_from(const Token& num) {
        std::string text = num.text;
        if (peek().kind == Tok::Slash) {
            take();
            if (peek().kind != Tok::Num)
                throw parse_error("expected a denominator", peek().col);
            const Token& den = take();
            text += "/" + den.text;
            try {
                return Scalar::parse(b_.f, text);
            } catch (const division_by_zero&) {
                throw parse_error("division by zero in coefficient", den.col);
            }
        }
        return Scalar::parse(b_.f, text);
    }

    const std::vector<Token>& toks_;
    Builder b_;
    std::size_t pos_ = 0;
};

template <class Builder>
typename Builder::Value run(const std::string& s, LetterMode mode, char var, Builder b) {
    Lexer lex(s, mode, var);
    Parser<Builder> p(lex.tokens(), std::move(b));
    return p.parse();
}

}  // namespace

AlgebraElement parse_leavitt(const std::string& s, const Field& f) {
    return run(s, LetterMode::Graph, '\0', GraphBuilder{f});
}

JacobsonElement parse_jacobson(const std::string& s, const Field& f) {
    return run(s, LetterMode::TwoGen, '\0', TwoGenBuilder{f});
}

Poly parse_poly(const std::string& s, const Field& f, char var) {
    return run(s, LetterMode::Var, var, PolyBuilder{f});
}

LaurentPoly parse_laurent(const std::string& s, const Field& f, char var) {
    return run(s, LetterMode::Var, var, LaurentBuilder{f});
}

}  // namespace leavitt
