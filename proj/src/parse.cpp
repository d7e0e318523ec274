#include "darboux/parse.hpp"

#include <cctype>
#include <type_traits>

namespace darboux {

namespace {

template <class K>
class Parser {
  public:
    Parser(std::string_view text, const ContextPtr& ctx) : text_(text), ctx_(ctx) {}

    Poly<K> run() {
        skip_ws();
        if (at_end()) throw ParseError("empty expression", pos_);
        Poly<K> p = expr();
        skip_ws();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Poly<K> expr() {
        Poly<K> acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly<K> term() {
        Poly<K> acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    Poly<K> unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power_expr();
    }

    Poly<K> power_expr() {
        Poly<K> base = primary();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t at = pos_;
        const std::string digits = integer_literal();
        if (digits.empty()) throw ParseError("exponent must be a nonnegative integer literal", at);
        if (digits.size() > 5 || std::stoul(digits) > Monomial::kMaxExponent)
            throw ParseError("exponent " + digits + " exceeds the 16-bit cap", at);
        return base.pow(std::stoul(digits));
    }

    Poly<K> primary() {
        skip_ws();
        const std::size_t at = pos_;
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly<K> inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = integer_literal();
            if (accept('/')) {
                skip_ws();
                const std::string den = integer_literal();
                if (den.empty()) throw ParseError("expected denominator after '/'", pos_);
                lit += "/" + den;
            }
            Rational q;
            try {
                q = Rational::parse(lit);
            } catch (const ArithmeticError&) {
                throw ParseError("zero denominator in '" + lit + "'", at);
            }
            return Poly<K>::constant(ctx_, K(q));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ident += text_[pos_++];
            if (const auto i = ctx_->find(ident); i != VarContext::npos) return Poly<K>::variable(ctx_, i);
            if constexpr (std::is_same_v<K, Cyc8>) {
                if (ident == "z8") return Poly<K>::constant(ctx_, Cyc8::zeta_pow(1));
            }
            throw ParseError("unknown identifier '" + ident + "'", at);
        }
        if (at_end()) throw ParseError("unexpected end of expression", at);
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    std::string integer_literal() {
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
        return s;
    }

    std::string_view text_;
    const ContextPtr& ctx_;
    std::size_t pos_ = 0;
};

// A coefficient rendered as a signed product factor.
struct CoefficientAtom {
    bool negative = false;
    bool unit = false;  // |c| == 1, omitted before a nontrivial monomial
    std::string text;   // magnitude
};

CoefficientAtom coefficient_atom(const Rational& c) {
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    return {neg, mag.is_one(), mag.to_string()};
}

CoefficientAtom coefficient_atom(const Cyc8& c) {
    if (c.is_rational()) return coefficient_atom(c.coord(0));
    int nonzero = 0;
    int which = 0;
    for (int i = 0; i < Cyc8::kDegree; ++i)
        if (!c.coord(i).is_zero()) {
            ++nonzero;
            which = i;
        }
    if (nonzero == 1) {
        const Rational& a = c.coord(which);
        const bool neg = a.sign() < 0;
        const Rational mag = neg ? -a : a;
        std::string text = mag.is_one() ? "" : mag.to_string() + "*";
        text += "z8";
        if (which > 1) text += "^" + std::to_string(which);
        return {neg, false, text};
    }
    return {false, false, "(" + c.to_string() + ")"};
}

}  // namespace

template <class K>
Poly<K> parse(std::string_view text, const ContextPtr& ctx) {
    if (!ctx) throw ContextError("parse requires a variable context");
    return Parser<K>(text, ctx).run();
}

template <class K>
std::string format(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        const CoefficientAtom atom = coefficient_atom(c);
        if (out.empty())
            out += atom.negative ? "-" : "";
        else
            out += atom.negative ? " - " : " + ";
        if (m.is_one()) {
            out += atom.text;
        } else {
            if (!atom.unit) out += atom.text + "*";
            out += format_monomial(m, *p.context());
        }
    }
    return out;
}

template QPoly parse<Rational>(std::string_view, const ContextPtr&);
template CPoly parse<Cyc8>(std::string_view, const ContextPtr&);
template std::string format<Rational>(const QPoly&);
template std::string format<Cyc8>(const CPoly&);

Cyc8 Cyc8::parse(std::string_view text) {
    static const ContextPtr empty = VarContext::make({});
    const CPoly p = darboux::parse<Cyc8>(text, empty);
    return p.constant_term();
}

}  // namespace darboux
