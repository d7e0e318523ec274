#include "darboux/rational.hpp"

#include <cctype>
#include <string>

#include "darboux/error.hpp"

namespace darboux {

Rational::Rational(long num, long den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ArithmeticError("rational with zero denominator");
    if (negative) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const { return v_.get_str(10); }

}  // namespace darboux
