#include "darboux/cyc8.hpp"

#include <utility>

#include "darboux/error.hpp"

namespace darboux {

namespace {

long mod8(long r) {
    const long m = r % 8;
    return m < 0 ? m + 8 : m;
}

}  // namespace

Cyc8 Cyc8::zeta_pow(long r) {
    const long e = mod8(r);
    std::array<Rational, kDegree> c{};
    // z^4 = -1 folds exponents 4..7 onto 0..3 with a sign flip.
    c[static_cast<std::size_t>(e % 4)] = e < 4 ? Rational(1) : Rational(-1);
    return Cyc8(std::move(c));
}

bool Cyc8::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyc8::is_one() const { return c_[0].is_one() && is_rational(); }

bool Cyc8::is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

Cyc8& Cyc8::operator+=(const Cyc8& o) {
    for (std::size_t i = 0; i < kDegree; ++i) c_[i] += o.c_[i];
    return *this;
}

Cyc8& Cyc8::operator-=(const Cyc8& o) {
    for (std::size_t i = 0; i < kDegree; ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyc8& Cyc8::operator*=(const Cyc8& o) {
    std::array<Rational, kDegree> r{};
    for (std::size_t i = 0; i < kDegree; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < kDegree; ++j) {
            if (o.c_[j].is_zero()) continue;
            const Rational p = c_[i] * o.c_[j];
            if (i + j < kDegree)
                r[i + j] += p;
            else
                r[i + j - kDegree] -= p;
        }
    }
    c_ = std::move(r);
    return *this;
}

Cyc8 operator-(const Cyc8& a) {
    Cyc8 r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

// Solves M x = e0 where column j of M holds the coordinates of a*z^j.
Cyc8 Cyc8::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero in Q(z8)");
    constexpr std::size_t n = kDegree;
    std::array<std::array<Rational, n + 1>, n> m{};
    for (std::size_t j = 0; j < n; ++j) {
        const Cyc8 col = *this * zeta_pow(static_cast<long>(j));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
    }
    m[0][n] = Rational(1);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw InvariantViolation("singular multiplication matrix for nonzero element");
        std::swap(m[piv], m[col]);
        const Rational inv = m[col][col].inverse();
        for (auto& x : m[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Rational f = m[r][col];
            for (std::size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    std::array<Rational, n> x{};
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
    return Cyc8(std::move(x));
}

std::string Cyc8::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < kDegree; ++i) {
        const Rational& a = c_[i];
        if (a.is_zero()) continue;
        const bool neg = a.sign() < 0;
        const Rational mag = neg ? -a : a;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0) {
            out += mag.to_string();
            continue;
        }
        if (!mag.is_one()) out += mag.to_string() + "*";
        out += "z8";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Cyc8 cyc_add(const Cyc8& a, const Cyc8& b) { return a + b; }
Cyc8 cyc_mul(const Cyc8& a, const Cyc8& b) { return a * b; }
Cyc8 cyc_inv(const Cyc8& a) { return a.inverse(); }
Cyc8 zeta_pow(long r) { return Cyc8::zeta_pow(r); }

Cyc8 root_of_unity_sum(long r) {
    const long e = mod8(r);
    Cyc8 sum;
    for (long i = 0; i < 8; ++i) sum += zeta_pow(e * i);
    return sum;
}

Cyc8 root_of_unity(long m) {
    if (m <= 0 || 8 % m != 0) throw PreconditionError("Q(z8) contains a primitive m-th root of unity only for m dividing 8");
    return zeta_pow(8 / m);
}

}  // namespace darboux
