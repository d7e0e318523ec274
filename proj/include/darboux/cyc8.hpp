#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>

#include "darboux/rational.hpp"

namespace darboux {

// Element c0 + c1*z + c2*z^2 + c3*z^3 of the cyclotomic field Q(z), z a
// fixed primitive eighth root of unity, reduced by z^4 = -1.
class Cyc8 {
  public:
    static constexpr int kDegree = 4;
    static constexpr int kConductor = 8;

    Cyc8() = default;
    Cyc8(int v) { c_[0] = Rational(v); }
    Cyc8(long v) { c_[0] = Rational(v); }
    Cyc8(Rational v) { c_[0] = std::move(v); }
    explicit Cyc8(std::array<Rational, kDegree> coords) : c_(std::move(coords)) {}

    // z^r for any integer r.
    static Cyc8 zeta_pow(long r);

    // Textual form "a0 + a1*z8 + a2*z8^2 + a3*z8^3"; any expression in z8
    // accepted by the polynomial grammar parses.
    static Cyc8 parse(std::string_view text);

    const Rational& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::array<Rational, kDegree>& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    Cyc8 inverse() const;
    std::string to_string() const;

    Cyc8& operator+=(const Cyc8& o);
    Cyc8& operator-=(const Cyc8& o);
    Cyc8& operator*=(const Cyc8& o);
    Cyc8& operator/=(const Cyc8& o) { return *this *= o.inverse(); }

    friend Cyc8 operator+(Cyc8 a, const Cyc8& b) { return a += b; }
    friend Cyc8 operator-(Cyc8 a, const Cyc8& b) { return a -= b; }
    friend Cyc8 operator*(Cyc8 a, const Cyc8& b) { return a *= b; }
    friend Cyc8 operator/(Cyc8 a, const Cyc8& b) { return a /= b; }
    friend Cyc8 operator-(const Cyc8& a);

    friend bool operator==(const Cyc8& a, const Cyc8& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const Cyc8& a) { return os << a.to_string(); }

  private:
    std::array<Rational, kDegree> c_{};
};

Cyc8 cyc_add(const Cyc8& a, const Cyc8& b);
Cyc8 cyc_mul(const Cyc8& a, const Cyc8& b);
Cyc8 cyc_inv(const Cyc8& a);
Cyc8 zeta_pow(long r);

// Sum over i = 0..7 of z^(r*i): 0 when r is not a multiple of 8, else 8.
Cyc8 root_of_unity_sum(long r);

// Primitive m-th root of unity inside Q(z8); defined only for m dividing 8.
Cyc8 root_of_unity(long m);

}  // namespace darboux
