#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace darboux {

// Ordered, duplicate-free list of variable names. Polynomials hold a shared
// pointer to their context; two contexts are compatible when their names
// agree.
class VarContext {
  public:
    explicit VarContext(std::vector<std::string> names);

    static std::shared_ptr<const VarContext> make(std::vector<std::string> names) {
        return std::make_shared<const VarContext>(std::move(names));
    }

    std::size_t arity() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    // Index of a variable name, or npos.
    std::size_t find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws ContextError

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const VarContext& a, const VarContext& b) { return a.names_ == b.names_; }

  private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

bool same_context(const ContextPtr& a, const ContextPtr& b);
void require_same_context(const ContextPtr& a, const ContextPtr& b);

// Total degree of a polynomial; the zero polynomial has degree -infinity,
// which is kept distinct from every integer.
class Degree {
  public:
    explicit constexpr Degree(long v) : v_(v), neg_inf_(false) {}
    static constexpr Degree neg_infinity() { return Degree(); }

    constexpr bool is_neg_infinity() const { return neg_inf_; }
    long value() const;

    friend constexpr bool operator==(const Degree&, const Degree&) = default;
    friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
        return a.v_ <=> b.v_;
    }
    std::string to_string() const;

  private:
    constexpr Degree() : v_(0), neg_inf_(true) {}
    long v_;
    bool neg_inf_;
};

// Exponent vector; each exponent is capped at 2^16 - 1 with checked
// arithmetic.
class Monomial {
  public:
    using Exponent = std::uint16_t;
    static constexpr unsigned long kMaxExponent = std::numeric_limits<Exponent>::max();

    Monomial() = default;
    explicit Monomial(std::size_t arity) : e_(arity, 0) {}
    Monomial(std::initializer_list<unsigned long> exps);
    explicit Monomial(std::span<const unsigned long> exps);

    static Monomial unit(std::size_t arity, std::size_t var, unsigned long power = 1);

    std::size_t arity() const { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    const std::vector<Exponent>& exponents() const { return e_; }
    unsigned long degree() const;
    bool is_one() const;

    void set(std::size_t i, unsigned long v);
    Monomial operator*(const Monomial& o) const;
    // True when o divides *this.
    bool divisible_by(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    Monomial pow(unsigned long k) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    std::vector<Exponent> e_;
};

// Graded reverse lexicographic order: higher total degree first; on ties the
// monomial with the smaller exponent in the last differing variable is larger.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct GrevlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

// All monomials of the given total degree in `arity` variables, in
// descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t arity, unsigned long degree);

std::string format_monomial(const Monomial& m, const VarContext& ctx);

}  // namespace darboux
