#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "darboux/cyc8.hpp"
#include "darboux/error.hpp"
#include "darboux/monomial.hpp"
#include "darboux/rational.hpp"

namespace darboux {

// x^k by repeated squaring for any coefficient field.
template <class K>
K power(K base, unsigned long k) {
    K result(1);
    while (k > 0) {
        if (k & 1UL) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

// Sparse multivariate polynomial over the coefficient field K (Rational or
// Cyc8). Terms are kept in descending grevlex order with no zero
// coefficients stored.
template <class K>
class Poly {
  public:
    using Coefficient = K;
    using Terms = std::map<Monomial, K, GrevlexDescending>;

    explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw ContextError("polynomial without a variable context");
    }

    static Poly constant(ContextPtr ctx, const K& c) {
        Poly p(std::move(ctx));
        p.add_term(Monomial(p.ctx_->arity()), c);
        return p;
    }
    static Poly variable(ContextPtr ctx, std::size_t var) {
        Poly p(std::move(ctx));
        if (var >= p.ctx_->arity()) throw ContextError("variable index out of range");
        p.add_term(Monomial::unit(p.ctx_->arity(), var), K(1));
        return p;
    }
    static Poly variable(ContextPtr ctx, std::string_view name) {
        const auto i = ctx->index_of(name);
        return variable(std::move(ctx), i);
    }
    static Poly term(ContextPtr ctx, const Monomial& m, const K& c) {
        Poly p(std::move(ctx));
        p.add_term(m, c);
        return p;
    }

    const ContextPtr& context() const { return ctx_; }
    std::size_t arity() const { return ctx_->arity(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    K coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K() : it->second;
    }
    // Constant term.
    K constant_term() const { return coefficient(Monomial(arity())); }

    // Accumulates c*m into the polynomial, dropping the term if it cancels.
    void add_term(const Monomial& m, const K& c) {
        if (m.arity() != arity()) throw ContextError("monomial arity does not match the context");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Degree total_degree() const {
        if (terms_.empty()) return Degree::neg_infinity();
        return Degree(static_cast<long>(terms_.begin()->first.degree()));
    }

    Poly& operator+=(const Poly& o) {
        require_same_context(ctx_, o.ctx_);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        require_same_context(ctx_, o.ctx_);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const K& c) { return *this = scaled(c); }

    Poly scaled(const K& c) const {
        Poly r(ctx_);
        if (c.is_zero()) return r;
        for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, a * c);
        return r;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return a.scaled(K(-1)); }
    friend Poly operator*(const Poly& a, const K& c) { return a.scaled(c); }
    friend Poly operator*(const K& c, const Poly& a) { return a.scaled(c); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same_context(a.ctx_, b.ctx_);
        Poly r(a.ctx_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Poly pow(unsigned long k) const {
        Poly result = constant(ctx_, K(1));
        Poly base = *this;
        while (k > 0) {
            if (k & 1UL) result = result * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
    }

  private:
    ContextPtr ctx_;
    Terms terms_;
};

using QPoly = Poly<Rational>;
using CPoly = Poly<Cyc8>;

template <class K>
Poly<K> add(const Poly<K>& a, const Poly<K>& b) { return a + b; }
template <class K>
Poly<K> mul(const Poly<K>& a, const Poly<K>& b) { return a * b; }
template <class K>
Poly<K> scale(const K& c, const Poly<K>& a) { return a.scaled(c); }

template <class K>
Degree total_degree(const Poly<K>& a) { return a.total_degree(); }

template <class K>
Poly<K> partial_derivative(const Poly<K>& a, std::size_t var) {
    if (var >= a.arity()) throw ContextError("variable index out of range");
    Poly<K> r(a.context());
    for (const auto& [m, c] : a.terms()) {
        const auto e = m[var];
        if (e == 0) continue;
        Monomial dm = m;
        dm.set(var, e - 1u);
        r.add_term(dm, c * K(static_cast<long>(e)));
    }
    return r;
}

template <class K>
Poly<K> partial_derivative(const Poly<K>& a, std::string_view var) {
    return partial_derivative(a, a.context()->index_of(var));
}

// Scales each term X^e by prod_i scalars[i]^e_i.
template <class K>
Poly<K> substitute_diagonal(const Poly<K>& a, std::span<const K> scalars) {
    if (scalars.size() != a.arity()) throw ContextError("one scalar per variable required");
    Poly<K> r(a.context());
    for (const auto& [m, c] : a.terms()) {
        K f = c;
        for (std::size_t i = 0; i < m.arity(); ++i)
            if (m[i] != 0) f *= power(scalars[i], m[i]);
        r.add_term(m, f);
    }
    return r;
}

// Maps coefficients into a larger field (Rational -> Cyc8).
template <class To, class From>
Poly<To> lift(const Poly<From>& a) {
    Poly<To> r(a.context());
    for (const auto& [m, c] : a.terms()) r.add_term(m, To(c));
    return r;
}

// Re-expresses a polynomial in a context that extends its own: the first
// arity() names must coincide.
template <class K>
Poly<K> extend_context(const Poly<K>& a, const ContextPtr& wider) {
    const auto& src = a.context()->names();
    if (wider->arity() < src.size() || !std::equal(src.begin(), src.end(), wider->names().begin()))
        throw ContextError("target context does not extend the source context");
    Poly<K> r(wider);
    for (const auto& [m, c] : a.terms()) {
        Monomial w(wider->arity());
        for (std::size_t i = 0; i < m.arity(); ++i) w.set(i, m[i]);
        r.add_term(w, c);
    }
    return r;
}

}  // namespace darboux
