#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "darboux/poly.hpp"

namespace darboux {

// A derivation of k[X], stored extensionally as the images of the variables.
template <class K>
class Derivation {
  public:
    Derivation(ContextPtr ctx, std::vector<Poly<K>> images) : ctx_(std::move(ctx)), images_(std::move(images)) {
        if (!ctx_) throw ContextError("derivation without a variable context");
        if (images_.size() != ctx_->arity()) throw ContextError("one image per variable required");
        for (const auto& p : images_) require_same_context(ctx_, p.context());
    }

    static Derivation zero(ContextPtr ctx) {
        std::vector<Poly<K>> imgs(ctx->arity(), Poly<K>(ctx));
        return Derivation(std::move(ctx), std::move(imgs));
    }

    const ContextPtr& context() const { return ctx_; }
    std::size_t arity() const { return images_.size(); }
    const std::vector<Poly<K>>& images() const { return images_; }
    const Poly<K>& image(std::size_t i) const { return images_.at(i); }

    // sum_i d(x_i) * dF/dx_i
    Poly<K> apply(const Poly<K>& f) const {
        require_same_context(ctx_, f.context());
        Poly<K> out(ctx_);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (images_[i].is_zero()) continue;
            const Poly<K> df = partial_derivative(f, i);
            if (!df.is_zero()) out += images_[i] * df;
        }
        return out;
    }

    Derivation scaled(const K& c) const {
        std::vector<Poly<K>> imgs;
        imgs.reserve(images_.size());
        for (const auto& p : images_) imgs.push_back(p.scaled(c));
        return Derivation(ctx_, std::move(imgs));
    }

    friend bool operator==(const Derivation& a, const Derivation& b) {
        return same_context(a.ctx_, b.ctx_) && a.images_ == b.images_;
    }

  private:
    ContextPtr ctx_;
    std::vector<Poly<K>> images_;
};

using QDerivation = Derivation<Rational>;
using CDerivation = Derivation<Cyc8>;

template <class K>
Poly<K> apply(const Derivation<K>& d, const Poly<K>& f) { return d.apply(f); }

template <class To, class From>
Derivation<To> lift(const Derivation<From>& d) {
    std::vector<Poly<To>> imgs;
    imgs.reserve(d.arity());
    for (const auto& p : d.images()) imgs.push_back(lift<To>(p));
    return Derivation<To>(d.context(), std::move(imgs));
}

// Exponent rows of a monomial derivation: row i is the exponent vector of
// d(x_i).
class ExponentMatrix {
  public:
    explicit ExponentMatrix(std::vector<std::vector<long>> rows);

    static ExponentMatrix identity(std::size_t n);

    std::size_t size() const { return rows_.size(); }
    const std::vector<std::vector<long>>& rows() const { return rows_; }
    const std::vector<long>& row(std::size_t i) const { return rows_.at(i); }
    long operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

  private:
    std::vector<std::vector<long>> rows_;
};

// Monomial derivation d(x_i) = X^{beta_i} with unit coefficients.
QDerivation from_exponent_matrix(const ExponentMatrix& beta, const ContextPtr& ctx);

// Exponent matrix of d when every image is a single term; nullopt otherwise
// (including zero images).
template <class K>
std::optional<ExponentMatrix> exponent_matrix(const Derivation<K>& d) {
    std::vector<std::vector<long>> rows;
    for (const auto& img : d.images()) {
        if (img.size() != 1) return std::nullopt;
        const auto& e = img.terms().begin()->first.exponents();
        rows.emplace_back(e.begin(), e.end());
    }
    return ExponentMatrix(std::move(rows));
}

// det(beta - I), computed exactly by fraction-free (Bareiss) elimination.
mpz_class wd(const ExponentMatrix& beta);

// Zero diagonal and wd(beta) != 0.
bool is_normal(const ExponentMatrix& beta);

// Candidate Darboux polynomial with its cofactor; f must be nonconstant.
template <class K>
struct DarbouxPair {
    DarbouxPair(Poly<K> f_, Poly<K> lambda_) : f(std::move(f_)), lambda(std::move(lambda_)) {
        require_same_context(f.context(), lambda.context());
        if (f.is_constant()) throw PreconditionError("a Darboux polynomial must be nonconstant");
    }
    Poly<K> f;
    Poly<K> lambda;
};

// Exact identity d(f) = lambda * f.
template <class K>
bool is_darboux_pair(const Derivation<K>& d, const DarbouxPair<K>& pair) {
    if (pair.f.is_constant()) return false;
    return d.apply(pair.f) == pair.lambda * pair.f;
}

// d(x) = t^2, d(y) = z*t, d(z) = y^2, d(t) = x*y over k[x, y, z, t].
QDerivation reference_derivation();
ExponentMatrix reference_exponent_matrix();

// d(x) = z^2, d(y) = x^2, d(z) = y^2 over k[x, y, z].
ExponentMatrix jouanolou_exponent_matrix(long s = 2);

}  // namespace darboux
