#include "darboux/autom.hpp"

#include <span>
#include <string>

namespace darboux {

DiagonalAutomorphism::DiagonalAutomorphism(std::vector<Cyc8> scalars) : s_(std::move(scalars)) {
    for (const auto& c : s_)
        if (c.is_zero()) throw PreconditionError("diagonal automorphism scalars must be nonzero");
}

DiagonalAutomorphism DiagonalAutomorphism::from_weights(const WeightVector& w) {
    const Cyc8 root = root_of_unity(w.modulus());
    std::vector<Cyc8> s;
    s.reserve(w.arity());
    for (long v : w.weights()) s.push_back(power(root, static_cast<unsigned long>(v)));
    return DiagonalAutomorphism(std::move(s));
}

DiagonalAutomorphism DiagonalAutomorphism::inverse() const {
    std::vector<Cyc8> s;
    s.reserve(s_.size());
    for (const auto& c : s_) s.push_back(cyc_inv(c));
    return DiagonalAutomorphism(std::move(s));
}

DiagonalAutomorphism DiagonalAutomorphism::compose(const DiagonalAutomorphism& o) const {
    if (o.arity() != arity()) throw ContextError("automorphism arity mismatch");
    std::vector<Cyc8> s;
    s.reserve(s_.size());
    for (std::size_t i = 0; i < s_.size(); ++i) s.push_back(s_[i] * o.s_[i]);
    return DiagonalAutomorphism(std::move(s));
}

DiagonalAutomorphism DiagonalAutomorphism::pow(long k) const {
    const DiagonalAutomorphism base = k < 0 ? inverse() : *this;
    const unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    std::vector<Cyc8> s;
    s.reserve(s_.size());
    for (const auto& c : base.s_) s.push_back(power(c, e));
    return DiagonalAutomorphism(std::move(s));
}

bool DiagonalAutomorphism::is_identity() const {
    for (const auto& c : s_)
        if (!c.is_one()) return false;
    return true;
}

DiagonalAutomorphism DiagonalAutomorphism::extended_to(std::size_t n) const {
    if (n < arity()) throw ContextError("cannot restrict an automorphism");
    std::vector<Cyc8> s = s_;
    s.resize(n, Cyc8(1));
    return DiagonalAutomorphism(std::move(s));
}

CPoly apply_auto(const DiagonalAutomorphism& s, const CPoly& f) {
    if (s.arity() != f.arity()) throw ContextError("automorphism arity does not match the polynomial");
    return substitute_diagonal(f, std::span<const Cyc8>(s.scalars()));
}

DiagonalAutomorphism inverse(const DiagonalAutomorphism& s) { return s.inverse(); }

CDerivation conjugate(const DiagonalAutomorphism& s, const CDerivation& d) {
    if (s.arity() != d.arity()) throw ContextError("automorphism arity does not match the derivation");
    const DiagonalAutomorphism inv = s.inverse();
    std::vector<CPoly> imgs;
    imgs.reserve(d.arity());
    for (std::size_t i = 0; i < d.arity(); ++i) {
        const CPoly xi = CPoly::variable(d.context(), i);
        imgs.push_back(apply_auto(inv, d.apply(apply_auto(s, xi))));
    }
    return CDerivation(d.context(), std::move(imgs));
}

CPoly orbit_product(const DiagonalAutomorphism& s, const CPoly& f, long order) {
    if (order < 1) throw PreconditionError("orbit order must be at least 1");
    if (!s.pow(order).is_identity())
        throw PreconditionError("automorphism to the power " + std::to_string(order) + " is not the identity");
    CPoly out = CPoly::constant(f.context(), Cyc8(1));
    DiagonalAutomorphism si = DiagonalAutomorphism::identity(s.arity());
    for (long i = 0; i < order; ++i) {
        out = out * apply_auto(si, f);
        si = si.compose(s);
    }
    return out;
}

CPoly averaged_cofactor(const DiagonalAutomorphism& s, const Cyc8& eps, const CPoly& lam, long order) {
    if (order < 1) throw PreconditionError("orbit order must be at least 1");
    CPoly out(lam.context());
    DiagonalAutomorphism si = DiagonalAutomorphism::identity(s.arity());
    Cyc8 ei(1);
    for (long i = 0; i < order; ++i) {
        out += apply_auto(si, lam).scaled(ei);
        si = si.compose(s);
        ei *= eps;
    }
    return out;
}

namespace {

// Context with k1..kn appended; names made unique against the base context.
ContextPtr with_generic_coefficients(const ContextPtr& ctx) {
    std::vector<std::string> names = ctx->names();
    const std::size_t n = ctx->arity();
    for (std::size_t j = 1; j <= n; ++j) {
        std::string name = "k" + std::to_string(j);
        while (ctx->find(name) != VarContext::npos) name += "_";
        names.push_back(std::move(name));
    }
    return VarContext::make(std::move(names));
}

}  // namespace

CPoly averaged_generic_cofactor(const DiagonalAutomorphism& s, const Cyc8& eps, long order, const ContextPtr& ctx) {
    if (s.arity() != ctx->arity()) throw ContextError("automorphism arity does not match the context");
    const std::size_t n = ctx->arity();
    const ContextPtr wide = with_generic_coefficients(ctx);
    CPoly lam(wide);
    for (std::size_t j = 0; j < n; ++j) lam += CPoly::variable(wide, n + j) * CPoly::variable(wide, j);
    return averaged_cofactor(s.extended_to(2 * n), eps, lam, order);
}

bool generic_cofactor_vanishes(const DiagonalAutomorphism& s, const Cyc8& eps, long order, const ContextPtr& ctx) {
    return averaged_generic_cofactor(s, eps, order, ctx).is_zero();
}

ProductRuleResult product_rule_check(const CDerivation& d, const DiagonalAutomorphism& s, const Cyc8& eps,
                                     const DarbouxPair<Cyc8>& pair, long order) {
    if (!(conjugate(s, d) == d.scaled(eps))) throw ConjugationMismatch("s^-1 d s differs from eps * d");
    if (!is_darboux_pair(d, pair)) throw NotDarbouxPair("d(f) differs from lambda * f");
    ProductRuleResult r{false, orbit_product(s, pair.f, order), averaged_cofactor(s, eps, pair.lambda, order)};
    r.holds = d.apply(r.orbit) == r.cofactor * r.orbit;
    return r;
}

}  // namespace darboux
