#pragma once

#include <vector>

#include "darboux/derivation.hpp"
#include "darboux/grading.hpp"
#include "darboux/poly.hpp"

namespace darboux {

// Ring automorphism x_i -> scalars[i] * x_i with nonzero scalars in Q(z8).
class DiagonalAutomorphism {
  public:
    explicit DiagonalAutomorphism(std::vector<Cyc8> scalars);

    static DiagonalAutomorphism identity(std::size_t arity) { return DiagonalAutomorphism(std::vector<Cyc8>(arity, Cyc8(1))); }

    // x_i -> root^{w_i} x_i; root must be a primitive m-th root of unity in
    // Q(z8), i.e. m | 8.
    static DiagonalAutomorphism from_weights(const WeightVector& w);

    std::size_t arity() const { return s_.size(); }
    const std::vector<Cyc8>& scalars() const { return s_; }

    DiagonalAutomorphism inverse() const;
    DiagonalAutomorphism compose(const DiagonalAutomorphism& o) const;
    DiagonalAutomorphism pow(long k) const;
    bool is_identity() const;

    // Acts on polynomials over an extended context by fixing the extra
    // variables.
    DiagonalAutomorphism extended_to(std::size_t arity) const;

    friend bool operator==(const DiagonalAutomorphism&, const DiagonalAutomorphism&) = default;

  private:
    std::vector<Cyc8> s_;
};

CPoly apply_auto(const DiagonalAutomorphism& s, const CPoly& f);
DiagonalAutomorphism inverse(const DiagonalAutomorphism& s);

// x_i -> s^{-1}(d(s(x_i))).
CDerivation conjugate(const DiagonalAutomorphism& s, const CDerivation& d);

// prod_{i=0}^{order-1} s^i(f), i ascending. Requires s^order = identity.
CPoly orbit_product(const DiagonalAutomorphism& s, const CPoly& f, long order);

// sum_{i=0}^{order-1} eps^i s^i(lam).
CPoly averaged_cofactor(const DiagonalAutomorphism& s, const Cyc8& eps, const CPoly& lam, long order);

// Adjoins k1..kn as ring variables, averages the generic linear cofactor
// k1*x1 + ... + kn*xn and reports whether the result is identically zero.
bool generic_cofactor_vanishes(const DiagonalAutomorphism& s, const Cyc8& eps, long order, const ContextPtr& ctx);

// Same computation, returning the averaged generic cofactor itself.
CPoly averaged_generic_cofactor(const DiagonalAutomorphism& s, const Cyc8& eps, long order, const ContextPtr& ctx);

struct ProductRuleResult {
    bool holds = false;
    CPoly orbit;     // the orbit product of f
    CPoly cofactor;  // the averaged cofactor
};

// Thrown when conjugate(s, d) != eps * d.
class ConjugationMismatch : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

// Thrown when the supplied pair is not a Darboux pair of d.
class NotDarbouxPair : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

// Checks d(orbit_product(f)) = averaged_cofactor(lambda) * orbit_product(f)
// after validating s^{-1} d s = eps d and d(f) = lambda f.
ProductRuleResult product_rule_check(const CDerivation& d, const DiagonalAutomorphism& s, const Cyc8& eps,
                                     const DarbouxPair<Cyc8>& pair, long order);

}  // namespace darboux
