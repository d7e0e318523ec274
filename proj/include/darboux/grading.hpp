#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "darboux/derivation.hpp"
#include "darboux/poly.hpp"

namespace darboux {

// Integer weight per variable. modulus 0 is a Z-grading; modulus m > 0 is a
// Z/m-grading with weights stored reduced to 0..m-1.
class WeightVector {
  public:
    WeightVector(std::vector<long> weights, long modulus = 0);

    static WeightVector standard(std::size_t arity) { return WeightVector(std::vector<long>(arity, 1), 0); }

    const std::vector<long>& weights() const { return w_; }
    long weight(std::size_t i) const { return w_.at(i); }
    long modulus() const { return m_; }
    std::size_t arity() const { return w_.size(); }

    // Reduces v modulo the grading's modulus (identity for Z-gradings).
    long reduce(long v) const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

  private:
    std::vector<long> w_;
    long m_;
};

// Diagonal symmetry candidate: weights w (mod m) and shift c with
// w_i - w.beta_i = c (mod m) for every variable i.
struct SymmetrySolution {
    WeightVector weights;
    long shift = 0;

    long modulus() const { return weights.modulus(); }
    bool is_trivial() const;

    friend bool operator==(const SymmetrySolution&, const SymmetrySolution&) = default;
};

long weighted_degree(const Monomial& mono, const WeightVector& w);

// Splits a polynomial into w-homogeneous components keyed by (reduced)
// weighted degree. The zero polynomial gives an empty map.
template <class K>
std::map<long, Poly<K>> homogeneous_components(const Poly<K>& a, const WeightVector& w) {
    if (w.arity() != a.arity()) throw ContextError("weight vector arity does not match the context");
    std::map<long, Poly<K>> out;
    for (const auto& [m, c] : a.terms()) {
        auto [it, _] = out.try_emplace(weighted_degree(m, w), a.context());
        it->second.add_term(m, c);
    }
    return out;
}

template <class K>
bool is_homogeneous(const Poly<K>& a, const WeightVector& w) {
    return homogeneous_components(a, w).size() <= 1;
}

// Returns s when every nonzero image d(x_i) is w-homogeneous of weighted
// degree w_i + s for one common s. The zero derivation is reported as s = 0.
template <class K>
std::optional<long> derivation_homogeneity(const Derivation<K>& d, const WeightVector& w) {
    if (w.arity() != d.arity()) throw ContextError("weight vector arity does not match the context");
    std::optional<long> shift;
    for (std::size_t i = 0; i < d.arity(); ++i) {
        const auto comps = homogeneous_components(d.image(i), w);
        if (comps.empty()) continue;
        if (comps.size() > 1) return std::nullopt;
        const long s = w.reduce(comps.begin()->first - w.weight(i));
        if (shift && *shift != s) return std::nullopt;
        shift = s;
    }
    return shift.value_or(0);
}

// All (w, c) in (Z/m)^n x Z/m solving the symmetry congruences, in
// lexicographic order of (w, c). Requires m >= 1 and m^n <= kSymmetryEnumerationCap.
inline constexpr std::uint64_t kSymmetryEnumerationCap = 1ULL << 20;
std::vector<SymmetrySolution> find_symmetry_weights(const ExponentMatrix& beta, long m);

}  // namespace darboux
