#include "darboux/grading.hpp"

#include <algorithm>

namespace darboux {

WeightVector::WeightVector(std::vector<long> weights, long modulus) : w_(std::move(weights)), m_(modulus) {
    if (m_ < 0) throw PreconditionError("weight modulus must be nonnegative");
    for (auto& v : w_) v = reduce(v);
}

long WeightVector::reduce(long v) const {
    if (m_ == 0) return v;
    const long r = v % m_;
    return r < 0 ? r + m_ : r;
}

bool SymmetrySolution::is_trivial() const {
    return shift == 0 && std::all_of(weights.weights().begin(), weights.weights().end(), [](long v) { return v == 0; });
}

long weighted_degree(const Monomial& mono, const WeightVector& w) {
    if (mono.arity() != w.arity()) throw ContextError("weight vector arity does not match the monomial");
    long s = 0;
    for (std::size_t i = 0; i < mono.arity(); ++i) s += w.weight(i) * static_cast<long>(mono[i]);
    return w.reduce(s);
}

std::vector<SymmetrySolution> find_symmetry_weights(const ExponentMatrix& beta, long m) {
    if (m < 1) throw PreconditionError("symmetry modulus must be at least 1");
    const std::size_t n = beta.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(m);
        if (total > kSymmetryEnumerationCap)
            throw PreconditionError("symmetry enumeration of " + std::to_string(m) + "^" + std::to_string(n) +
                                    " candidates exceeds the cap of 2^20; use a smaller modulus");
    }

    const auto mod = [m](long v) {
        const long r = v % m;
        return r < 0 ? r + m : r;
    };

    // Odometer over (Z/m)^n in lexicographic order; c is determined by w.
    std::vector<SymmetrySolution> out;
    std::vector<long> w(n, 0);
    for (std::uint64_t k = 0; k < total; ++k) {
        std::optional<long> shift;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            long dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += w[j] * beta(i, j);
            const long c = mod(w[i] - dot);
            if (shift && *shift != c) ok = false;
            shift = c;
        }
        if (ok) out.push_back({WeightVector(w, m), shift.value_or(0)});
        for (std::size_t i = n; i-- > 0;) {
            if (++w[i] < m) break;
            w[i] = 0;
        }
    }
    return out;
}

}  // namespace darboux
