#pragma once

// Shared fixtures for the test binaries: variable contexts, hand-rolled
// random generators, and oracles that do not go through the library's
// algorithms.

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "darboux/darboux.hpp"
#include "darboux/parse.hpp"

namespace testsupport {

using namespace darboux;

inline ContextPtr xyzt() { return VarContext::make({"x", "y", "z", "t"}); }
inline ContextPtr xy() { return VarContext::make({"x", "y"}); }

inline QPoly q(const std::string& text, const ContextPtr& ctx) { return parse<Rational>(text, ctx); }
inline CPoly c(const std::string& text, const ContextPtr& ctx) { return parse<Cyc8>(text, ctx); }

inline QDerivation qder(const ContextPtr& ctx, const std::vector<std::string>& images) {
    std::vector<QPoly> imgs;
    for (const auto& s : images) imgs.push_back(q(s, ctx));
    return QDerivation(ctx, std::move(imgs));
}

inline Cyc8 zeta() { return Cyc8::zeta_pow(1); }

inline DiagonalAutomorphism reference_sigma() {
    return DiagonalAutomorphism({Cyc8::zeta_pow(3), Cyc8::zeta_pow(5), Cyc8::zeta_pow(3), Cyc8::zeta_pow(1)});
}

// d(a)=e^2, d(b)=a*f, d(c)=a^2, d(e)=b*c, d(f)=a*e: a five-variable monomial
// derivation that certifies at D=1, m=8 (found by exhaustive search over
// random quadratic monomial derivations).
inline ExponentMatrix certified_beta() {
    return ExponentMatrix({{0, 0, 0, 2, 0}, {1, 0, 0, 0, 1}, {2, 0, 0, 0, 0}, {0, 1, 1, 0, 0}, {1, 0, 0, 1, 0}});
}
inline ContextPtr abcef() { return VarContext::make({"a", "b", "c", "e", "f"}); }

// Deterministic random source for property tests.
class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    std::mt19937_64& engine() { return rng_; }

    Rational rational(long bound = 9) {
        const long num = integer(-bound, bound);
        const long den = integer(1, bound);
        return Rational(num, den);
    }
    Rational nonzero_rational(long bound = 9) {
        for (;;) {
            Rational r = rational(bound);
            if (!r.is_zero()) return r;
        }
    }
    Cyc8 cyc(long bound = 6) {
        std::array<Rational, 4> c;
        for (auto& v : c) v = coin(0.8) ? rational(bound) : Rational(0);
        return Cyc8(c);
    }
    Cyc8 nonzero_cyc(long bound = 6) {
        for (;;) {
            Cyc8 z = cyc(bound);
            if (!z.is_zero()) return z;
        }
    }
    Monomial monomial(std::size_t arity, unsigned long max_degree) {
        Monomial m(arity);
        unsigned long left = static_cast<unsigned long>(integer(0, static_cast<long>(max_degree)));
        while (left > 0) {
            const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(arity) - 1));
            m.set(i, m[i] + 1ul);
            --left;
        }
        return m;
    }
    template <class K>
    Poly<K> poly(const ContextPtr& ctx, std::size_t max_terms, unsigned long max_degree) {
        Poly<K> p(ctx);
        const auto n = integer(0, static_cast<long>(max_terms));
        for (long i = 0; i < n; ++i) p.add_term(monomial(ctx->arity(), max_degree), coefficient<K>());
        return p;
    }
    template <class K>
    K coefficient() {
        if constexpr (std::is_same_v<K, Cyc8>)
            return nonzero_cyc(4);
        else
            return nonzero_rational(7);
    }
    template <class K>
    Derivation<K> derivation(const ContextPtr& ctx, std::size_t max_terms, unsigned long max_degree) {
        std::vector<Poly<K>> imgs;
        for (std::size_t i = 0; i < ctx->arity(); ++i) imgs.push_back(poly<K>(ctx, max_terms, max_degree));
        return Derivation<K>(ctx, std::move(imgs));
    }
    std::vector<std::vector<long>> matrix(std::size_t n, long lo, long hi) {
        std::vector<std::vector<long>> m(n, std::vector<long>(n));
        for (auto& r : m)
            for (auto& v : r) v = integer(lo, hi);
        return m;
    }

  private:
    std::mt19937_64 rng_;
};

namespace oracle {

// Laplace expansion along the first row; fine for n <= 6.
inline long long cofactor_det(const std::vector<std::vector<long long>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    long long det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<long long>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        det += ((j % 2 == 0) ? 1 : -1) * a[0][j] * cofactor_det(minor);
    }
    return det;
}

inline long long wd(const std::vector<std::vector<long>>& beta) {
    std::vector<std::vector<long long>> a(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) {
        for (std::size_t j = 0; j < beta.size(); ++j) a[i].push_back(beta[i][j] - (i == j ? 1 : 0));
    }
    return cofactor_det(a);
}

// Exponent vectors of total degree p, any order.
inline void exponents_of_degree(std::size_t n, long p, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (cur.size() + 1 == n) {
        cur.push_back(p);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long e = p; e >= 0; --e) {
        cur.push_back(e);
        exponents_of_degree(n, p - e, cur, out);
        cur.pop_back();
    }
}

// Dimension of the degree-p polynomial constants of the monomial derivation
// x_i -> X^{beta_i}, computed as (columns - rank) over GF(prime). The matrix
// is assembled directly from the rule d(X^a) = sum_i a_i X^{a - e_i + beta_i}
// and the rank uses 64-bit modular elimination, so nothing here shares code
// with the library's exact solvers.
inline std::size_t constants_nullity_mod_p(const std::vector<std::vector<long>>& beta, long p,
                                           std::uint64_t prime = 2147483647ULL) {
    const std::size_t n = beta.size();
    std::vector<std::vector<long>> cols;
    std::vector<long> cur;
    exponents_of_degree(n, p, cur, cols);
    std::vector<std::vector<long>> rows;
    std::vector<std::vector<std::uint64_t>> mat;
    auto row_index = [&](const std::vector<long>& e) {
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r] == e) return r;
        rows.push_back(e);
        for (auto& m : mat) m.push_back(0);
        return rows.size() - 1;
    };
    mat.assign(cols.size(), {});
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (cols[j][i] == 0) continue;
            std::vector<long> e = cols[j];
            e[i] -= 1;
            for (std::size_t k = 0; k < n; ++k) e[k] += beta[i][k];
            const std::size_t r = row_index(e);
            mat[j].resize(rows.size(), 0);
            mat[j][r] = (mat[j][r] + static_cast<std::uint64_t>(cols[j][i])) % prime;
        }
    }
    for (auto& m : mat) m.resize(rows.size(), 0);
    // Rank of the column set (transpose view: each column vector is mat[j]).
    auto pow_mod = [prime](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= prime;
        while (e) {
            if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * b % prime);
            b = static_cast<std::uint64_t>((unsigned __int128)b * b % prime);
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    const std::size_t R = rows.size();
    for (std::size_t r = 0; r < R && rank < mat.size(); ++r) {
        std::size_t piv = rank;
        while (piv < mat.size() && mat[piv][r] == 0) ++piv;
        if (piv == mat.size()) continue;
        std::swap(mat[piv], mat[rank]);
        const std::uint64_t inv = pow_mod(mat[rank][r], prime - 2);
        for (std::size_t k = rank + 1; k < mat.size(); ++k) {
            if (mat[k][r] == 0) continue;
            const std::uint64_t f = static_cast<std::uint64_t>((unsigned __int128)mat[k][r] * inv % prime);
            for (std::size_t c = r; c < R; ++c) {
                const std::uint64_t sub = static_cast<std::uint64_t>((unsigned __int128)f * mat[rank][c] % prime);
                mat[k][c] = (mat[k][c] + prime - sub) % prime;
            }
        }
        ++rank;
    }
    return cols.size() - rank;
}

// Schoolbook product of coefficient vectors followed by reduction modulo
// z^4 + 1.
inline Cyc8 cyc_product(const Cyc8& a, const Cyc8& b) {
    std::array<Rational, 7> full{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) full[static_cast<std::size_t>(i + j)] += a.coord(i) * b.coord(j);
    std::array<Rational, 4> red{};
    for (int k = 0; k < 7; ++k) {
        if (k < 4)
            red[static_cast<std::size_t>(k)] += full[static_cast<std::size_t>(k)];
        else
            red[static_cast<std::size_t>(k - 4)] -= full[static_cast<std::size_t>(k)];
    }
    return Cyc8(red);
}

}  // namespace oracle

}  // namespace testsupport
