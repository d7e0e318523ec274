#include "darboux/derivation.hpp"

#include <utility>

#include "darboux/parse.hpp"

namespace darboux {

ExponentMatrix::ExponentMatrix(std::vector<std::vector<long>> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.size() != rows_.size()) throw PreconditionError("exponent matrix must be square");
        for (long v : r) {
            if (v < 0) throw PreconditionError("exponent matrix entries must be nonnegative");
            if (static_cast<unsigned long>(v) > Monomial::kMaxExponent)
                throw ArithmeticError("exponent " + std::to_string(v) + " exceeds the 16-bit cap");
        }
    }
}

ExponentMatrix ExponentMatrix::identity(std::size_t n) {
    std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return ExponentMatrix(std::move(rows));
}

QDerivation from_exponent_matrix(const ExponentMatrix& beta, const ContextPtr& ctx) {
    if (beta.size() != ctx->arity()) throw ContextError("exponent matrix size does not match the context arity");
    std::vector<QPoly> imgs;
    imgs.reserve(beta.size());
    for (const auto& row : beta.rows()) {
        std::vector<unsigned long> e(row.begin(), row.end());
        imgs.push_back(QPoly::term(ctx, Monomial(std::span<const unsigned long>(e)), Rational(1)));
    }
    return QDerivation(ctx, std::move(imgs));
}

mpz_class wd(const ExponentMatrix& beta) {
    const std::size_t n = beta.size();
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = beta(i, j) - (i == j ? 1 : 0);

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool is_normal(const ExponentMatrix& beta) {
    for (std::size_t i = 0; i < beta.size(); ++i)
        if (beta(i, i) != 0) return false;
    return wd(beta) != 0;
}

ExponentMatrix reference_exponent_matrix() {
    return ExponentMatrix({{0, 0, 0, 2}, {0, 0, 1, 1}, {0, 2, 0, 0}, {1, 1, 0, 0}});
}

QDerivation reference_derivation() {
    return from_exponent_matrix(reference_exponent_matrix(), VarContext::make({"x", "y", "z", "t"}));
}

ExponentMatrix jouanolou_exponent_matrix(long s) {
    return ExponentMatrix({{0, 0, s}, {s, 0, 0}, {0, s, 0}});
}

}  // namespace darboux
