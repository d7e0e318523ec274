#include "darboux/dense_oracle.hpp"

#include <utility>

namespace darboux::oracle {

DenseNullspace dense_nullspace(std::vector<std::vector<Rational>> a, std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<long> pivot_row_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        pivot_row_of_col[c] = static_cast<long>(r);
        ++r;
    }

    DenseNullspace out;
    out.rank = r;
    for (std::size_t f = 0; f < cols; ++f) {
        if (pivot_row_of_col[f] >= 0) continue;
        std::vector<Rational> v(cols);
        v[f] = Rational(1);
        for (std::size_t c = 0; c < cols; ++c) {
            if (pivot_row_of_col[c] < 0) continue;
            v[c] = -a[static_cast<std::size_t>(pivot_row_of_col[c])][f];
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace darboux::oracle
