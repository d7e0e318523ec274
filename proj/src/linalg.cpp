#include "darboux/linalg.hpp"

#include <algorithm>

#include "darboux/error.hpp"

namespace darboux {

namespace {

SparseRow::const_iterator find_col(const SparseRow& row, std::size_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it : row.end();
}

// a -= f * b
void axpy(SparseRow& a, const Rational& f, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(std::move(*ia++));
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, -(f * ib->second));
            ++ib;
        } else {
            Rational v = ia->second - f * ib->second;
            if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    a = std::move(out);
}

}  // namespace

std::size_t ExactMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

Rational ExactMatrix::get(std::size_t r, std::size_t c) const {
    const auto& row = rows_.at(r);
    auto it = find_col(row, c);
    return it == row.end() ? Rational() : it->second;
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
    if (c >= cols_) throw PreconditionError("column index out of range");
    auto& row = rows_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v.is_zero())
            row.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        row.emplace(it, c, v);
    }
}

void ExactMatrix::add(std::size_t r, std::size_t c, const Rational& v) { set(r, c, get(r, c) + v); }

std::vector<DenseVector> ExactMatrix::to_dense() const {
    std::vector<DenseVector> d(rows_.size(), DenseVector(cols_));
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r]) d[r][c] = v;
    return d;
}

NullspaceResult sparse_nullspace(const ExactMatrix& mat) {
    const std::size_t ncols = mat.cols();
    std::vector<SparseRow> active;
    active.reserve(mat.rows());
    for (std::size_t r = 0; r < mat.rows(); ++r)
        if (!mat.row(r).empty()) active.push_back(mat.row(r));

    // Forward elimination. Every active row has its leading entry at or
    // beyond the current column, so candidates are rows led by `col`.
    std::vector<SparseRow> pivots;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < ncols && !active.empty(); ++col) {
        std::size_t best = active.size();
        for (std::size_t i = 0; i < active.size(); ++i) {
            if (active[i].front().first != col) continue;
            if (best == active.size() || active[i].size() < active[best].size()) best = i;
        }
        if (best == active.size()) continue;

        SparseRow piv = std::move(active[best]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
        const Rational inv = piv.front().second.inverse();
        for (auto& e : piv) e.second *= inv;

        std::vector<SparseRow> next;
        next.reserve(active.size());
        for (auto& row : active) {
            if (row.front().first == col) {
                const Rational f = row.front().second;
                axpy(row, f, piv);
            }
            if (!row.empty()) next.push_back(std::move(row));
        }
        active = std::move(next);
        pivots.push_back(std::move(piv));
        pivot_cols.push_back(col);
    }
    if (!active.empty()) throw InvariantViolation("sparse elimination left unreduced rows");

    // Back substitution to reduced form.
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivot_cols[k];
        for (std::size_t j = 0; j < k; ++j) {
            auto it = find_col(pivots[j], pc);
            if (it == pivots[j].end()) continue;
            const Rational f = it->second;
            axpy(pivots[j], f, pivots[k]);
        }
    }

    NullspaceResult res;
    res.rank = pivots.size();
    res.pivot_columns = pivot_cols;
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        DenseVector v(ncols);
        v[f] = Rational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            auto it = find_col(pivots[k], f);
            if (it != pivots[k].end()) v[pivot_cols[k]] = -it->second;
        }
        res.basis.push_back(std::move(v));
    }
    return res;
}

std::vector<DenseVector> nullspace(const ExactMatrix& mat) { return sparse_nullspace(mat).basis; }

}  // namespace darboux
