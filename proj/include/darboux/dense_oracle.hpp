#pragma once

#include <vector>

#include "darboux/rational.hpp"

namespace darboux::oracle {

// Textbook dense Gauss-Jordan elimination over the rationals, kept
// independent of the sparse solver so the two can be cross-checked.
struct DenseNullspace {
    std::size_t rank = 0;
    std::vector<std::vector<Rational>> basis;
};

DenseNullspace dense_nullspace(std::vector<std::vector<Rational>> a, std::size_t cols);

}  // namespace darboux::oracle
