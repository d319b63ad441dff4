#pragma once

#include "bandet/matrix.hpp"
#include "naive.hpp"

inline bandet::DenseMatrix to_dense(const naive::IntMatrix& m) {
    std::vector<std::vector<long long>> rows;
    for (const auto& r : m) {
        rows.emplace_back(r.begin(), r.end());
    }
    return bandet::DenseMatrix::from_integers(rows);
}
