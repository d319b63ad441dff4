#include "bandet/matrix.hpp"

namespace bandet {

DenseMatrix::DenseMatrix(std::size_t n, const RingElement& fill)
    : n_(n), kind_(fill.kind()), entries_(n * n, fill) {}

DenseMatrix::DenseMatrix(const std::vector<std::vector<RingElement>>& rows) : n_(rows.size()) {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw InvalidArgumentError("matrix is not square");
        }
        for (const auto& v : row) {
            if (!entries_.empty() && !v.same_ring(entries_.front())) {
                throw MixedRingError("matrix entries from different rings");
            }
            entries_.push_back(v);
        }
    }
    if (!entries_.empty()) {
        kind_ = entries_.front().kind();
    }
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<RingElement>> rows)
    : DenseMatrix([&] {
          std::vector<std::vector<RingElement>> v;
          for (const auto& r : rows) {
              v.emplace_back(r);
          }
          return v;
      }()) {}

DenseMatrix DenseMatrix::from_integers(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<RingElement>> v;
    v.reserve(rows.size());
    for (const auto& r : rows) {
        v.emplace_back(r.begin(), r.end());
    }
    return DenseMatrix(v);
}

void DenseMatrix::set(std::size_t i, std::size_t j, RingElement v) {
    if (i >= n_ || j >= n_) {
        throw IndexOutOfRangeError("matrix index out of range");
    }
    if (v.kind() != kind_) {
        throw MixedRingError("assignment would mix rings in one matrix");
    }
    entries_[i * n_ + j] = std::move(v);
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t = *this;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            t.entries_[j * n_ + i] = entries_[i * n_ + j];
        }
    }
    return t;
}

DenseMatrix DenseMatrix::flip_secondary() const {
    DenseMatrix t = *this;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            t.entries_[(n_ - 1 - j) * n_ + (n_ - 1 - i)] = entries_[i * n_ + j];
        }
    }
    return t;
}

}  // namespace bandet
