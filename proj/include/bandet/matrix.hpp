#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "bandet/ring.hpp"

namespace bandet {

/// Square row-major matrix whose entries all live in one ring.
class DenseMatrix {
public:
    /// Empty 0x0 integer matrix.
    DenseMatrix() = default;
    /// n x n matrix filled with `fill`.
    DenseMatrix(std::size_t n, const RingElement& fill);
    /// Throws InvalidArgumentError when not square, MixedRingError when the
    /// entries do not share a ring.
    explicit DenseMatrix(const std::vector<std::vector<RingElement>>& rows);
    DenseMatrix(std::initializer_list<std::initializer_list<RingElement>> rows);

    static DenseMatrix from_integers(const std::vector<std::vector<long long>>& rows);

    std::size_t order() const noexcept { return n_; }
    RingElement::Kind kind() const noexcept { return kind_; }

    const RingElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    /// Assignment must keep the matrix homogeneous.
    void set(std::size_t i, std::size_t j, RingElement v);

    DenseMatrix transpose() const;
    /// Reflection across the secondary diagonal: (i, j) -> (n-1-j, n-1-i).
    DenseMatrix flip_secondary() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t n_ = 0;
    RingElement::Kind kind_ = RingElement::Kind::integer;
    std::vector<RingElement> entries_;
};

}  // namespace bandet
