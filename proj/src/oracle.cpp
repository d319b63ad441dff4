#include "bandet/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

namespace bandet {

namespace {

void guard(const char* what, std::size_t n, std::size_t max_order) {
    if (n > max_order) {
        throw SizeLimitError(std::string(what) + " refused: order " + std::to_string(n) + " exceeds limit " +
                             std::to_string(max_order));
    }
}

std::size_t env_limit(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) {
        return fallback;
    }
    return static_cast<std::size_t>(v);
}

template <typename T>
const T& unwrap(const RingElement& e) {
    if constexpr (std::is_same_v<T, Integer>) {
        return e.as_integer();
    } else {
        return e.as_poly();
    }
}

template <typename T>
T ryser(const DenseMatrix& m) {
    const std::size_t n = m.order();
    std::vector<T> row_sums(n);
    T total{};
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t gray = 0;
    for (std::uint64_t g = 1; g < subsets; ++g) {
        const auto col = static_cast<std::size_t>(std::countr_zero(g));
        gray ^= std::uint64_t{1} << col;
        const bool added = ((gray >> col) & 1U) != 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (added) {
                row_sums[i] += unwrap<T>(m(i, col));
            } else {
                row_sums[i] -= unwrap<T>(m(i, col));
            }
        }
        if (std::any_of(row_sums.begin(), row_sums.end(), [](const T& s) { return s.is_zero(); })) {
            continue;
        }
        T prod = row_sums[0];
        for (std::size_t i = 1; i < n; ++i) {
            prod = prod * row_sums[i];
        }
        if (std::popcount(gray) % 2 == 0) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    if (n % 2 == 1) {
        total = -total;
    }
    return total;
}

}  // namespace

Limits Limits::from_env() {
    Limits d;
    d.laplace = env_limit("BANDET_MAX_LAPLACE", d.laplace);
    d.ryser_integer = env_limit("BANDET_MAX_RYSER", d.ryser_integer);
    d.ryser_polynomial = env_limit("BANDET_MAX_RYSER_POLY", d.ryser_polynomial);
    d.expansion = env_limit("BANDET_MAX_EXPANSION", d.expansion);
    d.enumeration = env_limit("BANDET_MAX_ENUMERATION", d.enumeration);
    return d;
}

RingElement det_laplace(const DenseMatrix& m, std::size_t max_order) {
    const std::size_t n = m.order();
    guard("Laplace determinant", n, max_order);
    const RingElement one = (m.kind() == RingElement::Kind::integer) ? RingElement(Integer(1))
                                                                     : RingElement(Poly::constant(1));
    if (n == 0) {
        return one;
    }
    // minor[mask] = determinant of rows n-|mask|..n-1 restricted to the
    // columns in mask (in increasing order).
    std::vector<RingElement> minor(std::size_t{1} << n, one.zero());
    minor[0] = one;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
        RingElement acc = one.zero();
        std::size_t position = 0;
        for (std::size_t col = 0; col < n; ++col) {
            if (((mask >> col) & 1U) == 0) {
                continue;
            }
            const RingElement& e = m(row, col);
            const RingElement& sub = minor[mask ^ (std::uint64_t{1} << col)];
            if (!e.is_zero() && !sub.is_zero()) {
                if (position % 2 == 0) {
                    acc += e * sub;
                } else {
                    acc -= e * sub;
                }
            }
            ++position;
        }
        minor[mask] = std::move(acc);
    }
    return minor.back();
}

Integer det_bareiss(const DenseMatrix& m) {
    if (m.kind() != RingElement::Kind::integer) {
        throw InvalidArgumentError("Bareiss elimination needs an integer matrix");
    }
    const std::size_t n = m.order();
    if (n == 0) {
        return 1;
    }
    std::vector<Integer> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = m(i, j).as_integer();
        }
    }
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };

    int sign = 1;
    Integer prev = 1;
    Integer q;
    Integer r;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k).is_zero()) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            for (std::size_t j = k; j < n; ++j) {
                std::swap(at(k, j), at(swap_row, j));
            }
            sign = -sign;
        }
        const Integer& pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Integer lead = at(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = at(i, j) * pivot - lead * at(k, j);
                divide_qr(num, prev, q, r);
                if (!r.is_zero()) {
                    throw InexactDivisionError("Bareiss step " + std::to_string(k) + " left a remainder");
                }
                at(i, j) = std::move(q);
            }
        }
        prev = pivot;
    }
    Integer det = at(n - 1, n - 1);
    return sign < 0 ? Integer(-det) : det;
}

RingElement permanent_ryser(const DenseMatrix& m, std::size_t max_order) {
    const std::size_t n = m.order();
    guard("Ryser permanent", n, max_order);
    if (m.kind() == RingElement::Kind::integer) {
        return n == 0 ? RingElement(Integer(1)) : RingElement(ryser<Integer>(m));
    }
    return n == 0 ? RingElement(Poly::constant(1)) : RingElement(ryser<Poly>(m));
}

RingElement permanent_ryser(const DenseMatrix& m) { return permanent_ryser(m, Limits{}.ryser_for(m.kind())); }

RingElement permanent_expansion(const DenseMatrix& m, std::size_t max_order) {
    const std::size_t n = m.order();
    guard("permanent expansion", n, max_order);
    const RingElement one = (m.kind() == RingElement::Kind::integer) ? RingElement(Integer(1))
                                                                     : RingElement(Poly::constant(1));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    RingElement total = one.zero();
    do {
        RingElement prod = one;
        for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) {
            prod *= m(i, perm[i]);
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace bandet
