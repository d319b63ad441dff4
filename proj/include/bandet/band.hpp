#pragma once

// Generalized binary band (Toeplitz) matrices: entry (i, j) is b when
// -l < j - i < k and a otherwise. Determinants come from closed forms
// costing O(log n) ring multiplications; an independent recurrence path is
// kept for cross-checks.

#include <cstdint>
#include <string>

#include "bandet/matrix.hpp"
#include "bandet/ring.hpp"

namespace bandet {

/// Validated (n, k, l, a, b). The stored k and l are exactly what the caller
/// gave; widths beyond n describe the same matrix as width n, and l > k is
/// the transpose of the (l, k) matrix. Determinant code works on the
/// normalized widths returned by upper()/lower().
class BandSpec {
public:
    /// Throws InvalidArgumentError unless n, k, l >= 1 and a != b, and
    /// MixedRingError when a and b come from different rings.
    static BandSpec make(std::int64_t n, std::int64_t k, std::int64_t l, RingElement a, RingElement b);

    std::int64_t n() const noexcept { return n_; }
    std::int64_t k() const noexcept { return k_; }
    std::int64_t l() const noexcept { return l_; }
    const RingElement& a() const noexcept { return a_; }
    const RingElement& b() const noexcept { return b_; }

    /// Widths clamped to n and ordered so that 1 <= lower() <= upper() <= n.
    std::int64_t upper() const noexcept;
    std::int64_t lower() const noexcept;
    /// True when the caller's l exceeded k (after clamping), i.e. the
    /// determinant is taken of the transposed, normalized matrix.
    bool transposed() const noexcept;

    bool in_band(std::int64_t i, std::int64_t j) const noexcept {
        const std::int64_t d = j - i;
        return -l_ < d && d < k_;
    }

    friend bool operator==(const BandSpec&, const BandSpec&) = default;

private:
    BandSpec(std::int64_t n, std::int64_t k, std::int64_t l, RingElement a, RingElement b)
        : n_(n), k_(k), l_(l), a_(std::move(a)), b_(std::move(b)) {}

    std::int64_t n_;
    std::int64_t k_;
    std::int64_t l_;
    RingElement a_;
    RingElement b_;
};

enum class BandCase {
    lower_width_one,  ///< l = 1: residue in 0 < p <= k
    wide_lower,       ///< l > 1: residue in 0 <= p < k + l - 1
};

/// n = quotient * modulus + p under the case-specific residue convention.
struct BandResidue {
    std::int64_t p = 0;
    std::int64_t quotient = 0;
    BandCase band_case = BandCase::lower_width_one;

    friend bool operator==(const BandResidue&, const BandResidue&) = default;
};

/// Residue for l = 1: n = k*m + p with 0 < p <= k.
BandResidue residue_upper_only(std::int64_t n, std::int64_t k);
/// Residue for l > 1: n = (k+l-1)*s + p with 0 <= p < k+l-1.
BandResidue residue_two_sided(std::int64_t n, std::int64_t k, std::int64_t l);
/// Dispatches on the normalized widths of `spec`.
BandResidue residue(const BandSpec& spec);

/// Entry (i, j), 1-based. Throws IndexOutOfRangeError outside 1..n.
RingElement entry(const BandSpec& spec, std::int64_t i, std::int64_t j);
DenseMatrix materialize(const BandSpec& spec);

/// Determinant kept as sign * base^exponent * tail, with base = b - a.
/// A vanishing form has sign 0 and evaluates to zero regardless of the
/// other fields.
struct ClosedForm {
    int sign = 1;
    RingElement base;
    std::uint64_t exponent = 0;
    RingElement tail;
    BandResidue residue;

    bool vanishes() const noexcept { return sign == 0; }
    RingElement expand() const;
    /// e.g. "(-1)^4·0", "-(2)^3·(5)", or "0" when vanishing.
    std::string to_string() const;
};

/// Closed form for l = 1, 1 <= k <= n:
/// (b - a)^(n-1) * (b + ((n - p)/k) * a), n = p (mod k), 0 < p <= k.
ClosedForm det_case1_form(std::int64_t n, std::int64_t k, const RingElement& a, const RingElement& b);
RingElement det_case1(std::int64_t n, std::int64_t k, const RingElement& a, const RingElement& b);

/// Closed form for 1 < l <= k <= n with n = (k+l-1)s + p, 0 <= p < k+l-1:
///   p = 0: (-1)^((k-1)(l-1)s) (b-a)^(n-1) (b + ((n-k-l+1)/(k+l-1)) a)
///   p = 1: (-1)^((k-1)(l-1)s) (b-a)^(n-1) (b + ((n-1)/(k+l-1)) a)
///   else 0.
ClosedForm det_case2_form(std::int64_t n, std::int64_t k, std::int64_t l, const RingElement& a,
                          const RingElement& b);
RingElement det_case2(std::int64_t n, std::int64_t k, std::int64_t l, const RingElement& a, const RingElement& b);

/// Picks the l = 1 or l > 1 form from the normalized widths of `spec`.
ClosedForm det_closed_form(const BandSpec& spec);
RingElement det_closed(const BandSpec& spec);

/// Determinant of the bordered matrix: the l = 1 band matrix of order n-1
/// with width k, plus a last row and column of a. Equals (b-a)^(n-1) a.
RingElement f_closed(std::int64_t n, const RingElement& a, const RingElement& b, std::int64_t k);
DenseMatrix bordered_matrix(std::int64_t n, std::int64_t k, const RingElement& a, const RingElement& b);

/// Determinant of the matrix with b on and above the diagonal and a below:
/// (b-a)^(n-1) b.
RingElement g_closed(std::int64_t n, const RingElement& a, const RingElement& b);

/// d_n for l = 1 and 1 <= k < n by unrolling
///   d_n = (b-a)^k d_(n-k) + (b-a)^(n-1) a   while k < n/2,
///   d_n = (b-a)^(n-1) (b+a)                 once k >= n/2.
RingElement det_recurrence(std::int64_t n, std::int64_t k, const RingElement& a, const RingElement& b);

/// Number of rows made only of b: max(k + l - n, 0) on normalized widths.
std::int64_t all_b_row_count(const BandSpec& spec);

namespace detail {

/// Sign exponent used by the l > 1 closed form. `corrupted` computes
/// (k-1)(l-1)(s+1) instead of (k-1)(l-1)s; it exists only so the check suite can
/// demonstrate that it catches a wrong sign.
enum class SignRule { exact, corrupted };

ClosedForm det_case2_form(std::int64_t n, std::int64_t k, std::int64_t l, const RingElement& a,
                          const RingElement& b, SignRule rule);
ClosedForm det_closed_form(const BandSpec& spec, SignRule rule);

}  // namespace detail

}  // namespace bandet
