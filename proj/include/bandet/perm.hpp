#pragma once

// Even/odd census of restricted permutations. A 0/1 characteristic matrix A
// admits the permutations whose incidence matrix is entrywise <= A; their
// number is per A and (#even - #odd) is det A, so
//   even = (per A + det A) / 2,   odd = (per A - det A) / 2.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bandet/band.hpp"
#include "bandet/matrix.hpp"
#include "bandet/oracle.hpp"
#include "bandet/ring.hpp"

namespace bandet {

/// One-line notation, 1-based: perm[i-1] = pi(i).
using Permutation = std::vector<int>;

/// Throws InvalidPermutationError unless `perm` is a permutation of 1..n.
void validate_permutation(std::span<const int> perm);
/// +1 or -1, from the cycle count: (-1)^(n - cycles).
int permutation_sign(std::span<const int> perm);
/// Positions i with pi(i) >= i.
int weak_excedance_count(std::span<const int> perm);

class CharMatrix {
public:
    CharMatrix() = default;
    /// All-zero matrix of order n.
    explicit CharMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}
    /// Throws InvalidArgumentError on a non-square input or an entry other
    /// than 0 or 1.
    explicit CharMatrix(const std::vector<std::vector<int>>& rows);
    /// Integer matrix with 0/1 entries.
    static CharMatrix from_dense(const DenseMatrix& m);

    std::size_t order() const noexcept { return n_; }
    bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v) { bits_[i * n_ + j] = v ? 1 : 0; }

    DenseMatrix to_dense() const;
    /// True when the incidence matrix of `perm` is entrywise <= this matrix.
    bool admits(std::span<const int> perm) const;

    friend bool operator==(const CharMatrix&, const CharMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Which routine produced a ParityCount field.
enum class Provenance { ryser, bareiss, closed_form, enumeration };

const char* provenance_name(Provenance p) noexcept;

struct ParityCount {
    Integer even;
    Integer odd;
    Integer permanent;
    Integer determinant;
    Provenance permanent_source = Provenance::ryser;
    Provenance determinant_source = Provenance::bareiss;

    /// Compares the four counts; provenance is ignored.
    friend bool operator==(const ParityCount& x, const ParityCount& y) {
        return x.even == y.even && x.odd == y.odd && x.permanent == y.permanent && x.determinant == y.determinant;
    }
};

/// The band spec (a = 1, b = 0) whose matrix equals `A`, if there is one.
std::optional<BandSpec> match_band(const CharMatrix& A);

/// per by Ryser; det by the closed form when A is a 0/1 band matrix and by
/// Bareiss otherwise. Throws ParityError if per + det is odd.
ParityCount parity_counts(const CharMatrix& A, const Limits& limits = {});
/// Enumerates S_n directly.
ParityCount brute_force_parity(const CharMatrix& A, std::size_t max_order = Limits{}.enumeration);

/// pi(i) != i, i+1 for i < n and pi(n) != n.
CharMatrix menage_a_matrix(std::int64_t n);
/// (n-1) p_n = (n^2-n-1) p_(n-1) + n p_(n-2) + 2(-1)^(n+1), p_1 = p_2 = 0.
Integer menage_a_permanent_rec(std::int64_t n);
/// sum_(k=0..n) C(2n-k, k) (n-k)! (-1)^k.
Integer menage_a_permanent_sum(std::int64_t n);
/// (-1)^(n-1) (n-p)/2 with n = p (mod 2), 0 < p <= 2.
Integer menage_a_det(std::int64_t n);
/// (-1)^(n-1) floor((n-1)/2).
Integer menage_a_det_floor(std::int64_t n);

/// |pi(i) - i| > 1 for all i.
CharMatrix menage_b_matrix(std::int64_t n);
/// (3-n)/3, (n-1)/3 or 0 as n = 0, 1, 2 (mod 3).
Integer menage_b_det(std::int64_t n);

/// b on and above the diagonal, 1 below, over Z[b].
DenseMatrix excedance_matrix(std::int64_t n);

/// Per-k split of S_n by number of weak excedances. Vectors are indexed by
/// k - 1 for k = 1..n.
struct ExcedanceCensus {
    struct Entry {
        Integer total;       ///< Eulerian number T(n, k)
        Integer difference; ///< c(n, k) = #even - #odd
        Integer even;
        Integer odd;
    };

    std::int64_t n = 0;
    std::vector<Integer> eulerian;
    std::vector<Integer> det_coeffs;
    std::vector<Integer> even;
    std::vector<Integer> odd;

    /// Entry for k; all zero when k is outside 1..n.
    Entry at(std::int64_t k) const;

    friend bool operator==(const ExcedanceCensus&, const ExcedanceCensus&) = default;
};

/// (-1)^(n-k) C(n-1, k-1); zero outside 1 <= k <= n.
Integer excedance_det_coeff(std::int64_t n, std::int64_t k);

/// T(n, k) from the permanent of the excedance matrix, c(n, k) from its
/// closed-form determinant, cross-checked against the binomial formula.
ExcedanceCensus excedance_census(std::int64_t n, const Limits& limits = {});
ExcedanceCensus brute_force_excedance_census(std::int64_t n, std::size_t max_order = 9);

/// All permutations of order n with exactly k weak excedances, in
/// lexicographic order.
std::vector<Permutation> permutations_with_weak_excedances(std::int64_t n, std::int64_t k,
                                                           std::size_t max_order = Limits{}.enumeration);

/// One census table line. For the excedance family `per` holds T(n, k) and
/// `det` holds c(n, k).
struct CensusRow {
    std::int64_t n = 0;
    Integer per;
    Integer det;
    Integer even;
    Integer odd;

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

enum class Family { menage_a, menage_b, excedance_k2 };

/// Throws InvariantError unless even + odd = per and even - odd = det with
/// both counts non-negative.
void check_row(const CensusRow& row);

/// Rows n = 1..n_max, each passed through check_row.
std::vector<CensusRow> census_table(Family family, std::int64_t n_max, const Limits& limits = {});

Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(std::int64_t n);

}  // namespace bandet
