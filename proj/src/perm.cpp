#include "bandet/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bandet {

namespace {

void require_positive(std::int64_t n) {
    if (n < 1) {
        throw InvalidArgumentError("order must be at least 1, got " + std::to_string(n));
    }
}

void require_enumerable(std::int64_t n, std::size_t max_order) {
    if (static_cast<std::size_t>(n) > max_order) {
        throw SizeLimitError("enumeration of S_" + std::to_string(n) + " exceeds limit " + std::to_string(max_order));
    }
}

Integer exact_half(const Integer& v, const char* what) {
    if (v % 2 != 0) {
        throw ParityError(std::string(what) + " is odd (" + v.str() + "); cannot split into even/odd counts");
    }
    return v / 2;
}

CharMatrix zero_one_band(std::int64_t n, std::int64_t k, std::int64_t l) {
    return CharMatrix::from_dense(materialize(BandSpec::make(n, k, l, 1, 0)));
}

Permutation identity(std::int64_t n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return p;
}

}  // namespace

Integer factorial(std::int64_t n) {
    Integer r = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Integer r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

void validate_permutation(std::span<const int> perm) {
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 1 || static_cast<std::size_t>(v) > perm.size() || seen[static_cast<std::size_t>(v - 1)]) {
            throw InvalidPermutationError("not a permutation of 1.." + std::to_string(perm.size()));
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

int permutation_sign(std::span<const int> perm) {
    validate_permutation(perm);
    const std::size_t n = perm.size();
    std::vector<bool> visited(n, false);
    std::size_t cycles = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) {
            continue;
        }
        ++cycles;
        for (std::size_t i = start; !visited[i]; i = static_cast<std::size_t>(perm[i] - 1)) {
            visited[i] = true;
        }
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

int weak_excedance_count(std::span<const int> perm) {
    validate_permutation(perm);
    int count = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= static_cast<int>(i + 1)) {
            ++count;
        }
    }
    return count;
}

// ---------------------------------------------------------------------------

CharMatrix::CharMatrix(const std::vector<std::vector<int>>& rows) : n_(rows.size()), bits_(n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) {
            throw InvalidArgumentError("characteristic matrix is not square");
        }
        for (std::size_t j = 0; j < n_; ++j) {
            const int v = rows[i][j];
            if (v != 0 && v != 1) {
                throw InvalidArgumentError("characteristic matrix entries must be 0 or 1");
            }
            bits_[i * n_ + j] = static_cast<std::uint8_t>(v);
        }
    }
}

CharMatrix CharMatrix::from_dense(const DenseMatrix& m) {
    if (m.kind() != RingElement::Kind::integer) {
        throw InvalidArgumentError("characteristic matrix must be an integer 0/1 matrix");
    }
    CharMatrix c(m.order());
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            const Integer& v = m(i, j).as_integer();
            if (v != 0 && v != 1) {
                throw InvalidArgumentError("characteristic matrix entries must be 0 or 1");
            }
            c.set(i, j, v == 1);
        }
    }
    return c;
}

DenseMatrix CharMatrix::to_dense() const {
    DenseMatrix m(n_, RingElement(0));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if ((*this)(i, j)) {
                m.set(i, j, RingElement(1));
            }
        }
    }
    return m;
}

bool CharMatrix::admits(std::span<const int> perm) const {
    if (perm.size() != n_) {
        return false;
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (!(*this)(i, static_cast<std::size_t>(perm[i] - 1))) {
            return false;
        }
    }
    return true;
}

const char* provenance_name(Provenance p) noexcept {
    switch (p) {
        case Provenance::ryser:
            return "ryser";
        case Provenance::bareiss:
            return "bareiss";
        case Provenance::closed_form:
            return "closed_form";
        case Provenance::enumeration:
            return "enumeration";
    }
    return "?";
}

std::optional<BandSpec> match_band(const CharMatrix& A) {
    const std::size_t n = A.order();
    if (n == 0) {
        return std::nullopt;
    }
    // The diagonal carries b; k and l are the lengths of the b-runs that
    // start the first row and the first column.
    const bool b = A(0, 0);
    std::size_t k = 0;
    while (k < n && A(0, k) == b) {
        ++k;
    }
    std::size_t l = 0;
    while (l < n && A(l, 0) == b) {
        ++l;
    }
    const auto nn = static_cast<std::int64_t>(n);
    if (k == n && l == n) {
        return std::nullopt;  // constant matrix, a = b
    }
    BandSpec spec = BandSpec::make(nn, static_cast<std::int64_t>(k), static_cast<std::int64_t>(l), b ? 0 : 1,
                                   b ? 1 : 0);
    if (CharMatrix::from_dense(materialize(spec)) == A) {
        return spec;
    }
    return std::nullopt;
}

ParityCount parity_counts(const CharMatrix& A, const Limits& limits) {
    const DenseMatrix dense = A.to_dense();
    ParityCount pc;
    pc.permanent = permanent_ryser(dense, limits.ryser_integer).as_integer();
    pc.permanent_source = Provenance::ryser;
    if (const auto spec = match_band(A)) {
        pc.determinant = det_closed(*spec).as_integer();
        pc.determinant_source = Provenance::closed_form;
    } else {
        pc.determinant = det_bareiss(dense);
        pc.determinant_source = Provenance::bareiss;
    }
    pc.even = exact_half(pc.permanent + pc.determinant, "per + det");
    pc.odd = exact_half(pc.permanent - pc.determinant, "per - det");
    return pc;
}

ParityCount brute_force_parity(const CharMatrix& A, std::size_t max_order) {
    const auto n = static_cast<std::int64_t>(A.order());
    require_enumerable(n, max_order);
    ParityCount pc;
    pc.permanent_source = Provenance::enumeration;
    pc.determinant_source = Provenance::enumeration;
    Permutation p = identity(n);
    do {
        if (!A.admits(p)) {
            continue;
        }
        if (permutation_sign(p) > 0) {
            ++pc.even;
        } else {
            ++pc.odd;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    pc.permanent = pc.even + pc.odd;
    pc.determinant = pc.even - pc.odd;
    return pc;
}

// ---------------------------------------------------------------------------

CharMatrix menage_a_matrix(std::int64_t n) {
    require_positive(n);
    return zero_one_band(n, 2, 1);
}

Integer menage_a_permanent_rec(std::int64_t n) {
    require_positive(n);
    Integer prev2 = 0;  // p_1
    Integer prev1 = 0;  // p_2
    if (n <= 2) {
        return 0;
    }
    for (std::int64_t m = 3; m <= n; ++m) {
        const Integer rhs = Integer(m * m - m - 1) * prev1 + Integer(m) * prev2 + ((m % 2 == 1) ? 2 : -2);
        if (rhs % (m - 1) != 0) {
            throw InexactDivisionError("ménage recurrence not divisible by n-1 at n=" + std::to_string(m));
        }
        prev2 = prev1;
        prev1 = rhs / (m - 1);
    }
    return prev1;
}

Integer menage_a_permanent_sum(std::int64_t n) {
    require_positive(n);
    Integer total = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
        const Integer term = binomial(2 * n - k, k) * factorial(n - k);
        if (k % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

Integer menage_a_det(std::int64_t n) {
    require_positive(n);
    const std::int64_t p = (n % 2 == 0) ? 2 : 1;
    const Integer magnitude = (n - p) / 2;
    return (n % 2 == 1) ? magnitude : Integer(-magnitude);
}

Integer menage_a_det_floor(std::int64_t n) {
    require_positive(n);
    const Integer magnitude = (n - 1) / 2;
    return ((n - 1) % 2 == 0) ? magnitude : Integer(-magnitude);
}

CharMatrix menage_b_matrix(std::int64_t n) {
    require_positive(n);
    return zero_one_band(n, 2, 2);
}

Integer menage_b_det(std::int64_t n) {
    require_positive(n);
    switch (n % 3) {
        case 0:
            return (3 - n) / 3;
        case 1:
            return (n - 1) / 3;
        default:
            return 0;
    }
}

DenseMatrix excedance_matrix(std::int64_t n) {
    require_positive(n);
    return materialize(BandSpec::make(n, n, 1, Poly::constant(1), Poly::variable()));
}

ExcedanceCensus::Entry ExcedanceCensus::at(std::int64_t k) const {
    if (k < 1 || k > n) {
        return {};
    }
    const auto i = static_cast<std::size_t>(k - 1);
    return {eulerian[i], det_coeffs[i], even[i], odd[i]};
}

Integer excedance_det_coeff(std::int64_t n, std::int64_t k) {
    if (k < 1 || k > n) {
        return 0;
    }
    const Integer c = binomial(n - 1, k - 1);
    return ((n - k) % 2 == 0) ? c : Integer(-c);
}

namespace {

void split_census(ExcedanceCensus& census) {
    const auto n = static_cast<std::size_t>(census.n);
    census.even.resize(n);
    census.odd.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        census.even[i] = exact_half(census.eulerian[i] + census.det_coeffs[i], "T(n,k) + c(n,k)");
        census.odd[i] = exact_half(census.eulerian[i] - census.det_coeffs[i], "T(n,k) - c(n,k)");
    }
}

}  // namespace

ExcedanceCensus excedance_census(std::int64_t n, const Limits& limits) {
    require_positive(n);
    const DenseMatrix c = excedance_matrix(n);
    const Poly per = permanent_ryser(c, limits.ryser_polynomial).as_poly();
    const Poly det = det_closed(BandSpec::make(n, n, 1, Poly::constant(1), Poly::variable())).as_poly();

    if (!per.coeff(0).is_zero() || per.degree() > n || det.degree() > n) {
        throw InvariantError("excedance polynomials have coefficients outside b^1..b^n");
    }
    ExcedanceCensus census;
    census.n = n;
    for (std::int64_t k = 1; k <= n; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        census.eulerian.push_back(per.coeff(idx));
        census.det_coeffs.push_back(det.coeff(idx));
        if (census.det_coeffs.back() != excedance_det_coeff(n, k)) {
            throw InvariantError("determinant coefficient of b^" + std::to_string(k) +
                                 " disagrees with the binomial formula");
        }
    }
    split_census(census);
    return census;
}

ExcedanceCensus brute_force_excedance_census(std::int64_t n, std::size_t max_order) {
    require_positive(n);
    require_enumerable(n, max_order);
    const auto size = static_cast<std::size_t>(n);
    ExcedanceCensus census;
    census.n = n;
    census.eulerian.assign(size, 0);
    census.det_coeffs.assign(size, 0);
    census.even.assign(size, 0);
    census.odd.assign(size, 0);
    Permutation p = identity(n);
    do {
        // pi(1) >= 1 always holds, so the count is at least 1
        const auto idx = static_cast<std::size_t>(weak_excedance_count(p) - 1);
        ++census.eulerian[idx];
        if (permutation_sign(p) > 0) {
            ++census.even[idx];
            ++census.det_coeffs[idx];
        } else {
            ++census.odd[idx];
            --census.det_coeffs[idx];
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return census;
}

std::vector<Permutation> permutations_with_weak_excedances(std::int64_t n, std::int64_t k, std::size_t max_order) {
    require_positive(n);
    require_enumerable(n, max_order);
    std::vector<Permutation> out;
    Permutation p = identity(n);
    do {
        if (weak_excedance_count(p) == k) {
            out.push_back(p);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// ---------------------------------------------------------------------------

void check_row(const CensusRow& row) {
    if (row.even < 0 || row.odd < 0 || row.even + row.odd != row.per || row.even - row.odd != row.det) {
        throw InvariantError("census row n=" + std::to_string(row.n) + " violates even+odd=per / even-odd=det");
    }
}

std::vector<CensusRow> census_table(Family family, std::int64_t n_max, const Limits& limits) {
    require_positive(n_max);
    std::vector<CensusRow> rows;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        CensusRow row;
        row.n = n;
        if (family == Family::excedance_k2) {
            const auto e = excedance_census(n, limits).at(2);
            row.per = e.total;
            row.det = e.difference;
            row.even = e.even;
            row.odd = e.odd;
        } else {
            const CharMatrix A = (family == Family::menage_a) ? menage_a_matrix(n) : menage_b_matrix(n);
            const ParityCount pc = parity_counts(A, limits);
            row.per = pc.permanent;
            row.det = pc.determinant;
            row.even = pc.even;
            row.odd = pc.odd;
        }
        check_row(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace bandet
