#include "bandet/band.hpp"

#include <algorithm>

namespace bandet {

namespace {

void require_order(std::int64_t n) {
    if (n < 1) {
        throw InvalidArgumentError("matrix order must be at least 1, got " + std::to_string(n));
    }
}

void require_same_ring(const RingElement& a, const RingElement& b) {
    if (!a.same_ring(b)) {
        throw MixedRingError("a and b must belong to the same ring");
    }
}

// The integer multiple in the affine tail; divisibility is a consequence
// of the residue convention, so a failure here means bad parameters
// slipped through.
Integer exact_quotient(std::int64_t num, std::int64_t den) {
    if (den == 0 || num % den != 0) {
        throw DivisibilityError(std::to_string(num) + " is not divisible by " + std::to_string(den));
    }
    return Integer(num / den);
}

}  // namespace

BandSpec BandSpec::make(std::int64_t n, std::int64_t k, std::int64_t l, RingElement a, RingElement b) {
    require_order(n);
    if (k < 1 || l < 1) {
        throw InvalidArgumentError("band widths k and l must be at least 1");
    }
    require_same_ring(a, b);
    if (a == b) {
        throw InvalidArgumentError("a and b must differ");
    }
    return BandSpec(n, k, l, std::move(a), std::move(b));
}

std::int64_t BandSpec::upper() const noexcept { return std::max(std::min(k_, n_), std::min(l_, n_)); }

std::int64_t BandSpec::lower() const noexcept { return std::min(std::min(k_, n_), std::min(l_, n_)); }

bool BandSpec::transposed() const noexcept { return std::min(l_, n_) > std::min(k_, n_); }

BandResidue residue_upper_only(std::int64_t n, std::int64_t k) {
    require_order(n);
    if (k < 1) {
        throw InvalidArgumentError("k must be at least 1");
    }
    std::int64_t p = n % k;
    if (p == 0) {
        p = k;
    }
    return {p, (n - p) / k, BandCase::lower_width_one};
}

BandResidue residue_two_sided(std::int64_t n, std::int64_t k, std::int64_t l) {
    require_order(n);
    if (k < 1 || l < 1) {
        throw InvalidArgumentError("k and l must be at least 1");
    }
    const std::int64_t modulus = k + l - 1;
    return {n % modulus, n / modulus, BandCase::wide_lower};
}

BandResidue residue(const BandSpec& spec) {
    if (spec.lower() == 1) {
        return residue_upper_only(spec.n(), spec.upper());
    }
    return residue_two_sided(spec.n(), spec.upper(), spec.lower());
}

RingElement entry(const BandSpec& spec, std::int64_t i, std::int64_t j) {
    if (i < 1 || j < 1 || i > spec.n() || j > spec.n()) {
        throw IndexOutOfRangeError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                   ") outside order " + std::to_string(spec.n()));
    }
    return spec.in_band(i, j) ? spec.b() : spec.a();
}

DenseMatrix materialize(const BandSpec& spec) {
    const auto n = static_cast<std::size_t>(spec.n());
    DenseMatrix m(n, spec.a());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (spec.in_band(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j))) {
                m.set(i, j, spec.b());
            }
        }
    }
    return m;
}

RingElement ClosedForm::expand() const {
    if (vanishes()) {
        return base.zero();
    }
    RingElement v = pow(base, exponent) * tail;
    return sign < 0 ? -v : v;
}

std::string ClosedForm::to_string() const {
    if (vanishes()) {
        return "0";
    }
    std::string tail_str = tail.to_string();
    if (tail_str.find_first_of("+-") != std::string::npos) {
        tail_str = "(" + tail_str + ")";
    }
    return std::string(sign < 0 ? "-" : "") + "(" + base.to_string() + ")^" + std::to_string(exponent) + "·" +
           tail_str;
}

ClosedForm det_case1_form(std::int64_t n, std::int64_t k, const RingElement& a, const RingElement& b) {
    require_order(n);
    if (k < 1 || k > n) {
        throw InvalidArgumentError("upper width must satisfy 1 <= k <= n");
    }
    require_same_ring(a, b);
    const BandResidue res = residue_upper_only(n, k);
    ClosedForm form;
    form.base = b - a;
    form.exponent = static_cast<std::uint64_t>(n - 1);
    form.tail = b + scalar_mul(exact_quotient(n - res.p, k), a);
    form.residue = res;
    return form;
}

RingElement det_case1(std::int64_t n, std::int64_t k, const RingElement& a, const RingElement& b) {
    return det_case1_form(n, k, a, b).expand();
}

namespace detail {

ClosedForm det_case2_form(std::int64_t n, std::int64_t k, std::int64_t l, const RingElement& a,
                          const RingElement& b, SignRule rule) {
    require_order(n);
    if (!(1 < l && l <= k && k <= n)) {
        throw InvalidArgumentError("widths must satisfy 1 < l <= k <= n");
    }
    require_same_ring(a, b);
    const std::int64_t modulus = k + l - 1;
    const BandResidue res = residue_two_sided(n, k, l);

    ClosedForm form;
    form.base = b - a;
    form.exponent = static_cast<std::uint64_t>(n - 1);
    form.residue = res;
    if (res.p > 1) {
        form.sign = 0;
        form.tail = a.zero();
        return form;
    }

    const std::int64_t numerator = (res.p == 0) ? n - modulus : n - 1;
    form.tail = b + scalar_mul(exact_quotient(numerator, modulus), a);

    const std::int64_t s = (rule == SignRule::exact) ? res.quotient : res.quotient + 1;
    const bool odd = ((k - 1) % 2 != 0) && ((l - 1) % 2 != 0) && (s % 2 != 0);
    form.sign = odd ? -1 : 1;
    return form;
}

ClosedForm det_closed_form(const BandSpec& spec, SignRule rule) {
    if (spec.lower() == 1) {
        return det_case1_form(spec.n(), spec.upper(), spec.a(), spec.b());
    }
    return det_case2_form(spec.n(), spec.upper(), spec.lower(), spec.a(), spec.b(), rule);
}

}  // namespace detail

ClosedForm det_case2_form(std::int64_t n, std::int64_t k, std::int64_t l, const RingElement& a,
                          const RingElement& b) {
    return detail::det_case2_form(n, k, l, a, b, detail::SignRule::exact);
}

RingElement det_case2(std::int64_t n, std::int64_t k, std::int64_t l, const RingElement& a, const RingElement& b) {
    return det_case2_form(n, k, l, a, b).expand();
}

ClosedForm det_closed_form(const BandSpec& spec) { return detail::det_closed_form(spec, detail::SignRule::exact); }

RingElement det_closed(const BandSpec& spec) { return det_closed_form(spec).expand(); }

RingElement f_closed(std::int64_t n, const RingElement& a, const RingElement& b, std::int64_t k) {
    require_order(n);
    if (k < 1) {
        throw InvalidArgumentError("k must be at least 1");
    }
    require_same_ring(a, b);
    return pow(b - a, static_cast<std::uint64_t>(n - 1)) * a;
}

DenseMatrix bordered_matrix(std::int64_t n, std::int64_t k, const RingElement& a, const RingElement& b) {
    require_order(n);
    if (k < 1) {
        throw InvalidArgumentError("k must be at least 1");
    }
    require_same_ring(a, b);
    const auto order = static_cast<std::size_t>(n);
    DenseMatrix m(order, a);
    for (std::size_t i = 0; i + 1 < order; ++i) {
        for (std::size_t j = 0; j + 1 < order; ++j) {
            const auto d = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
            if (0 <= d && d < k) {
                m.set(i, j, b);
            }
        }
    }
    return m;
}

RingElement g_closed(std::int64_t n, const RingElement& a, const RingElement& b) {
    require_order(n);
    require_same_ring(a, b);
    return pow(b - a, static_cast<std::uint64_t>(n - 1)) * b;
}

RingElement det_recurrence(std::int64_t n, std::int64_t k, const RingElement& a, const RingElement& b) {
    require_order(n);
    if (k < 1 || k >= n) {
        throw InvalidArgumentError("recurrence needs 1 <= k < n");
    }
    require_same_ring(a, b);
    const RingElement diff = b - a;
    const RingElement step = pow(diff, static_cast<std::uint64_t>(k));

    // d_n = sum of scale_i * (b-a)^(m_i - 1) a over the unrolled steps,
    // closed by scale * (b-a)^(m - 1) (b + a) once 2k >= m.
    RingElement acc = a.zero();
    RingElement scale = a.one();
    std::int64_t m = n;
    while (2 * k < m) {
        acc += scale * pow(diff, static_cast<std::uint64_t>(m - 1)) * a;
        scale *= step;
        m -= k;
    }
    acc += scale * pow(diff, static_cast<std::uint64_t>(m - 1)) * (b + a);
    return acc;
}

std::int64_t all_b_row_count(const BandSpec& spec) {
    return std::max<std::int64_t>(spec.upper() + spec.lower() - spec.n(), 0);
}

}  // namespace bandet
