#include "bandet/ring.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace bandet {

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Integer c) { return Poly(std::vector<Integer>{std::move(c)}); }

Poly Poly::variable() { return Poly(std::vector<Integer>{0, 1}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Integer Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

Integer Poly::evaluate(const Integer& at) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Integer& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        Integer mag = abs(c);
        if (c < 0) {
            os << "-";
        } else if (!first) {
            os << "+";
        }
        if (i == 0 || mag != 1) {
            os << mag;
        }
        if (i >= 1) {
            os << "b";
        }
        if (i >= 2) {
            os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator*=(const Integer& s) {
    for (auto& c : coeffs_) {
        c *= s;
    }
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

// ---------------------------------------------------------------------------

const char* ring_name(RingElement::Kind kind) noexcept {
    switch (kind) {
        case RingElement::Kind::integer:
            return "integer";
        case RingElement::Kind::polynomial:
            return "polynomial";
    }
    return "?";
}

namespace {

[[noreturn]] void throw_mixed(const RingElement& x, const RingElement& y) {
    throw MixedRingError(std::string("mixed-ring operation: ") + ring_name(x.kind()) + " and " +
                         ring_name(y.kind()));
}

}  // namespace

const Integer& RingElement::as_integer() const {
    if (const auto* v = std::get_if<Integer>(&value_)) {
        return *v;
    }
    throw MixedRingError("expected an integer, got a polynomial");
}

const Poly& RingElement::as_poly() const {
    if (const auto* v = std::get_if<Poly>(&value_)) {
        return *v;
    }
    throw MixedRingError("expected a polynomial, got an integer");
}

RingElement RingElement::zero() const {
    return is_integer() ? RingElement(Integer(0)) : RingElement(Poly());
}

RingElement RingElement::one() const {
    return is_integer() ? RingElement(Integer(1)) : RingElement(Poly::constant(1));
}

bool RingElement::is_zero() const noexcept {
    return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

std::string RingElement::to_string() const {
    if (is_integer()) {
        return std::get<Integer>(value_).str();
    }
    return std::get<Poly>(value_).to_string();
}

RingElement RingElement::operator-() const {
    return std::visit([](const auto& v) { return RingElement(std::decay_t<decltype(v)>(-v)); }, value_);
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
    if (!same_ring(rhs)) {
        throw_mixed(*this, rhs);
    }
    std::visit([&](auto& v) { v += std::get<std::decay_t<decltype(v)>>(rhs.value_); }, value_);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
    if (!same_ring(rhs)) {
        throw_mixed(*this, rhs);
    }
    std::visit([&](auto& v) { v -= std::get<std::decay_t<decltype(v)>>(rhs.value_); }, value_);
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& rhs) {
    if (!same_ring(rhs)) {
        throw_mixed(*this, rhs);
    }
    if (is_integer()) {
        std::get<Integer>(value_) *= std::get<Integer>(rhs.value_);
    } else {
        value_ = std::get<Poly>(value_) * std::get<Poly>(rhs.value_);
    }
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.to_string(); }

RingElement add(const RingElement& x, const RingElement& y) { return x + y; }

RingElement mul(const RingElement& x, const RingElement& y) { return x * y; }

RingElement pow(const RingElement& x, std::uint64_t e) {
    RingElement result = x.one();
    RingElement base = x;
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

RingElement scalar_mul(const Integer& s, const RingElement& x) {
    if (x.is_integer()) {
        return RingElement(Integer(s * x.as_integer()));
    }
    Poly p = x.as_poly();
    p *= s;
    return RingElement(std::move(p));
}

Integer coeff(const Poly& p, std::size_t k) { return p.coeff(k); }

RingElement evaluate(const RingElement& x, const Integer& at) {
    if (x.is_integer()) {
        return x;
    }
    return RingElement(x.as_poly().evaluate(at));
}

}  // namespace bandet
