#include "overpart/series.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace overpart {

CoefficientRing CoefficientRing::mod2_power(unsigned exponent)
{
    if (exponent < 1 || exponent > 64)
        throw std::invalid_argument("mod2_power: exponent " + std::to_string(exponent) +
                                    " outside [1, 64]");
    return CoefficientRing(exponent);
}

unsigned CoefficientRing::exponent() const
{
    if (is_exact())
        throw std::invalid_argument("exponent: exact-integer ring has no modulus");
    return exponent_;
}

Integer CoefficientRing::reduce(const Integer& value) const
{
    if (is_exact())
        return value;
    return mod_pow2(value, exponent_);
}

bool CoefficientRing::is_unit(const Integer& canonical) const
{
    if (is_exact())
        return canonical == 1 || canonical == -1;
    return mpz_odd_p(canonical.get_mpz_t());
}

Integer CoefficientRing::invert_unit(const Integer& canonical) const
{
    if (!is_unit(canonical))
        throw std::domain_error("invert_unit: " + canonical.get_str() +
                                " is not a unit in " + name());
    if (is_exact())
        return canonical;  // +-1 are self-inverse
    Integer r;
    Integer mod = pow2(exponent_);
    mpz_invert(r.get_mpz_t(), canonical.get_mpz_t(), mod.get_mpz_t());
    return r;
}

std::string CoefficientRing::name() const
{
    if (is_exact())
        return "Z";
    return "Z/2^" + std::to_string(exponent_);
}

TruncatedSeries::TruncatedSeries(CoefficientRing ring, std::size_t order,
                                 std::vector<Integer> values)
    : ring_(ring)
{
    if (order == 0)
        throw std::invalid_argument("TruncatedSeries: order must be at least 1");
    if (values.size() > order)
        throw std::invalid_argument("TruncatedSeries: " + std::to_string(values.size()) +
                                    " coefficients exceed order " + std::to_string(order));
    values.resize(order);
    if (ring_.is_modular()) {
        for (Integer& v : values)
            v = ring_.reduce(v);
    }
    coeffs_ = std::move(values);
}

TruncatedSeries TruncatedSeries::zero(CoefficientRing ring, std::size_t order)
{
    return TruncatedSeries(ring, order);
}

TruncatedSeries TruncatedSeries::one(CoefficientRing ring, std::size_t order)
{
    return TruncatedSeries(ring, order, {Integer(1)});
}

TruncatedSeries TruncatedSeries::monomial(CoefficientRing ring, std::size_t order,
                                          std::size_t exponent, const Integer& c)
{
    TruncatedSeries s(ring, order);
    if (exponent < order)
        s.coeffs_[exponent] = ring.reduce(c);
    return s;
}

const Integer& TruncatedSeries::coefficient(std::size_t n) const
{
    if (n >= order())
        throw std::out_of_range("coefficient: index " + std::to_string(n) +
                                " not below order " + std::to_string(order()));
    return coeffs_[n];
}

void TruncatedSeries::require_same_shape(const TruncatedSeries& other, const char* op) const
{
    if (ring_ != other.ring_)
        throw std::invalid_argument(std::string(op) + ": ring mismatch (" + ring_.name() +
                                    " vs " + other.ring_.name() + ")");
    if (order() != other.order())
        throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                    std::to_string(order()) + " vs " +
                                    std::to_string(other.order()) + ")");
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& other) const
{
    require_same_shape(other, "add");
    TruncatedSeries r = *this;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] += other.coeffs_[i];
        if (ring_.is_modular())
            r.coeffs_[i] = ring_.reduce(r.coeffs_[i]);
    }
    return r;
}

TruncatedSeries TruncatedSeries::sub(const TruncatedSeries& other) const
{
    require_same_shape(other, "sub");
    TruncatedSeries r = *this;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] -= other.coeffs_[i];
        if (ring_.is_modular())
            r.coeffs_[i] = ring_.reduce(r.coeffs_[i]);
    }
    return r;
}

TruncatedSeries TruncatedSeries::scalar_mul(const Integer& c) const
{
    TruncatedSeries r = *this;
    for (Integer& v : r.coeffs_) {
        v *= c;
        if (ring_.is_modular())
            v = ring_.reduce(v);
    }
    return r;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& other) const
{
    require_same_shape(other, "mul");
    const std::size_t n = order();
    TruncatedSeries r(ring_, n);
    const std::vector<Integer>& a = coeffs_;
    const std::vector<Integer>& b = other.coeffs_;
    for (std::size_t i = 0; i < n; ++i) {
        if (mpz_sgn(a[i].get_mpz_t()) == 0)
            continue;
        for (std::size_t j = 0; j + i < n; ++j)
            mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    if (ring_.is_modular()) {
        for (Integer& v : r.coeffs_)
            v = ring_.reduce(v);
    }
    return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned long e) const
{
    TruncatedSeries result = one(ring_, order());
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1)
            result = result.mul(base);
        e >>= 1;
        if (e > 0)
            base = base.mul(base);
    }
    return result;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    const Integer& a0 = coeffs_[0];
    if (!ring_.is_unit(a0))
        throw std::domain_error("inverse: constant term " + a0.get_str() +
                                " is not a unit in " + ring_.name());
    const Integer a0_inv = ring_.invert_unit(a0);
    const std::size_t n = order();
    TruncatedSeries r(ring_, n);
    r.coeffs_[0] = a0_inv;
    Integer acc;
    for (std::size_t k = 1; k < n; ++k) {
        acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (mpz_sgn(coeffs_[i].get_mpz_t()) == 0)
                continue;
            mpz_addmul(acc.get_mpz_t(), coeffs_[i].get_mpz_t(), r.coeffs_[k - i].get_mpz_t());
        }
        r.coeffs_[k] = ring_.reduce(-a0_inv * acc);
    }
    return r;
}

TruncatedSeries TruncatedSeries::substitute_power(std::size_t m) const
{
    if (m == 0)
        throw std::invalid_argument("substitute_power: m must be at least 1");
    if (m == 1)
        return *this;
    const std::size_t n = order();
    TruncatedSeries r(ring_, n);
    for (std::size_t i = 0; i * m < n; ++i)
        r.coeffs_[i * m] = coeffs_[i];
    return r;
}

TruncatedSeries TruncatedSeries::dissect(std::size_t m, std::size_t r) const
{
    if (r >= m)
        throw std::invalid_argument("dissect: residue " + std::to_string(r) +
                                    " not below modulus " + std::to_string(m));
    const std::size_t n = order();
    const std::size_t out = n > r ? (n - r + m - 1) / m : 1;
    TruncatedSeries result(ring_, out);
    for (std::size_t i = 0; i * m + r < n; ++i)
        result.coeffs_[i] = coeffs_[i * m + r];
    return result;
}

TruncatedSeries TruncatedSeries::reduce_mod(unsigned k) const
{
    CoefficientRing target = CoefficientRing::mod2_power(k);
    if (ring_.is_modular() && k > ring_.exponent())
        throw std::invalid_argument("reduce_mod: cannot widen " + ring_.name() + " to " +
                                    target.name());
    TruncatedSeries result(target, order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        result.coeffs_[i] = target.reduce(coeffs_[i]);
    return result;
}

bool TruncatedSeries::is_zero() const
{
    for (const Integer& v : coeffs_)
        if (v != 0)
            return false;
    return true;
}

std::string to_string(const TruncatedSeries& s, std::size_t max_terms)
{
    std::ostringstream os;
    std::size_t shown = 0;
    bool any = false;
    for (std::size_t i = 0; i < s.order(); ++i) {
        const Integer& c = s.coefficient(i);
        if (c == 0)
            continue;
        if (shown == max_terms) {
            os << " + ...";
            return os.str();
        }
        const Integer mag = abs(c);
        if (any)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1)
                os << mag.get_str() << "*";
            os << "q";
            if (i > 1)
                os << "^" << i;
        }
        any = true;
        ++shown;
    }
    if (!any)
        os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s)
{
    return os << to_string(s);
}

}  // namespace overpart
