#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "overpart/integer.hpp"

namespace overpart {

// Coefficient domain of a truncated series: exact integers, or integers
// modulo 2^k with canonical residues in [0, 2^k), 1 <= k <= 64.
class CoefficientRing {
public:
    static CoefficientRing exact_integer() { return CoefficientRing(0); }
    static CoefficientRing mod2_power(unsigned exponent);

    bool is_exact() const { return exponent_ == 0; }
    bool is_modular() const { return exponent_ != 0; }

    // Modulus exponent k of a modular ring; rejects the exact ring.
    unsigned exponent() const;

    // Canonical representative of value in this ring.
    Integer reduce(const Integer& value) const;

    // Units: +-1 in the exact ring, odd residues modulo 2^k.
    bool is_unit(const Integer& canonical) const;
    Integer invert_unit(const Integer& canonical) const;

    std::string name() const;

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

private:
    explicit CoefficientRing(unsigned exponent) : exponent_(exponent) {}

    unsigned exponent_;  // 0 marks the exact-integer ring
};

// Power series in q truncated at a fixed order N: coefficients of q^0..q^{N-1}.
// Immutable after construction; every operation returns a new series. All
// binary operations require identical ring and order -- there is no implicit
// coercion between rings and products never extend the truncation.
class TruncatedSeries {
public:
    // Coefficients are padded with zeros up to `order` and reduced into the
    // ring. Rejects order 0 and more than `order` values.
    TruncatedSeries(CoefficientRing ring, std::size_t order,
                    std::vector<Integer> values = {});

    static TruncatedSeries zero(CoefficientRing ring, std::size_t order);
    static TruncatedSeries one(CoefficientRing ring, std::size_t order);
    // c * q^exponent (zero if exponent >= order).
    static TruncatedSeries monomial(CoefficientRing ring, std::size_t order,
                                    std::size_t exponent, const Integer& c = 1);

    const CoefficientRing& ring() const { return ring_; }
    std::size_t order() const { return coeffs_.size(); }
    const std::vector<Integer>& coefficients() const { return coeffs_; }

    // Coefficient of q^n; rejects n >= order.
    const Integer& coefficient(std::size_t n) const;

    TruncatedSeries add(const TruncatedSeries& other) const;
    TruncatedSeries sub(const TruncatedSeries& other) const;
    TruncatedSeries scalar_mul(const Integer& c) const;

    // Cauchy product truncated at the common order.
    TruncatedSeries mul(const TruncatedSeries& other) const;

    // Repeated squaring at fixed truncation; pow(a, 0) = 1.
    TruncatedSeries pow(unsigned long e) const;

    // Multiplicative inverse at the truncation order. The constant term must
    // be a unit; b_n = -a_0^{-1} sum_{i=1..n} a_i b_{n-i}.
    TruncatedSeries inverse() const;

    // q -> q^m: coefficient a_i moves to index m*i, same order, tail dropped.
    // Rejects m = 0.
    TruncatedSeries substitute_power(std::size_t m) const;

    // Coefficients at indices r, m+r, 2m+r, ... with exponents compressed by m
    // (the explicit q^r factor is stripped). Result order ceil((N-r)/m),
    // clamped to at least 1. Rejects r >= m.
    TruncatedSeries dissect(std::size_t m, std::size_t r) const;

    // Ring change by canonical reduction into Z/2^k. Allowed from the exact
    // ring or from a modular ring with exponent >= k.
    TruncatedSeries reduce_mod(unsigned k) const;

    bool is_zero() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void require_same_shape(const TruncatedSeries& other, const char* op) const;

    CoefficientRing ring_;
    std::vector<Integer> coeffs_;
};

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a.add(b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a.sub(b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a.mul(b);
}
inline TruncatedSeries operator*(const Integer& c, const TruncatedSeries& a)
{
    return a.scalar_mul(c);
}

// "1 - q + 2*q^3 + ..." with at most max_terms nonzero terms shown.
std::string to_string(const TruncatedSeries& s, std::size_t max_terms = 16);
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

}  // namespace overpart
