#include "overpart/theta.hpp"

#include <map>
#include <stdexcept>

namespace overpart {

TruncatedSeries euler_factor(unsigned r, const CoefficientRing& ring, std::size_t order)
{
    if (r == 0)
        throw std::invalid_argument("euler_factor: subscript r must be at least 1");
    std::vector<Integer> c(order);
    c[0] = 1;
    // Multiply by (1 - q^{kr}) in place; descending j keeps c[j - s] unread.
    for (std::size_t s = r; s < order; s += r) {
        for (std::size_t j = order - 1; j >= s; --j) {
            c[j] -= c[j - s];
            if (j == s)
                break;
        }
    }
    return TruncatedSeries(ring, order, std::move(c));
}

TruncatedSeries eta_quotient(const EtaQuotientSpec& spec, const CoefficientRing& ring,
                             std::size_t order)
{
    std::map<unsigned, long> exponents;
    for (const auto& [r, e] : spec.factors)
        exponents[r] += e;

    TruncatedSeries numerator = TruncatedSeries::one(ring, order);
    TruncatedSeries denominator = TruncatedSeries::one(ring, order);
    for (const auto& [r, e] : exponents) {
        if (e == 0)
            continue;
        const TruncatedSeries base = euler_factor(r, ring, order);
        const unsigned long mag = e > 0 ? static_cast<unsigned long>(e)
                                        : static_cast<unsigned long>(-e);
        if (e > 0)
            numerator = numerator.mul(base.pow(mag));
        else
            denominator = denominator.mul(base.pow(mag));
    }
    return numerator.mul(denominator.inverse());
}

TruncatedSeries phi(unsigned m, const CoefficientRing& ring, std::size_t order)
{
    if (m == 0)
        throw std::invalid_argument("phi: argument scale m must be at least 1");
    std::vector<Integer> c(order);
    c[0] = 1;
    for (std::size_t k = 1; m * k * k < order; ++k)
        c[m * k * k] = 2;
    return TruncatedSeries(ring, order, std::move(c));
}

TruncatedSeries psi(unsigned m, const CoefficientRing& ring, std::size_t order)
{
    if (m == 0)
        throw std::invalid_argument("psi: argument scale m must be at least 1");
    std::vector<Integer> c(order);
    for (std::size_t k = 0; m * (k * (k + 1) / 2) < order; ++k)
        c[m * (k * (k + 1) / 2)] = 1;
    return TruncatedSeries(ring, order, std::move(c));
}

TruncatedSeries phi_neg(const CoefficientRing& ring, std::size_t order)
{
    std::vector<Integer> c(order);
    c[0] = 1;
    for (std::size_t k = 1; k * k < order; ++k)
        c[k * k] = (k % 2 == 0) ? 2 : -2;
    return TruncatedSeries(ring, order, std::move(c));
}

TruncatedSeries phi_dyadic_product(const CoefficientRing& ring, std::size_t order)
{
    // Horner form: R_i = phi(q^{2^i}) * R_{i+1}^2 gives R_0 = prod phi(q^{2^i})^{2^i}.
    std::vector<unsigned long> scales;
    for (unsigned long s = 1; s < order; s *= 2) {
        scales.push_back(s);
        if (s > order / 2)
            break;
    }
    TruncatedSeries result = TruncatedSeries::one(ring, order);
    for (auto it = scales.rbegin(); it != scales.rend(); ++it)
        result = phi(static_cast<unsigned>(*it), ring, order).mul(result.mul(result));
    return result;
}

bool verify_lemma_dissection(std::size_t order)
{
    const CoefficientRing ring = CoefficientRing::exact_integer();
    const TruncatedSeries lhs = phi(1, ring, order);
    const TruncatedSeries shifted_psi =
        psi(8, ring, order).mul(TruncatedSeries::monomial(ring, order, 1));
    const TruncatedSeries rhs = phi(4, ring, order).add(shifted_psi.scalar_mul(2));
    return lhs == rhs;
}

bool verify_lemma_phi_neg(std::size_t order)
{
    const CoefficientRing ring = CoefficientRing::exact_integer();
    const EtaQuotientSpec spec{{{1, 2}, {2, -1}}};
    return phi_neg(ring, order) == eta_quotient(spec, ring, order);
}

bool verify_lemma_infprod(std::size_t order)
{
    const CoefficientRing ring = CoefficientRing::exact_integer();
    return phi_neg(ring, order).inverse() == phi_dyadic_product(ring, order);
}

}  // namespace overpart
