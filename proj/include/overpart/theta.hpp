#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "overpart/series.hpp"

namespace overpart {

// Finite multiset of (subscript r, exponent e) pairs describing a product
// prod_r f_r^e, with f_r = (1-q^r)(1-q^{2r})(1-q^{3r})...  Subscripts may
// repeat; exponents accumulate. Negative exponents are taken via the
// truncated inverse.
struct EtaQuotientSpec {
    std::vector<std::pair<unsigned, int>> factors;
};

// f_r truncated at `order`; factors (1 - q^{kr}) with kr >= order contribute
// nothing, so the finite product is exact. Rejects r = 0.
TruncatedSeries euler_factor(unsigned r, const CoefficientRing& ring, std::size_t order);

TruncatedSeries eta_quotient(const EtaQuotientSpec& spec, const CoefficientRing& ring,
                             std::size_t order);

// phi(q^m) = 1 + 2 sum_{k>=1} q^{m k^2}; rejects m = 0.
TruncatedSeries phi(unsigned m, const CoefficientRing& ring, std::size_t order);

// psi(q^m) = sum_{k>=0} q^{m k(k+1)/2}; rejects m = 0.
TruncatedSeries psi(unsigned m, const CoefficientRing& ring, std::size_t order);

// phi(-q) built directly: sign (-1)^k at exponent k^2. An independent
// construction from the eta-quotient route, so the two can be cross-checked.
TruncatedSeries phi_neg(const CoefficientRing& ring, std::size_t order);

// prod_{i : 2^i < order} phi(q^{2^i})^{2^i}. Omitted factors are 1 + O(q^order),
// so the finite product is exact at the truncation.
TruncatedSeries phi_dyadic_product(const CoefficientRing& ring, std::size_t order);

// phi(q) = phi(q^4) + 2 q psi(q^8), checked coefficientwise at `order`.
bool verify_lemma_dissection(std::size_t order);

// phi(-q) = f_1^2 / f_2: direct alternating construction vs. eta quotient.
bool verify_lemma_phi_neg(std::size_t order);

// 1/phi(-q) = prod_{i>=0} phi(q^{2^i})^{2^i} at the truncation order.
bool verify_lemma_infprod(std::size_t order);

}  // namespace overpart
