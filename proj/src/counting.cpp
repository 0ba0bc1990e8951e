#include "overpart/counting.hpp"

#include <cmath>
#include <stdexcept>

#include "overpart/theta.hpp"

namespace overpart {

namespace {

bool is_positive_square(std::uint64_t n)
{
    if (n == 0)
        return false;
    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (root * root > n)
        --root;
    while ((root + 1) * (root + 1) <= n)
        ++root;
    return root * root == n;
}

}  // namespace

TruncatedSeries counts_direct(unsigned t, std::size_t order)
{
    if (t == 0)
        throw std::invalid_argument("counts_direct: t must be at least 1");
    const CoefficientRing ring = CoefficientRing::exact_integer();
    const EtaQuotientSpec spec{{{2, 1}, {1, -2}}};
    return eta_quotient(spec, ring, order).pow(t);
}

TruncatedSeries counts_via_phi_product(unsigned t, std::size_t order)
{
    if (t == 0)
        throw std::invalid_argument("counts_via_phi_product: t must be at least 1");
    return phi_dyadic_product(CoefficientRing::exact_integer(), order).pow(t);
}

bool CongruenceReport::all_claims_hold() const
{
    for (const ClassResult& c : classes)
        if (c.required_valuation > 0 && !c.holds())
            return false;
    return true;
}

CongruenceReport check_congruences(unsigned t, std::uint64_t max_n)
{
    CongruenceReport report;
    report.t = t;
    report.max_n = max_n;
    report.exploratory = (t % 2 == 0);
    for (unsigned r = 0; r < 8; ++r) {
        report.classes[r].residue = r;
        report.classes[r].required_valuation = kClassValuations[r];
    }

    const TruncatedSeries counts = counts_direct(t, static_cast<std::size_t>(max_n) + 1);
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        ClassResult& cls = report.classes[n % 8];
        const Integer& value = counts.coefficient(static_cast<std::size_t>(n));
        if (n >= 1) {
            const unsigned long val = v2(value);
            if (!cls.observed_min_valuation || val < *cls.observed_min_valuation)
                cls.observed_min_valuation = val;
        }
        if (cls.required_valuation == 0) {
            ++cls.verified_count;  // informational class: nothing to verify
            continue;
        }
        if (divisible_by_pow2(value, cls.required_valuation)) {
            ++cls.verified_count;
        } else {
            ++cls.failed_count;
            if (!cls.first_counterexample)
                cls.first_counterexample =
                    Counterexample{n, value, mod_pow2(value, cls.required_valuation)};
        }
    }
    return report;
}

Mod2Characterization characterize_mod2(unsigned t, std::uint64_t max_n)
{
    if (t == 0)
        throw std::invalid_argument("characterize_mod2: t must be at least 1");
    Mod2Characterization result;
    result.t = t;
    result.max_n = max_n;
    result.holds = true;

    const TruncatedSeries counts = counts_direct(t, static_cast<std::size_t>(max_n) + 1);
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        const Integer& value = counts.coefficient(static_cast<std::size_t>(n));
        const bool ok = (n == 0) ? value == 1 : mpz_even_p(value.get_mpz_t());
        if (!ok) {
            result.holds = false;
            result.first_violation = n;
            break;
        }
    }
    return result;
}

bool check_mod2_characterization(unsigned t, std::uint64_t max_n)
{
    return characterize_mod2(t, max_n).holds;
}

Mod4Characterization characterize_mod4(unsigned t, std::uint64_t max_n)
{
    if (t % 2 == 0)
        throw std::invalid_argument("characterize_mod4: t = " + std::to_string(t) +
                                    " is even; the characterization requires odd t");
    Mod4Characterization result;
    result.t = t;
    result.max_n = max_n;
    result.holds = true;

    const TruncatedSeries counts = counts_direct(t, static_cast<std::size_t>(max_n) + 1);
    for (std::uint64_t n = 0; n <= max_n; ++n) {
        const Integer residue = mod_pow2(counts.coefficient(static_cast<std::size_t>(n)), 2);
        if (residue == 2)
            result.positions_two_mod4.push_back(n);
        const Integer expected = (n == 0) ? 1 : (is_positive_square(n) ? 2 : 0);
        if (residue != expected && result.holds) {
            result.holds = false;
            result.first_violation = n;
        }
    }
    return result;
}

bool check_mod4_characterization(unsigned t, std::uint64_t max_n)
{
    return characterize_mod4(t, max_n).holds;
}

bool check_t5_mod128(std::uint64_t max_n)
{
    const TruncatedSeries counts = counts_direct(5, static_cast<std::size_t>(max_n) + 1);
    for (std::uint64_t n = 7; n <= max_n; n += 8)
        if (!divisible_by_pow2(counts.coefficient(static_cast<std::size_t>(n)), 7))
            return false;
    return true;
}

}  // namespace overpart
