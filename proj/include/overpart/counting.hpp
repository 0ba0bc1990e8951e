#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "overpart/series.hpp"

namespace overpart {

// Required 2-adic valuations per residue class mod 8: classes 1..7 claim
// divisibility by 2, 4, 8, 2, 8, 8, 32; class 0 carries no claim.
inline constexpr std::array<unsigned, 8> kClassValuations{0, 1, 2, 3, 1, 3, 3, 5};

// Exact-integer series whose coefficient of q^n counts the t-colored
// overpartitions of n, computed as (f_2 / f_1^2)^t. Rejects t = 0.
TruncatedSeries counts_direct(unsigned t, std::size_t order);

// The same series computed through the dyadic phi product route.
TruncatedSeries counts_via_phi_product(unsigned t, std::size_t order);

struct Counterexample {
    std::uint64_t argument = 0;  // the n whose count breaks the claim
    Integer value;
    Integer residue;             // value mod 2^required
};

struct ClassResult {
    unsigned residue = 0;
    unsigned required_valuation = 0;  // 0 marks an informational class (no claim)
    std::uint64_t verified_count = 0;
    std::uint64_t failed_count = 0;
    std::optional<Counterexample> first_counterexample;
    // Smallest 2-adic valuation seen across the class; argument 0 excluded
    // (its count is 1 by convention). Tightness data only, never a claim.
    std::optional<unsigned long> observed_min_valuation;

    bool holds() const { return failed_count == 0; }
};

struct CongruenceReport {
    unsigned t = 0;
    std::uint64_t max_n = 0;
    bool exploratory = false;  // even t: outside the odd-t hypothesis
    std::array<ClassResult, 8> classes;

    bool all_claims_hold() const;
};

// Tests divisibility of every count at argument <= max_n against the residue
// class claims above. Failures are recorded as data, not errors; even t is
// accepted and flagged exploratory.
CongruenceReport check_congruences(unsigned t, std::uint64_t max_n);

struct Mod2Characterization {
    unsigned t = 0;
    std::uint64_t max_n = 0;
    bool holds = false;  // count(0) = 1 and every count(n), n >= 1, even
    std::optional<std::uint64_t> first_violation;
};

Mod2Characterization characterize_mod2(unsigned t, std::uint64_t max_n);
bool check_mod2_characterization(unsigned t, std::uint64_t max_n);

struct Mod4Characterization {
    unsigned t = 0;
    std::uint64_t max_n = 0;
    // Modulo 4 the counts must be 1 at n = 0, 2 at positive squares, else 0.
    bool holds = false;
    std::vector<std::uint64_t> positions_two_mod4;
    std::optional<std::uint64_t> first_violation;
};

// Rejects even t (the modulo-4 characterization assumes t odd).
Mod4Characterization characterize_mod4(unsigned t, std::uint64_t max_n);
bool check_mod4_characterization(unsigned t, std::uint64_t max_n);

// Sharper t = 5 property: every count at argument 8n+7 <= max_n is divisible
// by 128. Vacuously true when no argument qualifies.
bool check_t5_mod128(std::uint64_t max_n);

}  // namespace overpart
