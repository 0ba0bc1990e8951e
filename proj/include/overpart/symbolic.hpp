#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "overpart/series.hpp"

namespace overpart {

// Atomic generators of the dissection algebra. The theta generators denote
// phi(q^8), phi(q^16), psi(q^8), psi(q^16), psi(q^32) -- every one a function
// of q^8, so none contributes to the exponent residue mod 8. B0..B7 stand for
// opaque integers and F0..F7 for opaque integer-coefficient functions of q^8;
// no relations are assumed for them.
enum class Generator : unsigned char {
    Phi8,
    Phi16,
    Psi8,
    Psi16,
    Psi32,
    B0, B1, B2, B3, B4, B5, B6, B7,
    F0, F1, F2, F3, F4, F5, F6, F7,
};

inline constexpr std::size_t kGeneratorCount = 21;

Generator b_generator(unsigned j);  // B0..B7
Generator f_generator(unsigned j);  // F0..F7
std::string_view generator_name(Generator g);

// Product of generator powers together with an explicit accumulated power of
// q. Ordered lexicographically on the exponent vector (fixed generator
// order), then by q power; the representation is canonical by construction.
struct SymMonomial {
    std::array<std::uint8_t, kGeneratorCount> exponents{};
    unsigned q_power = 0;

    unsigned exponent_of(Generator g) const
    {
        return exponents[static_cast<std::size_t>(g)];
    }
    bool has_bf() const;

    SymMonomial times(const SymMonomial& other) const;

    friend auto operator<=>(const SymMonomial&, const SymMonomial&) = default;
};

// Convenience builder: {gen, exponent} pairs plus a q power.
SymMonomial make_monomial(std::initializer_list<std::pair<Generator, unsigned>> powers,
                          unsigned q_power = 0);

// Exact-integer linear combination of monomials. Zero coefficients are never
// stored; arithmetic re-canonicalizes.
class SymPolynomial {
public:
    SymPolynomial() = default;

    static SymPolynomial constant(Integer value);
    static SymPolynomial term(Integer coefficient, SymMonomial monomial);

    const std::map<SymMonomial, Integer>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool has_bf() const;

    // 0 when the monomial is absent.
    Integer coefficient(const SymMonomial& monomial) const;

    SymPolynomial add(const SymPolynomial& other) const;
    SymPolynomial mul(const SymPolynomial& other) const;
    SymPolynomial pow(unsigned long e) const;
    SymPolynomial scalar_mul(const Integer& c) const;

    // Coefficients reduced to canonical residues in [0, 32); vanishing terms
    // dropped.
    SymPolynomial reduce_mod32() const;

    friend bool operator==(const SymPolynomial&, const SymPolynomial&) = default;

private:
    void insert(const SymMonomial& monomial, const Integer& coefficient);

    std::map<SymMonomial, Integer> terms_;
};

inline SymPolynomial operator+(const SymPolynomial& a, const SymPolynomial& b)
{
    return a.add(b);
}
inline SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b)
{
    return a.mul(b);
}

// One term group per line, descending q power. Groups factor out the gcd of
// their coefficients, e.g. "8*q^8 * (phi(q^16)^4*psi(q^16)^2*psi(q^32) + ...)".
std::string pretty_print(const SymPolynomial& p);

// The dissected product for the base exponent: three factors of
// multiplicities 1, 2 and 4, with the first factor's phi(q^4) part already
// re-dissected into phi(q^16) + 2q^4 psi(q^32).
struct BasisFactor {
    SymPolynomial base;
    unsigned multiplicity = 1;
};
std::vector<BasisFactor> basis_expression();

// Full exact expansion of the basis product.
SymPolynomial expand_basis_case();

// sum_j 2^{e_j} q^j B_j F_j with e = kClassValuations.
SymPolynomial induction_hypothesis_polynomial();

// Divisibility bookkeeping: every term is filed under its q power mod 8 and
// must carry at least the class' required 2-adic valuation. The guaranteed
// valuation of a term is v2 of its numeric coefficient, capped at 5 (all work
// happens modulo 32); B and F generators are opaque and add nothing.
struct LedgerEntry {
    SymMonomial monomial;
    Integer coefficient;
    unsigned guaranteed_valuation = 0;
    unsigned required_valuation = 0;

    bool ok() const { return guaranteed_valuation >= required_valuation; }
};

struct DivisibilityLedger {
    std::array<std::vector<LedgerEntry>, 8> classes;

    bool passes() const;
    std::vector<LedgerEntry> failures() const;
};

DivisibilityLedger ledger_from_polynomial(const SymPolynomial& p);

// Table rendering of a ledger: one row per q-power group with the factored
// coefficient, its class and the required divisor.
std::string ledger_table(const SymPolynomial& p);

struct InductionStep {
    SymPolynomial reduced;  // hypothesis * basis^2, modulo 32
    DivisibilityLedger ledger;
};
InductionStep expand_induction_step();

// Substitutes concrete theta series for the generators, shifts by the
// explicit q power and sums. Rejects polynomials containing B/F generators.
TruncatedSeries evaluate_to_series(const SymPolynomial& p, const CoefficientRing& ring,
                                   std::size_t order);

// Evaluation equals the direct numeric product phi(q) phi(q^2)^2 phi(q^4)^4
// at the given order (exactly, or with both sides reduced modulo 32).
bool numeric_crosscheck(const SymPolynomial& p, std::size_t order);
bool numeric_crosscheck_mod32(const SymPolynomial& p, std::size_t order);

}  // namespace overpart
