#include "overpart/symbolic.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "overpart/counting.hpp"
#include "overpart/theta.hpp"

namespace overpart {

namespace {

constexpr std::array<std::string_view, kGeneratorCount> kGeneratorNames{
    "phi(q^8)", "phi(q^16)", "psi(q^8)", "psi(q^16)", "psi(q^32)",
    "b0", "b1", "b2", "b3", "b4", "b5", "b6", "b7",
    "F0", "F1", "F2", "F3", "F4", "F5", "F6", "F7",
};

std::string monomial_string(const SymMonomial& m)
{
    std::string out;
    for (std::size_t g = 0; g < kGeneratorCount; ++g) {
        const unsigned e = m.exponents[g];
        if (e == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += kGeneratorNames[g];
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::string q_prefix(const Integer& c, unsigned q_power)
{
    std::string out = c.get_str();
    if (q_power == 0)
        return out;
    out += "*q";
    if (q_power > 1)
        out += "^" + std::to_string(q_power);
    return out;
}

}  // namespace

Generator b_generator(unsigned j)
{
    if (j > 7)
        throw std::invalid_argument("b_generator: index " + std::to_string(j) + " above 7");
    return static_cast<Generator>(static_cast<unsigned>(Generator::B0) + j);
}

Generator f_generator(unsigned j)
{
    if (j > 7)
        throw std::invalid_argument("f_generator: index " + std::to_string(j) + " above 7");
    return static_cast<Generator>(static_cast<unsigned>(Generator::F0) + j);
}

std::string_view generator_name(Generator g)
{
    return kGeneratorNames[static_cast<std::size_t>(g)];
}

bool SymMonomial::has_bf() const
{
    for (std::size_t g = static_cast<std::size_t>(Generator::B0); g < kGeneratorCount; ++g)
        if (exponents[g] != 0)
            return true;
    return false;
}

SymMonomial SymMonomial::times(const SymMonomial& other) const
{
    SymMonomial out;
    for (std::size_t g = 0; g < kGeneratorCount; ++g) {
        const unsigned sum = exponents[g] + other.exponents[g];
        if (sum > 255)
            throw std::overflow_error("SymMonomial::times: generator exponent overflow");
        out.exponents[g] = static_cast<std::uint8_t>(sum);
    }
    out.q_power = q_power + other.q_power;
    return out;
}

SymMonomial make_monomial(std::initializer_list<std::pair<Generator, unsigned>> powers,
                          unsigned q_power)
{
    SymMonomial m;
    m.q_power = q_power;
    for (const auto& [g, e] : powers) {
        const unsigned sum = m.exponents[static_cast<std::size_t>(g)] + e;
        if (sum > 255)
            throw std::overflow_error("make_monomial: generator exponent overflow");
        m.exponents[static_cast<std::size_t>(g)] = static_cast<std::uint8_t>(sum);
    }
    return m;
}

SymPolynomial SymPolynomial::constant(Integer value)
{
    return term(std::move(value), SymMonomial{});
}

SymPolynomial SymPolynomial::term(Integer coefficient, SymMonomial monomial)
{
    SymPolynomial p;
    p.insert(monomial, coefficient);
    return p;
}

bool SymPolynomial::has_bf() const
{
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.has_bf(); });
}

Integer SymPolynomial::coefficient(const SymMonomial& monomial) const
{
    const auto it = terms_.find(monomial);
    return it == terms_.end() ? Integer(0) : it->second;
}

void SymPolynomial::insert(const SymMonomial& monomial, const Integer& coefficient)
{
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymPolynomial SymPolynomial::add(const SymPolynomial& other) const
{
    SymPolynomial out = *this;
    for (const auto& [m, c] : other.terms_)
        out.insert(m, c);
    return out;
}

SymPolynomial SymPolynomial::mul(const SymPolynomial& other) const
{
    SymPolynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            out.insert(ma.times(mb), ca * cb);
    return out;
}

SymPolynomial SymPolynomial::pow(unsigned long e) const
{
    SymPolynomial result = constant(1);
    SymPolynomial base = *this;
    while (e > 0) {
        if (e & 1)
            result = result.mul(base);
        e >>= 1;
        if (e > 0)
            base = base.mul(base);
    }
    return result;
}

SymPolynomial SymPolynomial::scalar_mul(const Integer& c) const
{
    SymPolynomial out;
    for (const auto& [m, coeff] : terms_)
        out.insert(m, coeff * c);
    return out;
}

SymPolynomial SymPolynomial::reduce_mod32() const
{
    SymPolynomial out;
    for (const auto& [m, coeff] : terms_)
        out.insert(m, mod_pow2(coeff, 5));
    return out;
}

std::string pretty_print(const SymPolynomial& p)
{
    if (p.is_zero())
        return "0\n";

    std::map<unsigned, std::vector<std::pair<SymMonomial, Integer>>> groups;
    for (const auto& [m, c] : p.terms())
        groups[m.q_power].emplace_back(m, c);

    std::ostringstream os;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        const auto& terms = it->second;
        if (terms.size() == 1) {
            const auto& [m, c] = terms.front();
            const std::string mono = monomial_string(m);
            os << q_prefix(c, it->first);
            if (!mono.empty())
                os << " * " << mono;
            os << "\n";
            continue;
        }
        Integer g = 0;
        for (const auto& [m, c] : terms)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        os << q_prefix(g, it->first) << " * (";
        bool first = true;
        for (const auto& [m, c] : terms) {
            if (!first)
                os << " + ";
            first = false;
            const Integer inner = c / g;
            const std::string mono = monomial_string(m);
            if (inner != 1 || mono.empty())
                os << inner.get_str() << (mono.empty() ? "" : "*");
            os << mono;
        }
        os << ")\n";
    }
    return os.str();
}

std::vector<BasisFactor> basis_expression()
{
    const SymMonomial phi8 = make_monomial({{Generator::Phi8, 1}});
    const SymMonomial phi16 = make_monomial({{Generator::Phi16, 1}});
    const SymMonomial q_psi8 = make_monomial({{Generator::Psi8, 1}}, 1);
    const SymMonomial q2_psi16 = make_monomial({{Generator::Psi16, 1}}, 2);
    const SymMonomial q4_psi32 = make_monomial({{Generator::Psi32, 1}}, 4);

    // phi(q) with its phi(q^4) part re-dissected, phi(q^2)^2, phi(q^4)^4.
    const SymPolynomial first = SymPolynomial::term(1, phi16)
                                    .add(SymPolynomial::term(2, q4_psi32))
                                    .add(SymPolynomial::term(2, q_psi8));
    const SymPolynomial second =
        SymPolynomial::term(1, phi8).add(SymPolynomial::term(2, q2_psi16));
    const SymPolynomial third =
        SymPolynomial::term(1, phi16).add(SymPolynomial::term(2, q4_psi32));

    return {{first, 1}, {second, 2}, {third, 4}};
}

SymPolynomial expand_basis_case()
{
    SymPolynomial product = SymPolynomial::constant(1);
    for (const BasisFactor& factor : basis_expression())
        product = product.mul(factor.base.pow(factor.multiplicity));
    return product;
}

SymPolynomial induction_hypothesis_polynomial()
{
    SymPolynomial sum;
    for (unsigned j = 0; j < 8; ++j) {
        const SymMonomial m =
            make_monomial({{b_generator(j), 1}, {f_generator(j), 1}}, j);
        sum = sum.add(SymPolynomial::term(pow2(kClassValuations[j]), m));
    }
    return sum;
}

bool DivisibilityLedger::passes() const
{
    for (const auto& cls : classes)
        for (const LedgerEntry& e : cls)
            if (!e.ok())
                return false;
    return true;
}

std::vector<LedgerEntry> DivisibilityLedger::failures() const
{
    std::vector<LedgerEntry> out;
    for (const auto& cls : classes)
        for (const LedgerEntry& e : cls)
            if (!e.ok())
                out.push_back(e);
    return out;
}

DivisibilityLedger ledger_from_polynomial(const SymPolynomial& p)
{
    DivisibilityLedger ledger;
    for (const auto& [m, c] : p.terms()) {
        const unsigned cls = m.q_power % 8;
        LedgerEntry entry;
        entry.monomial = m;
        entry.coefficient = c;
        entry.guaranteed_valuation =
            static_cast<unsigned>(std::min<unsigned long>(v2(c), 5));
        entry.required_valuation = kClassValuations[cls];
        ledger.classes[cls].push_back(std::move(entry));
    }
    return ledger;
}

std::string ledger_table(const SymPolynomial& p)
{
    std::map<unsigned, std::vector<const Integer*>> groups;
    for (const auto& [m, c] : p.terms())
        groups[m.q_power].push_back(&c);

    std::ostringstream os;
    os << "term         class  required  observed  status\n";
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        Integer g = 0;
        unsigned long min_v2 = 5;
        for (const Integer* c : groups[it->first]) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c->get_mpz_t());
            min_v2 = std::min(min_v2, v2(*c));
        }
        const unsigned cls = it->first % 8;
        const unsigned required = kClassValuations[cls];
        os << std::left << std::setw(13) << q_prefix(g, it->first) << std::setw(7) << cls
           << std::setw(10)
           << (required == 0 ? std::string("none") : pow2(required).get_str())
           << std::setw(10) << pow2(std::min<unsigned long>(min_v2, 5ul)).get_str()
           << (min_v2 >= required ? "ok" : "FAIL") << "\n";
    }
    return os.str();
}

InductionStep expand_induction_step()
{
    const SymPolynomial product =
        induction_hypothesis_polynomial().mul(expand_basis_case().pow(2));
    InductionStep step;
    step.reduced = product.reduce_mod32();
    step.ledger = ledger_from_polynomial(step.reduced);
    return step;
}

TruncatedSeries evaluate_to_series(const SymPolynomial& p, const CoefficientRing& ring,
                                   std::size_t order)
{
    if (p.has_bf())
        throw std::invalid_argument(
            "evaluate_to_series: polynomial contains opaque b/F generators");

    const std::array<TruncatedSeries, 5> theta{
        phi(8, ring, order), phi(16, ring, order), psi(8, ring, order),
        psi(16, ring, order), psi(32, ring, order)};

    TruncatedSeries sum = TruncatedSeries::zero(ring, order);
    for (const auto& [m, c] : p.terms()) {
        TruncatedSeries term = TruncatedSeries::monomial(ring, order, m.q_power, c);
        for (std::size_t g = 0; g < theta.size(); ++g)
            if (m.exponents[g] != 0)
                term = term.mul(theta[g].pow(m.exponents[g]));
        sum = sum.add(term);
    }
    return sum;
}

bool numeric_crosscheck(const SymPolynomial& p, std::size_t order)
{
    const CoefficientRing ring = CoefficientRing::exact_integer();
    const TruncatedSeries product =
        phi(1, ring, order).mul(phi(2, ring, order).pow(2)).mul(phi(4, ring, order).pow(4));
    return evaluate_to_series(p, ring, order) == product;
}

bool numeric_crosscheck_mod32(const SymPolynomial& p, std::size_t order)
{
    const CoefficientRing exact = CoefficientRing::exact_integer();
    const TruncatedSeries product =
        phi(1, exact, order).mul(phi(2, exact, order).pow(2)).mul(phi(4, exact, order).pow(4));
    const CoefficientRing mod32 = CoefficientRing::mod2_power(5);
    return evaluate_to_series(p, mod32, order) == product.reduce_mod(5);
}

}  // namespace overpart
