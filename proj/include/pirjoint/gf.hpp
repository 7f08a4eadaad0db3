#ifndef PIRJOINT_GF_HPP
#define PIRJOINT_GF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pirjoint/errors.hpp"

namespace pirjoint {

/// Field element, canonically encoded as an integer in [0, q): the base-p
/// digits of the integer are the polynomial coefficients, little-endian
/// (digit i = coefficient of x^i).
using Elem = std::uint32_t;

/// Exact arithmetic over GF(p^m).
///
/// Construction is deterministic: the modulus is the smallest irreducible
/// monic polynomial of degree m over GF(p) (candidates ordered by the integer
/// encoding of their low m coefficients), and alpha is the smallest canonical
/// element of multiplicative order q-1. Multiplication uses log/antilog
/// tables for q <= 2^16 and direct polynomial arithmetic above that.
class Field {
public:
    static constexpr std::uint32_t kOrderBudget = 1u << 20;

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elem alpha() const { return alpha_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_valid(Elem a) const { return a < q_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    std::vector<std::uint32_t> to_digits(Elem a) const;
    Elem from_digits(const std::vector<std::uint32_t>& digits) const;

    /// Reduce an arbitrary integer into the prime subfield (value mod p).
    /// Lets call sites write negative literals as neg(from_int(...)).
    Elem from_int(std::int64_t v) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_ && alpha_ == o.alpha_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string name() const;  // "GF(9)" / "GF(2^4)"

private:
    friend Field make_field(std::uint32_t p, std::uint32_t m);

    Elem mul_direct(Elem a, Elem b) const;
    Elem pow_direct(Elem a, std::uint64_t e) const;
    void build_tables();

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;  // m+1 digits over GF(p), monic
    Elem alpha_ = 0;
    bool tabled_ = false;
    std::vector<Elem> exp_;               // alpha^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;      // inverse of exp_, log_[0] unused
};

/// Deterministic GF(p^m). Throws ParamError for non-prime p or m < 1 and
/// CapacityError for p^m beyond the order budget.
Field make_field(std::uint32_t p, std::uint32_t m);

// Small number-theory helpers shared by field selection and construction.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decompose(std::uint64_t q);
std::uint32_t next_prime_power(std::uint32_t at_least);  // smallest prime power >= at_least

}  // namespace pirjoint

#endif
