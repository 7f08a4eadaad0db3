#ifndef PIRJOINT_POLY_HPP
#define PIRJOINT_POLY_HPP

#include <vector>

#include "pirjoint/gf.hpp"

namespace pirjoint {

/// Polynomial over a field, little-endian coefficients, trailing zeros
/// trimmed. The zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(Elem a) { return Poly(std::vector<Elem>{a}); }
    /// x^n + ... convenience: builds c0 + c1 x + ... from the given list.
    static Poly of(std::initializer_list<Elem> coeffs) {
        return Poly(std::vector<Elem>(coeffs));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem leading() const { return c_.empty() ? 0 : c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Elem> c_;
};

Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
/// Quotient/remainder with b != 0.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, const Poly& a, Elem s);
Poly poly_monic(const Field& f, const Poly& a);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
Poly poly_gcd(const Field& f, Poly a, Poly b);
Elem poly_eval(const Field& f, const Poly& a, Elem x);

/// x^n - 1 over the field.
Poly poly_xn_minus_one(const Field& f, std::uint32_t n);

/// True iff some x0 in the field (0 included) satisfies f(x0) = g(x0) = 0.
/// Implemented as gcd followed by root enumeration of the gcd across the
/// field; roots lying only in extension fields do not count.
bool common_root_exists(const Field& field, const Poly& f, const Poly& g);

}  // namespace pirjoint

#endif
