#include "pirjoint/poly.hpp"

#include <algorithm>

namespace pirjoint {

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
    std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(c));
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
    std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(c));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<Elem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.coeff(i), b.coeff(j)));
    }
    return Poly(std::move(c));
}

Poly poly_scale(const Field& f, const Poly& a, Elem s) {
    std::vector<Elem> c(a.coeffs());
    for (auto& x : c) x = f.mul(x, s);
    return Poly(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZeroError("poly_divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly::zero(), a};
    std::vector<Elem> rem(a.coeffs());
    std::vector<Elem> quot(a.degree() - b.degree() + 1, 0);
    const Elem lead_inv = f.inv(b.leading());
    for (std::size_t i = rem.size(); i-- > 0;) {
        if (static_cast<int>(i) < b.degree()) break;
        if (rem[i] == 0) continue;
        const Elem qd = f.mul(rem[i], lead_inv);
        const std::size_t shift = i - b.degree();
        quot[shift] = qd;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            rem[shift + j] = f.sub(rem[shift + j], f.mul(qd, b.coeff(j)));
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_monic(const Field& f, const Poly& a) {
    if (a.is_zero() || a.leading() == 1) return a;
    return poly_scale(f, a, f.inv(a.leading()));
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, a);
}

Elem poly_eval(const Field& f, const Poly& a, Elem x) {
    Elem acc = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeff(i));
    return acc;
}

Poly poly_xn_minus_one(const Field& f, std::uint32_t n) {
    std::vector<Elem> c(n + 1, 0);
    c[0] = f.neg(1);
    c[n] = 1;
    return Poly(std::move(c));
}

bool common_root_exists(const Field& field, const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero())
        throw ParamError("common_root_exists: f and g must not both be zero");
    const Poly h = poly_gcd(field, f, g);
    if (h.degree() < 1) return false;
    for (Elem x = 0; x < field.q(); ++x)
        if (poly_eval(field, h, x) == 0) return true;
    return false;
}

}  // namespace pirjoint
