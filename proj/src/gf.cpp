#include "pirjoint/gf.hpp"

#include <algorithm>

namespace pirjoint {

namespace {

// Polynomials over GF(p) as little-endian digit vectors; used only for field
// construction (irreducibility search), so plain and unhurried.

void trim(std::vector<std::uint32_t>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic and nonzero.
std::vector<std::uint32_t> poly_mod_p(std::vector<std::uint32_t> f,
                                      const std::vector<std::uint32_t>& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() >= g.size()) {
        const std::uint64_t c = f.back();  // g is monic, so c is the quotient digit
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            const std::uint32_t t = static_cast<std::uint32_t>(g[i] * c % p);
            f[shift + i] = (f[shift + i] + p - t) % p;
        }
        trim(f);
    }
    return f;
}

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    // Trial division by every monic polynomial of degree 1..m/2.
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> g(d + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (poly_mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> Field::to_digits(Elem a) const {
    std::vector<std::uint32_t> d(m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& digits) const {
    Elem a = 0;
    for (std::size_t i = digits.size(); i-- > 0;) a = a * p_ + digits[i] % p_;
    return a;
}

Elem Field::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

Elem Field::add(Elem a, Elem b) const {
    if (m_ == 1) {
        const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    Elem r = 0;
    Elem mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        const std::uint32_t da = a % p_;
        const std::uint32_t db = b % p_;
        a /= p_;
        b /= p_;
        std::uint32_t s = da + db;
        if (s >= p_) s -= p_;
        r += s * mult;
        mult *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0;
    Elem mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        const std::uint32_t da = a % p_;
        a /= p_;
        r += (da == 0 ? 0 : p_ - da) * mult;
        mult *= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_direct(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    const auto da = to_digits(a);
    const auto db = to_digits(b);
    std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
    // Reduce by the monic modulus from the top coefficient down.
    for (std::size_t i = prod.size(); i-- > m_;) {
        const std::uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < m_; ++j) {
            const std::uint64_t t = static_cast<std::uint64_t>(c) * modulus_[j] % p_;
            prod[i - m_ + j] = static_cast<std::uint32_t>((prod[i - m_ + j] + p_ - t) % p_);
        }
    }
    prod.resize(m_);
    return from_digits(prod);
}

Elem Field::pow_direct(Elem a, std::uint64_t e) const {
    Elem r = 1;
    Elem base = a;
    while (e > 0) {
        if (e & 1) r = mul_direct(r, base);
        base = mul_direct(base, base);
        e >>= 1;
    }
    return r;
}

Elem Field::mul(Elem a, Elem b) const {
    if (!tabled_) return mul_direct(a, b);
    if (a == 0 || b == 0) return 0;
    const std::uint64_t s = log_[a] + log_[b];
    return exp_[s % (q_ - 1)];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZeroError("inv(0) in " + name());
    if (tabled_) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow_direct(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (tabled_) {
        const std::uint64_t l = static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1));
        return exp_[l % (q_ - 1)];
    }
    return pow_direct(a, e % (q_ - 1));
}

void Field::build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    Elem cur = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_direct(cur, alpha_);
    }
    tabled_ = true;
}

std::string Field::name() const {
    if (m_ == 1) return "GF(" + std::to_string(q_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

Field make_field(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw ParamError("make_field: p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw ParamError("make_field: m must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > Field::kOrderBudget)
            throw CapacityError("make_field: p^m exceeds the order budget 2^20");
    }

    Field f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = static_cast<std::uint32_t>(q);

    // Smallest irreducible monic modulus of degree m.
    std::uint64_t candidates = 1;
    for (std::uint32_t i = 0; i < m; ++i) candidates *= p;
    for (std::uint64_t idx = 0;; ++idx) {
        if (idx >= candidates)
            throw Error("make_field: no irreducible polynomial found");  // unreachable
        std::vector<std::uint32_t> mod(m + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < m; ++i) {
            mod[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        mod[m] = 1;
        if (is_irreducible(mod, p)) {
            f.modulus_ = mod;
            break;
        }
    }

    // Smallest primitive element: order exactly q-1, checked at the maximal
    // proper divisors (q-1)/r for each prime factor r.
    const auto factors = prime_factors(f.q_ - 1);
    for (Elem cand = 1; cand < f.q_; ++cand) {
        bool primitive = true;
        for (const auto r : factors) {
            if (f.pow_direct(cand, (f.q_ - 1) / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            f.alpha_ = cand;
            break;
        }
    }

    if (f.q_ <= (1u << 16)) f.build_tables();
    return f;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decompose(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    const auto factors = prime_factors(q);
    if (factors.size() != 1) return std::nullopt;
    const std::uint64_t p = factors[0];
    std::uint32_t m = 0;
    std::uint64_t v = q;
    while (v > 1) {
        v /= p;
        ++m;
    }
    std::uint64_t check = 1;
    for (std::uint32_t i = 0; i < m; ++i) check *= p;
    if (check != q) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), m);
}

std::uint32_t next_prime_power(std::uint32_t at_least) {
    for (std::uint32_t q = std::max(2u, at_least);; ++q)
        if (prime_power_decompose(q)) return q;
}

}  // namespace pirjoint
