#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pirjoint/gf.hpp"
#include "pirjoint/mat.hpp"
#include "pirjoint/poly.hpp"
#include "pirjoint/rng.hpp"

using namespace pirjoint;

namespace {

Elem random_elem(const Field& f, Rng& rng) {
    return static_cast<Elem>(rng.uniform_below(f.q()));
}

Poly random_poly(const Field& f, Rng& rng, int max_degree) {
    const int deg = static_cast<int>(rng.uniform_below(max_degree + 1));
    std::vector<Elem> c(deg + 1);
    for (auto& x : c) x = random_elem(f, rng);
    return Poly(std::move(c));
}

// Brute-force root oracle: evaluates both polynomials at every field element.
bool common_root_brute_force(const Field& f, const Poly& a, const Poly& b) {
    for (Elem x = 0; x < f.q(); ++x)
        if (poly_eval(f, a, x) == 0 && poly_eval(f, b, x) == 0) return true;
    return false;
}

int coprime_part(int n, int p) {
    while (n % p == 0) n /= p;
    return n;
}

}  // namespace

TEST_CASE("make_field: deterministic small fields") {
    const Field gf3 = make_field(3, 1);
    CHECK(gf3.q() == 3);
    CHECK(gf3.alpha() == 2);

    const Field gf4 = make_field(2, 2);
    CHECK(gf4.q() == 4);
    CHECK(gf4.modulus() == std::vector<std::uint32_t>{1, 1, 1});  // x^2 + x + 1

    const Field gf2 = make_field(2, 1);
    CHECK(gf2.q() == 2);
    CHECK(gf2.alpha() == 1);  // q-1 = 1: the only nonzero element
}

TEST_CASE("make_field: errors") {
    CHECK_THROWS_AS(make_field(4, 1), ParamError);
    CHECK_THROWS_AS(make_field(1, 1), ParamError);
    CHECK_THROWS_AS(make_field(2, 0), ParamError);
    CHECK_THROWS_AS(make_field(2, 21), CapacityError);
}

TEST_CASE("make_field: budget boundary 2^20") {
    const Field f = make_field(2, 20);
    CHECK(f.q() == (1u << 20));
    const Elem a = f.alpha();
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(a, f.q() - 1) == 1);
}

TEST_CASE("arith: spec instances") {
    const Field gf3 = make_field(3, 1);
    CHECK(gf3.inv(2) == 2);  // 2*2 = 4 = 1 mod 3
    CHECK_THROWS_AS(gf3.inv(0), DivisionByZeroError);

    const Field gf4 = make_field(2, 2);
    const Elem a = gf4.alpha();
    CHECK(gf4.mul(gf4.mul(a, a), a) == 1);  // multiplicative order 3
    CHECK(gf4.pow(a, 3) == 1);
}

TEST_CASE("arith: extension-field multiplication against hand values") {
    const Field gf4 = make_field(2, 2);
    CHECK(gf4.mul(2, 2) == 3);  // x*x = x+1 under x^2+x+1
    CHECK(gf4.mul(2, 3) == 1);  // x(x+1) = x^2+x = 1

    const Field gf8 = make_field(2, 3);
    CHECK(gf8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3 + x + 1
    CHECK(gf8.mul(2, 2) == 4);
    CHECK(gf8.mul(4, 2) == 3);  // x^3 = x+1

    const Field gf9 = make_field(3, 2);
    CHECK(gf9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
    CHECK(gf9.mul(3, 3) == 2);  // x*x = -1 = 2
}

TEST_CASE("field axioms: randomized triples") {
    for (const auto& [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 1},
                              {3, 1},
                              {2, 2},
                              {7, 1},
                              {2, 4},
                              {3, 2},
                              {5, 2},
                              {2, 17}}) {
        const Field f = make_field(p, m);
        Rng rng(Rng(42).fork(p * 100 + m).seed());
        for (int t = 0; t < 1000; ++t) {
            const Elem a = random_elem(f, rng);
            const Elem b = random_elem(f, rng);
            const Elem c = random_elem(f, rng);
            REQUIRE(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
            REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            REQUIRE(f.add(a, b) == f.add(b, a));
            REQUIRE(f.mul(a, b) == f.mul(b, a));
            REQUIRE(f.sub(f.add(a, b), b) == a);
            if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == 1);
        }
        REQUIRE(f.pow(f.alpha(), f.q() - 1) == 1);
    }
}

TEST_CASE("alpha has order exactly q-1 (exhaustive for q <= 2^12)") {
    for (const auto& [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 12},
                              {3, 7},
                              {5, 5},
                              {7, 4},
                              {11, 3},
                              {61, 2},
                              {4093, 1}}) {
        const Field f = make_field(p, m);
        REQUIRE(f.q() <= (1u << 12));
        Elem cur = f.alpha();
        for (std::uint32_t k = 1; k < f.q() - 1; ++k) {
            REQUIRE(cur != 1);
            cur = f.mul(cur, f.alpha());
        }
        REQUIRE(cur == 1);
    }
}

TEST_CASE("poly divmod and gcd") {
    const Field f = make_field(5, 1);
    Rng rng(7);
    for (int t = 0; t < 300; ++t) {
        const Poly a = random_poly(f, rng, 6);
        Poly b = random_poly(f, rng, 4);
        if (b.is_zero()) b = Poly::of({1, 1});
        const auto [q, r] = poly_divmod(f, a, b);
        CHECK(poly_add(f, poly_mul(f, q, b), r) == a);
        CHECK(r.degree() < b.degree());
        const Poly g = poly_gcd(f, a, b);
        if (!a.is_zero()) CHECK(poly_divmod(f, a, g).second.is_zero());
        if (!b.is_zero()) CHECK(poly_divmod(f, b, g).second.is_zero());
    }
}

TEST_CASE("common_root_exists: spec instances") {
    const Field gf3 = make_field(3, 1);
    // f = g = x - 1
    const Poly xm1 = Poly::of({gf3.neg(1), 1});
    CHECK(common_root_exists(gf3, xm1, xm1));
    // N=4, (i,j)=(3,4) pair polynomial: f = 2 - x, g = x^3 - 1; f's root is
    // x = 2 and 2^3 = 2 != 1.
    const Poly f34 = Poly::of({2, gf3.neg(1)});
    CHECK_FALSE(common_root_exists(gf3, f34, poly_xn_minus_one(gf3, 3)));
    // Common root 0 counts.
    CHECK(common_root_exists(gf3, Poly::of({0, 1}), Poly::of({0, 0, 1})));

    CHECK_THROWS_AS(common_root_exists(gf3, Poly::zero(), Poly::zero()), ParamError);
}

TEST_CASE("common_root_exists agrees with whole-field brute force") {
    for (const auto& [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 1},
                              {3, 1},
                              {2, 2},
                              {5, 1},
                              {7, 1},
                              {2, 3},
                              {3, 2},
                              {2, 5}}) {
        const Field f = make_field(p, m);
        Rng rng(Rng(99).fork(f.q()).seed());
        for (int t = 0; t < 150; ++t) {
            const Poly a = random_poly(f, rng, 6);
            const Poly b = random_poly(f, rng, 6);
            if (a.is_zero() && b.is_zero()) continue;
            REQUIRE(common_root_exists(f, a, b) == common_root_brute_force(f, a, b));
        }
    }
}

TEST_CASE("mat_rank: instances") {
    const Field gf3 = make_field(3, 1);
    const Mat hollow(3, 3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
    CHECK(mat_rank(gf3, hollow) == 3);
    CHECK(mat_det(gf3, hollow) == 2);
    CHECK(mat_rank(gf3, Mat::identity(4)) == 4);
    CHECK(mat_rank(gf3, Mat(3, 3)) == 0);
}

TEST_CASE("mat_solve: instances") {
    const Field gf3 = make_field(3, 1);
    const auto id = mat_solve(gf3, Mat::identity(3), {1, 2, 0});
    CHECK(id.consistent);
    CHECK(id.unique);
    CHECK(id.x == std::vector<Elem>{1, 2, 0});

    const Mat hollow(3, 3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
    const auto b = mat_vec(gf3, hollow, {1, 2, 0});
    const auto sol = mat_solve(gf3, hollow, b);
    CHECK(sol.consistent);
    CHECK(sol.x == std::vector<Elem>{1, 2, 0});

    const auto bad = mat_solve(gf3, Mat(2, 2), {1, 0});
    CHECK_FALSE(bad.consistent);
}

TEST_CASE("mat_solve round-trips on random consistent systems") {
    const Field f = make_field(7, 1);
    Rng rng(1234);
    for (int t = 0; t < 200; ++t) {
        const std::size_t rows = 1 + rng.uniform_below(6);
        const std::size_t cols = 1 + rng.uniform_below(6);
        Mat a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = random_elem(f, rng);
        std::vector<Elem> x(cols);
        for (auto& v : x) v = random_elem(f, rng);
        const auto b = mat_vec(f, a, x);
        const auto sol = mat_solve(f, a, b);
        REQUIRE(sol.consistent);
        REQUIRE(mat_vec(f, a, sol.x) == b);
    }
}

TEST_CASE("circulant_from_row: convention and instances") {
    const Field gf3 = make_field(3, 1);
    CHECK(circulant_from_row(gf3, {1, 0, 0}) == Mat::identity(3));
    CHECK(mat_rank(gf3, circulant_from_row(gf3, {0, 0, 0})) == 0);
    const Mat c = circulant_from_row(gf3, {1, 2, 0});
    CHECK(c.row(0) == std::vector<Elem>{1, 2, 0});
    CHECK(c.row(1) == std::vector<Elem>{0, 1, 2});  // right shift by one
    CHECK(c.row(2) == std::vector<Elem>{2, 0, 1});
}

TEST_CASE("circulant rank matches the common-root criterion where it is exact") {
    // Exactness scope: with n = r*p^l, gcd(r, p) = 1, every root of x^n - 1
    // lies in the field iff r | q-1. Inside that scope full rank must hold
    // iff the row polynomial shares no field root with x^n - 1.
    for (const auto& [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 1},
                              {3, 1},
                              {2, 2},
                              {5, 1},
                              {7, 1},
                              {2, 3},
                              {3, 2},
                              {11, 1},
                              {13, 1},
                              {2, 4}}) {
        const Field f = make_field(p, m);
        for (int n = 1; n <= 9; ++n) {
            const int r = coprime_part(n, static_cast<int>(p));
            if ((f.q() - 1) % r != 0) continue;  // outside the criterion's scope
            const Poly g = poly_xn_minus_one(f, static_cast<std::uint32_t>(n));
            const double total = std::pow(static_cast<double>(f.q()), n);
            auto check_row = [&](const std::vector<Elem>& row) {
                const Poly cp((std::vector<Elem>(row)));
                if (cp.is_zero()) return;  // zero row: criterion precondition excludes it
                const bool full = mat_rank(f, circulant_from_row(f, row)) ==
                                  static_cast<std::size_t>(n);
                const bool no_root = !common_root_exists(f, cp, g);
                REQUIRE(full == no_root);
            };
            if (total <= 4096.0) {
                std::vector<Elem> row(n, 0);
                for (;;) {
                    check_row(row);
                    int i = 0;
                    while (i < n && ++row[i] == f.q()) row[i++] = 0;
                    if (i == n) break;
                }
            } else {
                Rng rng(Rng(5).fork(f.q() * 100 + n).seed());
                for (int t = 0; t < 200; ++t) {
                    std::vector<Elem> row(n);
                    for (auto& v : row) v = random_elem(f, rng);
                    check_row(row);
                }
            }
        }
    }
}

TEST_CASE("cauchy_matrix: instances") {
    const Field gf3 = make_field(3, 1);
    const Mat one = cauchy_matrix(gf3, {0}, {1});
    CHECK(one.at(0, 0) == 2);  // 1/(0-1) = inv(2) = 2

    const Field gf7 = make_field(7, 1);
    const Mat c = cauchy_matrix(gf7, {0, 1}, {2, 3, 4, 5});
    for (std::size_t j1 = 0; j1 < 4; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < 4; ++j2) {
            const Mat sub(2, 2, {c.at(0, j1), c.at(0, j2), c.at(1, j1), c.at(1, j2)});
            CHECK(mat_rank(gf7, sub) == 2);
        }

    CHECK_THROWS_AS(cauchy_matrix(gf3, {0}, {0}), ParamError);
    CHECK_THROWS_AS(cauchy_matrix(gf7, {1, 1}, {2}), ParamError);
}

TEST_CASE("rng: determinism and forking") {
    Rng a(17), b(17);
    for (int i = 0; i < 100; ++i) REQUIRE(a.next() == b.next());
    // fork is independent of parent consumption
    Rng c(17);
    c.next();
    CHECK(Rng(17).fork(3).next() == c.fork(3).next());
    CHECK(Rng(17).fork(3).next() != Rng(17).fork(4).next());
    Rng d(3);
    for (int i = 0; i < 1000; ++i) REQUIRE(d.uniform_below(6) < 6);
}
