#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pirjoint/storage.hpp"

using namespace pirjoint;

namespace {

std::vector<std::vector<Elem>> random_messages(const JointCode& code, Rng& rng) {
    std::vector<std::vector<Elem>> msgs(code.params.K, std::vector<Elem>(code.params.L));
    for (auto& msg : msgs)
        for (auto& sym : msg) sym = static_cast<Elem>(rng.uniform_below(code.field.q()));
    return msgs;
}

// Shared list of built instances reused by the heavyweight property checks.
std::vector<JointCode> built_codes() {
    std::vector<JointCode> codes;
    codes.push_back(build_joint_2n2(3));
    codes.push_back(build_joint_2n2(4, make_field(3, 1), 1));
    codes.push_back(build_joint_2n2(5));
    codes.push_back(build_joint_parity(2));
    codes.push_back(build_joint_parity(4));
    codes.push_back(build_expanded_parity(2, 2));
    codes.push_back(build_expanded_parity(3, 2));
    codes.push_back(build_expanded_2n2(3, 2, 11).code);
    codes.push_back(build_separate_baseline(2, 3, 2, make_field(7, 1)));
    return codes;
}

}  // namespace

TEST_CASE("joint-2n2: the (2,4,2) instance reproduces the worked example") {
    const JointCode code = build_joint_2n2(4, make_field(3, 1), 1);
    CHECK(code.params.K == 2);
    CHECK(code.params.N == 4);
    CHECK(code.params.T == 2);
    CHECK(code.params.L == 3);
    CHECK(code.params.M == 3);
    CHECK(code.labels[0] == std::vector<std::string>{"a_0", "a_1", "a_2"});
    CHECK(code.labels[1] == std::vector<std::string>{"b_0", "b_1", "b_2"});
    CHECK(code.labels[2] == std::vector<std::string>{"a_1+b_0", "a_2+b_1", "a_0+b_2"});
    CHECK(code.labels[3] == std::vector<std::string>{"2a_2+b_0", "2a_0+b_1", "2a_1+b_2"});
    CHECK(verify_mds(code).ok);
}

TEST_CASE("joint-2n2: N=3 over GF(2), offset 0") {
    const JointCode code = build_joint_2n2(3);
    CHECK(code.field.q() == 2);  // Guan bound (N-3)r+2 = 2
    CHECK(code.labels[2] == std::vector<std::string>{"a_1+b_0", "a_0+b_1"});
    CHECK(verify_mds(code).ok);
}

TEST_CASE("joint-2n2: GF(2) cannot host N=4") {
    try {
        build_joint_2n2(4, make_field(2, 1));
        FAIL("expected ConstructionError");
    } catch (const ConstructionError& e) {
        CHECK(std::string(e.what()).find("(3,4)") != std::string::npos);
    }
}

TEST_CASE("joint-2n2: automatic field selection follows the Guan bounds") {
    CHECK(build_joint_2n2(3).field.q() == 2);
    CHECK(build_joint_2n2(4).field.q() == 3);
    CHECK(build_joint_2n2(5).field.q() == 4);  // N-1 = 4 = 2^2, bound (N-3)*1+2
    CHECK(build_joint_2n2(6).field.q() == 5);
    CHECK(build_joint_2n2(8).field.q() == 7);
    // Forcing the N=5 Guan candidate explicitly works as well.
    CHECK(verify_mds(build_joint_2n2(5, make_field(2, 2))).ok);
}

TEST_CASE("joint-2n2: criterion verdict matches rank on every pair, every candidate field") {
    for (int N = 3; N <= 8; ++N) {
        for (std::uint32_t q = 2; q <= 17; ++q) {
            const auto pm = prime_power_decompose(q);
            if (!pm) continue;
            const Field f = make_field(pm->first, pm->second);
            std::vector<CirculantCheck> checks;
            bool built = true;
            try {
                build_joint_2n2(N, f, 0, &checks);
            } catch (const ConstructionError&) {
                built = false;
            }
            bool all_full = true;
            for (const auto& c : checks) {
                all_full = all_full && c.full_rank;
                if (c.criterion_exact) REQUIRE(c.criterion_no_common_root == c.full_rank);
                // The criterion stays sufficient even outside its exact scope.
                if (c.criterion_no_common_root && !c.criterion_exact) REQUIRE(c.full_rank);
            }
            REQUIRE(built == all_full);
        }
    }
}

TEST_CASE("joint-2n2: storage differences are row-rotated circulants") {
    for (const int N : {4, 6}) {
        const JointCode code = build_joint_2n2(N);
        const Field& f = code.field;
        const int n = N - 1;
        for (int i = 3; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                // Row vector with the two nonzero coefficients of S_i - S_j.
                std::vector<Elem> c(n, 0);
                c[0] = f.pow(f.alpha(), i - 2);
                c[j - i] = f.neg(f.pow(f.alpha(), j - 2));
                const Mat circ = circulant_from_row(f, c);
                for (int r = 0; r < n; ++r) {
                    std::vector<Elem> diff(n);
                    for (int t = 0; t < n; ++t)
                        diff[t] = f.sub(code.generators[i - 1].at(r, t),
                                        code.generators[j - 1].at(r, t));
                    REQUIRE(diff == circ.row((i - 2 + r) % n));
                }
            }
    }
}

TEST_CASE("joint-parity: instances") {
    const JointCode code = build_joint_parity(3);
    CHECK(code.field.q() == 2);
    CHECK(code.params.N == 4);
    CHECK(code.labels[3] == std::vector<std::string>{"W^1_1+W^2_1+W^3_1", "W^1_2+W^2_2+W^3_2"});
    CHECK(verify_mds(code).ok);

    const auto storage = encode(code, {{1, 0}, {1, 1}, {0, 1}});
    CHECK(storage[3] == std::vector<Elem>{0, 0});

    CHECK(verify_mds(build_joint_parity(5)).subsets_checked == 6);
    CHECK_THROWS_AS(build_joint_parity(1), ParamError);
}

TEST_CASE("expanded-parity: m=1 degenerates to the parity shape") {
    const JointCode base = build_joint_parity(2);
    const JointCode exp = build_expanded_parity(2, 1);
    CHECK(exp.params.N == base.params.N);
    CHECK(exp.params.T == base.params.T);
    CHECK(exp.params.L == base.params.L);
    CHECK(exp.params.M == base.params.M);
    CHECK(verify_mds(exp).ok);
    // Same support pattern: raw groups plus one fully mixed database.
    for (int db = 0; db < exp.params.N; ++db)
        for (int r = 0; r < exp.params.M; ++r)
            for (int c = 0; c < exp.params.K * exp.params.L; ++c)
                CHECK((exp.generators[db].at(r, c) != 0) == (base.generators[db].at(r, c) != 0));
}

TEST_CASE("expanded-parity: exhaustive subset ranks") {
    const JointCode c22 = build_expanded_parity(2, 2);
    CHECK(c22.field.q() == 7);  // smallest prime power >= 6
    const auto r22 = verify_mds(c22);
    CHECK(r22.ok);
    CHECK(r22.subsets_checked == 15);

    const JointCode c32 = build_expanded_parity(3, 2);
    CHECK(c32.field.q() == 9);
    const auto r32 = verify_mds(c32);
    CHECK(r32.ok);
    CHECK(r32.subsets_checked == 28);

    const auto r31 = verify_mds(build_expanded_parity(3, 1));
    CHECK(r31.ok);
    CHECK(r31.subsets_checked == 4);

    // m > K: the (m+1)K bound cannot host the m(K+1) distinct Cauchy
    // parameters, so the auto choice moves up to GF(9).
    const JointCode c23 = build_expanded_parity(2, 3);
    CHECK(c23.field.q() == 9);
    const auto r23 = verify_mds(c23);
    CHECK(r23.ok);
    CHECK(r23.subsets_checked == 84);
}

TEST_CASE("expanded-parity: field preconditions") {
    CHECK_THROWS_AS(build_expanded_parity(2, 2, make_field(5, 1)), ParamError);
    CHECK_THROWS_AS(build_expanded_parity(2, 3, make_field(7, 1)), ParamError);
    CHECK_THROWS_AS(build_expanded_parity(2, 3, make_field(2, 3)), ParamError);
    CHECK(verify_mds(build_expanded_parity(2, 3, make_field(3, 2))).ok);
}

TEST_CASE("expanded-2n2: degenerate m=1 yields a valid (2,3,2) code") {
    const auto res = build_expanded_2n2(3, 1, 5);
    CHECK(res.code.params.N == 3);
    CHECK(res.code.params.T == 2);
    CHECK(res.code.params.L == 2);
    CHECK(verify_mds(res.code).ok);
}

TEST_CASE("expanded-2n2: (4,2) shape and exhaustive subsets") {
    const auto res = build_expanded_2n2(4, 2, 3);
    CHECK(res.code.params.N == 8);
    CHECK(res.code.params.M == 3);
    CHECK(res.code.params.L == 6);  // 12 message symbols across both messages
    const auto mds = verify_mds(res.code);
    CHECK(mds.ok);
    CHECK(mds.subsets_checked == 70);
    CHECK(coeffset_matrices_full_rank(res.code.field, res.coeffs));
}

TEST_CASE("expanded-2n2: seed 7 search stays far below the worst-case field bound") {
    const auto res = build_expanded_2n2(3, 2, 7);
    // Worst-case existence bound: 2m(N-2)(N-1) + 2m(N-1)*C(mN,2m) = 128.
    CHECK(res.code.field.q() < 128);
    CHECK(res.attempts >= 1);
    CHECK(verify_mds(res.code).ok);
    CHECK(coeffset_matrices_full_rank(res.code.field, res.coeffs));
}

TEST_CASE("expanded-2n2: exhausted attempt budget reports diagnostics") {
    // One draw at GF(27), then the next prime power (59) exceeds max_field.
    try {
        build_expanded_2n2(4, 2, 3, 1, 30);
        FAIL("expected SearchError");
    } catch (const SearchError& e) {
        CHECK(e.attempts == 1);
        CHECK(e.singular_coeff_rejections + e.failing_subset_rejections == 1);
        CHECK(std::string(e.what()).find("max field 30") != std::string::npos);
    }
}

TEST_CASE("expanded-2n2: coefficients extract back out of the generators") {
    const auto res = build_expanded_2n2(4, 2, 19);
    const CoeffSet extracted = coeffset_from_code(res.code);
    CHECK(extracted.h == res.coeffs.h);
    CHECK(extracted.g == res.coeffs.g);
}

TEST_CASE("expanded-2n2: determinism in (parameters, seed)") {
    const auto a = build_expanded_2n2(3, 2, 11);
    const auto b = build_expanded_2n2(3, 2, 11);
    CHECK(a.code == b.code);
    CHECK(a.attempts == b.attempts);
}

TEST_CASE("separate baseline: instances") {
    const JointCode code = build_separate_baseline(2, 3, 2, make_field(7, 1));
    CHECK(verify_mds(code).ok);
    CHECK(code.params.family == Family::Custom);

    const JointCode single = build_separate_baseline(1, 3, 2, make_field(7, 1));
    CHECK(verify_mds(single).ok);

    CHECK_THROWS_AS(build_separate_baseline(2, 4, 2, make_field(2, 1)), ParamError);
}

TEST_CASE("encode: worked instances") {
    const JointCode code = build_joint_2n2(4, make_field(3, 1), 1);
    const auto storage = encode(code, {{1, 2, 0}, {0, 1, 1}});
    CHECK(storage[0] == std::vector<Elem>{1, 2, 0});
    CHECK(storage[1] == std::vector<Elem>{0, 1, 1});
    CHECK(storage[2] == std::vector<Elem>{2, 1, 2});
    CHECK(storage[3] == std::vector<Elem>{0, 0, 2});

    const auto zeros = encode(code, {{0, 0, 0}, {0, 0, 0}});
    for (const auto& db : zeros)
        for (const auto v : db) CHECK(v == 0);

    CHECK_THROWS_AS(encode(code, {{1, 2, 0}}), ParamError);
    CHECK_THROWS_AS(encode(code, {{1, 2}, {0, 1, 1}}), ParamError);
    CHECK_THROWS_AS(encode(code, {{1, 2, 3}, {0, 1, 1}}), ParamError);
}

TEST_CASE("mds_decode: instances") {
    const JointCode code = build_joint_2n2(4, make_field(3, 1), 1);
    const std::vector<std::vector<Elem>> msgs = {{1, 2, 0}, {0, 1, 1}};
    const auto storage = encode(code, msgs);

    CHECK(mds_decode(code, {1, 2}, {storage[0], storage[1]}) == msgs);
    CHECK(mds_decode(code, {3, 4}, {storage[2], storage[3]}) == msgs);

    JointCode broken = code;
    broken.generators[3] = broken.generators[2];  // DB4 := copy of DB3
    const auto report = verify_mds(broken);
    CHECK_FALSE(report.ok);
    bool has34 = false;
    for (const auto& s : report.failing_subsets) has34 = has34 || s == std::vector<int>{3, 4};
    CHECK(has34);
    const auto bstorage = encode(broken, msgs);
    CHECK_THROWS_AS(mds_decode(broken, {3, 4}, {bstorage[2], bstorage[3]}), DecodeError);
}

TEST_CASE("encode/mds_decode round-trip across every subset of every family") {
    for (const auto& code : built_codes()) {
        Rng rng(Rng(2024).fork(code.params.N * 100 + code.params.T).seed());
        for_each_subset(code.params.N, code.params.T, [&](const std::vector<int>& subset) {
            for (int trial = 0; trial < 100; ++trial) {
                const auto msgs = random_messages(code, rng);
                const auto storage = encode(code, msgs);
                std::vector<std::vector<Elem>> stored;
                for (const int db : subset) stored.push_back(storage[db - 1]);
                REQUIRE(mds_decode(code, subset, stored) == msgs);
            }
        });
    }
}

TEST_CASE("storage shape: M = LK/T and no database wastes storage") {
    for (const auto& code : built_codes()) {
        CHECK(code.params.M * code.params.T == code.params.L * code.params.K);
        code.params.validate();
        for (const auto& g : code.generators) {
            CHECK(g.rows() == static_cast<std::size_t>(code.params.M));
            CHECK(g.cols() == static_cast<std::size_t>(code.params.K) * code.params.L);
            CHECK(mat_rank(code.field, g) == static_cast<std::size_t>(code.params.M));
        }
    }
}

TEST_CASE("builds are deterministic") {
    CHECK(build_joint_2n2(6) == build_joint_2n2(6));
    CHECK(build_joint_parity(4) == build_joint_parity(4));
    CHECK(build_expanded_parity(2, 3) == build_expanded_parity(2, 3));
}

TEST_CASE("min_field_2n2: general and per-prime bounds") {
    const auto n4 = min_field_2n2(4);
    CHECK(n4.general_bound == 5);
    bool p3bound3 = false, p2bound5 = false;
    for (const auto& [p, bound] : n4.guan_bounds) {
        p3bound3 = p3bound3 || (p == 3 && bound == 3);
        p2bound5 = p2bound5 || (p == 2 && bound == 5);
    }
    CHECK(p3bound3);
    CHECK(p2bound5);

    CHECK(min_field_2n2(3).general_bound == 2);

    const auto n5 = min_field_2n2(5);
    CHECK(n5.general_bound == 10);
    bool p2bound4 = false;
    for (const auto& [p, bound] : n5.guan_bounds) p2bound4 = p2bound4 || (p == 2 && bound == 4);
    CHECK(p2bound4);
}
