#include "doctest.h"
#include "oracles.hpp"

using namespace ahilb;

namespace {

bool has_failure(const ClusterReport& rep, const std::string& needle) {
    for (const auto& f : rep.failures)
        if (f.find(needle) != std::string::npos) return true;
    return false;
}

// Pushes of a basic triangle of Z/r + Z/r read off from its vertices.
std::array<Int, 3> zr_pushes(const Analysis& a, const BasicTriangle& T) {
    std::array<Int, 3> out{};
    for (int t = 0; t < 3; ++t) {
        Int lo = a.ctx.n, hi = 0;
        for (const auto& v : T.verts) {
            Int c = a.ctx.point_from_plane(v)[t];
            lo = std::min(lo, c), hi = std::max(hi, c);
        }
        out[t] = T.up ? lo : hi;
    }
    return out;
}

}  // namespace

TEST_CASE("cluster equations over Z/r + Z/r") {
    for (Int r = 2; r <= 4; ++r) {
        auto a = analyze(oracle::zr(r));
        CHECK(static_cast<Int>(a.clusters.size()) == r * r);
        for (const auto& sys : a.clusters) {
            const auto& T = a.fan.basic[sys.cone];
            auto p = zr_pushes(a, T);
            CHECK(sys.up == T.up);
            CHECK(oracle::equations_of(sys) == oracle::zr_equations(r, T.up, p[0], p[1], p[2]));
        }
    }
}

TEST_CASE("table form of the cluster equations on the whole simplex") {
    // Z/r + Z/r has side ratios x^r, y^r, z^r, so A = B = C = 0.
    for (Int r = 2; r <= 5; ++r) {
        for (Int i = 0; i < r; ++i)
            for (Int j = 0; i + j < r; ++j) {
                Int k = r - 1 - i - j;
                ClusterParameters p{true, true, {0, 1, 2}, 0, 0, 0, i, j, k, r};
                CHECK(oracle::equations_of(cluster_from_parameters(p)) == oracle::zr_equations(r, true, i, j, k));
            }
        for (Int i = 1; i <= r; ++i)
            for (Int j = 1; i + j <= r; ++j) {
                Int k = r + 1 - i - j;
                ClusterParameters p{false, true, {0, 1, 2}, 0, 0, 0, i, j, k, r};
                CHECK(oracle::equations_of(cluster_from_parameters(p)) == oracle::zr_equations(r, false, i, j, k));
            }
    }
}

TEST_CASE("cluster systems of the fixtures pass every check") {
    for (const char* spec : {"1/11(1,2,8)", "1/15(1,2,12)", "1/30(25,2,3)", "1/7(1,2,4)", "1/1(0,0,0)",
                             "1/2(1,1,0)+1/2(0,1,1)", "1/3(1,2,0)+1/3(0,1,2)", "1/101(1,7,93)"}) {
        auto a = analyze(spec);
        CHECK(a.clusters.size() == a.fan.cones.size());
        for (const auto& sys : a.clusters) {
            auto rep = verify_cluster(a.ctx, sys);
            CHECK(rep.ok());
            for (const auto& e : sys.equations()) CHECK(oracle::invariant(a.ctx.spec, e.ratio));
            CHECK(sys.equations().size() == 7);
        }
    }
}

TEST_CASE("cluster checks catch a wrong exponent") {
    auto a = analyze("1/11(1,2,8)");
    ClusterSystem bad = a.clusters[0];
    bad.E[0][1] += 1;
    auto rep = verify_cluster(a.ctx, bad);
    CHECK(has_failure(rep, "not invariant"));
    CHECK(has_failure(rep, "mode relation"));
}

TEST_CASE("cluster checks catch the wrong orientation") {
    auto a = analyze("1/11(1,2,8)");
    ClusterSystem bad = a.clusters[0];
    bad.up = !bad.up;
    CHECK(has_failure(verify_cluster(a.ctx, bad), "mode relation"));
}

TEST_CASE("tripod bases") {
    auto triv = analyze("1/1(0,0,0)");
    REQUIRE(triv.clusters.size() == 1);
    CHECK(tripod_basis(triv.clusters[0]) == std::vector<Vec3>{Vec3{{0, 0, 0}}});

    auto z2 = analyze("1/2(1,1,0)+1/2(0,1,1)");
    for (const auto& sys : z2.clusters) {
        auto b = tripod_basis(sys);
        CHECK(b.size() == 4);
        std::set<std::vector<Int>> chars;
        for (const auto& m : b) chars.insert(oracle::character(z2.ctx.spec, m));
        CHECK(chars.size() == 4);
    }

    auto a = analyze("1/11(1,2,8)");
    std::set<std::vector<Int>> all;
    for (Int c = 0; c < 11; ++c) all.insert({c});
    for (const auto& sys : a.clusters) {
        std::set<std::vector<Int>> chars;
        for (const auto& m : tripod_basis(sys)) {
            CHECK((m[0] == 0 || m[1] == 0 || m[2] == 0));
            chars.insert(oracle::character(a.ctx.spec, m));
        }
        CHECK(chars == all);
    }
}

TEST_CASE("tripod monomials are exactly the standard monomials") {
    // Brute force over a box: a monomial with a zero exponent survives when no
    // leading term of the seven equations divides it.
    for (const auto& g : random_groups(97, 60, 40)) {
        auto a = analyze(g);
        for (const auto& sys : a.clusters) {
            std::set<Vec3> expect;
            const Int B = a.ctx.n + 1;
            for (Int x = 0; x <= B; ++x)
                for (Int y = 0; y <= B; ++y)
                    for (Int z = 0; z <= B; ++z) {
                        if (x && y && z) continue;
                        Vec3 m{{x, y, z}};
                        bool divisible = false;
                        for (const auto& e : sys.equations())
                            if (m[0] >= e.lhs[0] && m[1] >= e.lhs[1] && m[2] >= e.lhs[2]) divisible = true;
                        if (!divisible) expect.insert(m);
                    }
            auto b = tripod_basis(sys);
            CHECK(std::set<Vec3>(b.begin(), b.end()) == expect);
        }
    }
}

TEST_CASE("classification round trip") {
    for (const char* spec : {"1/11(1,2,8)", "1/30(25,2,3)", "1/101(1,7,93)", "1/7(1,2,4)"}) {
        auto a = analyze(spec);
        for (const auto& sys : a.clusters) {
            const auto& T = a.fan.basic[sys.cone];
            ClusterParameters p = parameters_of(a.ratios[T.parent], T);
            ClusterSystem back = cluster_from_parameters(p);
            CHECK(back.top == sys.top);
            CHECK(back.E == sys.E);
            auto all = classify_all(sys);
            CHECK(std::find(all.begin(), all.end(), p) != all.end());
            ClusterParameters first = classify_cluster(sys);
            ClusterSystem again = cluster_from_parameters(first);
            CHECK(again.top == sys.top);
            CHECK(again.E == sys.E);
        }
    }
}

TEST_CASE("classification of an Up chart in Case a") {
    ClusterParameters p{true, true, {0, 1, 2}, 2, 1, 3, 1, 0, 2, 4};
    ClusterSystem sys = cluster_from_parameters(p);
    CHECK(sys.up);
    auto all = classify_all(sys);
    REQUIRE(!all.empty());
    CHECK(all.front().case_a);
    CHECK(std::find(all.begin(), all.end(), p) != all.end());
    for (int t = 0; t < 3; ++t) CHECK(sys.top[t] == sys.E[(t + 2) % 3][t] + sys.E[(t + 1) % 3][t]);
}

TEST_CASE("cluster systems on random groups") {
    for (const auto& g : random_groups(101, 120, 60)) {
        auto a = analyze(g);
        for (const auto& sys : a.clusters) {
            CHECK(verify_cluster(a.ctx, sys).ok());
            const auto& T = a.fan.basic[sys.cone];
            auto b = sys.basis();
            DualBasis db = dual_basis_direct(a.ctx, T);
            CHECK(std::set<Vec3>(b.begin(), b.end()) == std::set<Vec3>(db.m.begin(), db.m.end()));
        }
    }
}
