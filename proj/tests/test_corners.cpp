#include "doctest.h"
#include "oracles.hpp"

using namespace ahilb;

namespace {

std::vector<std::vector<Int>> strengths(const char* spec) {
    auto fans = corner_fans(lattice_context(parse_group_spec(spec)));
    return {fans[0].a, fans[1].a, fans[2].a};
}

Int inverse_mod(Int a, Int p) {
    for (Int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    return 0;
}

}  // namespace

TEST_CASE("Hirzebruch-Jung expansions") {
    CHECK(hj_expand(11, 4) == std::vector<Int>{3, 4});
    CHECK(hj_expand(11, 7) == std::vector<Int>{2, 3, 2, 2});
    CHECK(hj_expand(11, 2) == std::vector<Int>{6, 2});
    CHECK(hj_expand(5, 4) == std::vector<Int>{2, 2, 2, 2});
    CHECK(hj_expand(1, 0).empty());
}

TEST_CASE("Hirzebruch-Jung expansion agrees with the ceiling recursion") {
    for (Int r = 2; r <= 60; ++r)
        for (Int a = 1; a < r; ++a) {
            if (std::gcd(r, a) != 1) continue;
            auto hj = hj_expand(r, a);
            CHECK(hj == oracle::continued_fraction(r, a));
            for (Int x : hj) CHECK(x >= 2);
        }
}

TEST_CASE("corner strengths of the fixtures") {
    CHECK(strengths("1/11(1,2,8)") == std::vector<std::vector<Int>>{{3, 4}, {2, 3, 2, 2}, {6, 2}});
    CHECK(strengths("1/15(1,2,12)") == std::vector<std::vector<Int>>{{3, 2}, {2, 2, 2, 2}, {8, 2}});
    CHECK(strengths("1/30(25,2,3)") == std::vector<std::vector<Int>>{{5}, {2}, {2, 2}});
    CHECK(strengths("1/2(1,1,0)+1/2(0,1,1)") == std::vector<std::vector<Int>>{{}, {}, {}});
    CHECK(strengths("1/3(1,1,1)") == std::vector<std::vector<Int>>{{3}, {3}, {3}});
}

TEST_CASE("corner cones of prime cyclic groups follow the weights") {
    std::mt19937_64 rng(41);
    const Int primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};
    for (int trial = 0; trial < 200; ++trial) {
        Int p = primes[rng() % std::size(primes)];
        Int a = 1 + static_cast<Int>(rng() % (p - 1)), b = 1 + static_cast<Int>(rng() % (p - 1));
        Int c = ((-a - b) % p + p) % p;
        if (c == 0) continue;
        std::array<Int, 3> w{a, b, c};
        GroupSpec g;
        g.generators.push_back({p, w});
        auto fans = corner_fans(lattice_context(g));
        for (int i = 0; i < 3; ++i) {
            Int alpha = inverse_mod(w[(i + 1) % 3], p) * w[(i + 2) % 3] % p;
            CHECK(fans[i].r == p);
            CHECK(fans[i].alpha == alpha);
            CHECK(fans[i].a == oracle::continued_fraction(p, alpha));
        }
    }
}

TEST_CASE("Newton polygon vectors satisfy the strength recursion") {
    for (const auto& g : random_groups(13, 120, 60)) {
        auto ctx = lattice_context(g);
        for (const auto& f : corner_fans(ctx)) {
            REQUIRE(f.f.size() == f.a.size() + 2);
            for (std::size_t j = 1; j + 1 < f.f.size(); ++j) CHECK(f.f[j - 1] + f.f[j + 1] == f.a[j - 1] * f.f[j]);
            for (std::size_t j = 0; j + 1 < f.f.size(); ++j) CHECK(det2(f.f[j], f.f[j + 1]) == 1);
            // End vectors point along the two sides through the corner.
            Vec2 e = ctx.vertex_plane(f.corner);
            Vec2 prev = ctx.vertex_plane((f.corner + 2) % 3), next = ctx.vertex_plane((f.corner + 1) % 3);
            CHECK(det2(f.f.front(), prev - e) == 0);
            CHECK(det2(f.f.back(), next - e) == 0);
            CHECK(f.f.front() == primitive(prev - e));
            CHECK(f.f.back() == primitive(next - e));
        }
    }
}

TEST_CASE("junction numbers") {
    auto c = [](const char* spec, int side) {
        return junction_c(corner_fans(lattice_context(parse_group_spec(spec))), side).c;
    };
    CHECK(c("1/15(1,2,12)", 0) == 2);
    CHECK(c("1/15(1,2,12)", 1) == 1);
    CHECK(c("1/15(1,2,12)", 2) == 1);
    CHECK(c("1/30(25,2,3)", 1) == 2);
    for (int s = 0; s < 3; ++s) {
        CHECK(c("1/11(1,2,8)", s) == 1);
        CHECK(c("1/2(1,1,0)+1/2(0,1,1)", s) == 1);
    }
}

TEST_CASE("cyclic words of the fixtures") {
    auto word = [](const char* spec) { return cyclic_word(corner_fans(lattice_context(parse_group_spec(spec)))); };
    auto w11 = word("1/11(1,2,8)");
    CHECK(w11.values() == std::vector<Int>{1, 3, 4, 1, 2, 3, 2, 2, 1, 6, 2});
    std::vector<std::string> names;
    for (const auto& e : w11.entries) names.push_back(e.tag.name());
    CHECK(names == std::vector<std::string>{"J(e3e1)", "f(1,1)", "f(1,2)", "J(e1e2)", "f(2,1)", "f(2,2)", "f(2,3)",
                                            "f(2,4)", "J(e2e3)", "f(3,1)", "f(3,2)"});
    CHECK(word("1/15(1,2,12)").values() == std::vector<Int>{1, 3, 2, 2, 2, 2, 2, 2, 1, 8, 2});
    CHECK(word("1/2(1,1,0)+1/2(0,1,1)").values() == std::vector<Int>{1, 1, 1});
}

TEST_CASE("cyclic word vectors satisfy the half-turn relation") {
    for (const auto& g : random_groups(19, 120, 60)) {
        auto w = cyclic_word(corner_fans(lattice_context(g)));
        const std::size_t L = w.entries.size();
        for (std::size_t t = 0; t < L; ++t) {
            Vec2 l = t == 0 ? -w.entries[L - 1].v : w.entries[t - 1].v;
            Vec2 r = t + 1 == L ? -w.entries[0].v : w.entries[t + 1].v;
            CHECK(l + r == w.entries[t].value * w.entries[t].v);
        }
    }
}

TEST_CASE("word matrix product is minus the identity") {
    using M = std::array<std::array<Int, 2>, 2>;
    const M minus{{{-1, 0}, {0, -1}}};
    CHECK(word_matrix_product({1, 1, 1}) == minus);
    CHECK(word_matrix_product({1, 2, 1, 2}) == minus);
    for (const auto& g : random_groups(31, 150, 60))
        CHECK(word_matrix_product(cyclic_word(corner_fans(lattice_context(g))).values()) == minus);
    CHECK(word_matrix_product({2, 2, 2}) != minus);
}

TEST_CASE("cyclic word length and strength sum obey the count law") {
    for (const auto& g : random_groups(37, 150, 60)) {
        auto w = cyclic_word(corner_fans(lattice_context(g)));
        CHECK(w.strength_sum() == 3 * static_cast<Int>(w.entries.size()) - 6);
    }
}
