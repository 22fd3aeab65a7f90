#pragma once

// Brute-force reference computations used by the tests.  They work from
// the group weights directly and share no code with the library beyond the
// basic integer types.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "ahilb/pipeline.hpp"

namespace oracle {

using ahilb::Int;
using ahilb::Vec3;
using Triple = std::array<Int, 3>;

// A generator 1/r(w) in lowest terms, so that r is its order.
inline ahilb::Generator reduced(const ahilb::Generator& gen) {
    Int r = gen.r;
    Triple w{((gen.w[0] % r) + r) % r, ((gen.w[1] % r) + r) % r, ((gen.w[2] % r) + r) % r};
    Int g = std::gcd(r, std::gcd(w[0], std::gcd(w[1], w[2])));
    return {r / g, {w[0] / g, w[1] / g, w[2] / g}};
}

// Exponent of the group: lcm of the generator orders.
inline Int denominator(const ahilb::GroupSpec& g) {
    Int n = 1;
    for (const auto& gen : g.generators) n = std::lcm(n, reduced(gen).r);
    return n;
}

// All group elements as residues (scaled by the denominator).
inline std::set<Triple> elements(const ahilb::GroupSpec& g) {
    Int n = denominator(g);
    std::vector<Triple> gens;
    for (const auto& raw : g.generators) {
        auto gen = reduced(raw);
        Int s = n / gen.r;
        gens.push_back({gen.w[0] * s, gen.w[1] * s, gen.w[2] * s});
    }
    std::set<Triple> seen{{0, 0, 0}};
    std::vector<Triple> todo{{0, 0, 0}};
    while (!todo.empty()) {
        Triple p = todo.back();
        todo.pop_back();
        for (const auto& q : gens) {
            Triple s{(p[0] + q[0]) % n, (p[1] + q[1]) % n, (p[2] + q[2]) % n};
            if (seen.insert(s).second) todo.push_back(s);
        }
    }
    return seen;
}

// Junior lattice points other than the vertices: residues with sum n.
inline std::vector<Triple> junior_residues(const ahilb::GroupSpec& g) {
    Int n = denominator(g);
    std::vector<Triple> out;
    for (const auto& e : elements(g))
        if (e[0] + e[1] + e[2] == n) out.push_back(e);
    return out;
}

inline bool invariant(const ahilb::GroupSpec& g, const Vec3& m) {
    for (const auto& gen : g.generators) {
        Int s = m[0] * gen.w[0] + m[1] * gen.w[1] + m[2] * gen.w[2];
        if (((s % gen.r) + gen.r) % gen.r != 0) return false;
    }
    return true;
}

// Character of x^m on the generators, each in [0, r).
inline std::vector<Int> character(const ahilb::GroupSpec& g, const Vec3& m) {
    std::vector<Int> out;
    for (const auto& gen : g.generators) {
        Int s = m[0] * gen.w[0] + m[1] * gen.w[1] + m[2] * gen.w[2];
        out.push_back(((s % gen.r) + gen.r) % gen.r);
    }
    return out;
}

// r/alpha = a1 - 1/(a2 - ...), by integer ceilings.
inline std::vector<Int> continued_fraction(Int p, Int q) {
    std::vector<Int> out;
    while (q != 0) {
        Int a = (p + q - 1) / q;
        out.push_back(a);
        Int next = a * q - p;
        p = q;
        q = next;
    }
    return out;
}

// The invariant exponent vector vanishing at the scaled points p and q and
// positive at r with the smallest entries, by search in a box.
inline Vec3 line_ratio(const ahilb::GroupSpec& g, const Vec3& p, const Vec3& q, const Vec3& r, Int bound) {
    Vec3 best;
    Int best_norm = -1;
    for (Int a = -bound; a <= bound; ++a)
        for (Int b = -bound; b <= bound; ++b)
            for (Int c = -bound; c <= bound; ++c) {
                Vec3 m{{a, b, c}};
                if (m.is_zero()) continue;
                if (a * p[0] + b * p[1] + c * p[2] != 0 || a * q[0] + b * q[1] + c * q[2] != 0) continue;
                if (a * r[0] + b * r[1] + c * r[2] <= 0 || !invariant(g, m)) continue;
                Int norm = std::abs(a) + std::abs(b) + std::abs(c);
                if (best_norm < 0 || norm < best_norm) best = m, best_norm = norm;
            }
    return best;
}

// Lattice points of the group in the closed junior simplex, as scaled triples.
inline std::vector<Vec3> simplex_points(const ahilb::GroupSpec& g) {
    Int n = denominator(g);
    std::vector<Vec3> out;
    for (int i = 0; i < 3; ++i) {
        Vec3 v;
        v[i] = n;
        out.push_back(v);
    }
    for (const auto& e : junior_residues(g)) out.push_back(Vec3{{e[0], e[1], e[2]}});
    for (const auto& e : elements(g)) {
        // Points on the sides have a zero coordinate and sum n.
        for (int z = 0; z < 3; ++z) {
            if (e[z] != 0) continue;
            int u = (z + 1) % 3, w = (z + 2) % 3;
            if (e[u] + e[w] == n && e[u] != 0 && e[w] != 0) {
                Vec3 v;
                v[u] = e[u];
                v[w] = e[w];
                out.push_back(v);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Equation {
    Vec3 lhs, rhs;
    friend auto operator<=>(const Equation&, const Equation&) = default;
};

// Cluster equations over a basic triangle of the tesselation of the simplex
// of Z/r + Z/r, read off from the vertex coordinates (unscaled, sum r).
// Up: vertices (i+1,j,k), (i,j+1,k), (i,j,k+1).  Down: (i-1,j,k), ...
inline std::set<Equation> zr_equations(Int r, bool up, Int i, Int j, Int k) {
    std::set<Equation> eq;
    auto mono = [](Int x, Int y, Int z) { return Vec3{{x, y, z}}; };
    if (up) {
        eq.insert({mono(r - i, 0, 0), mono(0, i, i)});
        eq.insert({mono(0, r - j, 0), mono(j, 0, j)});
        eq.insert({mono(0, 0, r - k), mono(k, k, 0)});
        eq.insert({mono(0, i + 1, i + 1), mono(r - i - 1, 0, 0)});
        eq.insert({mono(j + 1, 0, j + 1), mono(0, r - j - 1, 0)});
        eq.insert({mono(k + 1, k + 1, 0), mono(0, 0, r - k - 1)});
    } else {
        eq.insert({mono(0, i, i), mono(r - i, 0, 0)});
        eq.insert({mono(j, 0, j), mono(0, r - j, 0)});
        eq.insert({mono(k, k, 0), mono(0, 0, r - k)});
        eq.insert({mono(r - i + 1, 0, 0), mono(0, i - 1, i - 1)});
        eq.insert({mono(0, r - j + 1, 0), mono(j - 1, 0, j - 1)});
        eq.insert({mono(0, 0, r - k + 1), mono(k - 1, k - 1, 0)});
    }
    eq.insert({mono(1, 1, 1), mono(0, 0, 0)});
    return eq;
}

inline std::set<Equation> equations_of(const ahilb::ClusterSystem& sys) {
    std::set<Equation> out;
    for (const auto& e : sys.equations()) out.insert({e.lhs, e.rhs});
    return out;
}

inline ahilb::GroupSpec zr(Int r) {
    ahilb::GroupSpec g;
    g.generators.push_back({r, {1, r - 1, 0}});
    g.generators.push_back({r, {0, 1, r - 1}});
    return g;
}

}  // namespace oracle
