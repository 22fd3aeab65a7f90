#include "ahilb/fan.hpp"

#include <algorithm>

namespace ahilb {

std::vector<BasicTriangle> tesselate(const RegularTriangle& R, std::size_t parent) {
    const Int r = R.side;
    const Vec2 P0 = R.verts[0];
    Vec2 d1 = R.verts[1] - P0, d2 = R.verts[2] - P0;
    require(d1.x % r == 0 && d1.y % r == 0 && d2.x % r == 0 && d2.y % r == 0, "regular triangle grid is not integral");
    Vec2 v1{d1.x / r, d1.y / r}, v2{d2.x / r, d2.y / r};
    auto g = [&](Int a, Int b) { return P0 + a * v1 + b * v2; };
    std::vector<BasicTriangle> out;
    for (Int a = 0; a < r; ++a)
        for (Int b = 0; a + b <= r - 1; ++b) {
            BasicTriangle t;
            t.parent = parent;
            t.up = true;
            t.i = r - 1 - a - b;
            t.j = a;
            t.k = b;
            t.verts = {g(a, b), g(a + 1, b), g(a, b + 1)};
            out.push_back(t);
        }
    for (Int a = 0; a < r; ++a)
        for (Int b = 0; a + b <= r - 2; ++b) {
            BasicTriangle t;
            t.parent = parent;
            t.up = false;
            t.i = r - a - b - 1;
            t.j = a + 1;
            t.k = b + 1;
            t.verts = {g(a + 1, b + 1), g(a, b + 1), g(a + 1, b)};
            out.push_back(t);
        }
    return out;
}

void rebuild_edges(Fan& fan) {
    fan.edges.clear();
    for (std::size_t c = 0; c < fan.cones.size(); ++c)
        for (std::size_t k = 0; k < 3; ++k) {
            std::size_t a = fan.cones[c][k], b = fan.cones[c][(k + 1) % 3];
            fan.edges[{std::min(a, b), std::max(a, b)}].push_back(c);
        }
}

Fan build_fan(const LatticeContext& ctx, const Partition& p) {
    Fan fan;
    std::vector<BasicTriangle> all;
    for (std::size_t t = 0; t < p.triangles.size(); ++t)
        for (auto& b : tesselate(p.triangles[t], t)) all.push_back(b);
    std::map<Vec3, std::size_t> index;
    for (const auto& b : all)
        for (const auto& v : b.verts) index.emplace(ctx.point_from_plane(v), 0);
    for (auto& [v, i] : index) {
        i = fan.rays.size();
        fan.rays.push_back(v);
    }
    for (const auto& b : all) {
        std::array<std::size_t, 3> c;
        for (std::size_t k = 0; k < 3; ++k) c[k] = index.at(ctx.point_from_plane(b.verts[k]));
        fan.cones.push_back(c);
        fan.basic.push_back(b);
    }
    rebuild_edges(fan);
    return fan;
}

FanReport verify_fan(const Fan& fan, const LatticeContext& ctx) {
    FanReport rep;
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
    const Int n = ctx.n;
    for (const auto& r : fan.rays) {
        if (r.sum() != n) fail("ray " + to_string(r) + " is off the junior plane (not crepant)");
        else if (!ctx.contains(r)) fail("ray " + to_string(r) + " is not a lattice point");
        if (r[0] < 0 || r[1] < 0 || r[2] < 0) fail("ray " + to_string(r) + " lies outside the simplex");
    }
    if (static_cast<Int>(fan.cones.size()) != ctx.order)
        fail("fan has " + std::to_string(fan.cones.size()) + " cones, group order is " + std::to_string(ctx.order));
    // A cone is basic in L iff its pairing matrix with a basis of M is unimodular.
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        std::array<Vec3, 3> cols;
        bool integral = true;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) {
                Int v = dot(ctx.monomial_basis[a], fan.rays[fan.cones[c][b]]);
                if (v % n != 0) integral = false;
                cols[b][a] = v / n;
            }
        Wide d = det3(cols[0], cols[1], cols[2]);
        if (!integral || (d != 1 && d != -1)) fail("cone " + std::to_string(c) + " is not unimodular");
    }
    auto boundary = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < 3; ++i)
            if (fan.rays[a][i] == 0 && fan.rays[b][i] == 0) return true;
        return false;
    };
    for (const auto& [e, cs] : fan.edges) {
        const Vec3 &p = fan.rays[e.first], &q = fan.rays[e.second];
        if (boundary(e.first, e.second)) {
            if (cs.size() != 1) fail("boundary edge " + to_string(p) + "-" + to_string(q) + " bounds " +
                                     std::to_string(cs.size()) + " cones");
            continue;
        }
        if (cs.size() != 2) {
            fail("interior edge " + to_string(p) + "-" + to_string(q) + " bounds " + std::to_string(cs.size()) +
                 " cones");
            continue;
        }
        auto third = [&](std::size_t c) {
            for (auto v : fan.cones[c])
                if (v != e.first && v != e.second) return fan.rays[v];
            return fan.rays[fan.cones[c][0]];
        };
        Wide s1 = det3(p, q, third(cs[0])), s2 = det3(p, q, third(cs[1]));
        if (!((s1 > 0 && s2 < 0) || (s1 < 0 && s2 > 0)))
            fail("cones on edge " + to_string(p) + "-" + to_string(q) + " overlap");
    }
    return rep;
}

std::string SurfaceClass::label_name() const {
    switch (label) {
        case Label::P2: return "P2";
        case Label::Scroll: return "F" + std::to_string(scroll_n);
        case Label::BlownScrollOnce: return "scroll blown up once";
        case Label::BlownScrollTwice: return "scroll blown up twice";
        case Label::DP6: return "dP6";
    }
    return "";
}

namespace {

bool angle_less(const Vec2& a, const Vec2& b) {
    auto half = [](const Vec2& v) { return v.y < 0 || (v.y == 0 && v.x < 0); };
    if (half(a) != half(b)) return half(b);
    return det2(a, b) > 0;
}

bool strictly_inside(const RegularTriangle& R, const Vec2& q) {
    Int s0 = det2(R.verts[1] - R.verts[0], q - R.verts[0]);
    Int s1 = det2(R.verts[2] - R.verts[1], q - R.verts[1]);
    Int s2 = det2(R.verts[0] - R.verts[2], q - R.verts[2]);
    return (s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0);
}

}  // namespace

std::vector<SurfaceClass> surface_census(const Fan& fan, const LatticeContext& ctx, const Partition& p) {
    std::vector<std::vector<std::size_t>> nb(fan.rays.size());
    for (const auto& [e, cs] : fan.edges) {
        nb[e.first].push_back(e.second);
        nb[e.second].push_back(e.first);
    }
    std::vector<SurfaceClass> out;
    for (std::size_t v = 0; v < fan.rays.size(); ++v) {
        const Vec3& r = fan.rays[v];
        if (r[0] == 0 || r[1] == 0 || r[2] == 0) continue;
        SurfaceClass sc;
        sc.vertex = r;
        Vec2 vp = ctx.point_to_plane(r);
        std::vector<Vec2> w;
        for (auto u : nb[v]) w.push_back(ctx.point_to_plane(fan.rays[u]) - vp);
        std::sort(w.begin(), w.end(), angle_less);
        const std::size_t L = w.size();
        sc.valency = static_cast<int>(L);
        if (L < 3 || L > 6)
            violation("interior vertex " + to_string(r) + " has valency " + std::to_string(L));
        for (std::size_t t = 0; t < L; ++t) {
            Vec2 s = w[(t + L - 1) % L] + w[(t + 1) % L];
            const Vec2& x = w[t];
            Int b = x.x != 0 ? s.x / x.x : s.y / x.y;
            require(b * x.x == s.x && b * x.y == s.y, "star relation fails at " + to_string(r));
            sc.b.push_back(b);
            sc.c.push_back(b - 2);
            sc.star.push_back(ctx.point_from_plane(vp + x));
        }
        switch (L) {
            case 3: sc.label = SurfaceClass::Label::P2; break;
            case 4: {
                sc.label = SurfaceClass::Label::Scroll;
                Int d0 = sc.b[0] - sc.b[2], d1 = sc.b[1] - sc.b[3];
                sc.scroll_n = std::max(d0 < 0 ? -d0 : d0, d1 < 0 ? -d1 : d1) / 2;
                break;
            }
            case 5: sc.label = SurfaceClass::Label::BlownScrollOnce; break;
            default: {
                bool inner = false;
                for (const auto& R : p.triangles) inner |= strictly_inside(R, vp);
                sc.label = inner ? SurfaceClass::Label::DP6 : SurfaceClass::Label::BlownScrollTwice;
                if (inner)
                    for (Int b : sc.b) require(b == 1, "dP6 vertex without the hexagonal star");
            }
        }
        out.push_back(std::move(sc));
    }
    return out;
}

Int dp6_count(const Partition& p) {
    Int s = 0;
    for (const auto& t : p.triangles) s = add_checked(s, binomial(t.side - 1, 2));
    return s;
}

}  // namespace ahilb
