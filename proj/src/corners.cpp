#include "ahilb/corners.hpp"

namespace ahilb {

std::string side_name(int side) {
    static const char* names[] = {"e1e2", "e2e3", "e3e1"};
    return names[side];
}

std::string Tag::name() const {
    if (is_junction()) return "J(" + side_name(index) + ")";
    return "f(" + std::to_string(index + 1) + "," + std::to_string(j) + ")";
}

std::vector<Int> hj_expand(Int r, Int alpha) {
    if (r < 1) throw InvalidInput("hj_expand needs r >= 1");
    if (r == 1) return {};
    if (alpha < 1 || alpha >= r || gcd(r, alpha) != 1)
        throw InvalidInput("hj_expand needs 1 <= alpha < r with gcd(r, alpha) = 1");
    std::vector<Int> out;
    while (alpha > 0) {
        Int a = ceil_div(r, alpha);
        out.push_back(a);
        Int next = a * alpha - r;
        r = alpha;
        alpha = next;
    }
    return out;
}

CornerFan newton_polygon(const LatticeContext& ctx, int corner) {
    CornerFan fan;
    fan.corner = corner;
    Vec2 e = ctx.vertex_plane(corner);
    Vec2 f0 = primitive(ctx.vertex_plane((corner + 2) % 3) - e);
    Vec2 q = primitive(ctx.vertex_plane((corner + 1) % 3) - e);
    Int R = det2(f0, q);
    require(R > 0, "corner cone at e" + std::to_string(corner + 1) + " is not positively oriented");
    fan.f.push_back(f0);
    fan.r = R;
    if (R == 1) {
        fan.f.push_back(q);
        return fan;
    }
    // w completes f0 to a positive basis; the first sail vertex is the
    // translate of w by f0 that lands inside the cone.
    auto [g, x, y] = egcd(f0.x, f0.y);
    require(g == 1, "side vector is not primitive");
    Vec2 w{-y, x};
    fan.alpha = mod(det2(w, q), R);
    Int t = ceil_div(-det2(w, q), R);
    fan.f.push_back(w + t * f0);
    while (fan.f.back() != q) {
        const Vec2& prev = fan.f[fan.f.size() - 2];
        const Vec2& cur = fan.f.back();
        Int dc = det2(cur, q);
        require(dc > 0, "Newton polygon left the corner cone");
        Int a = ceil_div(det2(prev, q), dc);
        require(a >= 2, "Newton polygon strength below 2");
        fan.a.push_back(a);
        fan.f.push_back(a * cur - prev);
        require(fan.f.size() <= static_cast<std::size_t>(R) + 2, "Newton polygon does not terminate");
    }
    return fan;
}

std::array<CornerFan, 3> corner_fans(const LatticeContext& ctx) {
    return {newton_polygon(ctx, 0), newton_polygon(ctx, 1), newton_polygon(ctx, 2)};
}

namespace {

// k with a == k*b, or nothing.
bool multiple_of(const Vec2& a, const Vec2& b, Int& k) {
    if (b.is_zero()) return false;
    k = b.x != 0 ? a.x / b.x : a.y / b.y;
    return k * b.x == a.x && k * b.y == a.y;
}

}  // namespace

Junction junction_c(const std::array<CornerFan, 3>& fans, int side) {
    const CornerFan& fi = fans[static_cast<std::size_t>(side)];
    const CornerFan& fn = fans[static_cast<std::size_t>((side + 1) % 3)];
    // f_{i+1,1} - f_{i,k} = c f_{i+1,0}; an empty fan falls back to its side vectors.
    Vec2 diff = fn.f[1] - fi.f[static_cast<std::size_t>(fi.k())];
    Int c = 0;
    if (!multiple_of(diff, fn.f[0], c) || c < 1)
        violation("no junction value on side " + side_name(side));
    return {side, c, fi.f.back()};
}

std::vector<Int> CyclicWord::values() const {
    std::vector<Int> v;
    for (const auto& e : entries) v.push_back(e.value);
    return v;
}

Int CyclicWord::strength_sum() const {
    Int s = 0;
    for (const auto& e : entries) s = add_checked(s, e.value);
    return s;
}

CyclicWord cyclic_word(const std::array<CornerFan, 3>& fans) {
    CyclicWord w;
    auto push = [&](Tag t, Vec2 v) { w.entries.push_back({0, t, v}); };
    const auto& f1 = fans[0].f;
    const auto& f2 = fans[1].f;
    const auto& f3 = fans[2].f;
    push(Tag::junction(2), f1.front());
    for (int j = 1; j <= fans[0].k(); ++j) push(Tag::strength(0, j), f1[static_cast<std::size_t>(j)]);
    push(Tag::junction(0), f1.back());
    for (int j = 1; j <= fans[1].k(); ++j) push(Tag::strength(1, j), -f2[static_cast<std::size_t>(j)]);
    push(Tag::junction(1), -f2.back());
    for (int j = 1; j <= fans[2].k(); ++j) push(Tag::strength(2, j), f3[static_cast<std::size_t>(j)]);

    const std::size_t L = w.entries.size();
    auto vec = [&](std::ptrdiff_t t) {
        auto Ls = static_cast<std::ptrdiff_t>(L);
        if (t < 0) return -w.entries[static_cast<std::size_t>(t + Ls)].v;
        if (t >= Ls) return -w.entries[static_cast<std::size_t>(t - Ls)].v;
        return w.entries[static_cast<std::size_t>(t)].v;
    };
    for (std::size_t t = 0; t < L; ++t) {
        auto ti = static_cast<std::ptrdiff_t>(t);
        Vec2 s = vec(ti - 1) + vec(ti + 1);
        Int k = 0;
        if (!multiple_of(s, w.entries[t].v, k)) violation("cyclic word relation fails at " + w.entries[t].tag.name());
        w.entries[t].value = k;
    }
    // The relation read off the word must agree with the fan data.
    for (const auto& e : w.entries) {
        if (e.tag.is_junction()) {
            require(e.value == junction_c(fans, e.tag.index).c, "junction value disagrees with the side relation");
        } else {
            require(e.value == fans[static_cast<std::size_t>(e.tag.index)].a[static_cast<std::size_t>(e.tag.j - 1)],
                    "word strength disagrees with the corner fan");
        }
    }
    return w;
}

std::array<std::array<Int, 2>, 2> word_matrix_product(const std::vector<Int>& values) {
    std::array<std::array<Int, 2>, 2> p{{{1, 0}, {0, 1}}};
    for (Int v : values) {
        // p <- [[0,1],[-1,v]] * p
        std::array<std::array<Int, 2>, 2> q;
        for (int c = 0; c < 2; ++c) {
            q[0][c] = p[1][c];
            q[1][c] = sub_checked(mul_checked(v, p[1][c]), p[0][c]);
        }
        p = q;
    }
    return p;
}

}  // namespace ahilb
