#include "ahilb/monomials.hpp"

#include <algorithm>

namespace ahilb {

namespace {

const std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

std::string superscript(Int k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = std::to_string(k), out;
    for (char ch : s) out += digits[ch - '0'];
    return out;
}

std::string monomial_part(const Vec3& e, int sign) {
    static const char* vars[] = {"x", "y", "z"};
    std::string out;
    for (int i = 0; i < 3; ++i) {
        Int k = sign * e[i];
        if (k <= 0) continue;
        out += vars[i];
        if (k > 1) out += superscript(k);
    }
    return out.empty() ? "1" : out;
}

Int abs_int(Int v) { return v < 0 ? -v : v; }

}  // namespace

std::string monomial_text(const Vec3& e) {
    static const char* vars[] = {"x", "y", "z"};
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += vars[i];
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string ratio_text(const Vec3& e) {
    bool den = e[0] < 0 || e[1] < 0 || e[2] < 0;
    return den ? monomial_part(e, 1) + ":" + monomial_part(e, -1) : monomial_part(e, 1);
}

bool is_primitive_in_m(const LatticeContext& ctx, const Vec3& m) {
    if (m.is_zero() || !ctx.is_invariant(m)) return false;
    Int g = content(m);
    for (Int p = 2; p * p <= g; ++p) {
        if (g % p != 0) continue;
        Vec3 q{{m[0] / p, m[1] / p, m[2] / p}};
        if (ctx.is_invariant(q)) return false;
        while (g % p == 0) g /= p;
    }
    if (g > 1) {
        Vec3 q{{m[0] / g, m[1] / g, m[2] / g}};
        if (ctx.is_invariant(q)) return false;
    }
    return true;
}

Vec3 line_ratio(const LatticeContext& ctx, const Vec3& p, const Vec3& d, const Vec3& q) {
    Vec3 m = primitive(cross(p, p + d));
    require(!m.is_zero(), "degenerate line");
    Int k = 1;
    for (const auto& g : ctx.generators) k = lcm(k, ctx.n / gcd(ctx.n, mod(dot(m, g), ctx.n)));
    m = k * m;
    Int s = dot(m, q);
    require(s != 0, "reference point lies on the line");
    return s > 0 ? m : -m;
}

Vec3 line_ratio(const LatticeContext& ctx, const Line& l, const Vec2& positive_point) {
    return line_ratio(ctx, ctx.point_from_plane(l.origin), ctx.from_plane(l.dir),
                      ctx.point_from_plane(positive_point));
}

Vec3 parallel_ratio(const Vec3& base, Int i) { return base - i * Vec3{{1, 1, 1}}; }

Vec3 to_normal(const std::array<int, 3>& perm, const Vec3& real) {
    return Vec3{{real[perm[0]], real[perm[1]], real[perm[2]]}};
}

Vec3 from_normal(const std::array<int, 3>& perm, const Vec3& normal) {
    Vec3 out;
    for (int t = 0; t < 3; ++t) out[perm[t]] = normal[t];
    return out;
}

int TriangleRatios::role_of(int side) const {
    for (int r = 0; r < 3; ++r)
        if (side_of[r] == side) return r;
    violation("side has no role");
}

namespace {

// Fills a..f and r if the normal-form side ratios have the given shape.
bool match_case(bool case_a, const Vec3& xi, const Vec3& eta, const Vec3& zeta, TriangleRatios& out) {
    if (xi[2] != 0 || xi[0] <= 0 || xi[1] > 0) return false;
    Int d = xi[0], b = -xi[1];
    if (case_a) {
        if (eta[2] != 0 || eta[0] > 0 || eta[1] <= 0) return false;
        if (zeta[0] != 0 || zeta[1] > 0 || zeta[2] <= 0) return false;
        Int a = -eta[0], e = eta[1], c = -zeta[1], f = zeta[2];
        Int r = f;
        if (d - a != r || e - b - c != r) return false;
        out.a = a, out.b = b, out.c = c, out.d = d, out.e = e, out.f = f, out.r = r;
    } else {
        if (eta[0] != 0 || eta[1] <= 0 || eta[2] > 0) return false;
        if (zeta[1] != 0 || zeta[0] > 0 || zeta[2] <= 0) return false;
        Int e = eta[1], c = -eta[2], a = -zeta[0], f = zeta[2];
        Int r = d - a;
        if (e - b != r || f - c != r) return false;
        out.a = a, out.b = b, out.c = c, out.d = d, out.e = e, out.f = f, out.r = r;
    }
    out.case_a = case_a;
    return true;
}

// The constant D with D*u = n*(m x (1,1,1)) for the primitive direction u of
// the side with ratio m; zero if u and the pattern are not proportional.
Int proportionality(const Vec3& u, const Vec3& m, Int n) {
    Vec3 pat = cross(m, Vec3{{1, 1, 1}});
    Int D = 0;
    for (int t = 0; t < 3; ++t) {
        if ((u[t] == 0) != (pat[t] == 0)) return 0;
        if (u[t] == 0) continue;
        Int num = mul_checked(n, pat[t]);
        if (num % u[t] != 0) return 0;
        Int q = abs_int(num / u[t]);
        if (D != 0 && q != D) return 0;
        D = q;
    }
    // The sign must be common too.
    for (int t = 0; t < 3; ++t)
        for (int s = 0; s < 3; ++s)
            if (u[t] != 0 && u[s] != 0 && ((u[t] > 0) == (u[s] > 0)) != ((pat[t] > 0) == (pat[s] > 0))) return 0;
    return D;
}

}  // namespace

TriangleRatios triangle_ratios(const LatticeContext& ctx, const RegularTriangle& R) {
    TriangleRatios tr;
    std::array<Vec3, 3> u;
    for (int s = 0; s < 3; ++s) {
        const Vec2& A = R.verts[(s + 1) % 3];
        const Vec2& B = R.verts[(s + 2) % 3];
        Vec2 dir = primitive(B - A);
        u[s] = ctx.from_plane(dir);
        tr.side_ratio[s] = line_ratio(ctx, ctx.point_from_plane(A), u[s], ctx.point_from_plane(R.verts[s]));
        require(is_primitive_in_m(ctx, tr.side_ratio[s]), "side ratio is not primitive in M");
    }
    for (bool case_a : {true, false})
        for (const auto& perm : kPerms)
            for (const auto& roles : kPerms) {
                TriangleRatios t = tr;
                Vec3 xi = to_normal(perm, tr.side_ratio[roles[0]]);
                Vec3 eta = to_normal(perm, tr.side_ratio[roles[1]]);
                Vec3 zeta = to_normal(perm, tr.side_ratio[roles[2]]);
                if (!match_case(case_a, xi, eta, zeta, t)) continue;
                t.perm = perm;
                t.side_of = roles;
                if (t.r != R.side)
                    violation("normal form side " + std::to_string(t.r) + " differs from the triangle side " +
                              std::to_string(R.side));
                Int D = 0;
                for (int s = 0; s < 3; ++s) {
                    Int q = proportionality(to_normal(perm, u[s]), to_normal(perm, tr.side_ratio[s]), ctx.n);
                    if (q == 0 || (D != 0 && q != D)) violation("side directions are not proportional to the ratios");
                    D = q;
                }
                if (case_a) {
                    Int d1 = t.d * t.e - t.a * t.b;
                    Int d2 = t.a * t.c + t.a * t.f + t.e * t.f;
                    Int d3 = t.b * t.f + t.c * t.d + t.d * t.f;
                    if (d1 != D || d2 != D || d3 != D) violation("proportionality constants disagree");
                }
                t.proportionality = D;
                return t;
            }
    violation("regular triangle matches neither normal form");
}

DualBasis dual_basis_direct(const LatticeContext& ctx, const BasicTriangle& T) {
    DualBasis db;
    db.up = T.up;
    std::array<Vec3, 3> v;
    for (int s = 0; s < 3; ++s) v[s] = ctx.point_from_plane(T.verts[s]);
    for (int s = 0; s < 3; ++s) {
        Wide det = det3(v[s], v[(s + 1) % 3], v[(s + 2) % 3]);
        require(det != 0, "degenerate basic triangle");
        Vec3 c = cross(v[(s + 1) % 3], v[(s + 2) % 3]);
        for (int t = 0; t < 3; ++t) {
            Wide num = static_cast<Wide>(ctx.n) * c[t];
            if (num % det != 0) violation("basic triangle is not unimodular");
            db.m[s][t] = narrow(num / det);
        }
    }
    return db;
}

DualBasis dual_basis_closed(const TriangleRatios& tr, const BasicTriangle& T) {
    DualBasis db;
    db.up = T.up;
    // Side ratios in normal form, by role.
    std::array<Vec3, 3> base;
    if (tr.case_a) {
        base[0] = Vec3{{tr.d, -tr.b, 0}};
        base[1] = Vec3{{-tr.a, tr.e, 0}};
        base[2] = Vec3{{0, -tr.c, tr.f}};
    } else {
        base[0] = Vec3{{tr.d, -tr.b, 0}};
        base[1] = Vec3{{0, tr.e, -tr.c}};
        base[2] = Vec3{{-tr.a, 0, tr.f}};
    }
    auto push = T.push();
    for (int role = 0; role < 3; ++role) {
        int side = tr.side_of[role];
        Vec3 m = parallel_ratio(base[role], push[side]);
        if (!T.up) m = -m;
        db.m[side] = from_normal(tr.perm, m);
    }
    return db;
}

DualBasis dual_basis(const LatticeContext& ctx, const BasicTriangle& T, const TriangleRatios& tr) {
    DualBasis direct = dual_basis_direct(ctx, T);
    DualBasis closed = dual_basis_closed(tr, T);
    for (int s = 0; s < 3; ++s)
        if (direct.m[s] != closed.m[s])
            violation("closed form " + to_string(closed.m[s]) + " disagrees with the dual basis " +
                      to_string(direct.m[s]));
    Vec3 sum = direct.m[0] + direct.m[1] + direct.m[2];
    if (sum != Vec3{{1, 1, 1}}) violation("dual basis exponents do not sum to xyz");
    return direct;
}

Crossing crossing_rule_check(const LatticeContext& ctx, const Line& l1, const Line& l2) {
    int c1 = l1.corner(), c2 = l2.corner();
    require(c1 != c2, "crossing rule needs rays from two corners");
    int third = 3 - c1 - c2;
    auto ref = [&](const Line& l) { return ctx.vertex_plane((l.corner() + 2) % 3); };
    Int x1 = abs_int(line_ratio(ctx, l1, ref(l1))[third]);
    Int x2 = abs_int(line_ratio(ctx, l2, ref(l2))[third]);
    if (x1 < x2) return Crossing::First;
    if (x2 < x1) return Crossing::Second;
    return Crossing::Neither;
}

}  // namespace ahilb
