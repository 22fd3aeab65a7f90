#include "ahilb/clusters.hpp"

#include <set>

namespace ahilb {

namespace {

const std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
const char* kVar[] = {"x", "y", "z"};
const char* kUpName[] = {"xi", "eta", "zeta"};
const char* kDownName[] = {"lambda", "mu", "nu"};

Vec3 unit(int t) {
    Vec3 v;
    v[t] = 1;
    return v;
}

}  // namespace

Vec3 ClusterSystem::xi(int t) const {
    Vec3 v;
    for (int u = 0; u < 3; ++u) v[u] = u == t ? top[t] + 1 : -E[t][u];
    return v;
}

Vec3 ClusterSystem::lambda(int t) const {
    Vec3 v;
    for (int u = 0; u < 3; ++u) v[u] = u == t ? -top[t] : E[t][u] + 1;
    return v;
}

std::array<Vec3, 3> ClusterSystem::basis() const {
    std::array<Vec3, 3> b;
    for (int t = 0; t < 3; ++t) b[t] = up ? xi(t) : lambda(t);
    return b;
}

std::vector<ClusterEquation> ClusterSystem::equations() const {
    std::vector<ClusterEquation> out;
    for (int t = 0; t < 3; ++t) {
        ClusterEquation e;
        e.name = kUpName[t];
        e.lhs = (top[t] + 1) * unit(t);
        for (int u = 0; u < 3; ++u)
            if (u != t) e.rhs[u] = E[t][u];
        e.ratio = e.lhs - e.rhs;
        out.push_back(e);
    }
    for (int t = 0; t < 3; ++t) {
        ClusterEquation e;
        e.name = kDownName[t];
        for (int u = 0; u < 3; ++u)
            if (u != t) e.lhs[u] = E[t][u] + 1;
        e.rhs = top[t] * unit(t);
        e.ratio = e.lhs - e.rhs;
        out.push_back(e);
    }
    ClusterEquation p;
    p.name = "pi";
    p.lhs = Vec3{{1, 1, 1}};
    p.ratio = p.lhs;
    out.push_back(p);
    return out;
}

std::string ClusterSystem::text() const {
    auto mono = [](const Vec3& e) {
        std::string s;
        for (int u = 0; u < 3; ++u) {
            if (e[u] == 0) continue;
            if (!s.empty()) s += ' ';
            s += kVar[u];
            if (e[u] != 1) s += "^" + std::to_string(e[u]);
        }
        return s;
    };
    std::string out;
    for (const auto& e : equations()) {
        std::string rhs = e.name;
        std::string m = mono(e.rhs);
        if (!m.empty()) rhs += " " + m;
        out += mono(e.lhs) + " = " + rhs + "\n";
    }
    return out;
}

ClusterSystem cluster_system(const DualBasis& db) {
    ClusterSystem sys;
    sys.up = db.up;
    std::array<bool, 3> seen{false, false, false};
    for (const auto& m : db.m) {
        int t = -1, hits = 0;
        for (int u = 0; u < 3; ++u)
            if (db.up ? m[u] > 0 : m[u] < 0) t = u, ++hits;
        if (hits != 1 || seen[t])
            violation("dual basis element " + to_string(m) + " does not single out a variable");
        seen[t] = true;
        for (int u = 0; u < 3; ++u) {
            if (db.up) {
                if (u == t) sys.top[t] = m[t] - 1;
                else sys.E[t][u] = -m[u];
            } else {
                if (u == t) sys.top[t] = -m[t];
                else sys.E[t][u] = m[u] - 1;
            }
        }
    }
    for (int t = 0; t < 3; ++t)
        for (int u = 0; u < 3; ++u)
            if (sys.top[t] < 0 || sys.E[t][u] < 0) violation("chart has a negative exponent");
    return sys;
}

ClusterSystem cluster_system(const LatticeContext& ctx, const BasicTriangle& T, const TriangleRatios& tr) {
    return cluster_system(dual_basis(ctx, T, tr));
}

namespace {

struct NormalForm {
    Int l = 0, m = 0, n = 0, a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
};

NormalForm to_normal_form(const ClusterSystem& sys, const std::array<int, 3>& perm) {
    auto E = [&](int t, int u) { return sys.E[perm[t]][perm[u]]; };
    NormalForm nf;
    nf.l = sys.top[perm[0]];
    nf.m = sys.top[perm[1]];
    nf.n = sys.top[perm[2]];
    nf.b = E(0, 1), nf.f = E(0, 2), nf.c = E(1, 2), nf.d = E(1, 0), nf.a = E(2, 0), nf.e = E(2, 1);
    return nf;
}

}  // namespace

ClusterSystem cluster_from_parameters(const ClusterParameters& p) {
    NormalForm nf;
    const Int A = p.A, B = p.B, C = p.C, i = p.i, j = p.j, k = p.k, r = p.r;
    if (p.up) {
        if (p.case_a) nf.a = k, nf.b = B + i, nf.c = j, nf.d = A + j, nf.e = C + k, nf.f = i;
        else nf.a = A + k, nf.b = B + i, nf.c = C + j, nf.d = j, nf.e = k, nf.f = i;
        nf.l = nf.a + nf.d, nf.m = nf.b + nf.e, nf.n = nf.c + nf.f;
    } else {
        if (p.case_a) {
            nf.a = k - 1, nf.b = B + i - 1, nf.c = j - 1, nf.d = A + j - 1, nf.e = C + k - 1, nf.f = i - 1;
            nf.l = A + r - i, nf.m = B + C + r - j, nf.n = r - k;
        } else {
            nf.a = A + k - 1, nf.b = B + i - 1, nf.c = C + j - 1, nf.d = j - 1, nf.e = k - 1, nf.f = i - 1;
            nf.l = A + r - i, nf.m = B + r - j, nf.n = C + r - k;
        }
    }
    ClusterSystem sys;
    sys.up = p.up;
    const auto& q = p.perm;
    sys.top[q[0]] = nf.l, sys.top[q[1]] = nf.m, sys.top[q[2]] = nf.n;
    sys.E[q[0]][q[1]] = nf.b, sys.E[q[0]][q[2]] = nf.f;
    sys.E[q[1]][q[2]] = nf.c, sys.E[q[1]][q[0]] = nf.d;
    sys.E[q[2]][q[0]] = nf.a, sys.E[q[2]][q[1]] = nf.e;
    return sys;
}

ClusterParameters parameters_of(const TriangleRatios& tr, const BasicTriangle& T) {
    ClusterParameters p;
    p.up = T.up;
    p.case_a = tr.case_a;
    p.perm = tr.perm;
    p.A = tr.a, p.B = tr.b, p.C = tr.c;
    auto push = T.push();
    p.i = push[tr.side_of[0]];
    p.j = push[tr.side_of[1]];
    p.k = push[tr.side_of[2]];
    p.r = tr.r;
    return p;
}

std::vector<ClusterParameters> classify_all(const ClusterSystem& sys) {
    std::vector<ClusterParameters> out;
    const Int shift = sys.up ? 0 : 1;
    for (bool case_a : {true, false})
        for (const auto& perm : kPerms) {
            NormalForm nf = to_normal_form(sys, perm);
            ClusterParameters p;
            p.up = sys.up;
            p.case_a = case_a;
            p.perm = perm;
            p.i = nf.f + shift;
            p.B = nf.b - nf.f;
            if (case_a) {
                p.j = nf.c + shift, p.k = nf.a + shift;
                p.A = nf.d - nf.c, p.C = nf.e - nf.a;
            } else {
                p.j = nf.d + shift, p.k = nf.e + shift;
                p.A = nf.a - nf.e, p.C = nf.c - nf.d;
            }
            if (p.A < 0 || p.B < 0 || p.C < 0) continue;
            p.r = sys.up ? p.i + p.j + p.k + 1 : p.i + p.j + p.k - 1;
            if (p.r < 1) continue;
            ClusterSystem back = cluster_from_parameters(p);
            if (back.top == sys.top && back.E == sys.E) out.push_back(p);
        }
    return out;
}

ClusterParameters classify_cluster(const ClusterSystem& sys) {
    auto all = classify_all(sys);
    if (all.empty()) violation("chart matches no row of the classification");
    return all.front();
}

ClusterReport verify_cluster(const LatticeContext& ctx, const ClusterSystem& sys) {
    ClusterReport rep;
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
    const Int extra = sys.up ? 0 : 1;
    const auto& E = sys.E;
    // l = a + d, m = b + e, n = c + f, each plus one for a down chart.
    for (int t = 0; t < 3; ++t) {
        int u = (t + 1) % 3, w = (t + 2) % 3;
        if (sys.top[t] != E[w][t] + E[u][t] + extra)
            fail(std::string("mode relation fails for ") + kVar[t]);
    }
    for (int t = 0; t < 3; ++t)
        if (sys.xi(t) + sys.lambda(t) != Vec3{{1, 1, 1}}) fail(std::string("syzygy fails for ") + kVar[t]);
    for (const auto& e : sys.equations())
        if (!ctx.is_invariant(e.ratio)) fail("ratio of " + e.name + " is not invariant: " + to_string(e.ratio));
    auto b = sys.basis();
    Wide d = det3(b[0], b[1], b[2]);
    if (d != static_cast<Wide>(ctx.order) && d != -static_cast<Wide>(ctx.order))
        fail("chart basis has determinant " + std::to_string(static_cast<long long>(d)));
    auto basis = tripod_basis(sys);
    if (static_cast<Int>(basis.size()) != ctx.order)
        fail("tripod has " + std::to_string(basis.size()) + " monomials, group order is " +
             std::to_string(ctx.order));
    std::set<std::vector<Int>> chars;
    for (const auto& m : basis) chars.insert(ctx.character(m));
    if (chars.size() != basis.size()) fail("tripod monomials repeat a character");
    return rep;
}

std::vector<Vec3> tripod_basis(const ClusterSystem& sys) {
    auto admissible = [&](const Vec3& m) {
        for (int t = 0; t < 3; ++t)
            if (m[t] > sys.top[t]) return false;
        for (int t = 0; t < 3; ++t) {
            int u = (t + 1) % 3, w = (t + 2) % 3;
            if (m[u] > sys.E[t][u] && m[w] > sys.E[t][w]) return false;
        }
        return !(m[0] > 0 && m[1] > 0 && m[2] > 0);
    };
    std::set<Vec3> out;
    for (int zero = 0; zero < 3; ++zero) {
        int u = (zero + 1) % 3, w = (zero + 2) % 3;
        for (Int p = 0; p <= sys.top[u]; ++p)
            for (Int q = 0; q <= sys.top[w]; ++q) {
                Vec3 m;
                m[u] = p;
                m[w] = q;
                if (admissible(m)) out.insert(m);
            }
    }
    return {out.begin(), out.end()};
}

}  // namespace ahilb
