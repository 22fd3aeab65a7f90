#include "ahilb/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace ahilb {

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }

    GroupSpec parse() {
        GroupSpec spec;
        if (s_.empty()) fail("empty group specification");
        spec.generators.push_back(term());
        while (pos_ < s_.size()) {
            expect('+');
            spec.generators.push_back(term());
        }
        return spec;
    }

private:
    std::string s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InvalidInput("syntax error at position " + std::to_string(pos_) + ": " + msg);
    }

    void expect(char ch) {
        if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    Int integer() {
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        Int v = 0;
        const char* b = s_.data() + start;
        if (*b == '+') ++b;
        auto [p, ec] = std::from_chars(b, s_.data() + pos_, v);
        if (ec != std::errc() || p != s_.data() + pos_) {
            pos_ = start;
            fail("expected an integer");
        }
        return v;
    }

    Generator term() {
        std::size_t start = pos_;
        if (integer() != 1) {
            pos_ = start;
            fail("a term must start with 1/");
        }
        expect('/');
        Generator g;
        g.r = integer();
        if (g.r < 1) fail("order must be positive");
        expect('(');
        for (int i = 0; i < 3; ++i) {
            if (i) expect(',');
            g.w[i] = mod(integer(), g.r);
        }
        expect(')');
        if ((g.w[0] + g.w[1] + g.w[2]) % g.r != 0)
            throw InvalidInput("SL condition fails for 1/" + std::to_string(g.r) + "(" +
                               std::to_string(g.w[0]) + "," + std::to_string(g.w[1]) + "," +
                               std::to_string(g.w[2]) + "): weights do not sum to 0 mod " +
                               std::to_string(g.r));
        return g;
    }
};

// Echelon form of the rows, zero rows dropped.
std::vector<std::vector<Int>> hermite(std::vector<std::vector<Int>> rows, std::size_t dim) {
    std::vector<std::vector<Int>> out;
    for (std::size_t col = 0; col < dim; ++col) {
        // Combine all rows with a nonzero entry in col into a single pivot.
        std::size_t piv = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            if (piv == rows.size()) {
                piv = i;
                continue;
            }
            auto [g, x, y] = egcd(rows[piv][col], rows[i][col]);
            Int p = rows[piv][col] / g, q = rows[i][col] / g;
            for (std::size_t k = 0; k < dim; ++k) {
                Int a = rows[piv][k], b = rows[i][k];
                rows[piv][k] = narrow(Wide(x) * a + Wide(y) * b);
                rows[i][k] = narrow(Wide(q) * a - Wide(p) * b);
            }
        }
        if (piv == rows.size()) continue;
        std::vector<Int> pr = rows[piv];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(piv));
        if (pr[col] < 0)
            for (auto& v : pr) v = -v;
        for (auto& r : out) {
            Int q = floor_div(r[col], pr[col]);
            if (q != 0)
                for (std::size_t k = 0; k < dim; ++k) r[k] = sub_checked(r[k], mul_checked(q, pr[k]));
        }
        out.push_back(pr);
    }
    return out;
}

Int det_or(const Vec2& v, const Vec2& w) { return narrow(Wide(v.y) * w.x - Wide(v.x) * w.y); }

}  // namespace

std::string GroupSpec::canonical_text() const {
    std::string s;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        if (i) s += "+";
        s += "1/" + std::to_string(g.r) + "(" + std::to_string(g.w[0]) + "," + std::to_string(g.w[1]) +
             "," + std::to_string(g.w[2]) + ")";
    }
    return s;
}

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::vector<std::vector<Int>> congruence_kernel(std::size_t dim,
                                                const std::vector<std::vector<Int>>& constraints,
                                                Int n) {
    std::vector<std::vector<Int>> basis(dim, std::vector<Int>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) basis[i][i] = 1;
    for (const auto& c : constraints) {
        std::vector<Int> t(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            Wide s = 0;
            for (std::size_t k = 0; k < dim; ++k) s += Wide(basis[i][k]) * c[k];
            t[i] = mod(narrow(s % n), n);
        }
        std::size_t piv = dim;
        for (std::size_t i = 0; i < dim; ++i) {
            if (t[i] == 0) continue;
            if (piv == dim) {
                piv = i;
                continue;
            }
            auto [g, x, y] = egcd(t[piv], t[i]);
            Int p = t[piv] / g, q = t[i] / g;
            for (std::size_t k = 0; k < dim; ++k) {
                Int a = basis[piv][k], b = basis[i][k];
                basis[piv][k] = narrow(Wide(x) * a + Wide(y) * b);
                basis[i][k] = narrow(Wide(q) * a - Wide(p) * b);
            }
            t[piv] = g;
            t[i] = 0;
        }
        if (piv != dim) {
            Int scale = n / gcd(t[piv], n);
            for (auto& v : basis[piv]) v = mul_checked(v, scale);
        }
        // n*Z^d lies in the kernel; reducing against it keeps entries bounded.
        auto rows = basis;
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<Int> r(dim, 0);
            r[i] = n;
            rows.push_back(r);
        }
        basis = hermite(rows, dim);
        require(basis.size() == dim, "congruence kernel lost rank");
    }
    return basis;
}

bool LatticeContext::contains(const Vec3& p) const {
    for (const auto& m : monomial_basis)
        if (mod(dot(m, p), n) != 0) return false;
    return true;
}

bool LatticeContext::is_element(const Vec3& residue) const {
    return std::binary_search(elements.begin(), elements.end(), residue);
}

Vec3 LatticeContext::vertex(int i) const {
    Vec3 v;
    v[static_cast<std::size_t>(i)] = n;
    return v;
}

Vec2 LatticeContext::to_plane(const Vec3& t) const {
    require(t.sum() == 0, "translation vector must have coordinate sum 0");
    Vec2 v{t[0], t[1]};
    Int D = det_or(b1, b2);
    Int s = det_or(v, b2), u = det_or(b1, v);
    if (s % D != 0 || u % D != 0) violation("vector " + to_string(t) + " is not in the lattice");
    return {s / D, u / D};
}

Vec2 LatticeContext::point_to_plane(const Vec3& p) const {
    require(p.sum() == n, "point is not in the junior plane");
    return to_plane(p - vertex(2));
}

Vec3 LatticeContext::from_plane(const Vec2& v) const {
    Vec2 xy = v.x * b1 + v.y * b2;
    return {{xy.x, xy.y, sub_checked(-xy.x, xy.y)}};
}

Vec3 LatticeContext::point_from_plane(const Vec2& q) const { return from_plane(q) + vertex(2); }

std::vector<Int> LatticeContext::character(const Vec3& m) const {
    std::vector<Int> ch;
    ch.reserve(generators.size());
    for (const auto& g : generators) ch.push_back(mod(dot(m, g), n));
    return ch;
}

bool LatticeContext::is_invariant(const Vec3& m) const {
    for (const auto& g : generators)
        if (mod(dot(m, g), n) != 0) return false;
    return true;
}

LatticeContext lattice_context(const GroupSpec& spec, Int order_cap) {
    if (spec.generators.empty()) throw InvalidInput("group specification has no generators");
    LatticeContext ctx;
    ctx.spec = spec;
    Int n = 1;
    for (const auto& g : spec.generators) {
        Int h = gcd(g.r, gcd(g.w[0], gcd(g.w[1], g.w[2])));
        n = lcm(n, g.r / h);
        if (n > order_cap)
            throw InvalidInput("group order exceeds the cap of " + std::to_string(order_cap));
    }
    ctx.n = n;
    for (const auto& g : spec.generators) {
        Int h = gcd(g.r, gcd(g.w[0], gcd(g.w[1], g.w[2])));
        Int ord = g.r / h;
        Vec3 v;
        for (std::size_t i = 0; i < 3; ++i) v[i] = mod(mul_checked(g.w[i] / h, n / ord), n);
        ctx.generators.push_back(v);
    }

    std::set<Vec3> seen{Vec3{}};
    std::vector<Vec3> frontier{Vec3{}};
    while (!frontier.empty()) {
        std::vector<Vec3> next;
        for (const auto& e : frontier) {
            for (const auto& g : ctx.generators) {
                Vec3 t{{(e[0] + g[0]) % n, (e[1] + g[1]) % n, (e[2] + g[2]) % n}};
                if (seen.insert(t).second) {
                    if (static_cast<Int>(seen.size()) > order_cap)
                        throw InvalidInput("group order exceeds the cap of " + std::to_string(order_cap));
                    next.push_back(t);
                }
            }
        }
        frontier = std::move(next);
    }
    ctx.elements.assign(seen.begin(), seen.end());
    ctx.order = static_cast<Int>(ctx.elements.size());

    std::vector<std::vector<Int>> cons;
    for (const auto& g : ctx.generators) cons.push_back({g[0], g[1], g[2]});
    auto mb = congruence_kernel(3, cons, n);
    for (std::size_t i = 0; i < 3; ++i) ctx.monomial_basis[i] = Vec3{{mb[i][0], mb[i][1], mb[i][2]}};
    Wide d = det3(ctx.monomial_basis[0], ctx.monomial_basis[1], ctx.monomial_basis[2]);
    require(d == ctx.order || d == -ctx.order, "monomial basis determinant differs from the group order");

    // Translation lattice: (x, y, -x-y) with m.v == 0 mod n for all m in M.
    std::vector<std::vector<Int>> cons2;
    for (const auto& m : ctx.monomial_basis) cons2.push_back({m[0] - m[2], m[1] - m[2]});
    auto tb = congruence_kernel(2, cons2, n);
    ctx.b1 = {tb[0][0], tb[0][1]};
    ctx.b2 = {tb[1][0], tb[1][1]};
    if (det_or(ctx.b1, ctx.b2) < 0) ctx.b2 = -ctx.b2;
    require(narrow(Wide(det_or(ctx.b1, ctx.b2)) * ctx.order) == mul_checked(n, n),
            "translation lattice covolume differs from n^2/N");
    return ctx;
}

std::vector<JuniorPoint> junior_points(const LatticeContext& ctx) {
    std::vector<JuniorPoint> pts;
    for (int i = 0; i < 3; ++i) pts.push_back({ctx.vertex(i), PointKind::Vertex});
    for (const auto& e : ctx.elements) {
        if (e.sum() != ctx.n) continue;
        bool edge = e[0] == 0 || e[1] == 0 || e[2] == 0;
        pts.push_back({e, edge ? PointKind::Edge : PointKind::Interior});
    }
    std::sort(pts.begin(), pts.end(), [](const JuniorPoint& a, const JuniorPoint& b) { return a.p < b.p; });
    return pts;
}

Vec3 primitive_vector(const LatticeContext& ctx, const Vec3& v) {
    if (v.is_zero()) throw InvalidInput("primitive_vector of the zero vector");
    return ctx.from_plane(primitive(ctx.to_plane(v)));
}

Int pair_index(const LatticeContext& ctx, const Vec3& v, const Vec3& w) {
    Int d = det2(ctx.to_plane(v), ctx.to_plane(w));
    return d < 0 ? -d : d;
}

}  // namespace ahilb
