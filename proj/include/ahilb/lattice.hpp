#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ahilb/arith.hpp"

namespace ahilb {

// One generator 1/r(a1,a2,a3).
struct Generator {
    Int r = 1;
    std::array<Int, 3> w{0, 0, 0};
    friend bool operator==(const Generator&, const Generator&) = default;
};

struct GroupSpec {
    std::vector<Generator> generators;
    std::string canonical_text() const;
    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Grammar: term ("+" term)*, term = 1/<r>(<a1>,<a2>,<a3>), whitespace ignored.
GroupSpec parse_group_spec(std::string_view text);

inline constexpr Int default_order_cap = 1'000'000;

// Points of L are stored as integer triples scaled by the denominator n.
// The junior plane is p1+p2+p3 = n; translations have coordinate sum 0.
//
// Plane coordinates: a translation v is written v = s*b1 + t*b2 where b1, b2
// base the translation lattice (given in the (x,y) projection).  A junior
// point p is identified with the translation p - n*e3.  In plane
// coordinates the lattice is the standard Z^2 and det2 is the lattice area.
struct LatticeContext {
    GroupSpec spec;
    Int n = 1;
    Int order = 1;
    std::vector<Vec3> generators;  // scaled by n, reduced mod n
    std::vector<Vec3> elements;    // sorted residues in [0,n)^3
    std::array<Vec3, 3> monomial_basis;
    Vec2 b1, b2;  // (x,y) projections of a positive basis of the translation lattice

    bool contains(const Vec3& p) const;
    bool is_element(const Vec3& residue) const;
    Vec3 vertex(int i) const;

    Vec2 to_plane(const Vec3& translation) const;
    Vec2 point_to_plane(const Vec3& p) const;
    Vec3 from_plane(const Vec2& v) const;
    Vec3 point_from_plane(const Vec2& q) const;
    Vec2 vertex_plane(int i) const { return point_to_plane(vertex(i)); }

    // Character of a monomial: (m.g mod n) over the generators.
    std::vector<Int> character(const Vec3& m) const;
    bool is_invariant(const Vec3& m) const;
};

LatticeContext lattice_context(const GroupSpec& spec, Int order_cap = default_order_cap);

// Integer basis of {m in Z^d : c.m == 0 mod n for every c in constraints}.
std::vector<std::vector<Int>> congruence_kernel(std::size_t dim,
                                                const std::vector<std::vector<Int>>& constraints,
                                                Int n);

enum class PointKind { Vertex, Edge, Interior };

struct JuniorPoint {
    Vec3 p;
    PointKind kind = PointKind::Interior;
    friend bool operator==(const JuniorPoint&, const JuniorPoint&) = default;
};

std::vector<JuniorPoint> junior_points(const LatticeContext& ctx);

Vec3 primitive_vector(const LatticeContext& ctx, const Vec3& v);
Int pair_index(const LatticeContext& ctx, const Vec3& v, const Vec3& w);

}  // namespace ahilb
