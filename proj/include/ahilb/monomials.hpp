#pragma once

#include <string>

#include "ahilb/fan.hpp"

namespace ahilb {

// Exponent vector of a Laurent monomial; positive entries form the
// numerator of the ratio, negative entries the denominator.
struct MonomialRatio {
    Vec3 e;
    friend auto operator<=>(const MonomialRatio&, const MonomialRatio&) = default;
};

std::string monomial_text(const Vec3& e);  // e.g. "x^2 y^-1"
std::string ratio_text(const Vec3& e);     // e.g. "x²:y", or "x¹¹" for a monomial

bool is_primitive_in_m(const LatticeContext& ctx, const Vec3& m);

// Primitive invariant ratio vanishing on the line through p along d,
// positive at q.  All points are scaled junior points.
Vec3 line_ratio(const LatticeContext& ctx, const Vec3& p, const Vec3& d, const Vec3& q);
Vec3 line_ratio(const LatticeContext& ctx, const Line& l, const Vec2& positive_point);

// Ratio of the parallel line i steps further into the triangle.
Vec3 parallel_ratio(const Vec3& base, Int i);

// Side ratios of a regular triangle in normal form.  Normal coordinate t
// is the real coordinate perm[t]; side_of[0..2] are the sides (indexed as
// in RegularTriangle::lines) playing the roles of xi, eta, zeta.
struct TriangleRatios {
    bool case_a = true;
    std::array<int, 3> perm{0, 1, 2};
    std::array<int, 3> side_of{0, 1, 2};
    std::array<Vec3, 3> side_ratio;  // per side of R, real coordinates, positive on R
    Int r = 1;
    Int a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
    Int proportionality = 0;  // the common constant de-ab (Case a)
    int role_of(int side) const;
};

TriangleRatios triangle_ratios(const LatticeContext& ctx, const RegularTriangle& R);

Vec3 to_normal(const std::array<int, 3>& perm, const Vec3& real);
Vec3 from_normal(const std::array<int, 3>& perm, const Vec3& normal);

// m[s] is dual to the vertex verts[s] of the basic triangle, so it is the
// monomial of the side opposite that vertex.  Up: xi, eta, zeta; down:
// lambda, mu, nu (stored by side of the parent).
struct DualBasis {
    bool up = true;
    std::array<Vec3, 3> m;
};

DualBasis dual_basis_direct(const LatticeContext& ctx, const BasicTriangle& T);
DualBasis dual_basis_closed(const TriangleRatios& tr, const BasicTriangle& T);
DualBasis dual_basis(const LatticeContext& ctx, const BasicTriangle& T, const TriangleRatios& tr);

enum class Crossing { First, Second, Neither };

// Exponent form of the knock-out rule for rays from two different corners
// meeting at an interior point: the ray whose ratio has the strictly
// smaller exponent of the third corner's variable continues.
Crossing crossing_rule_check(const LatticeContext& ctx, const Line& l1, const Line& l2);

}  // namespace ahilb
