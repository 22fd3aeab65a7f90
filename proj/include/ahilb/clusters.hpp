#pragma once

#include <string>
#include <vector>

#include "ahilb/monomials.hpp"

namespace ahilb {

struct ClusterEquation {
    std::string name;  // xi, eta, zeta, lambda, mu, nu, pi
    Vec3 lhs, rhs;     // exponents of the two monomial sides, rhs without the ratio
    Vec3 ratio;        // lhs - rhs, an invariant monomial
};

// The seven equations of the affine chart over a basic triangle, in real
// coordinates.  top[t] is the exponent with x_t^{top+1} = xi_t * ..., and
// E[t][u] (t != u) the exponent of x_u on the right of that equation.
struct ClusterSystem {
    bool up = true;
    std::size_t cone = 0;  // index into Fan::cones
    std::array<Int, 3> top{0, 0, 0};
    std::array<std::array<Int, 3>, 3> E{};

    Vec3 xi(int t) const;
    Vec3 lambda(int t) const;
    std::vector<ClusterEquation> equations() const;
    std::array<Vec3, 3> basis() const;  // xi_t for up, lambda_t for down
    std::string text() const;
};

ClusterSystem cluster_system(const DualBasis& db);
ClusterSystem cluster_system(const LatticeContext& ctx, const BasicTriangle& T, const TriangleRatios& tr);

// The table form: the system over the basic triangle with pushes (i,j,k)
// of a regular triangle of side r whose normal form is (A,B,C), for Case a
// or b, laid out in the normal coordinates given by perm.
struct ClusterParameters {
    bool up = true;
    bool case_a = true;
    std::array<int, 3> perm{0, 1, 2};
    Int A = 0, B = 0, C = 0;
    Int i = 0, j = 0, k = 0;
    Int r = 1;
    friend bool operator==(const ClusterParameters&, const ClusterParameters&) = default;
};

ClusterSystem cluster_from_parameters(const ClusterParameters& p);
ClusterParameters parameters_of(const TriangleRatios& tr, const BasicTriangle& T);

// Every parameter set that reproduces the system, Case a first.
std::vector<ClusterParameters> classify_all(const ClusterSystem& sys);
ClusterParameters classify_cluster(const ClusterSystem& sys);

struct ClusterReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

ClusterReport verify_cluster(const LatticeContext& ctx, const ClusterSystem& sys);

// Monomials not divisible by a leading term of the chart; a basis of
// k[x,y,z]/(equations) as a representation of A.
std::vector<Vec3> tripod_basis(const ClusterSystem& sys);

}  // namespace ahilb
