#pragma once

#include <map>
#include <string>
#include <vector>

#include "ahilb/partition.hpp"

namespace ahilb {

// A basic triangle of the regular tesselation of a regular triangle R of
// side r.  Up: the sides of R pushed in by i, j, k with i+j+k = r-1.
// Down: pushed by i, j, k > 0 with i+j+k = r+1.  The push i belongs to the
// side of R opposite R.verts[0], and verts[s] is opposite the side parallel
// to that side of R.
struct BasicTriangle {
    std::size_t parent = 0;
    bool up = true;
    Int i = 0, j = 0, k = 0;
    std::array<Vec2, 3> verts;
    std::array<Int, 3> push() const { return {i, j, k}; }
};

std::vector<BasicTriangle> tesselate(const RegularTriangle& R, std::size_t parent = 0);

// Cross-section of the fan in the junior plane.  Rays are scaled junior
// points; cones index into rays.
struct Fan {
    std::vector<Vec3> rays;
    std::vector<std::array<std::size_t, 3>> cones;
    std::vector<BasicTriangle> basic;  // same order as cones
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> edges;
};

Fan build_fan(const LatticeContext& ctx, const Partition& p);
void rebuild_edges(Fan& fan);

struct FanReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

FanReport verify_fan(const Fan& fan, const LatticeContext& ctx);

struct SurfaceClass {
    enum class Label { P2, Scroll, BlownScrollOnce, BlownScrollTwice, DP6 };
    Vec3 vertex;
    int valency = 0;
    std::vector<Vec3> star;  // neighbours in cyclic order
    std::vector<Int> b;      // u_{t-1} + u_{t+1} = b_t u_t - c_t v
    std::vector<Int> c;
    Label label = Label::P2;
    Int scroll_n = 0;
    std::string label_name() const;
};

std::vector<SurfaceClass> surface_census(const Fan& fan, const LatticeContext& ctx, const Partition& p);
Int dp6_count(const Partition& p);

}  // namespace ahilb
