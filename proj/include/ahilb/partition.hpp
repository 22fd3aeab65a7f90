#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "ahilb/mmp.hpp"

namespace ahilb {

// A ray L_{ij} out of e_i along f_{i,j}, or a side of the simplex (tag is a
// junction, origin e_side, pointing to e_{side+1}).  Plane coordinates.
struct Line {
    Tag tag;
    Vec2 origin;
    Vec2 dir;
    Int strength = 0;
    Int extent = 0;                    // lattice steps covered by the partition
    std::optional<Vec2> defeat_point;  // where the ray ends inside the simplex
    int corner() const { return tag.index; }
};

// verts[k] is opposite the side lying on lines[k].
struct RegularTriangle {
    std::array<Vec2, 3> verts;
    std::array<Tag, 3> lines;
    Int side = 0;
    std::array<Tag, 3> key() const;
};

struct ConcurrencyPoint {
    Vec2 point;
    std::array<Tag, 3> lines;
};

struct ChampionsReport {
    enum class Kind { Concurrent, CockedHat, LongSide };
    Kind kind = Kind::CockedHat;
    std::optional<Vec2> point;             // Concurrent
    std::optional<std::size_t> triangle;   // CockedHat: index into Partition::triangles
    std::optional<std::array<Tag, 3>> triple;
    int long_side = -1;
    Int c = 1;
};

std::string champions_kind_name(ChampionsReport::Kind k);

struct Partition {
    std::vector<Line> lines;
    std::vector<RegularTriangle> triangles;  // canonical order
    std::optional<ConcurrencyPoint> concurrency;
    std::optional<Junction> long_side;
    ChampionsReport champions;
    std::vector<int> catchment;  // per triangle: side 0..2, or -1 for the champions region

    const Line& line(const Tag& t) const;
};

std::vector<Line> rays(const LatticeContext& ctx, const std::array<CornerFan, 3>& fans);

std::optional<Vec2> intersect(const Line& a, const Line& b);
const Line& find_line(const std::vector<Line>& lines, const Tag& t);

std::variant<RegularTriangle, ConcurrencyPoint> realize_triple(const LatticeContext& ctx,
                                                               const std::vector<Line>& lines,
                                                               const std::array<Tag, 3>& triple);

std::vector<RegularTriangle> enumerate_triangles(const LatticeContext& ctx, const std::vector<Line>& lines);

Partition build_partition(const LatticeContext& ctx, const std::array<CornerFan, 3>& fans,
                          const CyclicWord& word, const MMPTrace& trace);

ChampionsReport champions(const Partition& p);

// Triangle ABC with preferred vertex A; (r, c) when it is lattice equivalent
// to {(r,0), (0,0), (0,cr)} with A at (r,0).  Standard Z^2 coordinates.
std::optional<std::pair<Int, Int>> is_semiregular(const Vec2& A, const Vec2& B, const Vec2& C);
std::optional<std::pair<Int, Int>> is_semiregular(const LatticeContext& ctx, const std::array<Vec3, 3>& vertices,
                                                  int preferred);

bool strictly_inside_simplex(const LatticeContext& ctx, const Vec2& q);
bool inside_simplex(const LatticeContext& ctx, const Vec2& q);

// Knock-out data derived from a built partition: every interior lattice
// point where rays from two or more corners meet.
struct KnockoutEvent {
    Vec2 point;
    std::vector<std::size_t> lines;  // indices into Partition::lines
    std::vector<Int> params;         // lattice step along each line
    std::vector<Int> strengths;      // remaining strength on arrival
    std::vector<std::size_t> continuing;
};

struct KnockoutReport {
    std::vector<KnockoutEvent> events;
    std::vector<std::string> failures;
};

KnockoutReport knockout(const LatticeContext& ctx, const Partition& p);

}  // namespace ahilb
