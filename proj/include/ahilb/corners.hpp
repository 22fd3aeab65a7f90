#pragma once

#include <string>
#include <vector>

#include "ahilb/lattice.hpp"

namespace ahilb {

// Sides are numbered by their first corner: 0 = e1e2, 1 = e2e3, 2 = e3e1.
std::string side_name(int side);

// Identifies a line of the partition and the word entry that carries it.
struct Tag {
    enum class Kind { Junction, Strength };
    Kind kind = Kind::Junction;
    int index = 0;  // side for a junction, corner (0-based) for a strength
    int j = 0;      // ray number 1..k for a strength, 0 for a junction

    static Tag junction(int side) { return {Kind::Junction, side, 0}; }
    static Tag strength(int corner, int j) { return {Kind::Strength, corner, j}; }
    bool is_junction() const { return kind == Kind::Junction; }
    std::string name() const;
    friend auto operator<=>(const Tag&, const Tag&) = default;
};

// Newton polygon of the corner cone at e_i, in plane coordinates.
// f[0] points along [e_i, e_{i-1}], f[k+1] along [e_i, e_{i+1}];
// f[j-1] + f[j+1] = a[j-1] * f[j] for j = 1..k.
struct CornerFan {
    int corner = 0;
    std::vector<Vec2> f;
    std::vector<Int> a;
    Int r = 1;      // index of the corner cone
    Int alpha = 0;  // the cone is 1/r(1,alpha) in the basis f[0], w
    int k() const { return static_cast<int>(a.size()); }
};

// r/alpha = [a1, ..., ak] with every ai >= 2.
std::vector<Int> hj_expand(Int r, Int alpha);

CornerFan newton_polygon(const LatticeContext& ctx, int corner);
std::array<CornerFan, 3> corner_fans(const LatticeContext& ctx);

struct Junction {
    int side = 0;
    Int c = 1;
    Vec2 vector;  // primitive, from e_side towards e_{side+1}
    bool is_long() const { return c >= 2; }
};

Junction junction_c(const std::array<CornerFan, 3>& fans, int side);

struct WordEntry {
    Int value = 0;
    Tag tag;
    Vec2 v;
};

struct CyclicWord {
    std::vector<WordEntry> entries;
    std::vector<Int> values() const;
    Int strength_sum() const;
};

// Anticlockwise: junction(e3e1), strengths at e1, junction(e1e2), strengths at
// e2, junction(e2e3), strengths at e3.  Vectors of the e2 blade are negated
// so that consecutive vectors turn the same way; closing the cycle is a half
// turn.
CyclicWord cyclic_word(const std::array<CornerFan, 3>& fans);

// Product of [[0,1],[-1,value]] around the cycle.
std::array<std::array<Int, 2>, 2> word_matrix_product(const std::vector<Int>& values);

}  // namespace ahilb
