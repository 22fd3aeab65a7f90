#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ahilb/corners.hpp"

namespace ahilb {

// v[0] + v[2] = v[1]; any two of the vectors base Z^2.
struct RegularTriple {
    std::array<Vec2, 3> v;
    std::array<Tag, 3> prov;
    bool type2 = false;

    std::array<Tag, 3> key() const;  // sorted provenance
};

bool is_type2(const std::array<Tag, 3>& prov);
void check_triple(const RegularTriple& t);

struct MMPStep {
    std::vector<Int> word_before;
    std::size_t pos = 0;
    RegularTriple triple;
};

struct MMPTrace {
    std::vector<MMPStep> steps;
    RegularTriple terminal;
    Int strength_sum = 0;
};

std::pair<CyclicWord, RegularTriple> contract(const CyclicWord& word, std::size_t pos);

struct Strategy {
    enum class Kind { Leftmost, Random, Explicit };
    Kind kind = Kind::Leftmost;
    std::uint64_t seed = 0;
    std::vector<std::size_t> positions;

    static Strategy leftmost() { return {}; }
    static Strategy random(std::uint64_t seed) { return {Kind::Random, seed, {}}; }
    static Strategy explicit_positions(std::vector<std::size_t> p) { return {Kind::Explicit, 0, std::move(p)}; }
};

MMPTrace run_mmp(const CyclicWord& word, const Strategy& strategy = Strategy::leftmost());

// Triples of the trace (steps and terminal) keyed by provenance.
std::set<std::array<Tag, 3>> triple_set(const MMPTrace& trace);

// Linear mode: a chain of vectors between two fixed end vectors, so that
// ends[0] = v.front() and ends[1] = v.back() are never contracted.
struct LinearTrace {
    std::vector<std::vector<Int>> words;  // the interior words, first to last
    std::vector<std::array<Vec2, 3>> triples;
};

std::vector<Int> linear_values(const std::vector<Vec2>& chain);
LinearTrace run_linear_mmp(const std::vector<Vec2>& chain);

}  // namespace ahilb
