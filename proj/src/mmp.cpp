#include "ahilb/mmp.hpp"

#include <algorithm>
#include <random>

namespace ahilb {

std::array<Tag, 3> RegularTriple::key() const {
    auto k = prov;
    std::sort(k.begin(), k.end());
    return k;
}

bool is_type2(const std::array<Tag, 3>& prov) {
    bool seen[3] = {false, false, false};
    for (const auto& t : prov) {
        if (t.is_junction() || seen[t.index]) return false;
        seen[t.index] = true;
    }
    return true;
}

void check_triple(const RegularTriple& t) {
    require((t.v[0] + t.v[2]) == t.v[1], "regular triple sign relation fails");
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            Int d = det2(t.v[static_cast<std::size_t>(a)], t.v[static_cast<std::size_t>(b)]);
            require(d == 1 || d == -1, "regular triple vectors do not pairwise base Z^2");
        }
}

std::pair<CyclicWord, RegularTriple> contract(const CyclicWord& word, std::size_t pos) {
    const std::size_t L = word.entries.size();
    require(L >= 4, "contraction needs a cyclic word of length at least 4");
    require(pos < L && word.entries[pos].value == 1, "contraction position does not hold a 1");
    std::size_t l = (pos + L - 1) % L, r = (pos + 1) % L;
    CyclicWord out = word;
    // Wrapping past the end of the word negates the vector (half turn).
    Vec2 lv = word.entries[l].v, rv = word.entries[r].v;
    if (pos == 0) lv = -lv;
    if (pos == L - 1) rv = -rv;
    RegularTriple t;
    t.v = {lv, word.entries[pos].v, rv};
    t.prov = {word.entries[l].tag, word.entries[pos].tag, word.entries[r].tag};
    t.type2 = is_type2(t.prov);
    check_triple(t);
    out.entries[l].value -= 1;
    out.entries[r].value -= 1;
    require(out.entries[l].value > 0 && out.entries[r].value > 0, "contraction produced a nonpositive entry");
    out.entries.erase(out.entries.begin() + static_cast<std::ptrdiff_t>(pos));
    return {std::move(out), t};
}

MMPTrace run_mmp(const CyclicWord& word, const Strategy& strategy) {
    MMPTrace trace;
    trace.strength_sum = word.strength_sum();
    require(trace.strength_sum % 3 == 0, "strength sum of the cyclic word is not divisible by 3");
    std::mt19937_64 rng(strategy.seed);
    std::size_t explicit_next = 0;
    CyclicWord cur = word;
    while (cur.entries.size() > 3) {
        std::vector<std::size_t> ones;
        for (std::size_t t = 0; t < cur.entries.size(); ++t)
            if (cur.entries[t].value == 1) ones.push_back(t);
        if (ones.empty()) violation("MMP is stuck: no entry equal to 1");
        std::size_t pos = ones.front();
        if (strategy.kind == Strategy::Kind::Random) {
            pos = ones[static_cast<std::size_t>(rng() % ones.size())];
        } else if (strategy.kind == Strategy::Kind::Explicit) {
            if (explicit_next >= strategy.positions.size()) throw InvalidInput("explicit MMP strategy ran out of positions");
            pos = strategy.positions[explicit_next++];
            if (pos >= cur.entries.size() || cur.entries[pos].value != 1)
                throw InvalidInput("explicit MMP position does not hold a 1");
        }
        MMPStep step;
        step.word_before = cur.values();
        step.pos = pos;
        auto [next, triple] = contract(cur, pos);
        step.triple = triple;
        trace.steps.push_back(std::move(step));
        cur = std::move(next);
    }
    require(cur.values() == std::vector<Int>{1, 1, 1}, "MMP did not terminate at [1,1,1]");
    RegularTriple t;
    t.v = {cur.entries[0].v, cur.entries[1].v, cur.entries[2].v};
    t.prov = {cur.entries[0].tag, cur.entries[1].tag, cur.entries[2].tag};
    t.type2 = is_type2(t.prov);
    check_triple(t);
    trace.terminal = t;
    require(static_cast<Int>(trace.steps.size()) * 3 + 3 == trace.strength_sum, "MMP step count violates the count law");
    return trace;
}

std::set<std::array<Tag, 3>> triple_set(const MMPTrace& trace) {
    std::set<std::array<Tag, 3>> s;
    for (const auto& st : trace.steps)
        if (!s.insert(st.triple.key()).second) violation("regular triple emitted twice in one MMP");
    if (!s.insert(trace.terminal.key()).second) violation("terminal triple repeats an earlier one");
    return s;
}

std::vector<Int> linear_values(const std::vector<Vec2>& chain) {
    require(chain.size() >= 3, "linear chain needs two ends and an interior");
    std::vector<Int> vals;
    for (std::size_t t = 1; t + 1 < chain.size(); ++t) {
        Vec2 s = chain[t - 1] + chain[t + 1];
        const Vec2& v = chain[t];
        Int k = v.x != 0 ? s.x / v.x : s.y / v.y;
        require(k * v.x == s.x && k * v.y == s.y, "linear chain relation fails");
        vals.push_back(k);
    }
    return vals;
}

LinearTrace run_linear_mmp(const std::vector<Vec2>& chain) {
    LinearTrace out;
    std::vector<Vec2> cur = chain;
    std::vector<Int> vals = linear_values(cur);
    out.words.push_back(vals);
    while (vals.size() > 2) {
        auto it = std::find(vals.begin(), vals.end(), Int{1});
        if (it == vals.end()) violation("linear MMP is stuck");
        std::size_t i = static_cast<std::size_t>(it - vals.begin());
        std::size_t c = i + 1;  // index into cur
        require(cur[c - 1] + cur[c + 1] == cur[c], "linear contraction relation fails");
        out.triples.push_back({cur[c - 1], cur[c], cur[c + 1]});
        if (i > 0) vals[i - 1] -= 1;
        if (i + 1 < vals.size()) vals[i + 1] -= 1;
        vals.erase(vals.begin() + static_cast<std::ptrdiff_t>(i));
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(c));
        require(vals == linear_values(cur), "linear contraction disagrees with the vectors");
        out.words.push_back(vals);
    }
    return out;
}

}  // namespace ahilb
