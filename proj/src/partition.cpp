#include "ahilb/partition.hpp"

#include <algorithm>
#include <set>

namespace ahilb {

namespace {

std::array<Vec3, 3> verts3(const LatticeContext& ctx, const RegularTriangle& t) {
    return {ctx.point_from_plane(t.verts[0]), ctx.point_from_plane(t.verts[1]), ctx.point_from_plane(t.verts[2])};
}

// Rotate and reflect the vertex labels so that verts are in increasing
// 3D order; lines follow their opposite vertices.
void canonicalize(const LatticeContext& ctx, RegularTriangle& t) {
    auto v3 = verts3(ctx, t);
    std::array<std::size_t, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v3[a] < v3[b]; });
    RegularTriangle out = t;
    for (std::size_t k = 0; k < 3; ++k) {
        out.verts[k] = t.verts[idx[k]];
        out.lines[k] = t.lines[idx[k]];
    }
    t = out;
}

bool param_on(const Line& l, const Vec2& p, Int& t) {
    Vec2 d = p - l.origin;
    if (det2(d, l.dir) != 0) return false;
    t = l.dir.x != 0 ? d.x / l.dir.x : d.y / l.dir.y;
    return true;
}

// Validates the triangle spanned by three lines; the vertices are the
// pairwise intersections.  Returns false when it is not a regular triangle.
bool triangle_from_lines(const LatticeContext& ctx, const std::vector<Line>& lines, const std::array<Tag, 3>& tags,
                         RegularTriangle& out, std::string* why) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    std::array<const Line*, 3> l{&find_line(lines, tags[0]), &find_line(lines, tags[1]), &find_line(lines, tags[2])};
    for (std::size_t k = 0; k < 3; ++k) {
        auto p = intersect(*l[(k + 1) % 3], *l[(k + 2) % 3]);
        if (!p) return fail("lines do not meet in a lattice point");
        if (!inside_simplex(ctx, *p)) return fail("vertex outside the simplex");
        out.verts[k] = *p;
        out.lines[k] = tags[k];
    }
    std::array<Vec2, 3> sides{out.verts[2] - out.verts[1], out.verts[0] - out.verts[2], out.verts[1] - out.verts[0]};
    if (det2(sides[0], sides[1]) == 0) return fail("degenerate triangle");
    Int len = content(sides[0]);
    if (content(sides[1]) != len || content(sides[2]) != len) return fail("sides of unequal lattice length");
    std::array<Vec2, 3> pr{primitive(sides[0]), primitive(sides[1]), primitive(sides[2])};
    for (std::size_t a = 0; a < 3; ++a) {
        Int d = det2(pr[a], pr[(a + 1) % 3]);
        if (d != 1 && d != -1) return fail("side vectors do not form a regular triple");
    }
    out.side = len;
    canonicalize(ctx, out);
    return true;
}

bool interiors_disjoint(const RegularTriangle& a, const RegularTriangle& b) {
    auto separates = [](const RegularTriangle& s, const RegularTriangle& o) {
        for (std::size_t k = 0; k < 3; ++k) {
            const Vec2& p = s.verts[k];
            const Vec2& q = s.verts[(k + 1) % 3];
            const Vec2& r = s.verts[(k + 2) % 3];
            Int sg = det2(q - p, r - p) > 0 ? 1 : -1;
            bool all_out = true;
            for (const auto& v : o.verts)
                if (sg * det2(q - p, v - p) > 0) all_out = false;
            if (all_out) return true;
        }
        return false;
    };
    return separates(a, b) || separates(b, a);
}

}  // namespace

std::array<Tag, 3> RegularTriangle::key() const {
    auto k = lines;
    std::sort(k.begin(), k.end());
    return k;
}

std::string champions_kind_name(ChampionsReport::Kind k) {
    switch (k) {
        case ChampionsReport::Kind::Concurrent: return "concurrent";
        case ChampionsReport::Kind::CockedHat: return "cocked_hat";
        case ChampionsReport::Kind::LongSide: return "long_side";
    }
    return "";
}

const Line& find_line(const std::vector<Line>& lines, const Tag& t) {
    for (const auto& l : lines)
        if (l.tag == t) return l;
    violation("no line with tag " + t.name());
}

const Line& Partition::line(const Tag& t) const { return find_line(lines, t); }

bool inside_simplex(const LatticeContext& ctx, const Vec2& q) {
    Vec3 p = ctx.point_from_plane(q);
    return p[0] >= 0 && p[1] >= 0 && p[2] >= 0;
}

bool strictly_inside_simplex(const LatticeContext& ctx, const Vec2& q) {
    Vec3 p = ctx.point_from_plane(q);
    return p[0] > 0 && p[1] > 0 && p[2] > 0;
}

std::vector<Line> rays(const LatticeContext& ctx, const std::array<CornerFan, 3>& fans) {
    std::vector<Line> out;
    for (int i = 0; i < 3; ++i) {
        const auto& fan = fans[static_cast<std::size_t>(i)];
        for (int j = 1; j <= fan.k(); ++j)
            out.push_back({Tag::strength(i, j), ctx.vertex_plane(i), fan.f[static_cast<std::size_t>(j)],
                           fan.a[static_cast<std::size_t>(j - 1)], 0, std::nullopt});
    }
    for (int s = 0; s < 3; ++s) {
        Vec2 o = ctx.vertex_plane(s);
        Vec2 d = primitive(ctx.vertex_plane((s + 1) % 3) - o);
        out.push_back({Tag::junction(s), o, d, junction_c(fans, s).c, 0, std::nullopt});
    }
    return out;
}

std::optional<Vec2> intersect(const Line& a, const Line& b) {
    Int D = det2(a.dir, b.dir);
    if (D == 0) return std::nullopt;
    Int num = det2(b.origin - a.origin, b.dir);
    if (num % D != 0) return std::nullopt;
    return a.origin + (num / D) * a.dir;
}

std::variant<RegularTriangle, ConcurrencyPoint> realize_triple(const LatticeContext& ctx,
                                                               const std::vector<Line>& lines,
                                                               const std::array<Tag, 3>& triple) {
    std::array<std::optional<Vec2>, 3> p;
    for (std::size_t k = 0; k < 3; ++k)
        p[k] = intersect(find_line(lines, triple[(k + 1) % 3]), find_line(lines, triple[(k + 2) % 3]));
    for (const auto& q : p)
        require(q.has_value(), "host rays of a regular triple do not meet in lattice points");
    if (*p[0] == *p[1] && *p[1] == *p[2]) return ConcurrencyPoint{*p[0], triple};
    RegularTriangle t;
    std::string why;
    if (!triangle_from_lines(ctx, lines, triple, t, &why))
        violation("realized triple " + triple[0].name() + "," + triple[1].name() + "," + triple[2].name() +
                  " is not a regular triangle: " + why);
    return t;
}

std::vector<RegularTriangle> enumerate_triangles(const LatticeContext& ctx, const std::vector<Line>& lines) {
    std::vector<RegularTriangle> out;
    std::set<std::array<Vec2, 3>> seen;
    for (std::size_t a = 0; a < lines.size(); ++a)
        for (std::size_t b = a + 1; b < lines.size(); ++b) {
            if (!intersect(lines[a], lines[b])) continue;
            for (std::size_t c = b + 1; c < lines.size(); ++c) {
                RegularTriangle t;
                if (!triangle_from_lines(ctx, lines, {lines[a].tag, lines[b].tag, lines[c].tag}, t, nullptr))
                    continue;
                if (seen.insert(t.verts).second) out.push_back(t);
            }
        }
    std::sort(out.begin(), out.end(), [&](const RegularTriangle& x, const RegularTriangle& y) {
        return verts3(ctx, x) < verts3(ctx, y);
    });
    return out;
}

namespace {

std::string describe(const std::set<std::array<Tag, 3>>& s) {
    std::string out;
    for (const auto& k : s) out += "{" + k[0].name() + "," + k[1].name() + "," + k[2].name() + "} ";
    return out;
}

// Each side eats regular triangles starting from its own junction, using
// only entries of the two blades at its ends and keeping the rest of the
// word intact.  The triangle goes to the side that reaches it in fewer
// steps (lower side index on a tie).  Only a long side produces overlaps.
std::vector<int> catchment_areas(const Partition& p, const CyclicWord& word) {
    std::vector<int> owner(p.triangles.size(), -1);
    if (word.values() == std::vector<Int>{1, 1, 1}) return owner;
    std::map<std::array<Tag, 3>, std::size_t> by_key;
    for (std::size_t i = 0; i < p.triangles.size(); ++i) by_key[p.triangles[i].key()] = i;
    std::map<std::size_t, std::pair<std::size_t, int>> best;  // triangle -> (step, side)
    auto claim = [&](std::array<Tag, 3> k, std::size_t step, int side) {
        std::sort(k.begin(), k.end());
        auto it = by_key.find(k);
        if (it == by_key.end()) return;  // the concurrency point
        auto cur = best.find(it->second);
        if (cur == best.end() || std::make_pair(step, side) < cur->second) best[it->second] = {step, side};
    };
    for (int side = 0; side < 3; ++side) {
        auto allowed = [&](const Tag& t) {
            if (t.is_junction()) return t.index == side;
            return t.index == side || t.index == (side + 1) % 3;
        };
        std::vector<std::pair<Int, Tag>> ent;
        for (const auto& e : word.entries) ent.push_back({e.value, e.tag});
        std::size_t step = 0;
        while (ent.size() > 3) {
            std::size_t t = ent.size();
            for (std::size_t i = 0; i < ent.size(); ++i)
                if (ent[i].first == 1 && allowed(ent[i].second)) {
                    t = i;
                    break;
                }
            if (t == ent.size()) break;
            std::size_t L = ent.size(), l = (t + L - 1) % L, r = (t + 1) % L;
            claim({ent[l].second, ent[t].second, ent[r].second}, step++, side);
            ent[l].first -= 1;
            ent[r].first -= 1;
            ent.erase(ent.begin() + static_cast<std::ptrdiff_t>(t));
        }
        if (ent.size() == 3) {
            std::array<Tag, 3> k{ent[0].second, ent[1].second, ent[2].second};
            if (!is_type2(k) && (allowed(k[0]) || allowed(k[1]) || allowed(k[2]))) claim(k, step, side);
        }
    }
    for (const auto& [tri, sv] : best) owner[tri] = sv.second;
    return owner;
}

}  // namespace

ChampionsReport champions(const Partition& p) { return p.champions; }

Partition build_partition(const LatticeContext& ctx, const std::array<CornerFan, 3>& fans, const CyclicWord& word,
                          const MMPTrace& trace) {
    Partition part;
    part.lines = rays(ctx, fans);
    part.triangles = enumerate_triangles(ctx, part.lines);

    for (int s = 0; s < 3; ++s) {
        Junction j = junction_c(fans, s);
        if (!j.is_long()) continue;
        if (part.long_side) violation("more than one long side");
        part.long_side = j;
    }

    // Differential test against the MMP realization.
    std::set<std::array<Tag, 3>> from_mmp, from_enum;
    std::vector<std::array<Tag, 3>> type2;
    auto triples = triple_set(trace);
    for (const auto& k : triples) {
        auto r = realize_triple(ctx, part.lines, k);
        if (auto* c = std::get_if<ConcurrencyPoint>(&r)) {
            if (part.concurrency) violation("more than one concurrency point");
            part.concurrency = *c;
        } else {
            from_mmp.insert(std::get<RegularTriangle>(r).key());
        }
        if (is_type2(k)) type2.push_back(k);
    }
    for (const auto& t : part.triangles) from_enum.insert(t.key());
    if (from_mmp != from_enum)
        violation("partition mismatch: enumeration gives " + describe(from_enum) + "but MMP realization gives " +
                  describe(from_mmp));

    Int area = 0;
    for (const auto& t : part.triangles) area = add_checked(area, mul_checked(t.side, t.side));
    require(area == ctx.order, "regular triangles do not have total area N");
    // Pairwise check is quadratic; the fan tiling check covers large cases.
    if (part.triangles.size() <= 4000)
        for (std::size_t a = 0; a < part.triangles.size(); ++a)
            for (std::size_t b = a + 1; b < part.triangles.size(); ++b)
                require(interiors_disjoint(part.triangles[a], part.triangles[b]), "regular triangles overlap");

    if (part.concurrency) {
        const auto& c = *part.concurrency;
        int around = 0;
        for (const auto& t : part.triangles)
            for (const auto& v : t.verts)
                if (v == c.point) ++around;
        require(around >= 3, "concurrency point is not a meeting point of the enumerated partition");
        for (const auto& tag : c.lines) {
            Int s = 0;
            require(param_on(part.line(tag), c.point, s), "concurrency point off a champion line");
        }
    }

    // Champions.
    if (type2.size() > 1) violation("more than one Type 2 regular triple");
    ChampionsReport& ch = part.champions;
    if (part.long_side) {
        require(type2.empty(), "Type 2 triple in the presence of a long side");
        ch.kind = ChampionsReport::Kind::LongSide;
        ch.long_side = part.long_side->side;
        ch.c = part.long_side->c;
    } else {
        std::array<Tag, 3> champ;
        if (type2.empty()) {
            // Only when the simplex itself is regular: the word is already [1,1,1].
            require(word.values() == std::vector<Int>{1, 1, 1}, "no Type 2 triple although there is no long side");
            champ = trace.terminal.key();
        } else {
            champ = type2.front();
        }
        ch.triple = champ;
        if (part.concurrency && part.concurrency->lines == champ) {
            ch.kind = ChampionsReport::Kind::Concurrent;
            ch.point = part.concurrency->point;
        } else {
            ch.kind = ChampionsReport::Kind::CockedHat;
            for (std::size_t i = 0; i < part.triangles.size(); ++i)
                if (part.triangles[i].key() == champ) ch.triangle = i;
            require(ch.triangle.has_value(), "champions triangle missing from the partition");
        }
    }
    if (part.concurrency) {
        auto k = part.concurrency->lines;
        std::sort(k.begin(), k.end());
        require(ch.triple && *ch.triple == k, "concurrency point does not come from the champions");
        part.concurrency->lines = k;
    }

    part.catchment = catchment_areas(part, word);
    for (std::size_t i = 0; i < part.triangles.size(); ++i) {
        bool champion = ch.triangle && *ch.triangle == i;
        if (champion) {
            require(part.catchment[i] == -1, "champions triangle assigned to a side");
            continue;
        }
        if (word.values() == std::vector<Int>{1, 1, 1}) continue;
        int s = part.catchment[i];
        require(s >= 0, "triangle outside every catchment area");
        bool touches = false;
        for (const auto& tag : part.triangles[i].lines)
            touches |= tag.is_junction() ? tag.index == s : (tag.index == s || tag.index == (s + 1) % 3);
        require(touches, "catchment triangle does not reach its side");
    }

    // Extent of each interior ray: the partition edges along it, contiguous
    // from the corner.
    for (auto& l : part.lines) {
        if (l.tag.is_junction()) continue;
        std::vector<std::pair<Int, Int>> segs;
        for (const auto& t : part.triangles)
            for (std::size_t k = 0; k < 3; ++k) {
                if (!(t.lines[k] == l.tag)) continue;
                Int a = 0, b = 0;
                require(param_on(l, t.verts[(k + 1) % 3], a) && param_on(l, t.verts[(k + 2) % 3], b),
                        "triangle side off its line");
                segs.push_back({std::min(a, b), std::max(a, b)});
            }
        std::sort(segs.begin(), segs.end());
        Int end = 0;
        for (const auto& [a, b] : segs) {
            require(a <= end, "ray " + l.tag.name() + " is not covered contiguously by the partition");
            end = std::max(end, b);
        }
        require(end > 0, "ray " + l.tag.name() + " carries no partition edge");
        l.extent = end;
        Vec2 stop = l.origin + end * l.dir;
        if (strictly_inside_simplex(ctx, stop)) l.defeat_point = stop;
    }
    return part;
}

KnockoutReport knockout(const LatticeContext& ctx, const Partition& p) {
    KnockoutReport rep;
    std::map<Vec2, std::vector<std::pair<std::size_t, Int>>> at;
    for (std::size_t i = 0; i < p.lines.size(); ++i) {
        const Line& l = p.lines[i];
        if (l.tag.is_junction()) continue;
        for (Int s = 1; s <= l.extent; ++s) {
            Vec2 q = l.origin + s * l.dir;
            if (strictly_inside_simplex(ctx, q)) at[q].push_back({i, s});
        }
    }
    // Strength on arrival: initial strength less one per rival met earlier.
    std::map<std::size_t, std::vector<std::pair<Int, Int>>> met;  // line -> (param, rivals)
    std::vector<std::pair<Vec2, std::vector<std::pair<std::size_t, Int>>>> events;
    for (const auto& [q, v] : at) {
        std::set<int> corners;
        for (const auto& [li, s] : v) corners.insert(p.lines[li].corner());
        if (corners.size() < 2) continue;
        events.push_back({q, v});
        for (const auto& [li, s] : v) met[li].push_back({s, static_cast<Int>(v.size()) - 1});
    }
    for (const auto& [q, v] : events) {
        KnockoutEvent ev;
        ev.point = q;
        for (const auto& [li, s] : v) {
            Int st = p.lines[li].strength;
            for (const auto& [s2, k] : met[li])
                if (s2 < s) st -= k;
            ev.lines.push_back(li);
            ev.params.push_back(s);
            ev.strengths.push_back(st);
            if (p.lines[li].extent > s) ev.continuing.push_back(li);
        }
        Int mx = *std::max_element(ev.strengths.begin(), ev.strengths.end());
        std::vector<std::size_t> expect;
        for (std::size_t k = 0; k < ev.lines.size(); ++k)
            if (ev.strengths[k] == mx) expect.push_back(ev.lines[k]);
        if (expect.size() > 1) expect.clear();
        if (expect != ev.continuing) {
            std::string names;
            for (auto li : ev.lines) names += p.lines[li].tag.name() + " ";
            rep.failures.push_back("knock-out rule fails at " + to_string(ctx.point_from_plane(q)) + " among " + names);
        }
        rep.events.push_back(std::move(ev));
    }
    return rep;
}

std::optional<std::pair<Int, Int>> is_semiregular(const Vec2& A, const Vec2& B, const Vec2& C) {
    if (det2(B - A, C - A) == 0) throw InvalidInput("degenerate triangle");
    Int ab = content(B - A), ca = content(A - C), bc = content(C - B);
    if (ab != ca || bc % ab != 0) return std::nullopt;
    Int r = ab, c = bc / ab;
    Vec2 v1 = primitive(C - B), v2 = primitive(A - C), v3 = primitive(B - A);
    Int d = det2(v1, v2);
    if (d != 1 && d != -1) return std::nullopt;
    if (!(c * v1 + v2 + v3).is_zero()) return std::nullopt;
    return std::make_pair(r, c);
}

std::optional<std::pair<Int, Int>> is_semiregular(const LatticeContext& ctx, const std::array<Vec3, 3>& vertices,
                                                  int preferred) {
    auto at = [&](int k) { return ctx.point_to_plane(vertices[static_cast<std::size_t>((preferred + k) % 3)]); };
    return is_semiregular(at(0), at(1), at(2));
}

}  // namespace ahilb
