#include "ahilb/pipeline.hpp"

#include <algorithm>

namespace ahilb {

Analysis analyze(const GroupSpec& spec, Int order_cap) {
    Analysis a;
    a.ctx = lattice_context(spec, order_cap);
    a.fans = corner_fans(a.ctx);
    a.word = cyclic_word(a.fans);
    a.trace = run_mmp(a.word);
    a.partition = build_partition(a.ctx, a.fans, a.word, a.trace);
    a.fan = build_fan(a.ctx, a.partition);
    FanReport fr = verify_fan(a.fan, a.ctx);
    if (!fr.ok()) violation(fr.failures.front());
    for (const auto& t : a.partition.triangles) a.ratios.push_back(triangle_ratios(a.ctx, t));
    for (std::size_t c = 0; c < a.fan.cones.size(); ++c) {
        const BasicTriangle& T = a.fan.basic[c];
        ClusterSystem sys = cluster_system(a.ctx, T, a.ratios[T.parent]);
        sys.cone = c;
        a.clusters.push_back(sys);
    }
    a.census = surface_census(a.fan, a.ctx, a.partition);
    a.dp6 = dp6_count(a.partition);
    return a;
}

Analysis analyze(std::string_view spec_text, Int order_cap) { return analyze(parse_group_spec(spec_text), order_cap); }

bool SuiteReport::ok() const {
    for (const auto& f : families)
        if (!f.failures.empty()) return false;
    return true;
}

FamilyResult& SuiteReport::family(const std::string& name) {
    for (auto& f : families)
        if (f.name == name) return f;
    families.push_back({name, 0, {}});
    return families.back();
}

namespace {

// Runs one check, turning exceptions into failures.
template <class F>
void check(SuiteReport& rep, const std::string& fam, const std::string& group, F&& f) {
    FamilyResult& r = rep.family(fam);
    ++r.checks;
    try {
        std::string why = f();
        if (!why.empty()) r.failures.push_back(group + ": " + why);
    } catch (const std::exception& e) {
        r.failures.push_back(group + ": " + e.what());
    }
}

}  // namespace

void run_invariant_suite(const Analysis& a, SuiteReport& rep, const SuiteOptions& opt) {
    const auto& ctx = a.ctx;
    const auto& part = a.partition;
    const std::string g = ctx.spec.canonical_text();

    check(rep, "area", g, [&]() -> std::string {
        Int area = 0;
        for (const auto& t : part.triangles) area += t.side * t.side;
        if (area != ctx.order) return "total area " + std::to_string(area);
        if (static_cast<Int>(a.fan.cones.size()) != ctx.order)
            return std::to_string(a.fan.cones.size()) + " cones";
        FanReport fr = verify_fan(a.fan, ctx);
        return fr.ok() ? "" : fr.failures.front();
    });

    check(rep, "partition differential", g, [&]() -> std::string {
        std::set<std::array<Tag, 3>> from_mmp, from_enum;
        for (const auto& k : triple_set(a.trace)) {
            auto r = realize_triple(ctx, part.lines, k);
            if (auto* t = std::get_if<RegularTriangle>(&r)) from_mmp.insert(t->key());
        }
        for (const auto& t : enumerate_triangles(ctx, part.lines)) from_enum.insert(t.key());
        return from_mmp == from_enum ? "" : "enumeration and MMP realization differ";
    });

    check(rep, "mmp order independence", g, [&]() -> std::string {
        auto base = triple_set(a.trace);
        std::mt19937_64 rng(opt.seed ^ static_cast<std::uint64_t>(ctx.n * 7919 + ctx.order));
        for (std::size_t i = 0; i < opt.mmp_orders; ++i) {
            auto t = run_mmp(a.word, Strategy::random(rng()));
            if (triple_set(t) != base) return "a random contraction order gives other triples";
        }
        return "";
    });

    check(rep, "word identities", g, [&]() -> std::string {
        auto m = word_matrix_product(a.word.values());
        if (m != std::array<std::array<Int, 2>, 2>{{{-1, 0}, {0, -1}}}) return "matrix product is not -I";
        Int S = 0;
        for (Int v : a.word.values()) S += v;
        if (3 * static_cast<Int>(a.trace.steps.size()) + 3 != S) return "contraction count law fails";
        return "";
    });

    check(rep, "long sides", g, [&]() -> std::string {
        int longs = 0;
        for (int s = 0; s < 3; ++s) longs += junction_c(a.fans, s).is_long() ? 1 : 0;
        if (longs > 1) return std::to_string(longs) + " long sides";
        // A long side has an empty catchment area.
        if (part.long_side)
            for (int owner : part.catchment)
                if (owner == part.long_side->side) return "triangle in the catchment of the long side";
        return "";
    });

    check(rep, "triangle ratios", g, [&]() -> std::string {
        for (std::size_t i = 0; i < part.triangles.size(); ++i) {
            TriangleRatios tr = triangle_ratios(ctx, part.triangles[i]);
            for (const auto& m : tr.side_ratio)
                if (!is_primitive_in_m(ctx, m)) return "side ratio " + to_string(m) + " is not primitive in M";
            bool ok = tr.case_a ? (tr.d - tr.a == tr.r && tr.e - tr.b - tr.c == tr.r && tr.f == tr.r)
                                : (tr.d - tr.a == tr.r && tr.e - tr.b == tr.r && tr.f - tr.c == tr.r);
            if (!ok || tr.r != part.triangles[i].side) return "normal form equalities fail";
        }
        return "";
    });

    check(rep, "dual bases", g, [&]() -> std::string {
        for (std::size_t c = 0; c < a.fan.cones.size(); ++c) {
            const auto& T = a.fan.basic[c];
            DualBasis db = dual_basis(ctx, T, a.ratios[T.parent]);
            for (int s = 0; s < 3; ++s)
                for (int t = 0; t < 3; ++t) {
                    Int v = dot(db.m[s], ctx.point_from_plane(T.verts[t]));
                    if (v != (s == t ? ctx.n : 0)) return "pairing is not the identity on cone " + std::to_string(c);
                }
            if (db.m[0] + db.m[1] + db.m[2] != Vec3{{1, 1, 1}}) return "product is not xyz";
        }
        return "";
    });

    check(rep, "cluster systems", g, [&]() -> std::string {
        for (const auto& sys : a.clusters) {
            ClusterReport cr = verify_cluster(ctx, sys);
            if (!cr.ok()) return "cone " + std::to_string(sys.cone) + ": " + cr.failures.front();
        }
        return "";
    });

    check(rep, "classification round trip", g, [&]() -> std::string {
        for (const auto& sys : a.clusters) {
            ClusterSystem back = cluster_from_parameters(classify_cluster(sys));
            if (back.top != sys.top || back.E != sys.E || back.up != sys.up)
                return "cone " + std::to_string(sys.cone) + " does not round-trip";
            const auto& T = a.fan.basic[sys.cone];
            auto truth = parameters_of(a.ratios[T.parent], T);
            auto all = classify_all(sys);
            if (std::find(all.begin(), all.end(), truth) == all.end())
                return "cone " + std::to_string(sys.cone) + ": its own triangle data is not among the readings";
        }
        return "";
    });

    check(rep, "surface census", g, [&]() -> std::string {
        Int dp6 = 0;
        for (const auto& s : a.census) {
            if (s.valency < 3 || s.valency > 6) return "valency " + std::to_string(s.valency);
            if (s.label == SurfaceClass::Label::DP6) ++dp6;
        }
        if (dp6 != a.dp6) return "census has " + std::to_string(dp6) + " dP6 vertices, count is " + std::to_string(a.dp6);
        return "";
    });

    check(rep, "knock-out", g, [&]() -> std::string {
        KnockoutReport kr = knockout(ctx, part);
        return kr.failures.empty() ? "" : kr.failures.front();
    });

    check(rep, "exponent knock-out", g, [&]() -> std::string {
        KnockoutReport kr = knockout(ctx, part);
        for (const auto& ev : kr.events) {
            if (ev.lines.size() != 2) continue;
            const Line& l1 = part.lines[ev.lines[0]];
            const Line& l2 = part.lines[ev.lines[1]];
            Crossing c = crossing_rule_check(ctx, l1, l2);
            std::vector<std::size_t> expect;
            if (c == Crossing::First) expect.push_back(ev.lines[0]);
            if (c == Crossing::Second) expect.push_back(ev.lines[1]);
            if (expect != ev.continuing)
                return "exponent rule disagrees at " + to_string(ctx.point_from_plane(ev.point)) + " between " +
                       l1.tag.name() + " and " + l2.tag.name();
        }
        return "";
    });

    if (part.long_side) {
        const auto& j = *part.long_side;
        int on_side = 0;
        for (int owner : part.catchment) on_side += owner == j.side ? 1 : 0;
        std::string note = "long side " + side_name(j.side) + " c=" + std::to_string(j.c) + "; ";
        note += on_side == 0 ? "no triangles on long side" : std::to_string(on_side) + " triangles on long side";
        rep.notes.push_back(g + ": " + note);
    }
}

SuiteReport run_invariant_suite(const Analysis& a, const SuiteOptions& opt) {
    SuiteReport rep;
    run_invariant_suite(a, rep, opt);
    return rep;
}

void verify_group(const GroupSpec& spec, SuiteReport& report, const SuiteOptions& opt) {
    Analysis a;
    try {
        a = analyze(spec);
    } catch (const std::exception& e) {
        auto& f = report.family("pipeline");
        ++f.checks;
        f.failures.push_back(spec.canonical_text() + ": " + e.what());
        return;
    }
    ++report.family("pipeline").checks;
    run_invariant_suite(a, report, opt);
}

GroupSpec random_group(std::mt19937_64& rng, Int max_order) {
    require(max_order >= 1, "max order must be positive");
    auto pick = [&](Int k) { return static_cast<Int>(rng() % static_cast<std::uint64_t>(k)); };
    for (;;) {
        GroupSpec spec;
        Int r = 1 + pick(max_order);
        Int a = pick(r), b = pick(r);
        spec.generators.push_back({r, {a, b, mod(-a - b, r)}});
        if (pick(10) < 3) {
            Int s = 2 + pick(7);
            Int c = pick(s), d = pick(s);
            spec.generators.push_back({s, {c, d, mod(-c - d, s)}});
        }
        try {
            LatticeContext ctx = lattice_context(spec, max_order);
            if (ctx.order <= max_order) return spec;
        } catch (const InvalidInput&) {
        }
    }
}

std::vector<GroupSpec> random_groups(std::uint64_t seed, std::size_t count, Int max_order) {
    std::mt19937_64 rng(seed);
    std::vector<GroupSpec> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_group(rng, max_order));
    return out;
}

}  // namespace ahilb
