#include "ahilb/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace ahilb {

namespace {

Json triple(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

std::string corner_name(int i) { return "e" + std::to_string(i + 1); }

Json champions_json(const Analysis& a) {
    const auto& ch = a.partition.champions;
    Json j;
    j["kind"] = champions_kind_name(ch.kind);
    if (ch.point) j["point"] = triple(a.ctx.point_from_plane(*ch.point));
    if (ch.triangle) j["triangle"] = *ch.triangle;
    if (ch.triple) {
        Json names = Json::array();
        for (const auto& t : *ch.triple) names.push_back(t.name());
        j["lines"] = names;
    }
    if (ch.kind == ChampionsReport::Kind::LongSide) {
        j["long_side"] = side_name(ch.long_side);
        j["c"] = ch.c;
    }
    return j;
}

}  // namespace

Vec3 display_ratio(const LatticeContext& ctx, const Line& l) {
    Vec3 m;
    for (int i = 0; i < 3; ++i) {
        Vec2 q = ctx.vertex_plane(i);
        if (det2(q - l.origin, l.dir) != 0) {
            m = line_ratio(ctx, l, q);
            break;
        }
    }
    for (int i = 0; i < 3; ++i)
        if (m[i] != 0) return m[i] > 0 ? m : -m;
    return m;
}

Json report_json(const Analysis& a) {
    const auto& ctx = a.ctx;
    const auto& part = a.partition;
    Json doc;
    doc["group"] = ctx.spec.canonical_text();
    doc["denominator"] = ctx.n;
    doc["order"] = ctx.order;

    Json corners = Json::array();
    for (const auto& f : a.fans) {
        Json c;
        c["corner"] = corner_name(f.corner);
        c["index"] = f.r;
        c["alpha"] = f.alpha;
        c["strengths"] = f.a;
        Json rays = Json::array();
        for (const auto& v : f.f) rays.push_back(triple(ctx.from_plane(v)));
        c["rays"] = rays;
        corners.push_back(c);
    }
    doc["corners"] = corners;

    Json word = Json::array(), lines = Json::array();
    for (const auto& e : a.word.entries) {
        word.push_back(e.value);
        lines.push_back(e.tag.name());
    }
    doc["cyclic_word"] = word;
    doc["word_lines"] = lines;
    if (part.long_side) doc["long_side"] = {{"side", side_name(part.long_side->side)}, {"c", part.long_side->c}};

    Json tris = Json::array();
    for (std::size_t i = 0; i < part.triangles.size(); ++i) {
        const auto& t = part.triangles[i];
        const auto& tr = a.ratios[i];
        Json j;
        j["id"] = i;
        j["side"] = t.side;
        Json verts = Json::array(), names = Json::array(), ratios = Json::array();
        for (int k = 0; k < 3; ++k) {
            verts.push_back(triple(ctx.point_from_plane(t.verts[k])));
            names.push_back(t.lines[k].name());
            ratios.push_back(triple(tr.side_ratio[k]));
        }
        j["vertices"] = verts;
        j["lines"] = names;
        j["ratios"] = ratios;
        j["case"] = tr.case_a ? "a" : "b";
        j["normal_form"] = {tr.a, tr.b, tr.c, tr.d, tr.e, tr.f};
        int owner = part.catchment[i];
        if (owner >= 0) j["catchment"] = side_name(owner);
        else j["catchment"] = nullptr;
        tris.push_back(j);
    }
    doc["partition"] = tris;
    doc["champions"] = champions_json(a);

    Json rays = Json::array(), cones = Json::array();
    for (const auto& r : a.fan.rays) rays.push_back(triple(r));
    for (const auto& c : a.fan.cones) cones.push_back({c[0], c[1], c[2]});
    doc["fan"] = {{"rays", rays}, {"cones", cones}};

    Json census = Json::array();
    for (const auto& s : a.census) {
        Json j;
        j["vertex"] = triple(s.vertex);
        j["valency"] = s.valency;
        j["b"] = s.b;
        j["c"] = s.c;
        j["surface"] = s.label_name();
        census.push_back(j);
    }
    doc["census"] = census;
    doc["dp6_count"] = a.dp6;

    Json clusters = Json::array();
    for (const auto& sys : a.clusters) {
        const auto& T = a.fan.basic[sys.cone];
        Json j;
        j["cone"] = sys.cone;
        j["triangle"] = T.parent;
        j["up"] = sys.up;
        j["pushes"] = {T.i, T.j, T.k};
        j["top"] = sys.top;
        j["E"] = sys.E;
        Json basis = Json::array();
        for (const auto& m : sys.basis()) basis.push_back(triple(m));
        j["basis"] = basis;
        clusters.push_back(j);
    }
    doc["clusters"] = clusters;
    return doc;
}

namespace {

struct Canvas {
    double size, margin, height;
    Int n;
    std::ostringstream out;

    std::pair<double, double> map(const Vec3& p) const {
        double x = (static_cast<double>(p[1]) + static_cast<double>(p[2]) / 2.0) / static_cast<double>(n);
        double y = static_cast<double>(p[2]) * std::sqrt(3.0) / 2.0 / static_cast<double>(n);
        return {margin + size * x, margin + size * (std::sqrt(3.0) / 2.0 - y)};
    }

    static std::string fmt(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return buf;
    }

    void line(const Vec3& a, const Vec3& b, const char* style) {
        auto [x1, y1] = map(a);
        auto [x2, y2] = map(b);
        out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2)
            << "\" " << style << "/>\n";
    }

    // Label at the point (a + b) / 2, both scaled by n.
    void label(const Vec3& a, const Vec3& b, const std::string& text, const char* cls) {
        auto [x1, y1] = map(a);
        auto [x2, y2] = map(b);
        out << "<text class=\"" << cls << "\" x=\"" << fmt((x1 + x2) / 2) << "\" y=\"" << fmt((y1 + y2) / 2) << "\">"
            << text << "</text>\n";
    }
};

}  // namespace

std::string render_svg(const Analysis& a, const SvgOptions& opt) {
    const auto& ctx = a.ctx;
    const auto& part = a.partition;
    Canvas cv{opt.size, 20.0, opt.size * std::sqrt(3.0) / 2.0 + 40.0, ctx.n, {}};
    cv.out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    cv.out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << Canvas::fmt(opt.size + 40.0)
           << "\" height=\"" << Canvas::fmt(cv.height) << "\">\n";
    cv.out << "<title>" << ctx.spec.canonical_text() << "</title>\n";
    cv.out << "<style>text{font-family:sans-serif;font-size:11px;text-anchor:middle}"
              ".strength{fill:#b00}.ratio{fill:#036;font-size:9px}</style>\n";

    for (const auto& [e, cs] : a.fan.edges)
        cv.line(a.fan.rays[e.first], a.fan.rays[e.second], "stroke=\"#888\" stroke-width=\"0.6\" stroke-dasharray=\"2,2\"");

    // Sides are split at partition vertices lying on them, so that each
    // segment is drawn once.
    std::set<Vec2> verts;
    for (const auto& t : part.triangles) verts.insert(t.verts.begin(), t.verts.end());
    std::set<std::pair<Vec3, Vec3>> segs;
    std::vector<std::pair<std::pair<Vec3, Vec3>, Tag>> labelled;
    for (const auto& t : part.triangles)
        for (int k = 0; k < 3; ++k) {
            const Vec2 a = t.verts[(k + 1) % 3], b = t.verts[(k + 2) % 3];
            const Vec2 d = b - a;
            std::vector<std::pair<Int, Vec2>> on;
            for (const auto& v : verts) {
                Vec2 w = v - a;
                if (det2(w, d) != 0) continue;
                Int dot2 = w.x * d.x + w.y * d.y;
                if (dot2 >= 0 && dot2 <= d.x * d.x + d.y * d.y) on.push_back({dot2, v});
            }
            std::sort(on.begin(), on.end());
            for (std::size_t s = 0; s + 1 < on.size(); ++s) {
                Vec3 p = ctx.point_from_plane(on[s].second), q = ctx.point_from_plane(on[s + 1].second);
                if (q < p) std::swap(p, q);
                if (segs.insert({p, q}).second) labelled.push_back({{p, q}, t.lines[k]});
            }
        }
    for (const auto& [s, tag] : labelled) cv.line(s.first, s.second, "stroke=\"black\" stroke-width=\"1.5\"");

    for (const auto& l : part.lines) {
        if (l.tag.is_junction() || l.extent == 0) continue;
        Vec3 p = ctx.point_from_plane(l.origin), q = ctx.point_from_plane(l.origin + l.dir);
        cv.label(p, q, std::to_string(l.strength), "strength");
    }
    if (opt.ratios)
        for (const auto& [s, tag] : labelled)
            cv.label(s.first, s.second, ratio_text(display_ratio(ctx, part.line(tag))), "ratio");
    cv.out << "</svg>\n";
    return cv.out.str();
}

std::string clusters_text(const Analysis& a, std::optional<std::size_t> cone) {
    std::ostringstream out;
    for (const auto& sys : a.clusters) {
        if (cone && sys.cone != *cone) continue;
        const auto& T = a.fan.basic[sys.cone];
        const auto& tr = a.ratios[T.parent];
        out << "cone " << sys.cone << ": " << (sys.up ? "up" : "down") << " triangle in regular triangle "
            << T.parent << " (side " << tr.r << ", case " << (tr.case_a ? "a" : "b") << "), pushes " << T.i << ","
            << T.j << "," << T.k << "\n";
        const Int extra = sys.up ? 0 : 1;
        const char* var = "xyz";
        for (int t = 0; t < 3; ++t) {
            int u = (t + 1) % 3, w = (t + 2) % 3;
            out << "  top exponent of " << var[t] << " = " << sys.top[t] << " = " << sys.E[w][t] << " + "
                << sys.E[u][t] << (extra ? " + 1" : "") << "\n";
        }
        std::istringstream eqs(sys.text());
        for (std::string line; std::getline(eqs, line);) out << "  " << line << "\n";
    }
    return out.str();
}

std::string fan_text(const Analysis& a) {
    std::ostringstream out;
    out << "rays (scaled by " << a.ctx.n << "): " << a.fan.rays.size() << "\n";
    for (std::size_t i = 0; i < a.fan.rays.size(); ++i) out << "  " << i << " " << to_string(a.fan.rays[i]) << "\n";
    out << "cones: " << a.fan.cones.size() << "\n";
    for (const auto& c : a.fan.cones) out << "  " << c[0] << " " << c[1] << " " << c[2] << "\n";
    out << "exceptional surfaces: " << a.census.size() << "\n";
    for (const auto& s : a.census) {
        out << "  " << to_string(s.vertex) << " valency " << s.valency << " " << s.label_name() << " b =";
        for (Int b : s.b) out << " " << b;
        out << "\n";
    }
    out << "dP6 count: " << a.dp6 << "\n";
    return out.str();
}

std::string suite_text(const SuiteReport& rep) {
    std::ostringstream out;
    for (const auto& f : rep.families) {
        out << (f.failures.empty() ? "PASS " : "FAIL ") << f.name << " (" << f.checks << " checks";
        if (!f.failures.empty()) out << ", " << f.failures.size() << " failures";
        out << ")\n";
        for (std::size_t i = 0; i < f.failures.size() && i < 5; ++i) out << "  " << f.failures[i] << "\n";
    }
    for (const auto& n : rep.notes) out << n << "\n";
    return out.str();
}

}  // namespace ahilb
