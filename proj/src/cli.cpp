#include "ahilb/cli.hpp"

#include <fstream>

#include "CLI11.hpp"
#include "ahilb/report.hpp"

namespace ahilb {

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot write " + path);
    f << text;
    if (!f) throw InvalidInput("cannot write " + path);
}

// Analysis plus the invariant suite; any failure is a violation.
Analysis checked_analysis(const std::string& spec) {
    Analysis a = analyze(spec);
    SuiteReport rep = run_invariant_suite(a);
    if (!rep.ok()) violation(suite_text(rep));
    return a;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partition, fan and cluster charts of A-Hilb C^3 for diagonal A in SL(3)", "ahilb"};
    app.require_subcommand(1);

    std::string spec, json_path, svg_path;
    bool ratios = false;
    std::optional<std::size_t> triangle;
    std::size_t random_count = 0;
    Int max_order = 60;
    std::uint64_t seed = 0;

    auto add_spec = [&](CLI::App* c, bool required) {
        auto* o = c->add_option("spec", spec, "group, e.g. 1/11(1,2,8) or 1/2(1,1,0)+1/2(0,1,1)");
        if (required) o->required();
        c->add_option("--json", json_path, "write the JSON report to this file");
    };
    auto* report = app.add_subcommand("report", "JSON report of the whole computation");
    add_spec(report, true);
    auto* draw = app.add_subcommand("draw", "SVG picture of the partition and its tesselation");
    add_spec(draw, true);
    draw->add_option("--svg", svg_path, "output file (default: standard output)");
    draw->add_flag("--ratios", ratios, "label partition edges with their invariant ratios");
    auto* clusters = app.add_subcommand("clusters", "cluster equations of the basic triangles");
    add_spec(clusters, true);
    clusters->add_option("--triangle", triangle, "cone index");
    auto* fan = app.add_subcommand("fan", "rays, cones and exceptional surfaces");
    add_spec(fan, true);
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    add_spec(verify, false);
    verify->add_option("--random", random_count, "number of random groups");
    verify->add_option("--max-order", max_order, "order bound for random groups")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "seed of the random sample");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*verify) {
            SuiteReport rep;
            SuiteOptions opt;
            opt.seed = seed;
            if (spec.empty() && random_count == 0) throw InvalidInput("verify needs a group or --random N");
            if (!spec.empty()) verify_group(parse_group_spec(spec), rep, opt);
            for (const auto& g : random_groups(seed, random_count, max_order)) verify_group(g, rep, opt);
            out << suite_text(rep);
            out << (rep.ok() ? "all checks passed\n" : "invariant failures\n");
            return rep.ok() ? 0 : 2;
        }
        Analysis a = checked_analysis(spec);
        if (!json_path.empty()) write_file(json_path, report_json(a).dump(2) + "\n");
        if (*report) {
            if (json_path.empty()) out << report_json(a).dump(2) << "\n";
        } else if (*draw) {
            SvgOptions opt;
            opt.ratios = ratios;
            std::string svg = render_svg(a, opt);
            if (svg_path.empty()) out << svg;
            else write_file(svg_path, svg);
        } else if (*clusters) {
            if (triangle && *triangle >= a.clusters.size())
                throw InvalidInput("cone id " + std::to_string(*triangle) + " out of range 0.." +
                                   std::to_string(a.clusters.size() - 1));
            out << clusters_text(a, triangle);
        } else if (*fan) {
            out << fan_text(a);
        }
        return 0;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ahilb
