#pragma once

#include <string>

#include "ahilb/pipeline.hpp"
#include "json.hpp"

namespace ahilb {

using Json = nlohmann::ordered_json;

Json report_json(const Analysis& a);

struct SvgOptions {
    bool ratios = false;
    double size = 600.0;
};

std::string render_svg(const Analysis& a, const SvgOptions& opt = {});

// Ratio of a line, signed so that its first nonzero exponent is positive.
Vec3 display_ratio(const LatticeContext& ctx, const Line& l);

std::string clusters_text(const Analysis& a, std::optional<std::size_t> cone = std::nullopt);
std::string fan_text(const Analysis& a);
std::string suite_text(const SuiteReport& rep);

}  // namespace ahilb
