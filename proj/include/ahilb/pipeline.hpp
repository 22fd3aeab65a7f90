#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ahilb/clusters.hpp"

namespace ahilb {

// Everything computed for one group.
struct Analysis {
    LatticeContext ctx;
    std::array<CornerFan, 3> fans;
    CyclicWord word;
    MMPTrace trace;
    Partition partition;
    Fan fan;
    std::vector<TriangleRatios> ratios;   // per regular triangle
    std::vector<ClusterSystem> clusters;  // per cone of the fan
    std::vector<SurfaceClass> census;
    Int dp6 = 0;
};

// Runs the pipeline; throws InvalidInput or InvariantViolation.
Analysis analyze(const GroupSpec& spec, Int order_cap = default_order_cap);
Analysis analyze(std::string_view spec_text, Int order_cap = default_order_cap);

struct FamilyResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

struct SuiteReport {
    std::vector<FamilyResult> families;
    std::vector<std::string> notes;
    bool ok() const;
    FamilyResult& family(const std::string& name);
};

struct SuiteOptions {
    std::size_t mmp_orders = 10;
    std::uint64_t seed = 0;
};

void run_invariant_suite(const Analysis& a, SuiteReport& report, const SuiteOptions& opt = {});
SuiteReport run_invariant_suite(const Analysis& a, const SuiteOptions& opt = {});

// Analyze and check one group, recording pipeline exceptions as failures.
void verify_group(const GroupSpec& spec, SuiteReport& report, const SuiteOptions& opt = {});

// A random valid group of order at most max_order: one cyclic generator,
// sometimes with a second one of small order.
GroupSpec random_group(std::mt19937_64& rng, Int max_order);

// The same sample for the same seed.
std::vector<GroupSpec> random_groups(std::uint64_t seed, std::size_t count, Int max_order);

}  // namespace ahilb
