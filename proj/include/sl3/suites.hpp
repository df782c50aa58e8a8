#pragma once

#include "sl3/json_io.hpp"
#include "sl3/lamination.hpp"
#include "sl3/triangulation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sl3 {

struct Check {
    std::string name;
    bool pass = true;
    bool skipped = false;
    std::string detail;
    std::optional<json> witness;
};

struct SuiteReport {
    std::string suite;
    std::string anchor;
    std::vector<Check> checks;

    bool pass() const;
    json to_json() const;
};

struct SuiteOptions {
    std::vector<Triangulation> surfaces;  // empty: the built-in D* only
    std::uint64_t rng_seed = 1;
    std::size_t random_points = 1000;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

// Charts at every puncture of tri that has a two-triangle star.
std::vector<PunctureChart> puncture_charts(const Triangulation& tri);

// 3^6 sign patterns on the chart's labels 1..6 (other coordinates 0), then random points on all coordinates.
std::vector<TropicalPoint> chart_samples(const PunctureChart& ch, Flavor f, std::size_t random_points, std::uint64_t rng_seed);

// Sign patterns on the given vertices (other coordinates 0), then random points on all coordinates.
std::vector<TropicalPoint> role_samples(std::size_t n, const std::vector<Vertex>& roles, Flavor f, std::size_t random_points,
                                        std::uint64_t rng_seed);

bool equal_on(const TropicalPoint& a, const TropicalPoint& b, const std::vector<Vertex>& vertices);

}  // namespace sl3
