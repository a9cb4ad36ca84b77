#pragma once

#include "hopfrg/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hopfrg {

// Property suites behind `verify --suite <name>`. Each pins the identities
// it checks; the options only move the degree bounds and the seed.
struct SuiteOptions {
    int max_degree = 4;
    int k_max_degree = -1; // < 0: derived as max(1, max_degree - 2)
    std::uint64_t seed = 42;
};

Report suite_hopf(int h_max_vertices, int k_max_edges);
Report suite_compat(int max_vertices);
Report suite_birkhoff(int n_characters, int max_vertices, int n_laurent_pairs, std::uint64_t seed);
Report suite_biderivation(int n_forest_pairs, int max_vertices, int n_character_pairs,
                          std::uint64_t seed);
Report suite_cocycle(int infinitesimal_degree, int max_degree, std::uint64_t seed);
Report suite_rg(int max_degree, std::uint64_t seed);

const std::vector<std::string>& suite_names(); // excludes "all"
Report run_suite(const std::string& name, const SuiteOptions& opts); // "all" merges everything

} // namespace hopfrg
