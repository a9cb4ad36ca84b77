#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hopfrg {

// One failed identity: which element, which identity, and both sides.
struct Failure {
    std::string item;
    std::string identity;
    std::string lhs;
    std::string rhs;
};

// Outcome of a verification suite. Rendering is deterministic for fixed
// inputs and seed; elapsed time is kept out of the stable text.
struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    int max_degree = 0;
    long checks = 0;
    std::vector<std::string> notes; // logged observations, not failures
    std::vector<Failure> failures;
    double elapsed_ms = 0.0;

    bool ok() const { return failures.empty(); }
    void fail(std::string item, std::string identity, std::string lhs, std::string rhs) {
        failures.push_back({std::move(item), std::move(identity), std::move(lhs), std::move(rhs)});
    }
    void merge(const Report& o);
};

// Stable line format ending in "failures: N". `tsv` swaps the separator
// for tabs; both omit elapsed time.
std::string render_report(const Report& r, bool tsv = false);

} // namespace hopfrg
