#include "hopfrg/report.hpp"

namespace hopfrg {

void Report::merge(const Report& o) {
    checks += o.checks;
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    elapsed_ms += o.elapsed_ms;
}

std::string render_report(const Report& r, bool tsv) {
    const char* sep = tsv ? "\t" : " ";
    std::string out;
    out += "suite:" + std::string(sep) + r.suite + "\n";
    out += "max-degree:" + std::string(sep) + std::to_string(r.max_degree) + "\n";
    out += "seed:" + std::string(sep) + std::to_string(r.seed) + "\n";
    out += "checks:" + std::string(sep) + std::to_string(r.checks) + "\n";
    for (const auto& n : r.notes) out += "note:" + std::string(sep) + n + "\n";
    for (const auto& f : r.failures)
        out += "FAIL" + std::string(sep) + f.identity + std::string(sep) + "item=" + f.item +
               std::string(sep) + "lhs=" + f.lhs + std::string(sep) + "rhs=" + f.rhs + "\n";
    out += "failures:" + std::string(sep) + std::to_string(r.failures.size()) + "\n";
    return out;
}

} // namespace hopfrg
