#ifndef STELLATE_REPORT_HPP
#define STELLATE_REPORT_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace stellate {

struct Violation {
    std::string clause;
    std::string inputs;
    std::string witness;
};

// Outcome of one property suite. `elapsed_ms` is timing metadata and is the
// only field excluded from determinism comparisons.
struct PropertyReport {
    std::string suite;
    bool pass = true;
    int samples = 0;
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
    std::vector<Violation> violations;

    void record(std::string clause, std::string inputs, std::string witness) {
        pass = false;
        violations.push_back({std::move(clause), std::move(inputs), std::move(witness)});
    }

    nlohmann::json to_json() const {
        nlohmann::json v = nlohmann::json::array();
        for (const auto& w : violations)
            v.push_back({{"clause", w.clause}, {"inputs", w.inputs}, {"witness", w.witness}});
        return {{"schema", 1},      {"suite", suite},           {"pass", pass},
                {"samples", samples}, {"seed", seed},           {"elapsed_ms", elapsed_ms},
                {"violations", v}};
    }
};

// Human-readable rendering, derived from the JSON form.
inline std::string render_text(const nlohmann::json& report) {
    std::ostringstream out;
    out << "suite " << report.at("suite").get<std::string>() << ": "
        << (report.at("pass").get<bool>() ? "PASS" : "FAIL") << " ("
        << report.at("samples").get<int>() << " samples, seed "
        << report.at("seed").get<std::uint64_t>() << ")\n";
    for (const auto& v : report.at("violations")) {
        out << "  violated " << v.at("clause").get<std::string>() << " on "
            << v.at("inputs").get<std::string>() << "; witness "
            << v.at("witness").get<std::string>() << "\n";
    }
    return out.str();
}

}  // namespace stellate

#endif  // STELLATE_REPORT_HPP
