// Batch CLI for the star-operation engine: evaluate DSL scripts, run single
// checks, run property suites, reproduce the infinite-variable
// counterexample, or run the whole selftest battery.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stellate/infinite.hpp"
#include "stellate/locstar.hpp"
#include "stellate/report.hpp"
#include "stellate/script.hpp"
#include "stellate/selftest.hpp"
#include "stellate/star.hpp"
#include "stellate/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Output {
    std::string format = "text";  // text|json
    std::string path;             // empty = stdout

    void emit(const nlohmann::json& reports, const std::string& text) const {
        std::ostringstream body;
        if (format == "json")
            body << reports.dump(2) << "\n";
        else
            body << text;
        if (path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream f(path);
            f << body.str();
        }
    }
};

int default_max_iter() {
    if (const char* env = std::getenv("STELLATE_MAX_ITER")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return stellate::kDefaultMaxIter;
}

std::string render_all(const nlohmann::json& reports) {
    std::string out;
    for (const auto& r : reports) out += stellate::render_text(r);
    return out;
}

stellate::SuiteConfig suite_config(const stellate::RunConfig& cfg, int nvars) {
    stellate::SuiteConfig sc;
    sc.nvars = nvars;
    sc.max_deg = cfg.max_deg;
    sc.max_gens = cfg.max_gens;
    sc.samples = cfg.samples;
    sc.seed = cfg.seed;
    sc.max_iter = cfg.max_iter;
    return sc;
}

// `suite <name>` without a script runs the named suite against a default
// scene: a GV set, a non-GV set, and the axis prime family in two variables.
nlohmann::json run_named_suite(const std::string& name, const stellate::RunConfig& cfg) {
    using namespace stellate;
    SuiteConfig sc = suite_config(cfg, 2);
    MultiplicativeSet gv_set({make_module(2, {{1, 0}, {0, 1}})});
    MultiplicativeSet non_gv_set({make_module(2, {{1, 1}})});
    PrimeFamily axes(2, {{0}, {1}});
    nlohmann::json reports = nlohmann::json::array();
    auto push = [&](const PropertyReport& r) { reports.push_back(r.to_json()); };
    if (name == "star-axioms") {
        push(check_star_axioms(StarOperator::identity(), sc));
        push(check_star_axioms(StarOperator::divisorial(), sc));
        push(check_star_axioms(StarOperator::finite_divisorial(), sc));
        push(check_star_axioms(StarOperator::transform(gv_set, sc.max_iter), sc));
        push(check_star_axioms(localization_star(axes), sc));
    } else if (name == "transform-laws") {
        push(check_transform_laws(gv_set, sc));
    } else if (name == "gv-criterion") {
        push(check_gv_criterion(gv_set, sc));
        push(check_gv_criterion(non_gv_set, sc));
    } else if (name == "idempotence") {
        push(check_idempotence_localizing(gv_set, sc));
    } else if (name == "saturation") {
        push(check_saturation_criterion(gv_set, sc));
        push(check_saturation_criterion(non_gv_set, sc));
    } else if (name == "induced") {
        push(check_induced_transform(StarOperator::identity(), sc));
        push(check_induced_transform(StarOperator::divisorial(), sc));
        push(check_induced_transform(StarOperator::transform(gv_set, sc.max_iter), sc));
        push(check_induced_transform(localization_star(axes), sc));
    } else if (name == "localization") {
        push(check_localization_star(axes, sc));
        push(check_localization_star(PrimeFamily(3, {{0, 1}, {1, 2}, {0, 2}}), sc));
    } else if (name == "truncation") {
        push(truncation_crosscheck(5, 5, cfg.samples, cfg.seed));
    } else {
        throw std::invalid_argument(
            "unknown suite '" + name +
            "' (star-axioms, transform-laws, gv-criterion, idempotence, saturation, induced, "
            "localization, truncation)");
    }
    return reports;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stellate: star-operations on fractional monomial ideals"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    stellate::RunConfig cfg;
    cfg.max_iter = default_max_iter();
    Output output;
    app.add_option("--seed", cfg.seed, "RNG seed for property suites");
    app.add_option("--samples", cfg.samples, "samples per property suite");
    app.add_option("--max-deg", cfg.max_deg, "maximum generator degree for sampled ideals");
    app.add_option("--max-iter", cfg.max_iter, "transform chain iteration guard");
    app.add_option("--out", output.path, "write output to a file instead of stdout");
    app.add_option("--format", output.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string eval_path, check_expr, suite_name, counterexample_name;
    auto* eval_cmd = app.add_subcommand("eval", "run a DSL script file");
    eval_cmd->add_option("file", eval_path, "script file")->required();
    auto* check_cmd = app.add_subcommand("check", "run a single check expression, e.g. \"gv(<x1, x2>)\"");
    check_cmd->add_option("expr", check_expr, "check expression")->required();
    auto* suite_cmd = app.add_subcommand("suite", "run a named suite against default scenes");
    suite_cmd->add_option("name", suite_name, "suite name")->required();
    auto* cex_cmd = app.add_subcommand("counterexample", "reproduce a named counterexample");
    cex_cmd->add_option("name", counterexample_name, "counterexample name (ex2-10)")->required();
    app.add_subcommand("selftest", "run every suite at default scale");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) {
            std::ifstream f(eval_path);
            if (!f) {
                std::cerr << "cannot open " << eval_path << "\n";
                return kExitUsage;
            }
            std::stringstream buf;
            buf << f.rdbuf();
            stellate::RunResult result = stellate::run_script(buf.str(), cfg);
            output.emit(result.reports, result.text);
            return result.exit_code;
        }
        if (check_cmd->parsed()) {
            stellate::RunResult result = stellate::run_script("check " + check_expr, cfg);
            output.emit(result.reports, result.text);
            return result.exit_code;
        }
        if (suite_cmd->parsed()) {
            nlohmann::json reports = run_named_suite(suite_name, cfg);
            output.emit(reports, render_all(reports));
            for (const auto& r : reports)
                if (!r.at("pass").get<bool>()) return kExitViolations;
            return kExitOk;
        }
        if (cex_cmd->parsed()) {
            if (counterexample_name != "ex2-10") {
                std::cerr << "unknown counterexample '" << counterexample_name << "'\n";
                return kExitUsage;
            }
            stellate::CounterexampleResult result =
                stellate::verify_counterexample(12, 6, std::max(cfg.samples, 500), cfg.seed);
            nlohmann::json j = result.report.to_json();
            j["narrative"] = result.narrative;
            std::string text;
            for (const auto& line : result.narrative) text += line + "\n";
            text += stellate::render_text(result.report.to_json());
            nlohmann::json arr = nlohmann::json::array({j});
            output.emit(arr, text);
            return result.report.pass ? kExitOk : kExitViolations;
        }
        // selftest
        nlohmann::json reports = stellate::run_selftest(cfg);
        output.emit(reports, render_all(reports));
        return stellate::selftest_ok(reports) ? kExitOk : kExitViolations;
    } catch (const stellate::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const stellate::UndefinedName& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const stellate::NonStabilizing& e) {
        std::cerr << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
