// Command-line front end: divisor / ring / cover / segre / sections analyses
// plus the built-in scenario suite. Exit codes: 0 = all expectations met,
// 1 = expectation failure or undecided result, 2 = usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <secring/cover.hpp>
#include <secring/errors.hpp>
#include <secring/graded.hpp>
#include <secring/reports.hpp>
#include <secring/scenarios.hpp>
#include <secring/sections.hpp>

namespace {

using secring::ReportOptions;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw secring::domain_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

secring::QDivisor load_divisor(const std::string& path) {
    return secring::parse_divisor_json(slurp(path));
}

// Factor spec for `segre`: {"type": "ring"|"cover"|"polynomial_ring", ...}.
secring::GradedObject load_factor(const std::string& path, long bound) {
    auto j = nlohmann::ordered_json::parse(slurp(path));
    std::string type = j.value("type", "ring");
    if (type == "polynomial_ring")
        return secring::to_graded_object(secring::polynomial_ring(j.at("num_vars").get<int>()));
    secring::SectionRing base(secring::parse_divisor_json(j.at("divisor").dump()));
    if (type == "ring")
        return secring::to_graded_object(base);
    if (type == "cover") {
        long b = j.value("bound", bound);
        if (j.contains("class_divisor"))
            return secring::export_graded_object(secring::cyclic_cover(
                base, secring::parse_divisor_json(j["class_divisor"].dump()), b));
        return secring::export_graded_object(secring::canonical_cover(base, b));
    }
    throw secring::domain_error("factor type must be ring, cover or polynomial_ring");
}

void parse_window(const std::string& text, ReportOptions& opts) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--window", "expected LO..HI");
    try {
        opts.window_lo = std::stoll(text.substr(0, dots));
        opts.window_hi = std::stoll(text.substr(dots + 2));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--window", "expected LO..HI");
    }
    if (opts.window_lo > opts.window_hi)
        throw CLI::ValidationError("--window", "LO must be <= HI");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded invariants of section rings of Q-divisors on P^d, "
                 "their cyclic covers and Segre products"};
    app.require_subcommand(1);
    app.fallthrough();

    ReportOptions opts;
    std::string window_text;
    app.add_option("--window", window_text, "scan window LO..HI (default -20..20)");
    app.add_flag("--json", opts.json, "emit JSON instead of text");
    app.add_option("--bound", opts.bound, "torsion search bound (default 60)");
    app.add_option("--max-basis", opts.max_basis, "section basis size guardrail");

    std::string input, left, right, class_divisor;
    long max_degree = 12;
    bool dump_basis = false;

    CLI::App* cmd_divisor = app.add_subcommand("divisor", "divisor calculus report");
    cmd_divisor->add_option("--input", input, "divisor JSON file")->required();

    CLI::App* cmd_ring = app.add_subcommand("ring", "section ring invariants");
    cmd_ring->add_option("--input", input, "divisor JSON file")->required();

    CLI::App* cmd_cover = app.add_subcommand("cover", "cyclic/canonical cover invariants");
    cmd_cover->add_option("--input", input, "divisor JSON file")->required();
    cmd_cover->add_option("--class-divisor", class_divisor,
                          "divisor JSON for a non-canonical cyclic cover");

    CLI::App* cmd_segre = app.add_subcommand("segre", "Segre product / Kunneth breakdown");
    cmd_segre->add_option("--left", left, "left factor spec JSON")->required();
    cmd_segre->add_option("--right", right, "right factor spec JSON")->required();

    CLI::App* cmd_sections = app.add_subcommand("sections", "explicit bases and generator counts");
    cmd_sections->add_option("--input", input, "divisor JSON file (with polynomials)")->required();
    cmd_sections->add_option("--max-degree", max_degree, "top degree for generator counts");
    cmd_sections->add_flag("--dump-basis", dump_basis, "include full bases in the report");

    CLI::App* cmd_paper = app.add_subcommand("paper", "run built-in scenario suite");
    std::string case_name = "all";
    secring::ScenarioParams params;
    cmd_paper->add_option("--case", case_name, "scenario name or 'all'");
    cmd_paper->add_option("--d", params.d, "dimension parameter (theorem-6.1, griffith)");
    cmd_paper->add_option("--r", params.r, "r parameter (griffith, example-3.5)");
    cmd_paper->add_option("--n", params.n, "n parameter (example-3.5)");
    cmd_paper->add_option("--m", params.m, "m parameter (example-3.5)");
    bool list_cases = false;
    cmd_paper->add_flag("--list", list_cases, "list scenario names");
    std::string scenario_file;
    cmd_paper->add_option("--file", scenario_file, "run a declarative scenario JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!window_text.empty())
            parse_window(window_text, opts);
        opts.max_degree = max_degree;
        opts.dump_basis = dump_basis;

        if (cmd_divisor->parsed()) {
            std::cout << secring::divisor_report(load_divisor(input), opts);
            return 0;
        }
        if (cmd_ring->parsed()) {
            std::cout << secring::ring_report(secring::SectionRing(load_divisor(input)), opts);
            return 0;
        }
        if (cmd_cover->parsed()) {
            secring::SectionRing base(load_divisor(input));
            secring::CoverDescriptor cov =
                class_divisor.empty()
                    ? secring::canonical_cover(base, opts.bound)
                    : secring::cyclic_cover(base, load_divisor(class_divisor), opts.bound);
            std::cout << secring::cover_report(cov, opts);
            return 0;
        }
        if (cmd_segre->parsed()) {
            std::cout << secring::segre_report(load_factor(left, opts.bound),
                                               load_factor(right, opts.bound), opts);
            return 0;
        }
        if (cmd_sections->parsed()) {
            std::cout << secring::sections_report(secring::SectionRing(load_divisor(input)), opts);
            return 0;
        }
        if (cmd_paper->parsed()) {
            if (list_cases) {
                for (const auto& name : secring::scenario_names())
                    std::cout << name << "\n";
                return 0;
            }
            params.bound = opts.bound;
            params.window_lo = opts.window_lo;
            params.window_hi = opts.window_hi;
            if (!scenario_file.empty()) {
                secring::ScenarioReport rep =
                    secring::run_scenario_json(slurp(scenario_file), params);
                std::cout << secring::scenario_report(rep, opts);
                return rep.all_pass && !rep.undecided ? 0 : 1;
            }
            std::vector<std::pair<std::string, secring::ScenarioParams>> runs;
            if (case_name == "all") {
                secring::ScenarioParams p = params;
                runs.emplace_back("example-3.5", p);
                runs.emplace_back("example-4.5", p);
                for (int d = 3; d <= 6; ++d) {
                    p.d = d;
                    runs.emplace_back("theorem-6.1", p);
                }
                for (int d = 4; d <= 5; ++d)
                    for (int r = 1; r <= 2; ++r) {
                        p.d = d;
                        p.r = r;
                        runs.emplace_back("griffith", p);
                    }
                runs.emplace_back("goto-watanabe", params);
            } else {
                runs.emplace_back(case_name, params);
            }
            bool all_pass = true;
            for (const auto& [name, p] : runs) {
                secring::ScenarioReport rep = secring::run_scenario(name, p);
                all_pass = all_pass && rep.all_pass && !rep.undecided;
                std::cout << secring::scenario_report(rep, opts);
            }
            return all_pass ? 0 : 1;
        }
    } catch (const secring::undecided_error& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return 1;
    } catch (const secring::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
