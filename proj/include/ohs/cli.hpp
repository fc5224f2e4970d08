#pragma once
#ifndef OHS_CLI_HPP
#define OHS_CLI_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "combinatorics.hpp"
#include "counting.hpp"
#include "error.hpp"
#include "identities.hpp"
#include "scheme.hpp"
#include "spectral.hpp"
#include "structure.hpp"

namespace ohs::cli {

/// What a command printed and how it ended; the binary forwards this to the real streams.
struct CommandOutput {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Checks decide the exit code; disagreements with printed formulas only do so under --strict.
struct RunReport {
    std::string command;
    nlohmann::json params;
    std::map<std::string, bool> checks;
    nlohmann::json data;
    std::vector<std::string> disagreements;

    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
    }
};

inline void to_json(nlohmann::json& j, const RunReport& r) {
    j = nlohmann::json{{"command", r.command},       {"params", r.params},
                       {"checks", r.checks},         {"data", r.data},
                       {"disagreements", r.disagreements}, {"pass", r.pass()}};
}

struct Options {
    std::vector<int> q;
    int n = 0;
    std::vector<int> shape;
    std::vector<int> lambda;
    std::vector<int> mu;
    std::string which = "both";
    bool reversed = false;
    std::string generators = "bm";
    std::size_t max_points = kDefaultMaxPoints;
    bool json = false;
    bool strict = false;
};

/// The built-in instance list of `suite`.
inline std::vector<SchemeParams> suite_instances() {
    return {SchemeParams({2}, 1),    SchemeParams({3}, 1),    SchemeParams({2}, 2),    SchemeParams({2}, 3),
            SchemeParams({2, 2}, 1), SchemeParams({2, 3}, 1), SchemeParams({2, 2}, 2), SchemeParams({2, 2, 2}, 1)};
}

namespace detail {

template <class Map>
void merge_checks(std::map<std::string, bool>& into, const std::string& prefix, const Map& from) {
    for (const auto& [k, v] : from) into[prefix + k] = v;
}

inline Generators parse_generators(const std::string& g) {
    if (g == "bm") return Generators::bm;
    if (g == "idem") return Generators::idem;
    throw InvalidArgument("--generators must be bm or idem, got '" + g + "'");
}

inline RunReport cmd_shapes(const SchemeParams& p) {
    RunReport r;
    const auto shapes = enumerate_shapes(p);
    r.data = shapes;
    r.checks["count_is_binomial"] = shapes.size() == binomial_count(p.m() + p.n, p.n);
    return r;
}

inline bool relation_matches_tensor(const SchemeParams& p, std::size_t max_points) {
    for (const auto& s : enumerate_shapes(p))
        if (relation_matrix(s, p, max_points) != adjacency_n(s, p, max_points)) return false;
    return true;
}

inline RunReport cmd_scheme_verify(const SchemeParams& p, const Options& o) {
    require_size_bound(p, o.max_points);
    RunReport r;
    const auto axioms = verify_axioms(p, o.max_points);
    r.checks["R1"] = axioms.r1;
    r.checks["R2"] = axioms.r2;
    r.checks["R3"] = axioms.r3;
    r.checks["R4"] = axioms.r4;
    r.checks["R5"] = axioms.r5;
    r.checks["relation_matches_tensor_construction"] = relation_matches_tensor(p, o.max_points);
    r.data = {{"axioms", axioms}, {"intersection_numbers", intersection_numbers(p, o.max_points)}};
    return r;
}

inline RunReport cmd_adjacency(const SchemeParams& p, const Options& o) {
    if (o.shape.empty()) throw InvalidArgument("adjacency needs --shape");
    require_size_bound(p, o.max_points);
    const Shape s(o.shape);
    RunReport r;
    const auto a = adjacency_n(s, p, o.max_points);
    const auto k = valency_n(s, p);
    const auto sums = row_sums(a);
    r.checks["row_sums_equal_valency"] =
        std::all_of(sums.begin(), sums.end(), [&](const Rational& x) { return x == k; });
    r.data = {{"shape", s}, {"valency", k.to_string()}, {"matrix", a}};
    return r;
}

inline RunReport cmd_eigenmatrix(const SchemeParams& p, const Options& o) {
    if (o.which != "P" && o.which != "Q" && o.which != "both")
        throw InvalidArgument("--which must be P or Q, got '" + o.which + "'");
    const SchemeParams src = o.reversed ? p.reversed() : p;
    const auto e = eigen_n(src);
    RunReport r;
    r.checks["pq_identity"] =
        e.P * e.Q == power(Rational(static_cast<long>(src.base_size())), src.n) * RatMatrix::identity(e.shapes.size());
    r.data = {{"shape_order", e.shapes}};
    if (o.which != "Q") r.data["P"] = e.P;
    if (o.which != "P") r.data["Q"] = e.Q;
    return r;
}

inline RunReport cmd_krawchouk(const SchemeParams& p, const Options& o) {
    const auto t = krawchouk_table(p, o.reversed);
    RunReport r;
    const Shape origin = Shape::origin(static_cast<std::size_t>(p.m()) + 1, p.n);
    bool ones = true;
    for (const auto& s : t.shapes) ones = ones && t(origin, s) == Rational(1);
    r.checks["trivial_polynomial_is_one"] = ones;
    if (!o.lambda.empty() || !o.mu.empty()) {
        if (o.lambda.empty() || o.mu.empty()) throw InvalidArgument("krawchouk needs both --lambda and --mu");
        const Shape l(o.lambda), u(o.mu);
        require_shape(p, l);
        require_shape(p, u);
        r.data = {{"lambda", l}, {"mu", u}, {"value", t(u, l).to_string()}};
    } else {
        r.data = {{"shape_order", t.shapes}, {"values", t.values}};
    }
    return r;
}

inline RunReport cmd_theta(const SchemeParams& p, const Options& o) {
    RunReport r;
    if (!o.lambda.empty() || !o.mu.empty()) {
        if (o.lambda.empty() || o.mu.empty()) throw InvalidArgument("theta needs both --lambda and --mu");
        const Shape l(o.lambda), u(o.mu);
        const auto mats = theta_enumerate(l, u, p);
        const bool feasible = theta_feasible(l, u, p);
        r.checks["feasible_iff_nonempty"] = feasible == !mats.empty();
        r.data = {{"lambda", l}, {"mu", u}, {"feasible", feasible}, {"matrices", mats}};
        return r;
    }
    bool equiv = true;
    for (const auto& l : margin_shapes(p))
        for (const auto& u : margin_shapes(p)) equiv = equiv && theta_feasible(l, u, p) == !theta_enumerate(l, u, p).empty();
    const auto total = theta_total(p);
    const auto predicted = theta_binomial(p);
    r.checks["feasible_iff_nonempty"] = equiv;
    if (total != predicted) r.disagreements.push_back("theta_count");
    r.data = {{"lambda_set", lambda_set(p)}, {"total", total}, {"binomial", predicted}};
    return r;
}

inline RunReport cmd_omega(const SchemeParams& p) {
    RunReport r;
    const auto omega = omega_set(p);
    bool equiv = true;
    for (const auto& l : margin_shapes(p))
        for (const auto& u : margin_shapes(p)) equiv = equiv && theta_feasible(l, u, p) == !theta_enumerate(l, u, p).empty();
    r.checks["feasible_iff_nonempty"] = equiv;
    const bool condition = omega_binomial_condition(p);
    const auto binom = theta_binomial(p);
    if (condition && omega.size() != binom) r.disagreements.push_back("omega_binomial");
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [l, u] : omega) pairs.push_back({l, u});
    r.data = {{"pairs", pairs}, {"size", omega.size()}, {"binomial", binom}, {"binomial_condition", condition}};
    return r;
}

inline RunReport cmd_identities(const SchemeParams& p, const Options& o) {
    RunReport r;
    const auto rep = verify_terw_identities(p, o.max_points);
    r.checks = rep.checks;
    r.data = rep;
    return r;
}

inline RunReport cmd_closure(const SchemeParams& p, const Options& o) {
    const auto g = parse_generators(o.generators);
    RunReport r;
    const auto T = terwilliger_closure(p, g, o.max_points);
    r.checks["closed_under_multiplication"] = T.is_closed_under_multiplication();
    r.data = {{"generators", to_string(g)}, {"dim", T.dimension()}, {"center_dim", center_dimension(T)}};
    return r;
}

inline RunReport from_structure(const StructureReport& s) {
    RunReport r;
    r.checks = s.checks;
    r.checks["identity_suite"] = s.identity_suite.passed();
    r.disagreements = s.disagreements();
    r.data = s;
    return r;
}

inline RunReport cmd_report(const SchemeParams& p, const Options& o) {
    return from_structure(structure_report(p, o.max_points));
}

/// Every check the library offers for one instance, merged under prefixes.
inline RunReport instance_report(const SchemeParams& p, std::size_t max_points) {
    RunReport r;
    const auto axioms = verify_axioms(p, max_points);
    merge_checks(r.checks, "axioms.",
                 std::map<std::string, bool>{
                     {"R1", axioms.r1}, {"R2", axioms.r2}, {"R3", axioms.r3}, {"R4", axioms.r4}, {"R5", axioms.r5}});
    r.checks["construction.relation_matches_tensor"] = relation_matches_tensor(p, max_points);
    const auto sr = verify_spectral_n(p, max_points);
    merge_checks(r.checks, "spectral.",
                 std::map<std::string, bool>{{"pq_identity", sr.pq_identity},
                                             {"eigenvalues", sr.eigenvalues},
                                             {"hadamard", sr.hadamard},
                                             {"valencies", sr.valencies},
                                             {"multiplicities", sr.multiplicities},
                                             {"construction_match", sr.construction_match},
                                             {"idempotents", sr.idempotents},
                                             {"duality", sr.duality}});
    const auto s = structure_report(p, max_points);
    merge_checks(r.checks, "identities.", s.identity_suite.checks);
    merge_checks(r.checks, "structure.", s.checks);
    bool equiv = true;
    for (const auto& l : margin_shapes(p))
        for (const auto& u : margin_shapes(p)) equiv = equiv && theta_feasible(l, u, p) == !theta_enumerate(l, u, p).empty();
    r.checks["combinatorics.feasible_iff_nonempty"] = equiv;
    r.disagreements = s.disagreements();
    r.data = s;
    return r;
}

inline RunReport run_suite_report(const Options& o, std::string& log) {
    RunReport r;
    nlohmann::json instances = nlohmann::json::array();
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& p : suite_instances()) {
        if (p.size() > o.max_points) {
            skipped.push_back(p.label());
            log += "skip " + p.label() + " (" + std::to_string(p.size()) + " points > --max-points)\n";
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        const auto inst = instance_report(p, o.max_points);
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        merge_checks(r.checks, p.label() + ".", inst.checks);
        for (const auto& d : inst.disagreements) r.disagreements.push_back(p.label() + ": " + d);
        log += p.label() + ": " + (inst.pass() ? "pass" : "FAIL") + ", " + std::to_string(inst.disagreements.size()) +
               " disagreement(s), " + std::to_string(ms) + " ms\n";
        instances.push_back({{"label", p.label()},
                             {"params", p},
                             {"checks", inst.checks},
                             {"disagreements", inst.disagreements},
                             {"pass", inst.pass()},
                             {"report", inst.data}});
    }
    r.data = {{"instances", instances}, {"skipped", skipped}, {"strict", o.strict}};
    return r;
}

}  // namespace detail

/// Parses argv (without the program name), runs one subcommand and renders its output.
/// Exit codes: 0 pass, 1 failed check (or disagreement under --strict), 2 usage or size bound.
inline CommandOutput run_command(const std::vector<std::string>& args) {
    CommandOutput res;
    Options o;
    CLI::App app{"Ordered Hamming scheme toolkit: exact constructions and algebra measurements"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    struct Spec {
        const char* name;
        const char* help;
        bool params;
    };
    const std::vector<Spec> specs{
        {"shapes", "List the shapes I(m,n) indexing the relations", true},
        {"scheme-verify", "Check the association scheme axioms and intersection numbers", true},
        {"adjacency", "Adjacency matrix of one relation (--shape)", true},
        {"eigenmatrix", "First and second eigenmatrices", true},
        {"krawchouk", "Multivariate Krawchouk values", true},
        {"theta", "Theta(lambda, mu) enumeration and feasibility", true},
        {"omega", "Feasible (lambda, mu) pairs", true},
        {"identities", "Exact identity suite for the F, F*, G, G* families", true},
        {"closure", "Terwilliger algebra by closure", true},
        {"report", "Structure report: measured dimensions against the printed formulas", true},
        {"suite", "Run every check over the built-in instance list", false},
    };
    for (const auto& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        if (s.params) {
            sub->add_option("--q", o.q, "Alphabet sizes, comma separated")->delimiter(',')->required();
            sub->add_option("--n", o.n, "Word length")->required();
        }
        const std::string name = s.name;
        if (name == "adjacency") sub->add_option("--shape", o.shape, "Shape, comma separated")->delimiter(',');
        if (name == "krawchouk" || name == "theta") {
            sub->add_option("--lambda", o.lambda, "Shape, comma separated")->delimiter(',');
            sub->add_option("--mu", o.mu, "Shape, comma separated")->delimiter(',');
        }
        if (name == "eigenmatrix") sub->add_option("--which", o.which, "P, Q or both");
        if (name == "eigenmatrix" || name == "krawchouk")
            sub->add_flag("--reversed", o.reversed, "Use the reversed alphabet sequence");
        if (name == "closure") sub->add_option("--generators", o.generators, "bm or idem");
        sub->add_option("--max-points", o.max_points, "Largest |X^n| allowed")->capture_default_str();
        sub->add_flag("--json", o.json, "Emit the full run report as one JSON line");
        sub->add_flag("--strict", o.strict, "Fail when a printed formula disagrees with the measurement");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        return res;
    } catch (const CLI::CallForAllHelp&) {
        res.out = app.help("", CLI::AppFormatMode::All);
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string("usage error: ") + e.what() + "\n";
        res.exit_code = 2;
        return res;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    std::string log;
    const auto t0 = std::chrono::steady_clock::now();
    RunReport r;
    try {
        if (command == "suite") {
            r = detail::run_suite_report(o, log);
        } else {
            const SchemeParams p(o.q, o.n);
            if (command == "shapes") r = detail::cmd_shapes(p);
            else if (command == "scheme-verify") r = detail::cmd_scheme_verify(p, o);
            else if (command == "adjacency") r = detail::cmd_adjacency(p, o);
            else if (command == "eigenmatrix") r = detail::cmd_eigenmatrix(p, o);
            else if (command == "krawchouk") r = detail::cmd_krawchouk(p, o);
            else if (command == "theta") r = detail::cmd_theta(p, o);
            else if (command == "omega") r = detail::cmd_omega(p);
            else if (command == "identities") r = detail::cmd_identities(p, o);
            else if (command == "closure") r = detail::cmd_closure(p, o);
            else r = detail::cmd_report(p, o);
            r.params = p;
        }
    } catch (const SizeBound& e) {
        res.err = log + "size bound: " + e.what() + "\n";
        res.exit_code = 2;
        return res;
    } catch (const InvalidArgument& e) {
        res.err = log + "usage error: " + e.what() + "\n";
        res.exit_code = 2;
        return res;
    } catch (const DimensionMismatch& e) {
        res.err = log + "usage error: " + e.what() + "\n";
        res.exit_code = 2;
        return res;
    } catch (const Error& e) {
        res.err = log + "error: " + e.what() + "\n";
        res.exit_code = 1;
        return res;
    }
    r.command = command;

    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::size_t passed = 0;
    for (const auto& [name, ok] : r.checks) {
        if (ok) ++passed;
        else log += "failed: " + name + "\n";
    }
    for (const auto& d : r.disagreements) log += "disagrees with measurement: " + d + "\n";
    log += command + ": " + std::to_string(passed) + "/" + std::to_string(r.checks.size()) + " checks pass, " +
           std::to_string(r.disagreements.size()) + " disagreement(s), elapsed_ms " + std::to_string(ms) + "\n";

    res.out = o.json ? nlohmann::json(r).dump() + "\n" : r.data.dump(2) + "\n";
    res.err = log;
    res.exit_code = !r.pass() || (o.strict && !r.disagreements.empty()) ? 1 : 0;
    return res;
}

/// Suite entry point for callers that do not go through argv.
inline CommandOutput run_suite(bool strict, std::size_t max_points = kDefaultMaxPoints) {
    std::vector<std::string> args{"suite", "--json", "--max-points", std::to_string(max_points)};
    if (strict) args.push_back("--strict");
    return run_command(args);
}

}  // namespace ohs::cli

#endif  // OHS_CLI_HPP
