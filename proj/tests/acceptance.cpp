// One PASS/FAIL line per acceptance criterion. Exit status is 0 when the set of failing
// criteria equals the --expect-fail set (empty by default).
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ohs/cli.hpp>
#include <ohs/ohs.hpp>

using namespace ohs;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

const std::vector<SchemeParams>& suite() {
    static const std::vector<SchemeParams> s = cli::suite_instances();
    return s;
}

Outcome axioms() {
    Outcome o;
    for (const auto& p : suite())
        if (!verify_axioms(p).passed()) {
            o.pass = false;
            o.detail += " " + p.label();
        }
    o.detail = o.pass ? std::to_string(suite().size()) + " instances, R1-R5 exact" : "failing:" + o.detail;
    return o;
}

Outcome construction() {
    Outcome o;
    std::size_t count = 0;
    for (const auto& p : suite())
        for (const auto& s : enumerate_shapes(p)) {
            ++count;
            if (relation_matrix(s, p) != adjacency_n(s, p)) {
                o.pass = false;
                o.detail += " " + p.label() + s.to_string();
            }
        }
    o.detail = o.pass ? std::to_string(count) + " relations match the tensor construction" : "mismatch:" + o.detail;
    return o;
}

Outcome spectral() {
    Outcome o;
    for (const auto& p : suite()) {
        const auto r = verify_spectral_n(p);
        if (!r.passed()) {
            o.pass = false;
            o.detail += " " + p.label() + nlohmann::json(r).dump();
        }
    }
    const auto e = eigen_n(SchemeParams({2}, 2));
    const auto spot = RatMatrix::from_rows({{1, 2, 1}, {1, 0, -1}, {1, -2, 1}});
    if (e.P != spot) {
        o.pass = false;
        o.detail += " X(1,2;2) spot value differs";
    }
    if (o.pass) o.detail = "PQ, eigenvalue, Hadamard, valency, multiplicity, duality exact; X(1,2;2) spot value matches";
    return o;
}

Outcome identities() {
    Outcome o;
    std::size_t checks = 0, vacuous = 0;
    for (const auto& p : suite()) {
        const auto r = verify_terw_identities(p);
        checks += r.checks.size();
        vacuous += r.vacuous.size();
        for (const auto& f : r.failures()) {
            o.pass = false;
            o.detail += " " + p.label() + ":" + f;
        }
    }
    if (o.pass)
        o.detail = std::to_string(checks) + " named checks true, " + std::to_string(vacuous) +
                   " vacuous where G vanishes";
    else
        o.detail = "failing:" + o.detail;
    return o;
}

Outcome combinatorics() {
    Outcome o;
    std::vector<SchemeParams> all = suite();
    for (const auto& q : std::vector<std::vector<int>>{{3, 2}, {2, 3, 2}})
        for (int n = 1; n <= 3; ++n) all.emplace_back(q, n);
    std::size_t pairs = 0;
    for (const auto& p : all) {
        for (const auto& l : margin_shapes(p))
            for (const auto& u : margin_shapes(p)) {
                ++pairs;
                if (theta_feasible(l, u, p) == theta_enumerate(l, u, p).empty()) {
                    o.pass = false;
                    o.detail += " feasibility " + p.label() + l.to_string() + u.to_string();
                }
            }
        if (theta_total(p) != theta_binomial(p)) {
            o.pass = false;
            o.detail += " theta-count " + p.label();
        }
        if (omega_binomial_condition(p) && omega_set(p).size() != theta_binomial(p)) {
            o.pass = false;
            o.detail += " omega " + p.label();
        }
    }
    const SchemeParams outside({2, 3, 2}, 2);
    const auto omega = omega_set(outside).size();
    const auto binom = theta_binomial(outside);
    if (!(omega < binom)) {
        o.pass = false;
        o.detail += " omega not strict at " + outside.label();
    }
    if (o.pass)
        o.detail = std::to_string(pairs) + " (lambda, mu) pairs; |Omega(" + outside.label() +
                   ")| = " + std::to_string(omega) + " < " + std::to_string(binom);
    return o;
}

Outcome closure_dims() {
    Outcome o;
    const std::vector<std::pair<SchemeParams, std::size_t>> expected{
        {SchemeParams({2}, 1), 4},     {SchemeParams({3}, 1), 5},        {SchemeParams({2, 2}, 1), 10},
        {SchemeParams({2, 3}, 1), 12}, {SchemeParams({2, 2, 2}, 1), 19},
    };
    std::ostringstream d;
    for (const auto& [p, want] : expected) {
        const auto bm = terwilliger_closure(p, Generators::bm);
        const auto idem = terwilliger_closure(p, Generators::idem);
        const auto got = bm.dimension();
        const auto formula = base_case_formula(p);
        d << ' ' << p.label() << '=' << got;
        if (got != want) {
            o.pass = false;
            d << " (expected " << want << ", formula " << formula << ")";
        }
        if (!(bm == idem)) {
            o.pass = false;
            d << " (generator sets differ)";
        }
    }
    o.detail = "measured" + d.str();
    return o;
}

Outcome decomposition() {
    Outcome o;
    std::ostringstream d;
    for (const auto& p : suite()) {
        const auto primary = primary_subalgebra(p);
        if (!primary.passed()) {
            o.pass = false;
            d << ' ' << p.label() << " primary " << primary.dimension;
        }
        if (degenerate_g(p)) continue;
        const auto c = component_dims(p);
        const auto dim_T = terwilliger_closure(p).dimension();
        const auto& top = c.components.back();
        const bool ok = c.pairwise_annihilating && top.commutative &&
                        top.space.dimension() == omega_set(p).size() && c.total_dimension() == dim_T;
        if (!ok) {
            o.pass = false;
            d << ' ' << p.label() << " components";
        }
        d << ' ' << p.label() << '[';
        for (std::size_t i = 0; i < c.components.size(); ++i)
            d << (i ? "+" : "") << c.components[i].space.dimension();
        d << '=' << dim_T << ']';
    }
    o.detail = d.str().substr(1);
    return o;
}

const Prediction* find(const StructureReport& r, const std::string& source) {
    for (const auto& p : r.predictions)
        if (p.source == source) return &p;
    return nullptr;
}

Outcome conflicts() {
    Outcome o;
    std::ostringstream d;
    const auto a = structure_report(SchemeParams({2}, 2));
    const auto* sym = find(a, "sym_power_of_base");
    const auto* block = find(a, "block_sum_uniform_omega");
    const auto* primary = find(a, "primary_only");
    o.pass = a.dim_T == 10 && sym && sym->agrees && block && block->value == 14 && !block->agrees && primary &&
             primary->value == 9 && !primary->agrees;
    d << "X(1,2;2) dim_T=" << a.dim_T;
    if (sym) d << " sym_power=" << sym->value << (sym->agrees ? "(agrees)" : "(disagrees)");
    if (block) d << " block_sum=" << block->value << (block->agrees ? "(agrees)" : "(disagrees)");
    if (primary) d << " primary_only=" << primary->value << (primary->agrees ? "(agrees)" : "(disagrees)");

    const auto b = structure_report(SchemeParams({2, 2}, 2));
    const auto* binom = find(b, "block_sum_binomial");
    const auto* sym2 = find(b, "sym_power_of_base");
    const bool ok_b = binom && sym2 && binom->value == 46 && sym2->value == 55 &&
                      binom->agrees == (binom->value == static_cast<long long>(b.dim_T)) &&
                      sym2->agrees == (sym2->value == static_cast<long long>(b.dim_T));
    o.pass = o.pass && ok_b;
    d << "; X(2,2;2,2) dim_T=" << b.dim_T;
    if (binom) d << " block_sum_binomial=" << binom->value << (binom->agrees ? "(agrees)" : "(disagrees)");
    if (sym2) d << " sym_power=" << sym2->value << (sym2->agrees ? "(agrees)" : "(disagrees)");
    o.detail = d.str();
    return o;
}

Outcome determinism() {
    Outcome o;
    const auto a = cli::run_command({"suite", "--json"});
    const auto b = cli::run_command({"suite", "--json"});
    o.pass = a.exit_code == 0 && b.exit_code == 0 && !a.out.empty() && a.out == b.out;
    o.detail = std::to_string(a.out.size()) + " bytes, " + (a.out == b.out ? "identical" : "different") +
               ", exit " + std::to_string(a.exit_code);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::vector<int> expect_fail;
    app.add_option("--expect-fail", expect_fail, "Criteria known to be unattainable, comma separated")
        ->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"axiom suite", axioms},
        {"construction cross-oracle", construction},
        {"spectral suite", spectral},
        {"identity suite", identities},
        {"combinatorics", combinatorics},
        {"closure dimensions", closure_dims},
        {"decomposition consistency", decomposition},
        {"conflict surfacing", conflicts},
        {"determinism", determinism},
    };

    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) failed.insert(id);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << criteria[i].first << "): "
                  << o.detail << " [" << ms << " ms]" << std::endl;
    }

    const std::set<int> expected(expect_fail.begin(), expect_fail.end());
    std::cout << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass";
    if (!expected.empty()) {
        std::cout << "; expected failures:";
        for (int e : expected) std::cout << ' ' << e;
    }
    std::cout << std::endl;
    if (failed != expected) {
        std::cout << "failing set differs from the expected set" << std::endl;
        return 1;
    }
    return 0;
}
