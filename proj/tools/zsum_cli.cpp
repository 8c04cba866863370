// Command-line front end. JSON is the canonical output; TSV is a flat projection.
#include "zsum/acceptance.hpp"
#include "zsum/algebra.hpp"
#include "zsum/certificate_io.hpp"
#include "zsum/counterexample.hpp"
#include "zsum/cover.hpp"
#include "zsum/davenport.hpp"
#include "zsum/dgk.hpp"
#include "zsum/error.hpp"
#include "zsum/literal.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <omp.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace zsum;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
    std::string group;
    std::optional<std::uint64_t> prime;
    std::optional<std::int64_t> cap;
    std::int64_t max_order = 0; ///< 0 keeps the per-command default
    std::string format = "json";
    int threads = 0;
    double budget_secs = 0.0;
    bool serial = false;
    bool no_timing = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string cell(const json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void emit(const json& doc, const std::string& format)
{
    if (format == "json") {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    const json rows = doc.is_array() ? doc : json::array({doc});
    if (rows.empty()) {
        return;
    }
    std::string header;
    for (const auto& [key, _] : rows.front().items()) {
        header += (header.empty() ? "" : "\t") + key;
    }
    std::cout << header << '\n';
    for (const auto& row : rows) {
        std::string line;
        bool first = true;
        for (const auto& [key, value] : row.items()) {
            line += (first ? "" : "\t") + cell(value);
            first = false;
        }
        std::cout << line << '\n';
    }
}

Group require_group(const RunConfig& cfg)
{
    if (cfg.group.empty()) {
        throw UsageError("--group is required");
    }
    return parse_group(cfg.group);
}

void add_common(CLI::App* sub, RunConfig& cfg, bool wants_group)
{
    if (wants_group) {
        sub->add_option("--group", cfg.group, "invariant factors, e.g. 5,10");
    }
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--threads", cfg.threads, "OpenMP thread count")->check(CLI::PositiveNumber);
    sub->add_option("--budget-secs", cfg.budget_secs, "wall-clock budget in seconds")->check(CLI::PositiveNumber);
}

void add_search(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--cap", cfg.cap, "sequence length cap")->check(CLI::PositiveNumber);
    sub->add_option("--max-order", cfg.max_order, "group order cap")->check(CLI::PositiveNumber);
    sub->add_flag("--serial", cfg.serial, "use the serial reference implementation");
}

json group_info(const RunConfig& cfg)
{
    const Group G = require_group(cfg);
    const StructureStats s = structure_stats(G);
    return {{"group", to_literal(G)}, {"invariants", G.invariants()}, {"order", s.order},
            {"exponent", s.exponent}, {"rank", s.rank},     {"d_star", s.d_star}};
}

json davenport(const RunConfig& cfg, const Budget& budget)
{
    const Group G = require_group(cfg);
    DavenportConfig dc;
    dc.parallel = !cfg.serial;
    if (cfg.max_order > 0) {
        dc.max_order = cfg.max_order;
    }
    const DavenportResult r = cfg.serial ? reference::davenport_d(G, dc.max_order) : davenport_d(G, dc, budget);
    return {{"group", to_literal(G)}, {"d", r.d}, {"witness_sequence", to_literal(r.witness)}, {"d_star", G.d_star()}};
}

json dgk(const RunConfig& cfg, const Budget& budget)
{
    const Group G = require_group(cfg);
    const std::int64_t cap = cfg.cap.value_or(theorem_a_bound(G) + 1);
    DgkConfig dc;
    dc.parallel = !cfg.serial;
    dc.prime = cfg.prime;
    if (cfg.max_order > 0) {
        dc.max_order = cfg.max_order;
    }
    const DgkResult r = cfg.serial ? reference::dgk_brute(G, cap, cfg.prime, budget) : dgk_brute(G, cap, dc, budget);
    return {{"group", to_literal(G)},
            {"prime", r.q},
            {"cap", cap},
            {"d_gk", r.l},
            {"capped", r.l == cap},
            {"witness_sequence", to_literal(r.witness)}};
}

json dgk_bound(const RunConfig& cfg)
{
    const Group G = require_group(cfg);
    if (G.exponent() < 2) {
        throw UsageError("the bound needs exp(G) >= 2");
    }
    return {{"group", to_literal(G)}, {"bound", theorem_a_bound(G)}};
}

json verify_counterexample(const RunConfig& cfg, std::int64_t p, std::int64_t n, const std::string& cert_out,
                           const Budget& budget)
{
    if (!(p == 5 && n == 2) && cfg.budget_secs <= 0.0) {
        throw UsageError("instances other than --p 5 --n 2 need an explicit --budget-secs");
    }
    const CounterexampleSpec spec = CounterexampleSpec::standard(p, n);
    VerifyConfig vc;
    vc.parallel = !cfg.serial;
    const UncoverableReport report =
        cfg.serial ? reference::verify_uncoverable(spec, budget) : verify_uncoverable(spec, vc, budget);
    json doc = uncoverable_certificate_json(spec, report, false);
    if (report.uncoverable) {
        doc["verified"] = recheck_certificate(doc);
    }
    doc["d_star"] = spec.group().d_star();
    if (!cert_out.empty()) {
        std::ofstream(cert_out) << doc.dump(2) << '\n';
    }
    return doc;
}

json dgr(const RunConfig& cfg, const Budget& budget)
{
    const Group G = require_group(cfg);
    if (!cfg.prime) {
        throw UsageError("--prime is required");
    }
    if (!is_prime(*cfg.prime)) {
        throw UsageError("--prime must be prime");
    }
    const PrimeField K(*cfg.prime);
    const std::int64_t cap = cfg.cap.value_or(G.order());
    DgrConfig dc;
    dc.parallel = !cfg.serial;
    if (cfg.max_order > 0) {
        dc.max_order = cfg.max_order;
    }
    const auto start = std::chrono::steady_clock::now();
    const DgrResult r = cfg.serial ? reference::d_gr_brute(G, K, cap, budget) : d_gr_brute(G, K, cap, dc, budget);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    json doc = {{"l", r.l}, {"witness_sequence", to_literal(r.witness)}};
    if (!cfg.no_timing) {
        doc["elapsed_ms"] = ms.count();
    }
    return doc;
}

json cover_exists(const RunConfig& cfg, const std::string& sequence, const std::string& cert_out, const Budget& budget)
{
    const Group G = require_group(cfg);
    const GSequence s = parse_sequence(G, sequence);
    const SplittingField F = make_splitting_field(G, cfg.prime);
    const auto chars = all_characters(F);
    const auto cert = exists_cover(F, chars, s, budget);
    json doc;
    if (cert) {
        doc = cover_certificate_json(*cert, false);
        doc["verified"] = verify_cover(*cert);
    } else {
        // Cross-check with the algebra when the a-vector space is small.
        const double space = std::pow(static_cast<double>(F.field.q() - 1), static_cast<double>(s.length()));
        doc = {{"group", to_literal(G)}, {"prime", F.field.q()}, {"sequence", to_literal(s)}, {"mode", "uncoverable"}};
        if (space <= 2e6) {
            doc["verified"] = !reference::some_binomial_product_vanishes(GroupAlgebra::over(F), s, budget);
            doc["check"] = "a-vector search";
        } else {
            doc["verified"] = false;
            doc["check"] = "skipped: a-vector space too large";
        }
    }
    if (!cert_out.empty()) {
        std::ofstream(cert_out) << doc.dump(2) << '\n';
    }
    return doc;
}

json cover_verify(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    return {{"file", path}, {"mode", doc.value("mode", "")}, {"verified", recheck_certificate(doc)}};
}

std::pair<json, bool> reproduce(const RunConfig& cfg)
{
    json rows = json::array();
    bool all = true;
    run_acceptance({}, [&](const CriterionResult& r) {
        json row = {{"id", r.id}, {"criterion", r.title}, {"status", r.passed ? "PASS" : "FAIL"}};
        if (!cfg.no_timing) {
            row["seconds"] = std::round(r.seconds * 100.0) / 100.0;
        }
        row["detail"] = r.detail;
        rows.push_back(row);
        all = all && r.passed;
        if (cfg.format == "tsv") {
            std::cerr << format_result_line(r) << '\n';
        }
    });
    return {rows, all};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zero-sum invariants of finite abelian groups"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_flag("--no-timing", cfg.no_timing, "omit wall-clock fields so output is byte-stable");

    auto* group = app.add_subcommand("group", "group structure")->require_subcommand(1);
    auto* group_info_cmd = group->add_subcommand("info", "order, exponent, rank, d*");
    add_common(group_info_cmd, cfg, true);

    auto* dav = app.add_subcommand("davenport", "Davenport constant")->require_subcommand(1);
    auto* dav_d = dav->add_subcommand("d", "exact d(G) by exhaustive search");
    add_common(dav_d, cfg, true);
    add_search(dav_d, cfg);
    auto* dav_star = dav->add_subcommand("dstar", "d*(G) = sum (n_i - 1)");
    add_common(dav_star, cfg, true);

    std::int64_t p = 5;
    std::int64_t n = 2;
    std::string cert_out;
    auto* dgk_cmd = app.add_subcommand("dgk", "d(G,K) over a splitting field")->require_subcommand(1);
    auto* dgk_brute_cmd = dgk_cmd->add_subcommand("brute", "exact d(G,K) by coset-cover search");
    add_common(dgk_brute_cmd, cfg, true);
    add_search(dgk_brute_cmd, cfg);
    dgk_brute_cmd->add_option("--prime", cfg.prime, "splitting prime");
    auto* dgk_bound_cmd = dgk_cmd->add_subcommand("bound", "floor((n-1) + n ln(|G|/n)), n = exp(G)");
    add_common(dgk_bound_cmd, cfg, true);
    auto* dgk_ce = dgk_cmd->add_subcommand("verify-counterexample", "certify d(C_p+C_pn, K) > d*");
    add_common(dgk_ce, cfg, false);
    dgk_ce->add_option("--p", p, "prime p >= 5");
    dgk_ce->add_option("--n", n, "n >= 2");
    dgk_ce->add_option("--cert-out", cert_out, "write the certificate JSON here");
    dgk_ce->add_flag("--serial", cfg.serial, "use the serial reference implementation");

    auto* dgr_cmd = app.add_subcommand("dgr", "d(G,F_q) by group-algebra arithmetic")->require_subcommand(1);
    auto* dgr_brute_cmd = dgr_cmd->add_subcommand("brute", "exact d(G,F_q)");
    add_common(dgr_brute_cmd, cfg, true);
    add_search(dgr_brute_cmd, cfg);
    dgr_brute_cmd->add_option("--prime", cfg.prime, "field size q (prime)");

    std::string sequence;
    std::string cert_in;
    auto* cover = app.add_subcommand("cover", "character-coset covers")->require_subcommand(1);
    auto* cover_exists_cmd = cover->add_subcommand("exists", "search for a cover of G^ by chi_i<g_i>-perp");
    add_common(cover_exists_cmd, cfg, true);
    cover_exists_cmd->add_option("--prime", cfg.prime, "splitting prime");
    cover_exists_cmd->add_option("--sequence,--seq", sequence, "sequence literal, e.g. \"1,0x4;0,1x9\"")->required();
    cover_exists_cmd->add_option("--cert-out", cert_out, "write the certificate JSON here");
    auto* cover_verify_cmd = cover->add_subcommand("verify", "re-check a certificate file");
    add_common(cover_verify_cmd, cfg, false);
    cover_verify_cmd->add_option("--cert", cert_in, "certificate JSON")->required();

    auto* paper = app.add_subcommand("paper", "reproduction")->require_subcommand(1);
    auto* paper_reproduce = paper->add_subcommand("reproduce", "run the acceptance suite");
    add_common(paper_reproduce, cfg, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (cfg.threads > 0) {
        omp_set_num_threads(cfg.threads);
    }
    Budget budget;
    if (cfg.budget_secs > 0.0) {
        budget.set_time_limit(std::chrono::duration<double>(cfg.budget_secs));
    }

    try {
        json out;
        int code = 0;
        if (*group_info_cmd) {
            out = group_info(cfg);
        } else if (*dav_d) {
            out = davenport(cfg, budget);
        } else if (*dav_star) {
            const Group G = require_group(cfg);
            out = {{"group", to_literal(G)}, {"d_star", G.d_star()}};
        } else if (*dgk_brute_cmd) {
            out = dgk(cfg, budget);
        } else if (*dgk_bound_cmd) {
            out = dgk_bound(cfg);
        } else if (*dgk_ce) {
            out = verify_counterexample(cfg, p, n, cert_out, budget);
            code = out["uncoverable"].get<bool>() ? 0 : kExitError;
        } else if (*dgr_brute_cmd) {
            out = dgr(cfg, budget);
        } else if (*cover_exists_cmd) {
            out = cover_exists(cfg, sequence, cert_out, budget);
        } else if (*cover_verify_cmd) {
            out = cover_verify(cert_in);
            code = out["verified"].get<bool>() ? 0 : kExitError;
        } else if (*paper_reproduce) {
            bool all = false;
            std::tie(out, all) = reproduce(cfg);
            code = all ? 0 : kExitError;
        }
        emit(out, cfg.format);
        return code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.kind()) {
        case ErrorKind::BudgetExceeded:
            return kExitBudget;
        case ErrorKind::Parse:
        case ErrorKind::NonDivisibilityChain:
        case ErrorKind::NotRank2:
        case ErrorKind::NotSplitting:
        case ErrorKind::GroupTooLarge:
        case ErrorKind::PreconditionViolated:
            return kExitUsage;
        default:
            return kExitError;
        }
    }
}
