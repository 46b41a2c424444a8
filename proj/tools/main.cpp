#include "CLI11.hpp"

#include "ccstats/curve.hpp"
#include "ccstats/distribution.hpp"
#include "ccstats/errors.hpp"
#include "ccstats/family.hpp"
#include "ccstats/zeta.hpp"
#include "report.hpp"
#include "verify_suites.hpp"

#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ccstats::cli {
namespace {

struct CommonOpts {
    std::uint32_t p = 0;
    std::uint32_t e = 1;
    int q = 0;
    std::string format = "json";
    std::string out;
    int jobs = 1;
    bool unsafe = false;
};

void add_output_opts(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out, "output path (default: stdout)");
    cmd->add_option("--jobs", opts.jobs, "worker threads for stratified work");
    cmd->add_flag("--unsafe-limits", opts.unsafe,
                  "lift the q <= 16, d <= 30, samples <= 1e7 guardrails");
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--p", opts.p, "field characteristic (prime)");
    cmd->add_option("--e", opts.e, "field extension degree (with --p)");
    cmd->add_option("--q", opts.q, "field size; sugar for --p when q itself is prime");
    add_output_opts(cmd, opts);
}

Field resolve_field(const CommonOpts& opts) {
    if (opts.q > 0) {
        if (opts.p > 0) {
            std::uint64_t power = 1;
            for (std::uint32_t i = 0; i < opts.e; ++i) power *= opts.p;
            if (power != static_cast<std::uint64_t>(opts.q))
                throw std::invalid_argument("--q does not equal p^e");
            return Field::make(opts.p, opts.e);
        }
        if (!is_prime(static_cast<std::uint32_t>(opts.q)))
            throw std::invalid_argument(
                "--q is accepted only for prime q; give --p and --e for prime powers");
        return Field::make(static_cast<std::uint32_t>(opts.q), 1);
    }
    if (opts.p == 0)
        throw std::invalid_argument("no field given: use --q (prime) or --p/--e");
    return Field::make(opts.p, opts.e);
}

Guardrails resolve_limits(const CommonOpts& opts) {
    if (!opts.unsafe) return Guardrails{};
    return Guardrails{256, 64, 1'000'000'000};
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + " list: " + text);
        }
    if (out.empty()) throw std::invalid_argument(std::string("empty ") + what + " list");
    return out;
}

struct DegreeRange {
    int from = 0;
    int to = 0;
};

DegreeRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int d = std::stoi(text);
            return {d, d};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad degree range: " + text);
    }
}

std::vector<Elem> parse_elems(const std::string& text, const Field& field, const char* what) {
    std::vector<Elem> out;
    for (int v : parse_int_list(text, what)) {
        if (v < 0 || static_cast<std::uint32_t>(v) >= field.q())
            throw std::invalid_argument(std::string(what) + " out of range for the field");
        out.push_back(static_cast<Elem>(v));
    }
    return out;
}

json poly_json(const Poly& f) {
    json coeffs = json::array();
    for (Elem c : f.coeffs()) coeffs.push_back(c);
    return json{{"coeffs", coeffs}};
}

/// Family description in its wire schema; d < 0 means "per row" (sweeps).
json family_json(const Field& field, int n, const Weight& weight, int d, bool monic) {
    json out{{"p", field.p()},
             {"e", field.e()},
             {"n", n},
             {"c", weight.entries()},
             {"monic", monic}};
    if (d >= 0) out["d"] = d;
    return out;
}

json constraint_json(const ValueConstraint& vc) {
    return json{{"points", vc.points}, {"values", vc.values}};
}

void emit_json(OutputTarget& target, const json& doc) {
    target.stream() << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------- count ----

struct CountOpts {
    CommonOpts common;
    int n = 4;
    std::string weights;
    std::string d_range;
    int step = 1;
    std::string points, values;
    bool hat = false;
    std::string theorem = "auto";
};

int run_count(const CountOpts& opt) {
    const Field field = resolve_field(opt.common);
    const Guardrails limits = resolve_limits(opt.common);
    const Weight weight = opt.weights.empty()
                              ? Weight::plain(opt.n)
                              : Weight(parse_int_list(opt.weights, "weights"));
    const DegreeRange range = parse_range(opt.d_range);

    ValueConstraint vc;
    if (!opt.points.empty() || !opt.values.empty()) {
        if (opt.points.empty() || opt.values.empty())
            throw std::invalid_argument("--points and --values must be given together");
        vc = ValueConstraint(field, parse_elems(opt.points, field, "points"),
                             parse_elems(opt.values, field, "values"));
    }

    // pick the prediction route
    std::optional<PredictionTheorem> theorem;
    {
        FamilySpec probe(field, opt.n, weight, std::max(range.from, 0), !opt.hat);
        if (opt.theorem == "theorem-c") {
            if (!probe.quartic_weight_N())
                throw UnsupportedError("theorem-c needs n = 4 and weight (1, N, N+1)");
            theorem = PredictionTheorem::kQuarticWeight;
        } else if (opt.theorem == "nfree") {
            if (!probe.plain_degree_weight())
                throw UnsupportedError("nfree needs the weight (1, 2, ..., n-1)");
            theorem = PredictionTheorem::kPowerFreePlainDegree;
        } else if (opt.theorem == "auto") {
            if (probe.quartic_weight_N())
                theorem = PredictionTheorem::kQuarticWeight;
            else if (probe.plain_degree_weight())
                theorem = PredictionTheorem::kPowerFreePlainDegree;
        } else if (opt.theorem != "none") {
            throw std::invalid_argument("unknown --theorem: " + opt.theorem);
        }
    }

    struct Row {
        int d;
        bool skipped = false;
        std::string reason;
        BigInt count;
        std::optional<BigRat> main, residual;
        double norm = 0, over_family = 0;
    };
    std::vector<Row> rows;
    for (int d = range.from; d <= range.to; d += opt.step) {
        Row row;
        row.d = d;
        FamilySpec spec(field, opt.n, weight, d, !opt.hat);
        row.count = count_constrained(spec, vc, opt.common.jobs, limits);
        if (theorem) {
            try {
                row.main = predicted_constrained_count(spec, vc.size(), *theorem);
                row.residual = BigRat(row.count) - *row.main;
                const double exponent = *theorem == PredictionTheorem::kQuarticWeight
                                            ? d / 2.0
                                            : static_cast<double>(d) / opt.n;
                row.norm = rat_double(*row.residual) /
                           std::pow(static_cast<double>(field.q()), exponent);
                const BigInt size = count_family(spec, limits);
                row.over_family =
                    size == 0 ? 0.0 : rat_double(*row.residual / BigRat(size));
            } catch (const UnsupportedError& err) {
                row.reason = err.what();
            }
        }
        rows.push_back(std::move(row));
    }

    OutputTarget target(opt.common.out);
    const char* theorem_name = !theorem ? "none"
                               : *theorem == PredictionTheorem::kQuarticWeight ? "theorem-c"
                                                                               : "nfree";
    if (opt.common.format == "json") {
        json jrows = json::array();
        for (const auto& row : rows) {
            json r{{"d", row.d}, {"count", row.count.str()}};
            if (row.main) {
                r["main"] = rat_json(*row.main);
                r["residual"] = rat_json(*row.residual);
                r["residual_normalized"] = row.norm;
                r["residual_over_family"] = row.over_family;
            } else if (!row.reason.empty()) {
                r["main_skipped"] = row.reason;
            }
            jrows.push_back(std::move(r));
        }
        emit_json(target,
                  json{{"command", "count"},
                       {"field", field_json(field)},
                       {"family", family_json(field, opt.n, weight,
                                              range.from == range.to ? range.from : -1,
                                              !opt.hat)},
                       {"constraints", constraint_json(vc)},
                       {"theorem", theorem_name},
                       {"rows", jrows}});
    } else {
        auto& out = target.stream();
        csv_row(out, {"d", "count", "main", "residual", "residual_normalized",
                      "residual_over_family"});
        for (const auto& row : rows) {
            if (row.main)
                csv_row(out, {std::to_string(row.d), row.count.str(), csv_rat(*row.main),
                              csv_rat(*row.residual), fmt_double(row.norm),
                              fmt_double(row.over_family)});
            else
                csv_row(out, {std::to_string(row.d), row.count.str(), "", "", "", ""});
        }
    }
    return 0;
}

// ----------------------------------------------------- enumerate / sample ----

struct EnumerateOpts {
    CommonOpts common;
    int n = 4;
    std::string weights;
    int d = 0;
    bool hat = false;
};

int run_enumerate(const EnumerateOpts& opt) {
    const Field field = resolve_field(opt.common);
    const Weight weight = opt.weights.empty()
                              ? Weight::plain(opt.n)
                              : Weight(parse_int_list(opt.weights, "weights"));
    const FamilySpec spec(field, opt.n, weight, opt.d, !opt.hat);
    const auto members = enumerate_family(spec, resolve_limits(opt.common));

    OutputTarget target(opt.common.out);
    if (opt.common.format == "json") {
        json jmembers = json::array();
        for (const Poly& f : members) jmembers.push_back(poly_json(f));
        emit_json(target, json{{"command", "enumerate"},
                               {"field", field_json(field)},
                               {"family", family_json(field, opt.n, weight, opt.d, !opt.hat)},
                               {"count", members.size()},
                               {"members", jmembers}});
    } else {
        auto& out = target.stream();
        csv_row(out, {"coeffs"});
        for (const Poly& f : members) csv_row(out, {f.to_text()});
    }
    return 0;
}

struct SampleOpts {
    CommonOpts common;
    int n = 4;
    std::string weights;
    int d = 0;
    bool hat = false;
    long long count = 0;
    std::uint64_t seed = 0;
};

int run_sample(const SampleOpts& opt) {
    const Field field = resolve_field(opt.common);
    const Weight weight = opt.weights.empty()
                              ? Weight::plain(opt.n)
                              : Weight(parse_int_list(opt.weights, "weights"));
    const FamilySpec spec(field, opt.n, weight, opt.d, !opt.hat);
    SampleConfig cfg;
    cfg.count = opt.count;
    cfg.seed = opt.seed;
    cfg.jobs = opt.common.jobs;
    const auto members = sample_family(spec, cfg, resolve_limits(opt.common));

    OutputTarget target(opt.common.out);
    if (opt.common.format == "json") {
        json jmembers = json::array();
        for (const Poly& f : members) jmembers.push_back(poly_json(f));
        emit_json(target, json{{"command", "sample"},
                               {"field", field_json(field)},
                               {"family", family_json(field, opt.n, weight, opt.d, !opt.hat)},
                               {"seed", opt.seed},
                               {"samples", members.size()},
                               {"members", jmembers}});
    } else {
        auto& out = target.stream();
        csv_row(out, {"coeffs"});
        for (const Poly& f : members) csv_row(out, {f.to_text()});
    }
    return 0;
}

// ------------------------------------------------------------------ dist ----

struct DistOpts {
    CommonOpts common;
    int m = 2;
    int n = 4;
    std::string weights;
    std::string d_range;
    int step = 1;
    std::string mode = "exhaustive";
    long long samples = 0;
    std::uint64_t seed = 0;
};

int run_dist(const DistOpts& opt) {
    const Field field = resolve_field(opt.common);
    const Guardrails limits = resolve_limits(opt.common);
    const Weight weight = opt.weights.empty()
                              ? Weight::plain(opt.n)
                              : Weight(parse_int_list(opt.weights, "weights"));
    const DegreeRange range = parse_range(opt.d_range);
    const PowerClassifier classifier(field, static_cast<std::uint32_t>(opt.m));

    // limit law of the fiber-sum: quartic display when the weight matches,
    // general-weight display otherwise
    FamilySpec probe(field, opt.n, weight, std::max(range.from, 0), true);
    const RVModel limit_rv =
        probe.quartic_weight_N()
            ? RVModel::quartic_weight(static_cast<int>(field.q()), opt.m,
                                      *probe.quartic_weight_N())
            : RVModel::general_weight(static_cast<int>(field.q()), opt.m, weight);
    const DistributionTable limit = convolve(limit_rv, static_cast<int>(field.q()));

    struct Row {
        int d;
        DistributionTable empirical;
        BigRat tv;
    };
    std::vector<Row> rows;
    for (int d = range.from; d <= range.to; d += opt.step) {
        const FamilySpec spec(field, opt.n, weight, d, true);
        DistributionTable table = [&] {
            if (opt.mode == "mc") {
                SampleConfig cfg;
                cfg.count = opt.samples;
                cfg.seed = opt.seed;
                cfg.jobs = opt.common.jobs;
                return empirical_distribution_mc(spec, classifier, cfg, limits);
            }
            return empirical_distribution(spec, classifier, opt.common.jobs, limits);
        }();
        BigRat tv = table.total() == 0 ? BigRat(-1) : total_variation(table, limit);
        rows.push_back({d, std::move(table), std::move(tv)});
    }

    OutputTarget target(opt.common.out);
    if (opt.common.format == "json") {
        json jrows = json::array();
        for (const auto& row : rows) {
            json r{{"d", row.d}, {"empirical", table_json(row.empirical)}};
            if (row.tv >= 0)
                r["tv"] = rat_json(row.tv);
            else
                r["empty_family"] = true;
            jrows.push_back(std::move(r));
        }
        emit_json(target,
                  json{{"command", "dist"},
                       {"field", field_json(field)},
                       {"family", family_json(field, opt.n, weight,
                                              range.from == range.to ? range.from : -1,
                                              true)},
                       {"m", opt.m},
                       {"mode", opt.mode},
                       {"seed", opt.seed},
                       {"sigma", classifier.sigma()},
                       {"limit", table_json(limit)},
                       {"limit_source", rv_source_name(limit_rv.source)},
                       {"rows", jrows}});
    } else {
        auto& out = target.stream();
        csv_row(out, {"d", "k", "count", "total", "freq", "freq_float", "limit", "limit_float",
                      "tv", "tv_float"});
        for (const auto& row : rows) {
            std::vector<long long> keys = row.empirical.support();
            for (long long k : limit.support()) keys.push_back(k);
            std::sort(keys.begin(), keys.end());
            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
            for (long long k : keys) {
                const bool empty = row.tv < 0;
                BigInt count = 0;
                if (auto it = row.empirical.counts().find(k);
                    it != row.empirical.counts().end())
                    count = it->second;
                const BigRat freq = empty ? BigRat(0) : row.empirical.mass(k);
                const BigRat lim = limit.mass(k);
                csv_row(out, {std::to_string(row.d), std::to_string(k), count.str(),
                              row.empirical.total().str(), csv_rat(freq),
                              fmt_double(rat_double(freq)), csv_rat(lim),
                              fmt_double(rat_double(lim)),
                              empty ? "" : csv_rat(row.tv),
                              empty ? "" : fmt_double(rat_double(row.tv))});
            }
        }
    }
    return 0;
}

// ----------------------------------------------------------------- genus ----

struct GenusOpts {
    CommonOpts common;
    int m = 2;
    int n = 0;  // 0: default to m
    std::string poly;
    bool sweep = false;
    int deg_max = 6;
};

int run_genus(const GenusOpts& opt) {
    const Field field = resolve_field(opt.common);
    const int n = opt.n > 0 ? opt.n : opt.m;
    OutputTarget target(opt.common.out);

    if (!opt.sweep) {
        if (opt.poly.empty())
            throw std::invalid_argument("give --poly or --sweep");
        const Poly f = Poly::from_text(field, opt.poly);
        if (f.degree() < 1)
            throw std::invalid_argument("genus requires a nonconstant polynomial");
        const auto outcome = powerfree_decompose(f, n);
        if (const auto* not_free = std::get_if<NotPowerFree>(&outcome))
            throw std::invalid_argument(
                "polynomial has the factor (" + not_free->factor.to_text() +
                ") with multiplicity " + std::to_string(not_free->multiplicity) +
                " >= " + std::to_string(n));
        const auto& decomp = std::get<PowerFreeDecomposition>(outcome);
        const auto report = genus(decomp, opt.m, field);
        json branches = json::array();
        for (const auto& row : report.branch_data)
            branches.push_back(json{{"j", row.multiplicity},
                                    {"deg", row.part_degree},
                                    {"contribution", row.contribution}});
        if (opt.common.format == "json") {
            emit_json(target,
                      json{{"command", "genus"},
                           {"field", field_json(field)},
                           {"m", opt.m},
                           {"n", n},
                           {"poly", poly_json(f)},
                           {"genus", report.genus},
                           {"coprime_characteristic", report.coprime_characteristic},
                           {"residue_condition", report.residue_condition},
                           {"valid_hypotheses", report.valid_hypotheses},
                           {"degree", report.poly_degree},
                           {"infinity_term", report.infinity_term},
                           {"branch_data", branches}});
        } else {
            auto& out = target.stream();
            csv_row(out, {"poly", "degree", "genus", "valid_hypotheses", "infinity_term",
                          "branch_data"});
            std::string branch_text;
            for (const auto& row : report.branch_data) {
                if (!branch_text.empty()) branch_text += ';';
                branch_text += std::to_string(row.multiplicity) + ':' +
                               std::to_string(row.part_degree) + ':' +
                               std::to_string(row.contribution);
            }
            csv_row(out, {f.to_text(), std::to_string(report.poly_degree),
                          std::to_string(report.genus),
                          report.valid_hypotheses ? "true" : "false",
                          std::to_string(report.infinity_term), branch_text});
        }
        return 0;
    }

    // sweep mode: every monic n-th-power-free f up to the degree cap
    const Weight gw = genus_weight(opt.m, n);
    struct Row {
        std::string poly;
        int degree;
        long long genus = 0;
        long long weighted = 0;
        bool relation_ok = false;
        bool outside_regime = false;
    };
    std::vector<Row> rows;
    for (int d = 1; d <= opt.deg_max; ++d) {
        std::vector<Elem> coeffs(d + 1, 0);
        coeffs[d] = 1;
        std::vector<Elem> digit(d, 0);
        while (true) {
            for (int i = 0; i < d; ++i) coeffs[i] = digit[i];
            const Poly f(field, coeffs);
            const auto outcome = powerfree_decompose(f, n);
            if (const auto* decomp = std::get_if<PowerFreeDecomposition>(&outcome)) {
                Row row;
                row.poly = f.to_text();
                row.degree = d;
                row.weighted = weighted_degree(*decomp, gw);
                try {
                    const auto report = genus(*decomp, opt.m, field);
                    row.genus = report.genus;
                    row.relation_ok =
                        2 * report.genus - 2 + opt.m + std::gcd<long long>(opt.m, d) ==
                        row.weighted;
                } catch (const std::domain_error&) {
                    row.outside_regime = true;
                }
                rows.push_back(std::move(row));
            }
            int pos = d - 1;
            while (pos >= 0) {
                if (++digit[pos] < field.q()) break;
                digit[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }

    bool all_ok = true;
    long long outside = 0;
    for (const auto& row : rows) {
        if (row.outside_regime)
            ++outside;
        else if (!row.relation_ok)
            all_ok = false;
    }

    if (opt.common.format == "json") {
        json jrows = json::array();
        for (const auto& row : rows) {
            json r{{"poly", row.poly}, {"degree", row.degree},
                   {"weighted_degree", row.weighted}};
            if (row.outside_regime)
                r["outside_regime"] = true;
            else {
                r["genus"] = row.genus;
                r["relation_ok"] = row.relation_ok;
            }
            jrows.push_back(std::move(r));
        }
        emit_json(target, json{{"command", "genus-sweep"},
                               {"field", field_json(field)},
                               {"m", opt.m},
                               {"n", n},
                               {"genus_weight", gw.entries()},
                               {"relation_holds_on_every_row", all_ok},
                               {"outside_regime_count", outside},
                               {"rows", jrows}});
    } else {
        auto& out = target.stream();
        csv_row(out, {"poly", "degree", "genus", "weighted_degree", "relation_ok"});
        for (const auto& row : rows)
            csv_row(out, {row.poly, std::to_string(row.degree),
                          row.outside_regime ? "outside-regime" : std::to_string(row.genus),
                          std::to_string(row.weighted),
                          row.outside_regime ? "" : (row.relation_ok ? "true" : "false")});
    }
    return all_ok ? 0 : 1;
}

// ------------------------------------------------------------------ zeta ----

struct ZetaOpts {
    CommonOpts common;
    int t = 2;
    int r = 0;
    std::string points;
    int D = 10;
};

int run_zeta(const ZetaOpts& opt) {
    const Field field = resolve_field(opt.common);
    if (opt.r < 0) throw std::invalid_argument("--r must be >= 0");
    std::vector<Elem> excluded;
    if (!opt.points.empty())
        excluded = parse_elems(opt.points, field, "points");
    else
        for (int i = 0; i < opt.r; ++i) excluded.push_back(static_cast<Elem>(i));

    const BigRat closed = restricted_sqfree_closed(field, ZetaQuery(field, opt.t, excluded, 0));
    struct Row {
        int D;
        BigRat partial, diff, bound;
    };
    std::vector<Row> rows;
    for (int D = 0; D <= opt.D; ++D) {
        const BigRat partial =
            restricted_sqfree_partial(field, ZetaQuery(field, opt.t, excluded, D));
        BigRat diff = closed - partial;
        if (diff < 0) diff = -diff;
        rows.push_back({D, partial, diff, tail_bound(field, opt.t, D)});
    }

    OutputTarget target(opt.common.out);
    if (opt.common.format == "json") {
        json jrows = json::array();
        for (const auto& row : rows)
            jrows.push_back(json{{"D", row.D},
                                 {"partial", rat_json(row.partial)},
                                 {"closed", rat_json(closed)},
                                 {"abs_diff", rat_json(row.diff)},
                                 {"bound", rat_json(row.bound)}});
        emit_json(target, json{{"command", "zeta"},
                               {"field", field_json(field)},
                               {"t", opt.t},
                               {"r", excluded.size()},
                               {"zeta_closed", rat_json(zeta_closed(field, opt.t))},
                               {"rows", jrows}});
    } else {
        auto& out = target.stream();
        csv_row(out, {"D", "partial", "closed", "abs_diff", "bound"});
        for (const auto& row : rows)
            csv_row(out, {std::to_string(row.D), csv_rat(row.partial), csv_rat(closed),
                          csv_rat(row.diff), csv_rat(row.bound)});
    }
    return 0;
}

// ---------------------------------------------------------------- verify ----

struct VerifyOpts {
    CommonOpts common;
    std::string suite;
    std::string qs, ns, Ns, ts, rs, ms;
    int d_max = 8;
    int deg_max = 6;
    int D = 30;
};

int run_verify(const VerifyOpts& opt) {
    SuiteOptions sopts;
    if (!opt.qs.empty()) sopts.qs = parse_int_list(opt.qs, "q");
    if (!opt.ns.empty()) sopts.ns = parse_int_list(opt.ns, "n");
    if (!opt.Ns.empty()) sopts.Ns = parse_int_list(opt.Ns, "N");
    if (!opt.ts.empty()) sopts.ts = parse_int_list(opt.ts, "t");
    if (!opt.rs.empty()) sopts.rs = parse_int_list(opt.rs, "r");
    if (!opt.ms.empty()) sopts.ms = parse_int_list(opt.ms, "m");
    sopts.d_max = opt.d_max;
    sopts.deg_max = opt.deg_max;
    sopts.D = opt.D;
    sopts.jobs = opt.common.jobs;
    sopts.unsafe_limits = opt.common.unsafe;

    std::vector<std::string> to_run;
    if (opt.suite == "all")
        to_run = suite_names();
    else
        to_run.push_back(opt.suite);

    std::vector<SuiteResult> results;
    bool all_pass = true;
    for (const auto& name : to_run) {
        results.push_back(run_suite(name, sopts));
        all_pass = all_pass && results.back().pass;
    }

    OutputTarget target(opt.common.out);
    if (opt.common.format == "json") {
        json jresults = json::array();
        for (const auto& res : results)
            jresults.push_back(json{{"suite", res.suite},
                                    {"pass", res.pass},
                                    {"instances", res.instances},
                                    {"failures", res.failures},
                                    {"notes", res.notes}});
        emit_json(target, json{{"command", "verify"}, {"results", jresults},
                               {"pass", all_pass}});
    } else {
        auto& out = target.stream();
        csv_row(out, {"suite", "pass", "instances", "failures"});
        for (const auto& res : results) {
            std::string failures;
            for (const auto& f : res.failures) {
                if (!failures.empty()) failures += "; ";
                failures += f;
            }
            csv_row(out, {res.suite, res.pass ? "true" : "false",
                          std::to_string(res.instances), failures});
        }
    }
    return all_pass ? 0 : 1;
}

int dispatch(int argc, char** argv) {
    int exit_code = 0;
    CLI::App app{"exact point-count statistics for affine cyclic covers y^m = f(x) "
                 "over small finite fields"};
    app.require_subcommand(1);

    CountOpts count_opts;
    auto* count = app.add_subcommand(
        "count", "families: exact counts, constrained counts, main terms, residuals");
    add_common(count, count_opts.common);
    count->add_option("--n", count_opts.n, "power-free bound");
    count->add_option("--weights", count_opts.weights, "weight vector c_1,...,c_{n-1}");
    count->add_option("--d", count_opts.d_range, "weighted degree, or a sweep a..b")
        ->required();
    count->add_option("--step", count_opts.step, "sweep step");
    count->add_option("--points", count_opts.points, "constraint points x_1,...,x_r");
    count->add_option("--values", count_opts.values, "constraint unit values a_1,...,a_r");
    count->add_flag("--hat", count_opts.hat, "drop the monic restriction");
    count->add_option("--theorem", count_opts.theorem,
                      "main-term source: auto|theorem-c|nfree|none");
    count->callback([&] { exit_code = run_count(count_opts); });

    EnumerateOpts enum_opts;
    auto* enumerate = app.add_subcommand("enumerate", "list every family member");
    add_common(enumerate, enum_opts.common);
    enumerate->add_option("--n", enum_opts.n, "power-free bound");
    enumerate->add_option("--weights", enum_opts.weights, "weight vector");
    enumerate->add_option("--d", enum_opts.d, "weighted degree")->required();
    enumerate->add_flag("--hat", enum_opts.hat, "drop the monic restriction");
    enumerate->callback([&] { exit_code = run_enumerate(enum_opts); });

    SampleOpts sample_opts;
    auto* sample = app.add_subcommand("sample", "draw uniform family members");
    add_common(sample, sample_opts.common);
    sample->add_option("--n", sample_opts.n, "power-free bound");
    sample->add_option("--weights", sample_opts.weights, "weight vector");
    sample->add_option("--d", sample_opts.d, "weighted degree")->required();
    sample->add_flag("--hat", sample_opts.hat, "drop the monic restriction");
    sample->add_option("--samples", sample_opts.count, "number of draws")->required();
    sample->add_option("--seed", sample_opts.seed, "PRNG seed");
    sample->callback([&] { exit_code = run_sample(sample_opts); });

    DistOpts dist_opts;
    auto* dist = app.add_subcommand(
        "dist", "empirical point-count distribution vs the limit law");
    add_common(dist, dist_opts.common);
    dist->add_option("--m", dist_opts.m, "cover exponent")->required();
    dist->add_option("--n", dist_opts.n, "power-free bound");
    dist->add_option("--weights", dist_opts.weights, "weight vector");
    dist->add_option("--d", dist_opts.d_range, "weighted degree, or a sweep a..b")
        ->required();
    dist->add_option("--step", dist_opts.step, "sweep step");
    dist->add_option("--mode", dist_opts.mode, "exhaustive or mc")
        ->check(CLI::IsMember({"exhaustive", "mc"}));
    dist->add_option("--samples", dist_opts.samples, "draws in mc mode");
    dist->add_option("--seed", dist_opts.seed, "PRNG seed for mc mode");
    dist->callback([&] { exit_code = run_dist(dist_opts); });

    GenusOpts genus_opts;
    auto* genus_cmd = app.add_subcommand("genus", "genus reports and genus-weight sweeps");
    add_common(genus_cmd, genus_opts.common);
    genus_cmd->add_option("--m", genus_opts.m, "cover exponent")->required();
    genus_cmd->add_option("--n", genus_opts.n, "power-free bound (default: m)");
    genus_cmd->add_option("--poly", genus_opts.poly, "ascending coefficients c0,c1,...");
    genus_cmd->add_flag("--sweep", genus_opts.sweep, "sweep all power-free f");
    genus_cmd->add_option("--deg-max", genus_opts.deg_max, "sweep degree cap");
    genus_cmd->callback([&] { exit_code = run_genus(genus_opts); });

    ZetaOpts zeta_opts;
    auto* zeta = app.add_subcommand(
        "zeta", "restricted square-free sums: partials vs closed form vs tail bound");
    add_common(zeta, zeta_opts.common);
    zeta->add_option("--t", zeta_opts.t, "evaluation exponent (>= 2)");
    zeta->add_option("--r", zeta_opts.r, "number of excluded points (defaults 0,1,...)");
    zeta->add_option("--points", zeta_opts.points, "explicit excluded points");
    zeta->add_option("--D", zeta_opts.D, "maximum truncation degree");
    zeta->callback([&] { exit_code = run_zeta(zeta_opts); });

    VerifyOpts verify_opts;
    auto* verify = app.add_subcommand("verify", "run an invariant suite over given ranges");
    add_output_opts(verify, verify_opts.common);
    verify
        ->add_option("suite", verify_opts.suite,
                     "lemma-count|key-bijection|theorem-c|zeta|genus|rv-consistency|"
                     "tilde-expand|all")
        ->required();
    verify->add_option("--q", verify_opts.qs, "field sizes (prime powers), comma list");
    verify->add_option("--n", verify_opts.ns, "power-free bounds, comma list");
    verify->add_option("--N", verify_opts.Ns, "quartic weight parameters, comma list");
    verify->add_option("--t", verify_opts.ts, "zeta exponents, comma list");
    verify->add_option("--r", verify_opts.rs, "exclusion counts, comma list");
    verify->add_option("--m", verify_opts.ms, "cover exponents, comma list");
    verify->add_option("--d-max", verify_opts.d_max, "degree cap");
    verify->add_option("--deg-max", verify_opts.deg_max, "genus sweep degree cap");
    verify->add_option("--D", verify_opts.D, "zeta truncation cap");
    verify->callback([&] { exit_code = run_verify(verify_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::CallForAllHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;  // usage errors map to exit code 2
    }
    return exit_code;
}

}  // namespace
}  // namespace ccstats::cli

int main(int argc, char** argv) {
    try {
        return ccstats::cli::dispatch(argc, argv);
    } catch (const ccstats::UnsupportedError& err) {
        std::cerr << "unsupported request: " << err.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << '\n';
        return 1;
    }
}
