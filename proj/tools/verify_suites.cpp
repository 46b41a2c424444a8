#include "verify_suites.hpp"

#include "ccstats/curve.hpp"
#include "ccstats/distribution.hpp"
#include "ccstats/errors.hpp"
#include "ccstats/family.hpp"
#include "ccstats/zeta.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace ccstats::cli {

namespace {

Field field_from_q(int q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    std::uint32_t p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > static_cast<std::uint32_t>(q)) {
            p = static_cast<std::uint32_t>(q);
            break;
        }
    }
    std::uint32_t e = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return Field::make(p, e);
}

void fail(SuiteResult& result, const std::string& message) {
    result.pass = false;
    if (result.failures.size() < 50) result.failures.push_back(message);
}

void for_each_monic(const Field& field, int d, const std::function<void(const Poly&)>& fn) {
    if (d == 0) {
        fn(Poly::one(field));
        return;
    }
    std::vector<Elem> coeffs(d + 1, 0);
    coeffs[d] = 1;
    std::vector<Elem> digit(d, 0);
    while (true) {
        for (int i = 0; i < d; ++i) coeffs[i] = digit[i];
        fn(Poly(field, coeffs));
        int pos = d - 1;
        while (pos >= 0) {
            if (++digit[pos] < field.q()) break;
            digit[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

// Exhaustive power-free counts against the closed formula.
SuiteResult suite_lemma_count(const SuiteOptions& opts) {
    SuiteResult result;
    result.suite = "lemma-count";
    for (int q : opts.qs) {
        const Field fld = field_from_q(q);
        for (int d = 0; d <= opts.d_max; ++d) {
            std::vector<BigInt> by_bound(opts.ns.size(), 0);
            for_each_monic(fld, d, [&](const Poly& f) {
                const auto parts = squarefree_decompose(f);
                int mult = 0;
                for (const auto& part : parts) mult = std::max(mult, part.multiplicity);
                for (std::size_t i = 0; i < opts.ns.size(); ++i)
                    if (mult < opts.ns[i]) ++by_bound[i];
            });
            for (std::size_t i = 0; i < opts.ns.size(); ++i) {
                ++result.instances;
                const BigInt expected = count_powerfree(fld, d, opts.ns[i]);
                if (by_bound[i] != expected) {
                    std::ostringstream msg;
                    msg << "q=" << q << " n=" << opts.ns[i] << " d=" << d << ": exhaustive "
                        << by_bound[i].str() << " != formula " << expected.str();
                    fail(result, msg.str());
                }
            }
        }
    }
    return result;
}

// Coprime-triple products equal square-free-pair products, and the bijection
// composes to the identity both ways.
SuiteResult suite_key_bijection(const SuiteOptions& opts) {
    SuiteResult result;
    result.suite = "key-bijection";
    for (int q : opts.qs) {
        if (q > 3) continue;  // matches the checked desk-scale range
        const Field fld = field_from_q(q);
        std::vector<std::vector<Poly>> sf(opts.d_max + 1);
        for (int k = 0; k <= opts.d_max; ++k)
            for_each_monic(fld, k, [&](const Poly& f) {
                if (is_squarefree(f)) sf[k].push_back(f);
            });
        for (int N : opts.Ns)
            for (int d = 0; d <= opts.d_max; ++d) {
                std::set<std::vector<Elem>> triples, pairs;
                for (int d3 = 0; (N + 1) * d3 <= d; ++d3)
                    for (int d2 = 0; N * d2 + (N + 1) * d3 <= d; ++d2) {
                        const int d1 = d - N * d2 - (N + 1) * d3;
                        for (const Poly& f3 : sf[d3])
                            for (const Poly& f2 : sf[d2]) {
                                if (!poly_gcd(f2, f3).is_one()) continue;
                                for (const Poly& f1 : sf[d1]) {
                                    if (!poly_gcd(f1, f2).is_one() ||
                                        !poly_gcd(f1, f3).is_one())
                                        continue;
                                    const auto [t1, t2] = key_bijection(f1, f2, f3);
                                    const auto [g1, g2, g3] = key_bijection_inverse(t1, t2);
                                    ++result.instances;
                                    if (g1 != f1 || g2 != f2 || g3 != f3)
                                        fail(result, "round trip failed at q=" +
                                                         std::to_string(q));
                                    triples.insert(
                                        (f1 * f2 * f2 * f3 * f3 * f3).coeffs());
                                }
                            }
                    }
                for (int e = 0; N * e <= d; ++e)
                    for (const Poly& t2 : sf[e])
                        for (const Poly& t1 : sf[d - N * e])
                            pairs.insert((t1 * t2 * t2).coeffs());
                ++result.instances;
                if (triples != pairs) {
                    std::ostringstream msg;
                    msg << "set equality failed at q=" << q << " N=" << N << " d=" << d;
                    fail(result, msg.str());
                }
            }
    }
    return result;
}

// Exact constrained counts against the main term: the residual must stay
// within q^{d/2} (constant 1 at desk scale), and the q=3, N=2, d=4, r=0
// instance must vanish exactly.
SuiteResult suite_theorem_c(const SuiteOptions& opts) {
    SuiteResult result;
    result.suite = "theorem-c";
    Guardrails limits;
    if (opts.unsafe_limits) limits = Guardrails{256, 64, 1'000'000'000};
    for (int q : opts.qs) {
        if (q > 3) continue;  // enumeration stays at desk scale
        const Field fld = field_from_q(q);
        for (int N : opts.Ns) {
            const Weight weight({1, N, N + 1});
            for (int r : opts.rs) {
                if (r > static_cast<int>(fld.q())) continue;
                std::vector<Elem> points, values;
                for (int i = 0; i < r; ++i) {
                    points.push_back(static_cast<Elem>(i));
                    values.push_back(1);
                }
                const ValueConstraint vc =
                    r == 0 ? ValueConstraint{}
                           : ValueConstraint(fld, points, values);
                const auto report = error_sweep(PredictionTheorem::kQuarticWeight, fld, 4,
                                                weight, vc, N, opts.d_max, 1, opts.jobs,
                                                limits);
                for (const auto& row : report.rows) {
                    if (row.skipped) continue;
                    ++result.instances;
                    const double bound = std::pow(static_cast<double>(q), row.d / 2.0);
                    if (std::abs(rat_double(row.residual)) > bound) {
                        std::ostringstream msg;
                        msg << "residual beyond q^{d/2}: q=" << q << " N=" << N
                            << " r=" << r << " d=" << row.d;
                        fail(result, msg.str());
                    }
                    if (q == 3 && N == 2 && r == 0 && row.d == 4 && row.residual != 0)
                        fail(result, "pinned instance q=3 N=2 d=4 r=0 has nonzero residual");
                }
            }
        }
    }
    return result;
}

// Partial sums against the closed forms and the tail bound.
SuiteResult suite_zeta(const SuiteOptions& opts) {
    SuiteResult result;
    result.suite = "zeta";
    for (int q : opts.qs) {
        const Field fld = field_from_q(q);
        for (int t : opts.ts)
            for (int r : opts.rs) {
                if (r > static_cast<int>(fld.q())) continue;
                std::vector<Elem> pts;
                for (int i = 0; i < r; ++i) pts.push_back(static_cast<Elem>(i));
                const BigRat closed =
                    restricted_sqfree_closed(fld, ZetaQuery(fld, t, pts, 0));
                BigRat previous = -1;
                for (int D = 0; D <= opts.D; ++D) {
                    const BigRat partial =
                        restricted_sqfree_partial(fld, ZetaQuery(fld, t, pts, D));
                    const BigRat diff = closed - partial;
                    ++result.instances;
                    if (partial < previous)
                        fail(result, "partial sums not monotone");
                    if (diff < 0 || diff > tail_bound(fld, t, D)) {
                        std::ostringstream msg;
                        msg << "tail bound violated: q=" << q << " t=" << t << " r=" << r
                            << " D=" << D;
                        fail(result, msg.str());
                    }
                    previous = partial;
                }
            }
    }
    return result;
}

// Genus identities: hyperelliptic degrees and the genus-weight relation.
SuiteResult suite_genus(const SuiteOptions& opts) {
    SuiteResult result;
    result.suite = "genus";
    struct Config {
        int q, m, n;
    };
    for (const Config& cfg : {Config{5, 2, 2}, Config{7, 3, 3}, Config{5, 4, 4}}) {
        const Field fld = field_from_q(cfg.q);
        const Weight gw = genus_weight(cfg.m, cfg.n);
        long long outside = 0;
        for (int deg = 1; deg <= opts.deg_max; ++deg)
            for_each_monic(fld, deg, [&](const Poly& f) {
                const auto outcome = powerfree_decompose(f, cfg.n);
                const auto* decomp = std::get_if<PowerFreeDecomposition>(&outcome);
                if (!decomp) return;
                try {
                    const auto report = genus(*decomp, cfg.m, fld);
                    ++result.instances;
                    const long long lhs =
                        2 * report.genus - 2 + cfg.m + std::gcd(cfg.m, f.degree());
                    if (lhs != weighted_degree(*decomp, gw)) {
                        std::ostringstream msg;
                        msg << "genus-weight relation failed: q=" << cfg.q
                            << " m=" << cfg.m << " f=" << f.to_text();
                        fail(result, msg.str());
                    }
                    if (cfg.m == 2 && is_squarefree(f)) {
                        // degree 2g+1 or 2g+2 must reproduce genus g
                        const long long expected = (f.degree() - 1) / 2;
                        ++result.instances;
                        if (report.genus != expected)
                            fail(result, "hyperelliptic genus mismatch at f=" + f.to_text());
                    }
                } catch (const std::domain_error&) {
                    ++outside;
                }
            });
        if (outside > 0)
            result.notes.push_back("q=" + std::to_string(cfg.q) + " m=" +
                                   std::to_string(cfg.m) + ": " + std::to_string(outside) +
                                   " inputs outside the smooth-model regime (skipped)");
    }
    return result;
}

// The two displays for the quartic-weight fiber variable agree, the named
// psi families reproduce their probability tables, and convolution means are
// additive.
SuiteResult suite_rv_consistency(const SuiteOptions& opts) {
    SuiteResult result;
    result.suite = "rv-consistency";
    std::vector<int> prime_powers;
    for (int q = 2; q <= 25; ++q) {
        try {
            field_from_q(q);
            prime_powers.push_back(q);
        } catch (const std::invalid_argument&) {
        }
    }
    for (int q : prime_powers)
        for (int m : opts.ms)
            for (int N = 2; N <= 5; ++N) {
                const RVModel direct = RVModel::quartic_weight(q, m, N);
                const BigRat psi = BigRat(q - 1) * (1 + inv_pow(q, 1) + inv_pow(q, N) +
                                                    inv_pow(q, N + 1));
                const RVModel generic = RVModel::from_psi(q, m, psi);
                ++result.instances;
                if (direct.p0 != generic.p0 || direct.p1 != generic.p1 ||
                    direct.psigma != generic.psigma)
                    fail(result, "psi consistency failed at q=" + std::to_string(q) +
                                     " m=" + std::to_string(m) + " N=" + std::to_string(N));
                if (direct.p0 + direct.p1 + direct.psigma != 1)
                    fail(result, "masses do not sum to 1");
            }

    // the three classical tables
    {
        const RVModel sqfree = RVModel::squarefree_family(5, 2);
        ++result.instances;
        if (sqfree.p0 != BigRat(5, 12) || sqfree.p1 != BigRat(1, 6) || sqfree.psigma != BigRat(5, 12))
            fail(result, "square-free family table mismatch");
        const RVModel cubic = RVModel::powerfree_family(7, 3, 3);
        const BigRat denom = 1 + BigRat(1, 7) + BigRat(1, 49);
        ++result.instances;
        if (cubic.p0 != BigRat(2, 3) / denom ||
            cubic.p1 != (BigRat(1, 7) + BigRat(1, 49)) / denom ||
            cubic.psigma != BigRat(1, 3) / denom)
            fail(result, "power-free family table mismatch");
        const RVModel profile_rv = RVModel::fixed_profile(7, 3, 3);
        const BigRat denom2 = 1 + BigRat(2, 7);
        ++result.instances;
        if (profile_rv.p0 != BigRat(2, 3) / denom2 || profile_rv.p1 != BigRat(2, 7) / denom2 ||
            profile_rv.psigma != BigRat(1, 3) / denom2)
            fail(result, "fixed-profile family table mismatch");
    }

    for (int q : {2, 3, 5})
        for (int m : {2, 3})
            for (int copies : {1, 3, q}) {
                const RVModel rv = RVModel::quartic_weight(q, m, 2);
                ++result.instances;
                if (convolve(rv, copies).mean() != BigRat(copies) * rv.mean())
                    fail(result, "convolution mean not additive");
            }
    return result;
}

// Subset-product expansion identity over all trivial/nontrivial component
// patterns with distinct linear components.
SuiteResult suite_tilde_expand(const SuiteOptions& opts) {
    SuiteResult result;
    result.suite = "tilde-expand";
    (void)opts;
    const Field f7 = Field::make(7, 1);
    static constexpr std::array<unsigned, 7> kSubsets = {0b001, 0b010, 0b100, 0b011,
                                                         0b101, 0b110, 0b111};
    for (unsigned mask = 0; mask < (1u << 7); ++mask) {
        std::array<Poly, 7> comps = {Poly::one(f7), Poly::one(f7), Poly::one(f7),
                                     Poly::one(f7), Poly::one(f7), Poly::one(f7),
                                     Poly::one(f7)};
        for (std::size_t s = 0; s < 7; ++s)
            if (mask & (1u << s)) comps[s] = Poly(f7, {static_cast<Elem>(s), 1});
        for (long long e1 : {0, 1, 2})
            for (long long e2 : {0, 1, 3})
                for (long long e3 : {0, 2}) {
                    const auto exps = tilde_expand({e1, e2, e3}, comps);
                    ++result.instances;
                    for (std::size_t s = 0; s < 7; ++s) {
                        long long expected = 0;
                        if (kSubsets[s] & 1u) expected += e1;
                        if (kSubsets[s] & 2u) expected += e2;
                        if (kSubsets[s] & 4u) expected += e3;
                        if (exps[s] != expected) {
                            fail(result, "exponent mismatch at mask " + std::to_string(mask));
                            break;
                        }
                    }
                }
    }
    // a couple of higher-degree square-free components
    const Poly quad(f7, {1, 0, 1});
    std::array<Poly, 7> comps = {Poly(f7, {0, 1}), quad,          Poly(f7, {1, 1}),
                                 Poly::one(f7),    Poly(f7, {3, 1}), Poly::one(f7),
                                 Poly(f7, {2, 2, 1})};
    ++result.instances;
    const auto exps = tilde_expand({2, 1, 1}, comps);
    if (exps != std::array<long long, 7>{2, 1, 1, 3, 3, 2, 4})
        fail(result, "higher-degree component expansion mismatch");
    return result;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "lemma-count", "key-bijection", "theorem-c",   "zeta",
        "genus",       "rv-consistency", "tilde-expand"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "lemma-count") return suite_lemma_count(opts);
    if (name == "key-bijection") return suite_key_bijection(opts);
    if (name == "theorem-c") return suite_theorem_c(opts);
    if (name == "zeta") return suite_zeta(opts);
    if (name == "genus") return suite_genus(opts);
    if (name == "rv-consistency") return suite_rv_consistency(opts);
    if (name == "tilde-expand") return suite_tilde_expand(opts);
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace ccstats::cli
