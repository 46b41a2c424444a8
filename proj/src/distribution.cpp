#include "ccstats/distribution.hpp"

#include "ccstats/curve.hpp"
#include "ccstats/errors.hpp"
#include "ccstats/parallel.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ccstats {

std::string rv_source_name(RVSource source) {
    switch (source) {
        case RVSource::kFromPsi: return "psi";
        case RVSource::kQuarticWeight: return "quartic-weight";
        case RVSource::kGeneralWeight: return "general-weight";
        case RVSource::kSquarefree: return "squarefree";
        case RVSource::kFixedProfile: return "fixed-profile";
        case RVSource::kPowerFree: return "powerfree";
    }
    return "?";
}

namespace {

int sigma_of(int q, int m) { return static_cast<int>(std::gcd<long long>(m, q - 1)); }

void validate_qm(int q, int m) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (m < 2) throw std::invalid_argument("m must be >= 2");
}

void check_mass_sum(const RVModel& rv) {
    if (rv.p0 + rv.p1 + rv.psigma != 1)
        throw std::logic_error("fiber variable masses do not sum to 1");
    if (rv.p0 < 0 || rv.p1 < 0 || rv.psigma < 0)
        throw std::invalid_argument("fiber variable has a negative mass");
}

/// Shared sigma = 1 rule: every unit is an m-th power, so the value-1 and
/// value-sigma classes coincide; their masses add and p0 = 0.
void merge_if_sigma_one(RVModel& rv) {
    if (rv.sigma == 1) {
        rv.p1 += rv.psigma;
        rv.psigma = 0;
    }
}

RVModel from_denominator(int q, int m, const BigRat& denom, RVSource tag) {
    // display shape: p0 = (1 - 1/sigma)/denom, p1 = (denom - 1)/denom,
    // psigma = (1/sigma)/denom, with psi = (q-1) * denom
    RVModel rv;
    rv.q = q;
    rv.m = m;
    rv.sigma = sigma_of(q, m);
    rv.psi = BigRat(q - 1) * denom;
    const BigRat sigma_inv = BigRat(1, rv.sigma);
    rv.p0 = (1 - sigma_inv) / denom;
    rv.psigma = sigma_inv / denom;
    rv.p1 = (denom - 1) / denom;
    rv.source = tag;
    merge_if_sigma_one(rv);
    check_mass_sum(rv);
    return rv;
}

}  // namespace

RVModel RVModel::from_psi(int q, int m, const BigRat& psi, RVSource tag) {
    validate_qm(q, m);
    if (psi <= 0) throw std::invalid_argument("psi must be positive");
    RVModel rv;
    rv.q = q;
    rv.m = m;
    rv.sigma = sigma_of(q, m);
    rv.psi = psi;
    if (rv.sigma != 1 && psi < q - 1)
        throw std::invalid_argument("psi must be >= q-1 when sigma != 1");
    const BigRat ratio = BigRat(q - 1) / psi;
    const BigRat sigma_inv = BigRat(1, rv.sigma);
    rv.p0 = (1 - sigma_inv) * ratio;
    rv.p1 = 1 - ratio;
    rv.psigma = sigma_inv * ratio;
    rv.source = tag;
    merge_if_sigma_one(rv);
    check_mass_sum(rv);
    return rv;
}

RVModel RVModel::quartic_weight(int q, int m, int N) {
    validate_qm(q, m);
    if (N < 2) throw std::invalid_argument("quartic-weight model requires N >= 2");
    const BigRat denom = 1 + inv_pow(q, 1) + inv_pow(q, N) + inv_pow(q, N + 1);
    return from_denominator(q, m, denom, RVSource::kQuarticWeight);
}

RVModel RVModel::general_weight(int q, int m, const Weight& weight) {
    validate_qm(q, m);
    if (weight.size() == 0 || !weight.all_positive())
        throw std::invalid_argument("general-weight model requires positive weights");
    BigRat denom = 1;
    for (std::size_t i = 0; i < weight.size(); ++i)
        denom += inv_pow(q, static_cast<unsigned>(weight[i]));
    return from_denominator(q, m, denom, RVSource::kGeneralWeight);
}

RVModel RVModel::squarefree_family(int q, int m) {
    validate_qm(q, m);
    return from_psi(q, m, BigRat(q - 1) * (1 + inv_pow(q, 1)), RVSource::kSquarefree);
}

RVModel RVModel::fixed_profile(int q, int m, int l) {
    validate_qm(q, m);
    if (l < 2) throw std::invalid_argument("fixed-profile model requires l >= 2");
    return from_psi(q, m, BigRat(q - 1) * (1 + BigRat(l - 1) * inv_pow(q, 1)),
                    RVSource::kFixedProfile);
}

RVModel RVModel::powerfree_family(int q, int m, int n) {
    validate_qm(q, m);
    if (n < 2) throw std::invalid_argument("power-free model requires n >= 2");
    BigRat series = 0;
    for (int k = 0; k <= n - 1; ++k) series += inv_pow(q, k);
    return from_psi(q, m, BigRat(q - 1) * series, RVSource::kPowerFree);
}

BigRat RVModel::mean() const { return p1 + BigRat(sigma) * psigma; }

DistributionTable DistributionTable::exact(std::map<long long, BigRat> masses) {
    BigRat sum = 0;
    for (auto& [k, mass] : masses) {
        if (mass < 0) throw std::invalid_argument("negative mass");
        sum += mass;
    }
    if (sum != 1) throw std::invalid_argument("exact table masses must sum to 1");
    DistributionTable t;
    t.empirical_ = false;
    t.masses_ = std::move(masses);
    t.total_ = 1;
    return t;
}

DistributionTable DistributionTable::empirical(std::map<long long, BigInt> counts) {
    DistributionTable t;
    t.empirical_ = true;
    for (auto& [k, c] : counts) {
        if (c < 0) throw std::invalid_argument("negative count");
        t.total_ += c;
    }
    t.counts_ = std::move(counts);
    return t;
}

BigRat DistributionTable::mass(long long k) const {
    if (!empirical_) {
        auto it = masses_.find(k);
        return it == masses_.end() ? BigRat(0) : it->second;
    }
    if (total_ == 0) throw std::domain_error("cannot normalize an empty empirical table");
    auto it = counts_.find(k);
    return it == counts_.end() ? BigRat(0) : BigRat(it->second, total_);
}

BigRat DistributionTable::mean() const {
    BigRat acc = 0;
    for (long long k : support()) acc += BigRat(k) * mass(k);
    return acc;
}

std::vector<long long> DistributionTable::support() const {
    std::vector<long long> keys;
    if (empirical_)
        for (auto& [k, c] : counts_) {
            if (c != 0) keys.push_back(k);
        }
    else
        for (auto& [k, mass] : masses_) {
            if (mass != 0) keys.push_back(k);
        }
    return keys;
}

DistributionTable convolve(const RVModel& rv, int copies) {
    if (copies < 0) throw std::invalid_argument("copies must be >= 0");
    std::map<long long, BigRat> acc{{0, BigRat(1)}};
    for (int c = 0; c < copies; ++c) {
        std::map<long long, BigRat> next;
        for (const auto& [k, mass] : acc) {
            if (rv.p0 != 0) next[k] += mass * rv.p0;
            if (rv.p1 != 0) next[k + 1] += mass * rv.p1;
            if (rv.psigma != 0) next[k + rv.sigma] += mass * rv.psigma;
        }
        acc = std::move(next);
    }
    return DistributionTable::exact(std::move(acc));
}

DistributionTable empirical_distribution(const FamilySpec& spec, const PowerClassifier& cls,
                                         int jobs, const Guardrails& limits) {
    if (!spec.field().same_field(cls.field()))
        throw std::invalid_argument("classifier field does not match the family field");
    const Field& fld = spec.field();
    const std::uint32_t q = fld.q();
    const int sigma = static_cast<int>(cls.sigma());
    if (fld.q() > limits.max_q || spec.degree() > limits.max_d)
        throw UnsupportedError("enumeration guardrail exceeded (raise the limits to override)");

    SquarefreeCache cache(fld);
    cache.ensure(spec.degree());
    const auto profiles = list_profiles(spec);
    using Hist = std::vector<BigInt>;
    auto per_stratum = [&](std::size_t i) {
        Hist h(static_cast<std::size_t>(q) * sigma + 1);
        for_each_in_profile(spec, cache, profiles[i], [&](const FamilyMember& member) {
            long long points = 0;
            for (Elem x = 0; x < q; ++x) {
                const Elem v = member.eval(x);
                if (v == 0)
                    points += 1;
                else if (cls.is_mth_power(v))
                    points += sigma;
            }
            ++h[static_cast<std::size_t>(points)];
        });
        return h;
    };
    std::map<long long, BigInt> counts;
    for (auto& h : parallel_indexed_map<Hist>(profiles.size(), jobs, per_stratum))
        for (std::size_t k = 0; k < h.size(); ++k)
            if (h[k] != 0) counts[static_cast<long long>(k)] += h[k];
    return DistributionTable::empirical(std::move(counts));
}

DistributionTable empirical_distribution_mc(const FamilySpec& spec, const PowerClassifier& cls,
                                            const SampleConfig& cfg, const Guardrails& limits) {
    if (!spec.field().same_field(cls.field()))
        throw std::invalid_argument("classifier field does not match the family field");
    std::map<long long, BigInt> counts;
    for (const Poly& f : sample_family(spec, cfg, limits)) {
        CurveSpec curve(f, cls);
        ++counts[count_points(curve)];
    }
    return DistributionTable::empirical(std::move(counts));
}

BigRat total_variation(const DistributionTable& a, const DistributionTable& b) {
    std::vector<long long> keys = a.support();
    for (long long k : b.support()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    BigRat acc = 0;
    for (long long k : keys) {
        const BigRat diff = a.mass(k) - b.mass(k);
        acc += diff < 0 ? -diff : diff;
    }
    return acc / 2;
}

ErrorReport error_sweep(PredictionTheorem theorem, const Field& field, int n,
                        const Weight& weight, const ValueConstraint& vc, int d_from, int d_to,
                        int step, int jobs, const Guardrails& limits) {
    if (step < 1) throw std::invalid_argument("step must be >= 1");
    if (d_from < 0 || d_to < d_from) throw std::invalid_argument("bad degree range");

    // validate the theorem/weight pairing once, independent of d
    {
        FamilySpec probe(field, n, weight, std::max(d_from, n), true);
        if (theorem == PredictionTheorem::kQuarticWeight && !probe.quartic_weight_N())
            throw UnsupportedError("sweep requires n = 4 and weight (1, N, N+1)");
        if (theorem == PredictionTheorem::kPowerFreePlainDegree && !probe.plain_degree_weight())
            throw UnsupportedError("sweep requires the weight (1, 2, ..., n-1)");
    }

    ErrorReport report;
    report.theorem = theorem;
    const double q = field.q();
    const double norm_exp =
        theorem == PredictionTheorem::kQuarticWeight ? 0.5 : 1.0 / static_cast<double>(n);

    for (int d = d_from; d <= d_to; d += step) {
        ErrorRow row;
        row.d = d;
        FamilySpec spec(field, n, weight, d, true);
        const BigInt family_size = count_family(spec, limits);
        if (family_size == 0) {
            row.skipped = true;
            row.skip_reason = "empty family";
            report.rows.push_back(std::move(row));
            continue;
        }
        try {
            row.main_term = predicted_constrained_count(spec, vc.size(), theorem);
        } catch (const UnsupportedError&) {
            row.skipped = true;
            row.skip_reason = "below theorem range";
            report.rows.push_back(std::move(row));
            continue;
        }
        row.count = count_constrained(spec, vc, jobs, limits);
        row.residual = BigRat(row.count) - row.main_term;
        const double res = rat_double(row.residual);
        row.residual_normalized = res / std::pow(q, norm_exp * d);
        row.residual_over_family = res / rat_double(BigRat(family_size));
        report.rows.push_back(std::move(row));
    }

    double max_norm = 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int pts = 0;
    for (const auto& row : report.rows) {
        if (row.skipped) continue;
        max_norm = std::max(max_norm, std::abs(row.residual_normalized));
        if (row.residual != 0) {
            const double y = std::log(std::abs(rat_double(row.residual))) / std::log(q);
            sx += row.d;
            sy += y;
            sxx += static_cast<double>(row.d) * row.d;
            sxy += row.d * y;
            ++pts;
        }
    }
    report.max_normalized_residual = max_norm;
    report.trend_slope =
        pts >= 2 ? (pts * sxy - sx * sy) / (pts * sxx - sx * sx) : 0.0;
    return report;
}

}  // namespace ccstats
