#pragma once

#include "ccstats/bigint.hpp"
#include "ccstats/family.hpp"

#include <map>
#include <string>
#include <vector>

namespace ccstats {

enum class RVSource {
    kFromPsi,         // generic fiber variable built from a normalizer psi
    kQuarticWeight,   // weight (1, N, N+1) limit
    kGeneralWeight,   // conjectural general-weight limit
    kSquarefree,      // square-free family, psi = (q-1)(1 + q^{-1})
    kFixedProfile,    // fixed part degrees, psi = (q-1)(1 + (l-1) q^{-1})
    kPowerFree,       // degree-d n-th-power-free, psi = (q-1)(1 + ... + q^{-(n-1)})
};

std::string rv_source_name(RVSource source);

/// The per-fiber limit variable: values {0, 1, sigma} with exact rational
/// masses. When sigma = 1 the value-1 and value-sigma classes merge (p0 = 0
/// and the whole mass sits at 1).
struct RVModel {
    int q = 0;
    int m = 0;
    int sigma = 1;
    BigRat psi;
    BigRat p0, p1, psigma;
    RVSource source = RVSource::kFromPsi;

    /// Built straight from the generic display: p0 = (1-1/sigma)(q-1)/psi,
    /// p1 = 1 - (q-1)/psi, psigma = (1/sigma)(q-1)/psi.
    static RVModel from_psi(int q, int m, const BigRat& psi, RVSource tag = RVSource::kFromPsi);
    /// Built from its own display over the denominator
    /// 1 + q^{-1} + q^{-N} + q^{-(N+1)}; N >= 2.
    static RVModel quartic_weight(int q, int m, int N);
    /// Built from its own display over 1 + q^{-c_1} + ... + q^{-c_{n-1}}.
    static RVModel general_weight(int q, int m, const Weight& weight);
    static RVModel squarefree_family(int q, int m);
    static RVModel fixed_profile(int q, int m, int l);
    static RVModel powerfree_family(int q, int m, int n);

    BigRat mean() const;
};

/// Exact distribution table: rational masses for theoretical laws, integer
/// counts plus a total for empirical histograms.
class DistributionTable {
public:
    static DistributionTable exact(std::map<long long, BigRat> masses);
    static DistributionTable empirical(std::map<long long, BigInt> counts);

    bool is_empirical() const { return empirical_; }
    const std::map<long long, BigRat>& masses() const { return masses_; }
    const std::map<long long, BigInt>& counts() const { return counts_; }
    const BigInt& total() const { return total_; }

    /// Normalized mass at k (counts / total for empirical tables).
    BigRat mass(long long k) const;
    BigRat mean() const;
    std::vector<long long> support() const;

private:
    bool empirical_ = false;
    std::map<long long, BigRat> masses_;
    std::map<long long, BigInt> counts_;
    BigInt total_ = 0;
};

/// Exact law of the sum of `copies` i.i.d. draws of the variable.
DistributionTable convolve(const RVModel& rv, int copies);

/// Exhaustive histogram of affine point counts over the family.
DistributionTable empirical_distribution(const FamilySpec& spec, const PowerClassifier& cls,
                                         int jobs = 1, const Guardrails& limits = {});

/// Monte Carlo histogram over sampled members.
DistributionTable empirical_distribution_mc(const FamilySpec& spec, const PowerClassifier& cls,
                                            const SampleConfig& cfg,
                                            const Guardrails& limits = {});

/// (1/2) sum_k |a(k) - b(k)| over normalized tables, exact.
BigRat total_variation(const DistributionTable& a, const DistributionTable& b);

/// Per-degree residuals of exact constrained counts against a theorem's main
/// term. The report measures; pass/fail thresholds live in the callers.
struct ErrorRow {
    int d = 0;
    bool skipped = false;  // empty family or degree below the theorem's range
    std::string skip_reason;
    BigInt count;
    BigRat main_term;
    BigRat residual;                  // count - main_term, exact
    double residual_normalized = 0;   // residual / q^{d/2} (quartic) or q^{d/n} (plain)
    double residual_over_family = 0;  // residual / |family|
};

struct ErrorReport {
    PredictionTheorem theorem;
    std::vector<ErrorRow> rows;
    double max_normalized_residual = 0;
    /// Least-squares slope of log_q |residual| against d over nonzero
    /// residuals; reported, never asserted.
    double trend_slope = 0;
};

ErrorReport error_sweep(PredictionTheorem theorem, const Field& field, int n,
                        const Weight& weight, const ValueConstraint& vc, int d_from, int d_to,
                        int step = 1, int jobs = 1, const Guardrails& limits = {});

}  // namespace ccstats
