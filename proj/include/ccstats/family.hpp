#pragma once

#include "ccstats/bigint.hpp"
#include "ccstats/poly.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace ccstats {

/// Enumeration cost ceilings. Overridable (the CLI exposes --unsafe-limits);
/// exceeding them raises UnsupportedError rather than grinding forever.
struct Guardrails {
    std::uint32_t max_q = 16;
    int max_d = 30;
    long long max_samples = 10'000'000;
};

/// The family of n-th-power-free polynomials with prescribed weighted degree:
/// monic members by default, every unit multiple of them when monic=false.
class FamilySpec {
public:
    FamilySpec(const Field& field, int n, Weight weight, int degree, bool monic = true);

    const Field& field() const { return *field_; }
    int n() const { return n_; }
    const Weight& weight() const { return weight_; }
    int degree() const { return degree_; }
    bool monic() const { return monic_; }

    /// Decidable membership test.
    bool is_member(const Poly& f) const;

    /// N when the weight has the quartic shape (1, N, N+1) with n = 4 and
    /// N >= 2, which unlocks the closed-form count and exact sampling.
    std::optional<int> quartic_weight_N() const;
    /// True when the weight is (1, 2, ..., n-1), i.e. weighted degree is the
    /// ordinary degree.
    bool plain_degree_weight() const;

private:
    const Field* field_;
    int n_;
    Weight weight_;
    int degree_;
    bool monic_;
};

/// Part degrees (d_1, ..., d_{n-1}) of one enumeration stratum; members of
/// the stratum satisfy sum c_i d_i = d with deg(f_i) = d_i.
struct DegreeProfile {
    std::vector<int> degs;
    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// All degree profiles of the family in lexicographic order.
std::vector<DegreeProfile> list_profiles(const FamilySpec& spec);

/// Monic square-free polynomials by degree, built once per field and then
/// shared read-only (enumeration strata iterate these lists heavily). The
/// per-degree order is lexicographic by serialized coefficients.
class SquarefreeCache {
public:
    explicit SquarefreeCache(const Field& field) : field_(&field) {}

    /// Builds every degree up to max_degree; call before any parallel reads.
    void ensure(int max_degree);
    const std::vector<Poly>& degree(int d) const;
    const Field& field() const { return *field_; }

private:
    const Field* field_;
    std::vector<std::vector<Poly>> by_degree_;
};

/// One enumerated member, viewed through its decomposition. The product is
/// only formed on demand; histogram and constraint passes evaluate the parts
/// directly.
class FamilyMember {
public:
    FamilyMember(const Field& field, Elem unit, const std::vector<const Poly*>& parts)
        : field_(&field), unit_(unit), parts_(&parts) {}

    Elem unit() const { return unit_; }
    const std::vector<const Poly*>& parts() const { return *parts_; }
    Elem eval(Elem x) const;
    Poly product() const;
    PowerFreeDecomposition decomposition() const;

private:
    const Field* field_;
    Elem unit_;
    const std::vector<const Poly*>* parts_;
};

using MemberVisitor = std::function<void(const FamilyMember&)>;

/// Visits every member of one stratum, in deterministic order (part tuples
/// odometer-wise over the cached lists, non-coprime tuples skipped; for
/// non-monic specs each monic member is scaled by every unit in turn).
void for_each_in_profile(const FamilySpec& spec, const SquarefreeCache& cache,
                         const DegreeProfile& profile, const MemberVisitor& visit);

/// Sequential whole-family visit in canonical order (profiles in
/// lexicographic order). Strata are independent, so callers needing
/// parallelism map over list_profiles themselves and merge in profile order.
void for_each_member(const FamilySpec& spec, const SquarefreeCache& cache,
                     const MemberVisitor& visit, const Guardrails& limits = {});

/// Count of monic square-free polynomials of degree d: q^d for d <= 1,
/// q^d - q^{d-1} otherwise.
BigInt count_squarefree(const Field& field, int d);

/// Count of monic n-th-power-free polynomials of degree d: q^d for
/// 0 <= d <= n-1 and q^d - q^{d-(n-1)} for d >= n.
BigInt count_powerfree(const Field& field, int d, int n);

/// Exact family cardinality. Closed form sum_e S(d - N e) S(e) for the
/// quartic weight (1, N, N+1) (justified by the product bijection below);
/// enumeration everywhere else.
BigInt count_family(const FamilySpec& spec, const Guardrails& limits = {});

/// Materializes the family in enumeration order.
std::vector<Poly> enumerate_family(const FamilySpec& spec, const Guardrails& limits = {});

/// Prescribed nonzero values at distinct points.
struct ValueConstraint {
    std::vector<Elem> points;
    std::vector<Elem> values;

    ValueConstraint() = default;
    ValueConstraint(const Field& field, std::vector<Elem> pts, std::vector<Elem> vals);
    std::size_t size() const { return points.size(); }
};

/// Exact number of members meeting all constraints, by stratified enumeration
/// with early-exit evaluation.
BigInt count_constrained(const FamilySpec& spec, const ValueConstraint& vc, int jobs = 1,
                         const Guardrails& limits = {});

/// (f1, f2, f3) square-free monic pairwise coprime -> (f1 f3, f2 f3); the
/// induced map on products f1 f2^2 f3^3 = t1 t2^2 is the identity.
std::pair<Poly, Poly> key_bijection(const Poly& f1, const Poly& f2, const Poly& f3);

/// Inverse: t3 = gcd(t1, t2), f1 = t1/t3, f2 = t2/t3.
std::array<Poly, 3> key_bijection_inverse(const Poly& t1, const Poly& t2);

enum class PredictionTheorem {
    /// Main term for monic n-th-power-free of plain degree d with r
    /// prescribed values: q^{d-r}(1 - q^{1-n}) / (1 - q^{-n})^r.
    kPowerFreePlainDegree,
    /// Main term for the quartic weight (1, N, N+1), N >= 2, d >= N:
    /// q^d (1-q^{-1}) (q^{-1} + q^{-N} + (1-q^{-1})/(1-q^{1-N})) (1/psi)^r
    /// with psi = (q-1)(1 + q^{-1} + q^{-N} + q^{-(N+1)}).
    kQuarticWeight,
};

/// The formula's main term as an exact rational (no error term). Throws
/// UnsupportedError when the family shape does not fit the requested theorem.
BigRat predicted_constrained_count(const FamilySpec& spec, std::size_t r,
                                   PredictionTheorem theorem);

struct SampleConfig {
    long long count = 0;
    std::uint64_t seed = 0;
    int jobs = 1;
};

/// Uniform members, deterministic given the seed (per-sample counter-based
/// streams, so the output is identical for any worker count). Supported
/// specs: plain-degree weight (rejection from uniform monic), and the quartic
/// weight (stratum by exact weights, then square-free pair rejection).
std::vector<Poly> sample_family(const FamilySpec& spec, const SampleConfig& cfg,
                                const Guardrails& limits = {});

/// Expands t_i = prod_{S containing i} f_S over the seven nonempty subsets
/// S of {1,2,3} (order {1},{2},{3},{12},{13},{23},{123}) and checks
/// t1^{e1} t2^{e2} t3^{e3} = prod_S f_S^{sum_{i in S} e_i} by full polynomial
/// expansion of both sides. Returns the right-hand exponents. Components must
/// be square-free and pairwise coprime.
std::array<long long, 7> tilde_expand(const std::array<long long, 3>& exponents,
                                      const std::array<Poly, 7>& components);

}  // namespace ccstats
