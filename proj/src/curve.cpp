#include "ccstats/curve.hpp"

#include <numeric>
#include <stdexcept>

namespace ccstats {

CurveSpec::CurveSpec(const Poly& poly, const PowerClassifier& cls)
    : classifier(&cls), f(poly) {
    if (!poly.field().same_field(cls.field()))
        throw std::invalid_argument("classifier field does not match the polynomial field");
}

int fiber_size(const CurveSpec& curve, Elem x) {
    const Elem v = curve.f.eval(x);
    if (v == 0) return 1;
    return curve.classifier->is_mth_power(v) ? static_cast<int>(curve.classifier->sigma()) : 0;
}

long long count_points(const CurveSpec& curve) {
    long long total = 0;
    for (Elem x = 0; x < curve.field().q(); ++x) total += fiber_size(curve, x);
    return total;
}

FiberProfile fiber_profile(const CurveSpec& curve) {
    FiberProfile profile;
    const bool merged = curve.classifier->sigma() == 1;
    for (Elem x = 0; x < curve.field().q(); ++x) {
        const Elem v = curve.f.eval(x);
        if (v == 0)
            ++profile.k1;
        else if (curve.classifier->is_mth_power(v)) {
            // when sigma = 1 the size-1 and size-sigma classes coincide
            if (merged)
                ++profile.k1;
            else
                ++profile.ksigma;
        } else
            ++profile.k0;
    }
    return profile;
}

GenusReport genus(const PowerFreeDecomposition& decomp, int m, const Field& field) {
    if (m < 2) throw std::invalid_argument("cover exponent m must be >= 2");
    const int deg_f = decomp.product_degree();
    if (deg_f <= 0) throw std::invalid_argument("genus requires a nonconstant polynomial");

    GenusReport report;
    report.poly_degree = deg_f;
    report.coprime_characteristic = std::gcd<long long>(m, field.p()) == 1;
    report.residue_condition = field.q() % m == 1;
    report.valid_hypotheses = report.coprime_characteristic && report.residue_condition;
    report.infinity_term = static_cast<int>(std::gcd(m, deg_f));

    long long branch_sum = 0;
    for (std::size_t i = 0; i < decomp.parts.size(); ++i) {
        const int j = static_cast<int>(i) + 1;
        const int deg_j = std::max(decomp.parts[i].degree(), 0);
        if (deg_j == 0) continue;
        const int contribution = deg_j * (m - static_cast<int>(std::gcd(j, m)));
        report.branch_data.push_back({j, deg_j, contribution});
        branch_sum += contribution;
    }

    const long long two_g = 2 - m - report.infinity_term + branch_sum;
    if (two_g < 0 || two_g % 2 != 0)
        throw std::domain_error("polynomial outside the smooth-model regime (2g = " +
                                std::to_string(two_g) + ")");
    report.genus = two_g / 2;
    return report;
}

Weight genus_weight(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("genus weight requires m, n >= 2");
    std::vector<int> entries(n - 1);
    for (int j = 1; j <= n - 1; ++j)
        entries[j - 1] = m - static_cast<int>(std::gcd(j, m));
    return Weight(std::move(entries));
}

}  // namespace ccstats
